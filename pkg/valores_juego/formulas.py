"""
Fórmulas exactas de las reglas de asignación.

Todas las reglas de reparto de dividendos recorren sólo el soporte de la
tabla de dividendos: cada λ_T se reparte entre los miembros de T según la
regla. La fórmula de Owen por contribuciones marginales entre uniones es la
segunda implementación independiente y sirve de oráculo para la primera.

Versión: 1.0.0
"""
from fractions import Fraction
from math import factorial
from typing import Callable, List, Optional, Tuple

from dominio_juego import (
    Asignacion,
    Juego,
    JuegoCS,
    cardinal,
    juego_cociente,
    posiciones,
    submascaras,
)

Reparto = Callable[[int, Fraction], None]


def _ceros(n: int) -> List[Fraction]:
    return [Fraction(0)] * n


def shapley(juego: Juego) -> Asignacion:
    """Sh_i = Σ_{T ∋ i} λ_T / |T|."""
    pagos = _ceros(juego.n)
    for t, d in juego.dividendos.no_nulos():
        cuota = d / cardinal(t)
        for k in posiciones(t):
            pagos[k] += cuota
    return Asignacion(juego.jugadores, tuple(pagos))


def owen_por_dividendos(juego_cs: JuegoCS) -> Asignacion:
    """Ow_i = Σ_{T ∋ i} λ_T / (|B(i) ∩ T| · m_T)."""
    estructura = juego_cs.estructura
    pagos = _ceros(juego_cs.juego.n)
    for t, d in juego_cs.juego.dividendos.no_nulos():
        cortes = estructura.uniones_que_cortan(t)
        m_t = cardinal(cortes)
        for p in posiciones(cortes):
            dentro = estructura.uniones[p] & t
            cuota = d / (cardinal(dentro) * m_t)
            for k in posiciones(dentro):
                pagos[k] += cuota
    return Asignacion(juego_cs.jugadores, tuple(pagos))


def _coeficientes(tamanio: int) -> Tuple[Fraction, ...]:
    """k!(t−k−1)!/t! para k = 0..t−1."""
    total = factorial(tamanio)
    return tuple(
        Fraction(factorial(k) * factorial(tamanio - k - 1), total) for k in range(tamanio)
    )


def owen_por_marginales(juego_cs: JuegoCS) -> Asignacion:
    """
    Ow_i = Σ_{R ⊆ M∖{h}} Σ_{S ⊆ B_h∖{i}} r!(m−r−1)!/m! · s!(b−s−1)!/b!
           · [v(Q(R)∪S∪{i}) − v(Q(R)∪S)]

    con h la unión de i y b = |B_h|.
    """
    estructura = juego_cs.estructura
    valores = juego_cs.juego.valores
    m = estructura.m
    coef_uniones = _coeficientes(m)
    pagos = _ceros(juego_cs.juego.n)
    for h, union in enumerate(estructura.uniones):
        coef_internos = _coeficientes(cardinal(union))
        otras = ((1 << m) - 1) & ~(1 << h)
        for k in posiciones(union):
            bit = 1 << k
            acumulado = Fraction(0)
            for r in submascaras(otras):
                base = estructura.reuniones[r]
                peso_r = coef_uniones[cardinal(r)]
                for s in submascaras(union & ~bit):
                    sin_i = base | s
                    marginal = valores[sin_i | bit] - valores[sin_i]
                    if marginal:
                        acumulado += peso_r * coef_internos[cardinal(s)] * marginal
            pagos[k] = acumulado
    return Asignacion(juego_cs.jugadores, tuple(pagos))


def totales_por_union(juego_cs: JuegoCS, asignacion: Asignacion) -> Tuple[Fraction, ...]:
    """Σ_{i ∈ B_p} φ_i para cada unión, en orden canónico."""
    return tuple(asignacion.total(union) for union in juego_cs.estructura.uniones)


def primera_union_inconsistente(juego_cs: JuegoCS, asignacion: Asignacion) -> Optional[int]:
    """
    Compara los totales por unión con el Shapley del juego cociente.

    :return: índice de la primera unión que difiere, o None si coinciden
    """
    esperado = shapley(juego_cociente(juego_cs)).pagos
    for p, total in enumerate(totales_por_union(juego_cs, asignacion)):
        if total != esperado[p]:
            return p
    return None


def valor_se(juego_cs: JuegoCS) -> Asignacion:
    """SE_i = Σ_{T ∩ B(i) ≠ ∅} λ_T / (|B(i)| · m_T)."""
    estructura = juego_cs.estructura
    pagos = _ceros(juego_cs.juego.n)
    for t, d in juego_cs.juego.dividendos.no_nulos():
        cortes = estructura.uniones_que_cortan(t)
        m_t = cardinal(cortes)
        for p in posiciones(cortes):
            union = estructura.uniones[p]
            cuota = d / (cardinal(union) * m_t)
            for k in posiciones(union):
                pagos[k] += cuota
    return Asignacion(juego_cs.jugadores, tuple(pagos))


def valor_phi2(juego_cs: JuegoCS, pesos: Tuple[Fraction, ...]) -> Asignacion:
    """
    φ²_i = Σ_{T ∋ i} w_i λ_T / (Σ_{j ∈ T∩B(i)} w_j · m_T).

    :param pesos: w_j en el orden del plantel
    """
    estructura = juego_cs.estructura
    pagos = _ceros(juego_cs.juego.n)
    for t, d in juego_cs.juego.dividendos.no_nulos():
        cortes = estructura.uniones_que_cortan(t)
        m_t = cardinal(cortes)
        for p in posiciones(cortes):
            dentro = estructura.uniones[p] & t
            peso_dentro = sum((pesos[k] for k in posiciones(dentro)), Fraction(0))
            for k in posiciones(dentro):
                pagos[k] += pesos[k] * d / (peso_dentro * m_t)
    return Asignacion(juego_cs.jugadores, tuple(pagos))


def valor_phi3_uniforme(juego_cs: JuegoCS) -> Asignacion:
    """Σ_{T ∋ i} λ_T |B(i)| / Σ_{j ∈ T} |B(j)|."""
    estructura = juego_cs.estructura
    tamanio_de = [cardinal(estructura.uniones[estructura.indice_union_posicion(k)])
                  for k in range(juego_cs.juego.n)]
    pagos = _ceros(juego_cs.juego.n)
    for t, d in juego_cs.juego.dividendos.no_nulos():
        miembros = list(posiciones(t))
        denominador = sum(tamanio_de[k] for k in miembros)
        for k in miembros:
            pagos[k] += d * tamanio_de[k] / denominador
    return Asignacion(juego_cs.jugadores, tuple(pagos))


def valor_owen_p(juego_cs: JuegoCS) -> Asignacion:
    """Owᴾ_i = Σ_{T ∋ i} λ_T |B(i)| / (|B(i)∩T| · Σ_{B ∩ T ≠ ∅} |B|)."""
    estructura = juego_cs.estructura
    pagos = _ceros(juego_cs.juego.n)
    for t, d in juego_cs.juego.dividendos.no_nulos():
        cortes = list(posiciones(estructura.uniones_que_cortan(t)))
        tamanio_total = sum(estructura.tamanios[p] for p in cortes)
        for p in cortes:
            dentro = estructura.uniones[p] & t
            cuota = d * estructura.tamanios[p] / (cardinal(dentro) * tamanio_total)
            for k in posiciones(dentro):
                pagos[k] += cuota
    return Asignacion(juego_cs.jugadores, tuple(pagos))


def corregir_por_individuales(juego_cs: JuegoCS, base: Asignacion, grupo: int) -> Asignacion:
    """
    Para cada i ∈ grupo: base_i − v({i}) + promedio de v({j}) sobre j ∈ grupo.
    Los demás jugadores conservan su pago base.
    """
    valores = juego_cs.juego.valores
    miembros = list(posiciones(grupo))
    promedio = sum((valores[1 << k] for k in miembros), Fraction(0)) / len(miembros)
    pagos = list(base.pagos)
    for k in miembros:
        pagos[k] = pagos[k] - valores[1 << k] + promedio
    return Asignacion(base.jugadores, tuple(pagos))
