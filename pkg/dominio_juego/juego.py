"""
Juegos cooperativos de utilidad transferible (TU) con aritmética racional exacta.

🎯 RESPONSABILIDAD:
Representar un juego (N, v) como tabla densa de 2ⁿ valores indexada por
máscara de bits, y calcular sus dividendos de Harsanyi.

🏗️ CONTENIDO:
- Juego: plantel + tabla de valores, v(∅) = 0
- TablaDividendos: coordenadas del juego en la base de unanimidad
- transformada_moebius / transformada_zeta: barrido por bit, O(n·2ⁿ)
- dividendos_ingenuo: suma alternada directa, usada como oráculo en tests
- unanimidad, juego_aditivo, restringir, agregar_jugador_nulo
- sumar / restar / escalar: álgebra punto a punto sobre planteles idénticos

Versión: 1.0.0 - Núcleo exacto del dominio
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from numbers import Rational
from typing import Dict, Iterable, List, Sequence, Tuple, Union

from dominio_juego.coalicion import cardinal, posiciones, submascaras
from dominio_juego.errores import (
    CoalicionInvalidaError,
    ErrorJuego,
    JugadorDesconocidoError,
    PlantelIncompatibleError,
)

Racional = Union[int, Fraction, str]


def a_racional(valor: Racional) -> Fraction:
    """
    Convierte a Fraction sin pasar nunca por punto flotante.

    :raises ErrorJuego: si el valor es float o no es un racional válido
    """
    if type(valor) is Fraction:
        return valor
    if isinstance(valor, bool) or isinstance(valor, float):
        raise ErrorJuego(f"Valor no exacto: {valor!r}. Usar enteros, Fraction o texto racional")
    if isinstance(valor, (int, Rational)):
        return Fraction(valor)
    try:
        return Fraction(valor)
    except (TypeError, ValueError, ZeroDivisionError) as ex:
        raise ErrorJuego(f"Número mal formado: {valor!r}") from ex


def _validar_plantel(jugadores: Sequence[int]) -> Tuple[int, ...]:
    plantel = tuple(jugadores)
    if not plantel:
        raise ErrorJuego("El plantel no puede ser vacío")
    for jugador in plantel:
        if isinstance(jugador, bool) or not isinstance(jugador, int) or jugador < 0:
            raise ErrorJuego(f"Identificador de jugador inválido: {jugador!r}")
    if any(a >= b for a, b in zip(plantel, plantel[1:])):
        raise ErrorJuego(
            f"El plantel debe ser estrictamente ascendente y sin repetidos: {list(plantel)}"
        )
    return plantel


class _Plantel:
    """Traducción entre identificadores de jugador y posiciones de bit."""

    jugadores: Tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.jugadores)

    @property
    def gran_coalicion(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def _posiciones(self) -> Dict[int, int]:
        return {jugador: k for k, jugador in enumerate(self.jugadores)}

    def posicion(self, jugador: int) -> int:
        """:raises JugadorDesconocidoError: si el jugador no está en el plantel"""
        try:
            return self._posiciones[jugador]
        except (KeyError, TypeError):
            raise JugadorDesconocidoError(jugador, self.jugadores) from None

    def mismo_plantel(self, otro: '_Plantel') -> bool:
        return self.jugadores == otro.jugadores

    def mascara(self, miembros: Iterable[int]) -> int:
        """Máscara de la coalición formada por los ids dados."""
        resultado = 0
        for jugador in miembros:
            resultado |= 1 << self.posicion(jugador)
        return resultado

    def coalicion(self, mascara: int) -> Tuple[int, ...]:
        """Ids (ascendentes) de la coalición representada por la máscara."""
        self.validar_mascara(mascara)
        return tuple(self.jugadores[k] for k in posiciones(mascara))

    def validar_mascara(self, mascara: int) -> None:
        if mascara < 0 or mascara > self.gran_coalicion:
            raise CoalicionInvalidaError(
                f"Máscara {mascara} fuera del plantel de {self.n} jugadores"
            )


@dataclass(frozen=True)
class Juego(_Plantel):
    """
    Juego TU (N, v) con tabla densa de valores.

    :param jugadores: ids ascendentes; fijan las posiciones de bit
    :param valores: v(S) para cada máscara S, longitud 2ⁿ, v(∅) = 0
    """
    jugadores: Tuple[int, ...]
    valores: Tuple[Fraction, ...]

    def __post_init__(self):
        plantel = _validar_plantel(self.jugadores)
        valores = tuple(a_racional(v) for v in self.valores)
        if len(valores) != 1 << len(plantel):
            raise ErrorJuego(
                f"La tabla debe tener 2^{len(plantel)} = {1 << len(plantel)} valores, "
                f"tiene {len(valores)}"
            )
        if valores[0] != 0:
            raise ErrorJuego(f"v(∅) debe ser 0, se recibió {valores[0]}")
        object.__setattr__(self, 'jugadores', plantel)
        object.__setattr__(self, 'valores', valores)

    @classmethod
    def nulo(cls, jugadores: Sequence[int]) -> 'Juego':
        """El juego 𝟎: v(S) = 0 para todo S."""
        plantel = _validar_plantel(jugadores)
        return cls(plantel, (Fraction(0),) * (1 << len(plantel)))

    def valor(self, mascara: int) -> Fraction:
        return self.valores[mascara]

    def valor_de(self, miembros: Iterable[int]) -> Fraction:
        return self.valores[self.mascara(miembros)]

    @property
    def valor_total(self) -> Fraction:
        """v(N)."""
        return self.valores[-1]

    @cached_property
    def dividendos(self) -> 'TablaDividendos':
        return TablaDividendos(self.jugadores, tuple(transformada_moebius(self.valores)))

    def __add__(self, otro: 'Juego') -> 'Juego':
        return sumar(self, otro)

    def __sub__(self, otro: 'Juego') -> 'Juego':
        return restar(self, otro)

    def __neg__(self) -> 'Juego':
        return escalar(self, -1)


@dataclass(frozen=True)
class TablaDividendos(_Plantel):
    """
    Dividendos de Harsanyi λ_T(v) indexados por máscara.

    La entrada 0 (coalición vacía) es siempre 0 y no tiene significado.
    """
    jugadores: Tuple[int, ...]
    dividendos: Tuple[Fraction, ...]

    def __post_init__(self):
        plantel = _validar_plantel(self.jugadores)
        dividendos = tuple(a_racional(d) for d in self.dividendos)
        if len(dividendos) != 1 << len(plantel):
            raise ErrorJuego(
                f"La tabla debe tener {1 << len(plantel)} dividendos, tiene {len(dividendos)}"
            )
        if dividendos[0] != 0:
            raise ErrorJuego("El dividendo de la coalición vacía debe ser 0")
        object.__setattr__(self, 'jugadores', plantel)
        object.__setattr__(self, 'dividendos', dividendos)

    def dividendo(self, mascara: int) -> Fraction:
        return self.dividendos[mascara]

    def soporte(self) -> Tuple[int, ...]:
        """I(v): coaliciones con dividendo no nulo, en orden de máscara."""
        return tuple(t for t, d in enumerate(self.dividendos) if t and d != 0)

    def no_nulos(self) -> Iterable[Tuple[int, Fraction]]:
        """Pares (T, λ_T) con λ_T ≠ 0."""
        return ((t, d) for t, d in enumerate(self.dividendos) if t and d != 0)

    def a_juego(self) -> Juego:
        return juego_desde_dividendos(self)


# =============================================================================
# TRANSFORMADAS SOBRE EL RETÍCULO DE SUBCONJUNTOS
# =============================================================================

def transformada_moebius(valores: Sequence[Fraction]) -> List[Fraction]:
    """
    Inversión de Möbius por barrido de bits: λ_T = Σ_{S⊆T} (−1)^{|T|−|S|} v(S).

    :param valores: tabla de longitud 2ⁿ
    :return: nueva lista con los coeficientes de Möbius
    """
    coeficientes = list(valores)
    paso = 1
    while paso < len(coeficientes):
        for mascara in range(len(coeficientes)):
            if mascara & paso:
                coeficientes[mascara] -= coeficientes[mascara ^ paso]
        paso <<= 1
    return coeficientes


def transformada_zeta(coeficientes: Sequence[Fraction]) -> List[Fraction]:
    """Inversa de transformada_moebius: v(S) = Σ_{T⊆S} λ_T."""
    valores = list(coeficientes)
    paso = 1
    while paso < len(valores):
        for mascara in range(len(valores)):
            if mascara & paso:
                valores[mascara] += valores[mascara ^ paso]
        paso <<= 1
    return valores


def dividendos(juego: Juego) -> TablaDividendos:
    return juego.dividendos


def dividendos_ingenuo(juego: Juego) -> TablaDividendos:
    """Suma alternada directa sobre cada T; O(3ⁿ), sólo como oráculo."""
    tabla = [Fraction(0)] * len(juego.valores)
    for t in range(1, len(juego.valores)):
        total = Fraction(0)
        tamanio_t = cardinal(t)
        for s in submascaras(t):
            signo = -1 if (tamanio_t - cardinal(s)) % 2 else 1
            total += signo * juego.valores[s]
        tabla[t] = total
    return TablaDividendos(juego.jugadores, tuple(tabla))


def juego_desde_dividendos(tabla: TablaDividendos) -> Juego:
    return Juego(tabla.jugadores, tuple(transformada_zeta(tabla.dividendos)))


def soporte(tabla: TablaDividendos) -> Tuple[int, ...]:
    return tabla.soporte()


# =============================================================================
# CONSTRUCCIÓN DE JUEGOS
# =============================================================================

def unanimidad(jugadores: Sequence[int], miembros: Iterable[int], escala: Racional = 1) -> Juego:
    """
    Juego de unanimidad escalado: v(S) = escala si T ⊆ S, 0 en otro caso.

    :param miembros: ids de la coalición T (no vacía)
    :raises CoalicionInvalidaError: si T es vacía
    """
    plantel = Juego.nulo(jugadores)
    return unanimidad_mascara(plantel.jugadores, plantel.mascara(miembros), escala)


def unanimidad_mascara(jugadores: Sequence[int], mascara: int, escala: Racional = 1) -> Juego:
    plantel = _validar_plantel(jugadores)
    if mascara == 0:
        raise CoalicionInvalidaError("La coalición de unanimidad no puede ser vacía")
    cero = Fraction(0)
    factor = a_racional(escala)
    total = 1 << len(plantel)
    if mascara >= total:
        raise CoalicionInvalidaError(f"Máscara {mascara} fuera del plantel")
    return Juego(plantel, tuple(factor if s & mascara == mascara else cero for s in range(total)))


def juego_aditivo(jugadores: Sequence[int], individuales: Dict[int, Racional]) -> Juego:
    """v(S) = Σ_{i∈S} a_i. Jugadores sin valor declarado aportan 0."""
    plantel = Juego.nulo(jugadores)
    for jugador in individuales:
        plantel.posicion(jugador)
    aportes = [a_racional(individuales.get(j, 0)) for j in plantel.jugadores]
    coeficientes = [Fraction(0)] * (1 << plantel.n)
    for k, aporte in enumerate(aportes):
        coeficientes[1 << k] = aporte
    return Juego(plantel.jugadores, tuple(transformada_zeta(coeficientes)))


# =============================================================================
# SUBJUEGOS Y EXTENSIONES
# =============================================================================

def restringir(juego: Juego, conservar: int) -> Juego:
    """
    Subjuego sobre los jugadores de `conservar`.

    Las submáscaras de `conservar` en orden ascendente corresponden, una a una
    y en el mismo orden, a las máscaras del plantel reducido.

    :raises CoalicionInvalidaError: si `conservar` es vacía
    """
    if conservar == 0:
        raise CoalicionInvalidaError("No se puede restringir a la coalición vacía")
    juego.validar_mascara(conservar)
    return Juego(
        juego.coalicion(conservar),
        tuple(juego.valores[s] for s in submascaras(conservar)),
    )


def agregar_jugador_nulo(juego: Juego, jugador: int) -> Juego:
    """Extiende el plantel con un jugador que no cambia ningún valor."""
    if jugador in juego.jugadores:
        raise ErrorJuego(f"El jugador {jugador} ya pertenece al plantel")
    plantel = tuple(sorted(juego.jugadores + (jugador,)))
    k = plantel.index(jugador)
    bajos = (1 << k) - 1
    valores = []
    for mascara in range(1 << len(plantel)):
        original = (mascara & bajos) | ((mascara >> (k + 1)) << k)
        valores.append(juego.valores[original])
    return Juego(plantel, tuple(valores))


# =============================================================================
# ÁLGEBRA
# =============================================================================

def _exigir_mismo_plantel(juego_a: Juego, juego_b: Juego) -> None:
    if not juego_a.mismo_plantel(juego_b):
        raise PlantelIncompatibleError(
            f"Planteles distintos: {list(juego_a.jugadores)} y {list(juego_b.jugadores)}"
        )


def sumar(juego_a: Juego, juego_b: Juego) -> Juego:
    _exigir_mismo_plantel(juego_a, juego_b)
    return Juego(juego_a.jugadores, tuple(a + b for a, b in zip(juego_a.valores, juego_b.valores)))


def restar(juego_a: Juego, juego_b: Juego) -> Juego:
    _exigir_mismo_plantel(juego_a, juego_b)
    return Juego(juego_a.jugadores, tuple(a - b for a, b in zip(juego_a.valores, juego_b.valores)))


def escalar(juego: Juego, factor: Racional) -> Juego:
    c = a_racional(factor)
    return Juego(juego.jugadores, tuple(c * v for v in juego.valores))
