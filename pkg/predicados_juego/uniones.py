"""
Predicados sobre uniones de una estructura de coaliciones y sobre pares de juegos.

Las relaciones entre uniones (nula, necesaria, simétricas, mutuamente
dependientes) son las relaciones de jugador aplicadas al juego cociente.
Las variantes "altamente" exigen la relación para cada par de jugadores
tomados uno de cada unión.
"""
from itertools import combinations, product
from typing import Callable, List

from dominio_juego import (
    EstructuraInvalidaError,
    JuegoCS,
    PlantelIncompatibleError,
    juego_cociente,
    posiciones,
    submascaras,
)

from predicados_juego.jugadores import (
    es_jugador_necesario,
    es_jugador_nulo,
    son_mutuamente_dependientes,
    son_simetricos,
)
from predicados_juego.reportes import (
    DiagnosticoUniones,
    RelacionUnion,
    ReporteMarginalesEntreUniones,
    ReporteRelacionJugador,
    ReporteRelacionUnion,
)


def _a_reporte_union(relacion: RelacionUnion, reporte: ReporteRelacionJugador, par) -> ReporteRelacionUnion:
    if reporte.se_cumple:
        return ReporteRelacionUnion(relacion, True)
    return ReporteRelacionUnion(relacion, False, par, reporte.testigo)


def _validar_par(juego_cs: JuegoCS, p: int, q: int) -> None:
    juego_cs.estructura.union(p)
    juego_cs.estructura.union(q)
    if p == q:
        raise EstructuraInvalidaError(f"Se requieren dos uniones distintas, se recibió {p} dos veces")


def union_es_nula(juego_cs: JuegoCS, p: int) -> ReporteRelacionUnion:
    juego_cs.estructura.union(p)
    reporte = es_jugador_nulo(juego_cociente(juego_cs), p)
    return _a_reporte_union(RelacionUnion.UNION_NULA, reporte, (p, p))


def union_es_necesaria(juego_cs: JuegoCS, p: int) -> ReporteRelacionUnion:
    juego_cs.estructura.union(p)
    reporte = es_jugador_necesario(juego_cociente(juego_cs), p)
    return _a_reporte_union(RelacionUnion.UNION_NECESARIA, reporte, (p, p))


def uniones_simetricas(juego_cs: JuegoCS, p: int, q: int) -> ReporteRelacionUnion:
    _validar_par(juego_cs, p, q)
    reporte = son_simetricos(juego_cociente(juego_cs), p, q)
    return _a_reporte_union(RelacionUnion.UNIONES_SIMETRICAS, reporte, (p, q))


def uniones_mutuamente_dependientes(juego_cs: JuegoCS, p: int, q: int) -> ReporteRelacionUnion:
    _validar_par(juego_cs, p, q)
    reporte = son_mutuamente_dependientes(juego_cociente(juego_cs), p, q)
    return _a_reporte_union(RelacionUnion.UNIONES_MUTUAMENTE_DEPENDIENTES, reporte, (p, q))


def _para_todo_par_cruzado(juego_cs: JuegoCS, p: int, q: int, relacion: RelacionUnion,
                           predicado: Callable[..., ReporteRelacionJugador]) -> ReporteRelacionUnion:
    _validar_par(juego_cs, p, q)
    estructura = juego_cs.estructura
    juego = juego_cs.juego
    for i, j in product(estructura.coalicion(estructura.union(p)),
                        estructura.coalicion(estructura.union(q))):
        reporte = predicado(juego, i, j)
        if not reporte.se_cumple:
            return ReporteRelacionUnion(relacion, False, (i, j), reporte.testigo)
    return ReporteRelacionUnion(relacion, True)


def uniones_altamente_mutuamente_dependientes(juego_cs: JuegoCS, p: int, q: int) -> ReporteRelacionUnion:
    """Todo i ∈ B_p y todo j ∈ B_q son mutuamente dependientes en v."""
    return _para_todo_par_cruzado(juego_cs, p, q, RelacionUnion.ALTAMENTE_MUTUAMENTE_DEPENDIENTES,
                                  son_mutuamente_dependientes)


def uniones_altamente_simetricas(juego_cs: JuegoCS, p: int, q: int) -> ReporteRelacionUnion:
    """Todo i ∈ B_p y todo j ∈ B_q son simétricos en v."""
    return _para_todo_par_cruzado(juego_cs, p, q, RelacionUnion.ALTAMENTE_SIMETRICAS, son_simetricos)


def _exigir_misma_estructura(cs_v: JuegoCS, cs_w: JuegoCS) -> None:
    if not cs_v.juego.mismo_plantel(cs_w.juego):
        raise PlantelIncompatibleError(
            f"Planteles distintos: {list(cs_v.jugadores)} y {list(cs_w.jugadores)}"
        )
    if cs_v.estructura != cs_w.estructura:
        raise EstructuraInvalidaError("Los dos juegos deben compartir la estructura de coaliciones")


def uniones_no_nulas(juego_cs: JuegoCS) -> List[int]:
    cociente = juego_cociente(juego_cs)
    return [p for p in range(juego_cs.estructura.m) if not es_jugador_nulo(cociente, p)]


def juegos_mutuamente_dependientes_por_uniones(cs_v: JuegoCS, cs_w: JuegoCS) -> DiagnosticoUniones:
    """
    v y w son mutuamente dependientes por uniones si:
    (1) v(N) = w(N);
    (2) cada unión tiene la misma identidad productiva en ambos cocientes;
    (3) las uniones no nulas son mutuamente dependientes dos a dos en ambos.
    """
    _exigir_misma_estructura(cs_v, cs_w)
    if cs_v.juego.valor_total != cs_w.juego.valor_total:
        return DiagnosticoUniones(
            False, f"v(N) = {cs_v.juego.valor_total} ≠ w(N) = {cs_w.juego.valor_total}"
        )
    cociente_v = juego_cociente(cs_v)
    cociente_w = juego_cociente(cs_w)
    no_nulas = []
    for p in range(cs_v.estructura.m):
        nula_v = es_jugador_nulo(cociente_v, p).se_cumple
        if nula_v != es_jugador_nulo(cociente_w, p).se_cumple:
            return DiagnosticoUniones(False, f"la unión {p} cambia de identidad productiva")
        if not nula_v:
            no_nulas.append(p)
    for p, q in combinations(no_nulas, 2):
        for nombre, cociente in (('v', cociente_v), ('w', cociente_w)):
            if not son_mutuamente_dependientes(cociente, p, q):
                return DiagnosticoUniones(
                    False, f"las uniones {p} y {q} no son mutuamente dependientes en {nombre}"
                )
    return DiagnosticoUniones(True)


def mismas_contribuciones_entre_uniones(cs_v: JuegoCS, cs_w: JuegoCS, i: int) -> ReporteMarginalesEntreUniones:
    """
    v(Q(R)∪S∪{i}) − v(Q(R)∪S) = w(Q(R)∪S∪{i}) − w(Q(R)∪S)
    para toda R ⊆ M∖{p} y toda S ⊆ B_p∖{i}, con p la unión de i.
    """
    _exigir_misma_estructura(cs_v, cs_w)
    estructura = cs_v.estructura
    bit = 1 << estructura.posicion(i)
    p = estructura.indice_union(i)
    otras = ((1 << estructura.m) - 1) & ~(1 << p)
    valores_v = cs_v.juego.valores
    valores_w = cs_w.juego.valores
    propia = estructura.uniones[p] & ~bit
    for r in submascaras(otras):
        base = estructura.reuniones[r]
        for s in submascaras(propia):
            sin_i = base | s
            con_i = sin_i | bit
            if valores_v[con_i] - valores_v[sin_i] != valores_w[con_i] - valores_w[sin_i]:
                return ReporteMarginalesEntreUniones(False, r, s)
    return ReporteMarginalesEntreUniones(True)


def mismas_contribuciones_marginales(cs_v: JuegoCS, cs_w: JuegoCS, i: int) -> bool:
    """v(S∪{i}) − v(S) = w(S∪{i}) − w(S) para toda S ⊆ N∖{i}."""
    _exigir_misma_estructura(cs_v, cs_w)
    bit = 1 << cs_v.estructura.posicion(i)
    valores_v = cs_v.juego.valores
    valores_w = cs_w.juego.valores
    return all(
        valores_v[s | bit] - valores_v[s] == valores_w[s | bit] - valores_w[s]
        for s in range(len(valores_v)) if not s & bit
    )


def jugadores_de_union(juego_cs: JuegoCS, p: int) -> List[int]:
    estructura = juego_cs.estructura
    return [estructura.jugadores[k] for k in posiciones(estructura.union(p))]
