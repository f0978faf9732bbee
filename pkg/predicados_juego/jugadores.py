"""
Predicados sobre jugadores de un juego TU.

Cada predicado universal se decide recorriendo todo su dominio de
cuantificación. Para nulidad, necesidad y dependencia mutua existen además
las versiones por dividendos:
- i es nulo ⇔ λ_T = 0 para toda T que contiene a i
- i es necesario ⇔ λ_T = 0 para toda T ⊆ N∖{i}
- i, j mutuamente dependientes ⇔ λ_{T∪{i}} = λ_{T∪{j}} = 0 para toda T ⊆ N∖{i,j}
"""
from functools import reduce
from typing import Tuple

from dominio_juego import ErrorJuego, Juego, PlantelIncompatibleError

from predicados_juego.reportes import RelacionJugador, ReporteRelacionJugador


def _bits_par(juego: Juego, i: int, j: int) -> Tuple[int, int]:
    if i == j:
        raise ErrorJuego(f"Se requieren dos jugadores distintos, se recibió {i} dos veces")
    return 1 << juego.posicion(i), 1 << juego.posicion(j)


def es_jugador_nulo(juego: Juego, i: int) -> ReporteRelacionJugador:
    """v(S∪{i}) = v(S) para toda S ⊆ N∖{i}."""
    bit = 1 << juego.posicion(i)
    valores = juego.valores
    for s in range(len(valores)):
        if not s & bit and valores[s | bit] != valores[s]:
            return ReporteRelacionJugador(RelacionJugador.NULO, False, s)
    return ReporteRelacionJugador(RelacionJugador.NULO, True)


def es_jugador_nulo_por_dividendos(juego: Juego, i: int) -> bool:
    bit = 1 << juego.posicion(i)
    return all(d == 0 for t, d in enumerate(juego.dividendos.dividendos) if t & bit)


def es_jugador_necesario(juego: Juego, i: int) -> ReporteRelacionJugador:
    """v(S) = 0 para toda S ⊆ N∖{i}."""
    bit = 1 << juego.posicion(i)
    for s, valor in enumerate(juego.valores):
        if not s & bit and valor != 0:
            return ReporteRelacionJugador(RelacionJugador.NECESARIO, False, s)
    return ReporteRelacionJugador(RelacionJugador.NECESARIO, True)


def es_jugador_necesario_por_dividendos(juego: Juego, i: int) -> bool:
    bit = 1 << juego.posicion(i)
    return all(d == 0 for t, d in enumerate(juego.dividendos.dividendos) if not t & bit)


def son_simetricos(juego: Juego, i: int, j: int) -> ReporteRelacionJugador:
    """v(S∪{i}) − v(S) = v(S∪{j}) − v(S) para toda S ⊆ N∖{i,j}."""
    bit_i, bit_j = _bits_par(juego, i, j)
    ambos = bit_i | bit_j
    valores = juego.valores
    for s in range(len(valores)):
        if not s & ambos and valores[s | bit_i] != valores[s | bit_j]:
            return ReporteRelacionJugador(RelacionJugador.SIMETRICOS, False, s)
    return ReporteRelacionJugador(RelacionJugador.SIMETRICOS, True)


def son_mutuamente_dependientes(juego: Juego, i: int, j: int) -> ReporteRelacionJugador:
    """v(S∪{i}) − v(S) = v(S∪{j}) − v(S) = 0 para toda S ⊆ N∖{i,j}."""
    bit_i, bit_j = _bits_par(juego, i, j)
    ambos = bit_i | bit_j
    valores = juego.valores
    for s in range(len(valores)):
        if s & ambos:
            continue
        if valores[s | bit_i] != valores[s] or valores[s | bit_j] != valores[s]:
            return ReporteRelacionJugador(RelacionJugador.MUTUAMENTE_DEPENDIENTES, False, s)
    return ReporteRelacionJugador(RelacionJugador.MUTUAMENTE_DEPENDIENTES, True)


def son_mutuamente_dependientes_por_dividendos(juego: Juego, i: int, j: int) -> bool:
    bit_i, bit_j = _bits_par(juego, i, j)
    ambos = bit_i | bit_j
    tabla = juego.dividendos.dividendos
    return all(
        tabla[t | bit_i] == 0 and tabla[t | bit_j] == 0
        for t in range(len(tabla)) if not t & ambos
    )


def misma_identidad_productiva(juego_v: Juego, juego_w: Juego, i: int) -> bool:
    """i es nulo en ambos juegos o no nulo en ambos."""
    if not juego_v.mismo_plantel(juego_w):
        raise PlantelIncompatibleError(
            f"Planteles distintos: {list(juego_v.jugadores)} y {list(juego_w.jugadores)}"
        )
    return bool(es_jugador_nulo(juego_v, i)) == bool(es_jugador_nulo(juego_w, i))


def portador(juego: Juego) -> int:
    """Máscara de los jugadores no nulos: unión del soporte de dividendos."""
    return reduce(lambda a, b: a | b, juego.dividendos.soporte(), 0)
