"""
Modelos de informe: lo que se muestra, ya calculado y en orden canónico.

Los visualizadores sólo dan formato; todo cálculo ocurre al construir el
informe.
"""
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence, Tuple

from dominio_juego import Asignacion, Juego, JuegoCS, juego_cociente
from predicados_juego import (
    es_jugador_necesario,
    es_jugador_nulo,
    son_mutuamente_dependientes,
    son_simetricos,
    union_es_necesaria,
    union_es_nula,
    uniones_altamente_mutuamente_dependientes,
    uniones_altamente_simetricas,
    uniones_mutuamente_dependientes,
    uniones_simetricas,
)
from valores_juego import BaseValor, shapley, totales_por_union

Coalicion = Tuple[int, ...]
Entrada = Tuple[Coalicion, Fraction]


@dataclass(frozen=True)
class Encabezado:
    """Identifica la ejecución; nunca lleva marcas de tiempo."""
    version: str
    semilla: Optional[int] = None
    familia: Optional[str] = None


@dataclass(frozen=True)
class FilaCociente:
    regla: str
    totales: Tuple[Fraction, ...]
    consistente: bool


@dataclass(frozen=True)
class InformeAsignaciones:
    """
    :param shapley_cociente: Shapley de v^ℬ, presente si se pidió la comparación por uniones
    :param cociente: totales por unión de cada regla frente a ese Shapley
    """
    juego_cs: JuegoCS
    asignaciones: Tuple[Tuple[str, Asignacion], ...]
    shapley_cociente: Optional[Tuple[Fraction, ...]] = None
    cociente: Tuple[FilaCociente, ...] = ()


@dataclass(frozen=True)
class InformeDividendos:
    juego_cs: JuegoCS
    valores: Tuple[Entrada, ...]
    dividendos: Tuple[Entrada, ...]
    valores_cociente: Tuple[Entrada, ...]
    dividendos_cociente: Tuple[Entrada, ...]

    @property
    def soporte(self) -> Tuple[Coalicion, ...]:
        return tuple(coalicion for coalicion, _ in self.dividendos)


@dataclass(frozen=True)
class RelacionUniones:
    p: int
    q: int
    simetricas: bool
    mutuamente_dependientes: bool
    altamente_mutuamente_dependientes: bool
    altamente_simetricas: bool


@dataclass(frozen=True)
class InformeInspeccion:
    juego_cs: JuegoCS
    soporte: Tuple[Coalicion, ...]
    nulos: Tuple[int, ...]
    necesarios: Tuple[int, ...]
    simetricos: Tuple[Tuple[int, int], ...]
    mutuamente_dependientes: Tuple[Tuple[int, int], ...]
    uniones_nulas: Tuple[int, ...]
    uniones_necesarias: Tuple[int, ...]
    relaciones: Tuple[RelacionUniones, ...]


def _no_nulos(juego: Juego, coeficientes: Sequence[Fraction]) -> Tuple[Entrada, ...]:
    return tuple(
        (juego.coalicion(mascara), valor)
        for mascara, valor in enumerate(coeficientes) if mascara and valor != 0
    )


def informe_asignaciones(juego_cs: JuegoCS, valores: Sequence[BaseValor],
                         comparar_cociente: bool = False) -> InformeAsignaciones:
    """
    :raises ErrorEvaluacionValor: si alguna regla falla sobre el juego
    """
    asignaciones = tuple((valor.nombre, valor.calcular(juego_cs)) for valor in valores)
    if not comparar_cociente:
        return InformeAsignaciones(juego_cs, asignaciones)
    esperado = shapley(juego_cociente(juego_cs)).pagos
    cociente = []
    for nombre, asignacion in asignaciones:
        totales = totales_por_union(juego_cs, asignacion)
        cociente.append(FilaCociente(nombre, totales, totales == esperado))
    return InformeAsignaciones(juego_cs, asignaciones, esperado, tuple(cociente))


def informe_dividendos(juego_cs: JuegoCS) -> InformeDividendos:
    juego = juego_cs.juego
    cociente = juego_cociente(juego_cs)
    return InformeDividendos(
        juego_cs,
        _no_nulos(juego, juego.valores),
        _no_nulos(juego, juego.dividendos.dividendos),
        _no_nulos(cociente, cociente.valores),
        _no_nulos(cociente, cociente.dividendos.dividendos),
    )


def informe_inspeccion(juego_cs: JuegoCS) -> InformeInspeccion:
    juego = juego_cs.juego
    jugadores = juego.jugadores
    uniones = range(juego_cs.estructura.m)
    relaciones = tuple(
        RelacionUniones(
            p, q,
            uniones_simetricas(juego_cs, p, q).se_cumple,
            uniones_mutuamente_dependientes(juego_cs, p, q).se_cumple,
            uniones_altamente_mutuamente_dependientes(juego_cs, p, q).se_cumple,
            uniones_altamente_simetricas(juego_cs, p, q).se_cumple,
        )
        for p, q in combinations(uniones, 2)
    )
    return InformeInspeccion(
        juego_cs,
        soporte=tuple(juego.coalicion(t) for t in juego.dividendos.soporte()),
        nulos=tuple(i for i in jugadores if es_jugador_nulo(juego, i)),
        necesarios=tuple(i for i in jugadores if es_jugador_necesario(juego, i)),
        simetricos=tuple((i, j) for i, j in combinations(jugadores, 2) if son_simetricos(juego, i, j)),
        mutuamente_dependientes=tuple(
            (i, j) for i, j in combinations(jugadores, 2) if son_mutuamente_dependientes(juego, i, j)
        ),
        uniones_nulas=tuple(p for p in uniones if union_es_nula(juego_cs, p)),
        uniones_necesarias=tuple(p for p in uniones if union_es_necesaria(juego_cs, p)),
        relaciones=relaciones,
    )
