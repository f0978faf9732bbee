"""
Reportes de predicados: resultado exacto más testigo concreto cuando falla.
"""
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple


class RelacionJugador(Enum):
    NULO = 'nulo'
    NECESARIO = 'necesario'
    SIMETRICOS = 'simetricos'
    MUTUAMENTE_DEPENDIENTES = 'mutuamente-dependientes'


class RelacionUnion(Enum):
    UNION_NULA = 'union-nula'
    UNION_NECESARIA = 'union-necesaria'
    UNIONES_SIMETRICAS = 'uniones-simetricas'
    UNIONES_MUTUAMENTE_DEPENDIENTES = 'uniones-mutuamente-dependientes'
    ALTAMENTE_MUTUAMENTE_DEPENDIENTES = 'altamente-mutuamente-dependientes'
    ALTAMENTE_SIMETRICAS = 'altamente-simetricas'


@dataclass(frozen=True)
class ReporteRelacionJugador:
    """
    :param testigo: coalición S (máscara sobre el plantel) que viola la condición;
        presente si y sólo si la relación no se cumple
    """
    relacion: RelacionJugador
    se_cumple: bool
    testigo: Optional[int] = None

    def __bool__(self) -> bool:
        return self.se_cumple


@dataclass(frozen=True)
class ReporteRelacionUnion:
    """
    Para relaciones definidas sobre el cociente, `par` son índices de unión y
    `testigo` una máscara sobre M. Para las relaciones "altamente", `par` son
    los dos jugadores que fallan y `testigo` una máscara sobre N.
    """
    relacion: RelacionUnion
    se_cumple: bool
    par: Optional[Tuple[int, int]] = None
    testigo: Optional[int] = None

    def __bool__(self) -> bool:
        return self.se_cumple


@dataclass(frozen=True)
class DiagnosticoUniones:
    """Resultado de la prueba de juegos mutuamente dependientes por uniones."""
    se_cumple: bool
    motivo: str = ''

    def __bool__(self) -> bool:
        return self.se_cumple


@dataclass(frozen=True)
class ReporteMarginalesEntreUniones:
    """
    :param uniones: R ⊆ M∖{p} (máscara sobre M) del primer par que difiere
    :param subcoalicion: S ⊆ B_p∖{i} (máscara sobre N) del primer par que difiere
    """
    se_cumple: bool
    uniones: Optional[int] = None
    subcoalicion: Optional[int] = None

    def __bool__(self) -> bool:
        return self.se_cumple
