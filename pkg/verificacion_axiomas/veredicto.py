"""
Veredictos de axiomas y testigos de violación.
"""
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Optional, Tuple

from dominio_juego import JuegoCS


class Resultado(Enum):
    PASA = 'pass-on-family'
    VACUO = 'vacuous-pass'
    FALLA = 'fail'

    @property
    def aprobado(self) -> bool:
        return self is not Resultado.FALLA


@dataclass(frozen=True)
class Testigo:
    """
    Violación concreta de un axioma.

    :param juegos: el juego (o el par de juegos) donde falla la conclusión
    :param lado_izquierdo: valor del primer miembro de la igualdad violada
    :param lado_derecho: valor del segundo miembro
    :param jugadores: jugadores involucrados en la conclusión (ids)
    :param uniones: índices de unión involucrados
    """
    axioma: str
    regla: str
    juegos: Tuple[JuegoCS, ...]
    lado_izquierdo: Fraction
    lado_derecho: Fraction
    descripcion: str
    jugadores: Tuple[int, ...] = ()
    uniones: Tuple[int, ...] = ()

    @property
    def id(self) -> str:
        return f"{self.regla}__{self.axioma}"


@dataclass(frozen=True)
class VeredictoAxioma:
    """
    :param hipotesis: cantidad de instancias no vacías de la hipótesis revisadas
    :param reverificado: en una falla, si el testigo se confirmó recalculando sin memoria
    """
    axioma: str
    regla: str
    resultado: Resultado
    items: int
    hipotesis: int
    testigo: Optional[Testigo] = None
    reverificado: Optional[bool] = field(default=None)

    @property
    def aprobado(self) -> bool:
        return self.resultado.aprobado
