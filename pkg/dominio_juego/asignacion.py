"""
Asignaciones: vectores de pagos exactos indexados por jugador.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Sequence, Tuple

from dominio_juego.coalicion import posiciones
from dominio_juego.errores import ErrorJuego, JugadorDesconocidoError, PlantelIncompatibleError
from dominio_juego.juego import a_racional, _validar_plantel


@dataclass(frozen=True)
class Asignacion:
    """
    φ(N, v, ℬ) ∈ ℚᴺ.

    :param jugadores: plantel ascendente
    :param pagos: pago de cada jugador, en el orden del plantel
    """
    jugadores: Tuple[int, ...]
    pagos: Tuple[Fraction, ...]

    def __post_init__(self):
        plantel = _validar_plantel(self.jugadores)
        pagos = tuple(a_racional(p) for p in self.pagos)
        if len(pagos) != len(plantel):
            raise ErrorJuego(
                f"Se esperaban {len(plantel)} pagos, se recibieron {len(pagos)}"
            )
        object.__setattr__(self, 'jugadores', plantel)
        object.__setattr__(self, 'pagos', pagos)

    @classmethod
    def nula(cls, jugadores: Sequence[int]) -> 'Asignacion':
        return cls(tuple(jugadores), (Fraction(0),) * len(jugadores))

    def __getitem__(self, jugador: int) -> Fraction:
        try:
            return self.pagos[self.jugadores.index(jugador)]
        except ValueError:
            raise JugadorDesconocidoError(jugador, self.jugadores) from None

    def como_dict(self) -> Dict[int, Fraction]:
        return dict(zip(self.jugadores, self.pagos))

    def total(self, mascara: int = None) -> Fraction:
        """Suma de pagos de la coalición (todo el plantel si no se indica)."""
        if mascara is None:
            return sum(self.pagos, Fraction(0))
        return sum((self.pagos[k] for k in posiciones(mascara)), Fraction(0))

    def _exigir_mismo_plantel(self, otra: 'Asignacion') -> None:
        if self.jugadores != otra.jugadores:
            raise PlantelIncompatibleError(
                f"Asignaciones sobre planteles distintos: {list(self.jugadores)} y {list(otra.jugadores)}"
            )

    def __add__(self, otra: 'Asignacion') -> 'Asignacion':
        self._exigir_mismo_plantel(otra)
        return Asignacion(self.jugadores, tuple(a + b for a, b in zip(self.pagos, otra.pagos)))

    def __sub__(self, otra: 'Asignacion') -> 'Asignacion':
        self._exigir_mismo_plantel(otra)
        return Asignacion(self.jugadores, tuple(a - b for a, b in zip(self.pagos, otra.pagos)))

    def diferencias(self, otra: 'Asignacion') -> Iterable[int]:
        """Ids donde los pagos difieren, en orden del plantel."""
        self._exigir_mismo_plantel(otra)
        return [j for j, a, b in zip(self.jugadores, self.pagos, otra.pagos) if a != b]
