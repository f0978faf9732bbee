"""
Familias finitas de juegos sobre las que se verifican los axiomas.
"""
from dataclasses import dataclass
from typing import Tuple

from dominio_juego import JuegoCS

from verificacion_axiomas.errores import ErrorFamilia

Par = Tuple[JuegoCS, JuegoCS]


@dataclass(frozen=True)
class FamiliaJuegos:
    """
    :param descripcion: texto reproducible que identifica la familia
    :param juegos: juegos con estructura para los axiomas de un juego
    :param pares: pares con igual plantel y estructura para los axiomas de dos juegos
    :param semilla: semilla usada para las muestras aleatorias
    """
    descripcion: str
    juegos: Tuple[JuegoCS, ...]
    pares: Tuple[Par, ...]
    semilla: int

    def __post_init__(self):
        object.__setattr__(self, 'juegos', tuple(self.juegos))
        object.__setattr__(self, 'pares', tuple(tuple(par) for par in self.pares))
        for indice, par in enumerate(self.pares):
            if len(par) != 2:
                raise ErrorFamilia(f"El par {indice} no tiene dos juegos")
            cs_v, cs_w = par
            if not cs_v.juego.mismo_plantel(cs_w.juego) or cs_v.estructura != cs_w.estructura:
                raise ErrorFamilia(f"El par {indice} no comparte plantel y estructura")

    def __len__(self) -> int:
        return len(self.juegos) + len(self.pares)
