"""
Paquete dominio_juego - Núcleo exacto de juegos cooperativos con estructura

Entidades del dominio: juegos TU con tabla densa de valores racionales,
dividendos de Harsanyi, estructuras de coaliciones, juego cociente,
subjuegos y álgebra de juegos. No depende de ningún otro paquete del sistema.

🏗️ ARQUITECTURA:
- Juego / TablaDividendos: tabla de 2ⁿ valores y su transformada de Möbius
- EstructuraCoaliciones / JuegoCS: partición ℬ y juego (N, v, ℬ)
- Asignacion: vector de pagos exacto
- FactoryJuego: creación declarativa de juegos básicos

Versión: 1.0.0
"""

from .errores import (
    ErrorJuego,
    JugadorDesconocidoError,
    PlantelIncompatibleError,
    CoalicionInvalidaError,
    EstructuraInvalidaError,
)
from .coalicion import bit_menor, cardinal, comprimir, posiciones, submascaras
from .juego import (
    Juego,
    TablaDividendos,
    a_racional,
    transformada_moebius,
    transformada_zeta,
    dividendos,
    dividendos_ingenuo,
    juego_desde_dividendos,
    soporte,
    unanimidad,
    unanimidad_mascara,
    juego_aditivo,
    restringir,
    agregar_jugador_nulo,
    sumar,
    restar,
    escalar,
)
from .estructura import (
    EstructuraCoaliciones,
    JuegoCS,
    LecturaIdentidad,
    VeredictoIdentidad,
    particiones,
    juego_cociente,
    restringir_estructura,
    identidad_dividendos_cociente,
)
from .asignacion import Asignacion
from .factory_juego import FactoryJuego

__version__ = "1.0.0"
__author__ = "Equipo owen-axiomas"
__all__ = [
    'ErrorJuego',
    'JugadorDesconocidoError',
    'PlantelIncompatibleError',
    'CoalicionInvalidaError',
    'EstructuraInvalidaError',
    'bit_menor',
    'cardinal',
    'comprimir',
    'posiciones',
    'submascaras',
    'Juego',
    'TablaDividendos',
    'a_racional',
    'transformada_moebius',
    'transformada_zeta',
    'dividendos',
    'dividendos_ingenuo',
    'juego_desde_dividendos',
    'soporte',
    'unanimidad',
    'unanimidad_mascara',
    'juego_aditivo',
    'restringir',
    'agregar_jugador_nulo',
    'sumar',
    'restar',
    'escalar',
    'EstructuraCoaliciones',
    'JuegoCS',
    'LecturaIdentidad',
    'VeredictoIdentidad',
    'particiones',
    'juego_cociente',
    'restringir_estructura',
    'identidad_dividendos_cociente',
    'Asignacion',
    'FactoryJuego',
]
