"""
Paquete adquisicion_familias - Generación de familias de juegos

Estrategias de generación (fixtures, enumeración exhaustiva, muestras con
semilla, pares estructurados) y la especificación declarativa de familias
con sus topes.

Versión: 1.0.0
"""

from adquisicion_familias.generador import (
    BaseGenerador,
    GeneradorFixtures,
    GeneradorEnumerativo,
    GeneradorAleatorio,
    GeneradorPares,
    N_MAXIMO,
    cantidad_particiones,
    cantidad_enumerativa,
)
from adquisicion_familias.factory_generador import FactoryGenerador
from adquisicion_familias.familia import (
    DIRECTORIO_FIXTURES,
    EspecificacionFamilia,
    generar_familia,
)

__author__ = 'Equipo owen-axiomas'
__version__ = '1.0.0'

__all__ = [
    'BaseGenerador',
    'GeneradorFixtures',
    'GeneradorEnumerativo',
    'GeneradorAleatorio',
    'GeneradorPares',
    'N_MAXIMO',
    'cantidad_particiones',
    'cantidad_enumerativa',
    'FactoryGenerador',
    'DIRECTORIO_FIXTURES',
    'EspecificacionFamilia',
    'generar_familia',
]
