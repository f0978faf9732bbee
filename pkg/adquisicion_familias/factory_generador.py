"""
Factory de Generadores - Patrón Factory + Strategy

Crea la estrategia de generación indicada con su configuración.

Versión: 1.0.0
"""
from typing import Any, Dict

from adquisicion_familias.generador import (
    BaseGenerador,
    GeneradorAleatorio,
    GeneradorEnumerativo,
    GeneradorFixtures,
    GeneradorPares,
)


class FactoryGenerador:
    """
    ✅ Factory especializado para generadores de juegos.

    📖 RESPONSABILIDAD ÚNICA:
    Traducir un tipo y su configuración en una instancia de BaseGenerador.
    """

    TIPOS = ('fixtures', 'enumerativo', 'aleatorio', 'pares')

    @staticmethod
    def crear(tipo_generador: str, config: Dict[str, Any]) -> BaseGenerador:
        """
        🏭 FACTORY METHOD - Crea el generador indicado.

        :param tipo_generador: Tipo de generador
            - 'fixtures': {'directorio': str}
            - 'enumerativo': {'n': int, 'valores': [...], 'tope': int}
            - 'aleatorio': {'n': int, 'muestras': int, 'valores': [...], 'semilla': int, 'por_estructura': bool}
            - 'pares': {'juegos': [...], 'escalas': [...], 'n_unanimidad': int,
                        'perturbaciones': int, 'semilla': int}
        :raises ValueError: si el tipo no está soportado
        """
        if tipo_generador == 'fixtures':
            generador = GeneradorFixtures(config['directorio'])

        elif tipo_generador == 'enumerativo':
            generador = GeneradorEnumerativo(config['n'], config['valores'], config.get('tope', 20000))

        elif tipo_generador == 'aleatorio':
            generador = GeneradorAleatorio(
                config['n'],
                config['muestras'],
                config['valores'],
                config.get('semilla', 0),
                config.get('por_estructura', False),
            )

        elif tipo_generador == 'pares':
            generador = GeneradorPares(
                config.get('juegos', ()),
                config.get('escalas', (1,)),
                config.get('n_unanimidad', 0),
                config.get('perturbaciones', 0),
                config.get('semilla', 0),
            )

        else:
            raise ValueError(
                f"Tipo de generador no soportado: '{tipo_generador}'. "
                f"Valores válidos: {', '.join(repr(t) for t in FactoryGenerador.TIPOS)}"
            )

        return generador
