"""
Factory de Juegos - Patrón Factory + Configuración Externa

Crea juegos de las familias básicas a partir de un tipo y un diccionario de
configuración, del mismo modo en que los demás factories del sistema crean
sus componentes desde config.json o desde un archivo de juego.

Versión: 1.0.0 - Factory de Dominio
"""
from typing import Any, Dict

from dominio_juego.juego import (
    Juego,
    TablaDividendos,
    a_racional,
    juego_aditivo,
    juego_desde_dividendos,
    unanimidad,
)


class FactoryJuego:
    """
    ✅ Factory especializado para juegos TU.

    📖 RESPONSABILIDAD ÚNICA:
    Traducir una descripción declarativa (tipo + parámetros) en un Juego.
    Las coaliciones se describen como listas de ids de jugador.
    """

    TIPOS = ('nulo', 'unanimidad', 'aditivo', 'valores', 'dividendos')

    @staticmethod
    def crear(tipo_juego: str, config: Dict[str, Any]) -> Juego:
        """
        🏭 FACTORY METHOD - Crea un juego del tipo indicado.

        :param tipo_juego: Tipo de juego a crear
            - 'nulo': {'jugadores'}
            - 'unanimidad': {'jugadores', 'coalicion', 'escala' (default 1)}
            - 'aditivo': {'jugadores', 'individuales': {id: valor}}
            - 'valores': {'jugadores', 'valores': {(ids...): v(S)}}; coaliciones omitidas valen 0
            - 'dividendos': {'jugadores', 'dividendos': {(ids...): λ_T}}
        :param config: Diccionario con la configuración del tipo
        :return: Juego construido
        :raises ValueError: Si el tipo no está soportado o la configuración es inválida
        """
        jugadores = tuple(sorted(config.get('jugadores', ())))

        if tipo_juego == 'nulo':
            juego = Juego.nulo(jugadores)

        elif tipo_juego == 'unanimidad':
            juego = unanimidad(jugadores, config.get('coalicion', ()), config.get('escala', 1))

        elif tipo_juego == 'aditivo':
            juego = juego_aditivo(jugadores, config.get('individuales', {}))

        elif tipo_juego == 'valores':
            base = Juego.nulo(jugadores)
            tabla = list(base.valores)
            for miembros, valor in config.get('valores', {}).items():
                tabla[base.mascara(miembros)] = a_racional(valor)
            juego = Juego(base.jugadores, tuple(tabla))

        elif tipo_juego == 'dividendos':
            base = Juego.nulo(jugadores)
            tabla = list(base.valores)
            for miembros, valor in config.get('dividendos', {}).items():
                tabla[base.mascara(miembros)] = a_racional(valor)
            juego = juego_desde_dividendos(TablaDividendos(base.jugadores, tuple(tabla)))

        else:
            raise ValueError(
                f"Tipo de juego no soportado: '{tipo_juego}'. "
                f"Valores válidos: {', '.join(repr(t) for t in FactoryJuego.TIPOS)}"
            )

        return juego
