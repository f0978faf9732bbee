"""
Factory de Visualizadores - Patrón Factory

Crea el visualizador del formato pedido por `--format`.
"""
from presentacion_juego.visualizador import BaseVisualizador, VisualizadorEstructurado, VisualizadorTexto


class FactoryVisualizador:
    """
    ✅ Factory especializado para formatos de salida.
    """

    FORMATOS = ('text', 'structured')

    @staticmethod
    def crear(formato: str) -> BaseVisualizador:
        """
        :param formato: 'text' (tablas) o 'structured' (JSON)
        :raises ValueError: si el formato no está soportado
        """
        if formato == 'text':
            return VisualizadorTexto()
        if formato == 'structured':
            return VisualizadorEstructurado()
        raise ValueError(
            f"Formato no soportado: '{formato}'. "
            f"Valores válidos: {', '.join(repr(f) for f in FactoryVisualizador.FORMATOS)}"
        )
