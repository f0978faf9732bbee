"""
Paquete presentacion_juego - Informes de texto y estructurados

Construye los informes de los comandos (asignaciones, dividendos,
inspección, veredictos, independencia) y les da formato. Los informes no
llevan marcas de tiempo: misma semilla, mismo texto.

Versión: 1.0.0
"""

from .informes import (
    Encabezado,
    FilaCociente,
    InformeAsignaciones,
    InformeDividendos,
    InformeInspeccion,
    RelacionUniones,
    informe_asignaciones,
    informe_dividendos,
    informe_inspeccion,
)
from .visualizador import BaseVisualizador, VisualizadorTexto, VisualizadorEstructurado
from .factory_visualizador import FactoryVisualizador

__version__ = "1.0.0"
__author__ = "Equipo owen-axiomas"
__all__ = [
    'Encabezado',
    'FilaCociente',
    'InformeAsignaciones',
    'InformeDividendos',
    'InformeInspeccion',
    'RelacionUniones',
    'informe_asignaciones',
    'informe_dividendos',
    'informe_inspeccion',
    'BaseVisualizador',
    'VisualizadorTexto',
    'VisualizadorEstructurado',
    'FactoryVisualizador',
]
