"""
Paquete lanzador - Línea de comandos de owen-axiomas

Orquesta los comandos eval, dividends, inspect, check e independence:
lee argumentos, pide los componentes al Configurador y escribe el informe.

Versión: 1.0.0
"""

from .lanzador import Lanzador, ejecutar, VERSION, SALIDA_OK, SALIDA_EXPECTATIVA, SALIDA_USO

__version__ = VERSION
__author__ = "Equipo owen-axiomas"
__all__ = ['Lanzador', 'ejecutar', 'VERSION', 'SALIDA_OK', 'SALIDA_EXPECTATIVA', 'SALIDA_USO']
