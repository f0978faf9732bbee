"""
Paquete configurador - Factory Centralizado con Configuración Externa

- Configurador: crea familias, reglas, axiomas, visualizadores y el
  repositorio de testigos desde config.json
- CargadorConfig: lee config.json y da acceso a sus secciones

Versión: 1.0.0
"""

from .configurador import Configurador, VARIABLE_SEMILLA
from .cargador_config import CargadorConfig, FAMILIAS_POR_DEFECTO, SEMILLA_POR_DEFECTO

__version__ = "1.0.0"
__author__ = "Equipo owen-axiomas"
__all__ = [
    'Configurador',
    'CargadorConfig',
    'VARIABLE_SEMILLA',
    'FAMILIAS_POR_DEFECTO',
    'SEMILLA_POR_DEFECTO',
]
