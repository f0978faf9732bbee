"""
owen-axiomas - Valor de Owen exacto y verificación de axiomas

Meta-paquete que instala el sistema completo.

Componentes:
- supervisor
- dominio-juego
- predicados-juego
- valores-juego
- verificacion-axiomas
- persistidor-juego
- adquisicion-familias
- presentacion-juego
- configurador
- lanzador
"""

__version__ = "1.0.0"
__author__ = "Equipo owen-axiomas"
__license__ = "MIT"

__all__ = ['__version__', '__author__', '__license__']
