"""
Paquete persistidor_juego - Archivos de juego y repositorio de testigos

Lectura y escritura canónica del formato de archivo de juego (JSON exacto,
sin punto flotante) y persistencia de los testigos de violación que
encuentra el verificador.

Clases principales - Patrón Repository + Factory:
- MapeadorArchivoJuego: archivo de juego <-> ArchivoJuego (JuegoCS + parámetros)
- MapeadorTestigo: testigo <-> documento JSON con los juegos embebidos
- BaseContexto / ContextoArchivo: un documento JSON por entidad
- FactoryContexto: creación según config externa
- BaseRepositorio / RepositorioTestigos: guardar/obtener con auditoría y trazas

Versión: 1.0.0
"""

__author__ = 'Equipo owen-axiomas'
__version__ = '1.0.0'

from persistidor_juego.errores import ErrorFormatoArchivo
from persistidor_juego.mapeador import (
    ArchivoJuego,
    Mapeador,
    MapeadorArchivoJuego,
    MapeadorTestigo,
    clave_coalicion,
    leer_archivo_juego,
    texto_racional,
)
from persistidor_juego.contexto import BaseContexto, ContextoArchivo
from persistidor_juego.factory_contexto import FactoryContexto
from persistidor_juego.repositorio import BaseRepositorio, RepositorioTestigos

__all__ = [
    'ErrorFormatoArchivo',
    'ArchivoJuego',
    'Mapeador',
    'MapeadorArchivoJuego',
    'MapeadorTestigo',
    'clave_coalicion',
    'leer_archivo_juego',
    'texto_racional',
    'BaseContexto',
    'ContextoArchivo',
    'FactoryContexto',
    'BaseRepositorio',
    'RepositorioTestigos',
]
