"""
Paquete supervisor - Auditoría y trazabilidad

Interfaces segregadas (BaseAuditor, BaseTrazador) y sus implementaciones
sobre logging, usadas por el repositorio de testigos y por el verificador
de independencia.

Versión: 1.0.0
"""

from supervisor.auditor import BaseAuditor
from supervisor.trazador import BaseTrazador
from supervisor.registro import (
    AuditorRegistro,
    TrazadorRegistro,
    configurar_registro,
    LOGGER_AUDITORIA,
    LOGGER_TRAZA,
)

__author__ = 'Equipo owen-axiomas'
__version__ = '1.0.0'

__all__ = [
    'BaseAuditor',
    'BaseTrazador',
    'AuditorRegistro',
    'TrazadorRegistro',
    'configurar_registro',
    'LOGGER_AUDITORIA',
    'LOGGER_TRAZA',
]
