"""
Implementaciones de auditoría y trazabilidad sobre el módulo logging.

Los eventos van a los loggers `owen_axiomas.auditoria` y `owen_axiomas.traza`.
Nunca se escribe en stdout: los reportes de la línea de comandos se
mantienen idénticos entre corridas.
"""
import logging
from typing import Any, Optional

from supervisor.auditor import BaseAuditor
from supervisor.trazador import BaseTrazador

LOGGER_RAIZ = 'owen_axiomas'
LOGGER_AUDITORIA = f'{LOGGER_RAIZ}.auditoria'
LOGGER_TRAZA = f'{LOGGER_RAIZ}.traza'

FORMATO = '%(asctime)s %(name)s %(levelname)s %(message)s'

_MARCA_HANDLER = '_owen_axiomas'


def configurar_registro(nivel: str = 'WARNING', archivo: Optional[str] = None) -> logging.Logger:
    """
    Instala un único handler en el logger raíz del sistema.

    Sin archivo, el handler escribe en stderr. Llamadas repetidas reemplazan
    el handler instalado anteriormente en lugar de duplicarlo.

    :param nivel: nombre de nivel de logging ('DEBUG', 'INFO', ...)
    :param archivo: ruta del archivo de registro (opcional)
    :raises ValueError: si el nivel no existe
    """
    valor_nivel = logging.getLevelName(str(nivel).upper())
    if not isinstance(valor_nivel, int):
        raise ValueError(f"Nivel de registro no soportado: '{nivel}'")

    logger = logging.getLogger(LOGGER_RAIZ)
    for handler in list(logger.handlers):
        if getattr(handler, _MARCA_HANDLER, False):
            logger.removeHandler(handler)
            handler.close()

    handler = logging.FileHandler(archivo, encoding='utf-8') if archivo else logging.StreamHandler()
    setattr(handler, _MARCA_HANDLER, True)
    handler.setFormatter(logging.Formatter(FORMATO))
    logger.addHandler(handler)
    logger.setLevel(valor_nivel)
    logger.propagate = False
    return logger


class AuditorRegistro(BaseAuditor):
    """Auditor que registra en `owen_axiomas.auditoria` con nivel INFO."""

    def __init__(self, nombre_logger: str = LOGGER_AUDITORIA):
        self._logger = logging.getLogger(nombre_logger)

    def auditar(self, entidad: Any, auditoria: str) -> None:
        self._logger.info("%s | %s", auditoria, entidad)


class TrazadorRegistro(BaseTrazador):
    """
    Trazador que registra en `owen_axiomas.traza`.

    Las acciones 'contradiccion' y 'error' se registran con nivel WARNING;
    el resto con DEBUG.
    """
    ACCIONES_ADVERTENCIA = ('contradiccion', 'error')

    def __init__(self, nombre_logger: str = LOGGER_TRAZA):
        self._logger = logging.getLogger(nombre_logger)

    def trazar(self, entidad: Any, accion: str, mensaje: str) -> None:
        nivel = logging.WARNING if accion in self.ACCIONES_ADVERTENCIA else logging.DEBUG
        self._logger.log(nivel, "[%s] %s | %s", accion, mensaje, entidad)
