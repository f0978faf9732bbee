"""
Auditoría de operaciones sobre testigos y reportes.

BaseAuditor separa el registro de eventos de auditoría de la trazabilidad
(BaseTrazador): un repositorio de testigos necesita ambos, el verificador de
independencia sólo traza.
"""
from abc import ABCMeta, abstractmethod
from typing import Any


class BaseAuditor(metaclass=ABCMeta):
    """Abstracción para auditores."""

    @abstractmethod
    def auditar(self, entidad: Any, auditoria: str) -> None:
        """
        Registra un evento de auditoría sobre una entidad.

        :param entidad: testigo, juego o identificador afectado
        :param auditoria: descripción del evento
        """
