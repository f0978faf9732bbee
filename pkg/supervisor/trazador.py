"""
Trazabilidad de acciones del verificador y de la persistencia.
"""
from abc import ABCMeta, abstractmethod
from typing import Any


class BaseTrazador(metaclass=ABCMeta):
    """Abstracción para trazadores."""

    @abstractmethod
    def trazar(self, entidad: Any, accion: str, mensaje: str) -> None:
        """
        Registra una traza de acción sobre una entidad.

        :param entidad: entidad involucrada (fila de una suite, testigo, ...)
        :param accion: tipo de acción (ej: "independencia", "guardar", "contradiccion")
        :param mensaje: descripción
        """
