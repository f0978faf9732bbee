"""
Contextos de persistencia: dónde y cómo se guardan los documentos.
"""
import os
from abc import ABC, abstractmethod
from typing import Any

from persistidor_juego.mapeador import Mapeador, MapeadorTestigo


class BaseContexto(ABC):
    """
    Interfaz del recurso físico de persistencia.
    """
    def __init__(self, recurso: str):
        """
        :param recurso: directorio donde residen los documentos; se crea si no existe
        :raises ValueError: si el recurso es vacío
        """
        if not recurso:
            raise ValueError("Nombre de recurso vacío")
        self._recurso = recurso
        os.makedirs(recurso, exist_ok=True)

    @property
    def recurso(self) -> str:
        return self._recurso

    @abstractmethod
    def persistir(self, entidad: Any, id_entidad: str) -> None:
        pass

    @abstractmethod
    def recuperar(self, id_entidad: str) -> Any:
        """:raises FileNotFoundError: si no hay entidad con ese id"""

    @abstractmethod
    def listar(self) -> list:
        """Ids persistidos, en orden alfabético."""


class ContextoArchivo(BaseContexto):
    """
    Un documento JSON por entidad: `<recurso>/<id>.json`.
    """
    EXTENSION = '.json'

    def __init__(self, recurso: str, mapeador: Mapeador = None):
        super().__init__(recurso)
        self._mapeador = mapeador or MapeadorTestigo()

    def _ubicacion(self, id_entidad: str) -> str:
        return os.path.join(self._recurso, f"{id_entidad}{self.EXTENSION}")

    def persistir(self, entidad: Any, id_entidad: str) -> None:
        contenido = self._mapeador.ir_a_persistidor(entidad)
        with open(self._ubicacion(id_entidad), 'w', encoding='utf-8') as archivo:
            archivo.write(contenido)

    def recuperar(self, id_entidad: str) -> Any:
        with open(self._ubicacion(id_entidad), 'r', encoding='utf-8') as archivo:
            return self._mapeador.venir_desde_persistidor(archivo.read())

    def listar(self) -> list:
        return sorted(
            nombre[:-len(self.EXTENSION)]
            for nombre in os.listdir(self._recurso) if nombre.endswith(self.EXTENSION)
        )
