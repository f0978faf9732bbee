"""
Patrón repositorio: acceso abstracto a los testigos persistidos.

BaseRepositorio sólo define guardar/obtener. La auditoría y la trazabilidad
vienen de las interfaces segregadas de supervisor; RepositorioTestigos las
implementa delegando en un auditor y un trazador inyectados.
"""
from abc import ABC, abstractmethod
from typing import Any, Optional

from supervisor import AuditorRegistro, BaseAuditor, BaseTrazador, TrazadorRegistro
from verificacion_axiomas import Testigo

from persistidor_juego.contexto import BaseContexto


class BaseRepositorio(ABC):
    """
    Interfaz básica: sólo persistencia.
    """

    def __init__(self, contexto: BaseContexto):
        self._contexto = contexto

    @property
    def contexto(self) -> BaseContexto:
        return self._contexto

    @abstractmethod
    def guardar(self, entidad: Any) -> None:
        pass

    @abstractmethod
    def obtener(self, id_entidad: str) -> Any:
        pass


class RepositorioTestigos(BaseAuditor, BaseTrazador, BaseRepositorio):
    """
    Repositorio de testigos de violación, con auditoría y trazabilidad.

    El id de un testigo es `<regla>__<axioma>`: guardar un segundo testigo
    del mismo par reemplaza al anterior.
    """

    def __init__(self, contexto: BaseContexto,
                 auditor: Optional[BaseAuditor] = None,
                 trazador: Optional[BaseTrazador] = None):
        super().__init__(contexto)
        self._auditor = auditor or AuditorRegistro()
        self._trazador = trazador or TrazadorRegistro()

    def guardar(self, testigo: Testigo) -> None:
        try:
            self.auditar(testigo.id, "Antes de persistir el testigo")
            self._contexto.persistir(testigo, testigo.id)
            self.auditar(testigo.id, "Se persistió el testigo")
        except Exception as ex:
            self.auditar(testigo.id, "Problema al persistir")
            self.trazar(testigo.id, "error", str(ex))
            raise

    def obtener(self, id_testigo: str) -> Testigo:
        """
        :raises FileNotFoundError: si no hay testigo con ese id
        :raises ErrorFormatoArchivo: si el documento está dañado
        """
        try:
            self.auditar(id_testigo, "Antes de recuperar el testigo")
            testigo = self._contexto.recuperar(id_testigo)
            self.auditar(id_testigo, "Se recuperó el testigo")
            return testigo
        except Exception as ex:
            self.trazar(id_testigo, "error", f"Error al leer testigo persistido: {ex}")
            raise

    def listar(self) -> list:
        return self._contexto.listar()

    def auditar(self, entidad: Any, auditoria: str) -> None:
        self._auditor.auditar(entidad, auditoria)

    def trazar(self, entidad: Any, accion: str, mensaje: str) -> None:
        self._trazador.trazar(entidad, accion, mensaje)
