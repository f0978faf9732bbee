"""
Configurador - Factory Centralizado con Configuración Externa

🎯 RESPONSABILIDAD:
Crear los componentes del sistema (familias, reglas, axiomas,
visualizadores, repositorio de testigos, trazador) a partir de
config.json, delegando en los factories especializados.

🏭 FACTORIES ESPECIALIZADOS:
- FactoryValor: reglas de asignación con sus parámetros
- FactoryAxioma: verificadores de axiomas
- FactoryVisualizador: formato de salida
- FactoryContexto: contexto de persistencia de testigos

Sin configuración cargada, cada método usa los valores por defecto de
CargadorConfig.

Versión: 1.0.0
"""
import logging
import os
from typing import Any, Dict, Optional

from adquisicion_familias import EspecificacionFamilia, generar_familia
from persistidor_juego import FactoryContexto, RepositorioTestigos
from presentacion_juego import BaseVisualizador, FactoryVisualizador
from supervisor import AuditorRegistro, BaseTrazador, TrazadorRegistro, configurar_registro
from valores_juego import BaseValor, FactoryValor
from verificacion_axiomas import BaseAxioma, FactoryAxioma, FamiliaJuegos

from configurador.cargador_config import FAMILIAS_POR_DEFECTO, SEMILLA_POR_DEFECTO, CargadorConfig

logger = logging.getLogger('owen_axiomas.configurador')

VARIABLE_SEMILLA = 'OWEN_AXIOMAS_SEMILLA'


class Configurador:
    """
    Factory Centralizado con Configuración Externa.

    📖 RESPONSABILIDAD ÚNICA:
    Traducir la configuración en instancias listas para usar.
    """

    # Instancia del cargador de configuración
    _cargador: Optional[CargadorConfig] = None

    # =========================================================================
    # INICIALIZACIÓN
    # =========================================================================

    @staticmethod
    def inicializar_configuracion(ruta_config: str = None) -> None:
        """
        🚀 Carga config.json e instala el registro que indica.

        :param ruta_config: ruta al archivo (None = config.json del paquete)
        :raises FileNotFoundError: si el archivo no existe
        :raises json.JSONDecodeError: si el JSON es inválido
        """
        cargador = CargadorConfig(ruta_config)
        cargador.cargar()
        Configurador._cargador = cargador
        registro = cargador.obtener_config_registro()
        configurar_registro(registro.get('nivel', 'WARNING'), registro.get('archivo'))
        logger.info("Configuración cargada desde %s", cargador.ruta_config)

    @staticmethod
    def reiniciar() -> None:
        """Descarta la configuración cargada."""
        Configurador._cargador = None

    # =========================================================================
    # SEMILLA
    # =========================================================================

    @staticmethod
    def obtener_semilla(semilla: Optional[int] = None) -> int:
        """
        Semilla efectiva: la indicada, si no la variable OWEN_AXIOMAS_SEMILLA,
        si no la de config.json.

        :raises ValueError: si la variable de entorno no es un entero
        """
        if semilla is not None:
            return semilla
        entorno = os.environ.get(VARIABLE_SEMILLA)
        if entorno:
            try:
                return int(entorno)
            except ValueError:
                raise ValueError(f"{VARIABLE_SEMILLA} debe ser un entero, se recibió '{entorno}'") from None
        if Configurador._cargador is None:
            return SEMILLA_POR_DEFECTO
        return Configurador._cargador.obtener_semilla()

    # =========================================================================
    # FAMILIAS
    # =========================================================================

    @staticmethod
    def crear_especificacion_familia(familia: str = 'defecto') -> EspecificacionFamilia:
        """
        :param familia: nombre de una familia configurada, o forma corta `n=3;valores=0,1;muestras=0`
        :raises ValueError: si el nombre no está configurado
        :raises ErrorFamilia: si la especificación es inválida
        """
        if Configurador._cargador is None:
            familias = FAMILIAS_POR_DEFECTO
        else:
            familias = Configurador._cargador.obtener_config_familias()
        if familia in familias:
            return EspecificacionFamilia.desde_config(familia, familias[familia])
        if '=' in familia:
            return EspecificacionFamilia.desde_texto(familia)
        raise ValueError(
            f"Familia no soportada: '{familia}'. "
            f"Valores válidos: {', '.join(repr(f) for f in familias)} o 'n=<N>;valores=<v1,v2,...>;muestras=<k>'"
        )

    @staticmethod
    def crear_familia(familia: str = 'defecto', semilla: Optional[int] = None) -> FamiliaJuegos:
        """🏭 Genera la familia indicada con la semilla efectiva."""
        especificacion = Configurador.crear_especificacion_familia(familia)
        return generar_familia(especificacion, Configurador.obtener_semilla(semilla))

    # =========================================================================
    # REGLAS Y AXIOMAS
    # =========================================================================

    @staticmethod
    def obtener_config_valores(extra: Optional[Dict[str, Dict[str, Any]]] = None) -> Dict[str, Dict[str, Any]]:
        """
        Parámetros por regla: los de config.json, reemplazados por `extra`
        (por ejemplo, los pesos y la unión distinguida de un archivo de juego).
        """
        base = {} if Configurador._cargador is None else Configurador._cargador.obtener_config_valores()
        config = {regla: dict(parametros) for regla, parametros in base.items()}
        for regla, parametros in (extra or {}).items():
            config.setdefault(regla, {}).update(parametros)
        return config

    @staticmethod
    def crear_valor(nombre: str, extra: Optional[Dict[str, Dict[str, Any]]] = None) -> BaseValor:
        """
        :raises ValueError: si la regla no está soportada
        :raises ErrorValor: si sus parámetros son inválidos
        """
        return FactoryValor.crear(nombre, Configurador.obtener_config_valores(extra).get(nombre))

    @staticmethod
    def crear_axioma(nombre: str) -> BaseAxioma:
        return FactoryAxioma.crear(nombre)

    # =========================================================================
    # PRESENTACIÓN, PERSISTENCIA Y TRAZAS
    # =========================================================================

    @staticmethod
    def crear_visualizador(formato: str = 'text') -> BaseVisualizador:
        return FactoryVisualizador.crear(formato)

    @staticmethod
    def crear_trazador() -> BaseTrazador:
        return TrazadorRegistro()

    @staticmethod
    def crear_repositorio_testigos(recurso: Optional[str] = None) -> RepositorioTestigos:
        """
        🏭 Repositorio de testigos con auditoría y trazas sobre logging.

        🏭 FLUJO:
        JSON → CargadorConfig → FactoryContexto → RepositorioTestigos

        :param recurso: directorio que reemplaza al configurado
        """
        if Configurador._cargador is None:
            config = {'tipo': 'archivo', 'recurso': './testigos'}
        else:
            config = dict(Configurador._cargador.obtener_config_repositorio_testigos())
        if recurso is not None:
            config['recurso'] = recurso
        contexto = FactoryContexto.crear(config.get('tipo', 'archivo'), {**config, 'entidad': 'testigo'})
        return RepositorioTestigos(contexto, AuditorRegistro(), Configurador.crear_trazador())
