"""
Cargador de Configuración Externa

Lee config.json y entrega cada sección con sus valores por defecto.

Versión: 1.0.0
"""
import json
from pathlib import Path
from typing import Any, Dict, Optional

FAMILIAS_POR_DEFECTO: Dict[str, Dict[str, Any]] = {
    'defecto': {
        'n_max': 4,
        'valores_dividendo': ['-1', '0', '1', '2'],
        'muestras_por_estructura': 40,
        'tope_enumeracion': 20000,
        'incluir_fixtures': True,
        'pares_unanimidad_n_max': 3,
        'perturbaciones_por_juego': 1,
        'escalas_unanimidad': ['1', '2'],
    },
    'rapida': {
        'n_max': 3,
        'valores_dividendo': ['0', '1'],
        'muestras_por_estructura': 0,
        'tope_enumeracion': 1000,
        'incluir_fixtures': True,
        'pares_unanimidad_n_max': 2,
        'perturbaciones_por_juego': 0,
        'escalas_unanimidad': ['1'],
    },
}

SEMILLA_POR_DEFECTO = 20240917


class CargadorConfig:
    """
    ✅ Cargador de configuración externa desde JSON.

    📖 RESPONSABILIDAD ÚNICA:
    Leer la configuración y dar acceso a sus secciones.
    """

    def __init__(self, ruta_config: Optional[str] = None):
        """
        :param ruta_config: ruta del JSON; sin ruta, el config.json junto a este módulo
        """
        if ruta_config is None:
            self.ruta_config = Path(__file__).parent / 'config.json'
        else:
            self.ruta_config = Path(ruta_config)
        self._config: Optional[Dict[str, Any]] = None

    def cargar(self) -> Dict[str, Any]:
        """
        :raises FileNotFoundError: si el archivo no existe
        :raises json.JSONDecodeError: si el JSON es inválido
        :raises ValueError: si la raíz no es un objeto
        """
        if not self.ruta_config.exists():
            raise FileNotFoundError(
                f"Archivo de configuración no encontrado: {self.ruta_config}"
            )

        with open(self.ruta_config, 'r', encoding='utf-8') as f:
            config = json.load(f)
        if not isinstance(config, dict):
            raise ValueError(f"La configuración de {self.ruta_config} debe ser un objeto JSON")
        self._config = config
        return self._config

    def _seccion(self, clave: str, defecto: Any) -> Any:
        if self._config is None:
            self.cargar()
        return self._config.get(clave, defecto)

    def obtener_semilla(self) -> int:
        """JSON: "semilla": 20240917"""
        return int(self._seccion('semilla', SEMILLA_POR_DEFECTO))

    def obtener_config_familias(self) -> Dict[str, Dict[str, Any]]:
        """JSON: "familias": {"defecto": {...}, "rapida": {...}}"""
        return self._seccion('familias', FAMILIAS_POR_DEFECTO)

    def obtener_config_valores(self) -> Dict[str, Dict[str, Any]]:
        """JSON: "valores": {"phi2": {"pesos": "id+1"}, "phi5": {"referencia": 1}}"""
        return self._seccion('valores', {})

    def obtener_config_registro(self) -> Dict[str, Any]:
        """JSON: "registro": {"nivel": "WARNING", "archivo": null}"""
        return self._seccion('registro', {'nivel': 'WARNING', 'archivo': None})

    def obtener_config_repositorio_testigos(self) -> Dict[str, Any]:
        """JSON: "repositorio_testigos": {"tipo": "archivo", "recurso": "./testigos"}"""
        return self._seccion('repositorio_testigos', {'tipo': 'archivo', 'recurso': './testigos'})
