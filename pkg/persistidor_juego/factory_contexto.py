"""
Factory de Contextos - Patrón Factory + Strategy Pattern

Crea contextos de persistencia según la sección `repositorio_testigos`
de config.json.

Versión: 1.0.0
"""
from typing import Any, Dict

from persistidor_juego.contexto import BaseContexto, ContextoArchivo
from persistidor_juego.mapeador import MapeadorArchivoJuego, MapeadorTestigo


class FactoryContexto:
    """
    ✅ Factory especializado para contextos de persistencia.

    📖 RESPONSABILIDAD ÚNICA:
    Crear el contexto con la estrategia de almacenamiento y el mapeador
    de la entidad que va a guardar.
    """

    TIPOS = ('archivo',)
    ENTIDADES = {
        'testigo': MapeadorTestigo,
        'juego': MapeadorArchivoJuego,
    }

    @staticmethod
    def crear(tipo_contexto: str, config: Dict[str, Any]) -> BaseContexto:
        """
        🏭 FACTORY METHOD - Crea contexto con estrategia específica.

        :param tipo_contexto: 'archivo' (un documento JSON por entidad)
        :param config: {'recurso': directorio, 'entidad': 'testigo' | 'juego'}
        :raises ValueError: si el tipo o la entidad no están soportados, o falta 'recurso'

        📋 CONFIGURACIÓN JSON EJEMPLO:
        ```json
        "repositorio_testigos": {
          "tipo": "archivo",
          "recurso": "./testigos"
        }
        ```
        """
        recurso = config.get('recurso')
        if not recurso:
            raise ValueError(
                "Falta parámetro obligatorio 'recurso' en la configuración del contexto"
            )

        entidad = config.get('entidad', 'testigo')
        if entidad not in FactoryContexto.ENTIDADES:
            raise ValueError(
                f"Entidad no soportada: '{entidad}'. "
                f"Valores válidos: {', '.join(repr(e) for e in FactoryContexto.ENTIDADES)}"
            )

        if tipo_contexto == 'archivo':
            contexto = ContextoArchivo(recurso, FactoryContexto.ENTIDADES[entidad]())
        else:
            raise ValueError(
                f"Tipo de contexto no soportado: '{tipo_contexto}'. "
                f"Valores válidos: 'archivo'"
            )

        return contexto
