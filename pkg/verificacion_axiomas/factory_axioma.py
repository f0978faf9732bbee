"""
Factory de Axiomas

Crea verificadores por su nombre canónico ('E', 'A', 'N', 'NPO', 'S', 'SWU',
'SBU', 'M', 'UDM_md', 'DMU_md', 'MBU-', 'DMU_md-', 'IUM+', 'IAG', 'MBU-hs').

Versión: 1.0.0
"""
from typing import Dict, Type

from verificacion_axiomas.axioma import (
    AxiomaAditividad,
    AxiomaAltamenteSimetricasEntreUniones,
    AxiomaDependenciaDebilEntreUniones,
    AxiomaEficiencia,
    AxiomaInvarianciaEntreJuegos,
    AxiomaJugadorNulo,
    AxiomaMarginalidad,
    AxiomaMarginalidadDiferencialDentroDeUniones,
    AxiomaMarginalidadDiferencialEntreUniones,
    AxiomaMarginalidadDiferencialInterUniones,
    AxiomaMarginalidadEntreUniones,
    AxiomaSalidaJugadorNulo,
    AxiomaSimetria,
    AxiomaSimetriaDentroDeUniones,
    AxiomaSimetriaEntreUniones,
    BaseAxioma,
)


class FactoryAxioma:
    """✅ Factory especializado para verificadores de axiomas."""

    _CLASES: Dict[str, Type[BaseAxioma]] = {
        clase.nombre: clase
        for clase in (
            AxiomaEficiencia,
            AxiomaAditividad,
            AxiomaJugadorNulo,
            AxiomaSalidaJugadorNulo,
            AxiomaSimetria,
            AxiomaSimetriaDentroDeUniones,
            AxiomaSimetriaEntreUniones,
            AxiomaMarginalidad,
            AxiomaMarginalidadDiferencialDentroDeUniones,
            AxiomaMarginalidadDiferencialEntreUniones,
            AxiomaDependenciaDebilEntreUniones,
            AxiomaMarginalidadDiferencialInterUniones,
            AxiomaMarginalidadEntreUniones,
            AxiomaInvarianciaEntreJuegos,
            AxiomaAltamenteSimetricasEntreUniones,
        )
    }
    NOMBRES = tuple(_CLASES)

    @staticmethod
    def crear(nombre: str) -> BaseAxioma:
        """
        🏭 FACTORY METHOD - Crea el verificador del axioma indicado.

        :raises ValueError: si el axioma no está soportado
        """
        clase = FactoryAxioma._CLASES.get(nombre)
        if clase is None:
            raise ValueError(
                f"Axioma no soportado: '{nombre}'. "
                f"Valores válidos: {', '.join(repr(n) for n in FactoryAxioma.NOMBRES)}"
            )
        return clase()
