"""
Paquete verificacion_axiomas - Axiomas verificables e independencia

Verificadores exactos de los quince axiomas sobre familias finitas de juegos,
veredictos con testigos reverificados y las suites de independencia de las
tres caracterizaciones del valor de Owen.

Versión: 1.0.0
"""

from .errores import ErrorFamilia
from .familia import FamiliaJuegos
from .veredicto import Resultado, Testigo, VeredictoAxioma
from .axioma import (
    BaseAxioma,
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
    hipotesis_literal_inter_uniones,
)
from .factory_axioma import FactoryAxioma
from .independencia import (
    EstadoFila,
    FilaIndependencia,
    SuiteIndependencia,
    ResultadoFila,
    ReporteIndependencia,
    SUITES,
    EXPECTATIVAS,
    IMPLICACIONES,
    cumple_expectativa,
    evaluar_fila,
    ejecutar_independencia,
    verificar_implicaciones,
    buscar_testigo,
    buscar_uniones_altamente_simetricas_no_simetricas,
)

__version__ = "1.0.0"
__author__ = "Equipo owen-axiomas"
__all__ = [
    'ErrorFamilia',
    'FamiliaJuegos',
    'Resultado',
    'Testigo',
    'VeredictoAxioma',
    'BaseAxioma',
    'AxiomaEficiencia',
    'AxiomaAditividad',
    'AxiomaJugadorNulo',
    'AxiomaSalidaJugadorNulo',
    'AxiomaSimetria',
    'AxiomaSimetriaDentroDeUniones',
    'AxiomaSimetriaEntreUniones',
    'AxiomaMarginalidad',
    'AxiomaMarginalidadDiferencialDentroDeUniones',
    'AxiomaMarginalidadDiferencialEntreUniones',
    'AxiomaDependenciaDebilEntreUniones',
    'AxiomaMarginalidadDiferencialInterUniones',
    'AxiomaMarginalidadEntreUniones',
    'AxiomaInvarianciaEntreJuegos',
    'AxiomaAltamenteSimetricasEntreUniones',
    'hipotesis_literal_inter_uniones',
    'FactoryAxioma',
    'EstadoFila',
    'FilaIndependencia',
    'SuiteIndependencia',
    'ResultadoFila',
    'ReporteIndependencia',
    'SUITES',
    'EXPECTATIVAS',
    'IMPLICACIONES',
    'cumple_expectativa',
    'evaluar_fila',
    'ejecutar_independencia',
    'verificar_implicaciones',
    'buscar_testigo',
    'buscar_uniones_altamente_simetricas_no_simetricas',
]
