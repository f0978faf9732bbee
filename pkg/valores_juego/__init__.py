"""
Paquete valores_juego - Reglas de asignación exactas

Shapley, Owen por dos fórmulas independientes y las reglas que muestran la
independencia lógica de cada axioma, todas detrás del contrato BaseValor.

🏗️ PATRÓN STRATEGY + FACTORY:
- BaseValor: contrato común con memoria por JuegoCS
- FactoryValor: creación por nombre canónico
- formulas: funciones puras (shapley, owen_por_dividendos, owen_por_marginales, ...)

Versión: 1.0.0
"""

from .errores import ErrorValor, ErrorEvaluacionValor
from .formulas import (
    shapley,
    owen_por_dividendos,
    owen_por_marginales,
    totales_por_union,
    primera_union_inconsistente,
    valor_se,
    valor_phi2,
    valor_phi3_uniforme,
    valor_owen_p,
    corregir_por_individuales,
)
from .valor import (
    Pesos,
    BaseValor,
    ValorNulo,
    ValorShapleyCiego,
    ValorOwen,
    ValorOwenMarginal,
    ValorSE,
    ValorPhi1,
    ValorPhi2,
    ValorPhi3,
    ValorOwenP,
    ValorPhi4,
    ValorPhi5,
    ValorPhi5Portador,
)
from .factory_valor import FactoryValor

__version__ = "1.0.0"
__author__ = "Equipo owen-axiomas"
__all__ = [
    'ErrorValor',
    'ErrorEvaluacionValor',
    'shapley',
    'owen_por_dividendos',
    'owen_por_marginales',
    'totales_por_union',
    'primera_union_inconsistente',
    'valor_se',
    'valor_phi2',
    'valor_phi3_uniforme',
    'valor_owen_p',
    'corregir_por_individuales',
    'Pesos',
    'BaseValor',
    'ValorNulo',
    'ValorShapleyCiego',
    'ValorOwen',
    'ValorOwenMarginal',
    'ValorSE',
    'ValorPhi1',
    'ValorPhi2',
    'ValorPhi3',
    'ValorOwenP',
    'ValorPhi4',
    'ValorPhi5',
    'ValorPhi5Portador',
    'FactoryValor',
]
