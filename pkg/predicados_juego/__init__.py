"""
Paquete predicados_juego - Relaciones entre jugadores y entre uniones

Predicados exactos y decidibles sobre los que se formulan las hipótesis de
los axiomas: jugador nulo, necesario, simétricos, mutuamente dependientes;
sus versiones por uniones (vía el juego cociente) y las variantes
"altamente" (todo par cruzado de jugadores). Incluye las pruebas sobre pares
de juegos: identidad productiva, dependencia mutua por uniones y igualdad de
contribuciones marginales entre uniones.

Cada predicado falla con un testigo concreto.

Versión: 1.0.0
"""

from .reportes import (
    RelacionJugador,
    RelacionUnion,
    ReporteRelacionJugador,
    ReporteRelacionUnion,
    DiagnosticoUniones,
    ReporteMarginalesEntreUniones,
)
from .jugadores import (
    es_jugador_nulo,
    es_jugador_nulo_por_dividendos,
    es_jugador_necesario,
    es_jugador_necesario_por_dividendos,
    son_simetricos,
    son_mutuamente_dependientes,
    son_mutuamente_dependientes_por_dividendos,
    misma_identidad_productiva,
    portador,
)
from .uniones import (
    union_es_nula,
    union_es_necesaria,
    uniones_simetricas,
    uniones_mutuamente_dependientes,
    uniones_altamente_mutuamente_dependientes,
    uniones_altamente_simetricas,
    uniones_no_nulas,
    juegos_mutuamente_dependientes_por_uniones,
    mismas_contribuciones_entre_uniones,
    mismas_contribuciones_marginales,
    jugadores_de_union,
)

__version__ = "1.0.0"
__author__ = "Equipo owen-axiomas"
__all__ = [
    'RelacionJugador',
    'RelacionUnion',
    'ReporteRelacionJugador',
    'ReporteRelacionUnion',
    'DiagnosticoUniones',
    'ReporteMarginalesEntreUniones',
    'es_jugador_nulo',
    'es_jugador_nulo_por_dividendos',
    'es_jugador_necesario',
    'es_jugador_necesario_por_dividendos',
    'son_simetricos',
    'son_mutuamente_dependientes',
    'son_mutuamente_dependientes_por_dividendos',
    'misma_identidad_productiva',
    'portador',
    'union_es_nula',
    'union_es_necesaria',
    'uniones_simetricas',
    'uniones_mutuamente_dependientes',
    'uniones_altamente_mutuamente_dependientes',
    'uniones_altamente_simetricas',
    'uniones_no_nulas',
    'juegos_mutuamente_dependientes_por_uniones',
    'mismas_contribuciones_entre_uniones',
    'mismas_contribuciones_marginales',
    'jugadores_de_union',
]
