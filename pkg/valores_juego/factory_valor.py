"""
Factory de Reglas de Asignación - Patrón Factory + Configuración Externa

Crea reglas por su nombre canónico, con los parámetros de la sección
`valores` de config.json (pesos de φ², referencia de φ⁵).

Versión: 1.0.0
"""
from typing import Any, Dict, Optional

from valores_juego.valor import (
    BaseValor,
    Pesos,
    ValorNulo,
    ValorOwen,
    ValorOwenMarginal,
    ValorOwenP,
    ValorPhi1,
    ValorPhi2,
    ValorPhi3,
    ValorPhi4,
    ValorPhi5,
    ValorPhi5Portador,
    ValorSE,
    ValorShapleyCiego,
)


class FactoryValor:
    """
    ✅ Factory especializado para reglas de asignación.

    📖 RESPONSABILIDAD ÚNICA:
    Traducir un nombre canónico y su configuración en una instancia de BaseValor.
    'shapley' es un alias de 'shapley-blind'.
    """

    NOMBRES = (
        'zero', 'shapley', 'shapley-blind', 'owen', 'owen-marginal', 'se',
        'phi1', 'phi2', 'phi3', 'owen-p', 'phi4', 'phi5', 'phi5-carrier',
    )

    @staticmethod
    def crear(nombre: str, config: Optional[Dict[str, Any]] = None) -> BaseValor:
        """
        🏭 FACTORY METHOD - Crea la regla indicada.

        :param nombre: nombre canónico (ver NOMBRES)
        :param config: parámetros de la regla
            - 'phi2': {'pesos': 'id+1' | {id: peso}}
            - 'phi5': {'referencia': id de jugador}
        :raises ValueError: si el nombre no está soportado
        :raises ErrorValor: si los parámetros son inválidos
        """
        config = config or {}

        if nombre == 'zero':
            valor = ValorNulo()

        elif nombre in ('shapley', 'shapley-blind'):
            valor = ValorShapleyCiego(nombre)

        elif nombre == 'owen':
            valor = ValorOwen()

        elif nombre == 'owen-marginal':
            valor = ValorOwenMarginal()

        elif nombre == 'se':
            valor = ValorSE()

        elif nombre == 'phi1':
            valor = ValorPhi1()

        elif nombre == 'phi2':
            pesos = config.get('pesos', 'id+1')
            valor = ValorPhi2(Pesos() if pesos == 'id+1' else Pesos(pesos))

        elif nombre == 'phi3':
            valor = ValorPhi3()

        elif nombre == 'owen-p':
            valor = ValorOwenP()

        elif nombre == 'phi4':
            valor = ValorPhi4()

        elif nombre == 'phi5':
            valor = ValorPhi5(config.get('referencia'))

        elif nombre == 'phi5-carrier':
            valor = ValorPhi5Portador()

        else:
            raise ValueError(
                f"Regla de asignación no soportada: '{nombre}'. "
                f"Valores válidos: {', '.join(repr(n) for n in FactoryValor.NOMBRES)}"
            )

        return valor
