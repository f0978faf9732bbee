"""
Reglas de asignación sobre juegos con estructura de coaliciones.

🎯 RESPONSABILIDAD:
Exponer cada regla φ: (N, v, ℬ) → ℚᴺ detrás de un contrato común, para que
el verificador de axiomas las use de manera intercambiable.

🏗️ PATRÓN STRATEGY:
- BaseValor: contrato común; memoriza resultados por JuegoCS
- ValorOwen / ValorOwenMarginal: el valor de Owen por sus dos fórmulas
- ValorShapleyCiego: Shapley ignorando la estructura
- ValorNulo, ValorSE, ValorPhi1..ValorPhi5, ValorOwenP, ValorPhi5Portador:
  reglas que separan los axiomas entre sí

Versión: 1.0.0
"""
import logging
from abc import ABCMeta, abstractmethod
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Optional, Tuple

from dominio_juego import (
    Asignacion,
    JuegoCS,
    a_racional,
    bit_menor,
    cardinal,
    posiciones,
)
from predicados_juego import portador

from valores_juego import formulas
from valores_juego.errores import ErrorEvaluacionValor, ErrorValor

logger = logging.getLogger('owen_axiomas.valores')

TAMANIO_CACHE = 8192


class Pesos:
    """
    Pesos exógenos w_i > 0 de φ².

    Sin mapa explícito se usa w_i = id + 1, definido para cualquier plantel.
    """

    def __init__(self, mapa: Optional[Dict[int, object]] = None):
        self._mapa = None
        if mapa is not None:
            self._mapa = {}
            for jugador, peso in mapa.items():
                try:
                    id_jugador = int(jugador)
                    valor = a_racional(peso)
                except (TypeError, ValueError) as ex:
                    raise ErrorValor(f"Peso mal formado para el jugador {jugador!r}: {peso!r}") from ex
                if valor <= 0:
                    raise ErrorValor(f"El peso del jugador {id_jugador} debe ser positivo, se recibió {valor}")
                self._mapa[id_jugador] = valor

    @property
    def es_por_defecto(self) -> bool:
        return self._mapa is None

    def para(self, jugadores: Tuple[int, ...]) -> Tuple[Fraction, ...]:
        """:raises ErrorValor: si falta el peso de algún jugador"""
        if self._mapa is None:
            return tuple(Fraction(j + 1) for j in jugadores)
        faltantes = [j for j in jugadores if j not in self._mapa]
        if faltantes:
            raise ErrorValor(f"Faltan pesos para los jugadores {faltantes}")
        return tuple(self._mapa[j] for j in jugadores)

    def __repr__(self) -> str:
        if self._mapa is None:
            return "Pesos(id+1)"
        return f"Pesos({ {j: str(w) for j, w in sorted(self._mapa.items())} })"


class BaseValor(metaclass=ABCMeta):
    """
    🏗️ ABSTRACCIÓN BASE - Regla de asignación.

    🎯 CONTRATO:
    - `calcular(cs)` es determinista y total sobre JuegoCS válidos
    - los resultados se memorizan por JuegoCS; `calcular_sin_cache` recalcula
    - toda falla se informa como ErrorEvaluacionValor con el juego que la causó

    :cvar lineal: True si φ(v + w) = φ(v) + φ(w) para toda estructura
    """
    lineal = False

    def __init__(self, nombre: str):
        self.nombre = nombre
        self._en_cache = lru_cache(maxsize=TAMANIO_CACHE)(self._calcular_protegido)

    def calcular(self, juego_cs: JuegoCS) -> Asignacion:
        return self._en_cache(juego_cs)

    def calcular_sin_cache(self, juego_cs: JuegoCS) -> Asignacion:
        return self._calcular_protegido(juego_cs)

    def _calcular_protegido(self, juego_cs: JuegoCS) -> Asignacion:
        try:
            return self._calcular(juego_cs)
        except ErrorEvaluacionValor:
            raise
        except Exception as ex:
            raise ErrorEvaluacionValor(self.nombre, juego_cs, ex) from ex

    @abstractmethod
    def _calcular(self, juego_cs: JuegoCS) -> Asignacion:
        """Evalúa la regla sin memoria."""

    def __repr__(self) -> str:
        return f"{type(self).__name__}('{self.nombre}')"


class ValorNulo(BaseValor):
    """φ⁰ = 𝟎."""
    lineal = True

    def __init__(self):
        super().__init__('zero')

    def _calcular(self, juego_cs):
        return Asignacion.nula(juego_cs.jugadores)


class ValorShapleyCiego(BaseValor):
    """Shapley del juego, sin mirar la estructura."""
    lineal = True

    def __init__(self, nombre: str = 'shapley-blind'):
        super().__init__(nombre)

    def _calcular(self, juego_cs):
        return formulas.shapley(juego_cs.juego)


class ValorOwen(BaseValor):
    """Owen por reparto de dividendos."""
    lineal = True

    def __init__(self):
        super().__init__('owen')

    def _calcular(self, juego_cs):
        return formulas.owen_por_dividendos(juego_cs)


class ValorOwenMarginal(BaseValor):
    """Owen por contribuciones marginales entre uniones."""
    lineal = True

    def __init__(self):
        super().__init__('owen-marginal')

    def _calcular(self, juego_cs):
        return formulas.owen_por_marginales(juego_cs)


class ValorSE(BaseValor):
    """Cada dividendo se reparte entre uniones y, dentro de cada una, por igual entre todos sus miembros."""
    lineal = True

    def __init__(self):
        super().__init__('se')

    def _calcular(self, juego_cs):
        return formulas.valor_se(juego_cs)


class ValorPhi1(BaseValor):
    """
    Con todas las uniones unitarias: 0 a los jugadores nulos y v(N)/|portador|
    a los demás (vector nulo si no hay portador). Owen en otro caso.
    """

    def __init__(self):
        super().__init__('phi1')

    def _calcular(self, juego_cs):
        if not juego_cs.estructura.es_de_singletons():
            return formulas.owen_por_dividendos(juego_cs)
        no_nulos = portador(juego_cs.juego)
        pagos = [Fraction(0)] * juego_cs.juego.n
        if no_nulos:
            cuota = juego_cs.juego.valor_total / cardinal(no_nulos)
            for k in posiciones(no_nulos):
                pagos[k] = cuota
        return Asignacion(juego_cs.jugadores, tuple(pagos))


class ValorPhi2(BaseValor):
    """Reparto ponderado dentro de cada unión, con pesos exógenos."""
    lineal = True

    def __init__(self, pesos: Optional[Pesos] = None):
        super().__init__('phi2')
        self.pesos = pesos if pesos is not None else Pesos()

    def _calcular(self, juego_cs):
        return formulas.valor_phi2(juego_cs, self.pesos.para(juego_cs.jugadores))


class ValorPhi3(BaseValor):
    """Fórmula ponderada por tamaño de unión si todas las uniones tienen el mismo tamaño; Owen si no."""

    def __init__(self):
        super().__init__('phi3')

    def _calcular(self, juego_cs):
        if juego_cs.estructura.tamanios_iguales():
            return formulas.valor_phi3_uniforme(juego_cs)
        return formulas.owen_por_dividendos(juego_cs)


class ValorOwenP(BaseValor):
    """Owen con las uniones ponderadas por su tamaño en el reparto entre uniones."""
    lineal = True

    def __init__(self):
        super().__init__('owen-p')

    def _calcular(self, juego_cs):
        return formulas.valor_owen_p(juego_cs)


class ValorPhi4(BaseValor):
    """Ow_i − v({i}) + promedio de v({j}) en B(i)."""
    lineal = True

    def __init__(self):
        super().__init__('phi4')

    def _calcular(self, juego_cs):
        asignacion = formulas.owen_por_dividendos(juego_cs)
        for union in juego_cs.estructura.uniones:
            asignacion = formulas.corregir_por_individuales(juego_cs, asignacion, union)
        return asignacion


class ValorPhi5(BaseValor):
    """
    Si λ_N(v) ≠ 0, los miembros de la unión distinguida B′ reciben
    Ow_i − v({i}) + promedio de v({j}) en B′; el resto, Owen.

    :param referencia: id de jugador cuya unión es B′; por defecto, o si el
        jugador no está en el plantel, la unión del menor id
    """

    def __init__(self, referencia: Optional[int] = None):
        super().__init__('phi5')
        self.referencia = referencia

    def union_distinguida(self, juego_cs: JuegoCS) -> int:
        if self.referencia is None:
            return juego_cs.estructura.uniones[0]
        if self.referencia not in juego_cs.jugadores:
            logger.debug("Jugador de referencia %d ausente de %s; se usa la unión del menor id",
                         self.referencia, list(juego_cs.jugadores))
            return juego_cs.estructura.uniones[0]
        return juego_cs.estructura.union_de(self.referencia)

    def _calcular(self, juego_cs):
        asignacion = formulas.owen_por_dividendos(juego_cs)
        juego = juego_cs.juego
        if juego.dividendos.dividendo(juego.gran_coalicion) == 0:
            return asignacion
        return formulas.corregir_por_individuales(juego_cs, asignacion, self.union_distinguida(juego_cs))


class ValorPhi5Portador(BaseValor):
    """
    Variante de φ⁵ invariante ante jugadores nulos: la condición mira λ_C(v)
    con C el portador, y la corrección se aplica en B′ ∩ C, con B′ la unión
    del menor jugador no nulo.
    """

    def __init__(self):
        super().__init__('phi5-carrier')

    def _calcular(self, juego_cs):
        asignacion = formulas.owen_por_dividendos(juego_cs)
        no_nulos = portador(juego_cs.juego)
        if not no_nulos or juego_cs.juego.dividendos.dividendo(no_nulos) == 0:
            return asignacion
        estructura = juego_cs.estructura
        distinguida = estructura.uniones[estructura.indice_union_posicion(bit_menor(no_nulos))]
        return formulas.corregir_por_individuales(juego_cs, asignacion, distinguida & no_nulos)
