"""
Estructuras de coaliciones y juegos con estructura (N, v, ℬ).

🎯 RESPONSABILIDAD:
Representar la partición ℬ = {B₀, …, B_{m−1}} del plantel, el juego cociente
v^ℬ(R) = v(⋃_{r∈R} B_r), las restricciones ℬ|_T y la identidad que relaciona
los dividendos del cociente con los del juego original.

📐 CONVENCIÓN:
Las uniones se indexan desde 0 en orden canónico (ascendente por su menor
jugador). El juego cociente usa esos índices como ids de jugador.

Versión: 1.0.0
"""
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from dominio_juego.coalicion import bit_menor, cardinal, comprimir, posiciones
from dominio_juego.errores import EstructuraInvalidaError, PlantelIncompatibleError
from dominio_juego.juego import Juego, _Plantel, _validar_plantel, restringir


@dataclass(frozen=True)
class EstructuraCoaliciones(_Plantel):
    """
    Partición del plantel en uniones, cada una como máscara de bits.

    :param jugadores: plantel ascendente (el mismo del juego)
    :param uniones: máscaras no vacías, disjuntas, que cubren el plantel
    """
    jugadores: Tuple[int, ...]
    uniones: Tuple[int, ...]

    def __post_init__(self):
        plantel = _validar_plantel(self.jugadores)
        total = (1 << len(plantel)) - 1
        cubiertos = 0
        for union in self.uniones:
            if union <= 0 or union > total:
                raise EstructuraInvalidaError(
                    f"Unión vacía o fuera del plantel (máscara {union})"
                )
            if union & cubiertos:
                raise EstructuraInvalidaError("Las uniones deben ser disjuntas")
            cubiertos |= union
        if cubiertos != total:
            raise EstructuraInvalidaError("Las uniones no cubren todo el plantel")
        object.__setattr__(self, 'jugadores', plantel)
        object.__setattr__(self, 'uniones', tuple(sorted(self.uniones, key=lambda u: u & -u)))

    # -------------------------------------------------------------------------
    # Constructores
    # -------------------------------------------------------------------------

    @classmethod
    def desde_bloques(cls, jugadores: Sequence[int], bloques: Iterable[Iterable[int]]) -> 'EstructuraCoaliciones':
        """
        Construye la estructura a partir de listas de ids.

        :raises EstructuraInvalidaError: si los bloques no forman una partición
        """
        plantel = Juego.nulo(jugadores)
        mascaras = []
        vistos = set()
        for bloque in bloques:
            ids = list(bloque)
            if not ids:
                raise EstructuraInvalidaError("Bloque vacío en la estructura")
            for jugador in ids:
                if jugador in vistos:
                    raise EstructuraInvalidaError(f"Jugador {jugador} repetido en la estructura")
                vistos.add(jugador)
            try:
                mascaras.append(plantel.mascara(ids))
            except ValueError as ex:
                raise EstructuraInvalidaError(str(ex)) from ex
        return cls(plantel.jugadores, tuple(mascaras))

    @classmethod
    def singletons(cls, jugadores: Sequence[int]) -> 'EstructuraCoaliciones':
        """ℬⁿ: cada jugador forma su propia unión."""
        plantel = _validar_plantel(jugadores)
        return cls(plantel, tuple(1 << k for k in range(len(plantel))))

    @classmethod
    def total(cls, jugadores: Sequence[int]) -> 'EstructuraCoaliciones':
        """ℬᴺ: una única unión con todo el plantel."""
        plantel = _validar_plantel(jugadores)
        return cls(plantel, ((1 << len(plantel)) - 1,))

    # -------------------------------------------------------------------------
    # Consultas
    # -------------------------------------------------------------------------

    @property
    def m(self) -> int:
        """Cantidad de uniones |M|."""
        return len(self.uniones)

    @cached_property
    def _indice_por_posicion(self) -> Tuple[int, ...]:
        indices = [0] * len(self.jugadores)
        for p, union in enumerate(self.uniones):
            for k in posiciones(union):
                indices[k] = p
        return tuple(indices)

    @cached_property
    def tamanios(self) -> Tuple[int, ...]:
        return tuple(cardinal(u) for u in self.uniones)

    def union(self, p: int) -> int:
        """:raises EstructuraInvalidaError: si el índice no existe"""
        if isinstance(p, bool) or not isinstance(p, int) or not 0 <= p < self.m:
            raise EstructuraInvalidaError(f"Índice de unión inválido: {p!r} (hay {self.m} uniones)")
        return self.uniones[p]

    def indice_union_posicion(self, posicion: int) -> int:
        return self._indice_por_posicion[posicion]

    def indice_union(self, jugador: int) -> int:
        """Índice p tal que jugador ∈ B_p."""
        return self._indice_por_posicion[self.posicion(jugador)]

    def union_de(self, jugador: int) -> int:
        """B(i) como máscara."""
        return self.uniones[self.indice_union(jugador)]

    def uniones_que_cortan(self, mascara: int) -> int:
        """Máscara sobre M con las uniones que intersecan a la coalición."""
        resultado = 0
        for k in posiciones(mascara):
            resultado |= 1 << self._indice_por_posicion[k]
        return resultado

    def cantidad_restringida(self, mascara: int) -> int:
        """m_T = |ℬ|_T|: cantidad de uniones que intersecan a T."""
        return cardinal(self.uniones_que_cortan(mascara))

    def reunion(self, indices: int) -> int:
        """Q(R) = ⋃_{r∈R} B_r para R dada como máscara sobre M."""
        resultado = 0
        for p in posiciones(indices):
            resultado |= self.uniones[p]
        return resultado

    @cached_property
    def reuniones(self) -> Tuple[int, ...]:
        """Q(R) para cada R ⊆ M, indexado por máscara de R."""
        tabla = [0] * (1 << self.m)
        for r in range(1, len(tabla)):
            tabla[r] = tabla[r & (r - 1)] | self.uniones[bit_menor(r)]
        return tuple(tabla)

    def es_de_singletons(self) -> bool:
        return self.m == len(self.jugadores)

    def es_total(self) -> bool:
        return self.m == 1

    def tamanios_iguales(self) -> bool:
        return len(set(self.tamanios)) == 1

    def bloques(self) -> Tuple[Tuple[int, ...], ...]:
        """Uniones como tuplas de ids, en orden canónico."""
        return tuple(self.coalicion(u) for u in self.uniones)

    def restringida(self, conservar: int) -> 'EstructuraCoaliciones':
        """
        ℬ|_T sobre el plantel reducido a T: descarta las uniones que quedan vacías.
        """
        if conservar == 0:
            raise EstructuraInvalidaError("No se puede restringir a la coalición vacía")
        self.validar_mascara(conservar)
        uniones = tuple(comprimir(u, conservar) for u in self.uniones if u & conservar)
        return EstructuraCoaliciones(self.coalicion(conservar), uniones)


def restringir_estructura(estructura: EstructuraCoaliciones, conservar: int) -> EstructuraCoaliciones:
    return estructura.restringida(conservar)


def particiones(jugadores: Sequence[int]) -> Iterator[EstructuraCoaliciones]:
    """
    Todas las particiones del plantel (número de Bell), en orden determinista.

    Cada partición de los primeros k jugadores se extiende ubicando al jugador
    k+1 en cada bloque existente o en un bloque nuevo.
    """
    plantel = _validar_plantel(jugadores)

    def _extender(k: int, bloques: List[int]) -> Iterator[List[int]]:
        if k == len(plantel):
            yield bloques
            return
        bit = 1 << k
        for indice in range(len(bloques)):
            ampliados = list(bloques)
            ampliados[indice] |= bit
            yield from _extender(k + 1, ampliados)
        yield from _extender(k + 1, bloques + [bit])

    for bloques in _extender(0, []):
        yield EstructuraCoaliciones(plantel, tuple(bloques))


@dataclass(frozen=True)
class JuegoCS:
    """Juego con estructura de coaliciones (N, v, ℬ)."""
    juego: Juego
    estructura: EstructuraCoaliciones

    def __post_init__(self):
        if not self.juego.mismo_plantel(self.estructura):
            raise PlantelIncompatibleError(
                f"La estructura no particiona el plantel del juego: "
                f"{list(self.estructura.jugadores)} vs {list(self.juego.jugadores)}"
            )

    @property
    def jugadores(self) -> Tuple[int, ...]:
        return self.juego.jugadores

    def restringido(self, conservar: int) -> 'JuegoCS':
        """(T, v|_T, ℬ|_T)."""
        return JuegoCS(restringir(self.juego, conservar), self.estructura.restringida(conservar))

    def con_juego(self, juego: Juego) -> 'JuegoCS':
        """Mismo plantel y estructura, otro juego."""
        return JuegoCS(juego, self.estructura)


def juego_cociente(juego_cs: JuegoCS) -> Juego:
    """v^ℬ sobre M = {0, …, m−1}."""
    estructura = juego_cs.estructura
    valores = juego_cs.juego.valores
    return Juego(
        tuple(range(estructura.m)),
        tuple(valores[q] for q in estructura.reuniones),
    )


# =============================================================================
# IDENTIDAD DE DIVIDENDOS DEL COCIENTE
# =============================================================================

class LecturaIdentidad(Enum):
    """
    Dos lecturas del conjunto de coaliciones T asociado a R ⊆ M.

    ESTRICTA: T interseca exactamente a las uniones de R.
    LITERAL: T interseca a todas las uniones de R (y posiblemente otras).
    """
    ESTRICTA = 'estricta'
    LITERAL = 'literal'


@dataclass(frozen=True)
class VeredictoIdentidad:
    lectura: LecturaIdentidad
    se_cumple: bool
    coalicion_fallida: Optional[int] = None
    lado_cociente: Optional[Fraction] = None
    lado_suma: Optional[Fraction] = None


def identidad_dividendos_cociente(juego_cs: JuegoCS,
                                  lectura: LecturaIdentidad = LecturaIdentidad.ESTRICTA) -> VeredictoIdentidad:
    """
    Compara λ_R(v^ℬ) con Σ λ_T(v) sobre las T asociadas a R según la lectura.

    Ambos lados se calculan por caminos independientes: el izquierdo con la
    transformada del juego cociente, el derecho recorriendo los dividendos
    del juego original.

    :return: se_cumple, o la primera R (orden de máscara) donde difieren
    """
    estructura = juego_cs.estructura
    cociente = juego_cociente(juego_cs).dividendos
    tabla = juego_cs.juego.dividendos
    cortes = [(estructura.uniones_que_cortan(t), d) for t, d in tabla.no_nulos()]
    for r in range(1, 1 << estructura.m):
        if lectura is LecturaIdentidad.ESTRICTA:
            suma = sum((d for corte, d in cortes if corte == r), Fraction(0))
        else:
            suma = sum((d for corte, d in cortes if corte & r == r), Fraction(0))
        if suma != cociente.dividendo(r):
            return VeredictoIdentidad(lectura, False, r, cociente.dividendo(r), suma)
    return VeredictoIdentidad(lectura, True)

