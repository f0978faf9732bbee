"""
Axiomas verificables sobre familias finitas de juegos.

🎯 RESPONSABILIDAD:
Cada axioma revisa, ítem por ítem de la familia, su hipótesis con los
predicados exactos y, donde se cumple, la igualdad de su conclusión. La
primera violación en el orden de la familia es el testigo.

🏗️ PATRÓN STRATEGY:
- BaseAxioma: contrato común (verificar, revisar, reverificar)
- axiomas de un juego: E, N, NPO, S, SWU, SBU, MBU-, MBU-hs
- axiomas de dos juegos: A, M, IUM+, UDM_md, DMU_md, DMU_md-, IAG

Versión: 1.0.0
"""
from abc import ABCMeta, abstractmethod
from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterable, Optional, Sequence, Tuple

from dominio_juego import Asignacion, JuegoCS, posiciones
from predicados_juego import (
    es_jugador_nulo,
    juegos_mutuamente_dependientes_por_uniones,
    mismas_contribuciones_entre_uniones,
    mismas_contribuciones_marginales,
    son_mutuamente_dependientes,
    son_simetricos,
    uniones_altamente_mutuamente_dependientes,
    uniones_altamente_simetricas,
    uniones_mutuamente_dependientes,
    uniones_simetricas,
)
from valores_juego import BaseValor

from verificacion_axiomas.familia import FamiliaJuegos
from verificacion_axiomas.veredicto import Resultado, Testigo, VeredictoAxioma

Calculo = Callable[[JuegoCS], Asignacion]
Revision = Tuple[int, Optional[Testigo]]


class BaseAxioma(metaclass=ABCMeta):
    """
    🏗️ ABSTRACCIÓN BASE - Axioma sobre reglas de asignación.

    🎯 CONTRATO:
    - `revisar(item, calcular, regla)` devuelve cuántas instancias no vacías de
      la hipótesis revisó en el ítem y la primera violación, si la hay
    - `verificar(valor, familia)` recorre la familia en orden y reverifica el
      testigo recalculando la regla sin memoria
    """
    nombre = ''
    enunciado = ''
    sobre_pares = False

    def items(self, familia: FamiliaJuegos) -> Sequence:
        return familia.pares if self.sobre_pares else familia.juegos

    def verificar(self, valor: BaseValor, familia: FamiliaJuegos) -> VeredictoAxioma:
        items = self.items(familia)
        hipotesis = 0
        for item in items:
            cantidad, testigo = self.revisar(item, valor.calcular, valor.nombre)
            hipotesis += cantidad
            if testigo is not None:
                return VeredictoAxioma(self.nombre, valor.nombre, Resultado.FALLA, len(items),
                                       hipotesis, testigo, self.reverificar(valor, testigo))
        resultado = Resultado.PASA if hipotesis else Resultado.VACUO
        return VeredictoAxioma(self.nombre, valor.nombre, resultado, len(items), hipotesis)

    def reverificar(self, valor: BaseValor, testigo: Testigo) -> bool:
        """True si el testigo vuelve a violar el axioma con los mismos dos lados."""
        item = tuple(testigo.juegos) if self.sobre_pares else testigo.juegos[0]
        _, nuevo = self.revisar(item, valor.calcular_sin_cache, valor.nombre)
        return (nuevo is not None
                and nuevo.lado_izquierdo == testigo.lado_izquierdo
                and nuevo.lado_derecho == testigo.lado_derecho)

    @abstractmethod
    def revisar(self, item, calcular: Calculo, regla: str) -> Revision:
        """Revisa un ítem de la familia."""

    def _testigo(self, regla: str, juegos: Iterable[JuegoCS], izquierdo: Fraction, derecho: Fraction,
                 descripcion: str, jugadores: Iterable[int] = (), uniones: Iterable[int] = ()) -> Testigo:
        return Testigo(self.nombre, regla, tuple(juegos), izquierdo, derecho, descripcion,
                       tuple(jugadores), tuple(uniones))

    def __repr__(self) -> str:
        return f"{type(self).__name__}('{self.nombre}')"


def _nulos(juego_cs: JuegoCS):
    juego = juego_cs.juego
    return [i for i in juego.jugadores if es_jugador_nulo(juego, i)]


# =============================================================================
# AXIOMAS DE UN JUEGO
# =============================================================================

class AxiomaEficiencia(BaseAxioma):
    nombre = 'E'
    enunciado = 'Σ_{i∈N} φ_i = v(N)'

    def revisar(self, juego_cs, calcular, regla):
        total = calcular(juego_cs).total()
        esperado = juego_cs.juego.valor_total
        if total != esperado:
            return 1, self._testigo(regla, (juego_cs,), total, esperado,
                                    f"Σ φ_i = {total} y v(N) = {esperado}")
        return 1, None


class AxiomaJugadorNulo(BaseAxioma):
    nombre = 'N'
    enunciado = 'φ_i = 0 si i es nulo en v'

    def revisar(self, juego_cs, calcular, regla):
        nulos = _nulos(juego_cs)
        if not nulos:
            return 0, None
        asignacion = calcular(juego_cs)
        for cantidad, i in enumerate(nulos, 1):
            if asignacion[i] != 0:
                return cantidad, self._testigo(regla, (juego_cs,), asignacion[i], Fraction(0),
                                               f"el jugador nulo {i} recibe {asignacion[i]}", jugadores=(i,))
        return len(nulos), None


class AxiomaSalidaJugadorNulo(BaseAxioma):
    nombre = 'NPO'
    enunciado = 'φ_j(N, v, ℬ) = φ_j(N∖{i}, v, ℬ|_{N∖{i}}) si i es nulo en v'

    def revisar(self, juego_cs, calcular, regla):
        juego = juego_cs.juego
        if juego.n < 2:
            return 0, None
        nulos = _nulos(juego_cs)
        if not nulos:
            return 0, None
        completa = calcular(juego_cs)
        for cantidad, i in enumerate(nulos, 1):
            reducido = juego_cs.restringido(juego.gran_coalicion & ~(1 << juego.posicion(i)))
            parcial = calcular(reducido)
            for j in reducido.jugadores:
                if completa[j] != parcial[j]:
                    return cantidad, self._testigo(
                        regla, (juego_cs,), completa[j], parcial[j],
                        f"al quitar el jugador nulo {i}, el pago de {j} pasa de {completa[j]} a {parcial[j]}",
                        jugadores=(i, j),
                    )
        return len(nulos), None


class _AxiomaPagosSimetricos(BaseAxioma):
    """φ_i = φ_j para los pares candidatos simétricos en v."""

    @abstractmethod
    def _candidatos(self, juego_cs: JuegoCS) -> Iterable[Tuple[int, int]]:
        """Pares (i, j) a los que se aplica la hipótesis."""

    def revisar(self, juego_cs, calcular, regla):
        juego = juego_cs.juego
        hipotesis = 0
        asignacion = None
        for i, j in self._candidatos(juego_cs):
            if not son_simetricos(juego, i, j):
                continue
            hipotesis += 1
            asignacion = asignacion or calcular(juego_cs)
            if asignacion[i] != asignacion[j]:
                return hipotesis, self._testigo(
                    regla, (juego_cs,), asignacion[i], asignacion[j],
                    f"los jugadores simétricos {i} y {j} reciben {asignacion[i]} y {asignacion[j]}",
                    jugadores=(i, j),
                )
        return hipotesis, None


class AxiomaSimetria(_AxiomaPagosSimetricos):
    nombre = 'S'
    enunciado = 'φ_i = φ_j si i, j son simétricos en v'

    def _candidatos(self, juego_cs):
        return combinations(juego_cs.jugadores, 2)


class AxiomaSimetriaDentroDeUniones(_AxiomaPagosSimetricos):
    nombre = 'SWU'
    enunciado = 'φ_i = φ_j si i, j ∈ B son simétricos en v'

    def _candidatos(self, juego_cs):
        for bloque in juego_cs.estructura.bloques():
            yield from combinations(bloque, 2)


class _AxiomaTotalesIguales(BaseAxioma):
    """Σ_{B_p} φ = Σ_{B_q} φ para los pares de uniones que cumplen la hipótesis."""

    @abstractmethod
    def _hipotesis(self, juego_cs: JuegoCS, p: int, q: int) -> bool:
        """Hipótesis sobre el par de uniones (p, q)."""

    def revisar(self, juego_cs, calcular, regla):
        estructura = juego_cs.estructura
        hipotesis = 0
        asignacion = None
        for p, q in combinations(range(estructura.m), 2):
            if not self._hipotesis(juego_cs, p, q):
                continue
            hipotesis += 1
            asignacion = asignacion or calcular(juego_cs)
            total_p = asignacion.total(estructura.uniones[p])
            total_q = asignacion.total(estructura.uniones[q])
            if total_p != total_q:
                return hipotesis, self._testigo(
                    regla, (juego_cs,), total_p, total_q,
                    f"las uniones {p} y {q} reciben en total {total_p} y {total_q}",
                    uniones=(p, q),
                )
        return hipotesis, None


class AxiomaSimetriaEntreUniones(_AxiomaTotalesIguales):
    nombre = 'SBU'
    enunciado = 'Σ_{B_p} φ = Σ_{B_q} φ si B_p, B_q son simétricas en v'

    def _hipotesis(self, juego_cs, p, q):
        return uniones_simetricas(juego_cs, p, q).se_cumple


class AxiomaDependenciaDebilEntreUniones(_AxiomaTotalesIguales):
    nombre = 'MBU-'
    enunciado = 'Σ_{B_p} φ = Σ_{B_q} φ si B_p, B_q son altamente mutuamente dependientes en v'

    def _hipotesis(self, juego_cs, p, q):
        return uniones_altamente_mutuamente_dependientes(juego_cs, p, q).se_cumple


class AxiomaAltamenteSimetricasEntreUniones(_AxiomaTotalesIguales):
    nombre = 'MBU-hs'
    enunciado = 'Σ_{B_p} φ = Σ_{B_q} φ si B_p, B_q son altamente simétricas en v'

    def _hipotesis(self, juego_cs, p, q):
        return uniones_altamente_simetricas(juego_cs, p, q).se_cumple


# =============================================================================
# AXIOMAS DE DOS JUEGOS
# =============================================================================

class AxiomaAditividad(BaseAxioma):
    nombre = 'A'
    enunciado = 'φ(v) + φ(w) = φ(v + w)'
    sobre_pares = True

    def revisar(self, par, calcular, regla):
        cs_v, cs_w = par
        separadas = calcular(cs_v) + calcular(cs_w)
        conjunta = calcular(cs_v.con_juego(cs_v.juego + cs_w.juego))
        for i, izquierdo, derecho in zip(cs_v.jugadores, separadas.pagos, conjunta.pagos):
            if izquierdo != derecho:
                return 1, self._testigo(regla, par, izquierdo, derecho,
                                        f"el jugador {i} recibe {izquierdo} por separado y {derecho} en v + w",
                                        jugadores=(i,))
        return 1, None


class _AxiomaPagoInvariante(BaseAxioma):
    """φ_i(v) = φ_i(w) para cada jugador que cumple la hipótesis."""
    sobre_pares = True

    @abstractmethod
    def _hipotesis(self, cs_v: JuegoCS, cs_w: JuegoCS, i: int) -> bool:
        """Hipótesis para el jugador i."""

    def revisar(self, par, calcular, regla):
        cs_v, cs_w = par
        hipotesis = 0
        for i in cs_v.jugadores:
            if not self._hipotesis(cs_v, cs_w, i):
                continue
            hipotesis += 1
            en_v, en_w = calcular(cs_v)[i], calcular(cs_w)[i]
            if en_v != en_w:
                return hipotesis, self._testigo(regla, par, en_v, en_w,
                                                f"el jugador {i} recibe {en_v} en v y {en_w} en w",
                                                jugadores=(i,))
        return hipotesis, None


class AxiomaMarginalidad(_AxiomaPagoInvariante):
    nombre = 'M'
    enunciado = 'φ_i(v) = φ_i(w) si i tiene las mismas contribuciones marginales en v y w'

    def _hipotesis(self, cs_v, cs_w, i):
        return mismas_contribuciones_marginales(cs_v, cs_w, i)


class AxiomaMarginalidadEntreUniones(_AxiomaPagoInvariante):
    nombre = 'IUM+'
    enunciado = 'φ_i(v) = φ_i(w) si i tiene las mismas contribuciones entre uniones en v y w'

    def _hipotesis(self, cs_v, cs_w, i):
        return mismas_contribuciones_entre_uniones(cs_v, cs_w, i).se_cumple


class AxiomaMarginalidadDiferencialDentroDeUniones(BaseAxioma):
    nombre = 'UDM_md'
    enunciado = 'φ_i(v) − φ_j(v) = φ_i(w) − φ_j(w) si i, j ∈ B son mutuamente dependientes en v − w'
    sobre_pares = True

    def revisar(self, par, calcular, regla):
        cs_v, cs_w = par
        diferencia = cs_v.juego - cs_w.juego
        hipotesis = 0
        for bloque in cs_v.estructura.bloques():
            for i, j in combinations(bloque, 2):
                if not son_mutuamente_dependientes(diferencia, i, j):
                    continue
                hipotesis += 1
                en_v, en_w = calcular(cs_v), calcular(cs_w)
                izquierdo, derecho = en_v[i] - en_v[j], en_w[i] - en_w[j]
                if izquierdo != derecho:
                    return hipotesis, self._testigo(
                        regla, par, izquierdo, derecho,
                        f"φ_{i} − φ_{j} vale {izquierdo} en v y {derecho} en w",
                        jugadores=(i, j),
                    )
        return hipotesis, None


class _AxiomaDiferenciasEntreUniones(BaseAxioma):
    """Σ_{B_p} (φ(v) − φ(w)) = Σ_{B_q} (φ(v) − φ(w)) según una hipótesis sobre v − w."""
    sobre_pares = True

    @abstractmethod
    def _hipotesis(self, cs_diferencia: JuegoCS, p: int, q: int) -> bool:
        """Hipótesis sobre el par de uniones en v − w."""

    def revisar(self, par, calcular, regla):
        cs_v, cs_w = par
        cs_diferencia = cs_v.con_juego(cs_v.juego - cs_w.juego)
        estructura = cs_v.estructura
        hipotesis = 0
        for p, q in combinations(range(estructura.m), 2):
            if not self._hipotesis(cs_diferencia, p, q):
                continue
            hipotesis += 1
            cambio = calcular(cs_v) - calcular(cs_w)
            izquierdo = cambio.total(estructura.uniones[p])
            derecho = cambio.total(estructura.uniones[q])
            if izquierdo != derecho:
                return hipotesis, self._testigo(
                    regla, par, izquierdo, derecho,
                    f"el total de la unión {p} cambia {izquierdo} y el de la unión {q} cambia {derecho}",
                    uniones=(p, q),
                )
        return hipotesis, None


class AxiomaMarginalidadDiferencialEntreUniones(_AxiomaDiferenciasEntreUniones):
    nombre = 'DMU_md'
    enunciado = 'cambios de total iguales si B_p, B_q son mutuamente dependientes en v − w'

    def _hipotesis(self, cs_diferencia, p, q):
        return uniones_mutuamente_dependientes(cs_diferencia, p, q).se_cumple


class AxiomaMarginalidadDiferencialInterUniones(_AxiomaDiferenciasEntreUniones):
    nombre = 'DMU_md-'
    enunciado = 'cambios de total iguales si B_p, B_q son altamente mutuamente dependientes en v − w'

    def _hipotesis(self, cs_diferencia, p, q):
        return uniones_altamente_mutuamente_dependientes(cs_diferencia, p, q).se_cumple


def hipotesis_literal_inter_uniones(cs_v: JuegoCS, cs_w: JuegoCS, p: int, q: int) -> bool:
    """
    Hipótesis de DMU_md- tal como se enuncia: para todo i ∈ B_p, j ∈ B_q y
    S ⊆ N∖{i,j}, i y j tienen en S la misma contribución marginal en v y en w.
    """
    estructura = cs_v.estructura
    valores_v, valores_w = cs_v.juego.valores, cs_w.juego.valores
    for k_i in posiciones(estructura.union(p)):
        for k_j in posiciones(estructura.union(q)):
            bit_i, bit_j = 1 << k_i, 1 << k_j
            for s in range(len(valores_v)):
                if s & (bit_i | bit_j):
                    continue
                for bit in (bit_i, bit_j):
                    if valores_v[s | bit] - valores_v[s] != valores_w[s | bit] - valores_w[s]:
                        return False
    return True


class AxiomaInvarianciaEntreJuegos(BaseAxioma):
    nombre = 'IAG'
    enunciado = ('φ_i(v) = φ_i(w) para i ∈ B_l si v, w son mutuamente dependientes por uniones, '
                 'B_l conserva la identidad productiva y sus no nulos son mutuamente dependientes en v y w')
    sobre_pares = True

    def revisar(self, par, calcular, regla):
        cs_v, cs_w = par
        if not juegos_mutuamente_dependientes_por_uniones(cs_v, cs_w):
            return 0, None
        v, w = cs_v.juego, cs_w.juego
        hipotesis = 0
        for l, bloque in enumerate(cs_v.estructura.bloques()):
            nulo_en_v = {i: es_jugador_nulo(v, i).se_cumple for i in bloque}
            if any(nulo_en_v[i] != es_jugador_nulo(w, i).se_cumple for i in bloque):
                continue
            activos = [i for i in bloque if not nulo_en_v[i]]
            if not all(son_mutuamente_dependientes(v, i, j) and son_mutuamente_dependientes(w, i, j)
                       for i, j in combinations(activos, 2)):
                continue
            hipotesis += 1
            en_v, en_w = calcular(cs_v), calcular(cs_w)
            for i in bloque:
                if en_v[i] != en_w[i]:
                    return hipotesis, self._testigo(
                        regla, par, en_v[i], en_w[i],
                        f"en la unión {l}, el jugador {i} recibe {en_v[i]} en v y {en_w[i]} en w",
                        jugadores=(i,), uniones=(l,),
                    )
        return hipotesis, None
