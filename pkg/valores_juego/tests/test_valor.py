"""
Tests para las reglas de asignación (BaseValor y sus estrategias)
"""
import random
from fractions import Fraction

import pytest

from dominio_juego import (
    EstructuraCoaliciones,
    Juego,
    JuegoCS,
    TablaDividendos,
    juego_aditivo,
    juego_desde_dividendos,
    particiones,
    restringir,
    unanimidad,
)
from valores_juego import (
    BaseValor,
    ErrorEvaluacionValor,
    ErrorValor,
    FactoryValor,
    Pesos,
    ValorNulo,
    ValorOwen,
    ValorOwenP,
    ValorPhi1,
    ValorPhi2,
    ValorPhi3,
    ValorPhi4,
    ValorPhi5,
    ValorPhi5Portador,
    ValorSE,
    ValorShapleyCiego,
    shapley,
)

SEMILLA = 909


def cs(juego, bloques):
    return JuegoCS(juego, EstructuraCoaliciones.desde_bloques(juego.jugadores, bloques))


def singletons(juego):
    return JuegoCS(juego, EstructuraCoaliciones.singletons(juego.jugadores))


def pares_aleatorios(cantidad, n_max=4):
    rng = random.Random(SEMILLA)
    estructuras = {n: list(particiones(tuple(range(1, n + 1)))) for n in range(1, n_max + 1)}

    def juego(jugadores):
        tabla = (Fraction(0),) + tuple(
            Fraction(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range((1 << len(jugadores)) - 1)
        )
        return juego_desde_dividendos(TablaDividendos(jugadores, tabla))

    for _ in range(cantidad):
        jugadores = tuple(range(1, rng.randint(1, n_max) + 1))
        estructura = rng.choice(estructuras[len(jugadores)])
        yield JuegoCS(juego(jugadores), estructura), JuegoCS(juego(jugadores), estructura)


class TestBaseValor:
    """Tests del contrato común"""

    def test_no_instanciable(self):
        """Test: BaseValor es abstracta"""
        with pytest.raises(TypeError):
            BaseValor('x')

    def test_memoria(self):
        """Test: Dos cálculos sobre el mismo juego devuelven el mismo objeto"""
        valor = ValorOwen()
        juego_cs = cs(unanimidad((1, 2, 3), [1, 3]), [[1, 2], [3]])
        assert valor.calcular(juego_cs) is valor.calcular(juego_cs)
        assert valor.calcular_sin_cache(juego_cs) == valor.calcular(juego_cs)

    def test_error_envuelto(self):
        """Test: La falla de una regla lleva el juego que la provocó"""
        valor = ValorPhi2(Pesos({1: 1}))
        juego_cs = cs(unanimidad((1, 2), [1, 2]), [[1, 2]])
        with pytest.raises(ErrorEvaluacionValor) as info:
            valor.calcular(juego_cs)
        assert info.value.juego_cs is juego_cs
        assert info.value.regla == 'phi2'

    def test_linealidad(self):
        """Test: Las reglas lineales cumplen φ(v + w) = φ(v) + φ(w)"""
        lineales = [FactoryValor.crear(n) for n in FactoryValor.NOMBRES]
        lineales = [v for v in lineales if v.lineal]
        assert {v.nombre for v in lineales} == {
            'zero', 'shapley', 'shapley-blind', 'owen', 'owen-marginal', 'se', 'phi2', 'owen-p', 'phi4'
        }
        for cs_v, cs_w in pares_aleatorios(120):
            suma = cs_v.con_juego(cs_v.juego + cs_w.juego)
            for valor in lineales:
                assert valor.calcular(suma) == valor.calcular(cs_v) + valor.calcular(cs_w)


class TestReglasSimples:
    """Tests de φ⁰, Shapley ciego, SE y Owᴾ"""

    def test_nulo(self):
        """Test: φ⁰ es siempre el vector nulo"""
        juego_cs = cs(unanimidad((1, 2), [1, 2]), [[1], [2]])
        assert ValorNulo().calcular(juego_cs).pagos == (0, 0)

    def test_shapley_ciego(self):
        """Test: Ignora la estructura"""
        juego_cs = cs(unanimidad((1, 2, 3), [1, 3]), [[1, 2], [3]])
        assert ValorShapleyCiego().calcular(juego_cs).pagos == (Fraction(1, 2), 0, Fraction(1, 2))
        assert ValorShapleyCiego().calcular(cs(Juego.nulo((1, 2)), [[1, 2]])).pagos == (0, 0)

    def test_se_paga_al_jugador_nulo(self):
        """Test: SE con u_{1,3} y {{1,2},{3}}: el jugador 2 recibe 1/4"""
        juego_cs = cs(unanimidad((1, 2, 3), [1, 3]), [[1, 2], [3]])
        assert ValorSE().calcular(juego_cs).pagos == (Fraction(1, 4), Fraction(1, 4), Fraction(1, 2))

    def test_se_con_singletons_es_shapley(self):
        """Test: SE con ℬⁿ = Shapley"""
        for cs_v, _ in pares_aleatorios(100):
            juego_cs = singletons(cs_v.juego)
            assert ValorSE().calcular(juego_cs) == shapley(cs_v.juego)

    def test_se_juego_nulo(self):
        """Test: SE del juego nulo"""
        assert ValorSE().calcular(cs(Juego.nulo((1, 2, 3)), [[1, 2], [3]])).pagos == (0, 0, 0)

    def test_owen_p(self):
        """Test: Owᴾ con u_{1,3} y {{1,2},{3}} → (2/3, 0, 1/3)"""
        juego_cs = cs(unanimidad((1, 2, 3), [1, 3]), [[1, 2], [3]])
        assert ValorOwenP().calcular(juego_cs).pagos == (Fraction(2, 3), 0, Fraction(1, 3))

    def test_owen_p_pondera_uniones_por_tamanio(self):
        """Test: Owᴾ con u_N y {{1,2},{3}} → totales 2/3 y 1/3"""
        juego_cs = cs(unanimidad((1, 2, 3), [1, 2, 3]), [[1, 2], [3]])
        asignacion = ValorOwenP().calcular(juego_cs)
        assert asignacion.pagos == (Fraction(1, 3), Fraction(1, 3), Fraction(1, 3))

    def test_owen_p_con_singletons_es_shapley(self):
        """Test: Owᴾ con ℬⁿ = Shapley"""
        for cs_v, _ in pares_aleatorios(100):
            assert ValorOwenP().calcular(singletons(cs_v.juego)) == shapley(cs_v.juego)


class TestPhi1:
    """Tests de φ¹"""

    def test_singletons(self):
        """Test: u_{1} con ℬⁿ → (1, 0)"""
        assert ValorPhi1().calcular(singletons(unanimidad((1, 2), [1]))).pagos == (1, 0)

    def test_reparte_por_igual_entre_no_nulos(self):
        """Test: v(N) se reparte en partes iguales entre los no nulos"""
        juego = unanimidad((1, 2, 3), [1]) + unanimidad((1, 2, 3), [1, 2], 2)
        assert ValorPhi1().calcular(singletons(juego)).pagos == (Fraction(3, 2), Fraction(3, 2), 0)

    def test_otra_estructura_es_owen(self):
        """Test: Fuera de ℬⁿ coincide con Owen"""
        juego_cs = cs(Juego((1, 2), (0, 1, 2, 4)), [[1, 2]])
        assert ValorPhi1().calcular(juego_cs) == ValorOwen().calcular(juego_cs)

    def test_todos_nulos(self):
        """Test: Con todos los jugadores nulos, vector nulo"""
        assert ValorPhi1().calcular(singletons(Juego.nulo((1, 2, 3)))).pagos == (0, 0, 0)


class TestPhi2:
    """Tests de φ² y sus pesos"""

    def test_pesos_explicitos(self):
        """Test: u_{1,2}, ℬ = {{1,2}}, w = (1, 2) → (1/3, 2/3)"""
        juego_cs = cs(unanimidad((1, 2), [1, 2]), [[1, 2]])
        assert ValorPhi2(Pesos({1: 1, 2: 2})).calcular(juego_cs).pagos == (Fraction(1, 3), Fraction(2, 3))

    def test_pesos_iguales_dan_owen(self):
        """Test: Pesos iguales → Owen"""
        for cs_v, _ in pares_aleatorios(150):
            pesos = Pesos({j: 5 for j in cs_v.jugadores})
            assert ValorPhi2(pesos).calcular(cs_v) == ValorOwen().calcular(cs_v)

    def test_pesos_por_defecto(self):
        """Test: w_i = id + 1"""
        assert Pesos().para((0, 4)) == (1, 5)
        juego_cs = cs(unanimidad((1, 2), [1, 2]), [[1, 2]])
        assert ValorPhi2().calcular(juego_cs).pagos == (Fraction(2, 5), Fraction(3, 5))

    def test_juego_nulo(self):
        """Test: φ² del juego nulo"""
        assert ValorPhi2().calcular(cs(Juego.nulo((1, 2)), [[1, 2]])).pagos == (0, 0)

    @pytest.mark.parametrize("mapa", [{1: 0}, {1: -1}, {1: "x"}, {1: 1.5}])
    def test_pesos_invalidos(self, mapa):
        """Test: Pesos no positivos o inexactos"""
        with pytest.raises(ErrorValor):
            Pesos(mapa)

    def test_claves_de_texto(self):
        """Test: Claves leídas de JSON"""
        assert Pesos({"1": "1/2", "2": 3}).para((1, 2)) == (Fraction(1, 2), 3)


class TestPhi3:
    """Tests de φ³"""

    def test_uniones_de_igual_tamanio(self):
        """Test: u_{1,3} con {{1,2},{3,4}} → 1/2 para 1 y 3"""
        juego_cs = cs(unanimidad((1, 2, 3, 4), [1, 3]), [[1, 2], [3, 4]])
        assert ValorPhi3().calcular(juego_cs).pagos == (Fraction(1, 2), 0, Fraction(1, 2), 0)

    def test_singletons_es_shapley(self):
        """Test: Con ℬⁿ coincide con Shapley"""
        juego = unanimidad((1, 2, 3), [1, 2, 3])
        assert ValorPhi3().calcular(singletons(juego)) == shapley(juego)

    def test_tamanios_distintos_es_owen(self):
        """Test: Uniones de distinto tamaño → Owen"""
        juego_cs = cs(unanimidad((1, 2, 3), [1, 2, 3]), [[1, 2], [3]])
        assert ValorPhi3().calcular(juego_cs) == ValorOwen().calcular(juego_cs)

    def test_difiere_de_owen_con_tamanios_iguales(self):
        """Test: u_{1,3} + u_{1,2,3} con {{1,2},{3,4}}: el jugador 3 recibe 1/2 + 1/3"""
        jugadores = (1, 2, 3, 4)
        juego = unanimidad(jugadores, [1, 3]) + unanimidad(jugadores, [1, 2, 3])
        juego_cs = cs(juego, [[1, 2], [3, 4]])
        assert ValorPhi3().calcular(juego_cs)[3] == Fraction(5, 6)
        assert ValorOwen().calcular(juego_cs)[3] == 1


class TestPhi4:
    """Tests de φ⁴"""

    def test_aditivo(self):
        """Test: v({1}) = 1, v({2}) = 0, ℬ = {{1,2}} → (1/2, 1/2)"""
        juego_cs = cs(juego_aditivo((1, 2), {1: 1, 2: 0}), [[1, 2]])
        assert ValorPhi4().calcular(juego_cs).pagos == (Fraction(1, 2), Fraction(1, 2))

    def test_individuales_iguales_es_owen(self):
        """Test: Con valores individuales iguales en cada unión, Owen"""
        jugadores = (1, 2, 3)
        juego = juego_aditivo(jugadores, {1: 2, 2: 2, 3: 7}) + unanimidad(jugadores, [1, 3])
        juego_cs = cs(juego, [[1, 2], [3]])
        assert ValorPhi4().calcular(juego_cs) == ValorOwen().calcular(juego_cs)

    def test_juego_nulo(self):
        """Test: φ⁴ del juego nulo"""
        assert ValorPhi4().calcular(cs(Juego.nulo((1, 2)), [[1, 2]])).pagos == (0, 0)


class TestPhi5:
    """Tests de φ⁵ y su variante sobre el portador"""

    def test_sin_dividendo_total_es_owen(self):
        """Test: λ_N = 0 → Owen"""
        juego_cs = cs(juego_aditivo((1, 2), {1: 3, 2: 1}), [[1], [2]])
        assert ValorPhi5().calcular(juego_cs) == ValorOwen().calcular(juego_cs)

    def test_unanimidad_total(self):
        """Test: u_N en {1,2} con ℬⁿ y B′ = {1} → φ⁵₁ = 1/2"""
        asignacion = ValorPhi5().calcular(singletons(unanimidad((1, 2), [1, 2])))
        assert asignacion[1] == Fraction(1, 2)

    def test_referencia(self):
        """Test: B′ elegida por un jugador de referencia"""
        juego = juego_aditivo((1, 2, 3), {1: 1, 3: 2}) + unanimidad((1, 2, 3), [1, 2, 3], 3)
        juego_cs = cs(juego, [[1], [2, 3]])
        asignacion = ValorPhi5(referencia=3).calcular(juego_cs)
        owen = ValorOwen().calcular(juego_cs)
        assert asignacion[1] == owen[1]
        assert asignacion[2] == owen[2] + 1
        assert asignacion[3] == owen[3] - 1

    def test_referencia_ausente(self):
        """Test: Una referencia fuera del plantel usa la unión del menor id"""
        juego = juego_aditivo((1, 2), {1: 1}) + unanimidad((1, 2), [1, 2], 2)
        juego_cs = cs(juego, [[1], [2]])
        assert ValorPhi5(referencia=9).union_distinguida(juego_cs) == 0b01
        assert ValorPhi5(referencia=9).calcular(juego_cs) == ValorPhi5().calcular(juego_cs)

    def test_referencia_configurada_en_restricciones(self):
        """Test: Con referencia=3, las restricciones sin el jugador 3 se evalúan sin error"""
        juego = juego_aditivo((1, 2, 3), {1: 1, 3: 2}) + unanimidad((1, 2, 3), [1, 2, 3], 3)
        valor = FactoryValor.crear('phi5', {'referencia': 3})
        reducido = cs(juego, [[1], [2, 3]]).restringido(0b011)
        assert valor.calcular(reducido) == ValorPhi5().calcular(reducido)

    def test_juego_nulo(self):
        """Test: φ⁵ del juego nulo"""
        assert ValorPhi5().calcular(singletons(Juego.nulo((1, 2)))).pagos == (0, 0)

    def test_literal_depende_de_jugadores_nulos(self):
        """Test: Quitar un jugador nulo cambia el pago literal de φ⁵"""
        juego = unanimidad((1, 2, 3), [1]) + unanimidad((1, 2, 3), [1, 2])
        juego_cs = cs(juego, [[1, 2], [3]])
        reducido = juego_cs.restringido(0b011)
        assert ValorPhi5().calcular(juego_cs)[1] == Fraction(3, 2)
        assert ValorPhi5().calcular(reducido)[1] == 1

    def test_portador_invariante_ante_jugadores_nulos(self):
        """Test: phi5-carrier no cambia al quitar un jugador nulo"""
        juego = unanimidad((1, 2, 3), [1]) + unanimidad((1, 2, 3), [1, 2])
        juego_cs = cs(juego, [[1, 2], [3]])
        valor = ValorPhi5Portador()
        completo = valor.calcular(juego_cs)
        reducido = valor.calcular(juego_cs.restringido(0b011))
        assert completo[1] == reducido[1] == 1
        assert completo[2] == reducido[2] == 1
        assert completo[3] == 0

    def test_portador_eficiente(self):
        """Test: phi5-carrier conserva la eficiencia"""
        for cs_v, _ in pares_aleatorios(150):
            assert ValorPhi5Portador().calcular(cs_v).total() == cs_v.juego.valor_total

    def test_portador_sin_dividendo(self):
        """Test: λ_C = 0 → Owen"""
        juego = juego_aditivo((1, 2, 3), {1: 1, 2: 1})
        juego_cs = cs(juego, [[1, 2], [3]])
        assert ValorPhi5Portador().calcular(juego_cs) == ValorOwen().calcular(juego_cs)


class TestEficiencia:
    """Tests de eficiencia de todas las reglas salvo φ⁰"""

    def test_reparten_el_valor_total(self):
        """Test: Σ φ_i = v(N)"""
        reglas = [FactoryValor.crear(n) for n in FactoryValor.NOMBRES if n != 'zero']
        for cs_v, _ in pares_aleatorios(120):
            for valor in reglas:
                assert valor.calcular(cs_v).total() == cs_v.juego.valor_total, valor.nombre

    def test_restriccion_de_plantel(self):
        """Test: Las reglas aceptan subjuegos con plantel reducido"""
        juego_cs = cs(unanimidad((1, 2, 3), [1, 2]), [[1, 3], [2]])
        reducido = juego_cs.restringido(0b011)
        assert reducido.juego == restringir(juego_cs.juego, 0b011)
        assert ValorOwen().calcular(reducido).pagos == (Fraction(1, 2), Fraction(1, 2))
