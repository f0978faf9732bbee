"""
Tests para predicados de jugadores
"""
import random
from fractions import Fraction
from itertools import combinations

import pytest

from dominio_juego import (
    ErrorJuego,
    Juego,
    JugadorDesconocidoError,
    PlantelIncompatibleError,
    TablaDividendos,
    agregar_jugador_nulo,
    juego_aditivo,
    juego_desde_dividendos,
    unanimidad,
)
from predicados_juego import (
    RelacionJugador,
    es_jugador_necesario,
    es_jugador_necesario_por_dividendos,
    es_jugador_nulo,
    es_jugador_nulo_por_dividendos,
    misma_identidad_productiva,
    portador,
    son_mutuamente_dependientes,
    son_mutuamente_dependientes_por_dividendos,
    son_simetricos,
)

SEMILLA = 4242


def juegos_generados(n_max=5, por_tamanio=40):
    """Juegos con dividendos en {−1, 0, 1, 2}, con muchos ceros para ejercitar los predicados."""
    rng = random.Random(SEMILLA)
    for n in range(1, n_max + 1):
        for _ in range(por_tamanio):
            tabla = [Fraction(0)] + [
                Fraction(rng.choice((-1, 0, 0, 0, 1, 2))) for _ in range((1 << n) - 1)
            ]
            yield juego_desde_dividendos(TablaDividendos(tuple(range(1, n + 1)), tuple(tabla)))


class TestJugadorNulo:
    """Tests de jugador nulo"""

    def test_fuera_de_unanimidad(self):
        """Test: i ∉ T es nulo en u_T"""
        assert es_jugador_nulo(unanimidad((1, 2, 3), [1, 3]), 2).se_cumple

    def test_dentro_de_unanimidad(self):
        """Test: i ∈ T no es nulo; testigo S = T∖{i}"""
        juego = unanimidad((1, 2, 3), [1, 3])
        reporte = es_jugador_nulo(juego, 1)
        assert not reporte.se_cumple
        assert reporte.relacion is RelacionJugador.NULO
        assert reporte.testigo == juego.mascara([3])

    def test_jugador_agregado_sin_efecto(self):
        """Test: Un jugador incorporado por extensión del plantel es nulo"""
        juego = agregar_jugador_nulo(juego_aditivo((1, 2), {1: 3, 2: -1}), 5)
        assert es_jugador_nulo(juego, 5).se_cumple

    def test_jugador_desconocido(self):
        """Test: Id fuera del plantel"""
        with pytest.raises(JugadorDesconocidoError):
            es_jugador_nulo(Juego.nulo((1, 2)), 3)


class TestJugadorNecesario:
    """Tests de jugador necesario"""

    def test_miembro_de_unanimidad(self):
        """Test: i ∈ T es necesario en u_T"""
        assert es_jugador_necesario(unanimidad((1, 2, 3), [1, 3]), 3).se_cumple

    def test_no_necesario_con_testigo(self):
        """Test: Con λ{2}=2 el jugador 1 no es necesario (testigo {2})"""
        juego = Juego((1, 2), (0, 1, 2, 4))
        reporte = es_jugador_necesario(juego, 1)
        assert not reporte.se_cumple
        assert reporte.testigo == juego.mascara([2])

    def test_juego_nulo(self):
        """Test: En el juego nulo todos son necesarios (definición literal)"""
        juego = Juego.nulo((1, 2, 3))
        assert all(es_jugador_necesario(juego, i).se_cumple for i in (1, 2, 3))


class TestSimetria:
    """Tests de jugadores simétricos"""

    def test_miembros_de_unanimidad(self):
        """Test: i, j ∈ T son simétricos"""
        assert son_simetricos(unanimidad((1, 2, 3), [1, 2, 3]), 1, 3).se_cumple

    def test_unanimidad_singleton(self):
        """Test: u_{1} en {1,2}: 1 y 2 no son simétricos, testigo ∅"""
        reporte = son_simetricos(unanimidad((1, 2), [1]), 1, 2)
        assert not reporte.se_cumple
        assert reporte.testigo == 0

    def test_aditivo_con_valores_iguales(self):
        """Test: Juego aditivo con valores individuales iguales"""
        juego = juego_aditivo((1, 2, 3), {1: 2, 2: 2, 3: 2})
        assert son_simetricos(juego, 1, 2).se_cumple

    def test_mismo_jugador(self):
        """Test: i = j se rechaza"""
        with pytest.raises(ErrorJuego):
            son_simetricos(Juego.nulo((1, 2)), 1, 1)


class TestDependenciaMutua:
    """Tests de jugadores mutuamente dependientes"""

    def test_miembros_de_unanimidad(self):
        """Test: i, j ∈ T son mutuamente dependientes"""
        assert son_mutuamente_dependientes(unanimidad((1, 2, 3, 4), [1, 2, 4]), 1, 4).se_cumple

    def test_uno_dentro_y_otro_fuera(self):
        """Test: i ∈ T, j ∉ T no son mutuamente dependientes; testigo T∖{i}"""
        juego = unanimidad((1, 2, 3), [1, 3])
        reporte = son_mutuamente_dependientes(juego, 3, 2)
        assert not reporte.se_cumple
        assert reporte.testigo == juego.mascara([1])

    def test_necesarios_son_mutuamente_dependientes(self):
        """Test: Dos jugadores necesarios son mutuamente dependientes"""
        for juego in juegos_generados(n_max=4):
            necesarios = [i for i in juego.jugadores if es_jugador_necesario(juego, i)]
            for i, j in combinations(necesarios, 2):
                assert son_mutuamente_dependientes(juego, i, j).se_cumple


class TestEquivalenciasPorDividendos:
    """Tests de equivalencia entre las pruebas por definición y por dividendos"""

    def test_nulo(self):
        """Test: Nulidad por definición = por dividendos"""
        for juego in juegos_generados():
            for i in juego.jugadores:
                assert es_jugador_nulo(juego, i).se_cumple == es_jugador_nulo_por_dividendos(juego, i)

    def test_necesario(self):
        """Test: Necesidad por definición = por dividendos"""
        for juego in juegos_generados():
            for i in juego.jugadores:
                assert es_jugador_necesario(juego, i).se_cumple == es_jugador_necesario_por_dividendos(juego, i)

    def test_dependencia_mutua(self):
        """Test: Dependencia mutua por definición = por dividendos"""
        for juego in juegos_generados():
            for i, j in combinations(juego.jugadores, 2):
                assert (son_mutuamente_dependientes(juego, i, j).se_cumple
                        == son_mutuamente_dependientes_por_dividendos(juego, i, j))

    def test_dependientes_son_simetricos(self):
        """Test: Mutuamente dependientes ⇒ simétricos"""
        for juego in juegos_generados():
            for i, j in combinations(juego.jugadores, 2):
                if son_mutuamente_dependientes(juego, i, j):
                    assert son_simetricos(juego, i, j).se_cumple

    def test_testigos_violan_la_condicion(self):
        """Test: Todo testigo devuelto viola efectivamente la igualdad"""
        for juego in juegos_generados(n_max=4):
            for i in juego.jugadores:
                reporte = es_jugador_nulo(juego, i)
                if not reporte.se_cumple:
                    bit = 1 << juego.posicion(i)
                    s = reporte.testigo
                    assert not s & bit
                    assert juego.valor(s | bit) != juego.valor(s)


class TestIdentidadProductiva:
    """Tests de misma identidad productiva"""

    def test_nulo_en_ambos(self):
        """Test: Nulo en los dos juegos"""
        assert misma_identidad_productiva(unanimidad((1, 2), [1]), Juego.nulo((1, 2)), 2)

    def test_nulo_en_uno_solo(self):
        """Test: Nulo sólo en v"""
        assert not misma_identidad_productiva(Juego.nulo((1, 2)), unanimidad((1, 2), [1]), 1)

    def test_no_nulo_en_ambos(self):
        """Test: i ∈ T con v = w = u_T"""
        juego = unanimidad((1, 2), [1, 2])
        assert misma_identidad_productiva(juego, juego, 1)

    def test_planteles_distintos(self):
        """Test: Los planteles deben coincidir"""
        with pytest.raises(PlantelIncompatibleError):
            misma_identidad_productiva(Juego.nulo((1, 2)), Juego.nulo((1, 3)), 1)

    def test_portador(self):
        """Test: Portador = jugadores no nulos"""
        juego = unanimidad((1, 2, 3), [1, 3]) + unanimidad((1, 2, 3), [3])
        assert portador(juego) == juego.mascara([1, 3])
        assert portador(Juego.nulo((1, 2))) == 0
