"""
Tests para estructuras de coaliciones, juego cociente e identidad de dividendos
"""
import random
from fractions import Fraction

import pytest

from dominio_juego import (
    EstructuraCoaliciones,
    EstructuraInvalidaError,
    Juego,
    JuegoCS,
    LecturaIdentidad,
    PlantelIncompatibleError,
    TablaDividendos,
    identidad_dividendos_cociente,
    juego_cociente,
    juego_desde_dividendos,
    particiones,
    restringir_estructura,
    unanimidad,
)

SEMILLA = 7331


def juego_aleatorio(rng, n):
    tabla = [Fraction(0)] + [Fraction(rng.choice((-1, 0, 1, 2))) for _ in range((1 << n) - 1)]
    return juego_desde_dividendos(TablaDividendos(tuple(range(1, n + 1)), tuple(tabla)))


@pytest.fixture
def estructura_12_3():
    return EstructuraCoaliciones.desde_bloques((1, 2, 3), [[1, 2], [3]])


class TestEstructura:
    """Tests de la partición ℬ"""

    def test_orden_canonico(self):
        """Test: Las uniones se ordenan por su menor jugador"""
        estructura = EstructuraCoaliciones.desde_bloques((1, 2, 3, 4), [[3, 4], [2, 1]])
        assert estructura.bloques() == ((1, 2), (3, 4))

    def test_union_de_jugador(self, estructura_12_3):
        """Test: B(i) e índice de unión"""
        assert estructura_12_3.indice_union(3) == 1
        assert estructura_12_3.coalicion(estructura_12_3.union_de(2)) == (1, 2)

    def test_cantidad_restringida(self, estructura_12_3):
        """Test: m_T para T = {1,3} es 2"""
        assert estructura_12_3.cantidad_restringida(0b101) == 2
        assert estructura_12_3.cantidad_restringida(0b011) == 1

    def test_rechaza_no_particion(self):
        """Test: Bloques solapados o incompletos"""
        with pytest.raises(EstructuraInvalidaError):
            EstructuraCoaliciones.desde_bloques((1, 2, 3), [[1, 2], [2, 3]])
        with pytest.raises(EstructuraInvalidaError):
            EstructuraCoaliciones.desde_bloques((1, 2, 3), [[1, 2]])
        with pytest.raises(EstructuraInvalidaError):
            EstructuraCoaliciones.desde_bloques((1, 2), [[1], [2, 5]])

    def test_indice_invalido(self, estructura_12_3):
        """Test: Índice de unión inexistente"""
        with pytest.raises(EstructuraInvalidaError):
            estructura_12_3.union(2)

    def test_restringida(self, estructura_12_3):
        """Test: ℬ={{1,2},{3}} restringida a {2,3} es {{2},{3}}"""
        restringida = restringir_estructura(estructura_12_3, 0b110)
        assert restringida.jugadores == (2, 3)
        assert restringida.bloques() == ((2,), (3,))

    def test_restringida_descarta_uniones_vacias(self, estructura_12_3):
        """Test: Quitar el único jugador de una unión la elimina"""
        restringida = estructura_12_3.restringida(0b011)
        assert restringida.bloques() == ((1, 2),)

    def test_juego_cs_exige_mismo_plantel(self, estructura_12_3):
        """Test: La estructura debe particionar el plantel del juego"""
        with pytest.raises(PlantelIncompatibleError):
            JuegoCS(Juego.nulo((1, 2)), estructura_12_3)


class TestParticiones:
    """Tests de enumeración de particiones"""

    @pytest.mark.parametrize("n, bell", [(1, 1), (2, 2), (3, 5), (4, 15), (5, 52)])
    def test_numeros_de_bell(self, n, bell):
        """Test: La cantidad de particiones es el número de Bell"""
        estructuras = list(particiones(tuple(range(n))))
        assert len(estructuras) == bell
        assert len(set(estructuras)) == bell

    def test_incluye_triviales(self):
        """Test: ℬⁿ y ℬᴺ están entre las particiones"""
        estructuras = list(particiones((1, 2, 3)))
        assert EstructuraCoaliciones.singletons((1, 2, 3)) in estructuras
        assert EstructuraCoaliciones.total((1, 2, 3)) in estructuras


class TestCociente:
    """Tests del juego cociente"""

    def test_estructura_total(self):
        """Test: ℬᴺ da un juego de un jugador con valor v(N)"""
        v = unanimidad((1, 2, 3), [1, 2], 3)
        cociente = juego_cociente(JuegoCS(v, EstructuraCoaliciones.total((1, 2, 3))))
        assert cociente.jugadores == (0,)
        assert cociente.valores == (0, 3)

    def test_estructura_de_singletons(self):
        """Test: ℬⁿ da un cociente isomorfo a v"""
        v = Juego((4, 7), (0, 1, 2, 5))
        cociente = juego_cociente(JuegoCS(v, EstructuraCoaliciones.singletons((4, 7))))
        assert cociente.valores == v.valores

    def test_ambas_uniones_necesarias(self, estructura_12_3):
        """Test: u_{1,3} con {{1,2},{3}} da u_M en el cociente"""
        cociente = juego_cociente(JuegoCS(unanimidad((1, 2, 3), [1, 3]), estructura_12_3))
        assert cociente == unanimidad((0, 1), [0, 1])


class TestIdentidadDividendosCociente:
    """Tests de λ_R(v^ℬ) = Σ λ_T(v)"""

    def test_unanimidad_lectura_estricta(self, estructura_12_3):
        """Test: Juegos de unanimidad cumplen la identidad"""
        for t in range(1, 8):
            cs = JuegoCS(unanimidad((1, 2, 3), Juego.nulo((1, 2, 3)).coalicion(t)), estructura_12_3)
            assert identidad_dividendos_cociente(cs).se_cumple

    def test_juego_nulo(self, estructura_12_3):
        """Test: El juego nulo cumple trivialmente"""
        assert identidad_dividendos_cociente(JuegoCS(Juego.nulo((1, 2, 3)), estructura_12_3)).se_cumple

    def test_lectura_estricta_en_juegos_aleatorios(self):
        """Test: La lectura estricta se cumple en todo juego generado con n ≤ 5"""
        rng = random.Random(SEMILLA)
        for n in range(1, 6):
            estructuras = list(particiones(tuple(range(1, n + 1))))
            for _ in range(15):
                v = juego_aleatorio(rng, n)
                for estructura in rng.sample(estructuras, min(4, len(estructuras))):
                    veredicto = identidad_dividendos_cociente(JuegoCS(v, estructura))
                    assert veredicto.se_cumple, veredicto

    def test_lectura_literal_falla(self):
        """Test: La lectura literal falla en u_N con dos uniones"""
        cs = JuegoCS(unanimidad((1, 2), [1, 2]), EstructuraCoaliciones.singletons((1, 2)))
        veredicto = identidad_dividendos_cociente(cs, LecturaIdentidad.LITERAL)
        assert not veredicto.se_cumple
        assert veredicto.coalicion_fallida == 0b01
        assert veredicto.lado_cociente == 0
        assert veredicto.lado_suma == 1
        assert identidad_dividendos_cociente(cs, LecturaIdentidad.ESTRICTA).se_cumple
