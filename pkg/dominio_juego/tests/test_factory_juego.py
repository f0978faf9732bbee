"""
Tests para FactoryJuego y Asignacion
"""
from fractions import Fraction

import pytest

from dominio_juego import Asignacion, FactoryJuego, Juego, JugadorDesconocidoError, unanimidad


class TestFactoryJuego:
    """Tests del factory de juegos"""

    def test_crear_nulo(self):
        """Test: Tipo 'nulo'"""
        assert FactoryJuego.crear('nulo', {'jugadores': [2, 1]}) == Juego.nulo((1, 2))

    def test_crear_unanimidad(self):
        """Test: Tipo 'unanimidad' con escala"""
        juego = FactoryJuego.crear('unanimidad', {'jugadores': [1, 2, 3], 'coalicion': [1, 3], 'escala': '-2'})
        assert juego == unanimidad((1, 2, 3), [1, 3], -2)

    def test_crear_por_valores(self):
        """Test: Tipo 'valores' con coaliciones omitidas en cero"""
        juego = FactoryJuego.crear('valores', {'jugadores': [1, 2], 'valores': {(1,): 1, (2,): 2, (1, 2): 4}})
        assert juego.dividendos.dividendos == (0, 1, 2, 1)

    def test_crear_por_dividendos(self):
        """Test: Tipo 'dividendos'"""
        juego = FactoryJuego.crear('dividendos', {'jugadores': [1, 2, 3], 'dividendos': {(1, 2, 3): '-2'}})
        assert juego == unanimidad((1, 2, 3), [1, 2, 3], -2)

    def test_crear_aditivo(self):
        """Test: Tipo 'aditivo'"""
        juego = FactoryJuego.crear('aditivo', {'jugadores': [1, 2], 'individuales': {1: 1}})
        assert juego.valores == (0, 1, 0, 1)

    def test_tipo_no_soportado(self):
        """Test: Tipo inexistente"""
        with pytest.raises(ValueError, match="no soportado"):
            FactoryJuego.crear('convexo', {'jugadores': [1]})


class TestAsignacion:
    """Tests de vectores de pago"""

    def test_acceso_por_jugador(self):
        """Test: Pago por id"""
        asignacion = Asignacion((1, 3), (Fraction(1, 2), 1))
        assert asignacion[3] == 1
        assert asignacion.total() == Fraction(3, 2)
        assert asignacion.total(0b01) == Fraction(1, 2)

    def test_jugador_desconocido(self):
        """Test: Id fuera del plantel"""
        with pytest.raises(JugadorDesconocidoError):
            Asignacion((1,), (0,))[2]

    def test_suma(self):
        """Test: Suma componente a componente"""
        suma = Asignacion((1, 2), (1, 0)) + Asignacion((1, 2), (Fraction(1, 2), Fraction(1, 2)))
        assert suma == Asignacion((1, 2), (Fraction(3, 2), Fraction(1, 2)))

    def test_diferencias(self):
        """Test: Ids con pagos distintos"""
        assert Asignacion((1, 2), (1, 0)).diferencias(Asignacion((1, 2), (1, 1))) == [2]
