"""
Tests de la especificación y generación de familias
"""
from fractions import Fraction

import pytest

from adquisicion_familias import DIRECTORIO_FIXTURES, EspecificacionFamilia, GeneradorFixtures, generar_familia
from dominio_juego import EstructuraCoaliciones, JuegoCS, unanimidad
from valores_juego import FactoryValor
from verificacion_axiomas import SUITES, ErrorFamilia, FactoryAxioma, ejecutar_independencia


def sin_extras(**campos):
    campos.setdefault('incluir_fixtures', False)
    campos.setdefault('pares_unanimidad_n_max', 0)
    campos.setdefault('perturbaciones_por_juego', 0)
    return EspecificacionFamilia(**campos)


class TestGenerarFamilia:
    """Tests de generar_familia"""

    def test_enumeracion_de_tres_jugadores(self):
        """Test: n=3, dividendos {0,1}: 640 juegos y un par (v, 𝟎) por juego"""
        familia = generar_familia(sin_extras(n_min=3, n_max=3, valores_dividendo=(0, 1)), 0)
        assert len(familia.juegos) == 640
        assert len(familia.pares) == 640

    def test_un_jugador(self):
        familia = generar_familia(sin_extras(n_min=1, n_max=1), 0)
        assert len(familia.juegos) == 4

    def test_muestras_cuando_se_supera_el_tope(self):
        """Test: n=4 supera el tope y se sortean 2 juegos por estructura"""
        especificacion = sin_extras(n_min=4, n_max=4, muestras_por_estructura=2, tope_enumeracion=10)
        familia = generar_familia(especificacion, 5)
        assert len(familia.juegos) == 30
        assert "aleatorio" in familia.descripcion

    def test_muestras_totales(self):
        """Test: n=5 con 200 sorteos en total da 200 juegos, reproducibles"""
        especificacion = sin_extras(n_min=5, n_max=5, muestras_total=200)
        familia = generar_familia(especificacion, 7)
        assert len(familia.juegos) == 200
        assert all(juego_cs.juego.n == 5 for juego_cs in familia.juegos)
        assert "200 total" in familia.descripcion
        assert generar_familia(especificacion, 7) == familia

    def test_reproducible(self):
        """Test: Misma semilla, misma familia y misma descripción"""
        especificacion = EspecificacionFamilia(n_max=4, muestras_por_estructura=2, tope_enumeracion=200,
                                               pares_unanimidad_n_max=2)
        primera = generar_familia(especificacion, 42)
        segunda = generar_familia(especificacion, 42)
        assert primera == segunda
        assert primera.semilla == 42
        otra = generar_familia(especificacion, 43)
        assert otra.juegos != primera.juegos

    def test_tope_sin_muestras(self):
        """Test: Una enumeración por encima del tope sin muestras es un error"""
        with pytest.raises(ErrorFamilia, match="tope"):
            generar_familia(sin_extras(n_min=4, n_max=4), 0)

    def test_fixtures_primero(self):
        """Test: Los fixtures encabezan la familia"""
        fixtures = GeneradorFixtures(DIRECTORIO_FIXTURES)
        fixtures.generar()
        familia = generar_familia(EspecificacionFamilia(n_max=2, pares_unanimidad_n_max=1), 0)
        cantidad = len(fixtures.obtener_juegos())
        assert familia.juegos[:cantidad] == fixtures.obtener_juegos()
        assert familia.pares[:len(fixtures.obtener_pares())] == fixtures.obtener_pares()
        assert familia.descripcion.startswith("personalizada: fixtures(fixtures)")

    def test_primer_testigo_de_se_contra_n(self):
        """Test: El primer testigo de se contra N es u₁₃ con {{1,2},{3}}: el nulo 2 recibe 1/4"""
        familia = generar_familia(EspecificacionFamilia(n_max=2, pares_unanimidad_n_max=1), 0)
        veredicto = FactoryAxioma.crear('N').verificar(FactoryValor.crear('se'), familia)
        assert veredicto.reverificado
        u13 = JuegoCS(unanimidad((1, 2, 3), [1, 3]), EstructuraCoaliciones.desde_bloques((1, 2, 3), [[1, 2], [3]]))
        assert veredicto.testigo.juegos == (u13,)
        assert veredicto.testigo.jugadores == (2,)
        assert veredicto.testigo.lado_izquierdo == Fraction(1, 4)

    @pytest.mark.lento
    def test_suites_confirmadas(self):
        """Test: Las tres suites quedan confirmadas sobre una familia chica con fixtures"""
        familia = generar_familia(EspecificacionFamilia.desde_texto('n=3;valores=0,1;pares=2'), 0)
        for suite in SUITES.values():
            assert ejecutar_independencia(suite, familia).confirmada, suite.nombre


class TestEspecificacion:
    """Tests de EspecificacionFamilia"""

    def test_desde_texto(self):
        especificacion = EspecificacionFamilia.desde_texto('n=3; valores=0,1/2,-1; muestras=4; fixtures=no')
        assert especificacion.n_min == 1
        assert especificacion.n_max == 3
        assert [str(v) for v in especificacion.valores_dividendo] == ['0', '1/2', '-1']
        assert especificacion.muestras_por_estructura == 4
        assert not especificacion.incluir_fixtures
        assert especificacion.pares_unanimidad_n_max == 3

    def test_desde_texto_total(self):
        especificacion = EspecificacionFamilia.desde_texto('n_min=5;n=5;total=200;fixtures=no')
        assert especificacion.muestras_total == 200
        assert especificacion.muestras_por_estructura == 0

    def test_dos_modalidades_de_muestreo(self):
        """Test: No se pueden pedir muestras por estructura y totales a la vez"""
        with pytest.raises(ErrorFamilia, match="modalidad"):
            EspecificacionFamilia(muestras_por_estructura=2, muestras_total=10)

    @pytest.mark.parametrize("texto", ['n', 'color=rojo', 'n=tres', 'fixtures=quizas', 'valores=', 'n=7'])
    def test_texto_invalido(self, texto):
        with pytest.raises(ErrorFamilia):
            EspecificacionFamilia.desde_texto(texto)

    def test_desde_config(self):
        especificacion = EspecificacionFamilia.desde_config('rapida', {
            'n_max': 3, 'valores_dividendo': ['0', '1'], 'tope_enumeracion': 1000,
        })
        assert especificacion.nombre == 'rapida'
        assert especificacion.valores_dividendo == (0, 1)

    def test_config_con_claves_desconocidas(self):
        with pytest.raises(ErrorFamilia, match="desconocidas"):
            EspecificacionFamilia.desde_config('rara', {'jugadores': 3})

    def test_valores_no_exactos(self):
        """Test: Un valor de dividendo en punto flotante se rechaza"""
        with pytest.raises(ErrorFamilia):
            EspecificacionFamilia(valores_dividendo=(0.5,))
