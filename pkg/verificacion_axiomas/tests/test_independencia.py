"""
Tests de las suites de independencia y de las implicaciones entre axiomas
"""
import pytest

from dominio_juego import EstructuraCoaliciones, JuegoCS, unanimidad
from predicados_juego import uniones_altamente_simetricas, uniones_simetricas
from supervisor import BaseTrazador
from valores_juego import FactoryValor
from verificacion_axiomas import (
    EXPECTATIVAS,
    EstadoFila,
    FactoryAxioma,
    FamiliaJuegos,
    FilaIndependencia,
    Resultado,
    SUITES,
    SuiteIndependencia,
    VeredictoAxioma,
    buscar_testigo,
    buscar_uniones_altamente_simetricas_no_simetricas,
    cumple_expectativa,
    ejecutar_independencia,
    evaluar_fila,
    verificar_implicaciones,
)
from verificacion_axiomas.tests.juegos_de_prueba import N2, familia_de_prueba


class RepositorioEnMemoria:
    def __init__(self):
        self.guardados = []

    def guardar(self, testigo):
        self.guardados.append(testigo)


class TrazadorEnMemoria(BaseTrazador):
    def __init__(self):
        self.trazas = []

    def trazar(self, entidad, accion, mensaje):
        self.trazas.append((entidad, accion, mensaje))


@pytest.fixture(scope="module")
def familia():
    return familia_de_prueba()


class TestSuites:
    """Tests de las tres caracterizaciones sobre la familia de prueba"""

    @pytest.mark.parametrize("nombre", ['T1', 'T2', 'T3'])
    def test_suite_confirmada(self, familia, nombre):
        """Test: Todas las filas de la suite quedan confirmadas"""
        reporte = ejecutar_independencia(SUITES[nombre], familia)
        estados = {r.fila.regla: r.estado for r in reporte.resultados}
        assert all(e is EstadoFila.CONFIRMADA for e in estados.values()), estados
        assert reporte.confirmada
        assert not reporte.con_contradicciones
        assert reporte.familia == familia.descripcion

    def test_filas_de_t1(self):
        """Test: T1 tiene una fila por axioma más la de existencia"""
        suite = SUITES['T1']
        violados = [f.axioma_violado for f in suite.filas if not f.es_existencia]
        assert sorted(violados) == sorted(suite.axiomas)
        assert [f.regla for f in suite.filas if f.es_existencia] == ['owen']

    def test_veredicto_por_axioma(self, familia):
        """Test: Cada fila expone el veredicto de cada axioma de la suite"""
        reporte = ejecutar_independencia(SUITES['T2'], familia)
        fila_se = next(r for r in reporte.resultados if r.fila.regla == 'se')
        assert fila_se.veredicto('IUM+').resultado is Resultado.FALLA
        assert fila_se.veredicto('E').aprobado
        with pytest.raises(KeyError):
            fila_se.veredicto('A')

    def test_contradiccion_con_phi5_literal(self, familia):
        """Test: φ⁵ literal como fila de existencia contradice NPO"""
        suite = SuiteIndependencia('phi5-literal', ('E', 'NPO'), (FilaIndependencia('phi5'),))
        trazador = TrazadorEnMemoria()
        reporte = ejecutar_independencia(suite, familia, trazador=trazador)
        resultado = reporte.resultados[0]
        assert resultado.estado is EstadoFila.CONTRADICCION
        assert resultado.contradicciones == ('NPO',)
        assert reporte.con_contradicciones
        assert trazador.trazas[0][0] == 'phi5-literal/phi5'
        assert trazador.trazas[0][1] == 'contradiccion'

    def test_testigos_persistidos_y_trazas(self, familia):
        """Test: Cada testigo se entrega al repositorio y cada fila deja una traza"""
        repositorio = RepositorioEnMemoria()
        trazador = TrazadorEnMemoria()
        ejecutar_independencia(SUITES['T1'], familia, repositorio=repositorio, trazador=trazador)
        assert {t.id for t in repositorio.guardados} == {
            'zero__E', 'se__N', 'phi1__A', 'phi2__SWU', 'phi3__IAG', 'owen-p__MBU-'}
        assert len(trazador.trazas) == len(SUITES['T1'].filas)
        assert all(accion == 'independencia' and mensaje == 'confirmed'
                   for _, accion, mensaje in trazador.trazas)


class TestEvaluarFila:
    """Tests de la clasificación de una fila a partir de sus veredictos"""

    @staticmethod
    def _veredicto(axioma, resultado, reverificado=None):
        return VeredictoAxioma(axioma, 'zero', resultado, 1, 1, reverificado=reverificado)

    def test_no_confirmada(self):
        """Test: Si el axioma a violar no falla, la fila queda sin confirmar"""
        resultado = evaluar_fila(FilaIndependencia('zero', 'E'),
                                 [self._veredicto('E', Resultado.PASA), self._veredicto('N', Resultado.VACUO)])
        assert resultado.estado is EstadoFila.NO_CONFIRMADA

    def test_falla_sin_reverificar(self):
        """Test: Un testigo que no se reverifica no confirma la fila"""
        resultado = evaluar_fila(FilaIndependencia('zero', 'E'),
                                 [self._veredicto('E', Resultado.FALLA, reverificado=False)])
        assert resultado.estado is EstadoFila.NO_CONFIRMADA

    def test_contradiccion_domina(self):
        """Test: Una falla inesperada es contradicción aunque el objetivo falle"""
        resultado = evaluar_fila(FilaIndependencia('zero', 'E'),
                                 [self._veredicto('E', Resultado.FALLA, reverificado=True),
                                  self._veredicto('N', Resultado.FALLA, reverificado=True)])
        assert resultado.estado is EstadoFila.CONTRADICCION
        assert resultado.contradicciones == ('N',)


class TestExpectativas:
    """Tests del registro de expectativas por (regla, axioma)"""

    def test_expectativas_conocidas(self):
        assert EXPECTATIVAS[('owen', 'S')] is False
        assert EXPECTATIVAS[('owen', 'IAG')] is True
        assert EXPECTATIVAS[('phi4', 'NPO')] is False
        assert EXPECTATIVAS[('phi5', 'NPO')] is False
        assert EXPECTATIVAS[('shapley', 'DMU_md-')] is False
        assert EXPECTATIVAS[('shapley', 'E')] is True

    def test_cumple_expectativa(self, familia):
        """Test: Owen falla S tal como se espera"""
        veredicto = FactoryAxioma.crear('S').verificar(FactoryValor.crear('owen'), familia)
        assert cumple_expectativa(veredicto) is True

    def test_sin_expectativa(self, familia):
        veredicto = FactoryAxioma.crear('S').verificar(FactoryValor.crear('phi1'), familia)
        assert cumple_expectativa(veredicto) is None


class TestImplicaciones:
    """Tests de las implicaciones entre axiomas fuertes y débiles"""

    def test_sin_violaciones(self, familia):
        """Test: Ninguna regla aprueba un axioma fuerte y falla su versión débil"""
        reglas = [FactoryValor.crear(nombre) for nombre in FactoryValor.NOMBRES]
        assert verificar_implicaciones(reglas, familia) == []


class TestBusquedas:
    """Tests de las búsquedas de testigos y ejemplos"""

    def test_buscar_testigo(self, familia):
        testigo = buscar_testigo(FactoryValor.crear('zero'), FactoryAxioma.crear('E'), familia)
        assert testigo.id == 'zero__E'
        assert buscar_testigo(FactoryValor.crear('owen'), FactoryAxioma.crear('E'), familia) is None

    def test_altamente_simetricas_no_simetricas(self, familia):
        """Test: La familia contiene uniones altamente simétricas que no son simétricas"""
        juego_cs, p, q = buscar_uniones_altamente_simetricas_no_simetricas(familia)
        assert uniones_altamente_simetricas(juego_cs, p, q).se_cumple
        assert not uniones_simetricas(juego_cs, p, q).se_cumple

    def test_sin_ejemplo(self):
        juego_cs = JuegoCS(unanimidad(N2, [1, 2]), EstructuraCoaliciones.singletons(N2))
        familia = FamiliaJuegos("simetrica", (juego_cs,), (), 0)
        assert buscar_uniones_altamente_simetricas_no_simetricas(familia) is None
