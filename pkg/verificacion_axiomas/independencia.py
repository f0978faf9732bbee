"""
Verificación de la independencia lógica de cada caracterización.

🎯 RESPONSABILIDAD:
Para cada teorema, cada fila nombra una regla que debe cumplir todos los
axiomas del conjunto salvo uno, y violar ese uno con un testigo
reverificado. La fila de existencia comprueba que Owen cumple todos.

📖 ESTADOS DE FILA:
- confirmed: se cumple lo esperado
- unconfirmed: el axioma a violar no falló en la familia
- contradiction: falló un axioma que la regla debía cumplir

Versión: 1.0.0
"""
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Any, Dict, Iterable, List, Optional, Tuple

from dominio_juego import JuegoCS
from predicados_juego import uniones_altamente_simetricas, uniones_simetricas
from supervisor import BaseTrazador
from valores_juego import BaseValor, FactoryValor

from verificacion_axiomas.axioma import BaseAxioma
from verificacion_axiomas.factory_axioma import FactoryAxioma
from verificacion_axiomas.familia import FamiliaJuegos
from verificacion_axiomas.veredicto import Resultado, Testigo, VeredictoAxioma


class EstadoFila(Enum):
    CONFIRMADA = 'confirmed'
    NO_CONFIRMADA = 'unconfirmed'
    CONTRADICCION = 'contradiction'


@dataclass(frozen=True)
class FilaIndependencia:
    """
    :param axioma_violado: axioma que la regla debe violar; None en la fila de existencia
    """
    regla: str
    axioma_violado: Optional[str] = None

    @property
    def es_existencia(self) -> bool:
        return self.axioma_violado is None


@dataclass(frozen=True)
class SuiteIndependencia:
    nombre: str
    axiomas: Tuple[str, ...]
    filas: Tuple[FilaIndependencia, ...]

    def axiomas_a_cumplir(self, fila: FilaIndependencia) -> Tuple[str, ...]:
        return tuple(a for a in self.axiomas if a != fila.axioma_violado)


SUITES: Dict[str, SuiteIndependencia] = {
    'T1': SuiteIndependencia('T1', ('E', 'A', 'N', 'SWU', 'MBU-', 'IAG'), (
        FilaIndependencia('zero', 'E'),
        FilaIndependencia('se', 'N'),
        FilaIndependencia('phi1', 'A'),
        FilaIndependencia('phi2', 'SWU'),
        FilaIndependencia('phi3', 'IAG'),
        FilaIndependencia('owen-p', 'MBU-'),
        FilaIndependencia('owen'),
    )),
    'T2': SuiteIndependencia('T2', ('E', 'SWU', 'MBU-', 'IUM+'), (
        FilaIndependencia('zero', 'E'),
        FilaIndependencia('phi2', 'SWU'),
        FilaIndependencia('owen-p', 'MBU-'),
        FilaIndependencia('se', 'IUM+'),
        FilaIndependencia('owen'),
    )),
    'T3': SuiteIndependencia('T3', ('E', 'NPO', 'UDM_md', 'DMU_md-'), (
        FilaIndependencia('zero', 'E'),
        FilaIndependencia('phi4', 'NPO'),
        FilaIndependencia('phi5-carrier', 'UDM_md'),
        FilaIndependencia('shapley-blind', 'DMU_md-'),
        FilaIndependencia('owen'),
    )),
}

# Owen viola la simetría entre jugadores de distintas uniones y la variante
# "altamente simétricas" de MBU; φ⁵ literal depende de los jugadores nulos.
_EXCEPCIONES: Dict[Tuple[str, str], bool] = {
    ('owen', 'S'): False,
    ('owen', 'MBU-hs'): False,
    ('owen-marginal', 'S'): False,
    ('owen-marginal', 'MBU-hs'): False,
    ('phi5', 'NPO'): False,
}


def _derivar_expectativas() -> Dict[Tuple[str, str], bool]:
    expectativas: Dict[Tuple[str, str], bool] = {}
    for suite in SUITES.values():
        for fila in suite.filas:
            for axioma in suite.axiomas_a_cumplir(fila):
                expectativas[(fila.regla, axioma)] = True
            if fila.axioma_violado is not None:
                expectativas[(fila.regla, fila.axioma_violado)] = False
    for regla in ('owen', 'owen-marginal'):
        for axioma in FactoryAxioma.NOMBRES:
            expectativas[(regla, axioma)] = True
    expectativas.update(_EXCEPCIONES)
    for (regla, axioma), esperado in list(expectativas.items()):
        if regla == 'shapley-blind':
            expectativas[('shapley', axioma)] = esperado
    return expectativas


EXPECTATIVAS: Dict[Tuple[str, str], bool] = _derivar_expectativas()


def cumple_expectativa(veredicto: VeredictoAxioma) -> Optional[bool]:
    """None si el par (regla, axioma) no tiene expectativa registrada."""
    esperado = EXPECTATIVAS.get((veredicto.regla, veredicto.axioma))
    if esperado is None:
        return None
    if esperado:
        return veredicto.aprobado
    return veredicto.resultado is Resultado.FALLA and bool(veredicto.reverificado)


@dataclass(frozen=True)
class ResultadoFila:
    fila: FilaIndependencia
    veredictos: Tuple[VeredictoAxioma, ...]
    estado: EstadoFila
    contradicciones: Tuple[str, ...] = ()

    def veredicto(self, axioma: str) -> VeredictoAxioma:
        for veredicto in self.veredictos:
            if veredicto.axioma == axioma:
                return veredicto
        raise KeyError(axioma)


@dataclass(frozen=True)
class ReporteIndependencia:
    suite: SuiteIndependencia
    familia: str
    semilla: int
    resultados: Tuple[ResultadoFila, ...]

    @property
    def confirmada(self) -> bool:
        return all(r.estado is EstadoFila.CONFIRMADA for r in self.resultados)

    @property
    def con_contradicciones(self) -> bool:
        return any(r.estado is EstadoFila.CONTRADICCION for r in self.resultados)


def evaluar_fila(fila: FilaIndependencia, veredictos: Iterable[VeredictoAxioma]) -> ResultadoFila:
    veredictos = tuple(veredictos)
    contradicciones = tuple(
        v.axioma for v in veredictos if v.axioma != fila.axioma_violado and not v.aprobado
    )
    if contradicciones:
        estado = EstadoFila.CONTRADICCION
    elif fila.es_existencia:
        estado = EstadoFila.CONFIRMADA
    else:
        objetivo = next((v for v in veredictos if v.axioma == fila.axioma_violado), None)
        confirmado = (objetivo is not None and objetivo.resultado is Resultado.FALLA
                      and bool(objetivo.reverificado))
        estado = EstadoFila.CONFIRMADA if confirmado else EstadoFila.NO_CONFIRMADA
    return ResultadoFila(fila, veredictos, estado, contradicciones)


def ejecutar_independencia(suite: SuiteIndependencia, familia: FamiliaJuegos,
                           repositorio: Optional[Any] = None,
                           trazador: Optional[BaseTrazador] = None,
                           config_valores: Optional[Dict[str, Dict[str, Any]]] = None) -> ReporteIndependencia:
    """
    Verifica cada fila de la suite sobre la familia.

    :param repositorio: si se indica, cada testigo encontrado se persiste con `guardar`
    :param trazador: recibe una traza por fila y una advertencia por contradicción
    :param config_valores: parámetros por regla, como la sección `valores` de config.json
    """
    config_valores = config_valores or {}
    axiomas = {nombre: FactoryAxioma.crear(nombre) for nombre in suite.axiomas}
    resultados: List[ResultadoFila] = []
    for fila in suite.filas:
        valor = FactoryValor.crear(fila.regla, config_valores.get(fila.regla))
        resultado = evaluar_fila(fila, (axiomas[a].verificar(valor, familia) for a in suite.axiomas))
        if repositorio is not None:
            for veredicto in resultado.veredictos:
                if veredicto.testigo is not None:
                    repositorio.guardar(veredicto.testigo)
        if trazador is not None:
            etiqueta = f"{suite.nombre}/{fila.regla}"
            if resultado.estado is EstadoFila.CONTRADICCION:
                trazador.trazar(etiqueta, 'contradiccion',
                                f"falla {', '.join(resultado.contradicciones)} sobre {familia.descripcion}")
            else:
                trazador.trazar(etiqueta, 'independencia', resultado.estado.value)
        resultados.append(resultado)
    return ReporteIndependencia(suite, familia.descripcion, familia.semilla, tuple(resultados))


IMPLICACIONES: Tuple[Tuple[str, str], ...] = (
    ('SBU', 'MBU-'),
    ('DMU_md', 'DMU_md-'),
    ('IUM+', 'M'),
)


def verificar_implicaciones(reglas: Iterable[BaseValor], familia: FamiliaJuegos) -> List[Tuple[str, str, str]]:
    """
    Comprueba, regla por regla, que aprobar el axioma fuerte implica aprobar el débil.

    :return: ternas (regla, axioma fuerte, axioma débil) que violan la implicación
    """
    violaciones = []
    for valor in reglas:
        for fuerte, debil in IMPLICACIONES:
            if (FactoryAxioma.crear(fuerte).verificar(valor, familia).aprobado
                    and not FactoryAxioma.crear(debil).verificar(valor, familia).aprobado):
                violaciones.append((valor.nombre, fuerte, debil))
    return violaciones


def buscar_testigo(valor: BaseValor, axioma: BaseAxioma, familia: FamiliaJuegos) -> Optional[Testigo]:
    """Primera violación en el orden canónico de la familia."""
    return axioma.verificar(valor, familia).testigo


def buscar_uniones_altamente_simetricas_no_simetricas(
        familia: FamiliaJuegos) -> Optional[Tuple[JuegoCS, int, int]]:
    """Primer juego de la familia con dos uniones altamente simétricas que no son simétricas."""
    for juego_cs in familia.juegos:
        for p, q in combinations(range(juego_cs.estructura.m), 2):
            if (uniones_altamente_simetricas(juego_cs, p, q).se_cumple
                    and not uniones_simetricas(juego_cs, p, q).se_cumple):
                return juego_cs, p, q
    return None
