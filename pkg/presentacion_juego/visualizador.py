"""
Visualizadores de informes - Strategy Pattern

🎯 RESPONSABILIDAD:
Dar formato a los informes de asignaciones, dividendos, inspección,
veredictos e independencia. Cada método devuelve el texto completo; quien
lo invoca decide dónde escribirlo.

🏗️ ESTRATEGIAS:
- VisualizadorTexto: tablas alineadas para leer en consola
- VisualizadorEstructurado: JSON determinista (indent=2, orden de claves fijo)

Todo número se muestra como racional exacto (p/q o entero).

Versión: 1.0.0
"""
import json
from abc import ABCMeta, abstractmethod
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Optional, Sequence

from dominio_juego import JuegoCS
from persistidor_juego import MapeadorTestigo, texto_racional
from verificacion_axiomas import EXPECTATIVAS, ReporteIndependencia, VeredictoAxioma, cumple_expectativa

from presentacion_juego.informes import (
    Encabezado,
    InformeAsignaciones,
    InformeDividendos,
    InformeInspeccion,
)

HERRAMIENTA = 'owen-axiomas'


def _esperado(veredicto: VeredictoAxioma) -> Optional[str]:
    esperado = EXPECTATIVAS.get((veredicto.regla, veredicto.axioma))
    if esperado is None:
        return None
    return 'pass' if esperado else 'fail'


class BaseVisualizador(metaclass=ABCMeta):
    """
    Contrato común de los formatos de salida.
    """

    @abstractmethod
    def mostrar_asignaciones(self, encabezado: Encabezado, informe: InformeAsignaciones) -> str:
        pass

    @abstractmethod
    def mostrar_dividendos(self, encabezado: Encabezado, informe: InformeDividendos) -> str:
        pass

    @abstractmethod
    def mostrar_inspeccion(self, encabezado: Encabezado, informe: InformeInspeccion) -> str:
        pass

    @abstractmethod
    def mostrar_veredictos(self, encabezado: Encabezado, veredictos: Sequence[VeredictoAxioma]) -> str:
        pass

    @abstractmethod
    def mostrar_independencia(self, encabezado: Encabezado,
                              reportes: Sequence[ReporteIndependencia]) -> str:
        pass


# =============================================================================
# TEXTO
# =============================================================================

def _coalicion(miembros: Iterable[int]) -> str:
    return '{' + ','.join(str(j) for j in miembros) + '}'


def _si_no(valor: Optional[bool]) -> str:
    if valor is None:
        return '-'
    return 'si' if valor else 'no'


def _tabla(encabezados: Sequence[str], filas: Sequence[Sequence[Any]]) -> List[str]:
    """Primera columna alineada a la izquierda, el resto a la derecha."""
    celdas = [[str(c) for c in fila] for fila in [encabezados, *filas]]
    anchos = [max(len(fila[k]) for fila in celdas) for k in range(len(encabezados))]
    lineas = []
    for fila in celdas:
        partes = [fila[0].ljust(anchos[0])] + [c.rjust(a) for c, a in zip(fila[1:], anchos[1:])]
        lineas.append('  '.join(partes).rstrip())
    return lineas


class VisualizadorTexto(BaseVisualizador):
    """
    Tablas alineadas para consola.
    """

    @staticmethod
    def _cabecera(encabezado: Encabezado) -> List[str]:
        partes = [f"{HERRAMIENTA} {encabezado.version}"]
        if encabezado.semilla is not None:
            partes.append(f"semilla {encabezado.semilla}")
        lineas = [' | '.join(partes)]
        if encabezado.familia is not None:
            lineas.append(f"familia: {encabezado.familia}")
        return lineas

    @staticmethod
    def _juego(juego_cs: JuegoCS) -> str:
        bloques = ' '.join(_coalicion(b) for b in juego_cs.estructura.bloques())
        return f"N = {_coalicion(juego_cs.jugadores)}; estructura: {bloques}"

    @staticmethod
    def _entradas(titulo: str, entradas) -> List[str]:
        if not entradas:
            return [f"{titulo}: (ninguno)"]
        return [f"{titulo}:"] + ['  ' + l for l in _tabla(
            ('coalicion', 'valor'), [(_coalicion(c), v) for c, v in entradas])]

    def mostrar_asignaciones(self, encabezado, informe):
        lineas = self._cabecera(encabezado) + [self._juego(informe.juego_cs)]
        jugadores = informe.juego_cs.jugadores
        lineas += _tabla(['regla'] + [str(j) for j in jugadores],
                         [[nombre] + list(a.pagos) for nombre, a in informe.asignaciones])
        if informe.shapley_cociente is not None:
            uniones = [f"B{p}" for p in range(len(informe.shapley_cociente))]
            filas = [['Sh(cociente)'] + list(informe.shapley_cociente) + ['']]
            filas += [[f.regla] + list(f.totales) + [_si_no(f.consistente)] for f in informe.cociente]
            lineas.append("totales por unión:")
            lineas += _tabla(['regla'] + uniones + ['coincide'], filas)
        return '\n'.join(lineas) + '\n'

    def mostrar_dividendos(self, encabezado, informe):
        lineas = self._cabecera(encabezado) + [self._juego(informe.juego_cs)]
        lineas += self._entradas("valores", informe.valores)
        lineas += self._entradas("dividendos", informe.dividendos)
        lineas.append("soporte: " + (' '.join(_coalicion(c) for c in informe.soporte) or '(vacío)'))
        lineas += self._entradas("valores del cociente (por índice de unión)", informe.valores_cociente)
        lineas += self._entradas("dividendos del cociente", informe.dividendos_cociente)
        return '\n'.join(lineas) + '\n'

    def mostrar_inspeccion(self, encabezado, informe):
        def lista(elementos):
            return ' '.join(str(e) for e in elementos) or '-'

        def pares(elementos):
            return ' '.join(_coalicion(p) for p in elementos) or '-'

        lineas = self._cabecera(encabezado) + [self._juego(informe.juego_cs)]
        lineas += [
            "soporte: " + (' '.join(_coalicion(c) for c in informe.soporte) or '-'),
            f"jugadores nulos: {lista(informe.nulos)}",
            f"jugadores necesarios: {lista(informe.necesarios)}",
            f"pares simétricos: {pares(informe.simetricos)}",
            f"pares mutuamente dependientes: {pares(informe.mutuamente_dependientes)}",
            f"uniones nulas: {lista(informe.uniones_nulas)}",
            f"uniones necesarias: {lista(informe.uniones_necesarias)}",
        ]
        if informe.relaciones:
            lineas.append("relaciones entre uniones:")
            lineas += ['  ' + l for l in _tabla(
                ('uniones', 'simetricas', 'mut. dep.', 'alt. mut. dep.', 'alt. simetricas'),
                [(f"B{r.p} B{r.q}", _si_no(r.simetricas), _si_no(r.mutuamente_dependientes),
                  _si_no(r.altamente_mutuamente_dependientes), _si_no(r.altamente_simetricas))
                 for r in informe.relaciones])]
        return '\n'.join(lineas) + '\n'

    @staticmethod
    def _testigo(veredicto: VeredictoAxioma) -> List[str]:
        testigo = veredicto.testigo
        if testigo is None:
            return []
        juegos = ' | '.join(VisualizadorTexto._juego(j) for j in testigo.juegos)
        return [
            f"  testigo {testigo.id}: {testigo.descripcion}",
            f"    lados: {testigo.lado_izquierdo} != {testigo.lado_derecho}; "
            f"reverificado: {_si_no(veredicto.reverificado)}",
            f"    juego: {juegos}",
        ]

    def mostrar_veredictos(self, encabezado, veredictos):
        lineas = self._cabecera(encabezado)
        lineas += _tabla(
            ('regla', 'axioma', 'resultado', 'items', 'hipotesis', 'esperado', 'cumple'),
            [(v.regla, v.axioma, v.resultado.value, v.items, v.hipotesis,
              _esperado(v) or '-', _si_no(cumple_expectativa(v))) for v in veredictos])
        for veredicto in veredictos:
            lineas += self._testigo(veredicto)
        return '\n'.join(lineas) + '\n'

    def mostrar_independencia(self, encabezado, reportes):
        lineas = self._cabecera(encabezado)
        for reporte in reportes:
            suite = reporte.suite
            estado = 'confirmada' if reporte.confirmada else 'no confirmada'
            lineas.append(f"suite {suite.nombre} ({', '.join(suite.axiomas)}): {estado}")
            lineas += ['  ' + l for l in _tabla(
                ('regla', 'viola', 'estado', 'contradicciones'),
                [(r.fila.regla, r.fila.axioma_violado or '(existencia)', r.estado.value,
                  ', '.join(r.contradicciones) or '-') for r in reporte.resultados])]
            for resultado in reporte.resultados:
                if resultado.fila.es_existencia:
                    continue
                lineas += ['  ' + l for l in self._testigo(resultado.veredicto(resultado.fila.axioma_violado))]
        return '\n'.join(lineas) + '\n'


# =============================================================================
# ESTRUCTURADO
# =============================================================================

class VisualizadorEstructurado(BaseVisualizador):
    """
    JSON con orden de claves fijo: mismo informe, mismos bytes.

    Los testigos se incrustan como archivos de juego, con los dos lados de
    la igualdad violada como racionales en texto.
    """

    def __init__(self, mapeador_testigo: MapeadorTestigo = None):
        self._mapeador = mapeador_testigo or MapeadorTestigo()

    @staticmethod
    def _volcar(documento: Dict[str, Any]) -> str:
        return json.dumps(documento, indent=2, ensure_ascii=False) + '\n'

    @staticmethod
    def _cabecera(encabezado: Encabezado) -> Dict[str, Any]:
        return {
            'tool': HERRAMIENTA,
            'version': encabezado.version,
            'seed': encabezado.semilla,
            'family': encabezado.familia,
        }

    @staticmethod
    def _juego(juego_cs: JuegoCS) -> Dict[str, Any]:
        return {
            'players': list(juego_cs.jugadores),
            'structure': [list(b) for b in juego_cs.estructura.bloques()],
        }

    @staticmethod
    def _racionales(valores: Iterable[Fraction]) -> List[str]:
        return [texto_racional(v) for v in valores]

    @staticmethod
    def _mapa(entradas) -> Dict[str, str]:
        return {','.join(str(j) for j in c): texto_racional(v) for c, v in entradas}

    def mostrar_asignaciones(self, encabezado, informe):
        documento = self._cabecera(encabezado)
        documento['game'] = self._juego(informe.juego_cs)
        documento['allocations'] = [
            {'rule': nombre, 'payoffs': {str(j): texto_racional(p) for j, p in zip(a.jugadores, a.pagos)}}
            for nombre, a in informe.asignaciones
        ]
        if informe.shapley_cociente is not None:
            documento['union_totals'] = {
                'quotient_shapley': self._racionales(informe.shapley_cociente),
                'rules': [
                    {'rule': f.regla, 'totals': self._racionales(f.totales), 'consistent': f.consistente}
                    for f in informe.cociente
                ],
            }
        return self._volcar(documento)

    def mostrar_dividendos(self, encabezado, informe):
        documento = self._cabecera(encabezado)
        documento['game'] = self._juego(informe.juego_cs)
        documento['worths'] = self._mapa(informe.valores)
        documento['dividends'] = self._mapa(informe.dividendos)
        documento['support'] = [list(c) for c in informe.soporte]
        documento['quotient'] = {
            'worths': self._mapa(informe.valores_cociente),
            'dividends': self._mapa(informe.dividendos_cociente),
        }
        return self._volcar(documento)

    def mostrar_inspeccion(self, encabezado, informe):
        documento = self._cabecera(encabezado)
        documento['game'] = self._juego(informe.juego_cs)
        documento['support'] = [list(c) for c in informe.soporte]
        documento['null_players'] = list(informe.nulos)
        documento['necessary_players'] = list(informe.necesarios)
        documento['symmetric_pairs'] = [list(p) for p in informe.simetricos]
        documento['mutually_dependent_pairs'] = [list(p) for p in informe.mutuamente_dependientes]
        documento['null_unions'] = list(informe.uniones_nulas)
        documento['necessary_unions'] = list(informe.uniones_necesarias)
        documento['union_pairs'] = [
            {
                'unions': [r.p, r.q],
                'symmetric': r.simetricas,
                'mutually_dependent': r.mutuamente_dependientes,
                'highly_mutually_dependent': r.altamente_mutuamente_dependientes,
                'highly_symmetric': r.altamente_simetricas,
            }
            for r in informe.relaciones
        ]
        return self._volcar(documento)

    def _veredicto(self, veredicto: VeredictoAxioma) -> Dict[str, Any]:
        testigo = None
        if veredicto.testigo is not None:
            testigo = self._mapeador.a_documento(veredicto.testigo)
            testigo['reverified'] = veredicto.reverificado
        return {
            'rule': veredicto.regla,
            'axiom': veredicto.axioma,
            'outcome': veredicto.resultado.value,
            'items': veredicto.items,
            'hypothesis_instances': veredicto.hipotesis,
            'expected': _esperado(veredicto),
            'meets_expectation': cumple_expectativa(veredicto),
            'witness': testigo,
        }

    def mostrar_veredictos(self, encabezado, veredictos):
        documento = self._cabecera(encabezado)
        documento['verdicts'] = [self._veredicto(v) for v in veredictos]
        return self._volcar(documento)

    def mostrar_independencia(self, encabezado, reportes):
        documento = self._cabecera(encabezado)
        documento['suites'] = [
            {
                'theorem': reporte.suite.nombre,
                'axioms': list(reporte.suite.axiomas),
                'confirmed': reporte.confirmada,
                'rows': [
                    {
                        'rule': r.fila.regla,
                        'violates': r.fila.axioma_violado,
                        'status': r.estado.value,
                        'contradictions': list(r.contradicciones),
                        'verdicts': [self._veredicto(v) for v in r.veredictos],
                    }
                    for r in reporte.resultados
                ],
            }
            for reporte in reportes
        ]
        return self._volcar(documento)
