#!/usr/bin/env python3
"""
Lanzador de owen-axiomas: línea de comandos.

🎯 RESPONSABILIDAD ÚNICA: ORQUESTACIÓN
Interpreta los argumentos, obtiene los componentes del Configurador y
escribe el informe del visualizador. No contiene lógica de juegos.

🔄 COMANDOS:
- eval ARCHIVO --rule R [--rule R ...] [--eq5]
- dividends ARCHIVO
- inspect ARCHIVO
- check --rule R --axiom A [--family F] [--save-witnesses]
- independence {T1,T2,T3,all} [--family F] [--save-witnesses]

Comunes: --seed, --format {text,structured}, --config RUTA.

📋 CÓDIGOS DE SALIDA:
- 0: todas las expectativas se cumplen
- 1: falta una violación esperada, o aparece una no esperada
- 2: error de uso, de configuración o de lectura de archivo

Versión: 1.0.0
"""
import argparse
import logging
import sys
from typing import List, Optional, Sequence, TextIO, Tuple

from configurador import Configurador
from persistidor_juego import leer_archivo_juego
from presentacion_juego import (
    Encabezado,
    FactoryVisualizador,
    informe_asignaciones,
    informe_dividendos,
    informe_inspeccion,
)
from valores_juego import FactoryValor
from verificacion_axiomas import FactoryAxioma, SUITES, cumple_expectativa, ejecutar_independencia

VERSION = "1.0.0"

SALIDA_OK = 0
SALIDA_EXPECTATIVA = 1
SALIDA_USO = 2

logger = logging.getLogger('owen_axiomas.lanzador')


class Lanzador:
    """
    Coordinador de los comandos.
    """

    @staticmethod
    def crear_parser() -> argparse.ArgumentParser:
        comunes = argparse.ArgumentParser(add_help=False)
        comunes.add_argument('--seed', type=int, default=None,
                             help="semilla de los sorteos (por defecto OWEN_AXIOMAS_SEMILLA o config.json)")
        comunes.add_argument('--format', choices=FactoryVisualizador.FORMATOS, default='text',
                             help="formato del informe")
        comunes.add_argument('--config', default=None, help="ruta de config.json")

        parser = argparse.ArgumentParser(
            prog='owen-axiomas',
            description="Valor de Owen exacto, reglas alternativas y verificación de axiomas.",
        )
        parser.add_argument('--version', action='version', version=f"%(prog)s {VERSION}")
        comandos = parser.add_subparsers(dest='comando', metavar='COMANDO')
        comandos.required = True

        evaluar = comandos.add_parser('eval', parents=[comunes], help="asignaciones de un archivo de juego")
        evaluar.add_argument('archivo')
        evaluar.add_argument('--rule', action='append', required=True, choices=FactoryValor.NOMBRES,
                             dest='reglas')
        evaluar.add_argument('--eq5', action='store_true',
                             help="compara los totales por unión con el Shapley del cociente")

        for nombre, ayuda in (('dividends', "valores, dividendos y cociente de un archivo de juego"),
                              ('inspect', "relaciones entre jugadores y entre uniones")):
            comando = comandos.add_parser(nombre, parents=[comunes], help=ayuda)
            comando.add_argument('archivo')

        verificar = comandos.add_parser('check', parents=[comunes], help="verifica axiomas sobre una familia")
        verificar.add_argument('--rule', action='append', required=True, choices=FactoryValor.NOMBRES,
                               dest='reglas')
        verificar.add_argument('--axiom', action='append', required=True, choices=FactoryAxioma.NOMBRES,
                               dest='axiomas')

        independencia = comandos.add_parser('independence', parents=[comunes],
                                            help="suites de independencia de las caracterizaciones")
        independencia.add_argument('suite', choices=tuple(SUITES) + ('all',))

        for comando in (verificar, independencia):
            comando.add_argument('--family', default='defecto', dest='familia',
                                 help="familia configurada o 'n=<N>;valores=<v1,v2,...>;muestras=<k>|total=<k>'")
            comando.add_argument('--save-witnesses', action='store_true', dest='guardar_testigos',
                                 help="persiste los testigos en el repositorio configurado")
        return parser

    @staticmethod
    def _inicializar(ruta_config: Optional[str]) -> None:
        if ruta_config is not None:
            Configurador.inicializar_configuracion(ruta_config)
            return
        try:
            Configurador.inicializar_configuracion()
        except FileNotFoundError:
            logger.warning("config.json no encontrado; se usan los valores por defecto")

    @staticmethod
    def _evaluar(argumentos, visualizador) -> Tuple[int, str]:
        archivo = leer_archivo_juego(argumentos.archivo)
        valores = [Configurador.crear_valor(r, archivo.config_valores()) for r in argumentos.reglas]
        informe = informe_asignaciones(archivo.juego_cs, valores, argumentos.eq5)
        return SALIDA_OK, visualizador.mostrar_asignaciones(Encabezado(VERSION), informe)

    @staticmethod
    def _dividendos(argumentos, visualizador) -> Tuple[int, str]:
        informe = informe_dividendos(leer_archivo_juego(argumentos.archivo).juego_cs)
        return SALIDA_OK, visualizador.mostrar_dividendos(Encabezado(VERSION), informe)

    @staticmethod
    def _inspeccionar(argumentos, visualizador) -> Tuple[int, str]:
        informe = informe_inspeccion(leer_archivo_juego(argumentos.archivo).juego_cs)
        return SALIDA_OK, visualizador.mostrar_inspeccion(Encabezado(VERSION), informe)

    @staticmethod
    def _verificar(argumentos, visualizador) -> Tuple[int, str]:
        semilla = Configurador.obtener_semilla(argumentos.seed)
        familia = Configurador.crear_familia(argumentos.familia, semilla)
        repositorio = Configurador.crear_repositorio_testigos() if argumentos.guardar_testigos else None
        veredictos = []
        for regla in argumentos.reglas:
            valor = Configurador.crear_valor(regla)
            for axioma in argumentos.axiomas:
                veredicto = Configurador.crear_axioma(axioma).verificar(valor, familia)
                if repositorio is not None and veredicto.testigo is not None:
                    repositorio.guardar(veredicto.testigo)
                veredictos.append(veredicto)
        codigo = SALIDA_OK
        if any(cumple_expectativa(v) is False for v in veredictos):
            codigo = SALIDA_EXPECTATIVA
        encabezado = Encabezado(VERSION, familia.semilla, familia.descripcion)
        return codigo, visualizador.mostrar_veredictos(encabezado, veredictos)

    @staticmethod
    def _independencia(argumentos, visualizador) -> Tuple[int, str]:
        semilla = Configurador.obtener_semilla(argumentos.seed)
        familia = Configurador.crear_familia(argumentos.familia, semilla)
        repositorio = Configurador.crear_repositorio_testigos() if argumentos.guardar_testigos else None
        nombres = list(SUITES) if argumentos.suite == 'all' else [argumentos.suite]
        reportes = [
            ejecutar_independencia(SUITES[nombre], familia, repositorio, Configurador.crear_trazador(),
                                   Configurador.obtener_config_valores())
            for nombre in nombres
        ]
        codigo = SALIDA_OK if all(r.confirmada for r in reportes) else SALIDA_EXPECTATIVA
        encabezado = Encabezado(VERSION, familia.semilla, familia.descripcion)
        return codigo, visualizador.mostrar_independencia(encabezado, reportes)

    COMANDOS = {
        'eval': '_evaluar',
        'dividends': '_dividendos',
        'inspect': '_inspeccionar',
        'check': '_verificar',
        'independence': '_independencia',
    }

    @staticmethod
    def ejecutar(argv: Optional[Sequence[str]] = None, salida: Optional[TextIO] = None) -> int:
        """
        🚀 Ejecuta un comando y devuelve el código de salida.

        :param argv: argumentos sin el nombre del programa (None = sys.argv[1:])
        :param salida: destino del informe (None = sys.stdout)
        """
        salida = salida or sys.stdout
        try:
            argumentos = Lanzador.crear_parser().parse_args(argv)
        except SystemExit as ex:
            return SALIDA_OK if ex.code in (0, None) else SALIDA_USO

        try:
            Lanzador._inicializar(argumentos.config)
            visualizador = Configurador.crear_visualizador(argumentos.format)
            comando = getattr(Lanzador, Lanzador.COMANDOS[argumentos.comando])
            codigo, informe = comando(argumentos, visualizador)
        except (OSError, ValueError) as ex:
            logger.debug("%s falló", argumentos.comando, exc_info=True)
            print(f"owen-axiomas: error: {ex}", file=sys.stderr)
            return SALIDA_USO

        salida.write(informe)
        logger.info("%s terminó con código %d", argumentos.comando, codigo)
        return codigo


def ejecutar(argv: Optional[List[str]] = None) -> None:
    """
    Función de entrada para el comando de consola
    """
    sys.exit(Lanzador.ejecutar(argv))


if __name__ == "__main__":
    ejecutar()
