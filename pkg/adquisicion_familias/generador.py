"""
Generadores de juegos para las familias de verificación - Strategy Pattern

🎯 RESPONSABILIDAD:
Cada generador produce, en un orden determinista, juegos con estructura
(para los axiomas de un juego) y pares con igual plantel y estructura
(para los axiomas de dos juegos).

🏗️ ESTRATEGIAS:
- GeneradorFixtures: testigos y archivos de juego guardados en un directorio
- GeneradorEnumerativo: todas las asignaciones de dividendos de un conjunto de valores
- GeneradorAleatorio: asignaciones de dividendos sorteadas con semilla
- GeneradorPares: pares de unanimidades escaladas y perturbaciones de juegos dados

Versión: 1.0.0
"""
import json
import os
import random
from abc import ABCMeta, abstractmethod
from fractions import Fraction
from itertools import product
from typing import Iterable, List, Sequence, Tuple, Union

from dominio_juego import (
    Juego,
    JuegoCS,
    TablaDividendos,
    particiones,
    unanimidad_mascara,
)
from persistidor_juego import ErrorFormatoArchivo, MapeadorArchivoJuego, MapeadorTestigo
from verificacion_axiomas import ErrorFamilia

Par = Tuple[JuegoCS, JuegoCS]
Semilla = Union[int, str]

# Tope absoluto de jugadores: tablas de 2⁶ valores y 203 estructuras
N_MAXIMO = 6


def plantel(n: int) -> Tuple[int, ...]:
    """Jugadores 1..n."""
    if n < 1 or n > N_MAXIMO:
        raise ErrorFamilia(f"La cantidad de jugadores debe estar entre 1 y {N_MAXIMO}, se pidió {n}")
    return tuple(range(1, n + 1))


def cantidad_particiones(n: int) -> int:
    """Número de Bell B(n), por el triángulo de Bell."""
    fila = [1]
    for _ in range(n - 1):
        nueva = [fila[-1]]
        for valor in fila:
            nueva.append(nueva[-1] + valor)
        fila = nueva
    return fila[-1]


def cantidad_enumerativa(n: int, cantidad_valores: int) -> int:
    """Juegos que produce la enumeración exhaustiva de n jugadores."""
    return cantidad_valores ** ((1 << n) - 1) * cantidad_particiones(n)


class BaseGenerador(metaclass=ABCMeta):
    """
    Abstracción de las estrategias de generación.

    `generar()` llena los juegos y pares; `obtener_juegos()` y
    `obtener_pares()` los devuelven en el orden en que se generaron.
    """

    def __init__(self):
        self._juegos: List[JuegoCS] = []
        self._pares: List[Par] = []

    def obtener_juegos(self) -> Tuple[JuegoCS, ...]:
        return tuple(self._juegos)

    def obtener_pares(self) -> Tuple[Par, ...]:
        return tuple(self._pares)

    @abstractmethod
    def generar(self) -> None:
        pass

    @abstractmethod
    def describir(self) -> str:
        """Texto reproducible que identifica lo generado."""


class GeneradorFixtures(BaseGenerador):
    """
    Lee los documentos `*.json` de un directorio, en orden alfabético.

    Un documento de testigo aporta su juego (un juego) o su par (dos juegos);
    un archivo de juego aporta un juego.
    """

    def __init__(self, directorio: str):
        super().__init__()
        self._directorio = directorio
        self._testigos = []

    @property
    def testigos(self) -> tuple:
        return tuple(self._testigos)

    def generar(self) -> None:
        if not os.path.isdir(self._directorio):
            raise ErrorFamilia(f"No existe el directorio de fixtures: {self._directorio}")
        for nombre in sorted(os.listdir(self._directorio)):
            if not nombre.endswith('.json'):
                continue
            ruta = os.path.join(self._directorio, nombre)
            with open(ruta, 'r', encoding='utf-8') as archivo:
                texto = archivo.read()
            try:
                es_testigo = 'games' in json.loads(texto)
                if es_testigo:
                    testigo = MapeadorTestigo().venir_desde_persistidor(texto)
                    self._testigos.append(testigo)
                    juegos = testigo.juegos
                else:
                    juegos = (MapeadorArchivoJuego().venir_desde_persistidor(texto).juego_cs,)
            except (ErrorFormatoArchivo, json.JSONDecodeError) as ex:
                raise ErrorFamilia(f"Fixture inválido {nombre}: {ex}") from ex
            if len(juegos) == 1:
                self._juegos.append(juegos[0])
            elif len(juegos) == 2:
                self._pares.append((juegos[0], juegos[1]))
            else:
                raise ErrorFamilia(f"Fixture {nombre}: se esperaban uno o dos juegos, hay {len(juegos)}")

    def describir(self) -> str:
        return f"fixtures({os.path.basename(os.path.normpath(self._directorio))})"


class GeneradorEnumerativo(BaseGenerador):
    """
    Todas las estructuras de n jugadores por todas las asignaciones de
    dividendos tomados de `valores` (n ≤ 4 en la práctica).

    :raises ErrorFamilia: si la enumeración supera `tope`
    """

    def __init__(self, n: int, valores: Sequence[Fraction], tope: int):
        super().__init__()
        self._jugadores = plantel(n)
        self._valores = tuple(Fraction(v) for v in valores)
        if not self._valores:
            raise ErrorFamilia("El conjunto de valores de dividendo no puede ser vacío")
        self._tope = tope
        cantidad = cantidad_enumerativa(n, len(self._valores))
        if cantidad > tope:
            raise ErrorFamilia(
                f"La enumeración de {n} jugadores con {len(self._valores)} valores "
                f"produce {cantidad} juegos, más que el tope {tope}"
            )

    def generar(self) -> None:
        n = len(self._jugadores)
        coaliciones = (1 << n) - 1
        for estructura in particiones(self._jugadores):
            for asignacion in product(self._valores, repeat=coaliciones):
                tabla = TablaDividendos(self._jugadores, (Fraction(0),) + asignacion)
                self._juegos.append(JuegoCS(tabla.a_juego(), estructura))

    def describir(self) -> str:
        return f"enumeracion(n={len(self._jugadores)}; valores={','.join(map(str, self._valores))})"


class GeneradorAleatorio(BaseGenerador):
    """
    Juegos de n jugadores con dividendos sorteados de `valores`.

    :param por_estructura: si es True, sortea `muestras` juegos para cada
        estructura en orden canónico; si no, `muestras` juegos en total, cada
        uno con una estructura sorteada
    """

    def __init__(self, n: int, muestras: int, valores: Sequence[Fraction], semilla: Semilla,
                 por_estructura: bool = False):
        super().__init__()
        if muestras < 0:
            raise ErrorFamilia(f"La cantidad de muestras no puede ser negativa: {muestras}")
        self._jugadores = plantel(n)
        self._muestras = muestras
        self._valores = tuple(Fraction(v) for v in valores)
        if not self._valores:
            raise ErrorFamilia("El conjunto de valores de dividendo no puede ser vacío")
        self._semilla = semilla
        self._por_estructura = por_estructura

    def _sortear_juego(self, rng: random.Random) -> Juego:
        cantidad = (1 << len(self._jugadores)) - 1
        dividendos = (Fraction(0),) + tuple(rng.choice(self._valores) for _ in range(cantidad))
        return TablaDividendos(self._jugadores, dividendos).a_juego()

    def generar(self) -> None:
        rng = random.Random(self._semilla)
        estructuras = list(particiones(self._jugadores))
        if self._por_estructura:
            for estructura in estructuras:
                for _ in range(self._muestras):
                    self._juegos.append(JuegoCS(self._sortear_juego(rng), estructura))
        else:
            for _ in range(self._muestras):
                estructura = rng.choice(estructuras)
                self._juegos.append(JuegoCS(self._sortear_juego(rng), estructura))

    def describir(self) -> str:
        modo = 'por estructura' if self._por_estructura else 'total'
        return (f"aleatorio(n={len(self._jugadores)}; muestras={self._muestras} {modo}; "
                f"valores={','.join(map(str, self._valores))}; semilla={self._semilla})")


class GeneradorPares(BaseGenerador):
    """
    Pares para los axiomas de dos juegos.

    - Para n ≤ `n_unanimidad`, en cada estructura: (αu_S, αu_T),
      (αu_S + αu_T, αu_S) y (αu_S, 𝟎) para toda S, T y toda escala α.
    - Para cada juego v dado: (v, 𝟎) y `perturbaciones` pares (v, v + αu_T)
      con T y α sorteados.
    """

    def __init__(self, juegos: Iterable[JuegoCS], escalas: Sequence[Fraction], n_unanimidad: int,
                 perturbaciones: int, semilla: Semilla):
        super().__init__()
        self._base = tuple(juegos)
        self._escalas = tuple(Fraction(e) for e in escalas)
        if not self._escalas or any(e == 0 for e in self._escalas):
            raise ErrorFamilia("Las escalas de unanimidad deben ser no nulas")
        if n_unanimidad > N_MAXIMO:
            raise ErrorFamilia(f"Pares de unanimidad para más de {N_MAXIMO} jugadores")
        self._n_unanimidad = n_unanimidad
        self._perturbaciones = perturbaciones
        self._semilla = semilla

    def _pares_de_unanimidad(self, n: int) -> None:
        jugadores = plantel(n)
        nulo = Juego.nulo(jugadores)
        for estructura in particiones(jugadores):
            for alfa in self._escalas:
                unanimidades = [unanimidad_mascara(jugadores, t, alfa) for t in range(1, 1 << n)]
                for v, w in product(unanimidades, repeat=2):
                    self._pares.append((JuegoCS(v, estructura), JuegoCS(w, estructura)))
                    self._pares.append((JuegoCS(v + w, estructura), JuegoCS(v, estructura)))
                for v in unanimidades:
                    self._pares.append((JuegoCS(v, estructura), JuegoCS(nulo, estructura)))

    def generar(self) -> None:
        for n in range(1, self._n_unanimidad + 1):
            self._pares_de_unanimidad(n)
        rng = random.Random(self._semilla)
        for juego_cs in self._base:
            jugadores = juego_cs.jugadores
            self._pares.append((juego_cs, juego_cs.con_juego(Juego.nulo(jugadores))))
            for _ in range(self._perturbaciones):
                t = rng.randrange(1, 1 << len(jugadores))
                delta = unanimidad_mascara(jugadores, t, rng.choice(self._escalas))
                self._pares.append((juego_cs, juego_cs.con_juego(juego_cs.juego + delta)))

    def describir(self) -> str:
        return (f"pares(unanimidad n≤{self._n_unanimidad}; escalas={','.join(map(str, self._escalas))}; "
                f"perturbaciones={self._perturbaciones}; semilla={self._semilla})")

