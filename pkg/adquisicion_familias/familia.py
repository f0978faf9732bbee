"""
Especificación de familias de juegos y su generación determinista.

El orden de la familia es el orden canónico de búsqueda de testigos:
fixtures guardados, enumeración exhaustiva, muestras con semilla.
"""
import logging
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from dominio_juego import ErrorJuego, a_racional
from verificacion_axiomas import ErrorFamilia, FamiliaJuegos

from adquisicion_familias.factory_generador import FactoryGenerador
from adquisicion_familias.generador import N_MAXIMO, BaseGenerador, GeneradorFixtures, cantidad_enumerativa

logger = logging.getLogger('owen_axiomas.familias')

DIRECTORIO_FIXTURES = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'fixtures')


def _racionales(valores, campo: str) -> Tuple[Fraction, ...]:
    if isinstance(valores, str):
        valores = [v for v in valores.split(',') if v.strip()]
    try:
        resultado = tuple(a_racional(v.strip() if isinstance(v, str) else v) for v in valores)
    except (ErrorJuego, TypeError) as ex:
        raise ErrorFamilia(f"Valores mal formados en '{campo}': {valores!r}") from ex
    if not resultado:
        raise ErrorFamilia(f"'{campo}' no puede ser vacío")
    return resultado


@dataclass(frozen=True)
class EspecificacionFamilia:
    """
    :param n_min, n_max: rango de cantidad de jugadores
    :param valores_dividendo: valores posibles de cada dividendo
    :param muestras_por_estructura: juegos sorteados por estructura cuando la
        enumeración de n jugadores supera el tope; 0 exige enumeración completa
    :param muestras_total: juegos sorteados en total, cada uno con una estructura
        sorteada, cuando la enumeración supera el tope; excluye a muestras_por_estructura
    :param tope_enumeracion: máximo de juegos enumerados por cantidad de jugadores
    :param pares_unanimidad_n_max: hasta qué n se agregan todos los pares de unanimidades
    :param perturbaciones_por_juego: pares (v, v + αu_T) sorteados por juego
    :param escalas_unanimidad: valores de α
    """
    nombre: str = 'personalizada'
    n_min: int = 1
    n_max: int = 3
    valores_dividendo: Tuple[Fraction, ...] = (Fraction(-1), Fraction(0), Fraction(1), Fraction(2))
    muestras_por_estructura: int = 0
    muestras_total: int = 0
    tope_enumeracion: int = 20000
    incluir_fixtures: bool = True
    pares_unanimidad_n_max: int = 3
    perturbaciones_por_juego: int = 1
    escalas_unanimidad: Tuple[Fraction, ...] = (Fraction(1), Fraction(2))

    def __post_init__(self):
        object.__setattr__(self, 'valores_dividendo', _racionales(self.valores_dividendo, 'valores_dividendo'))
        object.__setattr__(self, 'escalas_unanimidad', _racionales(self.escalas_unanimidad, 'escalas_unanimidad'))
        if not 1 <= self.n_min <= self.n_max <= N_MAXIMO:
            raise ErrorFamilia(
                f"Rango de jugadores inválido: {self.n_min}..{self.n_max} (máximo {N_MAXIMO})"
            )
        if min(self.muestras_por_estructura, self.muestras_total, self.perturbaciones_por_juego) < 0:
            raise ErrorFamilia("Las cantidades de muestras y perturbaciones no pueden ser negativas")
        if self.muestras_por_estructura and self.muestras_total:
            raise ErrorFamilia("Se indican muestras por estructura y muestras totales: elegir una sola modalidad")
        if self.tope_enumeracion < 1:
            raise ErrorFamilia("El tope de enumeración debe ser positivo")
        if self.pares_unanimidad_n_max > N_MAXIMO:
            raise ErrorFamilia(f"Pares de unanimidad para más de {N_MAXIMO} jugadores")

    @classmethod
    def desde_config(cls, nombre: str, config: Dict[str, Any]) -> 'EspecificacionFamilia':
        """Sección `familias.<nombre>` de config.json."""
        claves = {
            'n_min', 'n_max', 'valores_dividendo', 'muestras_por_estructura', 'muestras_total',
            'tope_enumeracion',
            'incluir_fixtures', 'pares_unanimidad_n_max', 'perturbaciones_por_juego', 'escalas_unanimidad',
        }
        desconocidas = sorted(set(config) - claves)
        if desconocidas:
            raise ErrorFamilia(f"Claves desconocidas en la familia '{nombre}': {desconocidas}")
        return cls(nombre=nombre, **config)

    @classmethod
    def desde_texto(cls, texto: str) -> 'EspecificacionFamilia':
        """
        Forma corta de la línea de comandos: `n=3;valores=0,1;muestras=0`.

        Claves: n (máximo de jugadores), n_min, valores, muestras (por
        estructura), total (muestras en total), tope, pares, perturbaciones,
        escalas, fixtures (si|no).
        """
        traduccion = {
            'n': 'n_max', 'n_min': 'n_min', 'valores': 'valores_dividendo',
            'muestras': 'muestras_por_estructura', 'total': 'muestras_total',
            'tope': 'tope_enumeracion',
            'pares': 'pares_unanimidad_n_max', 'perturbaciones': 'perturbaciones_por_juego',
            'escalas': 'escalas_unanimidad', 'fixtures': 'incluir_fixtures',
        }
        config: Dict[str, Any] = {}
        for parte in (p.strip() for p in texto.split(';')):
            if not parte:
                continue
            clave, separador, valor = parte.partition('=')
            clave = clave.strip()
            if not separador or clave not in traduccion:
                raise ErrorFamilia(f"Término de familia inválido: '{parte}'")
            campo = traduccion[clave]
            valor = valor.strip()
            if campo in ('valores_dividendo', 'escalas_unanimidad'):
                config[campo] = valor
            elif campo == 'incluir_fixtures':
                if valor not in ('si', 'no'):
                    raise ErrorFamilia(f"fixtures debe ser 'si' o 'no', se recibió '{valor}'")
                config[campo] = valor == 'si'
            else:
                try:
                    config[campo] = int(valor)
                except ValueError as ex:
                    raise ErrorFamilia(f"Entero mal formado en '{parte}'") from ex
        if 'pares_unanimidad_n_max' not in config and 'n_max' in config:
            config['pares_unanimidad_n_max'] = min(config['n_max'], 3)
        return cls(nombre=texto, **config)


def _generadores(especificacion: EspecificacionFamilia, semilla: int,
                 directorio_fixtures: Optional[str]) -> List[BaseGenerador]:
    generadores = []
    if especificacion.incluir_fixtures:
        generadores.append(FactoryGenerador.crear(
            'fixtures', {'directorio': directorio_fixtures or DIRECTORIO_FIXTURES}))
    valores = especificacion.valores_dividendo
    for n in range(especificacion.n_min, especificacion.n_max + 1):
        cantidad = cantidad_enumerativa(n, len(valores))
        if cantidad <= especificacion.tope_enumeracion:
            generadores.append(FactoryGenerador.crear(
                'enumerativo', {'n': n, 'valores': valores, 'tope': especificacion.tope_enumeracion}))
        elif especificacion.muestras_por_estructura > 0 or especificacion.muestras_total > 0:
            por_estructura = especificacion.muestras_por_estructura > 0
            generadores.append(FactoryGenerador.crear('aleatorio', {
                'n': n,
                'muestras': especificacion.muestras_por_estructura or especificacion.muestras_total,
                'valores': valores,
                'semilla': f"{semilla}:{n}",
                'por_estructura': por_estructura,
            }))
        else:
            raise ErrorFamilia(
                f"La enumeración de {n} jugadores produce {cantidad} juegos, más que el tope "
                f"{especificacion.tope_enumeracion}; indicar muestras por estructura o totales"
            )
    return generadores


def generar_familia(especificacion: EspecificacionFamilia, semilla: int,
                    directorio_fixtures: Optional[str] = None) -> FamiliaJuegos:
    """
    Genera la familia de la especificación; misma semilla, misma familia.

    :raises ErrorFamilia: si la especificación excede los topes o un fixture es inválido
    """
    juegos, pares, descripciones = [], [], []
    generados = []
    for generador in _generadores(especificacion, semilla, directorio_fixtures):
        generador.generar()
        juegos.extend(generador.obtener_juegos())
        pares.extend(generador.obtener_pares())
        descripciones.append(generador.describir())
        if not isinstance(generador, GeneradorFixtures):
            generados.extend(generador.obtener_juegos())

    generador_pares = FactoryGenerador.crear('pares', {
        'juegos': generados,
        'escalas': especificacion.escalas_unanimidad,
        'n_unanimidad': especificacion.pares_unanimidad_n_max,
        'perturbaciones': especificacion.perturbaciones_por_juego,
        'semilla': f"{semilla}:pares",
    })
    generador_pares.generar()
    pares.extend(generador_pares.obtener_pares())
    descripciones.append(generador_pares.describir())

    descripcion = f"{especificacion.nombre}: " + '; '.join(descripciones)
    familia = FamiliaJuegos(descripcion, tuple(juegos), tuple(pares), semilla)
    logger.debug("Familia generada con %d juegos y %d pares: %s", len(juegos), len(pares), descripcion)
    return familia
