"""
Mapeadores entre las entidades del dominio y documentos JSON.

📋 FORMATO DE ARCHIVO DE JUEGO:
```json
{
  "players": [1, 2, 3],
  "structure": [[1, 2], [3]],
  "worths": {"1,3": "1", "1,2,3": "1"},
  "weights": {"1": "2", "2": "1", "3": "1"},
  "distinguished_union": [1, 2]
}
```
- `worths` y `dividends` son excluyentes; las coaliciones omitidas valen 0.
- Cada clave de coalición lista los ids en orden ascendente, separados por
  comas; una clave repetida en un objeto se rechaza.
- Los números son enteros JSON o textos racionales ("1/2", "0.5", "-3").
  Los números con punto decimal JSON (0.5 sin comillas) se rechazan.
- La salida es canónica: ids ascendentes, coaliciones en orden de máscara,
  valores nulos omitidos, racionales como "p/q".
"""
import json
from abc import ABCMeta, abstractmethod
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from dominio_juego import (
    ErrorJuego,
    EstructuraCoaliciones,
    Juego,
    JuegoCS,
    TablaDividendos,
    a_racional,
)
from verificacion_axiomas import Testigo

from persistidor_juego.errores import ErrorFormatoArchivo


def _rechazar_flotante(texto: str) -> Any:
    raise ErrorFormatoArchivo(
        f"Número no exacto: {texto}. Escribirlo entre comillas como racional (\"1/2\", \"0.5\")"
    )


def _sin_claves_repetidas(pares: List[Tuple[str, Any]]) -> Dict[str, Any]:
    objeto: Dict[str, Any] = {}
    for clave, valor in pares:
        if clave in objeto:
            raise ErrorFormatoArchivo(f"Clave repetida en un objeto JSON: '{clave}'")
        objeto[clave] = valor
    return objeto


def _cargar_json(texto: str) -> Dict[str, Any]:
    try:
        documento = json.loads(texto, parse_float=_rechazar_flotante,
                               object_pairs_hook=_sin_claves_repetidas)
    except json.JSONDecodeError as ex:
        raise ErrorFormatoArchivo(f"JSON mal formado: {ex}") from ex
    if not isinstance(documento, dict):
        raise ErrorFormatoArchivo("El documento debe ser un objeto JSON")
    return documento


def _numero(valor: Any, contexto: str) -> Fraction:
    if isinstance(valor, bool) or not isinstance(valor, (int, str)):
        raise ErrorFormatoArchivo(f"Número mal formado en {contexto}: {valor!r}")
    try:
        return a_racional(valor.strip() if isinstance(valor, str) else valor)
    except ErrorJuego as ex:
        raise ErrorFormatoArchivo(f"Número mal formado en {contexto}: {valor!r}") from ex


def _id_jugador(valor: Any, contexto: str) -> int:
    if isinstance(valor, bool):
        raise ErrorFormatoArchivo(f"Id de jugador inválido en {contexto}: {valor!r}")
    try:
        return int(valor.strip()) if isinstance(valor, str) else int(valor)
    except (TypeError, ValueError) as ex:
        raise ErrorFormatoArchivo(f"Id de jugador inválido en {contexto}: {valor!r}") from ex


def clave_coalicion(miembros) -> str:
    """Clave canónica: ids ascendentes separados por coma."""
    return ','.join(str(j) for j in sorted(miembros))


def texto_racional(valor: Fraction) -> str:
    return str(Fraction(valor))


@dataclass(frozen=True)
class ArchivoJuego:
    """
    Contenido de un archivo de juego.

    :param pesos: pesos exógenos de φ² por id de jugador
    :param union_distinguida: ids de la unión B′ de φ⁵
    """
    juego_cs: JuegoCS
    pesos: Optional[Dict[int, Fraction]] = field(default=None, compare=False)
    union_distinguida: Optional[Tuple[int, ...]] = None

    @property
    def referencia(self) -> Optional[int]:
        """Jugador que identifica a B′ ante φ⁵."""
        return min(self.union_distinguida) if self.union_distinguida else None

    def config_valores(self) -> Dict[str, Dict[str, Any]]:
        """Parámetros por regla con el formato de la sección `valores` de config.json."""
        config: Dict[str, Dict[str, Any]] = {}
        if self.pesos is not None:
            config['phi2'] = {'pesos': dict(self.pesos)}
        if self.referencia is not None:
            config['phi5'] = {'referencia': self.referencia}
        return config


class Mapeador(metaclass=ABCMeta):
    """Traducción entre una entidad y su representación persistida (texto)."""

    @abstractmethod
    def ir_a_persistidor(self, entidad: Any) -> str:
        pass

    @abstractmethod
    def venir_desde_persistidor(self, entidad_mapeada: str) -> Any:
        pass


class MapeadorArchivoJuego(Mapeador):
    """Lectura y escritura canónica de archivos de juego."""

    def ir_a_persistidor(self, entidad) -> str:
        """:param entidad: ArchivoJuego o JuegoCS"""
        return json.dumps(self.a_documento(entidad), indent=2, ensure_ascii=False) + '\n'

    def venir_desde_persistidor(self, entidad_mapeada: str) -> ArchivoJuego:
        """:raises ErrorFormatoArchivo: ante cualquier falta de formato"""
        return self.desde_documento(_cargar_json(entidad_mapeada))

    # -------------------------------------------------------------------------
    # Documento (dict) <-> ArchivoJuego
    # -------------------------------------------------------------------------

    @staticmethod
    def a_documento(entidad) -> Dict[str, Any]:
        archivo = entidad if isinstance(entidad, ArchivoJuego) else ArchivoJuego(entidad)
        juego_cs = archivo.juego_cs
        juego = juego_cs.juego
        documento: Dict[str, Any] = {
            'players': list(juego.jugadores),
            'structure': [list(bloque) for bloque in juego_cs.estructura.bloques()],
            'worths': {
                clave_coalicion(juego.coalicion(mascara)): texto_racional(valor)
                for mascara, valor in enumerate(juego.valores) if mascara and valor != 0
            },
        }
        if archivo.pesos is not None:
            documento['weights'] = {str(j): texto_racional(w) for j, w in sorted(archivo.pesos.items())}
        if archivo.union_distinguida is not None:
            documento['distinguished_union'] = sorted(archivo.union_distinguida)
        return documento

    def desde_documento(self, documento: Dict[str, Any]) -> ArchivoJuego:
        jugadores = self._jugadores(documento.get('players'))
        estructura = self._estructura(jugadores, documento.get('structure'))

        if 'worths' in documento and 'dividends' in documento:
            raise ErrorFormatoArchivo("'worths' y 'dividends' son excluyentes")
        if 'dividends' in documento:
            tabla = self._tabla(jugadores, documento['dividends'], 'dividends')
            juego = TablaDividendos(jugadores, tabla).a_juego()
        else:
            tabla = self._tabla(jugadores, documento.get('worths', {}), 'worths')
            juego = Juego(jugadores, tabla)

        pesos = self._pesos(jugadores, documento['weights']) if 'weights' in documento else None
        distinguida = None
        if documento.get('distinguished_union') is not None:
            distinguida = self._union_distinguida(estructura, documento['distinguished_union'])
        return ArchivoJuego(JuegoCS(juego, estructura), pesos, distinguida)

    # -------------------------------------------------------------------------
    # Campos
    # -------------------------------------------------------------------------

    @staticmethod
    def _jugadores(valor: Any) -> Tuple[int, ...]:
        if not isinstance(valor, list) or not valor:
            raise ErrorFormatoArchivo("'players' debe ser una lista no vacía de ids")
        ids = [_id_jugador(j, 'players') for j in valor]
        repetidos = sorted({j for j in ids if ids.count(j) > 1})
        if repetidos:
            raise ErrorFormatoArchivo(f"Ids de jugador repetidos: {repetidos}")
        if any(j < 0 for j in ids):
            raise ErrorFormatoArchivo(f"Los ids de jugador deben ser no negativos: {ids}")
        return tuple(sorted(ids))

    @staticmethod
    def _estructura(jugadores: Tuple[int, ...], valor: Any) -> EstructuraCoaliciones:
        if not isinstance(valor, list) or not all(isinstance(b, list) for b in valor):
            raise ErrorFormatoArchivo("'structure' debe ser una lista de listas de ids")
        bloques = [[_id_jugador(j, 'structure') for j in bloque] for bloque in valor]
        try:
            return EstructuraCoaliciones.desde_bloques(jugadores, bloques)
        except ErrorJuego as ex:
            raise ErrorFormatoArchivo(f"La estructura no es una partición de los jugadores: {ex}") from ex

    @staticmethod
    def _mascara(jugadores: Tuple[int, ...], clave: str, campo: str) -> int:
        if not isinstance(clave, str) or not clave.strip():
            raise ErrorFormatoArchivo(f"Clave de coalición vacía en '{campo}'")
        ids = [_id_jugador(parte, campo) for parte in clave.split(',')]
        if len(set(ids)) != len(ids):
            raise ErrorFormatoArchivo(f"Jugador repetido en la clave '{clave}' de '{campo}'")
        if any(a > b for a, b in zip(ids, ids[1:])):
            raise ErrorFormatoArchivo(f"La clave '{clave}' de '{campo}' debe listar los ids en orden ascendente")
        mascara = 0
        for jugador in ids:
            if jugador not in jugadores:
                raise ErrorFormatoArchivo(f"Jugador desconocido {jugador} en la clave '{clave}' de '{campo}'")
            mascara |= 1 << jugadores.index(jugador)
        return mascara

    def _tabla(self, jugadores: Tuple[int, ...], valor: Any, campo: str) -> List[Fraction]:
        if not isinstance(valor, dict):
            raise ErrorFormatoArchivo(f"'{campo}' debe ser un objeto coalición -> número")
        tabla = [Fraction(0)] * (1 << len(jugadores))
        vistas = set()
        for clave, numero in valor.items():
            mascara = self._mascara(jugadores, clave, campo)
            if mascara in vistas:
                raise ErrorFormatoArchivo(f"Coalición repetida en '{campo}': '{clave}'")
            vistas.add(mascara)
            tabla[mascara] = _numero(numero, f"{campo}['{clave}']")
        return tabla

    @staticmethod
    def _pesos(jugadores: Tuple[int, ...], valor: Any) -> Dict[int, Fraction]:
        if not isinstance(valor, dict):
            raise ErrorFormatoArchivo("'weights' debe ser un objeto id -> peso")
        pesos = {}
        for clave, numero in valor.items():
            jugador = _id_jugador(clave, 'weights')
            if jugador not in jugadores:
                raise ErrorFormatoArchivo(f"Peso para un jugador desconocido: {jugador}")
            peso = _numero(numero, f"weights['{clave}']")
            if peso <= 0:
                raise ErrorFormatoArchivo(f"El peso del jugador {jugador} debe ser positivo, se recibió {peso}")
            pesos[jugador] = peso
        return pesos

    @staticmethod
    def _union_distinguida(estructura: EstructuraCoaliciones, valor: Any) -> Tuple[int, ...]:
        if not isinstance(valor, list) or not valor:
            raise ErrorFormatoArchivo("'distinguished_union' debe ser una lista no vacía de ids")
        ids = tuple(sorted(_id_jugador(j, 'distinguished_union') for j in valor))
        if ids not in estructura.bloques():
            raise ErrorFormatoArchivo(
                f"'distinguished_union' {list(ids)} no es una unión de la estructura"
            )
        return ids


class MapeadorTestigo(Mapeador):
    """Testigo de violación como documento JSON con los juegos embebidos."""

    def __init__(self, mapeador_juego: Optional[MapeadorArchivoJuego] = None):
        self._mapeador_juego = mapeador_juego or MapeadorArchivoJuego()

    def a_documento(self, testigo: Testigo) -> Dict[str, Any]:
        return {
            'id': testigo.id,
            'axiom': testigo.axioma,
            'rule': testigo.regla,
            'description': testigo.descripcion,
            'left': texto_racional(testigo.lado_izquierdo),
            'right': texto_racional(testigo.lado_derecho),
            'players': list(testigo.jugadores),
            'unions': list(testigo.uniones),
            'games': [self._mapeador_juego.a_documento(juego_cs) for juego_cs in testigo.juegos],
        }

    def ir_a_persistidor(self, entidad: Testigo) -> str:
        return json.dumps(self.a_documento(entidad), indent=2, ensure_ascii=False) + '\n'

    def venir_desde_persistidor(self, entidad_mapeada: str) -> Testigo:
        documento = _cargar_json(entidad_mapeada)
        try:
            juegos = tuple(self._mapeador_juego.desde_documento(d).juego_cs for d in documento['games'])
            return Testigo(
                axioma=documento['axiom'],
                regla=documento['rule'],
                juegos=juegos,
                lado_izquierdo=_numero(documento['left'], 'left'),
                lado_derecho=_numero(documento['right'], 'right'),
                descripcion=documento.get('description', ''),
                jugadores=tuple(documento.get('players', ())),
                uniones=tuple(documento.get('unions', ())),
            )
        except (KeyError, TypeError) as ex:
            raise ErrorFormatoArchivo(f"Testigo incompleto: falta {ex}") from ex


def leer_archivo_juego(ruta: str) -> ArchivoJuego:
    """
    :raises OSError: si el archivo no puede leerse
    :raises ErrorFormatoArchivo: si el contenido no respeta el formato
    """
    with open(ruta, 'r', encoding='utf-8') as archivo:
        return MapeadorArchivoJuego().venir_desde_persistidor(archivo.read())
