"""
Coaliciones como máscaras de bits sobre el orden canónico del plantel.

El bit k representa al k-ésimo jugador en orden ascendente de id.
La coalición vacía es la máscara 0.
"""
from typing import Iterator


def cardinal(mascara: int) -> int:
    """Cantidad de jugadores en la coalición."""
    return bin(mascara).count('1')


def posiciones(mascara: int) -> Iterator[int]:
    """Posiciones (bits) presentes en la máscara, en orden ascendente."""
    posicion = 0
    while mascara:
        if mascara & 1:
            yield posicion
        mascara >>= 1
        posicion += 1


def submascaras(mascara: int) -> Iterator[int]:
    """
    Recorre todas las submáscaras de `mascara` en orden ascendente,
    incluyendo 0 y la propia máscara.
    """
    actual = 0
    while True:
        yield actual
        if actual == mascara:
            return
        actual = (actual - mascara) & mascara


def comprimir(mascara: int, conservar: int) -> int:
    """
    Reindexa `mascara` sobre las posiciones de `conservar`.

    El j-ésimo bit presente en `conservar` pasa a ser el bit j del resultado.
    Los bits de `mascara` fuera de `conservar` se descartan.
    """
    resultado = 0
    for indice, posicion in enumerate(posiciones(conservar)):
        if mascara >> posicion & 1:
            resultado |= 1 << indice
    return resultado


def bit_menor(mascara: int) -> int:
    """Posición del bit menos significativo (mascara != 0)."""
    return (mascara & -mascara).bit_length() - 1
