"""
Errores de las reglas de asignación.
"""
from dominio_juego import ErrorJuego


class ErrorValor(ErrorJuego):
    """Parámetros inválidos de una regla (pesos no positivos o faltantes, selector inexistente)."""


class ErrorEvaluacionValor(ErrorValor):
    """
    Falla al evaluar una regla sobre un juego concreto.

    :param regla: nombre canónico de la regla
    :param juego_cs: juego con estructura que provocó la falla
    """

    def __init__(self, regla: str, juego_cs, causa: Exception):
        self.regla = regla
        self.juego_cs = juego_cs
        self.causa = causa
        super().__init__(
            f"La regla '{regla}' no pudo evaluarse sobre el plantel {list(juego_cs.jugadores)}: {causa}"
        )
