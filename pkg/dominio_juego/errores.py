"""
Errores del dominio de juegos cooperativos.

Todos derivan de ValueError: son entradas inválidas, no fallas del sistema.
"""


class ErrorJuego(ValueError):
    """Error base del dominio de juegos."""


class JugadorDesconocidoError(ErrorJuego):
    """El identificador de jugador no pertenece al plantel."""

    def __init__(self, jugador, jugadores):
        super().__init__(
            f"Jugador desconocido: {jugador!r}. Plantel: {list(jugadores)}"
        )
        self.jugador = jugador


class PlantelIncompatibleError(ErrorJuego):
    """Dos juegos (o juego y estructura) no comparten el mismo plantel."""


class CoalicionInvalidaError(ErrorJuego):
    """Coalición vacía donde se requiere una, o con bits fuera del plantel."""


class EstructuraInvalidaError(ErrorJuego):
    """La estructura no es una partición del plantel, o el índice de unión es inválido."""
