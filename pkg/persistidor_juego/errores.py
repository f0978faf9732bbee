"""
Errores de lectura de archivos de juego y de testigos.
"""
from dominio_juego import ErrorJuego


class ErrorFormatoArchivo(ErrorJuego):
    """El documento no respeta el formato de archivo de juego."""
