"""
Errores del verificador de axiomas.
"""


class ErrorFamilia(ValueError):
    """Especificación de familia inválida o que excede los topes de enumeración."""
