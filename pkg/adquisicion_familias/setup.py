"""
Setup para el paquete adquisicion_familias
"""
from setuptools import setup

setup(
    name="adquisicion-familias",
    version="1.0.0",
    description="Familias deterministas de juegos con estructura: fixtures, enumeración y muestras con semilla",
    author="Equipo owen-axiomas",
    license="MIT",
    package_dir={'adquisicion_familias': '.'},
    packages=['adquisicion_familias'],
    package_data={'adquisicion_familias': ['fixtures/*.json']},
    python_requires=">=3.8",
    install_requires=[
        "dominio-juego>=1.0.0",
        "verificacion-axiomas>=1.0.0",
        "persistidor-juego>=1.0.0",
    ],
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
)
