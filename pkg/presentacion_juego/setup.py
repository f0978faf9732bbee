"""
Setup para el paquete presentacion_juego
"""
from setuptools import setup

setup(
    name="presentacion-juego",
    version="1.0.0",
    description="Informes de texto y JSON deterministas para asignaciones, predicados y veredictos",
    author="Equipo owen-axiomas",
    license="MIT",
    package_dir={'presentacion_juego': '.'},
    packages=['presentacion_juego'],
    python_requires=">=3.8",
    install_requires=[
        "dominio-juego>=1.0.0",
        "predicados-juego>=1.0.0",
        "valores-juego>=1.0.0",
        "verificacion-axiomas>=1.0.0",
        "persistidor-juego>=1.0.0",
    ],
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Programming Language :: Python :: 3",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    keywords="reports, json, cooperative games",
)
