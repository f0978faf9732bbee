"""
Setup para el paquete persistidor_juego
"""
from setuptools import setup

setup(
    name="persistidor-juego",
    version="1.0.0",
    description="Formato de archivo de juego exacto y repositorio de testigos de violación",
    author="Equipo owen-axiomas",
    license="MIT",
    package_dir={'persistidor_juego': '.'},
    packages=['persistidor_juego'],
    python_requires=">=3.8",
    install_requires=[
        "dominio-juego>=1.0.0",
        "verificacion-axiomas>=1.0.0",
        "supervisor>=1.0.0",
    ],
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Programming Language :: Python :: 3",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    keywords="repository pattern, json, exact arithmetic, cooperative games",
)
