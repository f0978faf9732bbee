from setuptools import setup

setup(
    name="predicados-juego",
    version="1.0.0",
    description="Predicados exactos sobre jugadores y uniones de juegos con estructura de coaliciones",
    author="Equipo owen-axiomas",
    license="MIT",
    package_dir={'predicados_juego': '.'},
    packages=['predicados_juego'],
    python_requires=">=3.8",
    install_requires=[
        "dominio-juego>=1.0.0",
    ],
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
)
