from setuptools import setup

setup(
    name="valores-juego",
    version="1.0.0",
    description="Reglas de asignación exactas: Shapley, Owen y reglas de contraejemplo",
    author="Equipo owen-axiomas",
    license="MIT",
    package_dir={'valores_juego': '.'},
    packages=['valores_juego'],
    python_requires=">=3.8",
    install_requires=[
        "dominio-juego>=1.0.0",
        "predicados-juego>=1.0.0",
    ],
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
)
