from setuptools import setup, find_packages
import os

def read_long_description():
    here = os.path.abspath(os.path.dirname(__file__))
    readme_path = os.path.join(here, 'README.md')
    if os.path.exists(readme_path):
        with open(readme_path, encoding='utf-8') as f:
            return f.read()
    return "Valor de Owen exacto, reglas alternativas y verificación de axiomas"

setup(
    name="owen-axiomas",
    version="1.0.0",
    description="Valor de Owen exacto, reglas alternativas y verificación de axiomas sobre familias de juegos",
    long_description=read_long_description(),
    long_description_content_type="text/markdown",
    author="Equipo owen-axiomas",
    license="MIT",
    packages=find_packages(),
    python_requires=">=3.8",
    install_requires=[
        "supervisor>=1.0.0",
        "dominio-juego>=1.0.0",
        "predicados-juego>=1.0.0",
        "valores-juego>=1.0.0",
        "verificacion-axiomas>=1.0.0",
        "persistidor-juego>=1.0.0",
        "adquisicion-familias>=1.0.0",
        "presentacion-juego>=1.0.0",
        "configurador>=1.0.0",
        "lanzador>=1.0.0",
    ],
    entry_points={
        'console_scripts': [
            'owen-axiomas=lanzador.lanzador:ejecutar',
        ],
    },
    include_package_data=True,
    package_data={
        'owen_axiomas': ['config/*.json'],
    },
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.12",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    keywords="owen value shapley value coalition structure cooperative games axioms",
    zip_safe=False,
)
