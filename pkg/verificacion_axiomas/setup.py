from setuptools import setup

setup(
    name="verificacion-axiomas",
    version="1.0.0",
    description="Verificación exacta de axiomas e independencia lógica sobre familias de juegos",
    author="Equipo owen-axiomas",
    license="MIT",
    package_dir={'verificacion_axiomas': '.'},
    packages=['verificacion_axiomas'],
    python_requires=">=3.8",
    install_requires=[
        "dominio-juego>=1.0.0",
        "predicados-juego>=1.0.0",
        "valores-juego>=1.0.0",
        "supervisor>=1.0.0",
    ],
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
)
