#!/usr/bin/env python3
"""
Generadores de datos aleatorios reproducibles para las pruebas de
propiedades: grafos trivalentes orientados, racionales y matrices.
"""

import random
from fractions import Fraction
from typing import List, Optional

import sympy as sp

from core.grafos import GrafoOrientado


def grafo_aleatorio(grado: int, rng: Optional[random.Random] = None,
                    sin_lazos: bool = False, intentos: int = 1000) -> GrafoOrientado:
    """
    Emparejamiento perfecto uniforme de las 6k banderas.

    Con sin_lazos=True se repite hasta obtener un grafo sin lazos.
    """
    if grado < 1:
        raise ValueError(f"Grado no válido: {grado}")
    rng = rng or random.Random()
    for _ in range(intentos):
        banderas = list(range(6 * grado))
        rng.shuffle(banderas)
        aristas = [((f // 3, f % 3), (g // 3, g % 3))
                   for f, g in zip(banderas[::2], banderas[1::2])]
        grafo = GrafoOrientado(2 * grado, aristas)
        if not (sin_lazos and grafo.tiene_lazo()):
            return grafo
    raise ValueError(f"No se encontró un grafo sin lazos de grado {grado}")


def grafos_aleatorios(cantidad: int, grado_maximo: int = 4, semilla: int = 2024,
                      sin_lazos: bool = False) -> List[GrafoOrientado]:
    rng = random.Random(semilla)
    return [grafo_aleatorio(rng.randint(1, grado_maximo), rng, sin_lazos) for _ in range(cantidad)]


def permutacion_aleatoria(n: int, rng: random.Random) -> List[int]:
    permutacion = list(range(n))
    rng.shuffle(permutacion)
    return permutacion


def racional_aleatorio(rng: random.Random, cota: int = 20) -> Fraction:
    return Fraction(rng.randint(-cota, cota), rng.randint(1, cota))


def matriz_aleatoria(rng: random.Random, filas: int = 2, columnas: int = 2, cota: int = 9) -> sp.Matrix:
    """Matriz de sympy con entradas racionales pequeñas."""
    return sp.Matrix(filas, columnas,
                     lambda i, j: sp.Rational(rng.randint(-cota, cota), rng.randint(1, cota)))
