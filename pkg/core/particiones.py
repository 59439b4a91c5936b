#!/usr/bin/env python3
"""
Particiones enteras como tuplas débilmente decrecientes.

El orden fijo de todas las tablas es el lexicográfico creciente de las
tuplas decrecientes: (1,1,1,1) < (2,1,1) < (2,2) < (3,1) < (4).
"""

from collections import Counter
from functools import lru_cache
from math import factorial
from typing import Dict, Iterable, List, Tuple

from sympy.utilities.iterables import partitions as _particiones_sympy

from .errores import ErrorParticion

Particion = Tuple[int, ...]


def normalizar(partes: Iterable[int]) -> Particion:
    """Ordena las partes de mayor a menor; rechaza partes negativas."""
    partes = tuple(sorted((int(p) for p in partes), reverse=True))
    if any(p < 0 for p in partes):
        raise ErrorParticion(f"Partición con partes negativas: {partes}")
    return partes


@lru_cache(maxsize=None)
def particiones(n: int) -> Tuple[Particion, ...]:
    """Todas las particiones de n en el orden de las tablas."""
    if n < 0:
        raise ErrorParticion(f"No hay particiones de {n}")
    if n == 0:
        return ((),)
    resultado = []
    for multiplicidades in _particiones_sympy(n):
        partes = []
        for parte, veces in dict(multiplicidades).items():
            partes.extend([parte] * veces)
        resultado.append(normalizar(partes))
    return tuple(sorted(resultado))


def numero_particiones(n: int) -> int:
    return len(particiones(n))


def particiones_pares(peso: int) -> Tuple[Particion, ...]:
    """Particiones pares de 'peso' (todas las partes pares)."""
    if peso % 2:
        return ()
    return tuple(duplicar(p) for p in particiones(peso // 2))


def es_par(particion: Particion) -> bool:
    return all(p % 2 == 0 for p in particion)


def peso(particion: Particion) -> int:
    return sum(particion)


def duplicar(particion: Particion) -> Particion:
    return tuple(2 * p for p in particion)


def mitad(particion: Particion) -> Particion:
    if not es_par(particion):
        raise ErrorParticion(f"La partición {particion} tiene partes impares")
    return tuple(p // 2 for p in particion)


def validar_par(particion: Particion, peso_esperado: int = None) -> Particion:
    """Normaliza y comprueba que la partición sea par y del peso indicado."""
    particion = normalizar(particion)
    if not es_par(particion):
        raise ErrorParticion(f"Parte impar en {particion}")
    if peso_esperado is not None and peso(particion) != peso_esperado:
        raise ErrorParticion(
            f"La partición {particion} tiene peso {peso(particion)}, se esperaba {peso_esperado}"
        )
    return particion


def multiplicidades(particion: Particion) -> Dict[int, int]:
    return dict(Counter(particion))


def factorial_multiplicidades(particion: Particion) -> int:
    """Producto de m_i! sobre las multiplicidades de las partes."""
    total = 1
    for veces in Counter(particion).values():
        total *= factorial(veces)
    return total


def parsear_particion(texto: str) -> Particion:
    """'2,2,4' -> (4, 2, 2)."""
    try:
        partes = [int(t) for t in texto.replace(' ', '').split(',') if t]
    except ValueError:
        raise ErrorParticion(f"Partición no válida: '{texto}'")
    if not partes or any(p <= 0 for p in partes):
        raise ErrorParticion(f"Partición no válida: '{texto}'")
    return normalizar(partes)


def formatear_particion(particion: Particion) -> str:
    return ','.join(str(p) for p in particion)


def sub_multiconjuntos(particion: Particion) -> List[Tuple[Particion, Particion]]:
    """
    Todas las divisiones por posiciones de las partes en dos grupos
    (2^j términos, con repeticiones si hay partes iguales).
    """
    j = len(particion)
    divisiones = []
    for mascara in range(1 << j):
        izquierda = tuple(particion[i] for i in range(j) if mascara >> i & 1)
        derecha = tuple(particion[i] for i in range(j) if not mascara >> i & 1)
        divisiones.append((izquierda, derecha))
    return divisiones
