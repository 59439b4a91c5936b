#!/usr/bin/env python3
"""
Álgebra lineal exacta sobre los racionales.

EliminacionDispersa mantiene una forma escalonada reducida incremental
con filas dispersas {columna: Fraction}. resolver_sistema resuelve
sistemas densos pequeños con sympy e informa de la indeterminación.
"""

from fractions import Fraction
from typing import Dict, Hashable, List, Optional, Sequence

import sympy as sp

from .errores import ErrorCalculo

FilaDispersa = Dict[Hashable, Fraction]


class EliminacionDispersa:
    """
    Gauss-Jordan incremental con prioridad de columnas.

    El pivote de cada fila es su columna de menor prioridad; las columnas
    con prioridad alta quedan libres mientras sea posible.
    """

    def __init__(self, prioridad: Dict[Hashable, int]):
        self.prioridad = prioridad
        self.pivotes: Dict[Hashable, FilaDispersa] = {}
        # columna -> pivotes cuya fila la contiene
        self._apariciones: Dict[Hashable, set] = {}

    def _reducir(self, fila: FilaDispersa) -> FilaDispersa:
        fila = {c: v for c, v in fila.items() if v}
        for c in [c for c in fila if c in self.pivotes]:
            factor = fila.pop(c, 0)
            if not factor:
                continue
            for c2, v2 in self.pivotes[c].items():
                if c2 == c:
                    continue
                nuevo = fila.get(c2, 0) - factor * v2
                if nuevo:
                    fila[c2] = nuevo
                else:
                    fila.pop(c2, None)
        return fila

    def agregar_fila(self, fila: FilaDispersa) -> bool:
        """Añade una relación; devuelve True si aumentó el rango."""
        fila = self._reducir(fila)
        if not fila:
            return False

        pivote = min(fila, key=lambda c: self.prioridad[c])
        escala = fila[pivote]
        fila = {c: v / escala for c, v in fila.items()}

        # eliminar la nueva columna pivote del resto de filas
        for otro in list(self._apariciones.get(pivote, ())):
            fila_otra = self.pivotes[otro]
            factor = fila_otra.pop(pivote)
            self._apariciones[pivote].discard(otro)
            for c, v in fila.items():
                if c == pivote:
                    continue
                nuevo = fila_otra.get(c, 0) - factor * v
                if nuevo:
                    if c not in fila_otra:
                        self._apariciones.setdefault(c, set()).add(otro)
                    fila_otra[c] = nuevo
                elif c in fila_otra:
                    del fila_otra[c]
                    self._apariciones[c].discard(otro)

        self.pivotes[pivote] = fila
        for c in fila:
            if c != pivote:
                self._apariciones.setdefault(c, set()).add(pivote)
        return True

    @property
    def rango(self) -> int:
        return len(self.pivotes)

    def es_pivote(self, columna: Hashable) -> bool:
        return columna in self.pivotes

    def expresar(self, columna: Hashable) -> FilaDispersa:
        """Columna módulo las relaciones, en términos de columnas libres."""
        if columna not in self.pivotes:
            return {columna: Fraction(1)}
        return {c: -v for c, v in self.pivotes[columna].items() if c != columna}


class SolucionLineal:
    """Resultado de resolver A x = b: particular + combinaciones del núcleo."""

    def __init__(self, particular: Optional[List[Fraction]], nucleo: List[List[Fraction]]):
        self.particular = particular
        self.nucleo = nucleo

    @property
    def factible(self) -> bool:
        return self.particular is not None

    @property
    def unica(self) -> bool:
        return self.factible and not self.nucleo

    def __repr__(self) -> str:
        if not self.factible:
            return "SolucionLineal(infactible)"
        return f"SolucionLineal({self.particular}, núcleo de dimensión {len(self.nucleo)})"


def a_fraccion(valor) -> Fraction:
    """Convierte racionales de sympy, enteros o cadenas 'p/q' a Fraction."""
    if isinstance(valor, Fraction):
        return valor
    if isinstance(valor, int):
        return Fraction(valor)
    if isinstance(valor, str):
        return Fraction(valor)
    valor = sp.nsimplify(valor) if not isinstance(valor, sp.Basic) else valor
    if not valor.is_Rational:
        raise ErrorCalculo(f"Valor no racional: {valor}")
    return Fraction(int(valor.p), int(valor.q))


def matriz_sympy(filas: Sequence[Sequence]) -> sp.Matrix:
    return sp.Matrix([[sp.Rational(v.numerator, v.denominator) if isinstance(v, Fraction) else v
                       for v in fila] for fila in filas])


def resolver_sistema(matriz: Sequence[Sequence], lado_derecho: Sequence) -> SolucionLineal:
    """Resuelve exactamente A x = b; devuelve la solución y base del núcleo."""
    if not matriz:
        raise ErrorCalculo("Sistema vacío")
    A = matriz_sympy(matriz)
    b = matriz_sympy([[v] for v in lado_derecho])
    aumentada = A.row_join(b)
    reducida, pivotes = aumentada.rref()
    columnas = A.shape[1]
    if columnas in pivotes:
        return SolucionLineal(None, [])

    particular = [Fraction(0)] * columnas
    for fila, columna in enumerate(pivotes):
        particular[columna] = a_fraccion(reducida[fila, columnas])
    nucleo = [[a_fraccion(x) for x in vector] for vector in A.nullspace()]
    return SolucionLineal(particular, nucleo)


def invertir(matriz: Sequence[Sequence]) -> List[List[Fraction]]:
    A = matriz_sympy(matriz)
    if A.rows != A.cols or A.det() == 0:
        raise ErrorCalculo("La matriz no es invertible")
    inversa = A.inv()
    return [[a_fraccion(inversa[i, j]) for j in range(A.cols)] for i in range(A.rows)]
