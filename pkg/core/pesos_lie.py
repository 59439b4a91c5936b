#!/usr/bin/env python3
"""
Sistemas de pesos de álgebras de Lie sobre grafos trivalentes.

El peso c_Γ(g) coloca c_ijk en cada vértice (en el orden de sus ranuras)
y contrae los índices a lo largo de las aristas con la métrica σ^ij. La
red de tensores se contrae por pares con numpy (dtype=object, Fraction).
"""

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from math import factorial
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
import sympy as sp

from .algebra_lineal import SolucionLineal, matriz_sympy, resolver_sistema
from .configuracion import obtener_logger
from .errores import ErrorCalculo, ErrorGrado, ErrorParticion
from .grafos import ClaveCanonica, GrafoOrientado, componentes_conexas, grafo_desde_clave
from .homologia import VectorGrafos, calcular_base, clausura
from .particiones import Particion, duplicar, normalizar, particiones

logger = obtener_logger('pesos_lie')


def _arreglo_fracciones(datos) -> np.ndarray:
    arreglo = np.array(datos, dtype=object)
    return np.vectorize(Fraction, otypes=[object])(arreglo)


class DatosLie:
    """
    Constantes de estructura totalmente antisimétricas y métrica inversa.

    La invariancia ad de c_ijk no se comprueba; un dato no invariante se
    delata porque las relaciones IHX dejan de anularse.
    """

    def __init__(self, nombre: str, metrica_inv, estructura):
        self.nombre = nombre
        self.metrica_inv = _arreglo_fracciones(metrica_inv)
        self.estructura = _arreglo_fracciones(estructura)
        n = self.metrica_inv.shape[0]
        self.dim = n

        if self.metrica_inv.shape != (n, n) or self.estructura.shape != (n, n, n):
            raise ValueError(f"Dimensiones incompatibles en el dato de Lie '{nombre}'")
        if not np.array_equal(self.metrica_inv, self.metrica_inv.T):
            raise ValueError(f"La métrica de '{nombre}' no es simétrica")
        if matriz_sympy(self.metrica_inv.tolist()).det() == 0:
            raise ValueError(f"La métrica de '{nombre}' no es invertible")
        c = self.estructura
        for ejes in ((1, 0, 2), (0, 2, 1), (2, 1, 0)):
            if not np.array_equal(np.transpose(c, ejes), -c):
                raise ValueError(f"Las constantes de '{nombre}' no son antisimétricas")

    def __repr__(self) -> str:
        return f"DatosLie('{self.nombre}', dim={self.dim})"


def _antisimetrizar(entradas: Dict[Tuple[int, int, int], int], n: int) -> np.ndarray:
    c = np.zeros((n, n, n), dtype=object)
    c[...] = Fraction(0)
    for (i, j, k), valor in entradas.items():
        for (a, b, d), signo in (((i, j, k), 1), ((j, k, i), 1), ((k, i, j), 1),
                                 ((j, i, k), -1), ((i, k, j), -1), ((k, j, i), -1)):
            c[a, b, d] = Fraction(signo * valor)
    return c


@lru_cache(maxsize=None)
def su2() -> DatosLie:
    """su(2) con c_ijk = ε_ijk y métrica δ."""
    return DatosLie('su2', np.eye(3, dtype=int).tolist(), _antisimetrizar({(0, 1, 2): 1}, 3))


@lru_cache(maxsize=None)
def dato_abeliano() -> DatosLie:
    """Álgebra abeliana de dimensión 1: todo grafo con vértices pesa 0."""
    return DatosLie('abeliano', [[1]], np.zeros((1, 1, 1), dtype=int))


@lru_cache(maxsize=None)
def dato_no_invariante() -> DatosLie:
    """
    Tensor antisimétrico e_123 + e_145 en dimensión 5 con métrica δ.

    No satisface Jacobi; en dimensión 3 cualquier tensor antisimétrico es
    múltiplo de ε y sí lo satisface.
    """
    return DatosLie('no_invariante', np.eye(5, dtype=int).tolist(),
                    _antisimetrizar({(0, 1, 2): 1, (0, 3, 4): 1}, 5))


# ---------------------------------------------------------------------------
# Contracción
# ---------------------------------------------------------------------------

def _trazar_repetidas(tensor: np.ndarray, patas: List[int]) -> Tuple[np.ndarray, List[int]]:
    while True:
        repetidas = [(i, j) for i, j in combinations(range(len(patas)), 2) if patas[i] == patas[j]]
        if not repetidas:
            return tensor, patas
        i, j = repetidas[0]
        tensor = np.trace(tensor, axis1=i, axis2=j)
        patas = [p for t, p in enumerate(patas) if t not in (i, j)]


def _contraer_conexo(grafo: GrafoOrientado, datos: DatosLie) -> Fraction:
    id_arista = {}
    for e, (a, b) in enumerate(grafo.aristas):
        id_arista[a] = e
        id_arista[b] = e

    red = []
    for v in range(grafo.num_vertices):
        tensor = datos.estructura
        for s in range(3):
            # la métrica se absorbe en la primera bandera de cada arista
            if (v, s) < grafo.companero_de((v, s)):
                tensor = np.moveaxis(np.tensordot(tensor, datos.metrica_inv, axes=([s], [0])), -1, s)
        red.append(_trazar_repetidas(tensor, [id_arista[(v, s)] for s in range(3)]))

    while len(red) > 1:
        mejor = None
        for i, j in combinations(range(len(red)), 2):
            compartidas = set(red[i][1]) & set(red[j][1])
            if not compartidas:
                continue
            rango = len(red[i][1]) + len(red[j][1]) - 2 * len(compartidas)
            if mejor is None or rango < mejor[0]:
                mejor = (rango, i, j)
        if mejor is None:
            raise ErrorCalculo("La red de tensores no es conexa")
        _, i, j = mejor
        (ta, pa), (tb, pb) = red[i], red[j]
        comunes = [p for p in pa if p in pb]
        ejes_a = [pa.index(p) for p in comunes]
        ejes_b = [pb.index(p) for p in comunes]
        tensor = np.tensordot(ta, tb, axes=(ejes_a, ejes_b))
        patas = [p for p in pa if p not in comunes] + [p for p in pb if p not in comunes]
        red = [x for t, x in enumerate(red) if t not in (i, j)]
        red.append(_trazar_repetidas(tensor, patas))

    tensor, patas = red[0]
    if patas:
        raise ErrorCalculo("Quedaron índices sin contraer")
    return Fraction(np.asarray(tensor, dtype=object).item())


def peso_lie(grafo: GrafoOrientado, datos: DatosLie) -> Fraction:
    """c_Γ(g): producto de las contracciones de cada componente conexa."""
    total = Fraction(1)
    for componente in componentes_conexas(grafo):
        total *= _contraer_conexo(componente, datos)
        if not total:
            break
    return total


def peso_lie_ingenuo(grafo: GrafoOrientado, datos: DatosLie) -> Fraction:
    """Suma directa sobre asignaciones de índices; solo para grafos pequeños."""
    aristas = grafo.aristas
    opciones = []
    for _ in aristas:
        opciones.append([(i, j) for i in range(datos.dim) for j in range(datos.dim)
                         if datos.metrica_inv[i, j]])
    total = Fraction(0)
    for eleccion in product(*opciones):
        indice = {}
        factor = Fraction(1)
        for (a, b), (i, j) in zip(aristas, eleccion):
            indice[a], indice[b] = i, j
            factor *= datos.metrica_inv[i, j]
        for v in range(grafo.num_vertices):
            factor *= datos.estructura[indice[(v, 0)], indice[(v, 1)], indice[(v, 2)]]
            if not factor:
                break
        total += factor
    return total


def peso_vector(vector: VectorGrafos, datos: DatosLie) -> Fraction:
    return sum((coef * _peso_clave(clave, datos) for clave, coef in vector.terminos.items()),
               Fraction(0))


@lru_cache(maxsize=50000)
def _peso_clave(clave: ClaveCanonica, datos: DatosLie) -> Fraction:
    # DatosLie se compara por identidad
    return peso_lie(grafo_desde_clave(clave), datos)


# ---------------------------------------------------------------------------
# su(2): forma cerrada y recursión
# ---------------------------------------------------------------------------

def _validar_su2(particion: Particion) -> Particion:
    particion = normalizar(particion)
    if any(p % 2 for p in particion):
        raise ErrorParticion(f"Parte impar en {particion}")
    return particion


def su2_forma_cerrada(particion: Particion) -> Fraction:
    """
    c_⟨w_λ1⋯w_λj⟩(su(2)) = 2^{j−1} (−1)^k (2k+1)! / (2^{k−1} k!).

    Cada parte nula aporta un factor 3 y no cuenta en j.
    """
    particion = _validar_su2(particion)
    ceros = particion.count(0)
    positivas = [p for p in particion if p]
    if not positivas:
        return Fraction(3 ** ceros)
    j = len(positivas)
    k = sum(positivas) // 2
    rueda = Fraction((-1) ** k * factorial(2 * k + 1), 2 ** (k - 1) * factorial(k))
    return 3 ** ceros * 2 ** (j - 1) * rueda


@lru_cache(maxsize=None)
def _recursion(particion: Particion) -> Fraction:
    ceros = particion.count(0)
    positivas = tuple(p for p in particion if p)
    if ceros:
        return 3 ** ceros * _recursion(positivas)
    if not positivas:
        return Fraction(1)

    k = sum(positivas) // 2
    total = Fraction(0)
    for s, parte in enumerate(positivas):
        resto = positivas[:s] + positivas[s + 1:]
        total += Fraction(parte, 2) * _recursion(normalizar(resto + (parte - 2,)))
        for l in range(0, parte - 1, 2):
            total -= (l + 1) * _recursion(normalizar(resto + (parte - l - 2, l)))
    for s, t in combinations(range(len(positivas)), 2):
        resto = tuple(p for i, p in enumerate(positivas) if i not in (s, t))
        total -= 2 * positivas[s] * positivas[t] * _recursion(
            normalizar(resto + (positivas[s] + positivas[t] - 2,)))
    return total / k


def su2_recursion(particion: Particion) -> Fraction:
    """Mismo valor que su2_forma_cerrada, calculado por la recursión."""
    return _recursion(_validar_su2(particion))


def su2_contraccion(particion: Particion) -> Fraction:
    """Peso de su(2) contrayendo directamente todos los términos del cierre."""
    return peso_vector(clausura(particion), su2())


# ---------------------------------------------------------------------------
# Productos de pesos y coordenadas en polirruedas
# ---------------------------------------------------------------------------

def producto_pesos(grados: Sequence[int], vector: VectorGrafos,
                   datos: Optional[DatosLie] = None) -> Fraction:
    """
    (C_m1 ⋯ C_mr)(Γ): reparte las componentes entre las r ranuras; cada
    ranura evalúa su(2) si su número de vértices es 2·m_i, si no da 0.
    """
    datos = datos or su2()
    if any(m <= 0 for m in grados):
        raise ErrorGrado(f"Los grados deben ser positivos: {list(grados)}")
    if sum(grados) != vector.grado:
        raise ErrorGrado(f"Grados {list(grados)} no suman {vector.grado}")

    total = Fraction(0)
    for clave, coef in vector.terminos.items():
        piezas = componentes_conexas(grafo_desde_clave(clave))
        pesos = [peso_lie(p, datos) for p in piezas]
        for asignacion in product(range(len(grados)), repeat=len(piezas)):
            ocupados = [0] * len(grados)
            for pieza, ranura in zip(piezas, asignacion):
                ocupados[ranura] += pieza.grado
            if ocupados != list(grados):
                continue
            termino = coef
            for peso in pesos:
                termino *= peso
            total += termino
    return total


class ResultadoPolirruedas:
    """Coeficientes a_P de Γ = Σ a_P ⟨w_2P⟩, o el informe de indeterminación."""

    def __init__(self, grado: int, particiones_: List[Particion], solucion: SolucionLineal,
                 metodo: str):
        self.grado = grado
        self.particiones = particiones_
        self.solucion = solucion
        self.metodo = metodo

    @property
    def indeterminado(self) -> bool:
        return self.solucion.factible and not self.solucion.unica

    @property
    def coeficientes(self) -> Dict[Particion, Fraction]:
        if not self.solucion.factible:
            return {}
        return {p: v for p, v in zip(self.particiones, self.solucion.particular) if v}

    def __repr__(self) -> str:
        return (f"ResultadoPolirruedas(grado={self.grado}, método={self.metodo}, "
                f"indeterminado={self.indeterminado})")


def resolver_coordenadas_polirruedas(vector: VectorGrafos, grado: Optional[int] = None,
                                     reserva: bool = True) -> ResultadoPolirruedas:
    """
    Resuelve Σ_P a_P (C_μ)(⟨w_2P⟩) = (C_μ)(Γ) para todas las particiones μ
    de k. Si el sistema de su(2) es singular y 'reserva' está activo, se
    resuelve en la base de homología.
    """
    grado = vector.grado if grado is None else grado
    if grado != vector.grado:
        raise ErrorGrado(f"Vector de grado {vector.grado}, se pidió grado {grado}")
    indices = list(particiones(grado))
    cierres = {p: clausura(duplicar(p)) for p in indices}

    matriz = [[producto_pesos(mu, cierres[p]) for p in indices] for mu in indices]
    lado = [producto_pesos(mu, vector) for mu in indices]
    solucion = resolver_sistema(matriz, lado)
    if solucion.unica or not reserva:
        return ResultadoPolirruedas(grado, indices, solucion, 'su2')

    logger.warning(f"⚠️  Sistema su(2) singular en grado {grado}; se usa la reducción")
    return resolver_por_reduccion(vector, indices, cierres)


def resolver_por_reduccion(vector: VectorGrafos, indices=None, cierres=None) -> ResultadoPolirruedas:
    """Mismo sistema escrito con las coordenadas de la base de homología."""
    grado = vector.grado
    indices = indices or list(particiones(grado))
    cierres = cierres or {p: clausura(duplicar(p)) for p in indices}
    base = calcular_base(grado)
    columnas = [base.reducir(cierres[p]) for p in indices]
    objetivo = base.reducir(vector)
    matriz = [[columnas[j][i] for j in range(len(indices))] for i in range(base.dimension)]
    return ResultadoPolirruedas(grado, indices, resolver_sistema(matriz, objetivo), 'reduccion')


# ---------------------------------------------------------------------------
# Identidades matriciales de su(2)
# ---------------------------------------------------------------------------

def matrices_su2() -> List[sp.Matrix]:
    """La base x1, x2, x3 de so(3) ≅ su(2) con [x_i, x_j] = ε_ijk x_k."""
    return [sp.Matrix([[0, 1, 0], [-1, 0, 0], [0, 0, 0]]),
            sp.Matrix([[0, 0, -1], [0, 0, 0], [1, 0, 0]]),
            sp.Matrix([[0, 0, 0], [0, 0, 1], [0, -1, 0]])]


def lema_conjugacion(A: sp.Matrix) -> Tuple[sp.Matrix, sp.Matrix]:
    """(Σ x_i A x_i, Aᵗ − (Tr A) I)."""
    izquierda = sp.zeros(3, 3)
    for x in matrices_su2():
        izquierda += x * A * x
    return izquierda, A.T - A.trace() * sp.eye(3)


def lema_trazas(A: sp.Matrix, B: sp.Matrix) -> Tuple[sp.Expr, sp.Expr]:
    """(Σ Tr(A x_i) Tr(B x_i), −½ Tr((A − Aᵗ)(B − Bᵗ)))."""
    izquierda = sum(((A * x).trace() * (B * x).trace() for x in matrices_su2()), sp.Integer(0))
    derecha = -sp.Rational(1, 2) * ((A - A.T) * (B - B.T)).trace()
    return sp.simplify(izquierda), sp.simplify(derecha)
