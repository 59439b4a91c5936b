#!/usr/bin/env python3
"""
Pruebas unitarias para los pesos de álgebras de Lie y las coordenadas en
polirruedas.
"""

import sys
import os
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import random
from fractions import Fraction

import numpy as np
import pytest

from core.errores import ErrorParticion
from core.grafos import collar, insertar_burbuja, parsear_grafo, theta, union_disjunta
from core.homologia import relacion_ihx, vector_clase
from core.particiones import particiones_pares
from core.pesos_lie import (DatosLie, dato_abeliano, dato_no_invariante, lema_conjugacion,
                            lema_trazas, peso_lie, peso_lie_ingenuo, peso_vector, producto_pesos,
                            resolver_coordenadas_polirruedas, resolver_por_reduccion, su2,
                            su2_contraccion, su2_forma_cerrada, su2_recursion)
from generadores.generador_grafos import grafos_aleatorios, matriz_aleatoria

F = Fraction

# Pesos de su(2) de la base en grados 1..4
PESOS_SU2 = {
    ('theta',): -6,
    ('theta', 'theta'): 36,
    ('theta_2',): 12,
    ('theta', 'theta', 'theta'): -216,
    ('theta', 'theta_2'): -72,
    ('theta_3',): -24,
    ('theta', 'theta', 'theta', 'theta'): 1296,
    ('theta', 'theta', 'theta_2'): 432,
    ('theta_2', 'theta_2'): 144,
    ('theta', 'theta_3'): 144,
    ('theta_4',): 48,
    ('g8b',): 24,
}


def test_peso_theta():
    """c_Θ(su(2)) = −6."""
    assert peso_lie(theta(), su2()) == -6


@pytest.mark.parametrize("clase,esperado", list(PESOS_SU2.items()))
def test_tabla_de_pesos_su2(clase, esperado):
    """Los doce pesos de su(2) de la base por contracción directa."""
    assert peso_vector(vector_clase(clase), su2()) == esperado


def test_lazo_pesa_cero():
    """ε_ijk δ^jk = 0."""
    grafo = parsear_grafo("trivalent 2\nedge 0.0 0.1\nedge 0.2 1.0\nedge 1.1 1.2")
    assert peso_lie(grafo, su2()) == 0


def test_contraccion_igual_a_suma_ingenua():
    """La contracción por pares coincide con la suma sobre índices."""
    for grafo in grafos_aleatorios(15, grado_maximo=2, semilla=3):
        assert peso_lie(grafo, su2()) == peso_lie_ingenuo(grafo, su2())


def test_multiplicativo_en_uniones():
    """c(g1 ⊔ g2) = c(g1) c(g2)."""
    for g1, g2 in [(theta(), collar(2)), (collar(2), collar(2)), (theta(), collar(3))]:
        assert peso_lie(union_disjunta(g1, g2), su2()) == peso_lie(g1, su2()) * peso_lie(g2, su2())


def test_regla_de_la_burbuja():
    """Insertar una 2-rueda multiplica el peso de su(2) por −2."""
    for grafo in grafos_aleatorios(20, grado_maximo=3, semilla=5, sin_lazos=True):
        assert peso_lie(insertar_burbuja(grafo), su2()) == -2 * peso_lie(grafo, su2())


def test_ley_as_en_pesos():
    """Invertir la orientación cambia el signo del peso."""
    for grafo in grafos_aleatorios(20, grado_maximo=3, semilla=9):
        assert peso_lie(grafo.transponer_ranuras(0, 0, 1), su2()) == -peso_lie(grafo, su2())


def test_dato_abeliano():
    """En el álgebra abeliana todo grafo con vértices pesa 0."""
    assert peso_lie(collar(2), dato_abeliano()) == 0


def test_dato_no_invariante_rompe_ihx():
    """Sin Jacobi las relaciones IHX de Θ₂ y Θ₃ dejan de pesar cero."""
    pesos = set()
    for grafo in (collar(2), collar(3)):
        for arista in grafo.aristas_sin_lazo():
            relacion = relacion_ihx(grafo, arista)
            assert peso_vector(relacion, su2()) == 0
            pesos.add(peso_vector(relacion, dato_no_invariante()))
    assert any(pesos)
    assert dato_no_invariante().dim == 5


def test_datos_de_lie_compartidos():
    """El mismo dato se reutiliza y la caché de pesos no mezcla datos con igual nombre."""
    assert su2() is su2()
    impostor = DatosLie('su2', [[1]], np.zeros((1, 1, 1), dtype=int))
    assert peso_vector(vector_clase(('theta',)), su2()) == -6
    assert peso_vector(vector_clase(('theta',)), impostor) == 0


def test_dato_de_lie_no_antisimetrico():
    """Se rechazan constantes que no son antisimétricas."""
    with pytest.raises(ValueError):
        DatosLie('malo', [[1]], [[[1]]])


@pytest.mark.parametrize("particion,esperado", [
    ((2,), -6), ((4,), 30), ((2, 2), 60), ((6,), -210), ((4, 4), 3780), ((2, 0), -18),
])
def test_forma_cerrada(particion, esperado):
    """Valores de la forma cerrada, incluida la parte nula con factor 3."""
    assert su2_forma_cerrada(particion) == esperado


def test_recursion_igual_forma_cerrada():
    """La recursión y la forma cerrada coinciden en todas las particiones pares, k ≤ 5."""
    for k in range(1, 6):
        for particion in particiones_pares(2 * k):
            assert su2_recursion(particion) == su2_forma_cerrada(particion)


def test_contraccion_igual_forma_cerrada():
    """Contracción del cierre = forma cerrada para k ≤ 3 y ⟨w₄²⟩ = 3780."""
    for k in range(1, 4):
        for particion in particiones_pares(2 * k):
            assert su2_contraccion(particion) == su2_forma_cerrada(particion)
    assert su2_contraccion((4, 4)) == 3780


@pytest.mark.lento
def test_contraccion_grado_cuatro():
    """Contracción del cierre = forma cerrada en todas las particiones de grado 4."""
    for particion in particiones_pares(8):
        assert su2_contraccion(particion) == su2_forma_cerrada(particion)


def test_particion_impar():
    """Las partes impares se rechazan."""
    with pytest.raises(ErrorParticion):
        su2_forma_cerrada((3, 1))


def test_producto_de_pesos():
    """(C₂)(Θ²) = 36, (C₁C₁)(Θ²) = 72, (C₁C₁)(Θ₂) = 0."""
    theta2 = vector_clase(('theta', 'theta'))
    assert producto_pesos([2], theta2) == 36
    assert producto_pesos([1, 1], theta2) == 72
    assert producto_pesos([1, 1], vector_clase(('theta_2',))) == 0


def test_coordenadas_en_polirruedas():
    """Θ² = ⟨w₂²⟩ − 4/5⟨w₄⟩ y Θ³ = ⟨w₂³⟩ − 12/5⟨w₂w₄⟩ + 64/35⟨w₆⟩."""
    resultado = resolver_coordenadas_polirruedas(vector_clase(('theta', 'theta')))
    assert resultado.coeficientes == {(1, 1): F(1), (2,): F(-4, 5)}
    assert not resultado.indeterminado

    resultado = resolver_coordenadas_polirruedas(vector_clase(('theta',) * 3))
    assert resultado.coeficientes == {(1, 1, 1): F(1), (2, 1): F(-12, 5), (3,): F(64, 35)}


def test_coordenadas_theta4():
    """Θ⁴ en polirruedas, por su(2) o por la reducción si el sistema es singular."""
    resultado = resolver_coordenadas_polirruedas(vector_clase(('theta',) * 4))
    assert resultado.coeficientes == {(1, 1, 1, 1): F(1), (2, 1, 1): F(-24, 5), (2, 2): F(48, 25),
                                      (3, 1): F(256, 35), (4,): F(-1152, 175)}


def test_resolver_por_reduccion_coincide():
    """La reducción da los mismos coeficientes en grado 2."""
    resultado = resolver_por_reduccion(vector_clase(('theta', 'theta')))
    assert resultado.metodo == 'reduccion'
    assert resultado.coeficientes == {(1, 1): F(1), (2,): F(-4, 5)}


def test_lemas_en_matrices_aleatorias():
    """Las identidades de conjugación y de trazas en 20 matrices 3×3 racionales."""
    rng = random.Random(42)
    for _ in range(20):
        A = matriz_aleatoria(rng, 3, 3)
        B = matriz_aleatoria(rng, 3, 3)
        izquierda, derecha = lema_conjugacion(A)
        assert izquierda == derecha
        izquierda, derecha = lema_trazas(A, B)
        assert izquierda == derecha


if __name__ == "__main__":
    pytest.main([__file__])
