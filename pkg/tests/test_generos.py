#!/usr/bin/env python3
"""
Pruebas unitarias para los géneros χ_y, Riemann-Roch y su inversión.
"""

import sys
import os
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from fractions import Fraction

import pytest
import sympy as sp

from core.clases_caracteristicas import PolinomioS, VectorChern
from core.errores import ErrorCalculo, ErrorGrado
from core.generos import (DIAMANTE_TORO, VectorChi, chi_en_chern, chi_y_hilbert, chi_y_kummer,
                          coeficientes_y, cota_euler_k2, evaluar_chi, invertir_chi, polinomios_chi,
                          residuo_salamon, residuo_salamon_polinomios, todd_esperado,
                          vector_chi_hilbert, vector_chi_kummer)

F = Fraction


@pytest.mark.parametrize("grado,esperado", [
    (1, [2, -20, 2]),
    (2, [3, -42, 234, -42, 3]),
])
def test_chi_y_hilbert(grado, esperado):
    assert coeficientes_y(chi_y_hilbert(grado), grado) == esperado


def test_chi_y_hilbert_grado_cuatro():
    """Los cinco primeros coeficientes de S^[4]; el resto por simetría."""
    valores = coeficientes_y(chi_y_hilbert(4), 4)
    assert valores[:5] == [5, -86, 785, -4556, 14786]
    assert valores == valores[::-1]


@pytest.mark.parametrize("grado,esperado", [
    (1, [2, -20, 2]),
    (2, [3, -6, 90, -6, 3]),
    (3, [4, -8, 44, -336, 44, -8, 4]),
])
def test_chi_y_kummer(grado, esperado):
    assert coeficientes_y(chi_y_kummer(grado), grado) == esperado


def test_chi_y_kummer_grado_cuatro():
    assert coeficientes_y(chi_y_kummer(4), 4)[:5] == [5, -10, 15, -20, 650]


def test_chi_y_de_un_toro():
    """Con el diamante de un toro todos los χ^p se anulan."""
    assert sp.expand(chi_y_hilbert(1, DIAMANTE_TORO)) == 0


def test_todd_es_k_mas_uno():
    """χ⁰ = k + 1 en S^[k] y T^[[k]]."""
    for k in range(1, 5):
        assert vector_chi_hilbert(k)[0] == todd_esperado(k)
        assert vector_chi_kummer(k)[0] == todd_esperado(k)


def test_residuo_salamon():
    """Se anula en los espacios reales y vale −7 en (1, 0, 0)."""
    for k in range(1, 5):
        assert residuo_salamon(vector_chi_hilbert(k)) == 0
        assert residuo_salamon(vector_chi_kummer(k)) == 0
    assert residuo_salamon(VectorChi(1, [1, 0, 0])) == -7


def test_residuo_salamon_es_identidad():
    """La combinación de Salamon de los polinomios χ^m es cero."""
    for k in range(1, 4):
        assert residuo_salamon_polinomios(k) == PolinomioS(2 * k)


def test_chi_en_chern_grado_dos():
    """χ¹ = (12c₂² − 124c₄)/720."""
    fila = chi_en_chern(2)[1]
    assert fila == {(2, 2): F(12, 720), (4,): F(-124, 720)}


def test_chi_cero_es_todd():
    """χ⁰ en grado 1 es c₂/12."""
    assert chi_en_chern(1)[0] == {(2,): F(1, 12)}


def test_polinomios_simetricos():
    """χ^m = χ^{2k−m} como polinomios."""
    polinomios = polinomios_chi(3)
    assert polinomios == polinomios[::-1]


def test_evaluar_chi_en_s2():
    chern = VectorChern(2, valores_s={(2, 2): 3312, (4,): 360})
    assert evaluar_chi(chern) == vector_chi_hilbert(2)


def test_invertir_chi_k3():
    familia = invertir_chi(1, vector_chi_hilbert(1))
    assert not familia.parametrica
    assert familia.base_s == {(2,): F(-48)}
    assert familia.base_c == {(2,): F(24)}


def test_invertir_chi_s2():
    familia = invertir_chi(2, VectorChi.simetrico(2, [3, -42, 234]))
    assert familia.base_s == {(2, 2): F(3312), (4,): F(360)}
    assert familia.en().c((4,)) == 324


def test_invertir_chi_s3():
    familia = invertir_chi(3, vector_chi_hilbert(3))
    assert familia.base_s[(2, 2, 2)] == -294400
    assert familia.base_s[(4, 2)] == -29440
    assert familia.base_s[(6,)] == -4480


def test_invertir_chi_grado_cuatro_parametrico():
    """En grado 4 queda el parámetro s con s₂⁴ = 48s."""
    familia = invertir_chi(4, vector_chi_kummer(4))
    assert familia.parametrica
    chern = familia.en(490000)
    assert chern.s((2, 2, 2, 2)) == 23520000
    assert chern.s((8,)) == 441000
    assert evaluar_chi(chern) == vector_chi_kummer(4)
    with pytest.raises(ErrorCalculo):
        familia.en()


def test_invertir_chi_rechaza_asimetrico():
    with pytest.raises(ErrorCalculo):
        invertir_chi(1, VectorChi(1, [2, -20, 3]))


def test_invertir_chi_rechaza_inconsistente():
    """χ = (1, 0, 1) no satisface la relación de Salamon."""
    with pytest.raises(ErrorCalculo):
        invertir_chi(1, VectorChi(1, [1, 0, 1]))


def test_vector_chi_longitud():
    with pytest.raises(ErrorGrado):
        VectorChi(2, [1, 2, 3])
    with pytest.raises(ErrorGrado):
        VectorChi.simetrico(2, [3, -42])


def test_grado_fuera_de_rango():
    with pytest.raises(ErrorGrado):
        polinomios_chi(5)


def test_cota_de_euler_en_s2():
    """Todd = 3 y c₄ = 324 dentro de la cota."""
    cota = cota_euler_k2(VectorChern(2, valores_c={(2, 2): 828, (4,): 324}))
    assert cota['todd'] == 3
    assert cota['positividad'] > 0
    assert cota['dentro_de_cota']
    with pytest.raises(ErrorGrado):
        cota_euler_k2(VectorChern(1, valores_s={(2,): -48}))


if __name__ == "__main__":
    pytest.main([__file__])
