#!/usr/bin/env python3
"""
Pruebas unitarias para espacios hiperkähler concretos y sus invariantes
de Rozansky-Witten.
"""

import sys
import os
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from fractions import Fraction
from math import factorial

import pytest

from core.clases_caracteristicas import evaluar_polinomio_s, td_medio
from core.errores import ErrorCalculo, ErrorGrado
from core.espacios_rw import (FUNCION_RACIONAL, PESO_DIRECTO, POLIRRUEDAS, SUMA_ADITIVA,
                              b_theta_cerrado, crear_hilbert, crear_kummer, distinguir_cobordismo,
                              espacio_desde_nombre, expresar_en_span, informe_invariantes,
                              invariante_b, producto, puente_b_theta, relacion_curvatura_volumen,
                              virtual_ck)
from core.generos import evaluar_chi

F = Fraction

DICCIONARIO_HILBERT = ['S^[4]', 'SxS^[3]', 'S^[2]xS^[2]', 'S^2xS^[2]', 'S^4']
DICCIONARIO_KUMMER = ['T^[[4]]', 'T^[[1]]xT^[[3]]', 'T^[[2]]xT^[[2]]', 'T^[[1]]xT^[[1]]xT^[[2]]',
                      'T^[[1]]xT^[[1]]xT^[[1]]xT^[[1]]']


def b(nombre, clase):
    return invariante_b(espacio_desde_nombre(nombre), clase).valor


# ---------------------------------------------------------------------------
# Números de Chern
# ---------------------------------------------------------------------------

def test_k3():
    k3 = crear_hilbert(1)
    assert k3.s((2,)) == -48
    assert k3.chern.c((2,)) == 24
    assert k3.nombre == 'S'


def test_hilbert_dos():
    s2 = crear_hilbert(2)
    assert s2.s((2, 2)) == 3312
    assert s2.s((4,)) == 360
    assert s2.chern.c((4,)) == 324


def test_hilbert_tres():
    s3 = crear_hilbert(3)
    assert (s3.s((2, 2, 2)), s3.s((4, 2)), s3.s((6,))) == (-294400, -29440, -4480)


def test_parametro_s_en_grado_cuatro():
    """s = 664080 en S^[4] y s = 490000 en T^[[4]]."""
    assert crear_hilbert(4).parametro_s == 664080
    kummer = crear_kummer(4)
    assert kummer.parametro_s == 490000
    assert kummer.s((2, 2, 2, 2)) == 23520000
    assert kummer.s((8,)) == 441000


def test_espacio_virtual():
    """s₈(C₄) = −1890."""
    assert virtual_ck(4).s((8,)) == -1890


def test_nombres():
    assert espacio_desde_nombre('hilb:2') is crear_hilbert(2)
    assert espacio_desde_nombre('kummer:3') is crear_kummer(3)
    assert producto([crear_hilbert(1), crear_hilbert(1)]).nombre == 'S^2'
    assert espacio_desde_nombre('S x S^[2]').nombre == 'SxS^[2]'


def test_nombre_no_valido():
    with pytest.raises(ErrorCalculo):
        espacio_desde_nombre('P^2')
    with pytest.raises(ErrorCalculo):
        espacio_desde_nombre('')


def test_grado_fuera_de_rango():
    with pytest.raises(ErrorGrado):
        crear_hilbert(5)
    with pytest.raises(ErrorGrado):
        virtual_ck(6)


def test_formas_cerradas_b_theta():
    assert b_theta_cerrado('hilbert', 3) == 373248
    assert b_theta_cerrado('kummer', 3) == 442368
    with pytest.raises(ErrorGrado):
        b_theta_cerrado('hilbert', 7)


def test_puente_b_theta_grado_cuatro():
    """b_{Θ⁴} en χ⁰..χ³ y s."""
    assert puente_b_theta(4) == {
        'chi0': F(4396904448, 175), 'chi1': F(-7259904, 175), 'chi2': F(2472960, 175),
        'chi3': F(278784, 175), 's': F(-21936, 175),
    }


# ---------------------------------------------------------------------------
# Invariantes
# ---------------------------------------------------------------------------

def test_b_theta_k3():
    valor = invariante_b(crear_hilbert(1), 'theta')
    assert valor.valor == 48
    assert valor.procedencia == POLIRRUEDAS


def test_invariantes_hilbert_dos():
    assert b('S^[2]', 'theta^2') == 3600
    assert b('S^[2]', 'theta_2') == -144


def test_invariantes_hilbert_tres_y_kummer_tres():
    assert b('S^[3]', 'theta^3') == 373248
    assert b('T^[[3]]', 'theta^3') == 442368


def test_invariantes_hilbert_cuatro():
    assert b('S^[4]', 'theta^4') == 49787136
    assert b('S^[4]', 'theta^2*theta_2') == -1693440
    assert b('S^[4]', 'theta_2^2') == 57600


def test_g8b_en_kummer_cuatro():
    valor = invariante_b(crear_kummer(4), 'g8b')
    assert valor.valor == -1500
    assert valor.procedencia in (POLIRRUEDAS, FUNCION_RACIONAL)


def test_productos():
    """Coproducto: los factores conexos se reparten entre los espacios."""
    assert b('S^2', 'theta^2') == 4608
    assert b('S^2', 'theta_2') == 0
    assert b('SxS^[2]', 'theta^3') == 518400
    assert b('SxS^[2]', 'theta*theta_2') == -6912
    assert b('SxS^[2]', 'theta_3') == 0
    assert b('S^[2]xS^[2]', 'theta_2^2') == 41472


def test_virtual_da_pesos_de_su2():
    valor = invariante_b(virtual_ck(4), 'theta_2^2')
    assert valor.valor == 144
    assert valor.procedencia == PESO_DIRECTO
    assert b('C1', 'theta') == -6


def test_suma_formal_es_lineal():
    valor = invariante_b(espacio_desde_nombre('-1/12*S^[2] + 7/96*S^2'), 'theta^2')
    assert valor.valor == 36
    assert valor.procedencia == SUMA_ADITIVA


def test_clase_de_otro_grado():
    with pytest.raises(ErrorGrado):
        invariante_b(crear_hilbert(2), 'theta')


def test_informe_completo():
    informe = informe_invariantes(crear_hilbert(2))
    assert informe.valor(('theta', 'theta')) == 3600
    assert [fila[0] for fila in informe.filas()] == ['theta^2', 'theta_2']

# Invariantes de los irreducibles hasta grado 4
TABLA_IRREDUCIBLES = {
    'S': {'theta': 48},
    'S^[2]': {'theta^2': 3600, 'theta_2': -144},
    'T^[[2]]': {'theta^2': 3888, 'theta_2': -432},
    'S^[3]': {'theta^3': 373248, 'theta*theta_2': -13824, 'theta_3': 512},
    'T^[[3]]': {'theta^3': 442368, 'theta*theta_2': -36864, 'theta_3': 2560},
    'S^[4]': {'theta^4': 49787136, 'theta^2*theta_2': -1693440, 'theta_2^2': 57600,
              'theta*theta_3': 56448, 'theta_4': -1824, 'g8b': 348},
    'T^[[4]]': {'theta^4': 64800000, 'theta^2*theta_2': -4320000, 'theta_2^2': 288000,
                'theta*theta_3': 240000, 'theta_4': -12000, 'g8b': -1500},
}


@pytest.mark.parametrize("nombre,clase,esperado", [
    (nombre, clase, valor) for nombre, fila in TABLA_IRREDUCIBLES.items() for clase, valor in fila.items()])
def test_tabla_de_irreducibles(nombre, clase, esperado):
    assert b(nombre, clase) == esperado


def test_tabla_de_irreducibles_cubre_la_base():
    informe = informe_invariantes(crear_kummer(4))
    assert {fila[0]: fila[1] for fila in informe.filas()} == TABLA_IRREDUCIBLES['T^[[4]]']


def test_identidad_racional_theta2_al_cuadrado():
    """b_{Θ₂²} = b_{Θ²Θ₂}² / b_{Θ⁴} en los irreducibles de grado 4."""
    for nombre in ('S^[4]', 'T^[[4]]'):
        fila = TABLA_IRREDUCIBLES[nombre]
        assert F(fila['theta^2*theta_2']) ** 2 / fila['theta^4'] == fila['theta_2^2']



# ---------------------------------------------------------------------------
# Combinaciones y cobordismo
# ---------------------------------------------------------------------------

def test_c2_en_hilbert():
    """C₂ = −1/12 S^[2] + 7/96 S²."""
    resultado = expresar_en_span(virtual_ck(2), [crear_hilbert(2), espacio_desde_nombre('S^2')])
    assert resultado.factible and resultado.unica
    assert resultado.coeficientes == [F(-1, 12), F(7, 96)]


@pytest.mark.lento
def test_c4_no_es_combinacion_de_hilbert():
    diccionario = [espacio_desde_nombre(n) for n in DICCIONARIO_HILBERT]
    resultado = expresar_en_span(virtual_ck(4), diccionario)
    assert not resultado.factible
    assert 'no es combinación' in resultado.a_texto()

def test_c3_en_hilbert():
    """C₃ = −3/64 S^[3] + 5/48 S×S^[2] − 85/1536 S³."""
    diccionario = [espacio_desde_nombre(n) for n in ('S^[3]', 'SxS^[2]', 'S^3')]
    resultado = expresar_en_span(virtual_ck(3), diccionario)
    assert resultado.factible and resultado.unica
    assert resultado.coeficientes == [F(-3, 64), F(5, 48), F(-85, 1536)]


def test_c3_en_kummer():
    """C₃ = −3/320 T^[[3]] + 29/1440 T^[[1]]×T^[[2]] − 17/1536 (T^[[1]])³."""
    diccionario = [espacio_desde_nombre(n) for n in ('T^[[3]]', 'T^[[1]]xT^[[2]]', 'T^[[1]]xT^[[1]]xT^[[1]]')]
    resultado = expresar_en_span(virtual_ck(3), diccionario)
    assert resultado.factible and resultado.unica
    assert resultado.coeficientes == [F(-3, 320), F(29, 1440), F(-17, 1536)]


@pytest.mark.lento
def test_c4_necesita_hilbert_y_kummer():
    diccionario = [espacio_desde_nombre(n) for n in ['S^[4]', 'T^[[4]]'] + DICCIONARIO_HILBERT[1:]]
    resultado = expresar_en_span(virtual_ck(4), diccionario)
    assert resultado.factible and resultado.unica
    assert resultado.coeficientes == [F(1, 32), F(-7, 800), F(5, 256), F(1, 48), F(-73, 768),
                                      F(263, 6144)]


@pytest.mark.lento
def test_c4_no_es_combinacion_de_kummer():
    diccionario = [espacio_desde_nombre(n) for n in DICCIONARIO_KUMMER]
    assert not expresar_en_span(virtual_ck(4), diccionario).factible



def test_kummer_cuatro_por_numeros_de_chern():
    diccionario = [espacio_desde_nombre(n) for n in DICCIONARIO_HILBERT]
    resultado = expresar_en_span(crear_kummer(4), diccionario, criterio='chern')
    assert resultado.unica
    assert resultado.coeficientes == [F(7), F(-49, 8), F(-3), F(67, 12), F(-21, 16)]


def test_span_errores():
    with pytest.raises(ErrorCalculo):
        expresar_en_span(crear_hilbert(2), [])
    with pytest.raises(ErrorGrado):
        expresar_en_span(crear_hilbert(2), [crear_hilbert(1)])
    with pytest.raises(ErrorCalculo):
        expresar_en_span(crear_hilbert(2), [crear_hilbert(2)], criterio='otro')


@pytest.mark.lento
def test_cobordismo_distingue():
    """Mismos números de Chern que T^[[4]] y distinto b_{Θ₂²}."""
    informe = distinguir_cobordismo()
    assert informe.chern_coinciden
    assert informe.valores == {'X': F(278784), 'T^[[4]]': F(288000)}
    assert informe.distingue
    assert set(informe.par_entero.values()) == {F(19353600), F(19795968)}


def test_curvatura_k3():
    """‖K‖² = 192π² en K3."""
    assert relacion_curvatura_volumen(crear_hilbert(1)) == 192
    with pytest.raises(ErrorCalculo):
        relacion_curvatura_volumen(espacio_desde_nombre('S^2'))

# ---------------------------------------------------------------------------
# Propiedades
# ---------------------------------------------------------------------------

IRREDUCIBLES = ['S', 'S^[2]', 'S^[3]', 'S^[4]', 'T^[[2]]', 'T^[[3]]', 'T^[[4]]']


@pytest.mark.parametrize("x,y", [
    ('S', 'S'), ('S', 'S^[2]'), ('S', 'T^[[2]]'), ('S', 'S^[3]'), ('S', 'T^[[3]]'),
    ('S^[2]', 'T^[[2]]'), ('T^[[2]]', 'S^[2]'),
])
def test_b_theta_multiplicativo(x, y):
    """b_{Θ^k}/k! es multiplicativo en productos."""
    ex, ey = espacio_desde_nombre(x), espacio_desde_nombre(y)
    k, l = ex.grado, ey.grado
    izquierda = invariante_b(producto([ex, ey]), ('theta',) * (k + l)).valor / factorial(k + l)
    derecha = (invariante_b(ex, ('theta',) * k).valor / factorial(k)
               * invariante_b(ey, ('theta',) * l).valor / factorial(l))
    assert izquierda == derecha


@pytest.mark.parametrize("nombre", IRREDUCIBLES)
def test_td_medio_positivo(nombre):
    """∫Td^{1/2}_k > 0 y b_{Θ^k} = 48^k k! ∫Td^{1/2}_k."""
    espacio = espacio_desde_nombre(nombre)
    k = espacio.grado
    integral = evaluar_polinomio_s(td_medio(k), espacio.chern)
    assert integral > 0
    assert invariante_b(espacio, ('theta',) * k).valor == 48 ** k * factorial(k) * integral


@pytest.mark.parametrize("nombre", IRREDUCIBLES)
def test_genero_de_todd(nombre):
    """χ⁰ = k + 1 en un irreducible de grado k."""
    espacio = espacio_desde_nombre(nombre)
    assert evaluar_chi(espacio.chern)[0] == espacio.chi[0] == espacio.grado + 1


@pytest.mark.parametrize("nombre", ['S^[2]', 'T^[[2]]'])
def test_relaciones_en_grado_dos(nombre):
    """Todd = (3c₂² − c₄)/720 = 3, c₄ < 3024 y ‖K‖⁴ = 32π⁴ vol (s₂² + 4/5 s₄)."""
    espacio = espacio_desde_nombre(nombre)
    c22, c4 = espacio.chern.c((2, 2)), espacio.chern.c((4,))
    assert (3 * c22 - c4) / 720 == 3
    assert c4 < 3024
    cuadratica = espacio.s((2, 2)) + F(4, 5) * espacio.s((4,))
    assert cuadratica > 0
    assert relacion_curvatura_volumen(espacio) == 32 * cuadratica


def test_numeros_de_chern_kummer_dos():
    kummer = crear_kummer(2)
    assert (kummer.chern.c((2, 2)), kummer.chern.c((4,))) == (756, 108)


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_curvatura_forma_cerrada(k):
    """S^[k]: (48k(k+3))^k/k!; T^[[k]]: (48k)^k (k+1)^{k+1}/k!."""
    assert relacion_curvatura_volumen(crear_hilbert(k)) == F(48 * k * (k + 3)) ** k / factorial(k)
    if k > 1:
        esperado = F(48 * k) ** k * (k + 1) ** (k + 1) / factorial(k)
        assert relacion_curvatura_volumen(crear_kummer(k)) == esperado



if __name__ == "__main__":
    pytest.main([__file__])
