#!/usr/bin/env python3
"""
Pruebas unitarias para la homología de grafos: IHX, bases, polirruedas,
coproducto y clase burbuja.
"""

import sys
import os
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from fractions import Fraction

import pytest

from core.algebra_lineal import EliminacionDispersa, invertir, resolver_sistema
from core.errores import ErrorAristaLazo, ErrorCalculo, ErrorFueraDeSpan, ErrorGrado
from core.grafos import CLAVE_VACIA, canonizar, collar, parsear_grafo, theta, union_disjunta
from core.homologia import (VectorGrafos, calcular_base, clase_burbuja, clases_de_grado, clausura,
                            coproducto, formatear_clase, inversion_polirruedas, matriz_polirruedas,
                            ordenar_clase, parsear_clase, parsear_vector, reducir, relacion_ihx,
                            saturar, tabla_conteo, vector_clase)
from core.pesos_lie import dato_abeliano, peso_vector, su2, su2_forma_cerrada

F = Fraction


def _clave(grafo):
    return canonizar(grafo).clave


def test_dimensiones_hasta_grado_cuatro():
    """dim A(∅)^k = 1, 2, 3, 6 para k = 1..4."""
    assert [calcular_base(k).dimension for k in range(1, 5)] == [1, 2, 3, 6]


@pytest.mark.lento
def test_dimension_grado_cinco():
    """dim A(∅)^5 = 9."""
    assert calcular_base(5).dimension == 9


def test_clases_de_la_base():
    """Nombres de la base en el orden de las tablas."""
    assert [formatear_clase(c) for c in calcular_base(3).clases] == ['theta^3', 'theta*theta_2', 'theta_3']
    assert [formatear_clase(c) for c in clases_de_grado(4)] == [
        'theta^4', 'theta^2*theta_2', 'theta_2^2', 'theta*theta_3', 'theta_4', 'g8b']


def test_base_grado_uno_es_theta():
    """El span saturado desde Θ es sólo Θ."""
    assert saturar([theta()], 1) == [_clave(theta())]
    base = calcular_base(1)
    assert base.basis_keys == [_clave(theta())]


def test_reducir_elemento_de_la_base():
    """Θ² tiene coordenadas (1, 0) en {Θ², Θ₂}."""
    assert reducir(vector_clase(('theta', 'theta'))) == [F(1), F(0)]


def test_expansiones_de_polirruedas():
    """⟨w₄⟩ = 5/2 Θ₂, ⟨w₂²⟩ = Θ² + 2Θ₂ y ⟨w₂⟩ = Θ."""
    assert reducir(clausura((4,))) == [F(0), F(5, 2)]
    assert reducir(clausura((2, 2))) == [F(1), F(2)]
    assert calcular_base(1).reducir_diccionario(clausura((2,))) == {('theta',): F(1)}


def test_expansion_w4_al_cuadrado():
    """⟨w₄²⟩ = 25/4 Θ₂² + 48 Θ₄ + 24 G₈''."""
    coordenadas = calcular_base(4).reducir_diccionario(clausura((4, 4)))
    assert coordenadas == {('theta_2', 'theta_2'): F(25, 4), ('theta_4',): F(48), ('g8b',): F(24)}


def test_matriz_polirruedas_es_consistente_con_su2():
    """El peso de cada cierre coincide con el de su expansión en la base."""
    base = calcular_base(3)
    for particion, fila in matriz_polirruedas(3).items():
        expansion = base.vector_de_coordenadas(dict(zip(base.clases, fila)))
        assert peso_vector(expansion, su2()) == peso_vector(clausura(particion), su2())


def test_inversion_grados_dos_y_tres():
    """Θ² = ⟨w₂²⟩ − 4/5⟨w₄⟩, Θ₂ = 2/5⟨w₄⟩ y Θ³ = ⟨w₂³⟩ − 12/5⟨w₂w₄⟩ + 64/35⟨w₆⟩."""
    inversion = inversion_polirruedas(2)
    assert inversion[('theta', 'theta')] == {(2, 2): F(1), (4,): F(-4, 5)}
    assert inversion[('theta_2',)] == {(4,): F(2, 5)}
    assert inversion_polirruedas(3)[('theta', 'theta', 'theta')] == {
        (2, 2, 2): F(1), (4, 2): F(-12, 5), (6,): F(64, 35)}


def test_inversion_grado_cuatro_usa_theta2_al_cuadrado():
    """En grado 4 la inversión necesita la clase extra Θ₂²."""
    inversion = inversion_polirruedas(4)
    extra = ('theta_2', 'theta_2')
    assert inversion[extra] == {extra: F(1)}
    assert extra in inversion[('g8b',)]
    assert inversion[('theta',) * 4] == {(2, 2, 2, 2): F(1), (4, 2, 2): F(-24, 5), (4, 4): F(48, 25),
                                         (6, 2): F(256, 35), (8,): F(-1152, 175)}

# Filas de cierres de polirruedas en el orden de clases_de_grado
FILAS_POLIRRUEDAS = {
    3: {
        (2, 2, 2): [1, 6, 8],
        (4, 2): [0, F(5, 2), 10],
        (6,): [0, 0, F(35, 4)],
    },
    4: {
        (2, 2, 2, 2): [1, 12, 12, 32, 48, 0],
        (4, 2, 2): [0, F(5, 2), 5, 20, 60, 0],
        (4, 4): [0, 0, F(25, 4), 0, 48, 24],
        (6, 2): [0, 0, 0, F(35, 4), F(105, 2), 0],
        (8,): [0, 0, 0, 0, F(287, 8), 7],
    },
}


@pytest.mark.parametrize("grado,particion", [
    (grado, particion) for grado, filas in FILAS_POLIRRUEDAS.items() for particion in filas])
def test_fila_de_polirrueda(grado, particion):
    """Cada cierre ⟨w_λ⟩ de grado 3 y 4 tiene las coordenadas de la tabla."""
    assert matriz_polirruedas(grado)[particion] == FILAS_POLIRRUEDAS[grado][particion]


def test_filas_de_polirruedas_completas():
    """Una fila por partición par de 2k."""
    for grado, filas in FILAS_POLIRRUEDAS.items():
        assert set(matriz_polirruedas(grado)) == set(filas)


THETA2_CUADRADO = ('theta_2', 'theta_2')

# Cada clase de grado 4 en polirruedas y Θ₂²
INVERSION_GRADO_CUATRO = {
    'theta^4': {(2, 2, 2, 2): F(1), (4, 2, 2): F(-24, 5), (4, 4): F(48, 25), (6, 2): F(256, 35),
                (8,): F(-1152, 175)},
    'theta^2*theta_2': {(4, 2, 2): F(2, 5), (4, 4): F(-8, 25), (6, 2): F(-32, 35), (8,): F(192, 175)},
    'theta_2^2': {THETA2_CUADRADO: F(1)},
    'theta*theta_3': {(4, 4): F(2, 25), (6, 2): F(4, 35), (8,): F(-48, 175), THETA2_CUADRADO: F(-1, 2)},
    'theta_4': {(4, 4): F(-1, 75), (8,): F(8, 175), THETA2_CUADRADO: F(1, 12)},
    'g8b': {(4, 4): F(41, 600), (8,): F(-16, 175), THETA2_CUADRADO: F(-41, 96)},
}


@pytest.mark.parametrize("nombre", list(INVERSION_GRADO_CUATRO))
def test_inversion_grado_cuatro_por_clase(nombre):
    """Expresión de cada clase de grado 4 y su peso su(2) recompuesto."""
    clase = ordenar_clase(parsear_clase(nombre))
    expresion = inversion_polirruedas(4)[clase]
    assert expresion == INVERSION_GRADO_CUATRO[nombre]

    peso = Fraction(0)
    for generador, coef in expresion.items():
        if generador == THETA2_CUADRADO:
            peso += coef * peso_vector(vector_clase(generador), su2())
        else:
            peso += coef * su2_forma_cerrada(generador)
    assert peso == peso_vector(vector_clase(clase), su2())


def test_inversion_grado_tres_por_clase():
    """ΘΘ₂ = 2/5⟨w₂w₄⟩ − 16/35⟨w₆⟩ y Θ₃ = 4/35⟨w₆⟩."""
    inversion = inversion_polirruedas(3)
    assert inversion[('theta', 'theta_2')] == {(4, 2): F(2, 5), (6,): F(-16, 35)}
    assert inversion[('theta_3',)] == {(6,): F(4, 35)}



def test_ihx_se_anula():
    """Las relaciones IHX se reducen a cero y tienen peso nulo en dos datos de Lie."""
    for grafo in (theta(), collar(2), collar(3), union_disjunta(theta(), collar(2))):
        for arista in grafo.aristas_sin_lazo():
            relacion = relacion_ihx(grafo, arista)
            assert peso_vector(relacion, su2()) == 0
            assert peso_vector(relacion, dato_abeliano()) == 0
            if not relacion.es_cero():
                assert all(v == 0 for v in reducir(relacion))


def test_ihx_en_collar_tiene_pocos_terminos():
    """IHX sobre una arista de Θ₂ da como mucho 3 claves."""
    arista = collar(2).aristas_sin_lazo()[0]
    assert len(relacion_ihx(collar(2), arista).terminos) <= 3


def test_ihx_suma_sobre_aristas_de_theta3():
    """La suma de las relaciones IHX de Θ₃ tiene peso su(2) nulo."""
    total = VectorGrafos(3)
    for arista in collar(3).aristas_sin_lazo():
        total = total + relacion_ihx(collar(3), arista)
    assert peso_vector(total, su2()) == 0


def test_ihx_en_lazo_falla():
    """IHX no se define sobre un lazo."""
    grafo = parsear_grafo("trivalent 2\nedge 0.0 0.1\nedge 0.2 1.0\nedge 1.1 1.2")
    with pytest.raises(ErrorAristaLazo):
        relacion_ihx(grafo, ((0, 0), (0, 1)))


def test_coproducto_theta_y_theta_cuadrado():
    """Δ(Θ) tiene dos términos; Δ(Θ²) tiene tres con el central doble."""
    clave_theta = _clave(theta())
    delta = coproducto(VectorGrafos.desde_grafo(theta()))
    assert set(delta) == {(CLAVE_VACIA, clave_theta), (clave_theta, CLAVE_VACIA)}

    delta2 = coproducto(vector_clase(('theta', 'theta')))
    assert len(delta2) == 3
    assert abs(delta2[(clave_theta, clave_theta)]) == 2


def test_coproducto_theta_theta2():
    """Δ(ΘΘ₂) tiene 4 términos, entre ellos Θ⊗Θ₂ y Θ₂⊗Θ."""
    delta = coproducto(vector_clase(('theta', 'theta_2')))
    assert len(delta) == 4
    assert (_clave(theta()), _clave(collar(2))) in delta
    assert (_clave(collar(2)), _clave(theta())) in delta


def _aplicar_delta(tensor, posicion):
    resultado = {}
    for par, coef in tensor.items():
        clave = par[posicion]
        for (a, b), c in coproducto(VectorGrafos(clave[0] // 2, {clave: F(1)})).items():
            terna = (a, b, par[1]) if posicion == 0 else (par[0], a, b)
            resultado[terna] = resultado.get(terna, F(0)) + coef * c
    return {t: v for t, v in resultado.items() if v}


@pytest.mark.parametrize("grado", [1, 2, 3, 4])
def test_coproducto_coasociativo_y_cocomutativo(grado):
    """(Δ⊗1)Δ = (1⊗Δ)Δ y Δ simétrico en todas las clases de la base."""
    for clase in calcular_base(grado).clases:
        delta = coproducto(vector_clase(clase))
        assert all(delta.get((b, a)) == v for (a, b), v in delta.items())
        assert _aplicar_delta(delta, 0) == _aplicar_delta(delta, 1)


def test_clase_burbuja_de_theta():
    """Θ' = Θ₂ y el peso su(2) se multiplica por −2."""
    burbuja = clase_burbuja(VectorGrafos.desde_grafo(theta()))
    assert calcular_base(2).reducir_diccionario(burbuja) == {('theta_2',): F(1)}
    assert peso_vector(burbuja, su2()) == -2 * peso_vector(VectorGrafos.desde_grafo(theta()), su2())


def test_clase_burbuja_de_potencias_de_theta():
    """(Θ^k)' = Θ^{k−1}Θ₂ para k = 2, 3."""
    for k in (2, 3):
        burbuja = clase_burbuja(vector_clase(('theta',) * k))
        esperado = tuple(sorted(('theta',) * (k - 1) + ('theta_2',)))
        assert calcular_base(k + 1).reducir_diccionario(burbuja) == {esperado: F(1)}


def test_identidad_de_la_burbuja():
    """⟨w₂ w₂ w₂⟩ = Θ·⟨w₂²⟩ + 4·⟨w₂²⟩'."""
    gamma = clausura((2, 2))
    izquierda = clausura((2, 2, 2))
    derecha = vector_clase(('theta',)).producto(gamma) + clase_burbuja(gamma) * 4
    assert reducir(izquierda) == reducir(derecha)


def test_vector_texto_ida_y_vuelta():
    """a_texto y parsear_vector son inversos."""
    vector = clausura((2, 2)) * F(3, 7)
    assert parsear_vector(vector.a_texto()) == vector
    assert parsear_vector("trivalent 2\nedge 0.0 1.0\nedge 0.1 1.2\nedge 0.2 1.1") == \
        VectorGrafos.desde_grafo(theta())


def test_errores_de_reduccion():
    """Grado fuera de rango, vector de otro grado y clase desconocida."""
    with pytest.raises(ErrorGrado):
        calcular_base(0)
    with pytest.raises(ErrorGrado):
        calcular_base(2).reducir(vector_clase(('theta',)))
    with pytest.raises(ErrorCalculo):
        parsear_clase('phi')
    with pytest.raises(ErrorCalculo):
        parsear_vector("# sólo comentarios")


def test_clave_fuera_del_span():
    """Reducir una clave que no está en el span lanza ErrorFueraDeSpan."""
    base = calcular_base(1)
    ajena = (2, (((0, 0), (0, 1)), ((0, 2), (1, 0)), ((1, 1), (1, 2))))
    with pytest.raises(ErrorFueraDeSpan):
        base._coordenadas_libres(VectorGrafos(1, {ajena: F(1)}))


def test_nombres_de_clases():
    """Gramática de nombres: potencias, productos y alias."""
    assert parsear_clase('theta^2*theta_2') == ('theta', 'theta', 'theta_2')
    assert parsear_clase('theta2') == ('theta_2',)
    assert parsear_clase('theta_1') == ('theta',)
    assert parsear_clase('g10a') == ('theta_5',)
    assert formatear_clase(parsear_clase('theta_2*theta^2')) == 'theta^2*theta_2'


def test_tabla_conteo():
    """p(k), p(k) − k y dimensiones calculadas hasta el grado pedido."""
    filas = tabla_conteo(6, grado_calculado=3)
    assert [f['p(k)'] for f in filas] == [1, 2, 3, 5, 7, 11]
    assert [f['p(k)-k'] for f in filas] == [0, 0, 0, 1, 2, 5]
    assert [f.get('dim') for f in filas] == [1, 2, 3, None, None, None]
    assert [f['dim_conexa'] for f in filas[:3]] == [1, 1, 1]


def test_eliminacion_dispersa():
    """Forma escalonada incremental con columnas libres preferidas."""
    eliminacion = EliminacionDispersa({'a': 0, 'b': 1, 'c': 2})
    assert eliminacion.agregar_fila({'a': F(1), 'b': F(-1)})
    assert not eliminacion.agregar_fila({'a': F(2), 'b': F(-2)})
    assert eliminacion.rango == 1
    assert eliminacion.expresar('a') == {'b': F(1)}
    assert eliminacion.expresar('c') == {'c': F(1)}


def test_resolver_sistema_e_invertir():
    """Soluciones única, indeterminada e infactible."""
    unica = resolver_sistema([[1, 2], [3, 4]], [5, 6])
    assert unica.unica and unica.particular == [F(-4), F(9, 2)]
    indeterminada = resolver_sistema([[1, 1], [2, 2]], [1, 2])
    assert indeterminada.factible and len(indeterminada.nucleo) == 1
    assert not resolver_sistema([[1, 1], [1, 1]], [1, 2]).factible
    assert invertir([[2, 0], [0, 4]]) == [[F(1, 2), F(0)], [F(0), F(1, 4)]]
    with pytest.raises(ErrorCalculo):
        invertir([[1, 1], [1, 1]])


if __name__ == "__main__":
    pytest.main([__file__])
