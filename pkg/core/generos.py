#!/usr/bin/env python3
"""
Géneros χ_y de variedades hiperkähler.

- Riemann-Roch: χ^m como polinomio en los números de Chern s_λ.
- Inversión: números de Chern a partir de χ⁰..χ^{k−1} (con un parámetro
  libre s en grado 4, s₂⁴ = 48s).
- Relación de Salamon.
- χ_y de esquemas de Hilbert de puntos (producto de Cheah) y de
  variedades de Kummer generalizadas (fórmula de Göttsche-Soergel).
"""

from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Dict, List, Optional, Sequence

import sympy as sp

from .algebra_lineal import a_fraccion, invertir, matriz_sympy
from .clases_caracteristicas import (PolinomioS, SerieTruncada, VectorChern, evaluar_polinomio_s,
                                     indices_chern, matriz_c_a_s, serie_sinh_mitad, s_a_c)
from .configuracion import obtener_configuracion, obtener_logger
from .errores import ErrorCalculo, ErrorGrado
from .particiones import Particion, factorial_multiplicidades, mitad

logger = obtener_logger('generos')

y = sp.Symbol('y')
_z = sp.Symbol('z')

PARTICION_S = (2, 2, 2, 2)

# h^{p,q}, con p fila y q columna
DIAMANTE_K3 = ((1, 0, 1), (0, 20, 0), (1, 0, 1))
DIAMANTE_TORO = ((1, 2, 1), (2, 4, 2), (1, 2, 1))


class VectorChi:
    """Valores χ⁰..χ^{2k} de un espacio de grado k."""

    def __init__(self, grado: int, valores: Sequence):
        valores = [Fraction(v) for v in valores]
        if len(valores) != 2 * grado + 1:
            raise ErrorGrado(f"Se esperaban {2 * grado + 1} valores χ^m y llegaron {len(valores)}")
        self.grado = grado
        self.valores = valores

    @classmethod
    def desde_polinomio(cls, polinomio: sp.Expr, grado: int) -> 'VectorChi':
        poly = sp.Poly(sp.expand(polinomio), y)
        return cls(grado, [a_fraccion(poly.coeff_monomial(y ** m)) for m in range(2 * grado + 1)])

    @classmethod
    def simetrico(cls, grado: int, mitad_inferior: Sequence) -> 'VectorChi':
        """Completa χ⁰..χ^k (o χ⁰..χ^{k−1} más χ^k) por simetría."""
        mitad_inferior = list(mitad_inferior)
        if len(mitad_inferior) != grado + 1:
            raise ErrorGrado(f"Se esperaban {grado + 1} valores para completar por simetría")
        return cls(grado, mitad_inferior + mitad_inferior[-2::-1])

    def __getitem__(self, m: int) -> Fraction:
        return self.valores[m]

    def es_simetrico(self) -> bool:
        return self.valores == self.valores[::-1]

    def polinomio(self) -> sp.Expr:
        return sum(sp.Rational(v.numerator, v.denominator) * y ** m for m, v in enumerate(self.valores))

    def __eq__(self, otro) -> bool:
        return isinstance(otro, VectorChi) and self.valores == otro.valores

    def __repr__(self) -> str:
        return f"VectorChi({self.grado}, {[str(v) for v in self.valores]})"


def _validar_grado(grado: int, maximo: Optional[int] = None):
    maximo = maximo or obtener_configuracion()['grado_maximo_chern']
    if not 1 <= grado <= maximo:
        raise ErrorGrado(f"Grado {grado} fuera del rango soportado 1..{maximo}")


# ---------------------------------------------------------------------------
# Riemann-Roch
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def polinomios_chi(grado: int) -> List[PolinomioS]:
    """
    [χ^0, ..., χ^{2k}] como polinomios en los s_λ.

    Cada par de raíces ±x aporta (x/2)²/sinh²(x/2)·(1 + 2y cosh x + y²).
    Con z = y/(1+y)² el logaritmo del factor normalizado es una serie en
    t = x² con coeficientes polinómicos en z, y el monomio z^i se
    convierte en y^i (1+y)^{2k−2i}.
    """
    _validar_grado(grado)
    orden = grado
    # ln((x/2)²/sinh²(x/2)) en la variable t = x²
    serie_sinh = serie_sinh_mitad(2 * orden)
    log_a = serie_sinh.log().escalar(-2)
    coef_a = [sp.Rational(log_a[2 * j].numerator, log_a[2 * j].denominator) for j in range(orden + 1)]
    # 1 + 2z (cosh x − 1)
    factor_b = SerieTruncada([sp.Integer(1)] + [2 * _z / sp.factorial(2 * n) for n in range(1, orden + 1)],
                             orden)
    log_b = factor_b.log()
    b = [sp.expand(coef_a[j] + log_b[j]) for j in range(orden + 1)]

    total = sp.Integer(0)
    for particion in indices_chern(grado):
        termino = sp.Integer(1)
        for parte in mitad(particion):
            termino *= b[parte] / 2
        termino /= factorial_multiplicidades(particion)
        monomio = sp.Symbol('s_' + '_'.join(map(str, particion)))
        total += sp.expand(termino) * monomio

    total = sp.Poly(sp.expand(total), _z)
    en_y = sp.Integer(0)
    for (i,), coef in total.terms():
        en_y += coef * y ** i * (1 + y) ** (2 * grado - 2 * i)
    en_y = sp.expand(en_y)

    polinomios = []
    for m in range(2 * grado + 1):
        coef_m = en_y.coeff(y, m)
        terminos = {p: a_fraccion(coef_m.coeff(sp.Symbol('s_' + '_'.join(map(str, p)))))
                    for p in indices_chern(grado)}
        polinomios.append(PolinomioS(2 * grado, terminos))
    logger.debug(f"✅ Polinomios χ^m de grado {grado} calculados")
    return polinomios


def polinomio_chi_m(grado: int, m: int) -> PolinomioS:
    if not 0 <= m <= 2 * grado:
        raise ErrorGrado(f"m = {m} fuera de 0..{2 * grado}")
    return polinomios_chi(grado)[m]


def chi_en_chern(grado: int) -> List[Dict[Particion, Fraction]]:
    """Los χ^m expresados en la base c (tabla de Riemann-Roch)."""
    return [p.en_base_c() for p in polinomios_chi(grado)]


def evaluar_chi(chern: VectorChern) -> VectorChi:
    return VectorChi(chern.grado, [evaluar_polinomio_s(p, chern) for p in polinomios_chi(chern.grado)])


def residuo_salamon(chi: VectorChi) -> Fraction:
    """Σ (−1)^m (6m² − k(6k+1)) χ^m."""
    k = chi.grado
    return sum(((-1) ** m * (6 * m * m - k * (6 * k + 1)) * valor
                for m, valor in enumerate(chi.valores)), Fraction(0))


def residuo_salamon_polinomios(grado: int) -> PolinomioS:
    """La combinación de Salamon de los χ^m; es el polinomio cero."""
    total = PolinomioS(2 * grado)
    for m, polinomio in enumerate(polinomios_chi(grado)):
        total = total + polinomio.escalar((-1) ** m * (6 * m * m - grado * (6 * grado + 1)))
    return total


# ---------------------------------------------------------------------------
# Inversión
# ---------------------------------------------------------------------------

class InversionChi:
    """
    Expresión de cada s_λ como combinación lineal de χ⁰..χ^{k−1} y, en
    grado 4, del parámetro s.
    """

    def __init__(self, grado: int, coeficientes_s: Dict[Particion, List[Fraction]]):
        self.grado = grado
        self.coeficientes_s = coeficientes_s
        matriz = matriz_c_a_s(grado)
        columnas = len(next(iter(coeficientes_s.values())))
        self.coeficientes_c = {
            c: [sum((v * coeficientes_s[s][j] for s, v in fila.items()), Fraction(0))
                for j in range(columnas)]
            for c, fila in matriz.items()}

    @property
    def parametrica(self) -> bool:
        return self.grado == 4

    @property
    def variables(self) -> List[str]:
        nombres = [f"chi{m}" for m in range(self.grado)]
        return nombres + ['s'] if self.parametrica else nombres


@lru_cache(maxsize=None)
def inversion_chi(grado: int) -> InversionChi:
    """
    Invierte Riemann-Roch usando χ⁰..χ^{k−1}; en grado 4 se añade la
    ecuación s₂⁴ = 48 s y se comprueba que el núcleo del sistema completo
    tiene dimensión uno.
    """
    _validar_grado(grado)
    indices = indices_chern(grado)
    polinomios = polinomios_chi(grado)
    completo = matriz_sympy([[p.coeficiente(l) for l in indices] for p in polinomios])
    libres = len(indices) - completo.rank()
    esperados = 1 if grado == 4 else 0
    if libres != esperados:
        raise ErrorCalculo(f"El sistema de Riemann-Roch de grado {grado} tiene {libres} grados de libertad")

    filas = [[polinomios[m].coeficiente(l) for l in indices] for m in range(grado)]
    if grado == 4:
        filas.append([Fraction(1, 48) if l == PARTICION_S else Fraction(0) for l in indices])
    inversa = invertir(filas)
    return InversionChi(grado, {l: inversa[i] for i, l in enumerate(indices)})


class FamiliaChern:
    """Números de Chern compatibles con un χ dado: base + s·dirección."""

    def __init__(self, grado: int, base_s: Dict[Particion, Fraction],
                 direccion_s: Optional[Dict[Particion, Fraction]] = None):
        self.grado = grado
        self.base_s = base_s
        self.direccion_s = direccion_s

    @property
    def parametrica(self) -> bool:
        return self.direccion_s is not None

    @property
    def base_c(self) -> Dict[Particion, Fraction]:
        return s_a_c(self.base_s, self.grado)

    @property
    def direccion_c(self) -> Optional[Dict[Particion, Fraction]]:
        return s_a_c(self.direccion_s, self.grado) if self.parametrica else None

    def en(self, s=None) -> VectorChern:
        if self.parametrica:
            if s is None:
                raise ErrorCalculo("La familia depende del parámetro s")
            s = Fraction(s)
            return VectorChern(self.grado, {p: v + s * self.direccion_s[p] for p, v in self.base_s.items()})
        return VectorChern(self.grado, self.base_s)


def invertir_chi(grado: int, chi: VectorChi) -> FamiliaChern:
    """Números de Chern (o familia con parámetro s en grado 4) a partir de χ."""
    if chi.grado != grado:
        raise ErrorGrado(f"χ de grado {chi.grado} no corresponde al grado {grado}")
    if not chi.es_simetrico():
        raise ErrorCalculo("χ no es simétrico: χ^m ≠ χ^{2k−m}")
    inversion = inversion_chi(grado)
    entrada = [chi[m] for m in range(grado)]
    if inversion.parametrica:
        entrada.append(Fraction(0))

    base = {l: sum((c * v for c, v in zip(fila, entrada)), Fraction(0))
            for l, fila in inversion.coeficientes_s.items()}
    direccion = ({l: fila[-1] for l, fila in inversion.coeficientes_s.items()}
                 if inversion.parametrica else None)
    familia = FamiliaChern(grado, base, direccion)

    obtenido = evaluar_chi(VectorChern(grado, base))
    if obtenido != chi:
        raise ErrorCalculo(f"χ inconsistente: no satisface las relaciones forzadas "
                           f"(residuo de Salamon {residuo_salamon(chi)})")
    return familia


# ---------------------------------------------------------------------------
# Esquemas de Hilbert y variedades de Kummer
# ---------------------------------------------------------------------------

def _serie_en_t(termino: sp.Expr, paso: int, exponente: int, orden: int, inversa: bool) -> SerieTruncada:
    """(1 + a t^n)^h  o  (1 − a t^n)^{−h}  truncada en t^orden."""
    coeficientes = [sp.Integer(0)] * (orden + 1)
    for j in range(orden // paso + 1):
        binomial = comb(exponente + j - 1, j) if inversa else comb(exponente, j)
        coeficientes[j * paso] = binomial * termino ** j
    return SerieTruncada(coeficientes, orden)


@lru_cache(maxsize=None)
def chi_y_hilbert(grado: int, diamante=DIAMANTE_K3) -> sp.Expr:
    """
    χ_y de M^[k] por el producto de Cheah, especializado en x = −1 en cada
    factor. diamante[p][q] = h^{p,q}(M).
    """
    if grado < 0:
        raise ErrorGrado(f"Grado no válido: {grado}")
    serie = SerieTruncada([sp.Integer(1)], grado)
    for n in range(1, grado + 1):
        for p, fila in enumerate(diamante):
            for q, h in enumerate(fila):
                if not h:
                    continue
                termino = (-1) ** (p + n - 1) * y ** (q + n - 1)
                if (p + q) % 2:
                    factor = _serie_en_t(termino, n, h, grado, inversa=False)
                else:
                    factor = _serie_en_t(termino, n, h, grado, inversa=True)
                serie = serie * factor
    return sp.expand(serie[grado])


def chi_y_kummer(grado: int) -> sp.Expr:
    """(k+1) Σ_{d|k+1} d³ (1 − y + … + (−y)^{N−1})² (−y)^{k+1−N},  N = (k+1)/d."""
    if grado < 1:
        raise ErrorGrado(f"Grado no válido: {grado}")
    n = grado + 1
    total = sp.Integer(0)
    for d in sp.divisors(n):
        cociente = n // d
        alternada = sum((-y) ** i for i in range(cociente))
        total += d ** 3 * alternada ** 2 * (-y) ** (n - cociente)
    return sp.expand(n * total)


def vector_chi_hilbert(grado: int) -> VectorChi:
    return VectorChi.desde_polinomio(chi_y_hilbert(grado), grado)


def vector_chi_kummer(grado: int) -> VectorChi:
    return VectorChi.desde_polinomio(chi_y_kummer(grado), grado)


def coeficientes_y(polinomio: sp.Expr, grado: int) -> List[int]:
    poly = sp.Poly(polinomio, y)
    return [int(poly.coeff_monomial(y ** m)) for m in range(2 * grado + 1)]


# ---------------------------------------------------------------------------
# Cotas en grado 2
# ---------------------------------------------------------------------------

def cota_euler_k2(chern: VectorChern) -> Dict[str, Fraction]:
    """
    En grado 2: género de Todd (3c₂² − c₄)/720, que vale 3 en una variedad
    irreducible, y la positividad s₂² + 4/5 s₄ = 4/5 (7c₂² − 4c₄) > 0.
    Juntas dan c₄ < 3024; la cota fina c₄ ≤ 324 se alcanza en S^[2].
    """
    if chern.grado != 2:
        raise ErrorGrado("La cota de Euler sólo se aplica en grado 2")
    c22, c4 = chern.c((2, 2)), chern.c((4,))
    return {
        'todd': (3 * c22 - c4) / 720,
        'positividad': Fraction(4, 5) * (7 * c22 - 4 * c4),
        'c4': c4,
        'cota_c4': Fraction(3024),
        'cota_fina_c4': Fraction(324),
        'dentro_de_cota': c4 < 3024,
    }


def todd_esperado(grado: int) -> int:
    return grado + 1


__all__ = [
    'VectorChi', 'polinomios_chi', 'polinomio_chi_m', 'chi_en_chern', 'evaluar_chi',
    'residuo_salamon', 'residuo_salamon_polinomios', 'InversionChi', 'inversion_chi',
    'FamiliaChern', 'invertir_chi', 'chi_y_hilbert', 'chi_y_kummer', 'vector_chi_hilbert',
    'vector_chi_kummer', 'coeficientes_y', 'cota_euler_k2', 'DIAMANTE_K3', 'DIAMANTE_TORO',
    'PARTICION_S', 'y',
]
