#!/usr/bin/env python3
"""
Clases características de variedades hiperkähler.

Series truncadas exactas, sucesiones multiplicativas (Td^{±1/2}),
conversión entre las bases s_λ y c_λ de los números de Chern con raíces
en pares ±x, y la identidad que escribe Θ^k en polirruedas.
"""

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Dict, List, Optional

import sympy as sp

from .algebra_lineal import a_fraccion, invertir
from .errores import ErrorCalculo, ErrorGrado
from .particiones import (Particion, factorial_multiplicidades, mitad, particiones_pares,
                          validar_par)


class SerieTruncada:
    """
    Serie de potencias a_0 + a_1 x + ... + a_N x^N.

    Los coeficientes pueden ser Fraction o expresiones de sympy; todas las
    operaciones son exactas hasta el orden N.
    """

    def __init__(self, coeficientes, orden: Optional[int] = None):
        coeficientes = list(coeficientes)
        if orden is None:
            orden = len(coeficientes) - 1
        cero = coeficientes[0] * 0 if coeficientes else Fraction(0)
        coeficientes = coeficientes[:orden + 1]
        coeficientes += [cero] * (orden + 1 - len(coeficientes))
        self.coeficientes = coeficientes
        self.orden = orden

    def __getitem__(self, i: int):
        return self.coeficientes[i] if 0 <= i <= self.orden else self.coeficientes[0] * 0

    def _orden_comun(self, otra: 'SerieTruncada') -> int:
        return min(self.orden, otra.orden)

    def __add__(self, otra: 'SerieTruncada') -> 'SerieTruncada':
        n = self._orden_comun(otra)
        return SerieTruncada([self[i] + otra[i] for i in range(n + 1)], n)

    def __sub__(self, otra: 'SerieTruncada') -> 'SerieTruncada':
        n = self._orden_comun(otra)
        return SerieTruncada([self[i] - otra[i] for i in range(n + 1)], n)

    def escalar(self, factor) -> 'SerieTruncada':
        return SerieTruncada([factor * a for a in self.coeficientes], self.orden)

    def __mul__(self, otra: 'SerieTruncada') -> 'SerieTruncada':
        n = self._orden_comun(otra)
        return SerieTruncada(
            [sum((self[i] * otra[m - i] for i in range(m + 1)), self[0] * 0) for m in range(n + 1)], n)

    def derivada(self) -> 'SerieTruncada':
        return SerieTruncada([i * self[i] for i in range(1, self.orden + 1)], self.orden - 1)

    def inversa(self) -> 'SerieTruncada':
        if self[0] == 0:
            raise ErrorCalculo("La serie no es invertible: término constante nulo")
        b = [Fraction(1, self[0]) if isinstance(self[0], int) else self[0] ** -1]
        for m in range(1, self.orden + 1):
            b.append(-sum((self[i] * b[m - i] for i in range(1, m + 1)), self[0] * 0) / self[0])
        return SerieTruncada(b, self.orden)

    def exp(self) -> 'SerieTruncada':
        """exp(f) con f_0 = 0, por g_n = (1/n) Σ k f_k g_{n−k}."""
        if self[0] != 0:
            raise ErrorCalculo("exp necesita término constante nulo")
        g = [self[0] * 0 + 1]
        for n in range(1, self.orden + 1):
            g.append(sum((k * self[k] * g[n - k] for k in range(1, n + 1)), self[0] * 0) / n)
        return SerieTruncada(g, self.orden)

    def log(self) -> 'SerieTruncada':
        """log(f) con f_0 = 1."""
        if self[0] != 1:
            raise ErrorCalculo("log necesita término constante 1")
        h = [self[0] * 0]
        for n in range(1, self.orden + 1):
            acumulado = n * self[n] - sum((k * h[k] * self[n - k] for k in range(1, n)), self[0] * 0)
            h.append(acumulado / n)
        return SerieTruncada(h, self.orden)

    def potencia(self, exponente) -> 'SerieTruncada':
        return self.log().escalar(exponente).exp()

    def componer(self, interior: 'SerieTruncada') -> 'SerieTruncada':
        """f(g(x)) con g_0 = 0, por Horner."""
        if interior[0] != 0:
            raise ErrorCalculo("La serie interior debe tener término constante nulo")
        n = self._orden_comun(interior)
        resultado = SerieTruncada([self[n]], n)
        for i in range(n - 1, -1, -1):
            resultado = resultado * interior + SerieTruncada([self[i]], n)
        return resultado

    def __eq__(self, otra) -> bool:
        return (isinstance(otra, SerieTruncada) and self.orden == otra.orden
                and all(sp.simplify(a - b) == 0 if isinstance(a - b, sp.Basic) else a == b
                        for a, b in zip(self.coeficientes, otra.coeficientes)))

    def __repr__(self) -> str:
        return f"SerieTruncada({self.coeficientes})"


def serie_sinh_mitad(orden: int) -> SerieTruncada:
    """sinh(x/2)/(x/2) = Σ x^{2k} / (4^k (2k+1)!)."""
    coeficientes = [Fraction(0)] * (orden + 1)
    for k in range(orden // 2 + 1):
        coeficientes[2 * k] = Fraction(1, 4 ** k * factorial(2 * k + 1))
    return SerieTruncada(coeficientes, orden)


def td_medio_log(orden: int) -> SerieTruncada:
    """ln f con f(x)^{−2} = sinh(x/2)/(x/2); genera Td^{1/2}."""
    return serie_sinh_mitad(orden).log().escalar(Fraction(-1, 2))


def td_menos_medio_log(orden: int) -> SerieTruncada:
    return serie_sinh_mitad(orden).log().escalar(Fraction(1, 2))


class PolinomioS:
    """Polinomio homogéneo de peso 2k en los monomios s_λ (λ partición par)."""

    def __init__(self, peso: int, terminos: Optional[Dict[Particion, Fraction]] = None):
        self.peso = peso
        self.terminos: Dict[Particion, Fraction] = {}
        for particion, coef in (terminos or {}).items():
            particion = validar_par(particion, peso)
            if coef:
                self.terminos[particion] = self.terminos.get(particion, Fraction(0)) + Fraction(coef)

    def coeficiente(self, particion: Particion) -> Fraction:
        return self.terminos.get(validar_par(particion, self.peso), Fraction(0))

    def escalar(self, factor) -> 'PolinomioS':
        return PolinomioS(self.peso, {p: c * Fraction(factor) for p, c in self.terminos.items()})

    def __add__(self, otro: 'PolinomioS') -> 'PolinomioS':
        if self.peso != otro.peso:
            raise ErrorGrado(f"Pesos distintos: {self.peso} y {otro.peso}")
        terminos = dict(self.terminos)
        for p, c in otro.terminos.items():
            terminos[p] = terminos.get(p, Fraction(0)) + c
        return PolinomioS(self.peso, {p: c for p, c in terminos.items() if c})

    def __eq__(self, otro) -> bool:
        return (isinstance(otro, PolinomioS) and self.peso == otro.peso
                and {p: c for p, c in self.terminos.items() if c}
                == {p: c for p, c in otro.terminos.items() if c})

    def en_base_c(self) -> Dict[Particion, Fraction]:
        """Los mismos coeficientes reescritos en los monomios c_λ."""
        matriz = matriz_s_a_c(self.peso // 2)
        resultado: Dict[Particion, Fraction] = {}
        for p, coef in self.terminos.items():
            for q, valor in matriz[p].items():
                resultado[q] = resultado.get(q, Fraction(0)) + coef * valor
        return {q: v for q, v in resultado.items() if v}

    def __repr__(self) -> str:
        return f"PolinomioS(peso={self.peso}, {self.terminos})"


def formatear_monomio(particion: Particion, letra: str = 's') -> str:
    """(4, 2, 2) -> 's2^2*s4'."""
    partes = []
    for parte in sorted(set(particion)):
        veces = particion.count(parte)
        partes.append(f"{letra}{parte}" if veces == 1 else f"{letra}{parte}^{veces}")
    return '*'.join(partes)


def termino_sucesion_multiplicativa(log_serie: SerieTruncada, grado: int) -> PolinomioS:
    """
    Coeficiente de x^{2k} en exp(Σ a_2i s_2i x^{2i}): el monomio s_λ lleva
    Π a_λi / Π m_i!.
    """
    if log_serie.orden < 2 * grado:
        raise ErrorCalculo(f"La serie tiene orden {log_serie.orden} < {2 * grado}")
    if log_serie[0] != 0 or any(log_serie[i] != 0 for i in range(1, 2 * grado + 1, 2)):
        raise ErrorCalculo("La serie logarítmica debe ser par y sin término constante")
    terminos = {}
    for particion in particiones_pares(2 * grado):
        coef = Fraction(1)
        for parte in particion:
            coef *= log_serie[parte]
        terminos[particion] = coef / factorial_multiplicidades(particion)
    return PolinomioS(2 * grado, terminos)


def td_medio(grado: int, potencia: Fraction = Fraction(1, 2)) -> PolinomioS:
    """Término de grado k de Td^{1/2} (potencia=1/2) o Td^{−1/2} (potencia=−1/2)."""
    orden = 2 * grado + 2
    serie = td_medio_log(orden) if Fraction(potencia) > 0 else td_menos_medio_log(orden)
    return termino_sucesion_multiplicativa(serie, grado)


def polinomio_b_theta(grado: int) -> PolinomioS:
    """b_{Θ^k} = 48^k k! Td^{1/2}_k como polinomio en los s_λ."""
    return td_medio(grado).escalar(48 ** grado * factorial(grado))


def potencia_theta_en_polirruedas(grado: int) -> Dict[Particion, Fraction]:
    """
    Θ^k = Σ a_P ⟨w_2P⟩ con a_P los coeficientes de 48^k k! Td^{−1/2}_k
    (cada s_2m pasa a ser la rueda w_2m). Claves: particiones de k.
    """
    if grado < 1:
        raise ErrorGrado(f"Grado no válido: {grado}")
    polinomio = td_medio(grado, Fraction(-1, 2)).escalar(48 ** grado * factorial(grado))
    return {mitad(p): c for p, c in sorted(polinomio.terminos.items(), key=lambda t: mitad(t[0]))
            if c}


# ---------------------------------------------------------------------------
# Bases s y c
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def matriz_s_a_c(grado: int) -> Dict[Particion, Dict[Particion, Fraction]]:
    """
    s_λ = Σ_μ M[λ][μ] c_μ con raíces ±x_1..±x_k: si y_i = x_i², entonces
    s_2j = 2 p_j(y) y c_2j = (−1)^j e_j(y); se usan las identidades de Newton.
    """
    if grado < 1:
        raise ErrorGrado(f"Grado no válido: {grado}")
    e = sp.symbols(f'e1:{grado + 1}')
    c = sp.symbols(' '.join(f'c{2 * j}' for j in range(1, grado + 1)), seq=True)
    potencias = [None]
    for j in range(1, grado + 1):
        p_j = (-1) ** (j - 1) * j * e[j - 1]
        for i in range(1, j):
            p_j += (-1) ** (i - 1) * e[i - 1] * potencias[j - i]
        potencias.append(sp.expand(p_j))
    sustitucion = {e[j - 1]: (-1) ** j * c[j - 1] for j in range(1, grado + 1)}

    resultado = {}
    for particion in particiones_pares(2 * grado):
        expresion = sp.Integer(1)
        for parte in particion:
            expresion *= 2 * potencias[parte // 2]
        polinomio = sp.Poly(sp.expand(expresion.subs(sustitucion)), *c)
        fila = {}
        for exponentes, coef in polinomio.terms():
            partes = []
            for j, veces in enumerate(exponentes, 1):
                partes += [2 * j] * veces
            fila[tuple(sorted(partes, reverse=True))] = a_fraccion(coef)
        resultado[particion] = fila
    return resultado


@lru_cache(maxsize=None)
def matriz_c_a_s(grado: int) -> Dict[Particion, Dict[Particion, Fraction]]:
    indices = list(particiones_pares(2 * grado))
    directa = matriz_s_a_c(grado)
    inversa = invertir([[directa[l].get(m, Fraction(0)) for m in indices] for l in indices])
    return {m: {l: inversa[i][j] for j, l in enumerate(indices) if inversa[i][j]}
            for i, m in enumerate(indices)}


def _aplicar(matriz, valores: Dict[Particion, Fraction]) -> Dict[Particion, Fraction]:
    return {fila: sum((coef * valores[col] for col, coef in entradas.items()), Fraction(0))
            for fila, entradas in matriz.items()}


class VectorChern:
    """
    Números de Chern de un espacio de grado k en las dos bases.

    Se construye desde una base completa; la otra se deriva.
    """

    def __init__(self, grado: int, valores_s: Optional[Dict[Particion, Fraction]] = None,
                 valores_c: Optional[Dict[Particion, Fraction]] = None):
        self.grado = grado
        indices = list(particiones_pares(2 * grado))
        if valores_s is None and valores_c is None:
            raise ErrorCalculo("Se necesitan valores en la base s o en la base c")

        def completar(valores, base):
            valores = {validar_par(p, 2 * grado): Fraction(v) for p, v in valores.items()}
            faltan = [p for p in indices if p not in valores]
            if faltan:
                raise ErrorCalculo(f"Faltan monomios {base}: {faltan}")
            return valores

        if valores_s is not None:
            self.valores_s = completar(valores_s, 's')
            derivados = s_a_c(self.valores_s, grado)
            if valores_c is not None and completar(valores_c, 'c') != derivados:
                raise ErrorCalculo("Los valores s y c no son coherentes")
            self.valores_c = derivados
        else:
            self.valores_c = completar(valores_c, 'c')
            self.valores_s = c_a_s(self.valores_c, grado)

    def s(self, particion: Particion) -> Fraction:
        return self.valores_s[validar_par(particion, 2 * self.grado)]

    def c(self, particion: Particion) -> Fraction:
        return self.valores_c[validar_par(particion, 2 * self.grado)]

    def __eq__(self, otro) -> bool:
        return (isinstance(otro, VectorChern) and self.grado == otro.grado
                and self.valores_s == otro.valores_s)

    def __repr__(self) -> str:
        return f"VectorChern(grado={self.grado}, s={self.valores_s})"


def s_a_c(valores_s: Dict[Particion, Fraction], grado: int) -> Dict[Particion, Fraction]:
    """Valores c_μ a partir de los s_λ."""
    return _aplicar(matriz_c_a_s(grado), valores_s)


def c_a_s(valores_c: Dict[Particion, Fraction], grado: int) -> Dict[Particion, Fraction]:
    """Valores s_λ a partir de los c_μ."""
    return _aplicar(matriz_s_a_c(grado), valores_c)


def evaluar_polinomio_s(polinomio: PolinomioS, chern: VectorChern) -> Fraction:
    if polinomio.peso != 2 * chern.grado:
        raise ErrorGrado(f"Polinomio de peso {polinomio.peso} sobre datos de grado {chern.grado}")
    total = Fraction(0)
    for particion, coef in polinomio.terminos.items():
        if particion not in chern.valores_s:
            raise ErrorCalculo(f"Falta el valor de {formatear_monomio(particion)}")
        total += coef * chern.valores_s[particion]
    return total


def indices_chern(grado: int) -> List[Particion]:
    return list(particiones_pares(2 * grado))
