#!/usr/bin/env python3
"""
Invariantes de Rozansky-Witten de espacios concretos.

Un Espacio es irreducible (S^[k], T^[[k]]), producto de espacios, suma
formal racional de espacios del mismo grado, o la variedad virtual C_k
que define el peso de su(2). Los invariantes b_Γ se obtienen por
polirruedas, por funciones racionales en irreducibles, por el
coproducto en productos o por linealidad en sumas.
"""

import re
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Dict, List, Optional, Sequence, Tuple

from .algebra_lineal import SolucionLineal, resolver_sistema
from .clases_caracteristicas import (VectorChern, evaluar_polinomio_s, formatear_monomio,
                                     indices_chern, polinomio_b_theta)
from .configuracion import obtener_configuracion, obtener_logger
from .errores import ErrorCalculo, ErrorGrado
from .generos import (VectorChi, inversion_chi, invertir_chi, vector_chi_hilbert,
                      vector_chi_kummer)
from .homologia import (Clase, clases_de_grado, formatear_clase, grado_clase, grado_generador,
                        inversion_polirruedas, ordenar_clase, parsear_clase, vector_clase)
from .particiones import sub_multiconjuntos
from .pesos_lie import peso_vector, su2

logger = obtener_logger('espacios_rw')

IRREDUCIBLE = 'irreducible'
PRODUCTO = 'producto'
SUMA = 'suma'
VIRTUAL = 'virtual'

# procedencias de un invariante
POLIRRUEDAS = 'polirruedas'
FUNCION_RACIONAL = 'funcion-racional'
DIVISION_PRODUCTO = 'producto'
PESO_DIRECTO = 'peso-directo'
SUMA_ADITIVA = 'suma-aditiva'
DESCONOCIDO = 'desconocido'


class ValorInvariante:
    """Un b_Γ(X) exacto con la estrategia que lo produjo."""

    def __init__(self, valor: Fraction, procedencia: str):
        self.valor = Fraction(valor)
        self.procedencia = procedencia

    def __repr__(self) -> str:
        return f"ValorInvariante({self.valor}, {self.procedencia})"


class Espacio:
    """
    Variedad hiperkähler (o combinación formal) de grado k (dim real 4k).

    Los irreducibles guardan su VectorChi y su VectorChern completo; los
    productos y las sumas derivan el suyo de sus componentes.
    """

    def __init__(self, nombre: str, grado: int, tipo: str, chern: Optional[VectorChern] = None,
                 chi: Optional[VectorChi] = None, factores: Sequence['Espacio'] = (),
                 sumandos: Sequence[Tuple[Fraction, 'Espacio']] = ()):
        self.nombre = nombre
        self.grado = grado
        self.tipo = tipo
        self.chern = chern
        self.chi = chi
        self.factores = list(factores)
        self.sumandos = [(Fraction(c), e) for c, e in sumandos]
        self.parametro_s: Optional[Fraction] = None
        self._cache: Dict[Clase, ValorInvariante] = {}

        if tipo == PRODUCTO and sum(f.grado for f in self.factores) != grado:
            raise ErrorGrado(f"{nombre}: el grado no es la suma de los grados de los factores")
        if tipo == SUMA and any(e.grado != grado for _, e in self.sumandos):
            raise ErrorGrado(f"{nombre}: los sumandos no comparten grado")

    @property
    def es_irreducible(self) -> bool:
        return self.tipo == IRREDUCIBLE

    def s(self, particion) -> Fraction:
        if self.chern is None:
            raise ErrorCalculo(f"{self.nombre} no tiene números de Chern")
        return self.chern.s(particion)

    def __repr__(self) -> str:
        return f"Espacio({self.nombre}, k={self.grado}, {self.tipo})"


class InformeInvariantes:
    """b_Γ(X) para todas las clases de la base de grado k."""

    def __init__(self, espacio: Espacio, valores: Dict[Clase, Optional[ValorInvariante]]):
        self.espacio = espacio
        self.valores = valores

    def valor(self, clase: Clase) -> Optional[Fraction]:
        entrada = self.valores.get(clase)
        return entrada.valor if entrada else None

    def procedencia(self, clase: Clase) -> str:
        entrada = self.valores.get(clase)
        return entrada.procedencia if entrada else DESCONOCIDO

    def filas(self) -> List[Tuple[str, Optional[Fraction], str]]:
        return [(formatear_clase(c), self.valor(c), self.procedencia(c)) for c in self.valores]


# ---------------------------------------------------------------------------
# Constructores
# ---------------------------------------------------------------------------

def b_theta_cerrado(familia: str, grado: int) -> int:
    """b_{Θ^k}: 12^k (k+3)^k en S^[k] y 12^k (k+1)^{k+1} en T^[[k]]."""
    if not 1 <= grado <= 6:
        raise ErrorGrado(f"Forma cerrada de b_Θ^k disponible para 1 <= k <= 6, no {grado}")
    if familia == 'hilbert':
        return 12 ** grado * (grado + 3) ** grado
    if familia == 'kummer':
        return 12 ** grado * (grado + 1) ** (grado + 1)
    raise ErrorCalculo(f"Familia desconocida: '{familia}'")


def puente_b_theta(grado: int) -> Dict[str, Fraction]:
    """b_{Θ^k} como combinación de χ⁰..χ^{k−1} (y de s en grado 4)."""
    inversion = inversion_chi(grado)
    polinomio = polinomio_b_theta(grado)
    return {variable: sum((coef * inversion.coeficientes_s[p][j] for p, coef in polinomio.terminos.items()),
                          Fraction(0))
            for j, variable in enumerate(inversion.variables)}


def _chern_irreducible(nombre: str, chi: VectorChi, objetivo_b_theta: int) -> Tuple[VectorChern, Optional[Fraction]]:
    grado = chi.grado
    familia = invertir_chi(grado, chi)
    polinomio = polinomio_b_theta(grado)
    parametro = None
    if familia.parametrica:
        v0 = evaluar_polinomio_s(polinomio, familia.en(0))
        pendiente = evaluar_polinomio_s(polinomio, familia.en(1)) - v0
        if not pendiente:
            raise ErrorCalculo(f"{nombre}: b_Θ^{grado} no depende de s")
        parametro = (objetivo_b_theta - v0) / pendiente
        logger.info(f"🔍 {nombre}: s = {parametro}")
    chern = familia.en(parametro)
    if evaluar_polinomio_s(polinomio, chern) != objetivo_b_theta:
        raise ErrorCalculo(f"{nombre}: b_Θ^{grado} de los números de Chern no coincide con {objetivo_b_theta}")
    return chern, parametro


def _validar_grado_espacio(grado: int):
    maximo = obtener_configuracion()['grado_maximo_chern']
    if not 1 <= grado <= maximo:
        raise ErrorGrado(f"Grado {grado} fuera del rango soportado 1..{maximo}")


def nombre_hilbert(grado: int) -> str:
    return 'S' if grado == 1 else f'S^[{grado}]'


def nombre_kummer(grado: int) -> str:
    return f'T^[[{grado}]]'


@lru_cache(maxsize=None)
def crear_hilbert(grado: int) -> Espacio:
    """Esquema de Hilbert S^[k] de k puntos en una superficie K3."""
    _validar_grado_espacio(grado)
    chi = vector_chi_hilbert(grado)
    chern, parametro = _chern_irreducible(nombre_hilbert(grado), chi, b_theta_cerrado('hilbert', grado))
    espacio = Espacio(nombre_hilbert(grado), grado, IRREDUCIBLE, chern=chern, chi=chi)
    espacio.parametro_s = parametro
    return espacio


@lru_cache(maxsize=None)
def crear_kummer(grado: int) -> Espacio:
    """Variedad de Kummer generalizada T^[[k]] (T^[[1]] es la superficie de Kummer)."""
    _validar_grado_espacio(grado)
    chi = vector_chi_kummer(grado)
    chern, parametro = _chern_irreducible(nombre_kummer(grado), chi, b_theta_cerrado('kummer', grado))
    espacio = Espacio(nombre_kummer(grado), grado, IRREDUCIBLE, chern=chern, chi=chi)
    espacio.parametro_s = parametro
    return espacio


def _nombre_producto(factores: List[Espacio]) -> str:
    grupos: List[List] = []
    for factor in factores:
        if grupos and grupos[-1][0] == factor.nombre:
            grupos[-1][1] += 1
        else:
            grupos.append([factor.nombre, 1])
    return 'x'.join(n if veces == 1 else f"{n}^{veces}" for n, veces in grupos)


def _chern_producto(x: VectorChern, y: VectorChern) -> VectorChern:
    """s_λ(X×Y) = Σ sobre divisiones de las partes de s_A(X) s_B(Y)."""
    grado = x.grado + y.grado
    valores = {}
    for particion in indices_chern(grado):
        total = Fraction(0)
        for a, b in sub_multiconjuntos(particion):
            if sum(a) == 2 * x.grado:
                total += x.s(a) * y.s(b)
        valores[particion] = total
    return VectorChern(grado, valores)


def producto(espacios: Sequence[Espacio]) -> Espacio:
    """Producto de espacios; los productos anidados se aplanan."""
    factores: List[Espacio] = []
    for espacio in espacios:
        if espacio.tipo == PRODUCTO:
            factores += espacio.factores
        elif espacio.tipo == SUMA:
            raise ErrorCalculo("El producto de sumas formales no está soportado")
        else:
            factores.append(espacio)
    if not factores:
        raise ErrorCalculo("Producto vacío")
    if len(factores) == 1:
        return factores[0]
    grado = sum(f.grado for f in factores)
    if grado > obtener_configuracion()['grado_maximo_base']:
        raise ErrorGrado(f"Producto de grado {grado} fuera del rango soportado")

    chern = None
    if all(f.chern is not None for f in factores):
        chern = factores[0].chern
        for factor in factores[1:]:
            chern = _chern_producto(chern, factor.chern)
    return Espacio(_nombre_producto(factores), grado, PRODUCTO, chern=chern, factores=factores)


def suma_formal(terminos: Sequence[Tuple], nombre: Optional[str] = None) -> Espacio:
    """Σ c_i X_i con coeficientes racionales; todos los X_i del mismo grado."""
    if not terminos:
        raise ErrorCalculo("Suma formal vacía")
    terminos = [(Fraction(c), e) for c, e in terminos]
    grado = terminos[0][1].grado
    chern = None
    if all(e.chern is not None for _, e in terminos):
        valores = {p: sum((c * e.s(p) for c, e in terminos), Fraction(0)) for p in indices_chern(grado)}
        chern = VectorChern(grado, valores)
    if nombre is None:
        nombre = ' + '.join(f"{formatear_coeficiente(c)}{e.nombre}" for c, e in terminos).replace('+ -', '- ')
    return Espacio(nombre, grado, SUMA, chern=chern, sumandos=terminos)


def formatear_coeficiente(coef: Fraction) -> str:
    if coef == 1:
        return ''
    if coef == -1:
        return '-'
    return f"{coef}*"


def chern_virtual(grado: int) -> VectorChern:
    """s_λ(C_k) = (−1)^{k+j} (2k+1)! / (2^{k−j} k!), j = número de partes."""
    valores = {}
    for particion in indices_chern(grado):
        j = len(particion)
        valores[particion] = Fraction((-1) ** (grado + j) * factorial(2 * grado + 1),
                                      2 ** (grado - j) * factorial(grado))
    return VectorChern(grado, valores)


@lru_cache(maxsize=None)
def virtual_ck(grado: int) -> Espacio:
    """Variedad virtual C_k: sus invariantes son los pesos de su(2)."""
    if not 1 <= grado <= 5:
        raise ErrorGrado(f"C_k disponible para 1 <= k <= 5, no {grado}")
    return Espacio(f"C{grado}", grado, VIRTUAL, chern=chern_virtual(grado))


_PATRON_FACTOR = re.compile(r'^(?:S\^\[(\d+)\]|T\^\[\[(\d+)\]\]|S(?:\^(\d+))?|C(\d+)|'
                            r'hilb:(\d+)|kummer:(\d+)|ck:(\d+))$')


def _parsear_factor(texto: str) -> List[Espacio]:
    coincidencia = _PATRON_FACTOR.match(texto)
    if not coincidencia:
        raise ErrorCalculo(f"Espacio desconocido: '{texto}'")
    hilb, kummer, potencia, virtual, hilb2, kummer2, virtual2 = coincidencia.groups()
    if hilb or hilb2:
        return [crear_hilbert(int(hilb or hilb2))]
    if kummer or kummer2:
        return [crear_kummer(int(kummer or kummer2))]
    if virtual or virtual2:
        return [virtual_ck(int(virtual or virtual2))]
    return [crear_hilbert(1)] * int(potencia or 1)


def espacio_desde_nombre(texto: str) -> Espacio:
    """
    'hilb:4', 'kummer:3', 'S^[2]xS^[2]', 'S^2xS^[2]', 'C4' o sumas formales
    como '7*S^[4] - 49/8*SxS^[3]'.
    """
    texto = texto.replace(' ', '').replace('×', 'x')
    if not texto:
        raise ErrorCalculo("Nombre de espacio vacío")
    trozos = re.findall(r'([+-]?)(?:(\d+(?:/\d+)?)\*)?([^+-]+)', texto)
    if ''.join(s + (c + '*' if c else '') + n for s, c, n in trozos) != texto:
        raise ErrorCalculo(f"Espacio no válido: '{texto}'")

    terminos = []
    for signo, coef, nombre in trozos:
        factores = []
        for trozo in nombre.split('x'):
            factores += _parsear_factor(trozo)
        valor = Fraction(coef) if coef else Fraction(1)
        terminos.append((-valor if signo == '-' else valor, producto(factores)))
    if len(terminos) == 1 and terminos[0][0] == 1:
        return terminos[0][1]
    return suma_formal(terminos)


# ---------------------------------------------------------------------------
# Invariantes
# ---------------------------------------------------------------------------

def _es_polirrueda(clave) -> bool:
    return all(isinstance(p, int) for p in clave)


def _valor_polirrueda(espacio: Espacio, particion) -> Fraction:
    """b(⟨w_λ⟩) = (−1)^j s_λ."""
    return (-1) ** len(particion) * espacio.s(particion)


def _por_polirruedas(espacio: Espacio, clase: Clase, visitadas: frozenset) -> Optional[ValorInvariante]:
    expresion = inversion_polirruedas(espacio.grado)[clase]
    if all(_es_polirrueda(g) for g in expresion):
        total = sum((coef * _valor_polirrueda(espacio, g) for g, coef in expresion.items()), Fraction(0))
        return ValorInvariante(total, POLIRRUEDAS)
    if not espacio.es_irreducible:
        return None
    total = Fraction(0)
    for generador, coef in expresion.items():
        if _es_polirrueda(generador):
            total += coef * _valor_polirrueda(espacio, generador)
        else:
            total += coef * _por_funcion_racional(espacio, generador, visitadas).valor
    return ValorInvariante(total, FUNCION_RACIONAL)


def _por_funcion_racional(espacio: Espacio, clase: Clase, visitadas: frozenset) -> ValorInvariante:
    """
    En un irreducible b_Γ depende de Γ sólo a través del producto de
    escalares por componente: b_Γ = b_{Θ^k} Π r_γ con
    r_γ = b(Θ^{k−d} γ) / b(Θ^k).
    """
    if clase in visitadas:
        raise ErrorCalculo(f"Dependencia circular al evaluar {formatear_clase(clase)}")
    visitadas = visitadas | {clase}
    k = espacio.grado
    potencia = ('theta',) * k
    b_theta = _por_polirruedas(espacio, potencia, visitadas).valor
    if not b_theta:
        raise ErrorCalculo(f"b_Θ^{k}({espacio.nombre}) = 0: el espacio no es irreducible")
    total = b_theta
    for factor in clase:
        if factor == 'theta':
            continue
        d = grado_generador(factor)
        referencia = ordenar_clase(('theta',) * (k - d) + (factor,))
        total *= _por_polirruedas(espacio, referencia, visitadas).valor / b_theta
    return ValorInvariante(total, FUNCION_RACIONAL)


def _asignaciones(clase: Clase, grados: List[int]):
    """Repartos de los factores de la clase entre espacios con esos grados."""
    def recorrer(i, restantes, partes):
        if i == len(clase):
            if not any(restantes):
                yield [ordenar_clase(p) for p in partes]
            return
        d = grado_generador(clase[i])
        for j, libre in enumerate(restantes):
            if d <= libre:
                restantes[j] -= d
                partes[j].append(clase[i])
                yield from recorrer(i + 1, restantes, partes)
                partes[j].pop()
                restantes[j] += d
    yield from recorrer(0, list(grados), [[] for _ in grados])


def _por_producto(espacio: Espacio, clase: Clase) -> ValorInvariante:
    """b_Γ(X_1×…×X_n) = Σ Π b_{Γ_i}(X_i) sobre los repartos de componentes."""
    total = Fraction(0)
    for reparto in _asignaciones(clase, [f.grado for f in espacio.factores]):
        termino = Fraction(1)
        for factor, subclase in zip(espacio.factores, reparto):
            termino *= invariante_b(factor, subclase).valor
            if not termino:
                break
        total += termino
    return ValorInvariante(total, DIVISION_PRODUCTO)


def _peso_directo(clase: Clase) -> Fraction:
    return peso_vector(vector_clase(clase), su2())


def _comprobar(espacio: Espacio, clase: Clase, principal: ValorInvariante, otro: Optional[ValorInvariante]):
    if otro is not None and otro.valor != principal.valor:
        raise ErrorCalculo(
            f"Estrategias en desacuerdo para {formatear_clase(clase)} en {espacio.nombre}: "
            f"{principal.valor} ({principal.procedencia}) y {otro.valor} ({otro.procedencia})"
        )


def invariante_b(espacio: Espacio, clase) -> ValorInvariante:
    """
    b_Γ(X) para una clase de la base de grado k, con su procedencia.

    Orden: polirruedas, función racional (irreducibles), coproducto
    (productos), linealidad (sumas). En C_k el valor es el peso de su(2)
    y se contrasta con el de polirruedas cuando ambos existen.
    """
    if isinstance(clase, str):
        clase = parsear_clase(clase)
    clase = ordenar_clase(clase)
    if grado_clase(clase) != espacio.grado:
        raise ErrorGrado(f"La clase {formatear_clase(clase)} tiene grado {grado_clase(clase)}, "
                         f"el espacio {espacio.nombre} tiene grado {espacio.grado}")
    if clase in espacio._cache:
        return espacio._cache[clase]

    if espacio.tipo == SUMA:
        total = sum((c * invariante_b(e, clase).valor for c, e in espacio.sumandos), Fraction(0))
        resultado = ValorInvariante(total, SUMA_ADITIVA)
    elif espacio.tipo == VIRTUAL:
        resultado = ValorInvariante(_peso_directo(clase), PESO_DIRECTO)
        if espacio.grado <= obtener_configuracion()['grado_maximo_chern']:
            _comprobar(espacio, clase, resultado, _por_polirruedas(espacio, clase, frozenset()))
    elif espacio.tipo == PRODUCTO:
        resultado = None
        if espacio.chern is not None:
            resultado = _por_polirruedas(espacio, clase, frozenset())
        por_producto = _por_producto(espacio, clase)
        if resultado is None:
            resultado = por_producto
        else:
            _comprobar(espacio, clase, resultado, por_producto)
    else:
        # en un irreducible _por_polirruedas siempre resuelve
        resultado = _por_polirruedas(espacio, clase, frozenset())

    espacio._cache[clase] = resultado
    return resultado


def informe_invariantes(espacio: Espacio) -> InformeInvariantes:
    """Todas las clases de la base; las que no se pueden evaluar quedan como desconocidas."""
    valores: Dict[Clase, Optional[ValorInvariante]] = {}
    for clase in clases_de_grado(espacio.grado):
        try:
            valores[clase] = invariante_b(espacio, clase)
        except ErrorCalculo as error:
            logger.warning(f"⚠️ {espacio.nombre}, {formatear_clase(clase)}: {error}")
            valores[clase] = None
    return InformeInvariantes(espacio, valores)


# ---------------------------------------------------------------------------
# Combinaciones lineales de espacios
# ---------------------------------------------------------------------------

class ResultadoSpan:
    """Coeficientes de una expresión objetivo ∼ Σ c_i X_i."""

    def __init__(self, objetivo: Espacio, diccionario: List[Espacio], solucion: SolucionLineal):
        self.objetivo = objetivo
        self.diccionario = diccionario
        self.solucion = solucion

    @property
    def factible(self) -> bool:
        return self.solucion.factible

    @property
    def unica(self) -> bool:
        return self.solucion.unica

    @property
    def coeficientes(self) -> Optional[List[Fraction]]:
        return self.solucion.particular

    def a_texto(self) -> str:
        if not self.factible:
            return f"{self.objetivo.nombre}: no es combinación de {[e.nombre for e in self.diccionario]}"
        terminos = ' '.join(f"{'+' if c >= 0 else '-'} {abs(c)} {e.nombre}"
                            for c, e in zip(self.coeficientes, self.diccionario) if c)
        aviso = '' if self.unica else f" (núcleo de dimensión {len(self.solucion.nucleo)})"
        return f"{self.objetivo.nombre} ∼ {terminos.lstrip('+ ')}{aviso}"


def expresar_en_span(objetivo: Espacio, diccionario: Sequence[Espacio], criterio: str = 'todo') -> ResultadoSpan:
    """
    Resuelve objetivo ∼ Σ c_i X_i igualando todos los invariantes de la
    base (criterio 'todo') o sólo los números de Chern (criterio 'chern').
    """
    diccionario = list(diccionario)
    if not diccionario:
        raise ErrorCalculo("El diccionario de espacios está vacío")
    if any(e.grado != objetivo.grado for e in diccionario):
        raise ErrorGrado("Todos los espacios deben tener el grado del objetivo")
    if criterio not in ('todo', 'chern'):
        raise ErrorCalculo(f"Criterio desconocido: '{criterio}'")

    if criterio == 'chern':
        funcionales = [lambda e, p=p: e.s(p) for p in indices_chern(objetivo.grado)]
    else:
        funcionales = [lambda e, c=c: invariante_b(e, c).valor for c in clases_de_grado(objetivo.grado)]

    matriz = [[f(e) for e in diccionario] for f in funcionales]
    lado_derecho = [f(objetivo) for f in funcionales]
    return ResultadoSpan(objetivo, diccionario, resolver_sistema(matriz, lado_derecho))


# ---------------------------------------------------------------------------
# Cobordismo y curvatura
# ---------------------------------------------------------------------------

class InformeCobordismo:
    """Dos combinaciones con los mismos números de Chern y distinto b_{Θ₂²}."""

    def __init__(self):
        self.lineas: List[str] = []
        self.chern_coinciden = False
        self.valores: Dict[str, Fraction] = {}
        self.par_entero: Dict[str, Fraction] = {}

    @property
    def distingue(self) -> bool:
        return self.chern_coinciden and len(set(self.valores.values())) > 1

    def a_texto(self) -> str:
        return '\n'.join(self.lineas)


def combinacion_cobordismo() -> Espacio:
    """7S^[4] − 49/8 S×S^[3] − 3S^[2]×S^[2] + 67/12 S²×S^[2] − 21/16 S⁴."""
    return espacio_desde_nombre('7*S^[4] - 49/8*SxS^[3] - 3*S^[2]xS^[2] + 67/12*S^2xS^[2] - 21/16*S^4')


def distinguir_cobordismo() -> InformeCobordismo:
    """
    Construye X con los números de Chern de T^[[4]] y compara b_{Θ₂²}.
    Una discrepancia en los números de Chern se informa, no se lanza.
    """
    informe = InformeCobordismo()
    clase = ('theta_2', 'theta_2')
    kummer = crear_kummer(4)
    x = combinacion_cobordismo()

    informe.chern_coinciden = x.chern.valores_s == kummer.chern.valores_s
    estado = '✅' if informe.chern_coinciden else '❌ FALLO:'
    informe.lineas.append(f"{estado} números de Chern de X y de T^[[4]] "
                          f"{'coinciden' if informe.chern_coinciden else 'difieren'}")
    for particion in indices_chern(4):
        informe.lineas.append(f"  {formatear_monomio(particion)}: X={x.s(particion)}  "
                              f"T^[[4]]={kummer.s(particion)}")

    informe.valores = {'X': invariante_b(x, clase).valor, 'T^[[4]]': invariante_b(kummer, clase).valor}
    informe.lineas.append(f"b_theta_2^2(X) = {informe.valores['X']}")
    informe.lineas.append(f"b_theta_2^2(T^[[4]]) = {informe.valores['T^[[4]]']}")

    lado_a = espacio_desde_nombre('336*S^[4] + 268*S^2xS^[2]')
    lado_b = espacio_desde_nombre('48*T^[[4]] + 294*SxS^[3] + 144*S^[2]xS^[2] + 63*S^4')
    mismos = lado_a.chern.valores_s == lado_b.chern.valores_s
    informe.par_entero = {lado_a.nombre: invariante_b(lado_a, clase).valor,
                          lado_b.nombre: invariante_b(lado_b, clase).valor}
    informe.lineas.append(f"Par entero ({'mismos' if mismos else 'distintos'} números de Chern; "
                          f"el término 294 se toma sobre SxS^[3]):")
    for nombre, valor in informe.par_entero.items():
        informe.lineas.append(f"  b_theta_2^2({nombre}) = {valor}")
    return informe


def relacion_curvatura_volumen(espacio: Espacio) -> Fraction:
    """
    Coeficiente de π^{2k} en ‖K‖^{2k}/vol^{k−1}:
    (192k)^k ∫Td^{1/2}_k con ∫Td^{1/2}_k = b_{Θ^k}/(48^k k!).
    """
    if not espacio.es_irreducible:
        raise ErrorCalculo(f"{espacio.nombre} no es irreducible")
    k = espacio.grado
    b_theta = invariante_b(espacio, ('theta',) * k).valor
    return Fraction(192 * k) ** k * b_theta / (48 ** k * factorial(k))


__all__ = [
    'Espacio', 'ValorInvariante', 'InformeInvariantes', 'crear_hilbert', 'crear_kummer',
    'producto', 'suma_formal', 'virtual_ck', 'chern_virtual', 'espacio_desde_nombre',
    'invariante_b', 'informe_invariantes', 'ResultadoSpan', 'expresar_en_span',
    'InformeCobordismo', 'combinacion_cobordismo', 'distinguir_cobordismo',
    'relacion_curvatura_volumen', 'b_theta_cerrado', 'puente_b_theta', 'nombre_hilbert',
    'nombre_kummer', 'POLIRRUEDAS', 'FUNCION_RACIONAL', 'DIVISION_PRODUCTO', 'PESO_DIRECTO',
    'SUMA_ADITIVA', 'DESCONOCIDO',
]
