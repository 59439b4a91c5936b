#!/usr/bin/env python3
"""
Grafos trivalentes orientados y su forma canónica con signo.

Un grafo se guarda como un emparejamiento perfecto sobre las banderas
(vértice, ranura) con ranura en {0, 1, 2}. El orden cíclico 0 -> 1 -> 2 de
las ranuras en cada vértice es la orientación estándar; reetiquetar
vértices no cambia el signo, trasponer dos ranuras de un vértice sí.
"""

from functools import lru_cache
from itertools import combinations
from typing import Dict, List, Optional, Tuple

import networkx as nx

from .errores import ErrorSintaxisGrafo

Bandera = Tuple[int, int]
Arista = Tuple[Bandera, Bandera]
# (número de vértices, aristas ordenadas de la forma canónica)
ClaveCanonica = Tuple[int, Tuple[Arista, ...]]

CLAVE_VACIA: ClaveCanonica = (0, ())


class GrafoOrientado:
    """
    Multigrafo trivalente con orientación estándar.

    Se admiten lazos y aristas múltiples. El objeto es inmutable: todas
    las operaciones devuelven grafos nuevos.
    """

    def __init__(self, num_vertices: int, aristas):
        if num_vertices < 0 or num_vertices % 2:
            raise ErrorSintaxisGrafo(
                f"El número de vértices debe ser par, se recibió {num_vertices}"
            )
        companero = [-1] * (3 * num_vertices)

        for a, b in aristas:
            fa = self._indice_bandera(a, num_vertices)
            fb = self._indice_bandera(b, num_vertices)
            if fa == fb:
                raise ErrorSintaxisGrafo(f"La bandera {a[0]}.{a[1]} se une consigo misma")
            for f, bandera in ((fa, a), (fb, b)):
                if companero[f] != -1:
                    raise ErrorSintaxisGrafo(
                        f"La bandera {bandera[0]}.{bandera[1]} aparece dos veces"
                    )
            companero[fa] = fb
            companero[fb] = fa

        libres = [f for f in range(3 * num_vertices) if companero[f] == -1]
        if libres:
            nombres = ', '.join(f"{f // 3}.{f % 3}" for f in libres)
            raise ErrorSintaxisGrafo(f"Banderas sin emparejar: {nombres}")

        self.num_vertices = num_vertices
        self.companero: Tuple[int, ...] = tuple(companero)

    @staticmethod
    def _indice_bandera(bandera: Bandera, num_vertices: int) -> int:
        v, s = bandera
        if not (0 <= v < num_vertices) or s not in (0, 1, 2):
            raise ErrorSintaxisGrafo(f"Bandera fuera de rango: {v}.{s}")
        return 3 * v + s

    @classmethod
    def desde_companeros(cls, companero) -> 'GrafoOrientado':
        companero = tuple(companero)
        aristas = [((f // 3, f % 3), (g // 3, g % 3))
                   for f, g in enumerate(companero) if f < g]
        return cls(len(companero) // 3, aristas)

    @property
    def grado(self) -> int:
        return self.num_vertices // 2

    @property
    def aristas(self) -> Tuple[Arista, ...]:
        return tuple(((f // 3, f % 3), (g // 3, g % 3))
                     for f, g in enumerate(self.companero) if f < g)

    def companero_de(self, bandera: Bandera) -> Bandera:
        g = self.companero[3 * bandera[0] + bandera[1]]
        return (g // 3, g % 3)

    def vecinos(self, v: int) -> List[int]:
        return [self.companero[3 * v + s] // 3 for s in range(3)]

    def tiene_lazo(self) -> bool:
        return any(f // 3 == g // 3 for f, g in enumerate(self.companero))

    def aristas_sin_lazo(self) -> List[Arista]:
        return [a for a in self.aristas if a[0][0] != a[1][0]]

    def permutar_vertices(self, permutacion) -> 'GrafoOrientado':
        """El vértice v pasa a llamarse permutacion[v]."""
        aristas = [((permutacion[a[0]], a[1]), (permutacion[b[0]], b[1]))
                   for a, b in self.aristas]
        return GrafoOrientado(self.num_vertices, aristas)

    def transponer_ranuras(self, v: int, s: int, t: int) -> 'GrafoOrientado':
        """Intercambia las ranuras s y t del vértice v (invierte la orientación)."""
        def mover(bandera):
            if bandera[0] != v:
                return bandera
            if bandera[1] == s:
                return (v, t)
            if bandera[1] == t:
                return (v, s)
            return bandera
        return GrafoOrientado(self.num_vertices,
                              [(mover(a), mover(b)) for a, b in self.aristas])

    def a_texto(self) -> str:
        lineas = [f"trivalent {self.num_vertices}"]
        lineas += [f"edge {a[0]}.{a[1]} {b[0]}.{b[1]}" for a, b in self.aristas]
        return '\n'.join(lineas)

    def __eq__(self, otro) -> bool:
        return (isinstance(otro, GrafoOrientado)
                and self.companero == otro.companero)

    def __hash__(self) -> int:
        return hash(self.companero)

    def __repr__(self) -> str:
        return f"GrafoOrientado({self.num_vertices} vértices, {len(self.aristas)} aristas)"


class CanonicoFirmado:
    """Clave canónica junto al signo que relaciona el grafo con ella."""

    def __init__(self, clave: ClaveCanonica, signo: int):
        self.clave = clave
        self.signo = signo

    def __eq__(self, otro) -> bool:
        return (isinstance(otro, CanonicoFirmado)
                and self.clave == otro.clave and self.signo == otro.signo)

    def __hash__(self) -> int:
        return hash((self.clave, self.signo))

    def __repr__(self) -> str:
        return f"CanonicoFirmado(signo={self.signo:+d}, {formatear_clave(self.clave)})"


# ---------------------------------------------------------------------------
# Lenguaje de texto de grafos
# ---------------------------------------------------------------------------

def _lineas_utiles(texto: str) -> List[Tuple[int, str]]:
    lineas = []
    numero = 0
    for bloque in texto.split('\n'):
        numero += 1
        for trozo in bloque.split(';'):
            trozo = trozo.split('#', 1)[0].strip()
            if trozo:
                lineas.append((numero, trozo))
    return lineas


def _parsear_bandera(token: str, numero: int) -> Bandera:
    partes = token.split('.')
    if len(partes) != 2 or not partes[0].isdigit() or not partes[1].isdigit():
        raise ErrorSintaxisGrafo(f"Línea {numero}: bandera no válida '{token}'")
    return int(partes[0]), int(partes[1])


def parsear_grafo(texto: str) -> GrafoOrientado:
    """
    Lee un grafo escrito como

        trivalent 2
        edge 0.0 1.0
        edge 0.1 1.2
        edge 0.2 1.1

    Acepta '#' para comentarios, ';' como separador de líneas y el prefijo
    'canonical ' con el que se imprimen las claves canónicas. Las banderas
    se emparejan exactamente como están escritas.
    """
    lineas = _lineas_utiles(texto)
    if not lineas:
        raise ErrorSintaxisGrafo("Texto de grafo vacío")

    numero, cabecera = lineas[0]
    tokens = cabecera.split()
    if tokens and tokens[0] == 'canonical':
        tokens = tokens[1:]
    if len(tokens) != 2 or tokens[0] != 'trivalent' or not tokens[1].isdigit():
        raise ErrorSintaxisGrafo(f"Línea {numero}: se esperaba 'trivalent <2k>'")
    num_vertices = int(tokens[1])
    if num_vertices == 0 or num_vertices % 2:
        raise ErrorSintaxisGrafo(
            f"Línea {numero}: el número de vértices debe ser par y positivo ({num_vertices})"
        )

    aristas = []
    for numero, linea in lineas[1:]:
        tokens = linea.split()
        if len(tokens) != 3 or tokens[0] != 'edge':
            raise ErrorSintaxisGrafo(f"Línea {numero}: se esperaba 'edge v.s w.t'")
        aristas.append((_parsear_bandera(tokens[1], numero),
                        _parsear_bandera(tokens[2], numero)))

    esperadas = 3 * num_vertices // 2
    if len(aristas) > esperadas:
        raise ErrorSintaxisGrafo(
            f"Se esperaban {esperadas} aristas y hay {len(aristas)}"
        )
    return GrafoOrientado(num_vertices, aristas)


def formatear_clave(clave: ClaveCanonica, separador: str = '; ') -> str:
    """Clave canónica en la misma gramática, con prefijo 'canonical'."""
    n, aristas = clave
    partes = [f"canonical trivalent {n}"]
    partes += [f"edge {a[0]}.{a[1]} {b[0]}.{b[1]}" for a, b in aristas]
    return separador.join(partes)


def grafo_desde_clave(clave: ClaveCanonica) -> GrafoOrientado:
    return GrafoOrientado(clave[0], clave[1])


# ---------------------------------------------------------------------------
# Canonización
# ---------------------------------------------------------------------------

def _paridad(permutacion) -> int:
    inversiones = sum(1 for i, j in combinations(range(len(permutacion)), 2)
                      if permutacion[i] > permutacion[j])
    return -1 if inversiones % 2 else 1


def _refinar(colores: List, vecinos: List[List[int]]) -> List[int]:
    """Refinamiento de colores hasta estabilizar; devuelve rangos densos."""
    rango = {c: i for i, c in enumerate(sorted(set(colores)))}
    colores = [rango[c] for c in colores]
    while True:
        firmas = [(colores[v], tuple(sorted(colores[w] for w in vecinos[v])))
                  for v in range(len(colores))]
        rango = {f: i for i, f in enumerate(sorted(set(firmas)))}
        nuevos = [rango[f] for f in firmas]
        if len(rango) == len(set(colores)):
            return nuevos
        colores = nuevos


def _clave_de_etiquetado(companero, etiqueta: List[int]) -> Tuple[Tuple[Arista, ...], int]:
    """
    Aristas de la forma reetiquetada y paridad de las ranuras.

    En cada vértice las ranuras se ordenan por la etiqueta del vecino; las
    aristas paralelas hacia un vértice ya procesado siguen el orden de
    ranuras que ese vértice les dio.
    """
    n = len(etiqueta)
    orden = sorted(range(n), key=lambda v: etiqueta[v])
    nueva_ranura = [0] * (3 * n)
    signo = 1
    for i, v in enumerate(orden):
        claves = []
        for s in range(3):
            g = companero[3 * v + s]
            j = etiqueta[g // 3]
            desempate = nueva_ranura[g] if j < i else s
            claves.append((j, desempate, s))
        claves.sort()
        permutacion = [0, 0, 0]
        for nueva, (_, _, s) in enumerate(claves):
            nueva_ranura[3 * v + s] = nueva
            permutacion[s] = nueva
        signo *= _paridad(permutacion)

    aristas = set()
    for f, g in enumerate(companero):
        a = (etiqueta[f // 3], nueva_ranura[f])
        b = (etiqueta[g // 3], nueva_ranura[g])
        aristas.add((a, b) if a <= b else (b, a))
    return tuple(sorted(aristas)), signo


def _canonizar_conexo(companero) -> Tuple[Tuple[Arista, ...], int]:
    n = len(companero) // 3
    vecinos = [[companero[3 * v + s] // 3 for s in range(3)] for v in range(n)]
    con_lazo = any(f // 3 == g // 3 for f, g in enumerate(companero))

    iniciales = []
    for v in range(n):
        lazos = sum(1 for w in vecinos[v] if w == v) // 2
        multiplicidades = tuple(sorted(vecinos[v].count(w) for w in set(vecinos[v]) if w != v))
        iniciales.append((lazos, multiplicidades))

    mejor = [None, set()]

    def buscar(colores):
        if len(set(colores)) == n:
            aristas, signo = _clave_de_etiquetado(companero, colores)
            if mejor[0] is None or aristas < mejor[0]:
                mejor[0] = aristas
                mejor[1] = {signo}
            elif aristas == mejor[0]:
                mejor[1].add(signo)
            return
        tamanos: Dict[int, int] = {}
        for c in colores:
            tamanos[c] = tamanos.get(c, 0) + 1
        objetivo = min(c for c, t in tamanos.items() if t > 1)
        for v in range(n):
            if colores[v] != objetivo:
                continue
            individualizado = [2 * c + (1 if c == objetivo and u != v else 0)
                               for u, c in enumerate(colores)]
            buscar(_refinar(individualizado, vecinos))

    buscar(_refinar(iniciales, vecinos))

    aristas, signos = mejor
    if con_lazo or len(signos) > 1:
        return aristas, 0
    return aristas, signos.pop()


def _componentes_companeros(companero) -> List[Tuple[int, ...]]:
    """Componentes conexas como tuplas de compañeros reindexadas."""
    n = len(companero) // 3
    red = nx.Graph()
    red.add_nodes_from(range(n))
    red.add_edges_from((f // 3, g // 3) for f, g in enumerate(companero))
    componentes = sorted((sorted(c) for c in nx.connected_components(red)),
                         key=lambda c: c[0])
    resultado = []
    for vertices in componentes:
        nuevo = {v: i for i, v in enumerate(vertices)}
        sub = []
        for v in vertices:
            for s in range(3):
                g = companero[3 * v + s]
                sub.append(3 * nuevo[g // 3] + g % 3)
        resultado.append(tuple(sub))
    return resultado


@lru_cache(maxsize=200000)
def _canonizar_companeros(companero: Tuple[int, ...]) -> Tuple[ClaveCanonica, int]:
    n = len(companero) // 3
    if n == 0:
        return CLAVE_VACIA, 1

    piezas = []
    signo = 1
    for sub in _componentes_companeros(companero):
        aristas, s = _canonizar_conexo(sub)
        piezas.append((len(sub) // 3, aristas))
        signo *= s
    piezas.sort()

    aristas = []
    desplazamiento = 0
    for m, sub_aristas in piezas:
        for (v, s), (w, t) in sub_aristas:
            aristas.append(((v + desplazamiento, s), (w + desplazamiento, t)))
        desplazamiento += m
    return (n, tuple(aristas)), signo


def canonizar(grafo: GrafoOrientado) -> CanonicoFirmado:
    """
    Forma canónica del grafo y signo relativo a ella.

    Grafos isomorfos (por cualquier reetiquetado de vértices) comparten
    clave. El signo es el producto de las paridades de las ranuras; vale
    0 si hay un lazo o un automorfismo que invierte la orientación.
    """
    clave, signo = _canonizar_companeros(grafo.companero)
    return CanonicoFirmado(clave, signo)


def limpiar_cache_canonizacion():
    _canonizar_companeros.cache_clear()


# ---------------------------------------------------------------------------
# Constructores y consultas estructurales
# ---------------------------------------------------------------------------

def theta() -> GrafoOrientado:
    return GrafoOrientado(2, [((0, 0), (1, 0)), ((0, 1), (1, 2)), ((0, 2), (1, 1))])


def collar(m: int) -> GrafoOrientado:
    """
    Collar Theta_m con 2m vértices: m cuentas dobles unidas en ciclo.

    La cuenta i usa los vértices 2i y 2i+1; collar(1) es Theta.
    """
    if m < 1:
        raise ValueError(f"El collar necesita m >= 1, se recibió {m}")
    aristas = []
    for i in range(m):
        u, v = 2 * i, 2 * i + 1
        aristas.append(((u, 1), (v, 2)))
        aristas.append(((u, 2), (v, 1)))
        aristas.append(((v, 0), ((2 * i + 2) % (2 * m), 0)))
    return GrafoOrientado(2 * m, aristas)


def rueda(n: int, primer_vertice: int = 0) -> Tuple[List[Arista], List[Bandera]]:
    """
    Rueda de n vértices en orden plano: aristas del ciclo y radios libres.

    El vértice r_i usa la ranura 0 para el radio y r_i.2 se une a r_{i+1}.1.
    """
    if n < 1:
        raise ValueError(f"Una rueda necesita al menos un vértice ({n})")
    vertices = [primer_vertice + i for i in range(n)]
    ciclo = [((vertices[i], 2), (vertices[(i + 1) % n], 1)) for i in range(n)]
    radios = [(v, 0) for v in vertices]
    return ciclo, radios


def union_disjunta(g1: GrafoOrientado, g2: GrafoOrientado) -> GrafoOrientado:
    """Concatena vértices: los de g2 se desplazan tras los de g1."""
    d = g1.num_vertices
    aristas = list(g1.aristas)
    aristas += [((a[0] + d, a[1]), (b[0] + d, b[1])) for a, b in g2.aristas]
    return GrafoOrientado(d + g2.num_vertices, aristas)


def vertices_por_componente(grafo: GrafoOrientado) -> List[List[int]]:
    """Listas de vértices de cada componente, ordenadas por su menor vértice."""
    red = nx.MultiGraph()
    red.add_nodes_from(range(grafo.num_vertices))
    red.add_edges_from((a[0], b[0]) for a, b in grafo.aristas)
    return sorted((sorted(c) for c in nx.connected_components(red)), key=lambda c: c[0])


def componentes_conexas(grafo: GrafoOrientado) -> List[GrafoOrientado]:
    """Componentes ordenadas por su menor vértice, reindexadas."""
    return [GrafoOrientado.desde_companeros(sub)
            for sub in _componentes_companeros(grafo.companero)]


def insertar_burbuja(grafo: GrafoOrientado, arista: Optional[Arista] = None) -> GrafoOrientado:
    """
    Inserta una 2-rueda (dos vértices con arista doble) sobre una arista.

    Los vértices nuevos son n y n+1; sus radios (ranura 0) quedan unidos a
    los extremos de la arista original.
    """
    if arista is None:
        arista = grafo.aristas[0]
    a, b = arista
    if grafo.companero_de(a) != b:
        raise ValueError(f"{a[0]}.{a[1]} y {b[0]}.{b[1]} no forman una arista")
    n = grafo.num_vertices
    aristas = [e for e in grafo.aristas if e != arista and e != (b, a)]
    aristas += [((n, 2), (n + 1, 1)), ((n + 1, 2), (n, 1)),
                (a, (n, 0)), (b, (n + 1, 0))]
    return GrafoOrientado(n + 2, aristas)
