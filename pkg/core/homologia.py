#!/usr/bin/env python3
"""
Homología de grafos A(∅)^k en grado bajo.

Construye el cociente por las relaciones AS/IHX a partir de un span
saturado, reduce vectores de grafos a coordenadas de la base, expande
cierres de polirruedas y calcula el coproducto y la clase burbuja.
"""

from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from .algebra_lineal import EliminacionDispersa, invertir
from .configuracion import obtener_configuracion, obtener_logger
from .errores import (ErrorAristaLazo, ErrorCalculo, ErrorFueraDeSpan, ErrorGrado,
                      ErrorParticion)
from .grafos import (CLAVE_VACIA, Arista, Bandera, ClaveCanonica, GrafoOrientado,
                     canonizar, collar, componentes_conexas, formatear_clave,
                     grafo_desde_clave, insertar_burbuja, parsear_grafo, rueda,
                     union_disjunta, vertices_por_componente)
from .particiones import (Particion, numero_particiones,
                          particiones, particiones_pares, validar_par)

logger = obtener_logger('homologia')

Clase = Tuple[str, ...]


class VectorGrafos:
    """
    Combinación racional finita de grafos canónicos de grado fijo.

    Los términos con coeficiente cero y los grafos de signo 0 no se guardan.
    """

    def __init__(self, grado: int, terminos: Optional[Dict[ClaveCanonica, Fraction]] = None):
        self.grado = grado
        self.terminos: Dict[ClaveCanonica, Fraction] = {}
        for clave, coef in (terminos or {}).items():
            self.agregar_clave(clave, coef)

    @classmethod
    def desde_grafo(cls, grafo: GrafoOrientado, coef=1) -> 'VectorGrafos':
        vector = cls(grafo.grado)
        vector.agregar_grafo(grafo, coef)
        return vector

    @classmethod
    def vacio(cls) -> 'VectorGrafos':
        """La clase del grafo vacío (unidad del producto)."""
        return cls(0, {CLAVE_VACIA: Fraction(1)})

    def agregar_clave(self, clave: ClaveCanonica, coef):
        if clave[0] != 2 * self.grado:
            raise ErrorGrado(f"Grafo de {clave[0]} vértices en un vector de grado {self.grado}")
        nuevo = self.terminos.get(clave, Fraction(0)) + Fraction(coef)
        if nuevo:
            self.terminos[clave] = nuevo
        else:
            self.terminos.pop(clave, None)

    def agregar_grafo(self, grafo: GrafoOrientado, coef=1):
        canonico = canonizar(grafo)
        if canonico.signo:
            self.agregar_clave(canonico.clave, Fraction(coef) * canonico.signo)

    def es_cero(self) -> bool:
        return not self.terminos

    def _compatible(self, otro: 'VectorGrafos'):
        if self.grado != otro.grado:
            raise ErrorGrado(f"Grados distintos: {self.grado} y {otro.grado}")

    def __add__(self, otro: 'VectorGrafos') -> 'VectorGrafos':
        self._compatible(otro)
        resultado = VectorGrafos(self.grado, self.terminos)
        for clave, coef in otro.terminos.items():
            resultado.agregar_clave(clave, coef)
        return resultado

    def __sub__(self, otro: 'VectorGrafos') -> 'VectorGrafos':
        return self + otro * -1

    def __mul__(self, escalar) -> 'VectorGrafos':
        escalar = Fraction(escalar)
        return VectorGrafos(self.grado, {c: v * escalar for c, v in self.terminos.items()})

    __rmul__ = __mul__

    def producto(self, otro: 'VectorGrafos') -> 'VectorGrafos':
        """Producto por unión disjunta, extendido bilinealmente."""
        resultado = VectorGrafos(self.grado + otro.grado)
        for c1, v1 in self.terminos.items():
            for c2, v2 in otro.terminos.items():
                union = union_disjunta(grafo_desde_clave(c1), grafo_desde_clave(c2))
                resultado.agregar_grafo(union, v1 * v2)
        return resultado

    def __eq__(self, otro) -> bool:
        return (isinstance(otro, VectorGrafos) and self.grado == otro.grado
                and self.terminos == otro.terminos)

    def __repr__(self) -> str:
        return f"VectorGrafos(grado={self.grado}, {len(self.terminos)} términos)"

    def a_texto(self) -> str:
        """Una línea '<racional> * <clave canónica>' por término."""
        return '\n'.join(f"{formatear_racional(coef)} * {formatear_clave(clave)}"
                         for clave, coef in sorted(self.terminos.items()))


def formatear_racional(valor) -> str:
    valor = Fraction(valor)
    if valor.denominator == 1:
        return str(valor.numerator)
    return f"{valor.numerator}/{valor.denominator}"


def parsear_vector(texto: str) -> VectorGrafos:
    """Lee el formato de VectorGrafos.a_texto; también acepta un grafo suelto."""
    vector = None
    for numero, linea in enumerate(texto.splitlines(), 1):
        linea = linea.split('#', 1)[0].strip()
        if not linea:
            continue
        if '*' not in linea:
            grafo = parsear_grafo(texto)
            return VectorGrafos.desde_grafo(grafo)
        coef_texto, grafo_texto = linea.split('*', 1)
        try:
            coef = Fraction(coef_texto.strip())
        except ValueError:
            raise ErrorCalculo(f"Línea {numero}: coeficiente no válido '{coef_texto.strip()}'")
        grafo = parsear_grafo(grafo_texto.strip())
        if vector is None:
            vector = VectorGrafos(grafo.grado)
        vector.agregar_grafo(grafo, coef)
    if vector is None:
        raise ErrorCalculo("Vector de grafos vacío")
    return vector


# ---------------------------------------------------------------------------
# Relaciones IHX y saturación
# ---------------------------------------------------------------------------

def terminos_ihx(grafo: GrafoOrientado, arista: Arista) -> List[GrafoOrientado]:
    """
    Los tres pegados locales de la relación IHX en la arista u.a - v.b.

    Con p, q las otras ranuras de u y r, s las de v (en orden cíclico),
    los términos son u=(m,p,q) v=(m,r,s), u=(m,q,r) v=(m,p,s) y
    u=(m,r,p) v=(m,q,s); su suma se anula en todo sistema de pesos.
    """
    (u, a), (v, b) = arista
    if u == v:
        raise ErrorAristaLazo(f"La arista {u}.{a} {v}.{b} es un lazo")
    if grafo.companero_de((u, a)) != (v, b):
        raise ValueError(f"{u}.{a} y {v}.{b} no forman una arista")

    p, q = (u, (a + 1) % 3), (u, (a + 2) % 3)
    r, s = (v, (b + 1) % 3), (v, (b + 2) % 3)
    exteriores = (p, q, r, s)
    disposiciones = (
        {p: (u, 1), q: (u, 2), r: (v, 1), s: (v, 2)},
        {q: (u, 1), r: (u, 2), p: (v, 1), s: (v, 2)},
        {r: (u, 1), p: (u, 2), q: (v, 1), s: (v, 2)},
    )
    fijas = [e for e in grafo.aristas if e[0][0] not in (u, v) and e[1][0] not in (u, v)]

    terminos = []
    for posicion in disposiciones:
        aristas = list(fijas)
        aristas.append(((u, 0), (v, 0)))
        for x in exteriores:
            y = grafo.companero_de(x)
            if y in posicion:
                if x < y:
                    aristas.append((posicion[x], posicion[y]))
            else:
                aristas.append((posicion[x], y))
        terminos.append(GrafoOrientado(grafo.num_vertices, aristas))
    return terminos


def relacion_ihx(grafo: GrafoOrientado, arista: Arista) -> VectorGrafos:
    """Vector Γ_I − Γ_H + Γ_X con la orientación de H ya ajustada."""
    vector = VectorGrafos(grafo.grado)
    for termino in terminos_ihx(grafo, arista):
        vector.agregar_grafo(termino)
    return vector


def _fila_ihx(grafo: GrafoOrientado, arista: Arista) -> Tuple[Dict[ClaveCanonica, Fraction], List[ClaveCanonica]]:
    fila: Dict[ClaveCanonica, Fraction] = {}
    vistas = []
    for termino in terminos_ihx(grafo, arista):
        canonico = canonizar(termino)
        vistas.append(canonico.clave)
        if canonico.signo:
            fila[canonico.clave] = fila.get(canonico.clave, Fraction(0)) + canonico.signo
    return {c: v for c, v in fila.items() if v}, vistas


def _saturar_con_relaciones(semillas: Iterable[GrafoOrientado], grado: int):
    """
    Recorrido en anchura por los términos IHX.

    Se expanden también los grafos de clase nula (lazos o automorfismos
    que invierten la orientación), porque sus relaciones ligan a otros
    grafos no nulos.
    """
    pendientes = []
    visitadas = set()
    no_nulas = set()
    for grafo in semillas:
        if grafo.grado != grado:
            raise ErrorGrado(f"Semilla de grado {grafo.grado}, se esperaba {grado}")
        canonico = canonizar(grafo)
        if canonico.clave not in visitadas:
            visitadas.add(canonico.clave)
            pendientes.append(canonico.clave)

    relaciones = []
    indice = 0
    while indice < len(pendientes):
        clave = pendientes[indice]
        indice += 1
        grafo = grafo_desde_clave(clave)
        if canonizar(grafo).signo:
            no_nulas.add(clave)
        for arista in grafo.aristas_sin_lazo():
            fila, vistas = _fila_ihx(grafo, arista)
            if fila:
                relaciones.append(fila)
            for nueva in vistas:
                if nueva not in visitadas:
                    visitadas.add(nueva)
                    pendientes.append(nueva)
        if indice % 500 == 0:
            logger.debug(f"🔍 Saturación grado {grado}: {indice} grafos, {len(pendientes)} vistos")

    return sorted(no_nulas), relaciones


def saturar(semillas: Iterable[GrafoOrientado], grado: int) -> List[ClaveCanonica]:
    """Menor conjunto de claves no nulas cerrado bajo los términos IHX."""
    span, _ = _saturar_con_relaciones(semillas, grado)
    return span


# ---------------------------------------------------------------------------
# Polirruedas
# ---------------------------------------------------------------------------

def emparejamientos_perfectos(elementos: Sequence) -> Iterator[List[Tuple]]:
    if not elementos:
        yield []
        return
    primero, resto = elementos[0], elementos[1:]
    for i, otro in enumerate(resto):
        for parcial in emparejamientos_perfectos(resto[:i] + resto[i + 1:]):
            yield [(primero, otro)] + parcial


def clausura(particion: Particion) -> VectorGrafos:
    """
    Polirrueda ⟨w_λ1 ⋯ w_λj⟩: suma sobre todos los emparejamientos de
    radios de las ruedas planas, cada término con su signo canónico.
    """
    particion = validar_par(particion)
    if not particion or any(p < 2 for p in particion):
        raise ErrorParticion(f"Las partes de una polirrueda deben ser >= 2: {particion}")

    ciclo: List[Arista] = []
    radios: List[Bandera] = []
    desplazamiento = 0
    for parte in sorted(particion):
        aristas, rayos = rueda(parte, desplazamiento)
        ciclo += aristas
        radios += rayos
        desplazamiento += parte

    vector = VectorGrafos(desplazamiento // 2)
    for emparejamiento in emparejamientos_perfectos(radios):
        vector.agregar_grafo(GrafoOrientado(desplazamiento, ciclo + emparejamiento))
    return vector


# ---------------------------------------------------------------------------
# Coproducto y burbujas
# ---------------------------------------------------------------------------

TensorGrafos = Dict[Tuple[ClaveCanonica, ClaveCanonica], Fraction]


def _union(grafos: List[GrafoOrientado]) -> GrafoOrientado:
    resultado = GrafoOrientado(0, [])
    for grafo in grafos:
        resultado = union_disjunta(resultado, grafo)
    return resultado


def coproducto(vector: VectorGrafos) -> TensorGrafos:
    """Δ(Γ) = Σ γ ⊗ γ' sobre las divisiones de las componentes de Γ."""
    tensor: TensorGrafos = {}
    for clave, coef in vector.terminos.items():
        if clave == CLAVE_VACIA:
            tensor[(CLAVE_VACIA, CLAVE_VACIA)] = tensor.get((CLAVE_VACIA, CLAVE_VACIA), 0) + coef
            continue
        piezas = componentes_conexas(grafo_desde_clave(clave))
        for mascara in range(1 << len(piezas)):
            izquierda = canonizar(_union([g for i, g in enumerate(piezas) if mascara >> i & 1]))
            derecha = canonizar(_union([g for i, g in enumerate(piezas) if not mascara >> i & 1]))
            signo = izquierda.signo * derecha.signo
            if not signo:
                continue
            par = (izquierda.clave, derecha.clave)
            tensor[par] = tensor.get(par, Fraction(0)) + coef * signo
    return {par: v for par, v in tensor.items() if v}


def coproducto_terminos(vector: VectorGrafos) -> List[Tuple[VectorGrafos, VectorGrafos, Fraction]]:
    """El coproducto como lista de pares de vectores con su peso racional."""
    terminos = []
    for (izquierda, derecha), peso in sorted(coproducto(vector).items()):
        terminos.append((VectorGrafos(izquierda[0] // 2, {izquierda: Fraction(1)}),
                         VectorGrafos(derecha[0] // 2, {derecha: Fraction(1)}),
                         peso))
    return terminos


def clase_burbuja(vector: VectorGrafos) -> VectorGrafos:
    """
    Γ' = Σ_i (k_i/k) γ_1 ∪ ⋯ ∪ γ_i' ∪ ⋯ ∪ γ_m, donde γ_i' lleva una 2-rueda
    insertada en la primera arista de su forma canónica.
    """
    if vector.grado == 0:
        raise ErrorGrado("La clase burbuja necesita grado positivo")
    resultado = VectorGrafos(vector.grado + 1)
    for clave, coef in vector.terminos.items():
        grafo = grafo_desde_clave(clave)
        for vertices in vertices_por_componente(grafo):
            conjunto = set(vertices)
            arista = next(e for e in grafo.aristas_sin_lazo() if e[0][0] in conjunto)
            peso = Fraction(len(vertices) // 2, vector.grado)
            resultado.agregar_grafo(insertar_burbuja(grafo, arista), coef * peso)
    return resultado


# ---------------------------------------------------------------------------
# Nombres de clases
# ---------------------------------------------------------------------------

GENERADORES_EXTRA = {'g8b': 4, 'g10b': 5}
ALIAS_GENERADORES = {'g10a': 'theta_5', 'theta_1': 'theta'}


def grado_generador(nombre: str) -> int:
    if nombre == 'theta':
        return 1
    if nombre.startswith('theta_') and nombre[6:].isdigit() and int(nombre[6:]) >= 1:
        return int(nombre[6:])
    if nombre in GENERADORES_EXTRA:
        return GENERADORES_EXTRA[nombre]
    raise ErrorCalculo(f"Clase desconocida: '{nombre}'")


def nombre_collar(m: int) -> str:
    return 'theta' if m == 1 else f'theta_{m}'


def ordenar_clase(factores: Iterable[str]) -> Clase:
    return tuple(sorted(factores, key=lambda f: (grado_generador(f), f)))


def grado_clase(clase: Clase) -> int:
    return sum(grado_generador(f) for f in clase)


def formatear_clase(clase: Clase) -> str:
    if not clase:
        return '1'
    partes = []
    for factor in dict.fromkeys(clase):
        veces = clase.count(factor)
        partes.append(factor if veces == 1 else f"{factor}^{veces}")
    return '*'.join(partes)


def parsear_clase(texto: str) -> Clase:
    """'theta^2*theta_2' -> ('theta', 'theta', 'theta_2')."""
    factores = []
    for trozo in texto.replace(' ', '').split('*'):
        if not trozo:
            raise ErrorCalculo(f"Nombre de clase no válido: '{texto}'")
        nombre, _, potencia = trozo.partition('^')
        nombre = ALIAS_GENERADORES.get(nombre, nombre)
        if nombre.startswith('theta') and nombre[5:].isdigit():
            nombre = nombre_collar(int(nombre[5:]))
        grado_generador(nombre)
        if potencia and (not potencia.isdigit() or int(potencia) < 1):
            raise ErrorCalculo(f"Potencia no válida en '{trozo}'")
        factores += [nombre] * (int(potencia) if potencia else 1)
    return ordenar_clase(factores)


def es_union_de_collares(clase: Clase) -> bool:
    return all(f == 'theta' or f.startswith('theta_') for f in clase)


def particion_de_collares(clase: Clase) -> Particion:
    return tuple(sorted((grado_generador(f) for f in clase), reverse=True))


def clase_de_particion(particion: Particion) -> Clase:
    return ordenar_clase(nombre_collar(m) for m in particion)


def formatear_polirrueda(particion: Particion) -> str:
    """(4, 2, 2) -> '<w2^2*w4>'."""
    partes = []
    for parte in sorted(set(particion)):
        veces = particion.count(parte)
        partes.append(f"w{parte}" if veces == 1 else f"w{parte}^{veces}")
    return '<' + '*'.join(partes) + '>'


# ---------------------------------------------------------------------------
# Base de homología
# ---------------------------------------------------------------------------

# Clases residuales fijadas por su coeficiente en un cierre:
# generador -> (partición, [(clase de collares, coeficiente)], coeficiente del residuo)
DEFINICION_RESIDUOS = {
    'g8b': ((4, 4), [(('theta_2', 'theta_2'), Fraction(25, 4)), (('theta_4',), Fraction(48))],
            Fraction(24)),
    'g10b': ((10,), [(('theta_5',), Fraction(2541, 16))], Fraction(231, 2)),
}


class BaseHomologia:
    """
    Base calculada de A(∅)^k con los datos de reducción.

    span: claves no nulas del span saturado; clases: nombres de la base
    (uniones de generadores); vectores_clase: su representante.
    """

    def __init__(self, grado: int, span: List[ClaveCanonica], eliminacion: EliminacionDispersa,
                 clases: List[Clase], vectores_clase: Dict[Clase, VectorGrafos]):
        self.grado = grado
        self.span = span
        self._indice = set(span)
        self.eliminacion = eliminacion
        self.libres = [c for c in span if not eliminacion.es_pivote(c)]
        self.clases = clases
        self.vectores_clase = vectores_clase

        if len(clases) != len(self.libres):
            raise ErrorCalculo(
                f"Grado {grado}: {len(self.libres)} clases libres pero {len(clases)} clases con nombre"
            )
        posicion = {c: i for i, c in enumerate(self.libres)}
        matriz = [[Fraction(0)] * len(clases) for _ in self.libres]
        for j, clase in enumerate(clases):
            for clave, coef in self._coordenadas_libres(vectores_clase[clase]).items():
                matriz[posicion[clave]][j] += coef
        self._cambio = invertir(matriz)

    @property
    def dimension(self) -> int:
        return len(self.clases)

    @property
    def basis_keys(self) -> List[Optional[ClaveCanonica]]:
        """Clave del representante de cada clase cuando es un único grafo."""
        claves = []
        for clase in self.clases:
            terminos = self.vectores_clase[clase].terminos
            claves.append(next(iter(terminos)) if len(terminos) == 1 else None)
        return claves

    def contiene(self, clave: ClaveCanonica) -> bool:
        return clave in self._indice

    def _coordenadas_libres(self, vector: VectorGrafos) -> Dict[ClaveCanonica, Fraction]:
        coordenadas: Dict[ClaveCanonica, Fraction] = {}
        for clave, coef in vector.terminos.items():
            if clave not in self._indice:
                raise ErrorFueraDeSpan(f"La clave {formatear_clave(clave)} no está en el span")
            for libre, valor in self.eliminacion.expresar(clave).items():
                coordenadas[libre] = coordenadas.get(libre, Fraction(0)) + coef * valor
        return {c: v for c, v in coordenadas.items() if v}

    def reducir(self, vector: VectorGrafos) -> List[Fraction]:
        if vector.grado != self.grado:
            raise ErrorGrado(f"Vector de grado {vector.grado} en la base de grado {self.grado}")
        libres = self._coordenadas_libres(vector)
        fila = [libres.get(c, Fraction(0)) for c in self.libres]
        return [sum((self._cambio[i][j] * fila[j] for j in range(len(fila))), Fraction(0))
                for i in range(len(self.clases))]

    def reducir_diccionario(self, vector: VectorGrafos) -> Dict[Clase, Fraction]:
        return {c: v for c, v in zip(self.clases, self.reducir(vector)) if v}

    def vector_de_coordenadas(self, coordenadas: Dict[Clase, Fraction]) -> VectorGrafos:
        vector = VectorGrafos(self.grado)
        for clase, coef in coordenadas.items():
            vector = vector + self.vectores_clase[clase] * coef
        return vector


_BASES: Dict[int, BaseHomologia] = {}
_GENERADORES: Dict[str, VectorGrafos] = {}


def vector_generador(nombre: str) -> VectorGrafos:
    """Representante de un generador conexo (collar o clase residual)."""
    nombre = ALIAS_GENERADORES.get(nombre, nombre)
    if nombre not in _GENERADORES:
        if nombre in GENERADORES_EXTRA:
            calcular_base(GENERADORES_EXTRA[nombre])
        else:
            _GENERADORES[nombre] = VectorGrafos.desde_grafo(collar(grado_generador(nombre)))
    return _GENERADORES[nombre]


def vector_clase(clase: Clase) -> VectorGrafos:
    vector = VectorGrafos.vacio()
    for factor in clase:
        vector = vector.producto(vector_generador(factor))
    return vector


def clases_de_grado(grado: int) -> List[Clase]:
    """Uniones de collares en orden de particiones y después residuos."""
    collares = [clase_de_particion(p) for p in particiones(grado)]
    extras = [n for n, d in GENERADORES_EXTRA.items() if d <= grado]
    residuales = set()

    for extra in extras:
        for p in particiones(grado - GENERADORES_EXTRA[extra]):
            residuales.add(ordenar_clase([extra] + list(clase_de_particion(p))))
    residuales = sorted(residuales, key=lambda c: (-len(c), formatear_clase(c)))
    return collares + residuales


def _semillas(grado: int) -> List[GrafoOrientado]:
    semillas = []
    for particion in particiones_pares(2 * grado):
        semillas += [grafo_desde_clave(c) for c in clausura(particion).terminos]
    for particion in particiones(grado):
        semillas.append(_union([collar(m) for m in particion]))
    for clase in clases_de_grado(grado):
        if not es_union_de_collares(clase) and all(f in _GENERADORES or f not in GENERADORES_EXTRA
                                                   for f in clase):
            semillas += [grafo_desde_clave(c) for c in vector_clase(clase).terminos]
    return semillas


def _definir_residuo(nombre: str, eliminacion: EliminacionDispersa, span: List[ClaveCanonica],
                     grado: int) -> VectorGrafos:
    """
    Vector del generador residual a partir de su coeficiente en un cierre.
    Si algún grafo conexo del span tiene exactamente esas coordenadas, se
    toma ese grafo como representante.
    """
    particion, conocidos, coef_residuo = DEFINICION_RESIDUOS[nombre]
    objetivo = clausura(particion)
    for clase, coef in conocidos:
        objetivo = objetivo - vector_clase(clase) * coef
    objetivo = objetivo * (1 / coef_residuo)

    def coordenadas(vector):
        total: Dict[ClaveCanonica, Fraction] = {}
        for clave, coef in vector.terminos.items():
            for libre, valor in eliminacion.expresar(clave).items():
                total[libre] = total.get(libre, Fraction(0)) + coef * valor
        return {c: v for c, v in total.items() if v}

    buscado = coordenadas(objetivo)
    for clave in span:
        if len(componentes_conexas(grafo_desde_clave(clave))) != 1:
            continue
        propias = coordenadas(VectorGrafos(grado, {clave: Fraction(1)}))
        for signo in (1, -1):
            if {c: v * signo for c, v in propias.items()} == buscado:
                logger.debug(f"✅ {nombre} representado por un único grafo")
                return VectorGrafos(grado, {clave: Fraction(signo)})
    return objetivo


def calcular_base(grado: int) -> BaseHomologia:
    """
    Base de A(∅)^k: span saturado sobre los cierres de polirruedas y las
    uniones de collares, relaciones IHX reducidas y clases con nombre.
    """
    configuracion = obtener_configuracion()
    if not 1 <= grado <= configuracion['grado_maximo_base']:
        raise ErrorGrado(
            f"Grado {grado} fuera del rango soportado 1..{configuracion['grado_maximo_base']}"
        )
    if grado in _BASES:
        return _BASES[grado]
    for extra, d in GENERADORES_EXTRA.items():
        if d < grado:
            calcular_base(d)

    logger.info(f"🚀 Calculando base de homología en grado {grado}")
    span, relaciones = _saturar_con_relaciones(_semillas(grado), grado)

    preferidas = []
    for particion in particiones(grado):
        canonico = canonizar(_union([collar(m) for m in particion]))
        preferidas.append(canonico.clave)
    resto = [c for c in span if c not in set(preferidas)]
    prioridad = {c: i for i, c in enumerate(resto)}
    for i, clave in enumerate(preferidas):
        prioridad[clave] = len(resto) + i

    eliminacion = EliminacionDispersa(prioridad)
    for fila in relaciones:
        eliminacion.agregar_fila(fila)
    logger.info(f"📊 Grado {grado}: span {len(span)}, relaciones {len(relaciones)}, "
                f"rango {eliminacion.rango}")

    for nombre, d in GENERADORES_EXTRA.items():
        if d == grado:
            _GENERADORES[nombre] = _definir_residuo(nombre, eliminacion, span, grado)

    clases = clases_de_grado(grado)
    vectores = {clase: vector_clase(clase) for clase in clases}
    base = BaseHomologia(grado, span, eliminacion, clases, vectores)
    _BASES[grado] = base
    logger.info(f"✅ dim A(∅)^{grado} = {base.dimension}")
    return base


def reducir(vector: VectorGrafos, base: Optional[BaseHomologia] = None) -> List[Fraction]:
    """Coordenadas exactas de un vector en la base de su grado."""
    base = base or calcular_base(vector.grado)
    return base.reducir(vector)


@lru_cache(maxsize=None)
def matriz_polirruedas(grado: int) -> Dict[Particion, List[Fraction]]:
    """Filas de la expansión de cada polirrueda en la base."""
    base = calcular_base(grado)
    return {p: base.reducir(clausura(p)) for p in particiones_pares(2 * grado)}


def clases_extra_inversion(grado: int) -> List[Clase]:
    """Uniones de collares que no son de la forma Θ^{k−m}Θ_m."""
    extras = []
    for clase in clases_de_grado(grado):
        if not es_union_de_collares(clase):
            continue
        no_theta = [f for f in clase if f != 'theta']
        if len(no_theta) > 1:
            extras.append(clase)
    return extras


@lru_cache(maxsize=None)
def inversion_polirruedas(grado: int) -> Dict[Clase, Dict[object, Fraction]]:
    """
    Cada clase de la base en términos de polirruedas y de las clases extra
    (Θ₂² en grado 4; ΘΘ₂² y Θ₂Θ₃ en grado 5).

    Las claves del diccionario interior son particiones pares (polirruedas)
    o clases extra.
    """
    base = calcular_base(grado)
    filas = matriz_polirruedas(grado)
    extras = clases_extra_inversion(grado)
    generadores = list(filas) + extras
    matriz = [filas[p] for p in filas]
    for extra in extras:
        matriz.append([Fraction(1) if c == extra else Fraction(0) for c in base.clases])
    if len(matriz) != base.dimension:
        raise ErrorCalculo(f"Grado {grado}: la inversión no es cuadrada")
    # matriz[g][c] = coeficiente de la clase c en el generador g
    inversa = invertir([[matriz[g][c] for g in range(len(generadores))]
                        for c in range(base.dimension)])
    resultado = {}
    for c, clase in enumerate(base.clases):
        resultado[clase] = {generadores[g]: inversa[g][c]
                            for g in range(len(generadores)) if inversa[g][c]}
    return resultado


def tabla_conteo(grado_maximo: int = 10, grado_calculado: int = 0) -> List[Dict]:
    """
    p(k), p(k) − k y, hasta grado_calculado, dim A(∅)^k y su parte conexa.
    """
    filas = []
    for k in range(1, grado_maximo + 1):
        fila = {'k': k, 'p(k)': numero_particiones(k), 'p(k)-k': numero_particiones(k) - k}
        if k <= grado_calculado:
            base = calcular_base(k)
            fila['dim'] = base.dimension
            fila['dim_conexa'] = sum(1 for c in base.clases if len(c) == 1)
            fila['dim-p(k)'] = base.dimension - numero_particiones(k)
        filas.append(fila)
    return filas
