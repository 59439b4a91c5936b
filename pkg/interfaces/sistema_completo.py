#!/usr/bin/env python3
"""
Sistema completo de homología de grafos y pesos de Rozansky-Witten.

Integra:
- Bases de homología, reducción y expansión de polirruedas
- Pesos de álgebras de Lie (su(2)) y resolución en polirruedas
- Clases características, géneros χ_y e inversión de Riemann-Roch
- Espacios hiperkähler, invariantes b_Γ y tablas de referencia

Cada operación devuelve el texto que la línea de comandos escribe en
stdout; el progreso va al registro (stderr).
"""

import os
from fractions import Fraction
from typing import Dict, List, Optional

from core.clases_caracteristicas import (formatear_monomio, potencia_theta_en_polirruedas,
                                         td_medio)
from core.configuracion import configurar_sistema, obtener_configuracion, obtener_logger
from core.errores import ErrorCalculo
from core.espacios_rw import (distinguir_cobordismo, espacio_desde_nombre, expresar_en_span,
                              informe_invariantes, invariante_b)
from core.generos import (VectorChi, chi_en_chern, chi_y_hilbert, chi_y_kummer, coeficientes_y,
                          invertir_chi, residuo_salamon)
from core.grafos import formatear_clave, parsear_grafo
from core.homologia import (calcular_base, clausura, formatear_clase, formatear_polirrueda,
                            formatear_racional, parsear_clase, parsear_vector, vector_clase)
from core.particiones import duplicar, parsear_particion
from core.pesos_lie import (dato_abeliano, dato_no_invariante, peso_lie, peso_vector,
                            resolver_coordenadas_polirruedas, su2, su2_contraccion,
                            su2_forma_cerrada, su2_recursion)
from visualizacion.tablas_apendices import formatear_combinacion, mostrar_apendice

logger = obtener_logger('sistema')

DATOS_LIE = {'su2': su2, 'abeliano': dato_abeliano, 'no-invariante': dato_no_invariante}
METODOS_SU2 = {'closed': su2_forma_cerrada, 'recursion': su2_recursion, 'contract': su2_contraccion}


def leer_archivo(ruta: str) -> str:
    if not os.path.exists(ruta):
        raise ErrorCalculo(f"El archivo '{ruta}' no existe")
    with open(ruta, encoding='utf-8') as archivo:
        return archivo.read()


def _espacio_de_familia(texto: str):
    """'hilb:k' / 'kummer:k' -> (familia, k)."""
    familia, _, grado = texto.partition(':')
    if familia not in ('hilb', 'kummer') or not grado.isdigit():
        raise ErrorCalculo(f"Espacio no válido para χ_y: '{texto}' (use hilb:k o kummer:k)")
    return familia, int(grado)


def _formatear_afin(constante: Fraction, pendiente: Fraction) -> str:
    """constante + pendiente·s, p. ej. '-30 + 1/4*s'."""
    if not pendiente:
        return formatear_racional(constante)
    if not constante:
        return formatear_combinacion([(pendiente, 's')])
    signo = '-' if pendiente < 0 else '+'
    return f"{formatear_racional(constante)} {signo} {formatear_combinacion([(abs(pendiente), 's')])}"


class SistemaHomologiaRW:
    """
    Fachada de todas las operaciones; guarda la configuración activa y
    delega en los módulos de core.
    """

    def __init__(self, **configuracion):
        self.config = configurar_sistema(**configuracion) if configuracion else obtener_configuracion()

    def configurar_sistema(self, **kwargs) -> Dict:
        self.config = configurar_sistema(**kwargs)
        return self.config

    # -- homología ---------------------------------------------------------

    def base(self, grado: int) -> str:
        base = calcular_base(grado)
        lineas = []
        for clase, clave in zip(base.clases, base.basis_keys):
            nombre = formatear_clase(clase)
            if clave is None:
                terminos = len(base.vectores_clase[clase].terminos)
                lineas.append(f"# {nombre}: combinación de {terminos} grafos")
            else:
                lineas.append(f"{formatear_clave(clave)}  # {nombre}")
        logger.info(f"✅ dim A(∅)^{grado} = {base.dimension}")
        return '\n'.join(lineas)

    def expandir_polirrueda(self, particion_texto: str) -> str:
        particion = parsear_particion(particion_texto)
        vector = clausura(particion)
        coordenadas = calcular_base(vector.grado).reducir_diccionario(vector)
        return (f"{formatear_polirrueda(particion)} = "
                + formatear_combinacion([(v, formatear_clase(c)) for c, v in coordenadas.items()]))

    def reducir(self, grado: int, ruta: str) -> str:
        vector = parsear_vector(leer_archivo(ruta))
        if vector.grado != grado:
            raise ErrorCalculo(f"El vector tiene grado {vector.grado}, no {grado}")
        coordenadas = calcular_base(grado).reducir_diccionario(vector)
        return formatear_combinacion([(v, formatear_clase(c)) for c, v in coordenadas.items()])

    # -- pesos -------------------------------------------------------------

    def peso(self, datos: str = 'su2', ruta_grafo: Optional[str] = None,
             clase: Optional[str] = None) -> str:
        if datos not in DATOS_LIE:
            raise ErrorCalculo(f"Datos de Lie desconocidos: '{datos}'")
        dato = DATOS_LIE[datos]()
        if ruta_grafo:
            return formatear_racional(peso_lie(parsear_grafo(leer_archivo(ruta_grafo)), dato))
        if clase:
            return formatear_racional(peso_vector(vector_clase(parsear_clase(clase)), dato))
        raise ErrorCalculo("Indique --graph o --class")

    def peso_polirrueda(self, particion_texto: str, metodo: str = 'closed') -> str:
        if metodo not in METODOS_SU2:
            raise ErrorCalculo(f"Método desconocido: '{metodo}' (closed, recursion, contract)")
        return formatear_racional(METODOS_SU2[metodo](parsear_particion(particion_texto)))

    def resolver_polirruedas(self, grado: int, ruta: str) -> str:
        vector = parsear_vector(leer_archivo(ruta))
        resultado = resolver_coordenadas_polirruedas(vector, grado)
        if not resultado.solucion.factible:
            return "sin solución"
        texto = formatear_combinacion([(v, formatear_polirrueda(duplicar(p)))
                                       for p, v in resultado.coeficientes.items()])
        if resultado.indeterminado:
            texto += f"  # indeterminado: núcleo de dimensión {len(resultado.solucion.nucleo)}"
        return f"{texto}  # método {resultado.metodo}"

    # -- clases características y géneros ------------------------------------

    def td(self, potencia: str, grado: int, base: str = 's') -> str:
        if potencia not in ('+1/2', '1/2', '-1/2'):
            raise ErrorCalculo(f"Potencia no soportada: '{potencia}' (+1/2 o -1/2)")
        polinomio = td_medio(grado, Fraction(potencia.lstrip('+')))
        if base == 's':
            terminos = polinomio.terminos
        elif base == 'c':
            terminos = polinomio.en_base_c()
        else:
            raise ErrorCalculo(f"Base desconocida: '{base}' (s o c)")
        return formatear_combinacion([(v, formatear_monomio(p, base)) for p, v in sorted(terminos.items())])

    def theta_polirruedas(self, grado: int) -> str:
        coeficientes = potencia_theta_en_polirruedas(grado)
        nombre = 'theta' if grado == 1 else f"theta^{grado}"
        return f"{nombre} = " + formatear_combinacion(
            [(v, formatear_polirrueda(duplicar(p))) for p, v in coeficientes.items()])

    def chi_y(self, espacio: str) -> str:
        familia, grado = _espacio_de_familia(espacio)
        polinomio = chi_y_hilbert(grado) if familia == 'hilb' else chi_y_kummer(grado)
        valores = coeficientes_y(polinomio, grado)
        logger.info(f"🔍 Residuo de Salamon: {residuo_salamon(VectorChi(grado, valores))}")
        return ' '.join(str(v) for v in valores)

    def chi_en_chern(self, grado: int) -> str:
        lineas = []
        for m, fila in enumerate(chi_en_chern(grado)):
            terminos = [(v, formatear_monomio(p, 'c')) for p, v in fila.items()]
            lineas.append(f"chi^{m} = {formatear_combinacion(terminos)}")
        return '\n'.join(lineas)

    def invertir_chi(self, grado: int, valores: List[Fraction]) -> str:
        if len(valores) == grado + 1:
            chi = VectorChi.simetrico(grado, valores)
        else:
            chi = VectorChi(grado, valores)
        familia = invertir_chi(grado, chi)
        lineas = []
        for letra, base, direccion in (('s', familia.base_s, familia.direccion_s),
                                       ('c', familia.base_c, familia.direccion_c)):
            for particion, valor in base.items():
                pendiente = direccion[particion] if direccion is not None else 0
                lineas.append(f"{formatear_monomio(particion, letra)} = {_formatear_afin(valor, pendiente)}")
        return '\n'.join(lineas)

    # -- espacios ------------------------------------------------------------

    def espacio(self, nombre: str) -> str:
        espacio = espacio_desde_nombre(nombre)
        lineas = [f"nombre: {espacio.nombre}", f"grado: {espacio.grado}", f"tipo: {espacio.tipo}"]
        if espacio.chi is not None:
            lineas.append('chi_y: ' + ' '.join(formatear_racional(v) for v in espacio.chi.valores))
        if espacio.parametro_s is not None:
            lineas.append(f"s: {formatear_racional(espacio.parametro_s)}")
        if espacio.chern is not None:
            for particion, valor in espacio.chern.valores_s.items():
                lineas.append(f"{formatear_monomio(particion)}: {formatear_racional(valor)}")
            for particion, valor in espacio.chern.valores_c.items():
                lineas.append(f"{formatear_monomio(particion, 'c')}: {formatear_racional(valor)}")
        for clase, valor, procedencia in informe_invariantes(espacio).filas():
            texto = '?' if valor is None else formatear_racional(valor)
            lineas.append(f"b[{clase}]: {texto}  # {procedencia}")
        return '\n'.join(lineas)

    def rw(self, nombre_espacio: str, clase: str) -> str:
        valor = invariante_b(espacio_desde_nombre(nombre_espacio), parsear_clase(clase))
        logger.info(f"🔍 procedencia: {valor.procedencia}")
        return formatear_racional(valor.valor)

    def span(self, objetivo: str, diccionario: List[str], criterio: str = 'todo') -> str:
        resultado = expresar_en_span(espacio_desde_nombre(objetivo),
                                     [espacio_desde_nombre(n) for n in diccionario], criterio)
        return resultado.a_texto()

    def tablas(self, apendice: str, formato: Optional[str] = None, exportar: Optional[str] = None,
               grado_maximo: int = 4) -> str:
        formato = formato or self.config['formato_salida']
        return mostrar_apendice(apendice, formato, grado_maximo, exportar)

    def cobordismo(self) -> str:
        return distinguir_cobordismo().a_texto()
