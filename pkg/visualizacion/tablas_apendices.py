#!/usr/bin/env python3
"""
Tablas de referencia recalculadas: expansiones de polirruedas (A),
Riemann-Roch (B), géneros χ_y (C), números de Chern (D) e invariantes
de Rozansky-Witten (E), más la tabla de conteo de dimensiones.

Cada apéndice es una lista de bloques (título, DataFrame, notas) que se
muestra como texto, TSV o se exporta a Excel.
"""

import io
import os
from fractions import Fraction
from math import lcm
from typing import Dict, List, Optional, Sequence, Tuple

import pandas as pd

from core.clases_caracteristicas import formatear_monomio, indices_chern
from core.espacios_rw import (crear_hilbert, crear_kummer, espacio_desde_nombre, invariante_b,
                              virtual_ck)
from core.generos import chi_en_chern, coeficientes_y, chi_y_hilbert, chi_y_kummer, inversion_chi
from core.homologia import (calcular_base, clases_de_grado, formatear_clase, formatear_polirrueda,
                            formatear_racional, inversion_polirruedas, matriz_polirruedas,
                            tabla_conteo)
from core.configuracion import obtener_logger
from core.errores import ErrorCalculo

logger = obtener_logger('tablas')

Bloque = Tuple[str, pd.DataFrame, List[str]]

APENDICES = ('A', 'B', 'C', 'D', 'E', 'conteo')

PRODUCTOS_POR_GRADO = {
    2: ['S^2'],
    3: ['SxS^[2]', 'SxT^[[2]]', 'S^3'],
    4: ['SxS^[3]', 'S^[2]xS^[2]', 'S^2xS^[2]', 'S^4'],
}


def formatear_combinacion(terminos: Sequence[Tuple[Fraction, str]]) -> str:
    """[(1, 'a'), (-4/5, 'b')] -> 'a - 4/5*b'."""
    texto = ''
    for coef, nombre in terminos:
        if not coef:
            continue
        signo = '-' if coef < 0 else '+'
        magnitud = abs(coef)
        cuerpo = nombre if magnitud == 1 else f"{formatear_racional(magnitud)}*{nombre}"
        texto += f" {signo} {cuerpo}" if texto else (f"-{cuerpo}" if coef < 0 else cuerpo)
    return texto or '0'


def _cadena(valor) -> str:
    if valor is None:
        return '?'
    return formatear_racional(valor)


# ---------------------------------------------------------------------------
# Apéndices
# ---------------------------------------------------------------------------

def apendice_a(grado_maximo: int = 4) -> List[Bloque]:
    """A.1: cierres de polirruedas en la base. A.2: la base en polirruedas."""
    bloques = []
    for k in range(1, grado_maximo + 1):
        base = calcular_base(k)
        nombres = [formatear_clase(c) for c in base.clases]
        filas = matriz_polirruedas(k)
        df = pd.DataFrame([[_cadena(v) for v in fila] for fila in filas.values()],
                          index=[formatear_polirrueda(p) for p in filas], columns=nombres)
        notas = [f"{formatear_polirrueda(p)} = "
                 + formatear_combinacion(list(zip(fila, nombres))) for p, fila in filas.items()]
        bloques.append((f"A.1 k={k}", df, notas))

    for k in range(1, grado_maximo + 1):
        inversion = inversion_polirruedas(k)
        generadores = []
        for expresion in inversion.values():
            for g in expresion:
                if g not in generadores:
                    generadores.append(g)
        nombre_generador = {g: formatear_polirrueda(g) if all(isinstance(p, int) for p in g)
                            else formatear_clase(g) for g in generadores}
        df = pd.DataFrame([[_cadena(expresion.get(g, Fraction(0))) for g in generadores]
                           for expresion in inversion.values()],
                          index=[formatear_clase(c) for c in inversion],
                          columns=[nombre_generador[g] for g in generadores])
        notas = [f"{formatear_clase(c)} = "
                 + formatear_combinacion([(v, nombre_generador[g]) for g, v in expresion.items()])
                 for c, expresion in inversion.items()]
        bloques.append((f"A.2 k={k}", df, notas))
    return bloques


def apendice_b(grado_maximo: int = 4) -> List[Bloque]:
    """B.1: χ^m en la base c con denominador común. B.2: inversión."""
    bloques = []
    for k in range(1, grado_maximo + 1):
        indices = indices_chern(k)
        filas = chi_en_chern(k)[:k + 1]
        denominador = lcm(*[v.denominator for fila in filas for v in fila.values()] or [1])
        df = pd.DataFrame([[str(int(fila.get(p, Fraction(0)) * denominador)) for p in indices]
                           for fila in filas],
                          index=[f"chi^{m}" for m in range(k + 1)],
                          columns=[formatear_monomio(p, 'c') for p in indices])
        bloques.append((f"B.1 k={k}", df, [f"denominador {denominador}"]))

    for k in range(1, grado_maximo + 1):
        inversion = inversion_chi(k)
        columnas = [v.replace('chi', 'chi^') if v != 's' else v for v in inversion.variables]
        for letra, coeficientes in (('c', inversion.coeficientes_c), ('s', inversion.coeficientes_s)):
            df = pd.DataFrame([[_cadena(v) for v in fila] for fila in coeficientes.values()],
                              index=[formatear_monomio(p, letra) for p in coeficientes],
                              columns=columnas)
            notas = [f"{formatear_monomio(p, letra)} = "
                     + formatear_combinacion(list(zip(fila, columnas)))
                     for p, fila in coeficientes.items()]
            bloques.append((f"B.2 k={k} base {letra}", df, notas))
    return bloques


def apendice_c(grado_maximo: int = 4) -> List[Bloque]:
    """Coeficientes de χ_y para S^[k] y T^[[k]] (T^[[1]] coincide con S)."""
    filas: Dict[str, List[str]] = {}
    for k in range(1, grado_maximo + 1):
        filas[crear_nombre('hilbert', k)] = [str(v) for v in coeficientes_y(chi_y_hilbert(k), k)]
    for k in range(2, grado_maximo + 1):
        filas[crear_nombre('kummer', k)] = [str(v) for v in coeficientes_y(chi_y_kummer(k), k)]
    ancho = 2 * grado_maximo + 1
    df = pd.DataFrame([v + [''] * (ancho - len(v)) for v in filas.values()], index=list(filas),
                      columns=[f"y^{m}" for m in range(ancho)])
    return [("C", df, [])]


def crear_nombre(familia: str, k: int) -> str:
    if familia == 'hilbert':
        return 'S' if k == 1 else f"S^[{k}]"
    return f"T^[[{k}]]"


def apendice_d(grado_maximo: int = 4) -> List[Bloque]:
    """Números de Chern s_λ de S^[k] y T^[[k]]; en grado 4, el parámetro s."""
    bloques = []
    for k in range(1, grado_maximo + 1):
        espacios = [crear_hilbert(k), crear_kummer(k)]
        indices = indices_chern(k)
        df = pd.DataFrame([[_cadena(e.s(p)) for e in espacios] for p in indices],
                          index=[formatear_monomio(p) for p in indices],
                          columns=[e.nombre for e in espacios])
        notas = [f"{e.nombre} s={_cadena(e.parametro_s)}" for e in espacios if e.parametro_s is not None]
        bloques.append((f"D k={k}", df, notas))
    return bloques


def _bloque_invariantes(titulo: str, k: int, espacios) -> Bloque:
    clases = clases_de_grado(k)
    valores = [[invariante_b(e, c) for e in espacios] for c in clases]
    df = pd.DataFrame([[_cadena(v.valor) for v in fila] for fila in valores],
                      index=[formatear_clase(c) for c in clases],
                      columns=[e.nombre for e in espacios])
    notas = [f"{formatear_clase(c)}: " + ' '.join(f"{e.nombre}={v.procedencia}"
                                                  for e, v in zip(espacios, fila))
             for c, fila in zip(clases, valores)]
    return titulo, df, notas


def apendice_e(grado_maximo: int = 4) -> List[Bloque]:
    """E.1 irreducibles, E.2 productos, E.3 variedades virtuales C_k."""
    bloques = []
    for k in range(1, grado_maximo + 1):
        bloques.append(_bloque_invariantes(f"E.1 k={k}", k, [crear_hilbert(k), crear_kummer(k)]))
    for k in range(2, grado_maximo + 1):
        espacios = [espacio_desde_nombre(n) for n in PRODUCTOS_POR_GRADO[k]]
        bloques.append(_bloque_invariantes(f"E.2 k={k}", k, espacios))
    for k in range(1, grado_maximo + 1):
        espacio = virtual_ck(k)
        clases = clases_de_grado(k)
        df = pd.DataFrame([[_cadena(invariante_b(espacio, c).valor) for c in clases]],
                          index=[espacio.nombre], columns=[formatear_clase(c) for c in clases])
        bloques.append((f"E.3 k={k}", df, []))
    return bloques


def apendice_conteo(grado_maximo: int = 10, grado_calculado: int = 4) -> List[Bloque]:
    filas = tabla_conteo(grado_maximo, grado_calculado)
    columnas = ['p(k)', 'p(k)-k', 'dim', 'dim_conexa', 'dim-p(k)']
    df = pd.DataFrame([[str(f[c]) if c in f else '' for c in columnas] for f in filas],
                      index=[f"k={f['k']}" for f in filas], columns=columnas)
    return [("Conteo", df, [])]


def generar_apendice(letra: str, grado_maximo: int = 4) -> List[Bloque]:
    constructores = {'A': apendice_a, 'B': apendice_b, 'C': apendice_c, 'D': apendice_d,
                     'E': apendice_e}
    if letra == 'conteo':
        return apendice_conteo(grado_calculado=grado_maximo)
    if letra not in constructores:
        raise ErrorCalculo(f"Apéndice desconocido: '{letra}' (válidos: {', '.join(APENDICES)})")
    logger.info(f"📊 Generando apéndice {letra}")
    return constructores[letra](grado_maximo)


# ---------------------------------------------------------------------------
# Salida
# ---------------------------------------------------------------------------

def bloques_a_texto(bloques: List[Bloque]) -> str:
    lineas = []
    for titulo, df, notas in bloques:
        lineas.append(f"== {titulo} ==")
        lineas.append('columnas: ' + ' | '.join(str(c) for c in df.columns))
        for indice, fila in df.iterrows():
            valores = ' '.join(v for v in fila.tolist() if v != '')
            lineas.append(f"{indice}: {valores}")
        lineas.extend(notas)
        lineas.append('')
    return '\n'.join(lineas)


def bloques_a_tsv(bloques: List[Bloque]) -> str:
    partes = []
    for titulo, df, _ in bloques:
        partes.append(f"# {titulo}\n" + df.to_csv(sep='\t', lineterminator='\n'))
    return '\n'.join(partes)


def leer_tsv(texto: str) -> List[Tuple[str, pd.DataFrame]]:
    """Inverso de bloques_a_tsv: títulos y DataFrames con celdas de texto."""
    bloques = []
    for trozo in texto.split('# ')[1:]:
        titulo, _, cuerpo = trozo.partition('\n')
        df = pd.read_csv(io.StringIO(cuerpo), sep='\t', index_col=0, dtype=str, keep_default_na=False)
        bloques.append((titulo, df))
    return bloques


def exportar_excel(bloques: List[Bloque], archivo: str) -> str:
    """Una hoja por bloque; usa xlsxwriter y, si falta, openpyxl."""
    directorio = os.path.dirname(archivo)
    if directorio and not os.path.exists(directorio):
        os.makedirs(directorio, exist_ok=True)
    try:
        import xlsxwriter  # noqa: F401
        motor = 'xlsxwriter'
    except ImportError:
        motor = 'openpyxl'
    with pd.ExcelWriter(archivo, engine=motor) as escritor:
        usados = set()
        for titulo, df, _ in bloques:
            hoja = ''.join(ch if ch.isalnum() or ch in ' ._=-' else '_' for ch in titulo)[:31]
            while hoja in usados:
                hoja = hoja[:29] + f"_{len(usados)}"
            usados.add(hoja)
            df.to_excel(escritor, sheet_name=hoja)
    logger.info(f"✅ Tablas guardadas en: {archivo}")
    return archivo


def mostrar_apendice(letra: str, formato: str = 'text', grado_maximo: int = 4,
                     exportar: Optional[str] = None) -> str:
    bloques = generar_apendice(letra, grado_maximo)
    if exportar:
        exportar_excel(bloques, exportar)
    if formato == 'tsv':
        return bloques_a_tsv(bloques)
    return bloques_a_texto(bloques)
