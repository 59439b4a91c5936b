"""
Tablas de referencia recalculadas y su exportación (texto, TSV, Excel).
"""

from .tablas_apendices import (APENDICES, generar_apendice, mostrar_apendice, bloques_a_texto,
                               bloques_a_tsv, leer_tsv, exportar_excel)

__all__ = [
    'APENDICES', 'generar_apendice', 'mostrar_apendice', 'bloques_a_texto', 'bloques_a_tsv',
    'leer_tsv', 'exportar_excel'
]
