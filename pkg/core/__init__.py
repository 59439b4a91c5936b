"""
Módulo core: homología de grafos trivalentes y pesos de Rozansky-Witten.
"""

from .errores import (ErrorHomologiaRW, ErrorSintaxisGrafo, ErrorGrado, ErrorParticion,
                      ErrorAristaLazo, ErrorFueraDeSpan, ErrorCalculo)
from .configuracion import configurar_sistema, obtener_configuracion, obtener_logger

# Grafos y homología
from .grafos import (GrafoOrientado, CanonicoFirmado, parsear_grafo, canonizar, formatear_clave,
                     grafo_desde_clave, theta, collar, rueda, union_disjunta,
                     componentes_conexas, insertar_burbuja)
from .homologia import (VectorGrafos, relacion_ihx, terminos_ihx, saturar, clausura, coproducto,
                        clase_burbuja, BaseHomologia, calcular_base, reducir, vector_clase,
                        clases_de_grado, parsear_clase, formatear_clase, inversion_polirruedas,
                        matriz_polirruedas, tabla_conteo)

# Pesos y clases características
from .pesos_lie import (DatosLie, su2, dato_abeliano, dato_no_invariante, peso_lie,
                        peso_lie_ingenuo, peso_vector, su2_forma_cerrada, su2_recursion,
                        su2_contraccion, producto_pesos, resolver_coordenadas_polirruedas)
from .clases_caracteristicas import (SerieTruncada, PolinomioS, VectorChern,
                                     termino_sucesion_multiplicativa, td_medio,
                                     polinomio_b_theta, potencia_theta_en_polirruedas,
                                     evaluar_polinomio_s, s_a_c, c_a_s)
from .generos import (VectorChi, polinomio_chi_m, chi_en_chern, invertir_chi, residuo_salamon,
                      chi_y_hilbert, chi_y_kummer)

# Espacios
from .espacios_rw import (Espacio, InformeInvariantes, crear_hilbert, crear_kummer, producto,
                          suma_formal, virtual_ck, espacio_desde_nombre, invariante_b,
                          informe_invariantes, expresar_en_span, distinguir_cobordismo,
                          relacion_curvatura_volumen)

__all__ = [
    'ErrorHomologiaRW', 'ErrorSintaxisGrafo', 'ErrorGrado', 'ErrorParticion', 'ErrorAristaLazo',
    'ErrorFueraDeSpan', 'ErrorCalculo',
    'configurar_sistema', 'obtener_configuracion', 'obtener_logger',
    'GrafoOrientado', 'CanonicoFirmado', 'parsear_grafo', 'canonizar', 'formatear_clave',
    'grafo_desde_clave', 'theta', 'collar', 'rueda', 'union_disjunta', 'componentes_conexas',
    'insertar_burbuja',
    'VectorGrafos', 'relacion_ihx', 'terminos_ihx', 'saturar', 'clausura', 'coproducto',
    'clase_burbuja', 'BaseHomologia', 'calcular_base', 'reducir', 'vector_clase',
    'clases_de_grado', 'parsear_clase', 'formatear_clase', 'inversion_polirruedas',
    'matriz_polirruedas', 'tabla_conteo',
    'DatosLie', 'su2', 'dato_abeliano', 'dato_no_invariante', 'peso_lie', 'peso_lie_ingenuo',
    'peso_vector', 'su2_forma_cerrada', 'su2_recursion', 'su2_contraccion', 'producto_pesos',
    'resolver_coordenadas_polirruedas',
    'SerieTruncada', 'PolinomioS', 'VectorChern', 'termino_sucesion_multiplicativa', 'td_medio',
    'polinomio_b_theta', 'potencia_theta_en_polirruedas', 'evaluar_polinomio_s', 's_a_c', 'c_a_s',
    'VectorChi', 'polinomio_chi_m', 'chi_en_chern', 'invertir_chi', 'residuo_salamon',
    'chi_y_hilbert', 'chi_y_kummer',
    'Espacio', 'InformeInvariantes', 'crear_hilbert', 'crear_kummer', 'producto', 'suma_formal',
    'virtual_ck', 'espacio_desde_nombre', 'invariante_b', 'informe_invariantes',
    'expresar_en_span', 'distinguir_cobordismo', 'relacion_curvatura_volumen',
]
