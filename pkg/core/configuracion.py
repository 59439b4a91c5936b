#!/usr/bin/env python3
"""
Configuración global del sistema y registro de mensajes.
"""

import logging
import sys
from typing import Dict

CONFIGURACION_POR_DEFECTO = {
    'grado_maximo_base': 5,       # basis(k) soportado para k <= 5
    'grado_maximo_chern': 4,      # Riemann-Roch e inversión de chi
    'orden_truncamiento_extra': 2,
    'verbose': False,
    'formato_salida': 'text',     # text | tsv
}

_configuracion_actual = dict(CONFIGURACION_POR_DEFECTO)


def configurar_sistema(**kwargs) -> Dict:
    """
    Actualiza la configuración global.

    Raises:
        ValueError: si alguna clave no existe
    """
    for clave, valor in kwargs.items():
        if clave not in CONFIGURACION_POR_DEFECTO:
            raise ValueError(f"Parámetro de configuración desconocido: {clave}")
        if clave == 'formato_salida' and valor not in ('text', 'tsv'):
            raise ValueError(f"Formato de salida no soportado: {valor}")
        _configuracion_actual[clave] = valor

    if 'verbose' in kwargs:
        nivel = logging.DEBUG if kwargs['verbose'] else logging.WARNING
        logging.getLogger('homologia_rw').setLevel(nivel)

    return obtener_configuracion()


def obtener_configuracion() -> Dict:
    return dict(_configuracion_actual)


def obtener_logger(nombre: str) -> logging.Logger:
    """Logger hijo de 'homologia_rw' que escribe en stderr."""
    raiz = logging.getLogger('homologia_rw')
    if not raiz.handlers:
        manejador = logging.StreamHandler(sys.stderr)
        manejador.setFormatter(logging.Formatter('%(message)s'))
        raiz.addHandler(manejador)
        raiz.setLevel(logging.DEBUG if _configuracion_actual['verbose'] else logging.WARNING)
        raiz.propagate = False
    return raiz.getChild(nombre)
