#!/usr/bin/env python3
"""
Jerarquía de excepciones del motor de homología de grafos.

Todas heredan de ErrorHomologiaRW para que la línea de comandos pueda
distinguir un error de cálculo (código 1) de un error de uso (código 2).
"""


class ErrorHomologiaRW(Exception):
    """Error base del sistema."""


class ErrorSintaxisGrafo(ErrorHomologiaRW, ValueError):
    """Texto de grafo mal formado o emparejamiento de banderas inválido."""


class ErrorGrado(ErrorHomologiaRW, ValueError):
    """Grado fuera del rango soportado o grados incompatibles."""


class ErrorParticion(ErrorHomologiaRW, ValueError):
    """Partición con partes impares o peso incorrecto."""


class ErrorAristaLazo(ErrorHomologiaRW, ValueError):
    """Se pidió una relación IHX sobre un lazo."""


class ErrorFueraDeSpan(ErrorHomologiaRW, KeyError):
    """Clave canónica que no pertenece al span saturado de la base."""


class ErrorCalculo(ErrorHomologiaRW, ArithmeticError):
    """Sistema singular, denominador nulo o estrategias en desacuerdo."""
