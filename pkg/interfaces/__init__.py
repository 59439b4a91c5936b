"""
Módulo de interfaces del sistema de homología de grafos y pesos RW.
"""

from .sistema_completo import SistemaHomologiaRW

__all__ = [
    'SistemaHomologiaRW'
]
