#!/usr/bin/env python3
"""
Ejemplo completo del sistema de homología de grafos y pesos de
Rozansky-Witten. Recorre las operaciones principales de la fachada.
"""

import sys
import os
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from interfaces.sistema_completo import SistemaHomologiaRW


def ejemplo_homologia(sistema: SistemaHomologiaRW):
    """Bases de grado bajo y expansión de polirruedas."""
    print("🧮 EJEMPLO: Homología de grafos")
    print("=" * 50)
    for k in (1, 2, 3):
        print(f"\nBase de grado {k}:")
        print(sistema.base(k))
    for particion in ('4', '2,2', '4,4'):
        print(sistema.expandir_polirrueda(particion))


def ejemplo_pesos(sistema: SistemaHomologiaRW):
    """Pesos de su(2) de clases y polirruedas por los tres métodos."""
    print("\n⚖️  EJEMPLO: Pesos de su(2)")
    print("=" * 50)
    for clase in ('theta', 'theta_2', 'theta^2*theta_2', 'g8b'):
        print(f"c_{clase}(su2) = {sistema.peso('su2', clase=clase)}")
    for metodo in ('closed', 'recursion', 'contract'):
        print(f"<w4^2> por {metodo}: {sistema.peso_polirrueda('4,4', metodo)}")
    print(sistema.theta_polirruedas(3))


def ejemplo_generos(sistema: SistemaHomologiaRW):
    """χ_y de esquemas de Hilbert y Kummer e inversión de Riemann-Roch."""
    print("\n📐 EJEMPLO: Géneros χ_y")
    print("=" * 50)
    for espacio in ('hilb:2', 'kummer:3'):
        print(f"χ_y({espacio}): {sistema.chi_y(espacio)}")
    print("\nNúmeros de Chern de S^[2] a partir de χ:")
    print(sistema.invertir_chi(2, [3, -42, 234]))
    print("\nTd^{1/2} en grado 2:")
    print(sistema.td('+1/2', 2, 's'))


def ejemplo_espacios(sistema: SistemaHomologiaRW):
    """Invariantes de espacios concretos, combinaciones y cobordismo."""
    print("\n🌐 EJEMPLO: Invariantes de Rozansky-Witten")
    print("=" * 50)
    print(sistema.espacio('hilb:2'))
    print(f"\nb_Θ³(S x S^[2]) = {sistema.rw('SxS^[2]', 'theta^3')}")
    print(sistema.span('C2', ['S^[2]', 'S^2']))
    print("\nNúmeros de Chern frente a b_{Θ₂²}:")
    print(sistema.cobordismo())


def main():
    sistema = SistemaHomologiaRW(verbose=False)
    ejemplo_homologia(sistema)
    ejemplo_pesos(sistema)
    ejemplo_generos(sistema)
    ejemplo_espacios(sistema)

    os.makedirs('ejemplos/resultados', exist_ok=True)
    sistema.tablas('C', exportar='ejemplos/resultados/apendice_c.xlsx', grado_maximo=4)
    print("\n✅ Ejemplo completado; tabla C guardada en ejemplos/resultados/apendice_c.xlsx")


if __name__ == "__main__":
    main()
