#!/usr/bin/env python3
"""
Script principal: línea de comandos de homología de grafos trivalentes y
pesos de Rozansky-Witten.

Uso:
    python scripts/homologia_rw.py <subcomando> [opciones]

Los resultados van a stdout; el progreso y los errores a stderr.
Códigos de salida: 0 correcto, 1 error de cálculo, 2 error de uso.
"""

import os
import re
import sys
from fractions import Fraction
from typing import Dict, List, Optional

# Agregar el directorio raíz al path para importar módulos
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from core.configuracion import obtener_logger
from core.errores import ErrorHomologiaRW
from interfaces.sistema_completo import SistemaHomologiaRW

logger = obtener_logger('cli')

SUBCOMANDOS = {
    'basis', 'expand-polywheel', 'reduce', 'weight', 'polywheel-solve', 'td',
    'theta-polywheel', 'chi-y', 'chi-in-chern', 'invert-chi', 'space', 'rw',
    'tables', 'cobordism-demo', 'span',
}
PATRON_FLOTANTE = re.compile(r'^[+-]?(\d+\.\d*|\.\d+|\d+(\.\d*)?[eE][+-]?\d+)$')


class ErrorUso(Exception):
    """Argumentos que no cumplen la gramática de la línea de comandos."""


def procesar_argumentos(argv: List[str]) -> Dict:
    """
    Separa flags globales, subcomando, posicionales y opciones.

    Acepta tanto '--opcion valor' como '--opcion=valor'.
    """
    args = {
        'subcomando': None,
        'posicionales': [],
        'opciones': {},
        'ayuda': False,
        'debug': False,
        'formato': 'text',
        'export': None,
    }

    i = 0
    while i < len(argv):
        arg = argv[i]

        if arg in ('--help', '-h'):
            args['ayuda'] = True
        elif arg == '--debug':
            args['debug'] = True
        elif arg == '--seed-order':
            pass  # el desempate determinista ya es el comportamiento por defecto
        elif arg.startswith('--'):
            nombre, igual, valor = arg[2:].partition('=')
            if not igual:
                if i + 1 >= len(argv):
                    raise ErrorUso(f"Falta el valor de --{nombre}")
                i += 1
                valor = argv[i]
            if nombre == 'format':
                if valor not in ('text', 'tsv'):
                    raise ErrorUso(f"Formato no soportado: '{valor}' (text o tsv)")
                args['formato'] = valor
            elif nombre == 'export':
                args['export'] = valor
            else:
                args['opciones'][nombre] = valor
        elif args['subcomando'] is None:
            if arg not in SUBCOMANDOS:
                raise ErrorUso(f"Subcomando desconocido: '{arg}'")
            args['subcomando'] = arg
        else:
            args['posicionales'].append(arg)

        i += 1

    return args


def _rechazar_flotante(valor: str, opcion: str):
    if PATRON_FLOTANTE.match(valor.strip()):
        raise ErrorUso(f"--{opcion}: no se admiten números de coma flotante ('{valor}')")


def _opcion(args: Dict, nombre: str, por_defecto: Optional[str] = None) -> str:
    valor = args['opciones'].get(nombre, por_defecto)
    if valor is None:
        raise ErrorUso(f"Falta la opción --{nombre}")
    return valor


def _entero(args: Dict, nombre: str) -> int:
    valor = _opcion(args, nombre)
    _rechazar_flotante(valor, nombre)
    if not re.fullmatch(r'\d+', valor):
        raise ErrorUso(f"--{nombre} debe ser un entero positivo: '{valor}'")
    return int(valor)


def _racionales(args: Dict, nombre: str) -> List[Fraction]:
    valores = []
    for parte in _opcion(args, nombre).split(','):
        parte = parte.strip()
        _rechazar_flotante(parte, nombre)
        if not re.fullmatch(r'[+-]?\d+(/\d+)?', parte):
            raise ErrorUso(f"--{nombre}: valor racional no válido '{parte}'")
        valores.append(Fraction(parte))
    return valores


def _particion(args: Dict) -> str:
    texto = _opcion(args, 'partition')
    for parte in texto.split(','):
        _rechazar_flotante(parte, 'partition')
    return texto


def _validar_opciones(args: Dict, permitidas: set):
    sobrantes = set(args['opciones']) - permitidas
    if sobrantes:
        raise ErrorUso(f"Opciones no reconocidas para {args['subcomando']}: "
                       + ', '.join(f'--{o}' for o in sorted(sobrantes)))


def despachar(sistema: SistemaHomologiaRW, args: Dict) -> str:
    """Ejecuta el subcomando y devuelve el texto de salida."""
    comando = args['subcomando']

    if comando == 'basis':
        _validar_opciones(args, {'degree'})
        return sistema.base(_entero(args, 'degree'))

    if comando == 'expand-polywheel':
        _validar_opciones(args, {'partition'})
        return sistema.expandir_polirrueda(_particion(args))

    if comando == 'reduce':
        _validar_opciones(args, {'degree', 'input'})
        return sistema.reducir(_entero(args, 'degree'), _opcion(args, 'input'))

    if comando == 'weight':
        if len(args['posicionales']) != 1:
            raise ErrorUso("Uso: weight su2|abeliano|no-invariante|su2-polywheel ...")
        datos = args['posicionales'][0]
        if datos == 'su2-polywheel':
            _validar_opciones(args, {'partition', 'method'})
            return sistema.peso_polirrueda(_particion(args), _opcion(args, 'method', 'closed'))
        _validar_opciones(args, {'graph', 'class'})
        if ('graph' in args['opciones']) == ('class' in args['opciones']):
            raise ErrorUso("Indique exactamente una de --graph o --class")
        return sistema.peso(datos, args['opciones'].get('graph'), args['opciones'].get('class'))

    if comando == 'polywheel-solve':
        _validar_opciones(args, {'degree', 'input'})
        return sistema.resolver_polirruedas(_entero(args, 'degree'), _opcion(args, 'input'))

    if comando == 'td':
        _validar_opciones(args, {'power', 'degree', 'basis'})
        potencia = _opcion(args, 'power')
        _rechazar_flotante(potencia, 'power')
        if potencia not in ('+1/2', '1/2', '-1/2'):
            raise ErrorUso(f"--power debe ser +1/2 o -1/2: '{potencia}'")
        base = _opcion(args, 'basis', 's')
        if base not in ('s', 'c'):
            raise ErrorUso(f"--basis debe ser s o c: '{base}'")
        return sistema.td(potencia, _entero(args, 'degree'), base)

    if comando == 'theta-polywheel':
        _validar_opciones(args, {'degree'})
        return sistema.theta_polirruedas(_entero(args, 'degree'))

    if comando == 'chi-y':
        _validar_opciones(args, {'space'})
        return sistema.chi_y(_opcion(args, 'space'))

    if comando == 'chi-in-chern':
        _validar_opciones(args, {'degree'})
        return sistema.chi_en_chern(_entero(args, 'degree'))

    if comando == 'invert-chi':
        _validar_opciones(args, {'degree', 'values'})
        return sistema.invertir_chi(_entero(args, 'degree'), _racionales(args, 'values'))

    if comando == 'space':
        _validar_opciones(args, {'name'})
        return sistema.espacio(_opcion(args, 'name'))

    if comando == 'rw':
        _validar_opciones(args, {'space', 'class'})
        return sistema.rw(_opcion(args, 'space'), _opcion(args, 'class'))

    if comando == 'tables':
        _validar_opciones(args, {'appendix', 'max-degree'})
        apendice = _opcion(args, 'appendix')
        apendice = apendice if apendice == 'conteo' else apendice.upper()
        if apendice not in ('A', 'B', 'C', 'D', 'E', 'conteo'):
            raise ErrorUso(f"Apéndice desconocido: '{apendice}' (A, B, C, D, E o conteo)")
        grado = _entero(args, 'max-degree') if 'max-degree' in args['opciones'] else 4
        return sistema.tablas(apendice, args['formato'], args['export'], grado)

    if comando == 'cobordism-demo':
        _validar_opciones(args, set())
        return sistema.cobordismo()

    if comando == 'span':
        _validar_opciones(args, {'target', 'dictionary', 'criterion'})
        criterio = _opcion(args, 'criterion', 'todo')
        if criterio not in ('todo', 'chern'):
            raise ErrorUso(f"--criterion debe ser todo o chern: '{criterio}'")
        diccionario = [n.strip() for n in _opcion(args, 'dictionary').split(',') if n.strip()]
        return sistema.span(_opcion(args, 'target'), diccionario, criterio)

    raise ErrorUso(f"Subcomando desconocido: '{comando}'")


def mostrar_ayuda():
    """Muestra la ayuda completa de la línea de comandos."""
    print("""
🧮 HOMOLOGÍA DE GRAFOS TRIVALENTES Y PESOS DE ROZANSKY-WITTEN
=============================================================

USO:
    python scripts/homologia_rw.py <subcomando> [opciones]

HOMOLOGÍA DE GRAFOS:
    basis --degree K                          Base de A(∅)^K (claves canónicas)
    expand-polywheel --partition 2,2,4        Cierre de polirrueda en la base
    reduce --degree K --input ARCHIVO         Coordenadas de un vector de grafos

PESOS:
    weight su2 --graph ARCHIVO | --class C    Peso de su(2) (también abeliano, no-invariante)
    weight su2-polywheel --partition 4,4 --method closed|recursion|contract
    polywheel-solve --degree K --input ARCHIVO

CLASES CARACTERÍSTICAS Y GÉNEROS:
    td --power +1/2|-1/2 --degree K --basis s|c
    theta-polywheel --degree K
    chi-y --space hilb:K|kummer:K
    chi-in-chern --degree K
    invert-chi --degree K --values 5,-86,785,-4556,14786

ESPACIOS E INVARIANTES:
    space --name hilb:4|kummer:3|'S^[2]xS^[2]'
    rw --space NOMBRE --class theta^2*theta_2
    span --target C2 --dictionary 'S^[2],S^2' [--criterion todo|chern]
    tables --appendix A|B|C|D|E|conteo [--max-degree K]
    cobordism-demo

OPCIONES GLOBALES:
    --format text|tsv    Formato de las tablas
    --export=ARCHIVO     Guardar las tablas en Excel
    --seed-order         Desempate determinista (por defecto)
    --debug              Mensajes de progreso detallados
    --help, -h           Mostrar esta ayuda
""")


def ejecutar(argv: List[str]) -> int:
    """Ejecuta la línea de comandos y devuelve el código de salida."""
    try:
        args = procesar_argumentos(argv)
    except ErrorUso as e:
        print(f"❌ {e}", file=sys.stderr)
        return 2

    if args['ayuda']:
        mostrar_ayuda()
        return 0
    if args['subcomando'] is None:
        print("❌ Falta el subcomando (use --help)", file=sys.stderr)
        return 2

    try:
        sistema = SistemaHomologiaRW(verbose=args['debug'], formato_salida=args['formato'])
        salida = despachar(sistema, args)
    except ErrorUso as e:
        print(f"❌ {e}", file=sys.stderr)
        return 2
    except ErrorHomologiaRW as e:
        print(f"❌ {e}", file=sys.stderr)
        if args['debug']:
            logger.exception("Traza completa")
        return 1

    print(salida)
    return 0


def main():
    sys.exit(ejecutar(sys.argv[1:]))


if __name__ == "__main__":
    main()
