from .generador_grafos import (grafo_aleatorio, grafos_aleatorios, permutacion_aleatoria,
                               racional_aleatorio, matriz_aleatoria)
