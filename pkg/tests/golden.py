"""Designs and matrices as printed in the source figures, rows = periods, 0-based labels.

FIG1C uses the vertex labels x, inf = 7, x' = 8 + x.  FIG4A and FIG4B shift the
printed 1-based vertex labels down by one.
"""

FIG1A = [
    [0, 0, 0],
    [1, 2, 4],
    [2, 4, 1],
    [3, 6, 5],
    [4, 1, 2],
    [5, 3, 6],
    [6, 5, 3],
]

FIG1B = [
    [0, 0, 0, 0, 0],
    [1, 3, 4, 5, 9],
    [2, 6, 8, 10, 7],
    [3, 9, 1, 4, 5],
    [4, 1, 5, 9, 3],
    [5, 4, 9, 3, 1],
    [6, 7, 2, 8, 10],
    [7, 10, 6, 2, 8],
    [8, 2, 10, 7, 6],
    [9, 5, 3, 1, 4],
    [10, 8, 7, 6, 2],
]

FIG1C = [
    [7, 7, 7, 7, 7, 7, 7],
    [0, 1, 2, 3, 4, 5, 6],
    [10, 11, 12, 13, 14, 8, 9],
    [3, 4, 5, 6, 0, 1, 2],
    [1, 2, 3, 4, 5, 6, 0],
    [13, 14, 8, 9, 10, 11, 12],
    [14, 8, 9, 10, 11, 12, 13],
    [9, 10, 11, 12, 13, 14, 8],
    [5, 6, 0, 1, 2, 3, 4],
    [4, 5, 6, 0, 1, 2, 3],
    [12, 13, 14, 8, 9, 10, 11],
    [6, 0, 1, 2, 3, 4, 5],
    [2, 3, 4, 5, 6, 0, 1],
    [11, 12, 13, 14, 8, 9, 14],
    [8, 9, 10, 11, 12, 13, 14],
]

FIG2 = [
    [3, 4, 5, 6, 0, 1, 2, 6, 0, 1, 2, 3, 4, 5, 5, 6, 0, 1, 2, 3, 4],
    [1, 2, 3, 4, 5, 6, 0, 2, 3, 4, 5, 6, 0, 1, 4, 5, 6, 0, 1, 2, 3],
    [0, 1, 2, 3, 4, 5, 6, 0, 1, 2, 3, 4, 5, 6, 0, 1, 2, 3, 4, 5, 6],
    [2, 3, 4, 5, 6, 0, 1, 4, 5, 6, 0, 1, 2, 3, 1, 2, 3, 4, 5, 6, 0],
    [6, 0, 1, 2, 3, 4, 5, 5, 6, 0, 1, 2, 3, 4, 3, 4, 5, 6, 0, 1, 2],
    [4, 5, 6, 0, 1, 2, 3, 1, 2, 3, 4, 5, 6, 0, 2, 3, 4, 5, 6, 0, 1],
    [5, 6, 0, 1, 2, 3, 4, 3, 4, 5, 6, 0, 1, 2, 6, 0, 1, 2, 3, 4, 5],
]

FIG3A = [
    [0, 0, 0, 0],
    [2, 4, 5, 6],
    [4, 1, 3, 5],
    [6, 5, 1, 4],
    [1, 2, 6, 3],
    [3, 6, 4, 2],
    [5, 3, 2, 1],
]

FIG3B = [
    [0, 0, 0, 0],
    [1, 2, 5, 7],
    [2, 4, 10, 1],
    [3, 6, 2, 8],
    [4, 8, 7, 2],
    [5, 10, 12, 9],
    [6, 12, 4, 3],
    [7, 1, 9, 10],
    [8, 3, 1, 4],
    [9, 5, 6, 11],
    [10, 7, 11, 5],
    [11, 9, 3, 12],
    [12, 11, 8, 6],
]

FIG3C = [
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
    [2, 3, 5, 7, 8, 9, 10, 11, 12],
    [4, 6, 10, 1, 3, 5, 7, 9, 11],
    [6, 9, 2, 8, 11, 1, 4, 7, 10],
    [8, 12, 7, 2, 6, 10, 1, 5, 9],
    [10, 2, 12, 9, 1, 6, 11, 3, 8],
    [12, 5, 4, 3, 9, 2, 8, 1, 7],
    [1, 8, 9, 10, 4, 11, 5, 12, 6],
    [3, 11, 1, 4, 12, 7, 2, 10, 5],
    [5, 1, 6, 11, 7, 3, 12, 8, 4],
    [7, 4, 11, 5, 2, 12, 9, 6, 3],
    [9, 7, 3, 12, 10, 8, 6, 4, 2],
    [11, 10, 8, 6, 5, 4, 3, 2, 1],
]

MATRIX8 = [
    [0, 0, 0, 1, 0, 1, 1, 0, 1, 1, 1, 0, 1, 0, 0],
    [1, 0, 0, 0, 1, 0, 1, 0, 0, 1, 1, 1, 0, 1, 0],
    [1, 1, 0, 0, 0, 1, 0, 0, 0, 0, 1, 1, 1, 0, 1],
    [0, 1, 1, 0, 0, 0, 1, 0, 1, 0, 0, 1, 1, 1, 0],
    [1, 0, 1, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 1, 1],
    [0, 1, 0, 1, 1, 0, 0, 0, 1, 0, 1, 0, 0, 1, 1],
    [0, 0, 1, 0, 1, 1, 0, 0, 1, 1, 0, 1, 0, 0, 1],
    [1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 1, 0, 1, 0, 0, 1, 0, 1, 1, 0, 1, 0, 0],
    [0, 0, 1, 1, 0, 1, 0, 1, 0, 0, 1, 1, 0, 1, 0],
    [0, 0, 0, 1, 1, 0, 1, 1, 0, 0, 0, 1, 1, 0, 1],
    [1, 0, 0, 0, 1, 1, 0, 1, 1, 0, 0, 0, 1, 1, 0],
    [0, 1, 0, 0, 0, 1, 1, 1, 0, 1, 0, 0, 0, 1, 1],
    [1, 0, 1, 0, 0, 0, 1, 1, 1, 0, 1, 0, 0, 0, 1],
    [1, 1, 0, 1, 0, 0, 0, 1, 1, 1, 0, 1, 0, 0, 0],
]

III32 = [
    [0, 1, 0, 1, 1, 0],
    [0, 0, 1, 0, 1, 1],
    [1, 0, 0, 1, 0, 1],
    [1, 1, 0, 0, 1, 0],
    [0, 1, 1, 0, 0, 1],
    [1, 0, 1, 1, 0, 0],
]

IIISDI = [
    [0, 1, 1, 1, 0, 0, 0, 0],
    [0, 0, 1, 0, 1, 0, 0, 1],
    [0, 0, 0, 1, 1, 1, 0, 0],
    [0, 1, 0, 0, 1, 0, 1, 0],
    [0, 0, 0, 0, 0, 1, 1, 1],
    [1, 0, 0, 1, 0, 0, 1, 0],
    [1, 1, 0, 0, 0, 0, 0, 1],
    [1, 0, 1, 0, 0, 1, 0, 0],
]

FIG4A = [
    [0, 0, 0, 4, 8, 12],
    [1, 2, 3, 7, 9, 14],
    [5, 10, 15, 15, 5, 10],
    [6, 11, 13, 14, 7, 9],
    [10, 15, 5, 2, 3, 1],
    [8, 12, 4, 3, 1, 2],
    [12, 4, 8, 11, 13, 6],
    [13, 6, 11, 9, 14, 7],
    [9, 14, 7, 13, 6, 11],
    [11, 13, 6, 12, 4, 8],
    [3, 1, 2, 8, 12, 4],
    [2, 3, 1, 10, 15, 5],
    [14, 7, 9, 6, 11, 13],
    [15, 5, 10, 5, 10, 15],
    [7, 9, 14, 1, 2, 3],
    [4, 8, 12, 0, 0, 0],
]

FIG4B = [
    [0, 0, 0, 0, 0, 10, 4, 9, 2, 5],
    [1, 3, 6, 12, 8, 8, 1, 3, 6, 12],
    [2, 5, 10, 4, 9, 14, 13, 11, 7, 15],
    [3, 6, 12, 8, 1, 12, 8, 1, 3, 6],
    [6, 12, 8, 1, 3, 13, 11, 7, 15, 14],
    [4, 9, 2, 5, 10, 15, 14, 13, 11, 7],
    [5, 10, 4, 9, 2, 9, 2, 5, 10, 4],
    [7, 15, 14, 13, 11, 11, 7, 15, 14, 13],
    [11, 7, 15, 14, 13, 7, 15, 14, 13, 11],
    [9, 2, 5, 10, 4, 5, 10, 4, 9, 2],
    [15, 14, 13, 11, 7, 4, 9, 2, 5, 10],
    [13, 11, 7, 15, 14, 6, 12, 8, 1, 3],
    [12, 8, 1, 3, 6, 3, 6, 12, 8, 1],
    [14, 13, 11, 7, 15, 2, 5, 10, 4, 9],
    [8, 1, 3, 6, 12, 1, 3, 6, 12, 8],
    [10, 4, 9, 2, 5, 0, 0, 0, 0, 0],
]
