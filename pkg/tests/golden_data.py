"""Frozen reference tables for the built-in families.

FIG2_COLUMNS maps a family key to the ordered list of its invariant
monomial types together with a witness vector m (satisfying m*B == k
mod d) and a flag marking the types fixed by the full torus group.
"""

# family -> list of (witness m, type k, in_gmax)
INVARIANT_TABLES = {
    "family1": [
        ((1, 1, 1, 1), (1, 1, 1, 1), True),
        ((1, 1, 3, 3), (1, 1, 3, 3), False),
        ((1, 2, 2, 3), (1, 2, 2, 3), False),
        ((1, 2, 3, 2), (1, 2, 3, 2), False),
        ((1, 3, 1, 3), (1, 3, 1, 3), False),
        ((1, 3, 2, 2), (1, 3, 2, 2), False),
        ((1, 3, 3, 1), (1, 3, 3, 1), False),
        ((2, 1, 2, 3), (2, 1, 2, 3), False),
        ((2, 1, 3, 2), (2, 1, 3, 2), False),
        ((2, 2, 2, 2), (2, 2, 2, 2), True),
        ((2, 2, 1, 3), (2, 2, 1, 3), False),
        ((2, 2, 3, 1), (2, 2, 3, 1), False),
        ((2, 3, 1, 2), (2, 3, 1, 2), False),
        ((2, 3, 2, 1), (2, 3, 2, 1), False),
        ((3, 1, 1, 3), (3, 1, 1, 3), False),
        ((3, 1, 2, 2), (3, 1, 2, 2), False),
        ((3, 1, 3, 1), (3, 1, 3, 1), False),
        ((3, 2, 1, 2), (3, 2, 1, 2), False),
        ((3, 2, 2, 1), (3, 2, 2, 1), False),
        ((3, 3, 1, 1), (3, 3, 1, 1), False),
        ((3, 3, 3, 3), (3, 3, 3, 3), True),
    ],
    "family2": [
        ((1, 1, 1, 1), (2, 2, 2, 2), True),
        ((1, 1, 3, 3), (2, 2, 6, 6), False),
        ((1, 2, 2, 3), (2, 4, 3, 7), False),
        ((1, 2, 3, 2), (2, 4, 7, 3), False),
        ((1, 3, 2, 2), (2, 6, 4, 4), False),
        ((2, 1, 2, 3), (4, 2, 3, 7), False),
        ((2, 1, 3, 2), (4, 2, 7, 3), False),
        ((2, 2, 2, 2), (4, 4, 4, 4), True),
        ((2, 3, 1, 2), (4, 6, 1, 5), False),
        ((2, 3, 2, 1), (4, 6, 5, 1), False),
        ((3, 1, 2, 2), (6, 2, 4, 4), False),
        ((3, 2, 1, 2), (6, 4, 1, 5), False),
        ((3, 2, 2, 1), (6, 4, 5, 1), False),
        ((3, 3, 1, 1), (6, 6, 2, 2), False),
        ((3, 3, 3, 3), (6, 6, 6, 6), True),
    ],
    "family3": [
        ((1, 1, 1, 1), (2, 2, 2, 2), True),
        ((1, 1, 3, 3), (2, 2, 6, 6), False),
        ((1, 2, 2, 3), (1, 5, 3, 7), False),
        ((1, 2, 3, 2), (1, 5, 7, 3), False),
        ((2, 1, 2, 3), (5, 1, 3, 7), False),
        ((2, 1, 3, 2), (5, 1, 7, 3), False),
        ((2, 2, 2, 2), (4, 4, 4, 4), True),
        ((2, 3, 1, 2), (3, 7, 1, 5), False),
        ((2, 3, 2, 1), (3, 7, 5, 1), False),
        ((3, 2, 1, 2), (7, 3, 1, 5), False),
        ((3, 2, 2, 1), (7, 3, 5, 1), False),
        ((3, 3, 1, 1), (6, 6, 2, 2), False),
        ((3, 3, 3, 3), (6, 6, 6, 6), True),
    ],
    "family6": [
        ((1, 1, 1, 1), (3, 3, 4, 2), True),
        ((1, 1, 2, 4), (3, 3, 8, 10), True),
        ((1, 2, 1, 4), (3, 6, 4, 11), False),
        ((1, 2, 2, 3), (3, 6, 8, 7), False),
        ((1, 3, 1, 3), (3, 9, 4, 8), False),
        ((1, 3, 2, 2), (3, 9, 8, 4), False),
        ((2, 1, 1, 4), (6, 3, 4, 11), False),
        ((2, 1, 2, 3), (6, 3, 8, 7), False),
        ((2, 2, 2, 2), (6, 6, 8, 4), True),
        ((2, 2, 1, 3), (6, 6, 4, 8), True),
        ((2, 3, 1, 2), (6, 9, 4, 5), False),
        ((2, 3, 2, 1), (6, 9, 8, 1), False),
        ((3, 1, 1, 3), (9, 3, 4, 8), False),
        ((3, 1, 2, 2), (9, 3, 8, 4), False),
        ((3, 2, 1, 2), (9, 6, 4, 5), False),
        ((3, 2, 2, 1), (9, 6, 8, 1), False),
        ((3, 3, 1, 1), (9, 9, 4, 2), True),
        ((3, 3, 2, 4), (9, 9, 8, 10), True),
    ],
    "family7": [
        ((1, 1, 1, 1), (6, 6, 8, 4), True),
        ((1, 1, 2, 4), (6, 6, 16, 20), True),
        ((1, 2, 1, 4), (3, 15, 8, 22), False),
        ((1, 2, 2, 3), (3, 15, 16, 14), False),
        ((2, 1, 1, 4), (15, 3, 8, 22), False),
        ((2, 1, 2, 3), (15, 3, 16, 14), False),
        ((2, 2, 2, 2), (12, 12, 16, 8), True),
        ((2, 2, 1, 3), (12, 12, 8, 16), True),
        ((2, 3, 1, 2), (9, 21, 8, 10), False),
        ((2, 3, 2, 1), (9, 21, 16, 2), False),
        ((3, 2, 1, 2), (21, 9, 8, 10), False),
        ((3, 2, 2, 1), (21, 9, 16, 2), False),
        ((3, 3, 1, 1), (18, 18, 8, 4), True),
        ((3, 3, 2, 4), (18, 18, 16, 20), True),
    ],
}

# summary table: family -> (d, b, PF, dimW, c)
SUMMARY_TABLE = {
    "family1": (4, (1, 1, 1, 1), 3, 18, 0),
    "family2": (8, (2, 2, 2, 2), 3, 12, 6),
    "family3": (8, (2, 2, 2, 2), 3, 10, 8),
    "family4": (28, (7, 7, 7, 7), 3, 18, 0),
    "family5": (80, (20, 20, 20, 20), 3, 16, 2),
    "family6": (12, (3, 3, 4, 2), 6, 12, 3),
    "family7": (24, (6, 6, 8, 4), 6, 8, 7),
    "family8": (12, (4, 2, 4, 2), 4, 12, 5),
    "family9": (36, (9, 12, 8, 7), 18, 0, 3),
    "family10": (108, (36, 24, 28, 20), 18, 0, 3),
}
