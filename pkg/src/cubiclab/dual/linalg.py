"""Exact Gaussian elimination over GF(p) on integer rows.

Elimination always takes the leftmost pivot column and, within it, the first
row with a nonzero entry, so every result is a deterministic function of the
input rows' span.
"""

from collections.abc import Sequence

from cubiclab.field import inv_mod

Row = tuple[int, ...]


def normalize_vector(vector: Sequence[int], p: int) -> Row:
    """Scale a vector so its first nonzero entry is 1 (zero vectors are returned reduced)."""
    reduced = [v % p for v in vector]
    lead = next((v for v in reduced if v), 0)
    if lead == 0:
        return tuple(reduced)
    scale = inv_mod(lead, p)
    return tuple(v * scale % p for v in reduced)


def dot(u: Sequence[int], v: Sequence[int], p: int) -> int:
    return sum(a * b for a, b in zip(u, v, strict=True)) % p


def rref(rows: Sequence[Sequence[int]], p: int) -> tuple[list[Row], list[int]]:
    """Reduced row echelon form.

    Args:
        rows: Matrix rows (any integers; reduced modulo p)
        p: Prime modulus

    Returns:
        (nonzero rows of the reduced form, pivot column of each row)
    """
    matrix = [[v % p for v in row] for row in rows]
    if not matrix:
        return [], []
    ncols = len(matrix[0])

    pivots: list[int] = []
    filled = 0
    for col in range(ncols):
        pivot_row = next((r for r in range(filled, len(matrix)) if matrix[r][col]), None)
        if pivot_row is None:
            continue
        matrix[filled], matrix[pivot_row] = matrix[pivot_row], matrix[filled]

        scale = inv_mod(matrix[filled][col], p)
        matrix[filled] = [v * scale % p for v in matrix[filled]]
        for r in range(len(matrix)):
            if r != filled and matrix[r][col]:
                factor = matrix[r][col]
                matrix[r] = [(a - factor * b) % p for a, b in zip(matrix[r], matrix[filled])]

        pivots.append(col)
        filled += 1
        if filled == len(matrix):
            break

    return [tuple(row) for row in matrix[:filled]], pivots


def rank(rows: Sequence[Sequence[int]], p: int) -> int:
    return len(rref(rows, p)[1])


def nullspace(rows: Sequence[Sequence[int]], ncols: int, p: int) -> list[Row]:
    """Canonical basis (itself in reduced echelon form) of {v : rows . v = 0}.

    Args:
        rows: Matrix rows of length ncols
        ncols: Number of columns
        p: Prime modulus

    Returns:
        Basis vectors of the right nullspace
    """
    reduced, pivots = rref(rows, p)
    pivot_set = set(pivots)

    basis = []
    for free in (c for c in range(ncols) if c not in pivot_set):
        vector = [0] * ncols
        vector[free] = 1
        for row, pivot in zip(reduced, pivots, strict=True):
            vector[pivot] = -row[free] % p
        basis.append(vector)

    return rref(basis, p)[0]
