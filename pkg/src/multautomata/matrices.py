"""Dense matrices over a semiring, stored as tuples of row tuples.

Only what the automaton constructions need: products, Kronecker products,
block assembly and, over fields, exact Gaussian elimination.
"""

from __future__ import annotations

from typing import Sequence

from .semiring import Semiring

Vector = tuple
Matrix = tuple


def zeros(sr: Semiring, rows: int, cols: int) -> Matrix:
    return tuple((sr.zero,) * cols for _ in range(rows))


def identity(sr: Semiring, n: int) -> Matrix:
    return tuple(tuple(sr.one if i == j else sr.zero for j in range(n)) for i in range(n))


def unit_vector(sr: Semiring, n: int, i: int) -> Vector:
    return tuple(sr.one if j == i else sr.zero for j in range(n))


def dot(sr: Semiring, u: Sequence, v: Sequence):
    return sr.sum(sr.mul(x, y) for x, y in zip(u, v))


def vec_mat(sr: Semiring, v: Sequence, m: Matrix) -> Vector:
    cols = len(m[0]) if m else 0
    out = [sr.zero] * cols
    for x, row in zip(v, m):
        if sr.is_zero(x):
            continue
        for j, y in enumerate(row):
            out[j] = sr.add(out[j], sr.mul(x, y))
    return tuple(out)


def mat_vec(sr: Semiring, m: Matrix, v: Sequence) -> Vector:
    return tuple(dot(sr, row, v) for row in m)


def mat_mul(sr: Semiring, a: Matrix, b: Matrix) -> Matrix:
    return tuple(vec_mat(sr, row, b) if b else () for row in a)


def mat_add(sr: Semiring, a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(sr.add(x, y) for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_scale(sr: Semiring, k, a: Matrix) -> Matrix:
    return tuple(tuple(sr.mul(k, x) for x in row) for row in a)


def outer(sr: Semiring, column: Sequence, row: Sequence) -> Matrix:
    return tuple(tuple(sr.mul(x, y) for y in row) for x in column)


def transpose(m: Matrix, cols: int | None = None) -> Matrix:
    if not m:
        return tuple(() for _ in range(cols or 0))
    return tuple(zip(*m))


def kron(sr: Semiring, a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product; row/column index ``(i, j)`` maps to ``i * len(b) + j``."""
    return tuple(
        tuple(sr.mul(x, y) for x in row_a for y in row_b)
        for row_a in a
        for row_b in b
    )


def kron_vec(sr: Semiring, u: Sequence, v: Sequence) -> Vector:
    return tuple(sr.mul(x, y) for x in u for y in v)


def blocks(top_left: Matrix, top_right: Matrix, bottom_left: Matrix, bottom_right: Matrix) -> Matrix:
    """Assemble a 2x2 block matrix; the blocks must have compatible shapes."""
    top = tuple(tuple(l) + tuple(r) for l, r in zip(top_left, top_right))
    bottom = tuple(tuple(l) + tuple(r) for l, r in zip(bottom_left, bottom_right))
    return top + bottom


class Echelon:
    """Incrementally built row basis over a field.

    ``add`` inserts a vector when it is independent of those already kept;
    ``coordinates`` expresses a vector of the span in terms of the kept
    vectors (in insertion order).  Pivots are the first nonzero entry.
    """

    def __init__(self, sr: Semiring, length: int):
        self.sr = sr
        self.length = length
        self._rows: list[list] = []
        self._pivots: list[int] = []
        # _combos[i] expresses _rows[i] in terms of the inserted vectors
        self._combos: list[list] = []

    def __len__(self):
        return len(self._rows)

    def _reduce(self, v):
        sr = self.sr
        residual = list(v)
        combo = [sr.zero] * len(self._rows)
        for row, pivot, row_combo in zip(self._rows, self._pivots, self._combos):
            f = residual[pivot]
            if sr.is_zero(f):
                continue
            for j in range(pivot, self.length):
                if not sr.is_zero(row[j]):
                    residual[j] = sr.sub(residual[j], sr.mul(f, row[j]))
            for k, c in enumerate(row_combo):
                if not sr.is_zero(c):
                    combo[k] = sr.add(combo[k], sr.mul(f, c))
        return residual, combo

    def add(self, v) -> bool:
        sr = self.sr
        residual, combo = self._reduce(v)
        pivot = next((j for j, x in enumerate(residual) if not sr.is_zero(x)), None)
        if pivot is None:
            return False
        scale = sr.inv(residual[pivot])
        k = len(self._rows)
        for row_combo in self._combos:
            row_combo.append(sr.zero)
        # residual = v - sum(combo_k * basis_k), normalised by the pivot
        new_combo = [sr.mul(scale, sr.neg(c)) for c in combo] + [scale]
        assert len(new_combo) == k + 1
        self._rows.append([sr.mul(scale, x) for x in residual])
        self._pivots.append(pivot)
        self._combos.append(new_combo)
        return True

    def coordinates(self, v) -> Vector:
        residual, combo = self._reduce(v)
        if any(not self.sr.is_zero(x) for x in residual):
            raise ValueError("vector is not in the span of the basis")
        return tuple(combo)


def rank(sr: Semiring, rows: Sequence[Sequence]) -> int:
    """Rank over a field by exact elimination."""
    if not rows:
        return 0
    basis = Echelon(sr, len(rows[0]))
    for row in rows:
        basis.add(row)
    return len(basis)
