"""Exact linear algebra for the probes and the intertwiner search.

Two engines:

* ``Echelon``: incremental reduced row echelon form over a field (used with
  ``QuadRat`` entries at specialized points).  Rows are sparse dicts.
* ``fraction_free_rref``: Gauss-Jordan elimination over the integral domain
  of ``Scalar`` values with Bareiss-style exact division, so no rational
  functions in (q, a) ever appear.
"""

from __future__ import annotations

from .scalar import ONE, ZERO, QuadRat, Scalar


class Echelon:
    """Fully reduced row echelon basis of a subspace of K^n (K a field).

    Vectors are dicts ``column -> value`` with nonzero values.  ``order``
    decides which column becomes the pivot of a new row: the smallest under
    ``key`` (first-nonzero pivoting).
    """

    def __init__(self, key=None):
        self.rows = {}
        self._key = key

    def __len__(self):
        return len(self.rows)

    def _pick(self, vec):
        return min(vec, key=self._key) if self._key else min(vec)

    def reduce(self, vec: dict) -> dict:
        vec = {k: v for k, v in vec.items() if v}
        for col in [c for c in vec if c in self.rows]:
            c = vec.get(col)
            if not c:
                continue
            for k, v in self.rows[col].items():
                nv = vec.get(k, 0) - c * v
                if nv:
                    vec[k] = nv
                else:
                    vec.pop(k, None)
        return vec

    def insert(self, vec: dict) -> bool:
        """Add ``vec`` to the span; return True if the dimension grew."""
        rem = self.reduce(vec)
        if not rem:
            return False
        col = self._pick(rem)
        inv = 1 / rem[col] if not isinstance(rem[col], QuadRat) else rem[col].inverse()
        row = {k: v * inv for k, v in rem.items()}
        for other in self.rows.values():
            c = other.get(col)
            if c:
                for k, v in row.items():
                    nv = other.get(k, 0) - c * v
                    if nv:
                        other[k] = nv
                    else:
                        other.pop(k, None)
        self.rows[col] = row
        return True

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)

    def nullspace(self, ncols: int) -> list:
        """Basis of ``{x : row . x = 0 for every row}`` as dense lists."""
        out = []
        for f in range(ncols):
            if f in self.rows:
                continue
            x = [QuadRat(0)] * ncols
            x[f] = QuadRat(1)
            for p, row in self.rows.items():
                c = row.get(f)
                if c:
                    x[p] = -c
            out.append(x)
        return out


def fraction_free_rref(matrix):
    """Fraction-free Gauss-Jordan elimination over ``Scalar``.

    Returns ``(rows, pivots)`` where ``rows`` are the nonzero reduced rows
    and ``pivots`` their pivot columns.  Every pivot entry equals the same
    scalar ``d`` and pivot columns are zero in all other rows, so
    ``d * x_free`` / ``-row[free]`` gives a ring-valued nullspace basis.
    """
    rows = [list(r) for r in matrix if any(r)]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots = []
    prev = ONE
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][col]
        prow = rows[r]
        for i in range(len(rows)):
            if i == r:
                continue
            row = rows[i]
            c = row[col]
            new = []
            for j in range(ncols):
                v = p * row[j]
                if c and prow[j]:
                    v = v - c * prow[j]
                new.append(v.exact_div(prev) if v else ZERO)
            rows[i] = new
        prev = p
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(matrix) -> int:
    return len(fraction_free_rref(matrix)[1])


def nullspace(matrix, ncols: int | None = None) -> list:
    """Ring-valued nullspace basis of a Scalar matrix (list of rows)."""
    if ncols is None:
        ncols = len(matrix[0]) if matrix else 0
    rows, pivots = fraction_free_rref(matrix)
    if not pivots:
        return [[ONE if j == f else ZERO for j in range(ncols)] for f in range(ncols)]
    d = rows[-1][pivots[-1]]
    out = []
    for f in range(ncols):
        if f in pivots:
            continue
        x = [ZERO] * ncols
        x[f] = d
        for row, p in zip(rows, pivots):
            x[p] = -row[f]
        out.append(x)
    return out

