"""Exact rational linear algebra.

Everything here is over Q with no rounding, ever.  ``RationalMatrix`` is a
dense immutable matrix with reduced row echelon form, rank, kernel and solve;
it covers boundary maps, coefficient-matrix checks and the small multiplication
matrices of graded quotients.  ``SparseEchelon`` is an incremental row-echelon
basis for the much sparser relation spaces that show up in face-ring degree
pieces; it also produces canonical coset representatives (zero in every pivot
coordinate), which is what makes quotient bases reproducible.
"""

from __future__ import annotations

import heapq
import random
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Sequence

try:  # pragma: no cover - exercised only when gmpy2 is installed
    from gmpy2 import mpq as _mpq

    def QQ(x=0, y=1):
        return _mpq(x, y)
except ImportError:  # pragma: no cover
    QQ = Fraction


def as_fraction(x) -> Fraction:
    """Coerce an int/Fraction/mpq scalar to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    return Fraction(int(x.numerator), int(x.denominator))


class RationalMatrix:
    """Dense matrix of Fractions with exact elimination.

    Instances are immutable; all operations return new matrices.  Row
    reduction runs fraction-free (integer cross-multiplication with gcd
    normalization) and only the final normalization pass introduces
    fractions, which keeps intermediate entries small.
    """

    __slots__ = ("nrows", "ncols", "rows", "_rref")

    def __init__(self, rows: Iterable[Iterable], ncols: int | None = None):
        rows = tuple(tuple(as_fraction(x) for x in row) for row in rows)
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ValueError("ragged rows")
            if ncols is not None and ncols != width:
                raise ValueError("ncols does not match row width")
            ncols = width
        elif ncols is None:
            ncols = 0
        object.__setattr__(self, "nrows", len(rows))
        object.__setattr__(self, "ncols", ncols)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "_rref", None)

    def __setattr__(self, name, value):
        raise AttributeError("RationalMatrix is immutable")

    # -- construction helpers -------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "RationalMatrix":
        return cls([[0] * ncols for _ in range(nrows)], ncols=ncols)

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence], nrows: int | None = None) -> "RationalMatrix":
        cols = [list(c) for c in cols]
        if cols:
            nrows = len(cols[0])
        elif nrows is None:
            nrows = 0
        return cls([[cols[j][i] for j in range(len(cols))] for i in range(nrows)],
                   ncols=len(cols))

    # -- basics ---------------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def entry(self, i: int, j: int) -> Fraction:
        return self.rows[i][j]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(row[j] for row in self.rows)

    def submatrix_columns(self, cols: Sequence[int]) -> "RationalMatrix":
        return RationalMatrix([[row[j] for j in cols] for row in self.rows],
                              ncols=len(cols))

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix([[self.rows[i][j] for i in range(self.nrows)]
                               for j in range(self.ncols)], ncols=self.nrows)

    def vstack(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.ncols != other.ncols:
            raise ValueError("column count mismatch")
        return RationalMatrix(self.rows + other.rows, ncols=self.ncols)

    def hstack(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.nrows != other.nrows:
            raise ValueError("row count mismatch")
        return RationalMatrix([a + b for a, b in zip(self.rows, other.rows)],
                              ncols=self.ncols + other.ncols)

    def matvec(self, v: Sequence) -> tuple[Fraction, ...]:
        v = [as_fraction(x) for x in v]
        if len(v) != self.ncols:
            raise ValueError("vector length mismatch")
        return tuple(sum((row[j] * v[j] for j in range(self.ncols)), Fraction(0))
                     for row in self.rows)

    def __mul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        ot = other.transpose().rows
        return RationalMatrix(
            [[sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in ot]
             for row in self.rows],
            ncols=other.ncols)

    def __eq__(self, other) -> bool:
        return (isinstance(other, RationalMatrix)
                and self.shape == other.shape and self.rows == other.rows)

    def __hash__(self) -> int:
        return hash((self.shape, self.rows))

    def __repr__(self) -> str:
        return f"RationalMatrix({[list(map(str, r)) for r in self.rows]})"

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for row in self.rows for x in row)

    # -- elimination ----------------------------------------------------------

    def rref(self) -> tuple["RationalMatrix", tuple[int, ...]]:
        """Reduced row echelon form and the tuple of pivot columns."""
        if self._rref is not None:
            return self._rref
        # fraction-free forward pass on integer-scaled rows
        work = []
        for row in self.rows:
            den = 1
            for x in row:
                den = den * x.denominator // gcd(den, x.denominator)
            ints = [int(x * den) for x in row]
            g = 0
            for x in ints:
                g = gcd(g, x)
            if g > 1:
                ints = [x // g for x in ints]
            work.append(ints)
        nrows, ncols = self.nrows, self.ncols
        pivots: list[int] = []
        r = 0
        for c in range(ncols):
            pr = next((i for i in range(r, nrows) if work[i][c]), None)
            if pr is None:
                continue
            work[r], work[pr] = work[pr], work[r]
            piv = work[r][c]
            for i in range(r + 1, nrows):
                x = work[i][c]
                if not x:
                    continue
                new = [piv * a - x * b for a, b in zip(work[i], work[r])]
                g = 0
                for v in new:
                    g = gcd(g, v)
                if g > 1:
                    new = [v // g for v in new]
                work[i] = new
            pivots.append(c)
            r += 1
        # normalization and back-substitution (fractions appear only here)
        frac = [[Fraction(x) for x in row] for row in work[:r]]
        for i in reversed(range(r)):
            c = pivots[i]
            piv = frac[i][c]
            frac[i] = [x / piv for x in frac[i]]
            for k in range(i):
                f = frac[k][c]
                if f:
                    frac[k] = [a - f * b for a, b in zip(frac[k], frac[i])]
        frac.extend([Fraction(0)] * ncols for _ in range(nrows - r))
        result = (RationalMatrix(frac, ncols=ncols), tuple(pivots))
        object.__setattr__(self, "_rref", result)
        return result

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel_basis(self) -> list[tuple[Fraction, ...]]:
        """Basis of the right kernel, one vector per free column."""
        reduced, pivots = self.rref()
        pivot_set = set(pivots)
        free = [j for j in range(self.ncols) if j not in pivot_set]
        basis = []
        for f in free:
            v = [Fraction(0)] * self.ncols
            v[f] = Fraction(1)
            for i, p in enumerate(pivots):
                v[p] = -reduced.rows[i][f]
            basis.append(tuple(v))
        return basis

    def nullity(self) -> int:
        return self.ncols - self.rank()

    def determinant(self) -> Fraction:
        if self.nrows != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        n = self.nrows
        work = [list(row) for row in self.rows]
        det = Fraction(1)
        for c in range(n):
            pr = next((i for i in range(c, n) if work[i][c]), None)
            if pr is None:
                return Fraction(0)
            if pr != c:
                work[c], work[pr] = work[pr], work[c]
                det = -det
            piv = work[c][c]
            det *= piv
            for i in range(c + 1, n):
                f = work[i][c] / piv
                if f:
                    work[i] = [a - f * b for a, b in zip(work[i], work[c])]
        return det

    def solve(self, b: Sequence) -> tuple[Fraction, ...] | None:
        """One solution of M x = b, or None when the system is inconsistent."""
        b = [as_fraction(x) for x in b]
        if len(b) != self.nrows:
            raise ValueError("right-hand side length mismatch")
        aug = RationalMatrix([row + (bi,) for row, bi in zip(self.rows, b)],
                             ncols=self.ncols + 1)
        reduced, pivots = aug.rref()
        if pivots and pivots[-1] == self.ncols:
            return None
        x = [Fraction(0)] * self.ncols
        for i, p in enumerate(pivots):
            x[p] = reduced.rows[i][self.ncols]
        return tuple(x)


def random_int_matrix(nrows: int, ncols: int, bound: int, seed: int) -> RationalMatrix:
    """Matrix with integer entries uniform in [-bound, bound], reproducible per seed."""
    if bound < 1:
        raise ValueError("bound must be >= 1")
    rng = random.Random(seed)
    return RationalMatrix([[rng.randint(-bound, bound) for _ in range(ncols)]
                           for _ in range(nrows)])


class SparseEchelon:
    """Incremental row-echelon basis of a subspace of Q^n, rows kept sparse.

    Rows are dicts {coordinate index: value} with the pivot (their minimal
    index) normalized to 1.  ``normal_form`` eliminates every pivot coordinate
    of a query vector in ascending order; because a pivot row only carries
    indices >= its pivot, the result is the unique coset representative
    supported on non-pivot coordinates.  The pivot set of a subspace does not
    depend on insertion order, so quotient bases derived from it are canonical.
    """

    __slots__ = ("_rows",)

    def __init__(self):
        self._rows: dict[int, dict] = {}

    @property
    def rank(self) -> int:
        return len(self._rows)

    def pivots(self) -> tuple[int, ...]:
        return tuple(sorted(self._rows))

    def copy(self) -> "SparseEchelon":
        # rows are never mutated after insertion, so sharing them is safe
        dup = SparseEchelon()
        dup._rows = dict(self._rows)
        return dup

    def normal_form(self, vec: Mapping[int, object]) -> dict:
        """Canonical representative of vec modulo the row space."""
        work = {}
        for i, c in vec.items():
            c = QQ(c) if not isinstance(c, type(QQ(0))) else c
            if c:
                work[i] = c
        heap = list(work)
        heapq.heapify(heap)
        rows = self._rows
        while heap:
            p = heapq.heappop(heap)
            c = work.get(p)
            if not c:
                work.pop(p, None)
                continue
            row = rows.get(p)
            if row is None:
                continue  # stays: leading coordinate outside the pivot set
            del work[p]
            for q, r in row.items():
                if q == p:
                    continue
                cur = work.get(q)
                if cur is None:
                    val = -c * r
                    if val:
                        work[q] = val
                        heapq.heappush(heap, q)
                else:
                    val = cur - c * r
                    if val:
                        work[q] = val
                    else:
                        del work[q]
        return work

    def insert(self, vec: Mapping[int, object]) -> int | None:
        """Add vec to the spanned subspace; returns its new pivot, or None."""
        red = self.normal_form(vec)
        if not red:
            return None
        p = min(red)
        inv = QQ(1) / red[p]
        self._rows[p] = {q: c * inv for q, c in red.items()}
        return p

    def rank_of(self, vectors: Iterable[Mapping[int, object]]) -> int:
        """Rank of a family of vectors modulo the current row space.

        Mutates self by inserting the vectors.
        """
        added = 0
        for v in vectors:
            if self.insert(v) is not None:
                added += 1
        return added


def sparse_rank(vectors: Iterable[Mapping[int, object]]) -> int:
    ech = SparseEchelon()
    return ech.rank_of(vectors)
