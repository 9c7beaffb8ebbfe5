"""Stanley-Reisner rings over Q: l.s.o.p. handling, Artinian reductions,
Hilbert functions, socles, and Macaulay pseudopower arithmetic.

Generators x_i carry degree 2, so the degree-2j piece of the face ring is
spanned by the monomials with exponent sum j whose support is a face.
Quotient bases are the non-pivot monomials of the row-reduced relation space
under the (descending) lexicographic monomial order, which makes every
reported basis and matrix reproducible.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, gcd
from typing import Iterable, Sequence

from .complexes import SimplicialComplex, complex_hash, h_vector, star
from .homology import is_homology_ball
from .linalg import RationalMatrix, SparseEchelon, as_fraction

Monomial = tuple[int, ...]  # exponent vector over vertices 1..m


class LsopSearchError(RuntimeError):
    """Raised when rejection sampling exhausts its budget."""


class SpanError(RuntimeError):
    """Raised when face monomials fail to span a quotient piece."""


# -- graded pieces of the face ring ---------------------------------------------


def _compositions(total: int, parts: int):
    """Compositions of `total` into `parts` positive summands."""
    for cuts in itertools.combinations(range(1, total), parts - 1):
        prev = 0
        out = []
        for c in cuts + (total,):
            out.append(c - prev)
            prev = c
        yield tuple(out)


@lru_cache(maxsize=None)
def graded_basis(complex: SimplicialComplex, j: int) -> tuple[Monomial, ...]:
    """Monomials of degree 2j with support in the complex, lex-descending."""
    if j < 0:
        raise ValueError("degree index must be >= 0")
    m = complex.m
    if j == 0:
        return ((0,) * m,)
    out = []
    max_support = min(j, complex.dim + 1)
    for s in range(1, max_support + 1):
        for face in complex.faces(s - 1):
            for parts in _compositions(j, s):
                exps = [0] * m
                for v, e in zip(face, parts):
                    exps[v - 1] = e
                out.append(tuple(exps))
    out.sort(reverse=True)
    return tuple(out)


def _support(mon: Monomial) -> frozenset[int]:
    return frozenset(v + 1 for v, e in enumerate(mon) if e)


def squarefree_monomial(face: Sequence[int], m: int) -> Monomial:
    exps = [0] * m
    for v in face:
        exps[v - 1] = 1
    return tuple(exps)


# -- linear systems of parameters ------------------------------------------------


def _check_shape(complex: SimplicialComplex, lam: RationalMatrix) -> None:
    d = complex.dim + 1
    if lam.shape != (d, complex.m):
        raise ValueError(
            f"coefficient matrix must be {d} x {complex.m}, got {lam.shape[0]} x {lam.shape[1]}")


def is_lsop(complex: SimplicialComplex, lam: RationalMatrix) -> bool:
    """Rank criterion: the columns of every facet must be independent."""
    _check_shape(complex, lam)
    for facet in complex.facets:
        cols = sorted(v - 1 for v in facet)
        if lam.submatrix_columns(cols).rank() != len(cols):
            return False
    return True


def is_integral_characteristic(complex: SimplicialComplex, lam: RationalMatrix) -> bool:
    """Integer entries and determinant +-1 on every top-dimensional face."""
    _check_shape(complex, lam)
    if not lam.is_integral():
        return False
    d = complex.dim + 1
    for face in complex.faces(d - 1):
        minor = lam.submatrix_columns([v - 1 for v in face])
        if abs(minor.determinant()) != 1:
            return False
    return True


def facet_minor_table(complex: SimplicialComplex, lam: RationalMatrix) -> dict[tuple[int, ...], Fraction]:
    """|det| of the coefficient minor on each top-dimensional face."""
    _check_shape(complex, lam)
    d = complex.dim + 1
    return {face: abs(lam.submatrix_columns([v - 1 for v in face]).determinant())
            for face in complex.faces(d - 1)}


def lattice_index(complex: SimplicialComplex, lam: RationalMatrix) -> int:
    """gcd of the facet minors of an integral matrix: the cokernel order."""
    minors = facet_minor_table(complex, lam)
    g = 0
    for v in minors.values():
        if v.denominator != 1:
            raise ValueError("matrix is not integral")
        g = gcd(g, int(v))
    return g


@dataclass(frozen=True)
class LsopSample:
    """A sampled l.s.o.p. coefficient matrix plus its provenance."""
    matrix: RationalMatrix
    seed: int
    bound: int
    tries: int


def random_lsop(complex: SimplicialComplex, bound: int, seed: int,
                max_tries: int = 200) -> LsopSample:
    """Rejection-sample integer matrices until the rank criterion holds."""
    if bound < 1:
        raise ValueError("bound must be >= 1")
    if max_tries < 1:
        raise LsopSearchError("max_tries exhausted before sampling")
    d = complex.dim + 1
    rng = random.Random(seed)
    for t in range(1, max_tries + 1):
        lam = RationalMatrix([[rng.randint(-bound, bound) for _ in range(complex.m)]
                              for _ in range(d)])
        if is_lsop(complex, lam):
            return LsopSample(lam, seed, bound, t)
    raise LsopSearchError(
        f"no l.s.o.p. within {max_tries} tries (bound {bound} may be too small)")


# -- Artinian reduction ----------------------------------------------------------


class _DegreePiece:
    __slots__ = ("monomials", "index", "echelon", "quotient_positions",
                 "quotient_monomials")

    def __init__(self, monomials, index, echelon, quotient_positions):
        self.monomials = monomials
        self.index = index
        self.echelon = echelon
        self.quotient_positions = quotient_positions
        self.quotient_monomials = tuple(monomials[p] for p in quotient_positions)

    @property
    def dim(self) -> int:
        return len(self.quotient_positions)


class ArtinianReduction:
    """Degreewise data of Q[complex]/Theta for a fixed l.s.o.p. matrix.

    Degree pieces are built lazily: piece(j) holds the lex-ordered monomial
    basis of the face ring in degree 2j, the echelon of the relation space
    Theta * (degree 2j-2 piece), and the induced quotient basis.
    """

    def __init__(self, complex: SimplicialComplex, lam: RationalMatrix,
                 check: bool = True):
        if check and not is_lsop(complex, lam):
            raise ValueError("matrix is not an l.s.o.p. for this complex")
        self.complex = complex
        self.lam = lam
        self.d = complex.dim + 1
        self._pieces: dict[int, _DegreePiece] = {}
        self._theta_rows = [
            [(v, lam.entry(t, v - 1)) for v in range(1, complex.m + 1)
             if lam.entry(t, v - 1)]
            for t in range(self.d)]

    def piece(self, j: int) -> _DegreePiece:
        got = self._pieces.get(j)
        if got is not None:
            return got
        monomials = graded_basis(self.complex, j)
        index = {mon: i for i, mon in enumerate(monomials)}
        echelon = SparseEchelon()
        if j >= 1:
            prev = self.piece(j - 1)
            for mon in prev.monomials:
                for row in self._theta_rows:
                    vec = {}
                    for v, coeff in row:
                        shifted = mon[:v - 1] + (mon[v - 1] + 1,) + mon[v:]
                        pos = index.get(shifted)
                        if pos is not None:
                            vec[pos] = coeff
                    if vec:
                        echelon.insert(vec)
        pivots = set(echelon.pivots())
        quotient_positions = tuple(p for p in range(len(monomials))
                                   if p not in pivots)
        piece = _DegreePiece(monomials, index, echelon, quotient_positions)
        self._pieces[j] = piece
        return piece

    def quotient_dim(self, j: int) -> int:
        return self.piece(j).dim

    def quotient_basis(self, j: int) -> tuple[Monomial, ...]:
        return self.piece(j).quotient_monomials

    def dims(self, upto: int | None = None) -> tuple[int, ...]:
        upto = self.d if upto is None else upto
        return tuple(self.quotient_dim(j) for j in range(upto + 1))

    # -- maps -------------------------------------------------------------

    def expand_product(self, omega: Sequence, mon: Monomial, target: _DegreePiece) -> dict:
        """omega * mon as a sparse vector in the target degree piece."""
        vec = {}
        for v, coeff in enumerate(omega, start=1):
            if not coeff:
                continue
            shifted = mon[:v - 1] + (mon[v - 1] + 1,) + mon[v:]
            pos = target.index.get(shifted)
            if pos is not None:
                vec[pos] = vec.get(pos, 0) + coeff
        return {p: c for p, c in vec.items() if c}

    def normal_form_coords(self, j: int, vec: dict) -> list[Fraction]:
        """Coordinates of a degree-2j vector on the quotient basis."""
        piece = self.piece(j)
        nf = piece.echelon.normal_form(vec)
        return [as_fraction(nf.get(p, 0)) for p in piece.quotient_positions]

    def multiplication_matrix(self, omega: Sequence, j: int) -> RationalMatrix:
        """Matrix of multiplication by a linear form from degree 2j to 2j+2,
        in the quotient bases."""
        source = self.piece(j)
        target = self.piece(j + 1)
        cols = [self.normal_form_coords(j + 1, self.expand_product(omega, mon, target))
                for mon in source.quotient_monomials]
        return RationalMatrix.from_columns(cols, nrows=target.dim)

    def multiplication_rank(self, omega: Sequence, j: int) -> int:
        """Rank of the quotient multiplication map, without normal forms.

        Extends a copy of the target relation echelon by omega * (full degree
        2j piece); the rank gain equals the rank of the induced quotient map.
        """
        source = self.piece(j)
        target = self.piece(j + 1)
        ech = target.echelon.copy()
        gain = 0
        for mon in source.monomials:
            vec = self.expand_product(omega, mon, target)
            if vec and ech.insert(vec) is not None:
                gain += 1
                if gain == target.dim:
                    break
        return gain

    def pairing_value(self, a: Monomial, b: Monomial) -> Fraction:
        """Coefficient of the product on the (1-dimensional) top quotient piece."""
        top = self.piece(self.d)
        if top.dim != 1:
            raise ValueError("top degree piece is not 1-dimensional")
        product = tuple(x + y for x, y in zip(a, b))
        pos = top.index.get(product)
        if pos is None:
            return Fraction(0)
        nf = top.echelon.normal_form({pos: 1})
        return as_fraction(nf.get(top.quotient_positions[0], 0))

    def pairing_matrix(self, i: int) -> RationalMatrix:
        """Pairing between quotient bases in degrees 2i and 2(d-i)."""
        rows_basis = self.quotient_basis(self.d - i)
        cols_basis = self.quotient_basis(i)
        return RationalMatrix([[self.pairing_value(a, b) for b in cols_basis]
                               for a in rows_basis], ncols=len(cols_basis))


@lru_cache(maxsize=None)
def artinian_reduction(complex: SimplicialComplex, lam: RationalMatrix) -> ArtinianReduction:
    return ArtinianReduction(complex, lam)


def artinian_dims(complex: SimplicialComplex, lam: RationalMatrix) -> tuple[int, ...]:
    """dim (Q[complex]/Theta)_{2j} for j = 0..d, with the j = d+1 vanishing check."""
    ar = artinian_reduction(complex, lam)
    dims = ar.dims()
    if ar.quotient_dim(ar.d + 1) != 0:
        raise RuntimeError("quotient fails to vanish beyond the top degree; "
                           "the matrix is not an l.s.o.p.")
    return dims


def schenzel_predicted(h: Sequence[int], betti: Sequence[int], d: int) -> tuple[int, ...]:
    """Closed-form Buchsbaum dimensions

        h_j - C(d, j) * sum_{i=1}^{j-1} (-1)^i betti_{j-i-1}

    where `betti` is indexed from -1 (betti[0] is the degree -1 entry).
    """
    if len(h) != d + 1:
        raise ValueError("h must have length d+1")
    out = []
    for j in range(d + 1):
        corr = sum((-1) ** i * betti[j - i] for i in range(1, j)
                   if 0 <= j - i < len(betti))
        out.append(h[j] - comb(d, j) * corr)
    return tuple(out)


def socle_dims(complex: SimplicialComplex, lam: RationalMatrix) -> tuple[int, ...]:
    """Per-degree dimension of {x : x_i x = 0 for all i} in the quotient."""
    ar = artinian_reduction(complex, lam)
    m = complex.m
    out = []
    for j in range(ar.d + 1):
        dim_j = ar.quotient_dim(j)
        if dim_j == 0:
            out.append(0)
            continue
        stacked: RationalMatrix | None = None
        for v in range(1, m + 1):
            unit = [0] * m
            unit[v - 1] = 1
            mat = ar.multiplication_matrix(unit, j)
            if mat.nrows == 0:
                continue
            stacked = mat if stacked is None else stacked.vstack(mat)
        if stacked is None:
            out.append(dim_j)
        else:
            out.append(stacked.nullity())
    return tuple(out)


def mult_map(complex: SimplicialComplex, lam: RationalMatrix, omega: Sequence,
             j: int) -> RationalMatrix:
    """Matrix of multiplication by the linear form with coefficients `omega`."""
    return artinian_reduction(complex, lam).multiplication_matrix(omega, j)


def interior_ideal_dims(complex: SimplicialComplex, lam: RationalMatrix) -> tuple[int, ...]:
    """dim (I / I Theta)_{2j} for the interior-face ideal of a homology ball."""
    ball, bfaces = is_homology_ball(complex)
    if not ball:
        raise ValueError("complex is not a rational homology ball")
    if not bfaces:
        raise ValueError("complex has an empty combinatorial boundary")
    if not is_lsop(complex, lam):
        raise ValueError("matrix is not an l.s.o.p. for this complex")
    d = complex.dim + 1

    def interior_positions(j):
        basis = graded_basis(complex, j)
        return basis, [i for i, mon in enumerate(basis)
                       if _support(mon) not in bfaces]

    theta_rows = [
        [(v, lam.entry(t, v - 1)) for v in range(1, complex.m + 1)
         if lam.entry(t, v - 1)]
        for t in range(d)]
    dims = []
    prev_interior: list[Monomial] = []
    for j in range(d + 1):
        basis, positions = interior_positions(j)
        index = {mon: i for i, mon in enumerate(basis)}
        ech = SparseEchelon()
        rank = 0
        for mon in prev_interior:
            for row in theta_rows:
                vec = {}
                for v, coeff in row:
                    shifted = mon[:v - 1] + (mon[v - 1] + 1,) + mon[v:]
                    pos = index.get(shifted)
                    if pos is not None:
                        vec[pos] = coeff
                if vec and ech.insert(vec) is not None:
                    rank += 1
        dims.append(len(positions) - rank)
        prev_interior = [basis[i] for i in positions]
    return tuple(dims)


# -- star restriction -------------------------------------------------------------


@dataclass
class StarRestriction:
    """The reduction of Q[st_sigma] by the restricted l.s.o.p., with the
    degreewise restriction map from the ambient reduction."""
    sigma: tuple[int, ...]
    star_complex: SimplicialComplex
    vertex_map: tuple[int, ...]  # new label i+1 corresponds to old vertex_map[i]
    reduction: ArtinianReduction
    ambient: ArtinianReduction

    def psi_matrix(self, j: int) -> RationalMatrix:
        """Restriction (Q[Delta]/Theta)_{2j} -> (Q[star]/Theta_S)_{2j} in quotient bases."""
        old_to_new = {old: new for new, old in enumerate(self.vertex_map, start=1)}
        sigma_set = frozenset(self.sigma)
        target = self.reduction.piece(j)
        cols = []
        for mon in self.ambient.quotient_basis(j):
            supp = _support(mon)
            if not supp <= set(old_to_new) or \
                    not self.ambient.complex.is_face(supp | sigma_set):
                cols.append([Fraction(0)] * target.dim)
                continue
            exps = [0] * self.star_complex.m
            for v in supp:
                exps[old_to_new[v] - 1] = mon[v - 1]
            pos = target.index[tuple(exps)]
            cols.append(self.reduction.normal_form_coords(j, {pos: 1}))
        return RationalMatrix.from_columns(cols, nrows=target.dim)


def star_restriction(complex: SimplicialComplex, lam: RationalMatrix,
                     sigma: Iterable[int]) -> StarRestriction:
    """Restriction data for the closed star of a face.

    The l.s.o.p. restricted to the star's vertices is re-validated at
    runtime rather than assumed.
    """
    sig = tuple(sorted(sigma))
    star_complex, vmap = star(complex, sig)
    lam_star = lam.submatrix_columns([v - 1 for v in vmap])
    if not is_lsop(star_complex, lam_star):
        raise RuntimeError("restricted matrix is not an l.s.o.p. for the star")
    return StarRestriction(sig, star_complex, vmap,
                           ArtinianReduction(star_complex, lam_star, check=False),
                           artinian_reduction(complex, lam))


# -- Macaulay arithmetic -----------------------------------------------------------


def macaulay_decomposition(a: int, i: int) -> list[tuple[int, int]]:
    """The unique expansion a = C(a_i, i) + C(a_{i-1}, i-1) + ... with
    a_i > a_{i-1} > ... >= level >= 1, found greedily from the top."""
    if i < 1:
        raise ValueError("level must be positive")
    if a < 0:
        raise ValueError("value must be nonnegative")
    terms = []
    rem = a
    level = i
    while rem > 0 and level >= 1:
        t = level
        while comb(t + 1, level) <= rem:
            t += 1
        terms.append((t, level))
        rem -= comb(t, level)
        level -= 1
    return terms


def pseudopower(a: int, i: int) -> int:
    """Macaulay bound a^<i>; 0^<i> = 0."""
    if a == 0:
        if i < 1:
            raise ValueError("level must be positive")
        return 0
    return sum(comb(t + 1, level + 1) for t, level in macaulay_decomposition(a, i))


def is_m_vector(seq: Sequence[int]) -> bool:
    """Macaulay's criterion: k_0 = 1, entries nonnegative, and
    k_{i+1} <= k_i^<i> for i >= 1."""
    if not seq or seq[0] != 1:
        return False
    if any(k < 0 for k in seq):
        return False
    for i in range(1, len(seq) - 1):
        if seq[i + 1] > pseudopower(seq[i], i):
            return False
    return True


# -- Hilbert series -----------------------------------------------------------------


def hilbert_series_numerator(complex: SimplicialComplex) -> tuple[int, ...]:
    """Numerator of F(Q[complex], t) over (1 - t^2)^d, which is the h-vector."""
    return h_vector(complex)


def hilbert_series_coefficient(complex: SimplicialComplex, k: int) -> int:
    """Coefficient a_k of t^{2k} in the expanded Hilbert series."""
    h = h_vector(complex)
    d = complex.dim + 1
    return sum(h[i] * comb(d - 1 + k - i, d - 1) for i in range(min(k, d) + 1))


# -- certificates --------------------------------------------------------------------


def reduction_certificate(complex: SimplicialComplex, sample: LsopSample,
                          include_socle: bool = False) -> dict:
    """Machine-readable record of a reduction run."""
    lam = sample.matrix
    cert = {
        "complex_sha256": complex_hash(complex),
        "lambda": [[str(x) for x in row] for row in lam.rows],
        "seed": sample.seed,
        "bound": sample.bound,
        "tries": sample.tries,
        "dims": list(artinian_dims(complex, lam)),
    }
    if include_socle:
        cert["socle_dims"] = list(socle_dims(complex, lam))
    return cert
