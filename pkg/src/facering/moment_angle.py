"""Hochster tables, the union product on full-subcomplex cochains, and the
closed-form cohomology dimensions of toric spaces over Buchsbaum complexes.

The bigraded numbers are beta^{-i, 2j} = sum over j-element vertex subsets J
of the reduced cohomology dimension of the full subcomplex on J in degree
j - i - 1, with the convention that the empty subset contributes a single
class in bidegree (0, 0).  Over Q the cohomology dimensions equal the
homology dimensions, so everything reduces to boundary-matrix ranks.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .complexes import SimplicialComplex, complex_hash, full_subcomplex, h_vector
from .face_ring import artinian_dims, is_integral_characteristic, is_lsop, \
    facet_minor_table, lattice_index, schenzel_predicted
from .homology import is_buchsbaum, reduced_betti
from .linalg import RationalMatrix, SparseEchelon, as_fraction


@dataclass(frozen=True)
class HochsterTable:
    m: int
    dim: int
    complex_sha256: str
    subset_betti: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]

    def betti_of(self, subset) -> tuple[int, ...]:
        key = tuple(sorted(subset))
        for s, b in self.subset_betti:
            if s == key:
                return b
        return ()

    def bigraded(self) -> dict[tuple[int, int], int]:
        """{(i, j): beta^{-i, 2j}} with zero entries omitted."""
        out: dict[tuple[int, int], int] = {}
        for subset, betti in self.subset_betti:
            j = len(subset)
            for deg_plus1, dim in enumerate(betti):
                if dim:
                    deg = deg_plus1 - 1  # reduced degree
                    i = j - deg - 1
                    out[(i, j)] = out.get((i, j), 0) + dim
        return out

    def poincare_coefficients(self) -> tuple[int, ...]:
        """dim H^p of the moment-angle complex for p = 0 .. m + dim + 1."""
        top = self.m + self.dim + 1
        coeffs = [0] * (top + 1)
        for subset, betti in self.subset_betti:
            j = len(subset)
            for deg_plus1, dim in enumerate(betti):
                if dim:
                    p = j + (deg_plus1 - 1) + 1
                    coeffs[p] += dim
        return tuple(coeffs)

    def rows(self) -> list[tuple[int, int, int]]:
        """Sorted (i, j, beta^{-i,2j}) export rows."""
        return sorted((i, j, v) for (i, j), v in self.bigraded().items())


def _is_cone(facets: list[frozenset[int]], vertices: frozenset[int]) -> bool:
    return any(all(v in f for f in facets) for v in vertices)


def hochster_table(complex: SimplicialComplex, cap: int = 20,
                   jobs: int = 1) -> HochsterTable:
    """Reduced cohomology of every full subcomplex, assembled bigraded.

    Subsets whose full subcomplex is a cone are skipped: cones are acyclic
    and contribute nothing.  The empty subset contributes the unit class.
    Subset jobs are independent; the table merge is order-independent, so
    `jobs` worker threads give the same result.
    """
    if complex.m > cap:
        raise ValueError(f"vertex count {complex.m} exceeds the cap {cap}")
    candidates = []
    vertex_list = range(1, complex.m + 1)
    for size in range(1, complex.m + 1):
        for subset in itertools.combinations(vertex_list, size):
            jset = frozenset(subset)
            facets = {f & jset for f in complex.facets}
            facets.discard(frozenset())
            if not facets:
                continue
            maximal = [f for f in facets if not any(f < g for g in facets)]
            if _is_cone(maximal, jset):
                continue
            candidates.append(subset)

    def compute(subset):
        sub, _ = full_subcomplex(complex, subset)
        return subset, reduced_betti(sub)

    if jobs > 1 and candidates:
        from concurrent.futures import ThreadPoolExecutor
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            computed = list(pool.map(compute, candidates))
    else:
        computed = [compute(s) for s in candidates]
    entries = [((), (1,))]
    entries.extend((s, b) for s, b in computed if any(b))
    return HochsterTable(complex.m, complex.dim, complex_hash(complex),
                         tuple(entries))


def moment_angle_poincare(complex: SimplicialComplex, cap: int = 20) -> tuple[int, ...]:
    return hochster_table(complex, cap).poincare_coefficients()


def euler_hilbert_crosscheck(complex: SimplicialComplex, cap: int = 20) -> bool:
    """Alternating bigraded sums against (1 - t^2)^m * F(Q[complex], t).

    The right-hand side is the polynomial (1 - t^2)^(m - d) * h(t^2);
    equality is checked coefficientwise for j = 0 .. m.
    """
    table = hochster_table(complex, cap)
    m, d = complex.m, complex.dim + 1
    lhs = [0] * (m + 1)
    for (i, j), v in table.bigraded().items():
        lhs[j] += (-1) ** i * v
    h = h_vector(complex)
    rhs = [0] * (m + 1)
    for t in range(m - d + 1):
        for i, hi in enumerate(h):
            j = t + i
            if j <= m:
                rhs[j] += (-1) ** t * comb(m - d, t) * hi
    return lhs == rhs


# -- union product ------------------------------------------------------------------


@dataclass(frozen=True)
class CochainClass:
    """A reduced cocycle on a full subcomplex, as a canonical coset representative.

    ``degree`` is the simplex dimension carried by the cochain (so the class
    lives in reduced cohomology degree ``degree``); ``coeffs`` maps sorted
    vertex tuples to rational coefficients.
    """
    subset: tuple[int, ...]
    degree: int
    coeffs: tuple[tuple[tuple[int, ...], Fraction], ...]

    def coeff_dict(self) -> dict[tuple[int, ...], Fraction]:
        return dict(self.coeffs)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def as_dict(self) -> dict:
        return {"subset": list(self.subset), "degree": self.degree,
                "coeffs": {" ".join(map(str, s)): str(c) for s, c in self.coeffs}}


def _sub_faces(complex: SimplicialComplex, subset: tuple[int, ...], k: int):
    """k-dimensional faces of the full subcomplex, in original labels."""
    jset = frozenset(subset)
    found = {f for f in complex.faces(k) if set(f) <= jset} if k >= 0 else {()}
    return sorted(found)


def _delta_matrix(complex, subset, k):
    """Reduced coboundary C^{k} -> C^{k+1} on the full subcomplex, as columns
    over the (k+1)-face basis indexed by `index_up`."""
    lower = _sub_faces(complex, subset, k)
    upper = _sub_faces(complex, subset, k + 1)
    index_up = {f: i for i, f in enumerate(upper)}
    cols = []
    for f in lower:
        col = [0] * len(upper)
        cols.append((f, col))
    col_index = {f: c for f, c in cols}
    for up in upper:
        for pos in range(len(up)):
            sub = up[:pos] + up[pos + 1:]
            if sub in col_index:
                col_index[sub][index_up[up]] += (-1) ** pos
    return lower, upper, [c for _, c in cols]


def _cocycle_defect(complex, cls: CochainClass) -> bool:
    """True when the coboundary of the representative vanishes."""
    lower, upper, cols = _delta_matrix(complex, cls.subset, cls.degree)
    coeffs = cls.coeff_dict()
    vec = [Fraction(0)] * len(upper)
    for f, col in zip(lower, cols):
        c = coeffs.get(f)
        if c:
            for i, x in enumerate(col):
                if x:
                    vec[i] += c * x
    return all(v == 0 for v in vec)


def _canonicalize(complex, subset, degree, coeffs: dict) -> CochainClass:
    """Reduce a cocycle modulo coboundaries to the canonical representative."""
    lower, upper, cols = _delta_matrix(complex, subset, degree - 1)
    face_index = {f: i for i, f in enumerate(upper)}
    ech = SparseEchelon()
    for col in cols:
        ech.insert({i: v for i, v in enumerate(col) if v})
    vec = {}
    for f, c in coeffs.items():
        if c:
            vec[face_index[f]] = c
    nf = ech.normal_form(vec)
    items = tuple(sorted((upper[i], as_fraction(c)) for i, c in nf.items()))
    return CochainClass(tuple(subset), degree, items)


def cohomology_basis(complex: SimplicialComplex, subset, degree: int) -> list[CochainClass]:
    """Canonical basis of reduced degree-`degree` cohomology of the full
    subcomplex on `subset` (over Q, via cocycles modulo coboundaries)."""
    subset = tuple(sorted(subset))
    this, upper, up_cols = _delta_matrix(complex, subset, degree)
    delta = RationalMatrix.from_columns(up_cols, nrows=len(upper))
    kernel = delta.kernel_basis()
    lower, _, low_cols = _delta_matrix(complex, subset, degree - 1)
    ech = SparseEchelon()
    for col in low_cols:
        ech.insert({i: v for i, v in enumerate(col) if v})
    picked = []
    test = ech.copy()
    for kv in kernel:
        vec = {i: c for i, c in enumerate(kv) if c}
        if test.insert(vec) is not None:
            nf = ech.normal_form(vec)
            items = tuple(sorted((this[i], as_fraction(c)) for i, c in nf.items()))
            picked.append(CochainClass(subset, degree, items))
    return picked


def _merge_sign(a: tuple[int, ...], b: tuple[int, ...]) -> int:
    """Sign of the permutation sorting the juxtaposition of two sorted tuples."""
    inversions = 0
    for x in a:
        inversions += sum(1 for y in b if y < x)
    return -1 if inversions % 2 else 1


def union_product(complex: SimplicialComplex, a: CochainClass, b: CochainClass) -> CochainClass:
    """Juxtaposition product of cocycles on disjoint full subcomplexes.

    Zero when the vertex subsets overlap or no juxtaposed face survives;
    otherwise the canonical representative of the product class on the union
    subset."""
    if not _cocycle_defect(complex, a):
        raise ValueError("first factor is not a cocycle")
    if not _cocycle_defect(complex, b):
        raise ValueError("second factor is not a cocycle")
    sa, sb = set(a.subset), set(b.subset)
    subset = tuple(sorted(sa | sb))
    degree = a.degree + b.degree + 1
    if sa & sb:
        return CochainClass(subset, degree, ())
    acc: dict[tuple[int, ...], Fraction] = {}
    for fa, ca in a.coeffs:
        for fb, cb in b.coeffs:
            merged = tuple(sorted(fa + fb))
            if not complex.is_face(merged):
                continue
            sign = _merge_sign(fa, fb)
            acc[merged] = acc.get(merged, Fraction(0)) + sign * ca * cb
    acc = {f: c for f, c in acc.items() if c}
    result = _canonicalize(complex, subset, degree, acc)
    if not _cocycle_defect(complex, result):
        raise RuntimeError("union product produced a non-cocycle")
    return result


def unit_class() -> CochainClass:
    """The degree-(-1) class of the empty subset (the ring unit)."""
    return CochainClass((), -1, (((), Fraction(1)),))


# -- Buchsbaum toric dimensions -------------------------------------------------------


def buchsbaum_toric_dims(complex: SimplicialComplex, lam: RationalMatrix) -> tuple[int, ...]:
    """dim H^k of the toric space over a Buchsbaum complex, k = 0 .. 2d.

    Assembled in closed form: the base row is the Schenzel dimension and, for
    q > 0, the cell (2p, q) contributes C(d, p+q) * betti_{p-1}."""
    if not is_buchsbaum(complex):
        raise ValueError("complex is not Buchsbaum")
    if not is_lsop(complex, lam):
        raise ValueError("matrix is not an l.s.o.p. for this complex")
    d = complex.dim + 1
    h = h_vector(complex)
    betti = reduced_betti(complex)
    base = schenzel_predicted(h, betti, d)

    def b(p):
        idx = p  # betti[p] is the reduced degree p-1 entry
        return betti[idx] if 0 <= idx < len(betti) else 0

    dims = []
    for k in range(2 * d + 1):
        total = 0
        if k % 2 == 0 and k // 2 <= d:
            total += base[k // 2]
        for q in range(1, k + 1):
            if (k - q) % 2:
                continue
            p = (k - q) // 2
            if p + q <= d:
                total += comb(d, p + q) * b(p)
        dims.append(total)
    return tuple(dims)


def toric_euler_consistency(complex: SimplicialComplex, lam: RationalMatrix) -> bool:
    """Alternating sum of the assembled dims equals the cellwise alternating sum."""
    dims = buchsbaum_toric_dims(complex, lam)
    total = sum((-1) ** k * v for k, v in enumerate(dims))
    d = complex.dim + 1
    h = h_vector(complex)
    betti = reduced_betti(complex)
    base = schenzel_predicted(h, betti, d)
    cells = sum(base)
    for p in range(d + 1):
        for q in range(1, d - p + 1):
            bp = betti[p] if 0 <= p < len(betti) else 0
            cells += (-1) ** q * comb(d, p + q) * bp
    return total == cells


# -- the three projective-plane coefficient matrices -----------------------------------


def characteristic_examples() -> list[dict]:
    """Catalog of the three classical coefficient matrices on the boundary
    triangle: integral, weighted, and the index-3 fake-weighted case."""
    from .complexes import boundary_simplex
    tri = boundary_simplex(2)
    cases = [
        ("projective_plane", [[1, 0, -1], [0, 1, -1]]),
        ("weighted_projective", [[1, 0, -2], [0, 1, -3]]),
        ("fake_weighted_projective", [[1, 1, -2], [-1, 2, -1]]),
    ]
    out = []
    for name, rows in cases:
        lam = RationalMatrix(rows)
        entry = {
            "name": name,
            "lambda": rows,
            "is_lsop": is_lsop(tri, lam),
            "is_integral_characteristic": is_integral_characteristic(tri, lam),
            "dims": list(artinian_dims(tri, lam)),
            "facet_minors": {" ".join(map(str, f)): str(v)
                             for f, v in sorted(facet_minor_table(tri, lam).items())},
        }
        entry["lattice_index"] = lattice_index(tri, lam)
        out.append(entry)
    return out
