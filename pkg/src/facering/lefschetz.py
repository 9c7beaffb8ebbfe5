"""Weak Lefschetz certificates, duality pairings, star-restriction injectivity,
and the subdivision experiments.

Sampling can certify a weak Lefschetz element but never refute one: genericity
is a Zariski-open condition, so a failed search is reported as INCONCLUSIVE
and theorem-level experiments raise review flags instead of asserting
impossibility.  For rational homology spheres the certificate checks the
injectivity form of the middle-map criterion (multiplication from degree
2*ceil(d/2)-2 to 2*ceil(d/2)), which is equivalent to checking every degree.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .complexes import (SimplicialComplex, complex_hash, f_vector, g_vector,
                        h_vector, partial_barycentric, stellar_subdivide)
from .face_ring import (ArtinianReduction, artinian_dims,
                        artinian_reduction, is_lsop, is_m_vector, random_lsop,
                        socle_dims, squarefree_monomial, star_restriction)
from .homology import (is_cohen_macaulay, is_connected, is_homology_manifold,
                       is_homology_sphere, orientation_class_dim)
from .linalg import RationalMatrix

WLP_CERTIFIED = "WLP_CERTIFIED"
INCONCLUSIVE = "INCONCLUSIVE"
M_VECTOR = "M_VECTOR"
NOT_M_VECTOR = "NOT_M_VECTOR"


@dataclass(frozen=True)
class RankRecord:
    """Rank of one multiplication map omega: degree 2i -> 2i+2 on quotients."""
    i: int
    source_dim: int
    target_dim: int
    rank: int

    @property
    def full_rank(self) -> bool:
        return self.rank == min(self.source_dim, self.target_dim)

    @property
    def injective(self) -> bool:
        return self.rank == self.source_dim

    @property
    def surjective(self) -> bool:
        return self.rank == self.target_dim

    def as_dict(self) -> dict:
        return {"i": self.i, "source_dim": self.source_dim,
                "target_dim": self.target_dim, "rank": self.rank}


@dataclass(frozen=True)
class WleCertificate:
    complex_sha256: str
    lam: tuple[tuple[str, ...], ...]
    omega: tuple[int, ...] | None
    ranks: tuple[RankRecord, ...]
    verdict: str
    trials: int
    certifying_trial: int | None
    seed: int
    sphere_path: bool

    def as_dict(self) -> dict:
        return {
            "complex_sha256": self.complex_sha256,
            "lambda": [list(r) for r in self.lam],
            "omega": list(self.omega) if self.omega is not None else None,
            "ranks": [r.as_dict() for r in self.ranks],
            "verdict": self.verdict,
            "trials": self.trials,
            "certifying_trial": self.certifying_trial,
            "seed": self.seed,
            "sphere_path": self.sphere_path,
        }


def _lam_rows(lam: RationalMatrix) -> tuple[tuple[str, ...], ...]:
    return tuple(tuple(str(x) for x in row) for row in lam.rows)


def _sample_omega(seed: int, trial: int, bound: int, m: int) -> tuple[int, ...]:
    """Independent per-trial coefficients, reproducible and parallelizable."""
    rng = random.Random(seed * 1_000_003 + trial)
    return tuple(rng.randint(-bound, bound) for _ in range(m))


def full_rank_table(complex: SimplicialComplex, lam: RationalMatrix,
                    omega: Sequence) -> tuple[RankRecord, ...]:
    """Ranks of multiplication by omega in every degree i < d."""
    ar = artinian_reduction(complex, lam)
    out = []
    for i in range(ar.d):
        mat = ar.multiplication_matrix(omega, i)
        out.append(RankRecord(i, ar.quotient_dim(i), ar.quotient_dim(i + 1),
                              mat.rank()))
    return tuple(out)


def _sphere_record(ar: ArtinianReduction, omega: Sequence) -> RankRecord:
    """The middle-map injectivity criterion for homology spheres."""
    i = (ar.d + 1) // 2 - 1
    rank = ar.multiplication_rank(omega, i)
    return RankRecord(i, ar.quotient_dim(i), ar.quotient_dim(i + 1), rank)


def find_wle(complex: SimplicialComplex, lam: RationalMatrix, trials: int,
             bound: int, seed: int, is_sphere: bool | None = None,
             jobs: int = 1) -> WleCertificate:
    """Search for a weak Lefschetz element by seeded integer sampling.

    Homology spheres are certified through the single middle map; other
    complexes require full rank in every degree below d.  Trials draw
    independent derived seeds, so they may run on `jobs` worker threads; the
    lowest certifying trial index always wins.
    """
    ar = artinian_reduction(complex, lam)
    sphere = is_homology_sphere(complex) if is_sphere is None else is_sphere
    chash = complex_hash(complex)

    def evaluate(trial: int):
        omega = _sample_omega(seed, trial, bound, complex.m)
        if sphere:
            records = (_sphere_record(ar, omega),)
            certified = records[0].injective
        else:
            records = full_rank_table(complex, lam, omega)
            certified = all(r.full_rank for r in records)
        return omega, records, certified

    if jobs > 1 and trials > 1:
        # degree pieces are built up front so worker threads only read
        mid = (ar.d + 1) // 2 - 1
        for j in ((mid, mid + 1) if sphere else range(ar.d + 1)):
            ar.piece(j)
        from concurrent.futures import ThreadPoolExecutor
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(evaluate, range(trials)))
    else:
        results = []
        for trial in range(trials):
            results.append(evaluate(trial))
            if results[-1][2]:
                break
    for trial, (omega, records, certified) in enumerate(results):
        if certified:
            return WleCertificate(chash, _lam_rows(lam), omega, records,
                                  WLP_CERTIFIED, trials, trial, seed, sphere)
    return WleCertificate(chash, _lam_rows(lam), None, (), INCONCLUSIVE,
                          trials, None, seed, sphere)


def join_wle(complex: SimplicialComplex, simplex_vertices: Sequence[int],
             lam: RationalMatrix | None = None, bound: int = 7,
             seed: int = 1) -> WleCertificate:
    """Certificate for a sphere of the form (boundary n-simplex) * rest,
    using the coordinate form omega = x_i of the join construction.

    ``simplex_vertices`` names the n+1 vertices of the simplex factor, which
    must satisfy n >= ceil(d/2).
    """
    s = frozenset(simplex_vertices)
    d = complex.dim + 1
    n = len(s) - 1
    if n < (d + 1) // 2:
        raise ValueError(f"simplex factor dimension {n} is below ceil(d/2) = {(d + 1) // 2}")
    rest_facets = {frozenset(f) - s for f in complex.facets}
    expected = {(s - {v}) | g for v in s for g in rest_facets}
    if expected != set(complex.facets):
        raise ValueError("complex is not the join of the simplex boundary with the rest")
    if not is_homology_sphere(complex):
        raise ValueError("complex is not a rational homology sphere")
    if lam is None:
        lam = random_lsop(complex, bound, seed).matrix
    omega = tuple(1 if v == min(s) else 0 for v in range(1, complex.m + 1))
    records = full_rank_table(complex, lam, omega)
    verdict = WLP_CERTIFIED if all(r.full_rank for r in records) else INCONCLUSIVE
    return WleCertificate(complex_hash(complex), _lam_rows(lam), omega,
                          records, verdict, 1, 0 if verdict == WLP_CERTIFIED else None,
                          seed, True)


# -- duality ---------------------------------------------------------------------


def duality_pairing_check(complex: SimplicialComplex, lam: RationalMatrix) -> bool:
    """Nondegeneracy of the top-degree pairing between complementary degrees."""
    if not is_homology_sphere(complex):
        raise ValueError("duality pairing requires a rational homology sphere")
    ar = artinian_reduction(complex, lam)
    if ar.quotient_dim(ar.d) != 1:
        raise ValueError("degree-2d piece is not 1-dimensional")
    for i in range(ar.d // 2 + 1):
        mat = ar.pairing_matrix(i)
        if mat.nrows != mat.ncols or mat.rank() != mat.nrows:
            return False
    return True


def pd_quotient_dims(complex: SimplicialComplex, lam: RationalMatrix
                     ) -> tuple[tuple[int, ...], bool]:
    """Dimensions of the socle quotient of an orientable manifold's reduction,
    plus nondegeneracy of its pairing at all complementary degrees."""
    if not is_connected(complex):
        raise ValueError("complex is not connected")
    if not is_homology_manifold(complex):
        raise ValueError("complex is not a rational homology manifold")
    if orientation_class_dim(complex) != 1:
        raise ValueError("complex is not Q-orientable")
    ar = artinian_reduction(complex, lam)
    d = ar.d
    adims = artinian_dims(complex, lam)
    sdims = socle_dims(complex, lam)
    qdims = (adims[0],) + tuple(adims[k] - sdims[k] for k in range(1, d)) + (adims[d],)
    if adims[d] != 1:
        raise ValueError("top degree piece is not 1-dimensional")
    pairing_ok = all(qdims[k] == qdims[d - k] for k in range(d + 1))
    if pairing_ok:
        for k in range(d // 2 + 1):
            if ar.pairing_matrix(k).rank() != qdims[k]:
                pairing_ok = False
                break
    return qdims, pairing_ok


# -- star restrictions -------------------------------------------------------------


def _stack(mats) -> RationalMatrix:
    stacked = mats[0]
    for mat in mats[1:]:
        stacked = stacked.vstack(mat)
    return stacked


def _stacked_restriction(complex: SimplicialComplex, lam: RationalMatrix,
                         faces, j: int) -> RationalMatrix:
    return _stack([star_restriction(complex, lam, sigma).psi_matrix(j)
                   for sigma in faces])


def star_injection_check(complex: SimplicialComplex, lam: RationalMatrix,
                         i: int, k: int) -> bool:
    """Injectivity of the stacked restriction to all stars of (i-1)-faces
    in degree 2k, valid for k <= d - i on homology spheres."""
    if not is_homology_sphere(complex):
        raise ValueError("star injectivity requires a rational homology sphere")
    d = complex.dim + 1
    if not 1 <= i <= d:
        raise ValueError(f"need 1 <= i <= {d}")
    if not 0 <= k <= d - i:
        raise ValueError(f"need 0 <= k <= d - i = {d - i}")
    ar = artinian_reduction(complex, lam)
    source = ar.quotient_dim(k)
    if source == 0:
        return True
    stacked = _stacked_restriction(complex, lam, complex.faces(i - 1), k)
    return stacked.rank() == source


def monomial_basis_faces(complex: SimplicialComplex, lam: RationalMatrix,
                         k: int) -> list[tuple[int, ...]]:
    """Greedy lexicographic choice of (k-1)-faces whose monomials form a
    basis of the degree-2k quotient piece; raises SpanError on failure."""
    if not is_cohen_macaulay(complex):
        raise ValueError("face-monomial bases are built for Cohen-Macaulay complexes")
    d = complex.dim + 1
    if not 1 <= k <= d:
        raise ValueError(f"need 1 <= k <= {d}")
    ar = artinian_reduction(complex, lam)
    piece = ar.piece(k)
    needed = piece.dim
    ech = piece.echelon.copy()
    chosen = []
    for face in complex.faces(k - 1):
        pos = piece.index[squarefree_monomial(face, complex.m)]
        if ech.insert({pos: 1}) is not None:
            chosen.append(face)
            if len(chosen) == needed:
                return chosen
    raise SpanError(
        f"face monomials span only {len(chosen)} of {needed} dimensions in degree {2 * k}")


def basis_link_check(complex: SimplicialComplex, lam: RationalMatrix, k: int) -> bool:
    """Stacked restriction to the stars of a face-monomial basis:
    injective for j < d - k and an isomorphism at j = d - k."""
    faces = monomial_basis_faces(complex, lam, k)
    restrictions = [star_restriction(complex, lam, sigma) for sigma in faces]
    ar = artinian_reduction(complex, lam)
    d = ar.d
    for j in range(d - k + 1):
        source = ar.quotient_dim(j)
        stacked = _stack([r.psi_matrix(j) for r in restrictions])
        if stacked.rank() != source:
            return False
        if j == d - k and stacked.nrows != source:
            return False
    return True


# -- subdivision experiments ---------------------------------------------------------


@dataclass(frozen=True)
class TransferReport:
    face: tuple[int, ...]
    direction: str
    base_certificate: WleCertificate
    subdivided_certificate: WleCertificate
    flags: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.flags

    def as_dict(self) -> dict:
        return {"face": list(self.face), "direction": self.direction,
                "base": self.base_certificate.as_dict(),
                "subdivided": self.subdivided_certificate.as_dict(),
                "flags": list(self.flags)}


def _extend_lam(lam: RationalMatrix, sigma, rng: random.Random, bound: int) -> RationalMatrix:
    """New column for the subdivision vertex: a nonzero combination of the
    columns of the subdivided face."""
    coeffs = {v: _nonzero(rng, bound) for v in sigma}
    new_col = [sum(coeffs[v] * lam.entry(t, v - 1) for v in sigma)
               for t in range(lam.nrows)]
    return RationalMatrix([row + (c,) for row, c in zip(lam.rows, new_col)])


def _nonzero(rng: random.Random, bound: int) -> int:
    x = 0
    while x == 0:
        x = rng.randint(-bound, bound)
    return x


def stellar_wlp_transfer(complex: SimplicialComplex, sigma: Sequence[int],
                         direction: str, trials: int = 25, bound: int = 7,
                         seed: int = 1) -> TransferReport:
    """Certificate search on both sides of a stellar subdivision.

    Direction "a" needs dim(sigma) >= d/2 (subdivision preserves the
    property); direction "b" needs dim(sigma) > d/2 (it reflects).  A flag is
    raised when the implied side stays inconclusive while the other side
    certifies; flags mark instances for review, not disproofs.
    """
    if not is_homology_sphere(complex):
        raise ValueError("transfer experiments run on rational homology spheres")
    sig = tuple(sorted(sigma))
    n = len(sig) - 1
    d = complex.dim + 1
    if direction == "a":
        if 2 * n < d:
            raise ValueError(f"direction (a) needs dim(face) >= d/2 = {d / 2}")
    elif direction == "b":
        if 2 * n <= d:
            raise ValueError(f"direction (b) needs dim(face) > d/2 = {d / 2}")
    else:
        raise ValueError("direction must be 'a' or 'b'")
    base_lam = random_lsop(complex, bound, seed).matrix
    subdivided = stellar_subdivide(complex, sig)
    rng = random.Random(seed * 7_919 + 11)
    lam_ext = _extend_lam(base_lam, sig, rng, bound)
    if not is_lsop(subdivided, lam_ext):
        raise RuntimeError("extended matrix failed the l.s.o.p. criterion")
    base_cert = find_wle(complex, base_lam, trials, bound, seed + 1, is_sphere=True)
    sub_cert = find_wle(subdivided, lam_ext, trials, bound, seed + 2, is_sphere=True)
    flags = []
    if direction == "a" and base_cert.verdict == WLP_CERTIFIED \
            and sub_cert.verdict != WLP_CERTIFIED:
        flags.append("base certified but subdivision inconclusive (direction a)")
    if direction == "b" and sub_cert.verdict == WLP_CERTIFIED \
            and base_cert.verdict != WLP_CERTIFIED:
        flags.append("subdivision certified but base inconclusive (direction b)")
    return TransferReport(sig, direction, base_cert, sub_cert, tuple(flags))


@dataclass(frozen=True)
class SubdivisionReport:
    kind: str
    k: int
    complex_sha256: str
    subdivided_sha256: str
    f: tuple[int, ...]
    h: tuple[int, ...]
    g: tuple[int, ...]
    g_is_m_vector: bool
    injectivity: tuple[RankRecord, ...]
    certified: bool
    wle_required: bool
    certifying_trial: int | None
    omega: tuple[int, ...] | None
    seed: int
    trials: int
    flags: tuple[str, ...]
    basis_shape_checked: bool = False
    basis_shape_ok: bool | None = None

    @property
    def ok(self) -> bool:
        return self.certified and not self.flags

    def as_dict(self) -> dict:
        return {
            "kind": self.kind, "k": self.k,
            "complex_sha256": self.complex_sha256,
            "subdivided_sha256": self.subdivided_sha256,
            "f": list(self.f), "h": list(self.h), "g": list(self.g),
            "g_is_m_vector": self.g_is_m_vector,
            "injectivity": [r.as_dict() for r in self.injectivity],
            "certified": self.certified,
            "wle_required": self.wle_required,
            "certifying_trial": self.certifying_trial,
            "omega": list(self.omega) if self.omega is not None else None,
            "seed": self.seed, "trials": self.trials,
            "flags": list(self.flags),
            "basis_shape_checked": self.basis_shape_checked,
            "basis_shape_ok": self.basis_shape_ok,
        }


def _injectivity_search(ar: ArtinianReduction, upto: int, trials: int,
                        bound: int, seed: int):
    """First omega whose multiplication maps are injective through degree `upto`."""
    for trial in range(trials):
        omega = _sample_omega(seed, trial, bound, ar.complex.m)
        records = []
        ok = True
        for i in range(1, upto + 1):
            rank = ar.multiplication_rank(omega, i - 1)
            rec = RankRecord(i - 1, ar.quotient_dim(i - 1), ar.quotient_dim(i), rank)
            records.append(rec)
            if not rec.injective:
                ok = False
                break
        if ok:
            return omega, tuple(records), trial
    return None, (), None


def partial_bary_wlp(complex: SimplicialComplex, k: int, trials: int = 25,
                     bound: int = 7, seed: int = 1) -> SubdivisionReport:
    """Injectivity certificates for the k-th partial barycentric subdivision
    of a rational homology sphere, k <= ceil(d/2).

    Verifies multiplication injectivity through degree min(k, floor(d/2));
    when d is even and k = d/2 the final map is the full weak Lefschetz
    criterion.  Also records the g-vector and its Macaulay verdict.
    """
    if not is_homology_sphere(complex):
        raise ValueError("experiment runs on rational homology spheres")
    d = complex.dim + 1
    if not 1 <= k <= (d + 1) // 2:
        raise ValueError(f"need 1 <= k <= ceil(d/2) = {(d + 1) // 2}")
    subdivided = partial_barycentric(complex, k)
    lam = random_lsop(subdivided, bound, seed).matrix
    ar = artinian_reduction(subdivided, lam)
    upto = min(k, d // 2)
    wle_required = (d % 2 == 0 and k == d // 2)
    omega, records, trial = _injectivity_search(ar, upto, trials, bound, seed)
    certified = omega is not None
    g = g_vector(subdivided)
    g_ok = is_m_vector(g)
    flags = []
    if not certified:
        flags.append(f"no injectivity certificate within {trials} trials")
    elif not g_ok:
        flags.append("certified subdivision has a non-M g-vector")
    return SubdivisionReport(
        "partial-bary-wlp", k, complex_hash(complex), complex_hash(subdivided),
        f_vector(subdivided), h_vector(subdivided), g, g_ok, records, certified,
        wle_required, trial, omega, seed, trials, tuple(flags))


def stellar_set_wlp(complex: SimplicialComplex, k: int, trials: int = 25,
                    bound: int = 7, seed: int = 1) -> SubdivisionReport:
    """Stellar subdivisions at a degree-2(k+1) face-monomial basis of a
    rational homology sphere, k >= ceil((d-1)/2), with injectivity
    certificates through degree min(d-k, floor(d/2)).

    The new-vertex basis shape of the subdivided degree-2(k+1) piece is
    asserted as a property and reported, not assumed.
    """
    if not is_homology_sphere(complex):
        raise ValueError("experiment runs on rational homology spheres")
    d = complex.dim + 1
    if not d // 2 <= k <= d - 1:  # ceil((d-1)/2) == floor(d/2)
        raise ValueError(f"need ceil((d-1)/2) = {d // 2} <= k <= {d - 1}")
    base_lam = random_lsop(complex, bound, seed).matrix
    faces = monomial_basis_faces(complex, base_lam, k + 1)
    subdivided = complex
    lam = base_lam
    rng = random.Random(seed * 104_729 + 13)
    for sigma in faces:
        subdivided = stellar_subdivide(subdivided, sigma)
        lam = _extend_lam(lam, sigma, rng, bound)
    if not is_lsop(subdivided, lam):
        raise RuntimeError("extended matrix failed the l.s.o.p. criterion")
    ar = ArtinianReduction(subdivided, lam, check=False)
    upto = min(d - k, d // 2)
    wle_required = (d % 2 == 0 and k == d // 2)
    omega, records, trial = _injectivity_search(ar, upto, trials, bound, seed)
    certified = omega is not None
    new_vertices = set(range(complex.m + 1, subdivided.m + 1))
    basis_ok = _new_vertex_basis_shape(ar, k + 1, new_vertices)
    g = g_vector(subdivided)
    g_ok = is_m_vector(g)
    flags = []
    if not certified:
        flags.append(f"no injectivity certificate within {trials} trials")
    elif not g_ok:
        flags.append("certified subdivision has a non-M g-vector")
    if not basis_ok:
        flags.append("no face-monomial basis meeting the new vertices")
    return SubdivisionReport(
        "stellar-set-wlp", k, complex_hash(complex), complex_hash(subdivided),
        f_vector(subdivided), h_vector(subdivided), g, g_ok, records, certified,
        wle_required, trial, omega, seed, trials, tuple(flags),
        basis_shape_checked=True, basis_shape_ok=basis_ok)


def _new_vertex_basis_shape(ar: ArtinianReduction, k: int, new_vertices: set[int]) -> bool:
    """Whether faces meeting the new vertices yield a full face-monomial
    basis of the degree-2k quotient piece."""
    piece = ar.piece(k)
    ech = piece.echelon.copy()
    count = 0
    for face in ar.complex.faces(k - 1):
        if not new_vertices.intersection(face):
            continue
        pos = piece.index[squarefree_monomial(face, ar.complex.m)]
        if ech.insert({pos: 1}) is not None:
            count += 1
            if count == piece.dim:
                return True
    return count == piece.dim


def g_conjecture_check(complex: SimplicialComplex) -> str:
    """Macaulay verdict for the g-vector of a rational homology sphere."""
    if not is_homology_sphere(complex):
        raise ValueError("g-vector verdicts apply to rational homology spheres")
    return M_VECTOR if is_m_vector(g_vector(complex)) else NOT_M_VECTOR
