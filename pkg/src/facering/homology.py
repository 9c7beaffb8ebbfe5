"""Reduced simplicial homology over Q and homological classification predicates.

Betti vectors are tuples indexed from -1: ``betti[k + 1]`` is the reduced
Betti number in degree k, for k = -1 .. dim.  The complex {emptyset} has
betti (1,), matching the convention that it is the (-1)-sphere; with that
reading, links of facets in a homology manifold carry the homology of
S^(dim - |face|) uniformly.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .complexes import SimplicialComplex, f_vector, full_subcomplex, link
from .linalg import RationalMatrix, SparseEchelon


def boundary_matrix(complex: SimplicialComplex, k: int) -> RationalMatrix:
    """Matrix of the k-th boundary map with the augmentation row at k = 0.

    Rows are indexed by (k-1)-faces and columns by k-faces, both in
    lexicographic order, with the usual alternating signs.
    """
    if k < 0 or k > complex.dim + 1:
        raise ValueError(f"k must lie in 0..{complex.dim + 1}")
    rows_faces = complex.faces(k - 1)
    cols_faces = complex.faces(k)
    row_index = {f: i for i, f in enumerate(rows_faces)}
    cols = []
    for face in cols_faces:
        col = [0] * len(rows_faces)
        for j in range(len(face)):
            sub = face[:j] + face[j + 1:]
            col[row_index[sub]] = (-1) ** j
        cols.append(col)
    return RationalMatrix.from_columns(cols, nrows=len(rows_faces))


def _boundary_rank(complex: SimplicialComplex, k: int) -> int:
    """rank of the k-th boundary map, computed sparsely."""
    rows_faces = complex.faces(k - 1)
    row_index = {f: i for i, f in enumerate(rows_faces)}
    ech = SparseEchelon()
    rank = 0
    for face in complex.faces(k):
        vec = {}
        for j in range(len(face)):
            sub = face[:j] + face[j + 1:]
            vec[row_index[sub]] = (-1) ** j
        if ech.insert(vec) is not None:
            rank += 1
    return rank


@lru_cache(maxsize=None)
def reduced_betti(complex: SimplicialComplex) -> tuple[int, ...]:
    """(betti_{-1}, betti_0, ..., betti_dim) over Q."""
    d = complex.dim
    if d == -1:
        return (1,)
    f = f_vector(complex)
    ranks = [_boundary_rank(complex, k) for k in range(d + 2)]  # rank d+1 is 0
    betti = [1 - ranks[0]]
    for k in range(d + 1):
        betti.append(f[k] - ranks[k] - ranks[k + 1])
    return tuple(betti)


def sphere_betti(k: int) -> tuple[int, ...]:
    """Reduced Betti pattern of S^k, k >= -1 (S^-1 is the complex {emptyset})."""
    if k < -1:
        raise ValueError("k must be >= -1")
    pattern = [0] * (k + 2)
    pattern[k + 1] = 1
    return tuple(pattern)


def is_connected(complex: SimplicialComplex) -> bool:
    b = reduced_betti(complex)
    return len(b) > 1 and b[1] == 0


def _all_faces_with_empty(complex: SimplicialComplex):
    yield ()
    yield from complex.all_faces()


def is_cohen_macaulay(complex: SimplicialComplex) -> bool:
    """Reisner's criterion: every link (including of the empty face) has
    vanishing reduced homology below its dimension."""
    for sigma in _all_faces_with_empty(complex):
        lk, _ = link(complex, sigma)
        betti = reduced_betti(lk)
        if any(betti[i + 1] for i in range(-1, lk.dim)):
            return False
    return True


def is_buchsbaum(complex: SimplicialComplex) -> bool:
    """Pure, and the link of every nonempty face is Cohen-Macaulay."""
    if not complex.is_pure:
        return False
    for sigma in complex.all_faces():
        lk, _ = link(complex, sigma)
        if lk.dim >= 0 and not is_cohen_macaulay(lk):
            return False
    return True


def is_homology_manifold(complex: SimplicialComplex) -> bool:
    """Every nonempty face link has the rational homology of a sphere of
    complementary dimension (closed manifolds only; balls fail at the boundary)."""
    n = complex.dim
    if n < 0:
        return False
    for sigma in complex.all_faces():
        lk, _ = link(complex, sigma)
        if reduced_betti(lk) != sphere_betti(n - len(sigma)):
            return False
    return True


def is_homology_sphere(complex: SimplicialComplex) -> bool:
    return (is_homology_manifold(complex)
            and reduced_betti(complex) == sphere_betti(complex.dim))


def boundary_faces(complex: SimplicialComplex) -> frozenset[frozenset[int]]:
    """Downward closure of the (dim-1)-faces lying in exactly one facet.

    Returned in original labels; the empty face is included whenever the
    boundary is nonempty.
    """
    n = complex.dim
    if n < 1:
        return frozenset()
    ridge_count: dict[frozenset[int], int] = {}
    for f in complex.facets:
        if len(f) == n + 1:
            for r in itertools.combinations(sorted(f), n):
                r = frozenset(r)
                ridge_count[r] = ridge_count.get(r, 0) + 1
    free = [r for r, c in ridge_count.items() if c == 1]
    closure: set[frozenset[int]] = set()
    for r in free:
        for k in range(len(r) + 1):
            closure.update(frozenset(s) for s in itertools.combinations(sorted(r), k))
    return frozenset(closure)


def is_homology_ball(complex: SimplicialComplex) -> tuple[bool, frozenset[frozenset[int]]]:
    """Rational homology ball test.

    Checks, over Q: the complex is acyclic, its combinatorial boundary is a
    homology sphere of one lower dimension, interior face links look like
    spheres of complementary dimension, and boundary face links are acyclic.
    Returns (verdict, boundary faces in original labels).
    """
    n = complex.dim
    if n < 0:
        return False, frozenset()
    if n == 0:
        return len(complex.facets) == 1, frozenset()
    bfaces = boundary_faces(complex)
    if not bfaces:
        return False, frozenset()
    if any(reduced_betti(complex)):
        return False, bfaces
    ridges = [f for f in bfaces if len(f) == n]
    bcomplex, _ = _relabeled_from_faces(ridges)
    if not is_homology_sphere(bcomplex) or bcomplex.dim != n - 1:
        return False, bfaces
    for sigma in complex.all_faces():
        lk, _ = link(complex, sigma)
        if frozenset(sigma) in bfaces:
            if any(reduced_betti(lk)):
                return False, bfaces
        elif reduced_betti(lk) != sphere_betti(n - len(sigma)):
            return False, bfaces
    return True, bfaces


def _relabeled_from_faces(faces):
    from .complexes import _relabel
    return _relabel([frozenset(f) for f in faces])


def orientation_class_dim(complex: SimplicialComplex) -> int:
    """dim H_{top}(complex; Q); 1 means Q-orientable."""
    if not is_connected(complex):
        raise ValueError("complex is not connected")
    if not is_homology_manifold(complex):
        raise ValueError("complex is not a rational homology manifold")
    return reduced_betti(complex)[complex.dim + 1]


def reduced_betti_of_subset(complex: SimplicialComplex, subset) -> tuple[int, ...]:
    """Reduced Betti numbers of the full subcomplex on a vertex subset."""
    sub, _ = full_subcomplex(complex, subset)
    return reduced_betti(sub)


def euler_characteristic_reduced(complex: SimplicialComplex) -> int:
    """-1 + sum_k (-1)^k f_k, which must match the alternating betti sum."""
    total = -1
    for k, fk in enumerate(f_vector(complex)):
        total += (-1) ** k * fk
    return total
