"""Abstract simplicial complexes, invariants, constructors and subdivisions.

Complexes store their inclusion-maximal faces only; lower faces are
enumerated on demand and memoized.  Vertices are labeled 1..m.  Subdivision
operations label each new vertex with the next free integer and record a
provenance tag (the subdivided face, as a tuple in the labels current at
subdivision time), which is what makes order-independence of the partial
barycentric subdivision a testable statement.
"""

from __future__ import annotations

import hashlib
import itertools
import json
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Callable, Iterable

Face = frozenset[int]


@dataclass(frozen=True)
class SimplicialComplex:
    """Simplicial complex on vertex set {1..m}, given by its facets.

    ``tags`` carries provenance records for vertices created by subdivisions
    and is ignored by equality and hashing.  The complex {emptyset} is
    represented by m = 0 with the single empty facet.
    """

    m: int
    facets: frozenset[Face]
    tags: tuple[tuple[int, tuple[int, ...]], ...] = field(
        default=(), compare=False)

    @property
    def dim(self) -> int:
        return max(len(f) for f in self.facets) - 1

    @property
    def is_pure(self) -> bool:
        sizes = {len(f) for f in self.facets}
        return len(sizes) == 1

    def facet_list(self) -> list[tuple[int, ...]]:
        return sorted(tuple(sorted(f)) for f in self.facets)

    def is_face(self, sigma: Iterable[int]) -> bool:
        s = frozenset(sigma)
        return any(s <= f for f in self.facets)

    def faces(self, k: int) -> tuple[tuple[int, ...], ...]:
        """All k-dimensional faces as sorted tuples, in lexicographic order."""
        return _faces(self, k)

    def all_faces(self) -> list[tuple[int, ...]]:
        """Every nonempty face, by dimension then lexicographically."""
        out = []
        for k in range(self.dim + 1):
            out.extend(self.faces(k))
        return out

    def tag_map(self) -> dict[int, tuple[int, ...]]:
        return dict(self.tags)

    def __repr__(self) -> str:
        return f"SimplicialComplex(m={self.m}, facets={self.facet_list()})"


EMPTY_COMPLEX = SimplicialComplex(0, frozenset({frozenset()}))


@lru_cache(maxsize=None)
def _faces(complex: SimplicialComplex, k: int) -> tuple[tuple[int, ...], ...]:
    if k < -1 or k > complex.dim:
        return ()
    if k == -1:
        return ((),)
    found = set()
    for f in complex.facets:
        if len(f) >= k + 1:
            found.update(itertools.combinations(sorted(f), k + 1))
    return tuple(sorted(found))


def from_facets(m: int, facets: Iterable[Iterable[int]],
                tags: tuple[tuple[int, tuple[int, ...]], ...] = ()) -> SimplicialComplex:
    """Build a complex, reducing to maximal facets and validating labels."""
    sets = [frozenset(f) for f in facets]
    if not sets:
        raise ValueError("facet list is empty")
    for f in sets:
        if not f:
            raise ValueError("empty facet")
        if not all(isinstance(v, int) and 1 <= v <= m for v in f):
            raise ValueError(f"facet {sorted(f)} references a vertex outside 1..{m}")
    maximal = {f for f in sets if not any(f < g for g in sets)}
    used = set().union(*maximal)
    if used != set(range(1, m + 1)):
        missing = sorted(set(range(1, m + 1)) - used)
        raise ValueError(f"vertices {missing} appear in no facet")
    return SimplicialComplex(m, frozenset(maximal), tags)


# -- f/h/g vectors -------------------------------------------------------------


def f_vector(complex: SimplicialComplex) -> tuple[int, ...]:
    """(f_0, ..., f_{d-1}): number of i-dimensional faces."""
    return tuple(len(complex.faces(k)) for k in range(complex.dim + 1))


def h_vector(complex: SimplicialComplex) -> tuple[int, ...]:
    """h from f through sum_i f_{i-1} (t-1)^{d-i} = sum_k h_k t^{d-k}."""
    f = (1,) + f_vector(complex)
    d = complex.dim + 1
    return tuple(sum((-1) ** (k - i) * comb(d - i, k - i) * f[i]
                     for i in range(k + 1))
                 for k in range(d + 1))


def g_vector(complex: SimplicialComplex) -> tuple[int, ...]:
    """(g_0, ..., g_{floor(d/2)}) with g_0 = 1 and g_i = h_i - h_{i-1}."""
    h = h_vector(complex)
    d = complex.dim + 1
    return (1,) + tuple(h[i] - h[i - 1] for i in range(1, d // 2 + 1))


# -- links, stars, joins -------------------------------------------------------


def _relabel(face_sets: Iterable[Face], tags=()) -> tuple[SimplicialComplex, tuple[int, ...]]:
    """Relabel onto a dense range; returns (complex, old labels in new order)."""
    face_sets = list(face_sets)
    vertices = sorted(set().union(*face_sets)) if face_sets else []
    if not vertices:
        return EMPTY_COMPLEX, ()
    new = {v: i + 1 for i, v in enumerate(vertices)}
    relabeled = [frozenset(new[v] for v in f) for f in face_sets]
    return from_facets(len(vertices), relabeled), tuple(vertices)


def link(complex: SimplicialComplex, sigma: Iterable[int]) -> tuple[SimplicialComplex, tuple[int, ...]]:
    """Link of a face, relabeled densely; second value maps new -> old labels."""
    s = frozenset(sigma)
    if not complex.is_face(s):
        raise ValueError(f"{sorted(s)} is not a face")
    cofacets = [f - s for f in complex.facets if s <= f]
    if cofacets == [frozenset()]:
        return EMPTY_COMPLEX, ()
    return _relabel([f for f in cofacets if f])


def star(complex: SimplicialComplex, sigma: Iterable[int]) -> tuple[SimplicialComplex, tuple[int, ...]]:
    """Closed star of a face, relabeled densely."""
    s = frozenset(sigma)
    if not complex.is_face(s):
        raise ValueError(f"{sorted(s)} is not a face")
    return _relabel([f for f in complex.facets if s <= f])


def full_subcomplex(complex: SimplicialComplex, subset: Iterable[int]) -> tuple[SimplicialComplex, tuple[int, ...]]:
    """Faces contained in the given vertex subset, relabeled densely."""
    j = frozenset(subset)
    if not j:
        return EMPTY_COMPLEX, ()
    restricted = {f & j for f in complex.facets}
    restricted.discard(frozenset())
    if not restricted:
        return EMPTY_COMPLEX, ()
    maximal = [f for f in restricted if not any(f < g for g in restricted)]
    return _relabel(maximal)


def join(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    """Join, with the second factor shifted to labels m_a+1 .. m_a+m_b."""
    shift = a.m
    facets = [fa | frozenset(v + shift for v in fb)
              for fa in a.facets for fb in b.facets]
    facets = [f for f in facets if f] or [frozenset()]
    if facets == [frozenset()]:
        return EMPTY_COMPLEX
    return from_facets(a.m + b.m, facets)


def cone(complex: SimplicialComplex) -> SimplicialComplex:
    """Cone with apex m+1."""
    apex = complex.m + 1
    return from_facets(apex, [f | {apex} for f in complex.facets])


def missing_faces(complex: SimplicialComplex) -> list[tuple[int, ...]]:
    """Minimal non-faces, sorted."""
    faces = {frozenset(f) for f in complex.all_faces()}
    faces.add(frozenset())
    candidates = set()
    for f in faces:
        for v in range(1, complex.m + 1):
            if v not in f:
                t = f | {v}
                if t not in faces:
                    candidates.add(t)
    out = []
    for t in sorted(candidates, key=lambda s: (len(s), tuple(sorted(s)))):
        if t in faces:
            continue
        if all(t - {v} in faces for v in t):
            out.append(tuple(sorted(t)))
    return out


# -- subdivisions ---------------------------------------------------------------


def stellar_subdivide(complex: SimplicialComplex, sigma: Iterable[int]) -> SimplicialComplex:
    """Stellar subdivision at a nonempty face.

    A zero-dimensional face leaves the complex unchanged; otherwise the new
    vertex is labeled m+1 and tagged with the subdivided face.
    """
    s = frozenset(sigma)
    if not s:
        raise ValueError("face must be nonempty")
    if not complex.is_face(s):
        raise ValueError(f"{sorted(s)} is not a face")
    if len(s) == 1:
        return complex
    v_new = complex.m + 1
    facets = [f for f in complex.facets if not s <= f]
    for f in complex.facets:
        if s <= f:
            facets.extend(frozenset({v_new}) | (f - {v}) for v in s)
    tags = complex.tags + ((v_new, tuple(sorted(s))),)
    return from_facets(v_new, facets, tags)


def partial_barycentric(complex: SimplicialComplex, i: int,
                        order_key: Callable[[tuple[int, ...]], object] | None = None
                        ) -> SimplicialComplex:
    """i-th partial barycentric subdivision of a pure complex.

    Stage r subdivides every face of the *original* complex of dimension
    d - r, for r = 1..i.  The default processing order is lexicographic;
    ``order_key`` overrides it (the result is order-independent up to the
    provenance-based canonical relabeling).
    """
    if not complex.is_pure:
        raise ValueError("partial barycentric subdivision needs a pure complex")
    d = complex.dim + 1
    if not 1 <= i <= d:
        raise ValueError(f"stage must satisfy 1 <= i <= {d}")
    current = complex
    for r in range(1, i + 1):
        stage_faces = list(complex.faces(d - r))
        stage_faces.sort(key=order_key if order_key is not None else lambda t: t)
        for sigma in stage_faces:
            current = stellar_subdivide(current, sigma)
    return current


def barycentric(complex: SimplicialComplex) -> SimplicialComplex:
    return partial_barycentric(complex, complex.dim + 1)


def canonical_by_tags(complex: SimplicialComplex) -> SimplicialComplex:
    """Relabel tagged vertices in tag order; base vertices keep their labels.

    Two subdivision runs that created the same tagged faces in different
    orders map to the same canonical complex.
    """
    tag_map = complex.tag_map()
    if len(set(tag_map.values())) != len(tag_map):
        raise ValueError("duplicate provenance tags; cannot canonicalize")
    base = [v for v in range(1, complex.m + 1) if v not in tag_map]
    if base != list(range(1, len(base) + 1)):
        raise ValueError("base vertices are not a dense initial range")
    order = sorted(tag_map, key=lambda v: tag_map[v])
    relabel = {v: v for v in base}
    relabel.update({v: len(base) + 1 + k for k, v in enumerate(order)})
    facets = [frozenset(relabel[v] for v in f) for f in complex.facets]
    tags = tuple(sorted((relabel[v], t) for v, t in complex.tags))
    return from_facets(complex.m, facets, tags)


# -- generators -----------------------------------------------------------------


def boundary_simplex(n: int) -> SimplicialComplex:
    """Boundary of the n-simplex on n+1 vertices."""
    if n < 1:
        raise ValueError("n must be >= 1")
    verts = range(1, n + 2)
    return from_facets(n + 1, itertools.combinations(verts, n))


def cross_polytope_boundary(d: int) -> SimplicialComplex:
    """Boundary of the d-dimensional cross-polytope; vertices i, i+d are antipodal."""
    if d < 1:
        raise ValueError("d must be >= 1")
    pairs = [(i, i + d) for i in range(1, d + 1)]
    return from_facets(2 * d, [set(choice) for choice in itertools.product(*pairs)])


def cyclic_polytope_boundary(d: int, n: int) -> SimplicialComplex:
    """Boundary of the cyclic d-polytope on n vertices via Gale's evenness condition."""
    if not n > d >= 2:
        raise ValueError("need n > d >= 2")
    facets = []
    for s in itertools.combinations(range(1, n + 1), d):
        inside = set(s)
        outside = [v for v in range(1, n + 1) if v not in inside]
        ok = True
        for a, b in itertools.combinations(outside, 2):
            if sum(1 for v in s if a < v < b) % 2:
                ok = False
                break
        if ok:
            facets.append(inside)
    return from_facets(n, facets)


def csaszar_torus() -> SimplicialComplex:
    """The 7-vertex triangulated torus (Csaszar / Moebius), 14 facets."""
    facets = []
    for i in range(7):
        facets.append({i % 7 + 1, (i + 1) % 7 + 1, (i + 3) % 7 + 1})
        facets.append({i % 7 + 1, (i + 2) % 7 + 1, (i + 3) % 7 + 1})
    return from_facets(7, facets)


# -- file formats -----------------------------------------------------------------


def to_text(complex: SimplicialComplex) -> str:
    lines = [str(complex.m)]
    lines.extend(" ".join(map(str, f)) for f in complex.facet_list())
    return "\n".join(lines) + "\n"


def parse_text(text: str) -> SimplicialComplex:
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise ValueError("empty complex file")
    m = int(lines[0])
    facets = [[int(tok) for tok in ln.split()] for ln in lines[1:]]
    return from_facets(m, facets)


def to_json_obj(complex: SimplicialComplex) -> dict:
    return {"vertices": complex.m,
            "facets": [list(f) for f in complex.facet_list()]}


def from_json_obj(obj: dict) -> SimplicialComplex:
    return from_facets(int(obj["vertices"]), obj["facets"])


def read_complex(path: str) -> SimplicialComplex:
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    if text.lstrip().startswith("{"):
        return from_json_obj(json.loads(text))
    return parse_text(text)


def complex_hash(complex: SimplicialComplex) -> str:
    """SHA-256 of the canonical text form; identifies complexes in reports."""
    return hashlib.sha256(to_text(complex).encode()).hexdigest()
