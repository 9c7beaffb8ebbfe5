"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Every numeric comparison is exact (integer or rational equality); the stated
wall-clock bounds are asserted as upper limits.  Certificate searches run
with fixed seeds, and an INCONCLUSIVE verdict counts as failure for the
specific small instances pinned here.
"""

import itertools
import random
import time
from math import comb

from facering.complexes import (boundary_simplex, canonical_by_tags,
                                cross_polytope_boundary, csaszar_torus,
                                cyclic_polytope_boundary,
                                from_facets, h_vector, join,
                                partial_barycentric, stellar_subdivide)
from facering.face_ring import (artinian_dims, interior_ideal_dims,
                                is_m_vector, macaulay_decomposition,
                                pseudopower, random_lsop, schenzel_predicted,
                                socle_dims)
from facering.homology import reduced_betti
from facering.lefschetz import (WLP_CERTIFIED, basis_link_check,
                                duality_pairing_check, find_wle, join_wle,
                                partial_bary_wlp,
                                pd_quotient_dims, star_injection_check,
                                stellar_set_wlp, stellar_wlp_transfer)
from facering.moment_angle import (buchsbaum_toric_dims, cohomology_basis,
                                   euler_hilbert_crosscheck,
                                   moment_angle_poincare, union_product)


class Criterion:
    """Context manager printing one PASS/FAIL line with the elapsed time."""

    def __init__(self, number, label, budget_seconds):
        self.number = number
        self.label = label
        self.budget = budget_seconds

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.start
        status = "PASS" if exc_type is None and elapsed < self.budget else "FAIL"
        print(f"{status} criterion {self.number}: {self.label} "
              f"({elapsed:.2f}s / budget {self.budget}s)")
        if exc_type is None:
            assert elapsed < self.budget, \
                f"criterion {self.number} exceeded its {self.budget}s budget"
        return False


def test_criterion_01_dehn_sommerville():
    with Criterion(1, "Dehn-Sommerville symmetry", 1.0):
        assert h_vector(cross_polytope_boundary(3)) == (1, 3, 3, 1)
        assert h_vector(cross_polytope_boundary(4)) == (1, 4, 6, 4, 1)
        for c in (cross_polytope_boundary(3), cross_polytope_boundary(4),
                  cyclic_polytope_boundary(4, 7)):
            h = h_vector(c)
            assert h == tuple(reversed(h))


def test_criterion_02_stanley():
    with Criterion(2, "Stanley: reduction dims equal h", 5.0):
        hexagon = partial_barycentric(boundary_simplex(2), 1)
        for c in (cross_polytope_boundary(3), cross_polytope_boundary(4),
                  hexagon):
            h = h_vector(c)
            for seed in (1, 2, 3):
                lam = random_lsop(c, 10, seed=seed).matrix
                assert artinian_dims(c, lam) == h


def test_criterion_03_schenzel():
    with Criterion(3, "Schenzel dims on the 7-vertex torus", 5.0):
        torus = csaszar_torus()
        predicted = schenzel_predicted(h_vector(torus), reduced_betti(torus), 3)
        assert predicted == (1, 4, 10, 1)
        for seed in (1, 2, 3):
            lam = random_lsop(torus, 10, seed=seed).matrix
            assert artinian_dims(torus, lam) == (1, 4, 10, 1)


def test_criterion_04_socle_equality():
    with Criterion(4, "socle equality and duality quotient on the torus", 10.0):
        torus = csaszar_torus()
        lam = random_lsop(torus, 10, seed=1).matrix
        socle = socle_dims(torus, lam)
        assert socle[2] == 6 == comb(3, 2) * reduced_betti(torus)[2]
        dims, nondegenerate = pd_quotient_dims(torus, lam)
        assert dims == (1, 4, 4, 1)
        assert nondegenerate


def test_criterion_05_wlp_certificates():
    with Criterion(5, "weak Lefschetz certificates on four spheres", 30.0):
        for c in (boundary_simplex(2), cross_polytope_boundary(3),
                  cross_polytope_boundary(4), cyclic_polytope_boundary(4, 7)):
            lam = random_lsop(c, 10, seed=1).matrix
            cert = find_wle(c, lam, trials=50, bound=10, seed=1)
            assert cert.verdict == WLP_CERTIFIED, f"inconclusive on {c}"


def test_criterion_06_join_wle():
    with Criterion(6, "coordinate Lefschetz element on joins", 5.0):
        square = join(boundary_simplex(1), boundary_simplex(1))
        assert join_wle(square, simplex_vertices=(1, 2), seed=1).verdict \
            == WLP_CERTIFIED
        prism = join(boundary_simplex(2), boundary_simplex(1))
        assert join_wle(prism, simplex_vertices=(1, 2, 3), seed=1).verdict \
            == WLP_CERTIFIED


def test_criterion_07_subdivision_theorems():
    with Criterion(7, "subdivision experiments certify", 120.0):
        octahedron = cross_polytope_boundary(3)
        r1 = partial_bary_wlp(octahedron, 2, trials=50, bound=10, seed=1)
        assert r1.certified and not r1.flags and r1.g_is_m_vector
        cross4 = cross_polytope_boundary(4)
        r2 = partial_bary_wlp(cross4, 2, trials=50, bound=10, seed=1)
        assert r2.certified and not r2.flags
        assert r2.wle_required and r2.injectivity[-1].injective
        assert r2.g_is_m_vector
        r3 = stellar_set_wlp(octahedron, 1, trials=50, bound=10, seed=1)
        assert r3.certified and not r3.flags and r3.basis_shape_ok
        r4 = stellar_wlp_transfer(octahedron, (1, 2, 3), "a", trials=50,
                                  bound=10, seed=1)
        assert r4.base_certificate.verdict == WLP_CERTIFIED
        assert r4.subdivided_certificate.verdict == WLP_CERTIFIED


def test_criterion_08_hochster():
    with Criterion(8, "moment-angle Poincare polynomials", 10.0):
        def poly(coeffs):
            return {p: c for p, c in enumerate(coeffs) if c}

        assert poly(moment_angle_poincare(boundary_simplex(2))) == {0: 1, 5: 1}
        assert poly(moment_angle_poincare(boundary_simplex(3))) == {0: 1, 7: 1}
        square = cross_polytope_boundary(2)
        assert poly(moment_angle_poincare(square)) == {0: 1, 3: 2, 6: 1}
        for c in (boundary_simplex(2), boundary_simplex(3), square):
            assert euler_hilbert_crosscheck(c)


def test_criterion_09_union_product():
    with Criterion(9, "union product on the square", 1.0):
        square = cross_polytope_boundary(2)
        a = cohomology_basis(square, (1, 3), 0)[0]
        b = cohomology_basis(square, (2, 4), 0)[0]
        product = union_product(square, a, b)
        assert not product.is_zero
        assert product.degree + len(product.subset) + 1 == 6
        assert union_product(square, a, a).is_zero


def test_criterion_10_buchsbaum_toric_dims():
    with Criterion(10, "toric cohomology dimensions", 5.0):
        torus = csaszar_torus()
        lam = random_lsop(torus, 10, seed=1).matrix
        assert buchsbaum_toric_dims(torus, lam) == (1, 0, 4, 0, 10, 2, 1)
        for c in (cross_polytope_boundary(3), cyclic_polytope_boundary(4, 7)):
            lam = random_lsop(c, 10, seed=1).matrix
            dims = buchsbaum_toric_dims(c, lam)
            arts = artinian_dims(c, lam)
            assert all(dims[k] == 0 for k in range(1, len(dims), 2))
            assert tuple(dims[2 * j] for j in range(len(arts))) == arts


def test_criterion_11_duality_and_injections():
    with Criterion(11, "duality pairings, star injections, basis links", 30.0):
        octahedron = cross_polytope_boundary(3)
        lam = random_lsop(octahedron, 10, seed=1).matrix
        assert duality_pairing_check(octahedron, lam)
        cross4 = cross_polytope_boundary(4)
        lam4 = random_lsop(cross4, 10, seed=1).matrix
        assert duality_pairing_check(cross4, lam4)
        for i in range(1, 4):
            for k in range(3 - i + 1):
                assert star_injection_check(octahedron, lam, i, k)
        for k in (1, 2, 3):
            assert basis_link_check(octahedron, lam, k)


def test_criterion_12_interior_ideal():
    with Criterion(12, "interior ideal and Lefschetz duality", 5.0):
        triangle = from_facets(3, [{1, 2, 3}])
        lam = random_lsop(triangle, 10, seed=1).matrix
        assert interior_ideal_dims(triangle, lam) == (0, 0, 0, 1)
        assert interior_ideal_dims(triangle, lam) == \
            tuple(reversed(artinian_dims(triangle, lam)))
        subdivided = stellar_subdivide(triangle, {1, 2, 3})
        lam2 = random_lsop(subdivided, 10, seed=1).matrix
        assert interior_ideal_dims(subdivided, lam2) == \
            tuple(reversed(artinian_dims(subdivided, lam2)))


def _random_pure_complex(rng):
    m = rng.randint(3, 8)
    r = rng.randint(1, min(3, m - 1))
    count = min(rng.randint(1, 8), comb(m, r + 1))
    pool = [frozenset(f) for f in itertools.combinations(range(1, m + 1), r + 1)]
    facets = rng.sample(pool, count)
    used = sorted(set().union(*facets))
    relabel = {v: i + 1 for i, v in enumerate(used)}
    return from_facets(len(used), [{relabel[v] for v in f} for f in facets])


def _enumerate_decompositions(a, i):
    """All strictly decreasing binomial decompositions of a at level i."""
    results = []

    def search(rem, level, prev, acc):
        if rem == 0:
            results.append(tuple(acc))
            return
        if level < 1:
            return
        t = level
        while comb(t, level) <= rem and t < prev:
            acc.append((t, level))
            search(rem - comb(t, level), level - 1, t, acc)
            acc.pop()
            t += 1

    search(a, i, a + i + 2, [])
    return results


def test_criterion_13_property_suites():
    with Criterion(13, "order independence and pseudopower oracle", 60.0):
        rng = random.Random(2024)
        for _ in range(100):
            c = _random_pure_complex(rng)
            d = c.dim + 1
            stage = rng.randint(1, d)
            lex = partial_barycentric(c, stage)
            shuffled_keys = {}
            for k in range(d):
                faces = list(c.faces(k))
                rng.shuffle(faces)
                shuffled_keys.update({f: pos for pos, f in enumerate(faces)})
            other = partial_barycentric(c, stage,
                                        order_key=lambda t: shuffled_keys[t])
            assert canonical_by_tags(lex).facets == canonical_by_tags(other).facets
        for a in range(201):
            for i in range(1, 7):
                if a == 0:
                    assert pseudopower(a, i) == 0
                    continue
                decs = _enumerate_decompositions(a, i)
                assert len(decs) == 1, f"decomposition of {a} at level {i} not unique"
                assert tuple(macaulay_decomposition(a, i)) == decs[0]
                expected = sum(comb(t + 1, lv + 1) for t, lv in decs[0])
                assert pseudopower(a, i) == expected
