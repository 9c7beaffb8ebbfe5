"""Cross-module invariants: theorem-level properties on the complex zoo,
plus randomized structural properties."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from facering.complexes import (boundary_simplex, cone,
                                cross_polytope_boundary, csaszar_torus,
                                cyclic_polytope_boundary, f_vector,
                                from_facets, g_vector, h_vector, join)
from facering.face_ring import (artinian_dims, artinian_reduction,
                                graded_basis, is_m_vector, random_lsop,
                                schenzel_predicted, socle_dims,
                                squarefree_monomial)
from facering.homology import (euler_characteristic_reduced, is_buchsbaum,
                               is_cohen_macaulay, is_homology_manifold,
                               is_homology_sphere, orientation_class_dim,
                               reduced_betti)
from facering.lefschetz import WLP_CERTIFIED, find_wle, full_rank_table
from math import comb


def sphere_zoo():
    return [boundary_simplex(2), boundary_simplex(3),
            cross_polytope_boundary(2), cross_polytope_boundary(3),
            cyclic_polytope_boundary(4, 7),
            join(boundary_simplex(1), boundary_simplex(2))]


def cm_zoo():
    return sphere_zoo() + [cone(boundary_simplex(2)),
                           from_facets(3, [{1, 2, 3}])]


def buchsbaum_zoo():
    return [csaszar_torus()] + sphere_zoo()


# -- random complex strategy ------------------------------------------------------


@st.composite
def random_complexes(draw):
    m = draw(st.integers(min_value=2, max_value=7))
    size = draw(st.integers(min_value=1, max_value=min(3, m)))
    n_facets = draw(st.integers(min_value=1, max_value=8))
    facets = [frozenset(draw(st.sets(st.integers(1, m), min_size=size,
                                     max_size=size)))
              for _ in range(n_facets)]
    used = sorted(set().union(*facets))
    relabel = {v: i + 1 for i, v in enumerate(used)}
    return from_facets(len(used), [{relabel[v] for v in f} for f in facets])


@given(random_complexes())
@settings(max_examples=60, deadline=None)
def test_random_complex_invariants(c):
    assert all(not any(f < g for g in c.facets) for f in c.facets)
    f = f_vector(c)
    h = h_vector(c)
    assert sum(h) == f[-1]
    betti = reduced_betti(c)
    assert sum((-1) ** (k - 1) * b for k, b in enumerate(betti)) == \
        euler_characteristic_reduced(c)


@given(random_complexes())
@settings(max_examples=30, deadline=None)
def test_cone_kills_homology_and_shifts_f(c):
    cc = cone(c)
    assert not any(reduced_betti(cc))
    f = (1,) + f_vector(c) + (0,)
    assert f_vector(cc) == tuple(f[i] + f[i + 1] for i in range(len(f) - 1))


# -- classification chain -----------------------------------------------------------


def test_spheres_are_cm_and_buchsbaum():
    for c in sphere_zoo():
        assert is_homology_sphere(c)
        assert is_cohen_macaulay(c)
        assert is_buchsbaum(c)


def test_manifolds_are_buchsbaum():
    for c in buchsbaum_zoo():
        if is_homology_manifold(c):
            assert is_buchsbaum(c)


def test_dehn_sommerville_for_spheres():
    for c in sphere_zoo():
        h = h_vector(c)
        assert h == tuple(reversed(h))


# -- Stanley / Schenzel across seeds --------------------------------------------------


@pytest.mark.parametrize("seed", (1, 2, 3))
def test_stanley_on_cm_zoo(seed):
    for c in cm_zoo():
        lam = random_lsop(c, 6, seed=seed).matrix
        assert artinian_dims(c, lam) == h_vector(c)


@pytest.mark.parametrize("seed", (1, 2))
def test_schenzel_on_buchsbaum_zoo(seed):
    for c in buchsbaum_zoo():
        lam = random_lsop(c, 6, seed=seed).matrix
        predicted = schenzel_predicted(h_vector(c), reduced_betti(c), c.dim + 1)
        assert artinian_dims(c, lam) == predicted


def test_socle_bound_and_manifold_equality():
    for c in buchsbaum_zoo():
        lam = random_lsop(c, 6, seed=4).matrix
        socle = socle_dims(c, lam)
        betti = reduced_betti(c)
        d = c.dim + 1
        for p in range(1, d):
            bound = comb(d, p) * betti[p]
            assert socle[p] >= bound
            if is_homology_manifold(c) and orientation_class_dim(c) == 1:
                assert socle[p] == bound


# -- squarefree spanning ----------------------------------------------------------------


def test_squarefree_monomials_span_quotients():
    for c in (cross_polytope_boundary(3), cyclic_polytope_boundary(4, 7)):
        lam = random_lsop(c, 6, seed=5).matrix
        ar = artinian_reduction(c, lam)
        for j in range(1, ar.d + 1):
            piece = ar.piece(j)
            ech = piece.echelon.copy()
            added = 0
            for face in c.faces(j - 1):
                pos = piece.index[squarefree_monomial(face, c.m)]
                if ech.insert({pos: 1}) is not None:
                    added += 1
            assert added == piece.dim


# -- WLP properties ------------------------------------------------------------------------


def certified_zoo():
    out = []
    for c in sphere_zoo():
        lam = random_lsop(c, 8, seed=6).matrix
        cert = find_wle(c, lam, 30, 8, seed=6)
        if cert.verdict == WLP_CERTIFIED:
            out.append((c, lam, cert))
    return out


def test_scaling_invariance_of_ranks():
    for c, lam, cert in certified_zoo():
        table = full_rank_table(c, lam, cert.omega)
        scaled = full_rank_table(c, lam, [5 * x for x in cert.omega])
        assert [r.rank for r in table] == [r.rank for r in scaled]


def test_middle_criterion_equals_full_rank_everywhere():
    # the two characterizations of a weak Lefschetz element must agree
    for c, lam, cert in certified_zoo():
        table = full_rank_table(c, lam, cert.omega)
        assert all(r.full_rank for r in table)
        d = c.dim + 1
        mid = [r for r in table if r.i == d // 2][0]
        assert mid.surjective


def test_generic_combination_robustness():
    rng = random.Random(99)
    for c, lam, cert in certified_zoo()[:3]:
        omega1 = [rng.randint(-8, 8) for _ in range(c.m)]
        good = 0
        for _ in range(10):
            t = rng.randint(1, 1000)
            omega = [a + t * b for a, b in zip(cert.omega, omega1)]
            table = full_rank_table(c, lam, omega)
            good += all(r.full_rank for r in table)
        assert good >= 9


def test_certified_spheres_have_symmetric_dims():
    for c, lam, cert in certified_zoo():
        dims = artinian_dims(c, lam)
        assert dims == tuple(reversed(dims))


def test_certified_g_vectors_are_m_vectors():
    for c, lam, cert in certified_zoo():
        assert is_m_vector(g_vector(c))


# -- Hilbert series coefficients --------------------------------------------------------------


def test_hilbert_expansion_matches_counts():
    from facering.face_ring import hilbert_series_coefficient
    for c in (boundary_simplex(2), cross_polytope_boundary(3)):
        for k in range(c.dim + 3):
            assert hilbert_series_coefficient(c, k) == len(graded_basis(c, k))
