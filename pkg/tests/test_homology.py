"""Reduced homology and the classification predicates."""

import pytest

from facering.complexes import (boundary_simplex, cone, cross_polytope_boundary,
                                from_facets, link)
from facering.homology import (boundary_matrix, boundary_faces,
                               euler_characteristic_reduced, is_buchsbaum,
                               is_cohen_macaulay, is_homology_ball,
                               is_homology_manifold, is_homology_sphere,
                               orientation_class_dim, reduced_betti,
                               sphere_betti)
from facering.linalg import RationalMatrix


def test_boundary_matrix_triangle_edge_map():
    c = boundary_simplex(2)
    m = boundary_matrix(c, 1)
    assert m.shape == (3, 3)
    assert m.rank() == 2


def test_boundary_matrix_augmentation_row():
    c = boundary_simplex(2)
    m = boundary_matrix(c, 0)
    assert m.shape == (1, 3)
    assert all(x == 1 for x in m.rows[0])


def test_chain_complex_identity(octahedron):
    for k in range(octahedron.dim + 1):
        prod = boundary_matrix(octahedron, k) * boundary_matrix(octahedron, k + 1)
        assert prod == RationalMatrix.zeros(*prod.shape)


def test_boundary_matrix_range_errors(octahedron):
    with pytest.raises(ValueError):
        boundary_matrix(octahedron, -1)
    with pytest.raises(ValueError):
        boundary_matrix(octahedron, octahedron.dim + 2)


@pytest.mark.parametrize("builder, betti", [
    (lambda: cross_polytope_boundary(3), (0, 0, 0, 1)),       # S^2
    (lambda: boundary_simplex(2), (0, 0, 1)),                 # S^1
    (lambda: from_facets(2, [{1}, {2}]), (0, 1)),             # two points
])
def test_reduced_betti_known_spaces(builder, betti):
    assert reduced_betti(builder()) == betti


def test_reduced_betti_torus(torus):
    assert reduced_betti(torus) == (0, 0, 2, 1)


def test_euler_identity_matches_betti(torus, octahedron, four_cycle):
    for c in (torus, octahedron, four_cycle):
        betti = reduced_betti(c)
        alt = sum((-1) ** (k - 1) * b for k, b in enumerate(betti))
        assert alt == euler_characteristic_reduced(c)


def test_cohen_macaulay(octahedron, torus):
    assert is_cohen_macaulay(octahedron)
    assert not is_cohen_macaulay(torus)  # middle homology obstructs
    two_edges = from_facets(4, [{1, 2}, {3, 4}])
    assert not is_cohen_macaulay(two_edges)


def test_buchsbaum(octahedron, torus):
    assert is_buchsbaum(torus)
    assert is_buchsbaum(octahedron)
    nonpure = from_facets(4, [{1, 2, 3}, {3, 4}])
    assert not is_buchsbaum(nonpure)
    wedge = from_facets(5, [{1, 2, 3}, {3, 4, 5}])
    assert not is_buchsbaum(wedge)  # the shared vertex has a disconnected link


def test_sphere_and_manifold(octahedron, torus):
    assert is_homology_sphere(octahedron)
    assert is_homology_manifold(torus)
    assert not is_homology_sphere(torus)
    assert is_homology_sphere(from_facets(2, [{1}, {2}]))  # S^0


def test_cm_implies_buchsbaum_and_sphere_implies_cm(octahedron, cross4, cyclic47):
    for c in (octahedron, cross4, cyclic47):
        assert is_homology_sphere(c)
        assert is_cohen_macaulay(c)
        assert is_buchsbaum(c)


def test_full_triangle_is_ball(full_triangle):
    ball, bfaces = is_homology_ball(full_triangle)
    assert ball
    ridges = sorted(tuple(sorted(f)) for f in bfaces if len(f) == 2)
    assert ridges == [(1, 2), (1, 3), (2, 3)]


def test_single_edge_and_path_are_balls():
    edge = from_facets(2, [{1, 2}])
    ball, bfaces = is_homology_ball(edge)
    assert ball
    assert sorted(tuple(sorted(f)) for f in bfaces if f) == [(1,), (2,)]
    path = from_facets(3, [{1, 2}, {2, 3}])
    assert is_homology_ball(path)[0]


def test_sphere_is_not_ball(octahedron, four_cycle):
    assert not is_homology_ball(octahedron)[0]
    assert not is_homology_ball(four_cycle)[0]


def test_boundary_faces_empty_for_closed(octahedron):
    assert boundary_faces(octahedron) == frozenset()


def test_orientation_class(octahedron, torus):
    assert orientation_class_dim(octahedron) == 1
    assert orientation_class_dim(torus) == 1
    disjoint = from_facets(6, [{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}])
    with pytest.raises(ValueError):
        orientation_class_dim(disjoint)


def test_link_of_facet_is_minus_one_sphere(octahedron):
    lk, _ = link(octahedron, {1, 2, 3})
    assert reduced_betti(lk) == sphere_betti(-1) == (1,)


def test_cone_is_acyclic(octahedron):
    assert not any(reduced_betti(cone(octahedron)))


def test_two_triangles_along_edge_is_ball():
    c = from_facets(4, [{1, 2, 3}, {2, 3, 4}])
    ball, bfaces = is_homology_ball(c)
    assert ball
    ridges = sorted(tuple(sorted(f)) for f in bfaces if len(f) == 2)
    assert ridges == [(1, 2), (1, 3), (2, 4), (3, 4)]


def test_projective_plane_rational_homology(projective_plane):
    # over Q the projective plane is acyclic but still a closed manifold
    assert reduced_betti(projective_plane) == (0, 0, 0, 0)
    assert is_homology_manifold(projective_plane)
    assert not is_homology_sphere(projective_plane)
    assert is_cohen_macaulay(projective_plane)
    assert orientation_class_dim(projective_plane) == 0
