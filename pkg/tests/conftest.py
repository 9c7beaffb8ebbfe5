"""Shared complexes for the test suite."""

import pytest

from facering.complexes import (boundary_simplex, cross_polytope_boundary,
                                csaszar_torus, cyclic_polytope_boundary,
                                from_facets)


@pytest.fixture(scope="session")
def triangle_boundary():
    return boundary_simplex(2)


@pytest.fixture(scope="session")
def octahedron():
    return cross_polytope_boundary(3)


@pytest.fixture(scope="session")
def cross4():
    return cross_polytope_boundary(4)


@pytest.fixture(scope="session")
def cyclic47():
    return cyclic_polytope_boundary(4, 7)


@pytest.fixture(scope="session")
def torus():
    return csaszar_torus()


@pytest.fixture(scope="session")
def four_cycle():
    return from_facets(4, [{1, 2}, {2, 3}, {3, 4}, {1, 4}])


@pytest.fixture(scope="session")
def full_triangle():
    return from_facets(3, [{1, 2, 3}])


@pytest.fixture(scope="session")
def projective_plane():
    """The 6-vertex triangulation of the real projective plane."""
    return from_facets(6, [{1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {1, 4, 6},
                           {1, 5, 6}, {2, 3, 6}, {2, 4, 5}, {2, 5, 6},
                           {3, 4, 5}, {3, 4, 6}])
