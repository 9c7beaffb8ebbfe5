"""facering: exact-arithmetic face enumeration machinery.

Simplicial complexes and subdivisions, rational simplicial homology,
Stanley-Reisner rings with Artinian reductions, weak Lefschetz certificates,
and moment-angle cohomology tables, all over Q with no floating point.
"""

from .complexes import (SimplicialComplex, boundary_simplex, cone,
                        cross_polytope_boundary, csaszar_torus,
                        cyclic_polytope_boundary, f_vector, from_facets,
                        full_subcomplex, g_vector, h_vector, join, link,
                        missing_faces, partial_barycentric, read_complex,
                        star, stellar_subdivide)
from .face_ring import (ArtinianReduction, artinian_dims, graded_basis,
                        interior_ideal_dims, is_integral_characteristic,
                        is_lsop, is_m_vector, mult_map, pseudopower,
                        random_lsop, schenzel_predicted, socle_dims,
                        star_restriction)
from .homology import (boundary_matrix, is_buchsbaum, is_cohen_macaulay,
                       is_homology_ball, is_homology_manifold,
                       is_homology_sphere, orientation_class_dim,
                       reduced_betti)
from .lefschetz import (basis_link_check, duality_pairing_check, find_wle,
                        g_conjecture_check, join_wle, monomial_basis_faces,
                        partial_bary_wlp, pd_quotient_dims,
                        star_injection_check, stellar_set_wlp,
                        stellar_wlp_transfer)
from .linalg import RationalMatrix, random_int_matrix
from .moment_angle import (buchsbaum_toric_dims, characteristic_examples,
                           cohomology_basis, euler_hilbert_crosscheck,
                           hochster_table, union_product)

__version__ = "0.1.0"
