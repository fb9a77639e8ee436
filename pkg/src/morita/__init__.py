"""Monoids, bimodules and balanced tensor products in concrete finite
monoidal categories, together with the marked nerve they assemble into and a
mechanical verifier for its horn-filling, thinness and saturation properties.

Everything is exact: objects and morphisms are finite value types, quotients
are canonical representatives, and every law is a decidable equality of
composite morphisms.
"""

from .errors import *  # noqa: F401,F403
from .kernel import (Coequalizer, MonoidalInstance, check_bifunctoriality,
                     check_coherence, check_naturality, check_preserves_coequalizer,
                     generic_is_epi)
from .instances import (finset_disjoint, finvect, opposite_instance, product_instance,
                        FinSetObj, FinFunction, MatrixMor, OpMor, OppositeInstance,
                        ProdMor, ProductInstance, finset_obj, finfunction, matrix)
from .reports import CheckResult, Report
from .bimodules import (Bimodule, BimoduleMap, Monoid, as_left_module,
                        as_right_module, compose_maps, free_bimodule, free_product,
                        identity_bimodule, identity_map, invert_map, is_iso_map,
                        module_map, monoid, trivial_monoid, validate_bimodule,
                        validate_bimodule_map, validate_monoid)
from .balanced import (BalancedTensor, assoc_balanced, assoc_balanced_inv,
                       assoc_general, assoc_mixed, balanced_tensor,
                       check_split_unit, tensor_of_maps, unit_left, unit_right,
                       whisker_left, whisker_right)
from .laws import (law_assoc_balanced, law_assoc_natural, law_composite_bimodule,
                   law_interchange, law_iso_transfer, law_mixed_assoc,
                   law_pentagon, law_reduction_one, law_reduction_two,
                   law_tensor_identity, law_tensor_of_maps,
                   law_triangle_transfer, law_triangle_transfer_right,
                   law_unit_isos, law_unitor_triangles)
from .witnesses import (EquivalenceWitness, enumerate_bimodule_maps,
                        enumerate_bimodules, find_bimodule_iso,
                        find_equivalence_witness, identity_witness,
                        validate_witness)
from .nerve import (Simplex1, Simplex2, Simplex3, Simplex4, coskeletal_fill,
                    degenerate, degenerate_edge, degenerate_four,
                    degenerate_tetrahedron, degenerate_triangle, face, mark,
                    triangle_equation_sides, validate_simplex2, validate_simplex3,
                    validate_simplex4)
from .horns import FillerResult, Horn, fill_horn, horn_of, refill_check
from .thinness import (saturate_cone, saturate_tetrahedron, thin_tetrahedron,
                       thin_triangle)
from .oracle import QuotientDescription, quotient_oracle
from .mutations import SwappedAssociator, apply_mutations
from .fileio import InstanceFile, load_instance
from .verify import (calculus_tuples, composable_pairs, enumerate_fillers,
                     generate_bimodules, generate_maps, generate_monoid_classes,
                     generate_monoids, invertible_edges, verify_brute_force,
                     verify_calculus, verify_coherence, verify_complicial,
                     verify_nerve, verify_oracle)
from .cli import run_suite

__version__ = "0.1.0"
