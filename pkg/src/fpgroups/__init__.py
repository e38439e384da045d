"""Combinatorial group theory toolkit.

Finitely presented groups: free-group word arithmetic, Dehn's algorithm,
Todd-Coxeter coset enumeration, abelianization via Smith normal form,
Cayley diagram construction and verification, torus-knot-type normal forms,
knot group presentations from planar diagram codes, and brute-force Dehn
function estimation.
"""

from .words import Word, free_reduce, free_wp, invert, cyclic_reduce, \
    cyclic_permutations, conjugate_free, WordSyntaxError
from .presentations import Presentation, parse_presentation, relator_closure, \
    dehn_rules, dehn_reduce, wp_dehn, Verdict
from .abelian import exponent_matrix, smith_normal_form, abelian_invariants, \
    is_perfect, AbelianInvariants
from .coset import CosetTable, enumerate_cosets, group_order, wp_finite, \
    to_permutation_rep
from .cayley import CayleyDiagram, LabeledDigraph, build_ball, check_regular, \
    check_homogeneous, family_infinite, export_dot, diagram_to_json, \
    diagram_from_json, coset_oracle, free_oracle, torus_oracle, \
    free_product_oracle
from .torus import FreeProductWord, TorusNormalForm, nf_normalize, nf_multiply, \
    nf_inverse, wp_torus, project_to_free_product, torus_presentation
from .knots import KnotDiagram, parse_pd, wirtinger, dehn_presentation, \
    peripheral, surgery_presentation, PeripheralSystem
from .area import AreaResult, area, dehn_function_estimate

__version__ = "0.1.0"
