"""Betti numbers of edge ideals of weighted oriented crown graphs.

Closed-form multigraded, graded, and total Betti numbers for the crown
family, cross-checked against a brute-force simplicial-homology oracle
that works for arbitrary monomial ideals.
"""

from .multidegree import (
    Multidegree,
    VariableSet,
    binomial,
    divides,
    gcd,
    lcm,
    lcm_of,
    quotient,
    support,
    xy_variables,
)
from .ideals import (
    MonomialIdeal,
    colon_by_monomial,
    contains,
    ideal_intersect,
    ideal_product,
    ideal_sum,
    is_dominant,
    lcm_lattice,
    minimalize,
    scale,
    support_of_ideal,
)
from .graphs import (
    SubgraphClass,
    SubgraphKind,
    WeightedOrientedGraph,
    classify_induced,
    complete_bipartite,
    crown,
    edge_ideal,
    generalized_crown,
    induced_subgraph,
    theta,
    unbalanced_crown,
)
from .homology import (
    BettiTable,
    FieldSpec,
    SimplicialComplexOnVars,
    multigraded_betti,
    reduced_homology_ranks,
    upper_koszul_complex,
)
from .splitting import (
    CrownColonComponents,
    betti_product_disjoint,
    betti_sum_disjoint,
    check_splitting_lemma_hypotheses,
    crowncolon_components,
    mapping_cone_upper_bound,
    taylor_betti_dominant,
    verify_betti_splitting,
)
from .render import (
    betti_diagram,
    multigraded_lines,
    raw_graded_lines,
    report_text,
    table_from_json_dict,
    table_to_json_dict,
)
from .formulas import (
    FamilyTopBetti,
    enumerate_M,
    enumerate_N,
    family_top_betti,
    graded_betti_formula,
    multigraded_betti_formula,
    predicted_contribution,
    regularity_formula,
    total_betti_closed_form,
)

__all__ = [name for name in dir() if not name.startswith("_")]

__version__ = "0.1.0"
