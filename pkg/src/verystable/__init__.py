"""Very stable Borel-type G-Higgs bundles: classification and multiplicities."""
from .equivmult import (
    NegativeDimensionError,
    TangentWeightProfile,
    degree_profile,
    dynkin_polynomial,
    table1,
    tangent_weights,
    virtual_multiplicity,
    weyl_dimension,
)
from .grading import GradingProfile, grading_profile, mu_can
from .hecke import (
    HeckePreconditionError,
    MultiplicityDivisor,
    Verdict,
    Witness,
    classical_weights,
    classify,
    classify_classical,
    component_feasible,
    hecke_shift,
    lemma_admissible,
    wobbly_witness,
)
from .polyfactor import FactoredProduct, IntPoly, NotPolynomial, to_polynomial
from .rootsys import (
    Coweight,
    NotDominantError,
    Root,
    RootSystem,
    SimpleType,
    build,
    dominance_leq,
    highest_root,
    is_dominant,
    is_minuscule,
    minuscule_fundamentals,
    pairing,
    root_string_reach,
)

__all__ = [
    "Coweight",
    "FactoredProduct",
    "GradingProfile",
    "HeckePreconditionError",
    "IntPoly",
    "MultiplicityDivisor",
    "NegativeDimensionError",
    "NotDominantError",
    "NotPolynomial",
    "Root",
    "RootSystem",
    "SimpleType",
    "TangentWeightProfile",
    "Verdict",
    "Witness",
    "build",
    "classical_weights",
    "classify",
    "classify_classical",
    "component_feasible",
    "degree_profile",
    "dominance_leq",
    "dynkin_polynomial",
    "grading_profile",
    "hecke_shift",
    "highest_root",
    "is_dominant",
    "is_minuscule",
    "lemma_admissible",
    "minuscule_fundamentals",
    "mu_can",
    "pairing",
    "root_string_reach",
    "table1",
    "tangent_weights",
    "to_polynomial",
    "virtual_multiplicity",
    "weyl_dimension",
    "wobbly_witness",
]

__version__ = "0.1.0"
