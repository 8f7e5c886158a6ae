"""Exact orbifold E-functions for invertible polynomials with symmetry.

Everything is computed in rational arithmetic: weights, group elements,
E-functions and Hodge tables are exact, never floating point.
"""

from .basis_engine import (
    PairTable,
    SectorContribution,
    atom_basis,
    degree_counts,
    efunction_basis,
    expected_multiplicity,
    hodge_table,
    milnor_basis,
    pair_table,
    psi,
    psi_structure_ok,
    sectors,
    spectrum_identity_holds,
)
from .corpus import (
    CorpusEntry,
    EntryResult,
    default_corpus,
    format_corpus,
    parse_corpus,
    run_corpus,
    run_entry,
)
from .efunction import (
    BiExpPolynomial,
    HodgeTable,
    central_charge,
    check_duality,
    chi,
    e_to_hodge,
    exponent_mean,
    exponents,
    hodge_from_efunction,
    parse_efunction,
    variance,
)
from .errors import (
    CoefficientWarning,
    DomainError,
    InputSyntaxError,
    MembershipError,
    ModeError,
    NotDecomposableError,
    NotInvertibleError,
    OrbefunError,
    VerificationError,
)
from .invertible import (
    Atom,
    InvertiblePolynomial,
    WeightSystem,
    atom_polynomial,
    decompose,
    determinant,
    exponent_inverse,
    from_exponent_matrix,
    milnor_number,
    parse_polynomial,
    restrict,
    transpose,
    weights,
)
from .series_engine import efunction_series
from .symmetry import (
    AbelianSubgroup,
    GroupElement,
    all_subgroups,
    closure,
    dual_group,
    format_element,
    gf_group,
    grading_operator,
    grading_subgroup,
    identity,
    is_in_sl,
    pairing,
    parse_element,
    parse_group_spec,
    sl_subgroup,
    subgroup,
)

__version__ = "0.1.0"

__all__ = [
    "Atom",
    "AbelianSubgroup",
    "BiExpPolynomial",
    "CoefficientWarning",
    "CorpusEntry",
    "DomainError",
    "EntryResult",
    "GroupElement",
    "HodgeTable",
    "InputSyntaxError",
    "InvertiblePolynomial",
    "MembershipError",
    "ModeError",
    "NotDecomposableError",
    "NotInvertibleError",
    "OrbefunError",
    "PairTable",
    "SectorContribution",
    "VerificationError",
    "WeightSystem",
    "all_subgroups",
    "atom_basis",
    "atom_polynomial",
    "central_charge",
    "check_duality",
    "chi",
    "closure",
    "decompose",
    "default_corpus",
    "degree_counts",
    "determinant",
    "dual_group",
    "e_to_hodge",
    "efunction_basis",
    "efunction_series",
    "expected_multiplicity",
    "exponent_inverse",
    "exponent_mean",
    "exponents",
    "format_corpus",
    "format_element",
    "from_exponent_matrix",
    "gf_group",
    "grading_operator",
    "grading_subgroup",
    "hodge_from_efunction",
    "hodge_table",
    "identity",
    "is_in_sl",
    "milnor_basis",
    "milnor_number",
    "pair_table",
    "pairing",
    "parse_corpus",
    "parse_efunction",
    "parse_element",
    "parse_group_spec",
    "parse_polynomial",
    "psi",
    "psi_structure_ok",
    "restrict",
    "run_corpus",
    "run_entry",
    "sectors",
    "sl_subgroup",
    "spectrum_identity_holds",
    "subgroup",
    "transpose",
    "variance",
    "weights",
]
