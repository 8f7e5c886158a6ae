"""Independent series-side engine and cross-engine agreement."""

from fractions import Fraction

from hypothesis import given, settings

from orbefun import (
    efunction_basis,
    efunction_series,
    gf_group,
    parse_group_spec,
    parse_polynomial,
    subgroup,
)
from strategies import symmetric_pairs

F = Fraction


def test_trivial_group_fermat_cubic():
    f = parse_polynomial("x^3")
    E = efunction_series(f, subgroup(f, ()))
    assert E.terms == {
        (F(1, 6), F(-1, 6)): -1,
        (F(-1, 6), F(1, 6)): -1,
    }


def test_full_group_fermat_cubic():
    f = parse_polynomial("x^3")
    E = efunction_series(f, gf_group(f))
    assert E.terms == {
        (F(-1, 6), F(-1, 6)): 1,
        (F(1, 6), F(1, 6)): 1,
    }


def test_character_filter_shrinks_output():
    # only group-invariant products of coordinate series survive
    f = parse_polynomial("x^4 + y^4")
    full = efunction_series(f, subgroup(f, ()))
    cut = efunction_series(f, parse_group_spec(f, "1/4(1,1)"))
    assert sum(abs(c) for c in full.terms.values()) == 9
    assert cut.chi() == 6


def test_matches_basis_engine_on_named_pairs():
    cases = (
        ("x^3*y + y^2", "Gf"),
        ("x^3*y + y^2", "trivial"),
        ("x^2*y + y^2*x", "Gf"),
        ("x^2*y + y^2*z + z^2*x", "SL"),
        ("x^4 + y^4", "1/4(1,1)"),
        ("x^2*y + y^2 + z^3", "G0"),
    )
    for text, spec in cases:
        f = parse_polynomial(text)
        G = parse_group_spec(f, spec)
        assert efunction_series(f, G) == efunction_basis(f, G)


@settings(max_examples=20, deadline=None)
@given(symmetric_pairs(max_vars=3))
def test_matches_basis_engine_random(fG):
    f, G = fG
    assert efunction_series(f, G) == efunction_basis(f, G)
