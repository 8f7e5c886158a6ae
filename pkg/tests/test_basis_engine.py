"""Sector-by-sector engine: monomial bases, tables, the pairing map."""

from fractions import Fraction

from hypothesis import given, settings

from orbefun import (
    atom_basis,
    decompose,
    degree_counts,
    efunction_basis,
    expected_multiplicity,
    gf_group,
    hodge_table,
    identity,
    milnor_basis,
    milnor_number,
    pair_table,
    parse_element,
    parse_group_spec,
    parse_polynomial,
    psi,
    psi_structure_ok,
    sectors,
    spectrum_identity_holds,
    subgroup,
    transpose,
)
from orbefun.basis_engine import _chain_excluded
from orbefun.symmetry import dual_group
from strategies import polynomials, symmetric_pairs

F = Fraction


def test_chain_exclusion_pattern():
    # excluded: leading (a1-1, 0, a3-1, 0, ...) prefixes of odd length ending
    # at the pattern value, or the full alternating word of odd length
    assert _chain_excluded((2,), (3,)) is True
    assert _chain_excluded((1,), (3,)) is False
    assert _chain_excluded((2, 0), (3, 2)) is False
    assert _chain_excluded((2, 1), (3, 2)) is True
    assert _chain_excluded((1, 1, 1), (2, 2, 2)) is True
    assert _chain_excluded((1, 0, 1), (2, 2, 2)) is True
    assert _chain_excluded((1, 0, 1, 0), (2, 2, 2, 2)) is False
    assert _chain_excluded((1, 0, 1, 1), (2, 2, 2, 2)) is True


def test_atom_basis_counts():
    fermat = decompose(parse_polynomial("x^4"))[0]
    assert len(atom_basis(fermat)) == 3
    chain = decompose(parse_polynomial("x^3*y + y^2"))[0]
    assert len(atom_basis(chain)) == 5
    loop = decompose(parse_polynomial("x^2*y + y^2*x"))[0]
    assert len(atom_basis(loop)) == 4  # loops keep the full box


def test_milnor_basis_chain_3_2():
    f = parse_polynomial("x^3*y + y^2")
    basis = milnor_basis(f)
    assert len(basis) == 5
    assert {m.exps for m in basis} == {(0, 0), (1, 0), (2, 0), (0, 1), (1, 1)}
    by_exp = {m.exps: m.ell for m in basis}
    assert by_exp[(0, 0)] == F(2, 3)
    assert by_exp[(2, 0)] == 1
    assert by_exp[(1, 1)] == F(4, 3)


def test_degree_multiset_is_palindromic():
    for text in ("x^3*y + y^2", "x^2*y + y^2*z + z^2*x", "x^4 + y^4"):
        f = parse_polynomial(text)
        counts = degree_counts(f)
        assert counts == {f.n - ell: c for ell, c in counts.items()}


def test_spectrum_identity():
    for text in ("x^3", "x^3*y + y^2", "x^2*y + y^2*x", "x^2*y + y^2*z + z^3"):
        assert spectrum_identity_holds(parse_polynomial(text))


def test_sectors_of_diag44_grading_group():
    f = parse_polynomial("x^4 + y^4")
    G = parse_group_spec(f, "1/4(1,1)")
    secs = {s.g: s for s in sectors(f, G)}
    assert len(secs) == 4
    free = secs[identity(2)]
    assert {m.exps for m in free.monomials} == {(0, 2), (1, 1), (2, 0)}
    assert all(m.ell == 1 for m in free.monomials)
    # the two age-J sectors contribute one empty monomial each
    twisted = secs[parse_element("1/4(1,1)", 2)]
    assert twisted.fixed == ()
    assert len(twisted.monomials) == 1
    assert twisted.monomials[0].ell == 0


def test_hodge_tables_match_hand_computations():
    f = parse_polynomial("x^4 + y^4")
    T = hodge_table(f, parse_group_spec(f, "1/4(1,1)"))
    assert dict(T.sorted_entries()) == {
        (F(1, 2), F(1, 2)): (1, 0),
        (F(1), F(1)): (4, 0),
        (F(3, 2), F(3, 2)): (1, 0),
    }
    g = parse_polynomial("x^3")
    Tg = hodge_table(g, gf_group(g))
    assert dict(Tg.sorted_entries()) == {
        (F(1, 3), F(1, 3)): (1, 0),
        (F(2, 3), F(2, 3)): (1, 0),
    }
    h = parse_polynomial("x^3*y + y^2")
    Th = hodge_table(h, gf_group(h))
    assert dict(Th.sorted_entries()) == {
        (F(2, 3), F(2, 3)): (1, 0),
        (F(1), F(1)): (2, 0),
        (F(4, 3), F(4, 3)): (1, 0),
    }


def test_efunction_golden_values():
    f = parse_polynomial("x^3*y + y^2")
    E = efunction_basis(f, gf_group(f))
    assert E.pretty() == "(t*tb)^(-1/3) + 2 + (t*tb)^(1/3)"
    assert E.chi() == 4


def test_psi_examples():
    f = parse_polynomial("x^3*y + y^2")
    assert psi(f, (2, 0)).is_identity
    assert psi(f, (0, 0)).comps == (F(1, 3), F(1, 3))
    loop = parse_polynomial("x^2*y + y^2*x")
    assert psi(loop, (1, 0)).is_identity


def test_psi_lands_in_dual_symmetry_group():
    f = parse_polynomial("x^2*y + y^2*z + z^3")
    ft = transpose(f)
    Gt = gf_group(ft)
    for m in milnor_basis(f):
        assert psi(f, m.exps) in Gt


def test_psi_structure_on_small_atoms():
    for text in ("x^5", "x^3*y + y^2", "x^2*y + y^2*x", "x^3*y + y^3*x",
                 "x^2*y + y^2*z + z^2*x", "x^2*y + y^2*z + z^2*w + w^2*x"):
        assert psi_structure_ok(parse_polynomial(text))


def test_pair_table_loop22_trivial():
    f = parse_polynomial("x^2*y + y^2*x")
    T = pair_table(f, subgroup(f, ()))
    rows = {
        (identity(2), identity(2)): 2,
        (identity(2), parse_element("1/3(1,1)", 2)): 1,
        (identity(2), parse_element("1/3(2,2)", 2)): 1,
    }
    assert T.rows == rows
    assert T.total == milnor_number(f)


def test_pair_table_transpose_symmetry():
    for text, spec in (
        ("x^3*y + y^2", "Gf"),
        ("x^2*y + y^2*x", "trivial"),
        ("x^4 + y^4", "1/4(1,1)"),
    ):
        f = parse_polynomial(text)
        G = parse_group_spec(f, spec)
        T = pair_table(f, G)
        Td = pair_table(transpose(f), dual_group(f, G))
        assert Td == T.transposed()


def test_expected_multiplicity_even_loops():
    # x^2*y+y^2*x+z^2*w+w^2*z: both atoms are even loops, so the row where
    # both sides vanish on both loops carries multiplicity 2^2
    f = parse_polynomial("x^2*y + y^2*x + z^2*w + w^2*z")
    G = parse_group_spec(f, "trivial")
    T = pair_table(f, G)
    e = identity(4)
    assert T.rows[(e, e)] == 4
    assert expected_multiplicity(f, e, e) == 4
    for (g, gt), m in T.rows.items():
        assert m == expected_multiplicity(f, g, gt)


def test_pair_table_row_parity_identity():
    f = parse_polynomial("x^4 + y^4")
    G = parse_group_spec(f, "SL")
    for (g, gt), _ in pair_table(f, G).rows.items():
        assert (-1) ** g.n_fixed == (-1) ** (f.n - gt.n_fixed)


@settings(max_examples=25, deadline=None)
@given(polynomials())
def test_basis_size_is_milnor_number(f):
    assert len(milnor_basis(f)) == milnor_number(f)


@settings(max_examples=25, deadline=None)
@given(polynomials())
def test_spectrum_identity_random(f):
    assert spectrum_identity_holds(f)


@settings(max_examples=20, deadline=None)
@given(symmetric_pairs(max_vars=3))
def test_pair_table_total_and_transpose_random(fG):
    f, G = fG
    T = pair_table(f, G)
    assert pair_table(transpose(f), dual_group(f, G)) == T.transposed()
    for (g, gt), m in T.rows.items():
        assert m == expected_multiplicity(f, g, gt)


@settings(max_examples=25, deadline=None)
@given(polynomials(max_vars=3))
def test_degree_law_for_psi(f):
    for m in milnor_basis(f):
        im = psi(f, m.exps)
        assert m.ell == im.age + F(im.n_fixed, 2)
