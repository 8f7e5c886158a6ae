"""Finite engine: E-functions from monomial bases of restricted Milnor rings.

Every sector g of a pair (f, G) fixes a coordinate subspace on which f
restricts to a smaller invertible polynomial.  Its Milnor ring has an
explicit monomial basis assembled atom by atom (`milnor_basis`); the
G-invariant basis monomials are placed on the Hodge diamond by

    monomial k, degree l = sum q_i*(k_i + 1)  ->  bidegree
    (p, q) = (age(g) + n_g - l, age(g) + l),     parity (-1)^(n_g),

with n_g the number of fixed coordinates.  Summing sectors gives the Hodge
table and, with sign (-1)^(n_g), the E-function.

The same basis carries a combinatorial map into the symmetry group of the
transposed polynomial: k |-> psi(k) = fractional part of (k+1)^T * E^(-1).
Pairing each invariant monomial in sector g with the zero-extension of
psi(k) yields the sector pairing table, the structure that transposes under
(f, G) <-> (transpose, dual group).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .efunction import BiExpPolynomial, HodgeTable
from .invertible import (
    Atom,
    InvertiblePolynomial,
    atom_polynomial,
    exponent_inverse,
    milnor_number,
    restrict,
    transpose,
    weights,
)
from .symmetry import (
    AbelianSubgroup,
    GroupElement,
    character_data,
    character_invariant,
    dual_group,
    gf_group,
    identity,
    sorted_elements,
)


@dataclass(frozen=True, order=True)
class BasisMonomial:
    """Exponent tuple of one Milnor-ring basis monomial and its degree
    l = sum q_i*(k_i + 1)."""

    exps: tuple[int, ...]
    ell: Fraction


def _chain_excluded(k: tuple[int, ...], a: tuple[int, ...]) -> bool:
    # A chain basis is the box prod [0, a_i - 1] minus the monomials starting
    # with the alternating prefix (a_1 - 1, 0, a_3 - 1, 0, ...) that ends
    # either just after some a_j - 1 entry or by running off the chain there.
    j, m = 0, len(k)
    while True:
        if j == m:
            return False
        if k[j] != a[j] - 1:
            return False
        j += 1
        if j == m:
            return True
        if k[j] != 0:
            return True
        j += 1


def atom_basis(atom: Atom) -> tuple[tuple[int, ...], ...]:
    """Basis exponents of one atom, ordered lexicographically.

    Loops keep the whole box prod [0, a_i - 1]; chains drop the excluded
    alternating pattern.  The count always works out to prod(1/q_i - 1).
    """
    box = product(*(range(ai) for ai in atom.a))
    if atom.kind == "loop":
        return tuple(box)
    return tuple(k for k in box if not _chain_excluded(k, atom.a))


@lru_cache(maxsize=None)
def milnor_basis(f: InvertiblePolynomial) -> tuple[BasisMonomial, ...]:
    """Monomial basis of the Milnor ring of f, atom by atom.

    The zero-variable polynomial has the single empty monomial of degree 0.
    """
    q = weights(f).q
    per_atom = [(atom.var_indices, atom_basis(atom)) for atom in f.atoms]
    out = []
    for combo in product(*(ks for _, ks in per_atom)):
        exps = [0] * f.n
        for (idxs, _), k in zip(per_atom, combo):
            for i, v in zip(idxs, k):
                exps[i] = v
        ell = sum((q[i] * (exps[i] + 1) for i in range(f.n)), Fraction(0))
        out.append(BasisMonomial(tuple(exps), ell))
    out.sort()
    assert len(out) == milnor_number(f)
    return tuple(out)


def degree_counts(f: InvertiblePolynomial) -> dict[Fraction, int]:
    """How many basis monomials sit in each degree."""
    counts: dict[Fraction, int] = {}
    for m in milnor_basis(f):
        counts[m.ell] = counts.get(m.ell, 0) + 1
    return counts


def _mul1(p: dict[Fraction, int], q: dict[Fraction, int]) -> dict[Fraction, int]:
    out: dict[Fraction, int] = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            e = e1 + e2
            c = out.get(e, 0) + c1 * c2
            if c:
                out[e] = c
            elif e in out:
                del out[e]
    return out


def spectrum_identity_holds(f: InvertiblePolynomial) -> bool:
    """Check sum_basis y^l * prod_i (1 - y^(q_i)) == prod_i (y^(q_i) - y).

    This ties the combinatorial basis to the weight system alone and is the
    independent certificate that `milnor_basis` picked the right monomials.
    """
    q = weights(f).q
    lhs = {e: c for e, c in degree_counts(f).items()}
    rhs: dict[Fraction, int] = {Fraction(0): 1}
    for qi in q:
        lhs = _mul1(lhs, {Fraction(0): 1, qi: -1})
        rhs = _mul1(rhs, {qi: 1, Fraction(1): -1})
    return lhs == rhs


# ---------------------------------------------------------------------------
# sectors


@dataclass(frozen=True)
class SectorContribution:
    """One group element with its fixed coordinates and the G-invariant
    basis monomials of the restricted polynomial (exponents are indexed by
    the sorted fixed coordinates)."""

    g: GroupElement
    fixed: tuple[int, ...]
    monomials: tuple[BasisMonomial, ...]

    @property
    def n_fixed(self) -> int:
        return len(self.fixed)


@lru_cache(maxsize=None)
def sectors(f: InvertiblePolynomial, G: AbelianSubgroup) -> tuple[SectorContribution, ...]:
    assert G.ambient == f
    qf = weights(f).q
    out = []
    for g in sorted_elements(G):
        fixed = g.fixed_indices()
        fsub = restrict(f, fixed)
        if fsub.n:
            assert weights(fsub).q == tuple(qf[i] for i in fixed)
        chardata = character_data(G, fixed)
        mons = tuple(
            m
            for m in milnor_basis(fsub)
            if character_invariant(chardata, [e + 1 for e in m.exps])
        )
        out.append(SectorContribution(g, fixed, mons))
    return tuple(out)


@lru_cache(maxsize=None)
def efunction_basis(f: InvertiblePolynomial, G: AbelianSubgroup) -> BiExpPolynomial:
    """E-function of (f, G) summed sector by sector from basis monomials."""
    half = Fraction(f.n, 2)
    terms: dict[tuple[Fraction, Fraction], int] = {}
    for sec in sectors(f, G):
        ng = sec.n_fixed
        sign = -1 if ng % 2 else 1
        age = sec.g.age
        for m in sec.monomials:
            key = (age + ng - m.ell - half, age + m.ell - half)
            terms[key] = terms.get(key, 0) + sign
    return BiExpPolynomial(terms)


def hodge_table(f: InvertiblePolynomial, G: AbelianSubgroup) -> HodgeTable:
    """Bigraded dimensions split by sector parity (even = n_g even)."""
    entries: dict[tuple[Fraction, Fraction], tuple[int, int]] = {}
    for sec in sectors(f, G):
        ng = sec.n_fixed
        odd = ng % 2
        age = sec.g.age
        for m in sec.monomials:
            key = (age + ng - m.ell, age + m.ell)
            de, do = entries.get(key, (0, 0))
            entries[key] = (de + 1 - odd, do + odd)
    return HodgeTable(f.n, entries)


# ---------------------------------------------------------------------------
# the transpose-side map psi and the sector pairing table


def psi(f: InvertiblePolynomial, exps: tuple[int, ...]) -> GroupElement:
    """Fractional part of (exps + 1)^T * E^(-1); always a diagonal symmetry
    of the transposed polynomial."""
    inv = exponent_inverse(f)
    shifted = [e + 1 for e in exps]
    comps = tuple(
        sum((shifted[i] * inv[i][j] for i in range(f.n)), Fraction(0))
        for j in range(f.n)
    )
    return GroupElement(comps)


class PairTable:
    """Multiset of (sector element, transpose-side element) pairs counted
    over the invariant basis monomials of every sector."""

    __slots__ = ("rows",)

    def __init__(self, rows: dict[tuple[GroupElement, GroupElement], int]):
        self.rows = {k: int(v) for k, v in rows.items() if v}

    def transposed(self) -> "PairTable":
        return PairTable({(b, a): v for (a, b), v in self.rows.items()})

    def sorted_rows(self) -> list[tuple[tuple[GroupElement, GroupElement], int]]:
        return sorted(self.rows.items())

    @property
    def total(self) -> int:
        return sum(self.rows.values())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PairTable):
            return NotImplemented
        return self.rows == other.rows

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        body = ", ".join(f"({a}, {b}): {v}" for (a, b), v in self.sorted_rows())
        return f"PairTable({{{body}}})"


@lru_cache(maxsize=None)
def pair_table(f: InvertiblePolynomial, G: AbelianSubgroup) -> PairTable:
    """Count invariant monomials by (sector, psi image zero-extended).

    Every image is checked to land in the dual group; the table of the dual
    pair is this table with the two columns swapped, which the test suite
    exercises as the main structural duality check.
    """
    Gd = dual_group(f, G)
    rows: dict[tuple[GroupElement, GroupElement], int] = {}
    for sec in sectors(f, G):
        fsub = restrict(f, sec.fixed)
        for m in sec.monomials:
            h = psi(fsub, m.exps)
            comps = [Fraction(0)] * f.n
            for j, i in enumerate(sec.fixed):
                comps[i] = h.comps[j]
            gt = GroupElement(tuple(comps))
            assert gt in Gd
            key = (sec.g, gt)
            rows[key] = rows.get(key, 0) + 1
    return PairTable(rows)


def expected_multiplicity(f: InvertiblePolynomial, g: GroupElement, gt: GroupElement) -> int:
    """2^r with r the number of even-length loop atoms on which both g and
    gt act trivially; the predicted value of every pair-table row."""
    r = 0
    for atom in f.atoms:
        if atom.kind != "loop" or atom.size % 2:
            continue
        if all(g.comps[i] == 0 for i in atom.var_indices) and all(
            gt.comps[i] == 0 for i in atom.var_indices
        ):
            r += 1
    return 2 ** r


def psi_structure_ok(f: InvertiblePolynomial) -> bool:
    """Per-atom sanity of psi on the full basis box.

    Checks the degree law l(k) = age(psi(k)) + fixed(psi(k))/2 and the image
    profile: chains inject onto the even-fixed-count elements of the dual
    atom group, odd loops biject onto the non-identity elements, even loops
    cover the whole group with exactly the identity fiber doubled.
    """
    for atom in f.atoms:
        sub = atom_polynomial(atom.kind, atom.a)
        basis = milnor_basis(sub)
        images = [psi(sub, m.exps) for m in basis]
        for m, h in zip(basis, images):
            if m.ell != h.age + Fraction(h.n_fixed, 2):
                return False
        fibers = Counter(images)
        group = gf_group(transpose(sub)).elements
        ident = identity(sub.n)
        if atom.kind == "chain":
            if len(fibers) != len(images):
                return False
            if set(images) != {h for h in group if h.n_fixed % 2 == 0}:
                return False
        elif sub.n % 2:
            if len(fibers) != len(images):
                return False
            if set(images) != group - {ident}:
                return False
        else:
            if fibers[ident] != 2:
                return False
            if any(v != 1 for h, v in fibers.items() if h != ident):
                return False
            if set(images) != set(group):
                return False
    return True
