"""Finite diagonal symmetry groups of invertible polynomials.

A group element is a vector in (Q/Z)^n stored by canonical representatives
in [0,1); component c_i acts on coordinate i by the root of unity e[c_i] =
exp(2*pi*i*c_i).  The maximal diagonal symmetry group of f is

    G_f = { g : E*g is an integer vector },

a finite abelian group of order det E generated by the columns of E^(-1).
The exponential grading operator g0 has components equal to the weights.

Between G_f and the symmetry group of the transposed polynomial there is the
exact pairing <g, h> = h^T * E * g mod Z.  The dual of a subgroup G of G_f is
its annihilator under this pairing,

    dual_group(f, G) = { h in G_ft : <g, h> = 0 for all g in G },

of order det E / |G|, and dualizing twice returns G.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Iterable, Sequence

from .errors import DomainError, InputSyntaxError, MembershipError
from .invertible import InvertiblePolynomial, determinant, exponent_inverse, transpose, weights


@dataclass(frozen=True, order=True)
class GroupElement:
    comps: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "comps", tuple(Fraction(c) % 1 for c in self.comps))

    @property
    def n(self) -> int:
        return len(self.comps)

    def __add__(self, other: "GroupElement") -> "GroupElement":
        return GroupElement(tuple(a + b for a, b in zip(self.comps, other.comps)))

    def __neg__(self) -> "GroupElement":
        return GroupElement(tuple(-a for a in self.comps))

    def __sub__(self, other: "GroupElement") -> "GroupElement":
        return self + (-other)

    def scaled(self, m: int) -> "GroupElement":
        return GroupElement(tuple(m * a for a in self.comps))

    @property
    def age(self) -> Fraction:
        return sum(self.comps, Fraction(0))

    def fixed_indices(self) -> tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.comps) if c == 0)

    @property
    def n_fixed(self) -> int:
        return sum(1 for c in self.comps if c == 0)

    @property
    def is_identity(self) -> bool:
        return all(c == 0 for c in self.comps)

    @property
    def order(self) -> int:
        return lcm(*(c.denominator for c in self.comps)) if self.comps else 1

    def __str__(self) -> str:
        return format_element(self)


def identity(n: int) -> GroupElement:
    return GroupElement((Fraction(0),) * n)


def is_in_sl(g: GroupElement) -> bool:
    """Whether g acts with determinant 1, i.e. its age is an integer."""
    return g.age.denominator == 1


@dataclass(frozen=True, eq=False)
class AbelianSubgroup:
    """A subgroup of G_f, carried with its ambient polynomial and a small
    generating set; equality compares the element sets."""

    ambient: InvertiblePolynomial
    generators: tuple[GroupElement, ...]
    elements: frozenset[GroupElement]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, g: GroupElement) -> bool:
        return g in self.elements

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AbelianSubgroup):
            return NotImplemented
        return self.ambient == other.ambient and self.elements == other.elements

    def __hash__(self) -> int:
        return hash((self.ambient, self.elements))

    def __str__(self) -> str:
        gens = ", ".join(format_element(g) for g in self.generators) or "1"
        return f"<{gens}> of order {self.order}"


def closure(n: int, gens: Iterable[GroupElement]) -> frozenset[GroupElement]:
    elems = {identity(n)}
    frontier = [identity(n)]
    gens = tuple(gens)
    while frontier:
        e = frontier.pop()
        for g in gens:
            s = e + g
            if s not in elems:
                elems.add(s)
                frontier.append(s)
    return frozenset(elems)


@lru_cache(maxsize=None)
def sorted_elements(G: AbelianSubgroup) -> tuple[GroupElement, ...]:
    return tuple(sorted(G.elements))


def _reduce_generators(n: int, elements: Iterable[GroupElement]) -> tuple[GroupElement, ...]:
    gens: list[GroupElement] = []
    known = {identity(n)}
    for e in sorted(elements):
        if e not in known:
            gens.append(e)
            known = set(closure(n, gens))
    return tuple(gens)


def _from_elements(ambient: InvertiblePolynomial, elements: Iterable[GroupElement]) -> AbelianSubgroup:
    elems = frozenset(elements)
    return AbelianSubgroup(ambient, _reduce_generators(ambient.n, elems), elems)


def violated_row(f: InvertiblePolynomial, g: GroupElement) -> int | None:
    """Index of the first monomial of f not preserved by g, or None."""
    for i, row in enumerate(f.exponents):
        if sum(e * c for e, c in zip(row, g.comps)).denominator != 1:
            return i
    return None


def gf_contains(f: InvertiblePolynomial, g: GroupElement) -> bool:
    return g.n == f.n and violated_row(f, g) is None


@lru_cache(maxsize=None)
def gf_group(f: InvertiblePolynomial) -> AbelianSubgroup:
    """The maximal diagonal symmetry group of f, enumerated eagerly."""
    cols = tuple(zip(*exponent_inverse(f))) if f.n else ()
    gens = tuple(dict.fromkeys(GroupElement(col) for col in cols))
    elems = closure(f.n, gens)
    assert len(elems) == determinant(f)
    return AbelianSubgroup(f, _reduce_generators(f.n, elems), elems)


def subgroup(f: InvertiblePolynomial, gens: Iterable[GroupElement]) -> AbelianSubgroup:
    gens = tuple(gens)
    for g in gens:
        if g.n != f.n:
            raise MembershipError(f"element {g} has {g.n} components, expected {f.n}")
        row = violated_row(f, g)
        if row is not None:
            raise MembershipError(
                f"{format_element(g)} is not a symmetry of {f.to_text()}: "
                f"monomial {row + 1} picks up a non-trivial character"
            )
    return AbelianSubgroup(f, gens, closure(f.n, gens))


def grading_operator(f: InvertiblePolynomial) -> GroupElement:
    """The exponential grading operator g0 = (q_1, ..., q_n)."""
    g0 = GroupElement(weights(f).q)
    assert gf_contains(f, g0)
    return g0


def grading_subgroup(f: InvertiblePolynomial) -> AbelianSubgroup:
    return subgroup(f, (grading_operator(f),))


@lru_cache(maxsize=None)
def sl_subgroup(f: InvertiblePolynomial) -> AbelianSubgroup:
    """Elements of G_f with integer age (the SL(n) part)."""
    return _from_elements(f, (g for g in gf_group(f).elements if is_in_sl(g)))


def pairing(f: InvertiblePolynomial, g: GroupElement, h: GroupElement) -> Fraction:
    """The exact pairing h^T * E * g mod Z between G_f and G_ft."""
    if not gf_contains(f, g):
        raise MembershipError(f"{format_element(g)} is not in the symmetry group of f")
    if not gf_contains(transpose(f), h):
        raise MembershipError(f"{format_element(h)} is not in the symmetry group of the transpose")
    eg = [sum(e * c for e, c in zip(row, g.comps)) for row in f.exponents]
    return sum((hc * v for hc, v in zip(h.comps, eg)), Fraction(0)) % 1


@lru_cache(maxsize=None)
def dual_group(f: InvertiblePolynomial, G: AbelianSubgroup) -> AbelianSubgroup:
    """Annihilator of G inside the symmetry group of the transpose."""
    assert G.ambient == f
    ft = transpose(f)
    # E*g is integral for g in G_f, so the pairing against h reduces to an
    # integer-vector dot product with the components of h.
    vecs = []
    for g in G.generators:
        eg = [sum(e * c for e, c in zip(row, g.comps)) for row in f.exponents]
        assert all(v.denominator == 1 for v in eg)
        vecs.append([int(v) for v in eg])
    elems = [
        h
        for h in gf_group(ft).elements
        if all(sum(hc * v for hc, v in zip(h.comps, vec)).denominator == 1 for vec in vecs)
    ]
    return _from_elements(ft, elems)


def all_subgroups(G: AbelianSubgroup) -> tuple[AbelianSubgroup, ...]:
    """Every subgroup of G, smallest first (breadth-first lattice walk)."""
    n = G.ambient.n
    seen: set[frozenset[GroupElement]] = {frozenset({identity(n)})}
    frontier = list(seen)
    while frontier:
        base = frontier.pop()
        for e in G.elements:
            if e in base:
                continue
            extended = set(base)
            new = [e]
            while new:
                x = new.pop()
                for y in tuple(extended):
                    s = x + y
                    if s not in extended:
                        extended.add(s)
                        new.append(s)
            fs = frozenset(extended)
            if fs not in seen:
                seen.add(fs)
                frontier.append(fs)
    subs = [_from_elements(G.ambient, elems) for elems in seen]
    subs.sort(key=lambda H: (H.order, sorted_elements(H)))
    return tuple(subs)


# ---------------------------------------------------------------------------
# text forms: "1/r(a1,...,an)" for elements, tokens or generator lists for groups


def format_element(g: GroupElement) -> str:
    r = g.order
    parts = ",".join(str(int(c * r)) for c in g.comps)
    return f"1/{r}({parts})"


_ELEMENT_RE = re.compile(r"\s*1\s*/\s*(\d+)\s*\(\s*([^()]*?)\s*\)\s*$")


def parse_element(text: str, n: int) -> GroupElement:
    m = _ELEMENT_RE.match(text)
    if not m:
        raise InputSyntaxError(f"expected an element of the form 1/r(a1,...,an): {text!r}", 0)
    r = int(m.group(1))
    if r < 1:
        raise InputSyntaxError("denominator must be positive", text.index("/") + 1)
    body = m.group(2)
    parts = [p.strip() for p in body.split(",")] if body.strip() else []
    if len(parts) != n:
        raise DomainError(f"element {text.strip()!r} has {len(parts)} components, expected {n}")
    try:
        nums = [int(p) for p in parts]
    except ValueError as exc:
        raise InputSyntaxError(f"invalid component in {text!r}", 0) from exc
    return GroupElement(tuple(Fraction(a, r) for a in nums))


def parse_group_spec(f: InvertiblePolynomial, spec: str) -> AbelianSubgroup:
    """Resolve a group specification: 'trivial', 'Gf', 'G0', 'SL', or
    a comma-separated list of generators '1/r(a1,...,an)'."""
    s = spec.strip()
    if s == "trivial":
        return subgroup(f, ())
    if s == "Gf":
        return gf_group(f)
    if s == "G0":
        return grading_subgroup(f)
    if s == "SL":
        return sl_subgroup(f)
    pieces = re.findall(r"1\s*/\s*\d+\s*\([^()]*\)", s)
    leftover = re.sub(r"1\s*/\s*\d+\s*\([^()]*\)", "", s).replace(",", "").strip()
    if not pieces or leftover:
        raise InputSyntaxError(
            f"invalid group spec {spec!r}: expected trivial|Gf|G0|SL or generators 1/r(a1,...,an)", 0
        )
    return subgroup(f, tuple(parse_element(p, f.n) for p in pieces))


@lru_cache(maxsize=None)
def character_data(G: AbelianSubgroup, fixed: tuple[int, ...]) -> tuple[tuple[int, tuple[int, ...]], ...]:
    """Integerized restriction of G's generators to the coordinates `fixed`.

    Each generator h becomes a pair (D, v) with D the common denominator of
    the restricted components and v = D*h on them.  A tuple c of integers,
    one per fixed coordinate, is invariant under G as a character exactly
    when sum(c_j * v_j) = 0 mod D for every generator.
    """
    out = []
    for h in G.generators:
        comps = [h.comps[i] for i in fixed]
        den = lcm(*(c.denominator for c in comps)) if comps else 1
        out.append((den, tuple(int(c * den) for c in comps)))
    return tuple(out)


def character_invariant(chardata: tuple[tuple[int, tuple[int, ...]], ...], c: Sequence[int]) -> bool:
    """Whether the character tuple c passes every test in `chardata`."""
    for den, vec in chardata:
        if sum(ci * vi for ci, vi in zip(c, vec)) % den:
            return False
    return True
