"""Invertible polynomials: parsing, validation, atoms, weights, transpose.

An invertible polynomial in n variables is a sum of exactly n monomials whose
n x n exponent matrix E is invertible over the rationals.  Every such
polynomial considered here splits into "atoms" on disjoint sets of variables:

    chain:  x1^a1*x2 + x2^a2*x3 + ... + x(m-1)^a(m-1)*xm + xm^am    (m >= 1)
    loop:   x1^a1*x2 + x2^a2*x3 + ... + xm^am*x1                    (m >= 2)

The one-variable chain x^a is the Fermat case.  Each monomial carries exactly
one exponent >= 2 and is matched to that variable; rows are stored in matched
order, so E always has diagonal >= 2, at most one off-diagonal 1 per row, and
det E > 0.  Exponents equal to 1 in the atom data (rows such as x*y) are
rejected: the matching would be ambiguous and none of the invariants computed
downstream are defined for them here.

`parse_polynomial` accepts the grammar (whitespace insignificant):

    poly   := term ('+' term)*
    term   := [int '*']? factor ('*' factor)*
    factor := var ('^' int)?
    var    := 'w' | 'x' | 'y' | 'z' | 'x1' ... 'x99'     (case sensitive)

Numeric coefficients are accepted, reduced to presence and reported through
a CoefficientWarning; no computed invariant depends on them.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm, prod
from typing import Iterable, Sequence

from . import ratlinalg
from .errors import (
    CoefficientWarning,
    InputSyntaxError,
    NotDecomposableError,
    NotInvertibleError,
)

_DEFAULT_NAMES = ("x", "y", "z", "w")


@dataclass(frozen=True)
class Atom:
    """One chain or loop; variable `var_indices[i]` carries exponent `a[i]`.

    Indices point into the variable tuple of the owning polynomial.  Chains
    are listed head to tail (the tail variable owns the pure power); loops
    are rotated so the smallest index comes first.
    """

    kind: str
    var_indices: tuple[int, ...]
    a: tuple[int, ...]

    def __post_init__(self):
        assert self.kind in ("chain", "loop")
        assert len(self.var_indices) == len(self.a)

    @property
    def size(self) -> int:
        return len(self.a)

    @property
    def is_fermat(self) -> bool:
        return self.kind == "chain" and len(self.a) == 1


@dataclass(frozen=True)
class WeightSystem:
    """Rational weights q with E*q = (1,...,1)^T; d is the least common denominator."""

    q: tuple[Fraction, ...]
    d: int

    @property
    def w(self) -> tuple[int, ...]:
        return tuple(int(qi * self.d) for qi in self.q)


@dataclass(frozen=True)
class InvertiblePolynomial:
    """Validated invertible polynomial; construct via `parse_polynomial` or
    `from_exponent_matrix`, never directly."""

    n: int
    exponents: tuple[tuple[int, ...], ...]
    variables: tuple[str, ...]
    atoms: tuple[Atom, ...]

    def to_text(self) -> str:
        if self.n == 0:
            return "0"
        return " + ".join(_monomial_text(row, self.variables) for row in self.exponents)

    def __str__(self) -> str:
        return self.to_text()


def _monomial_text(row: Sequence[int], variables: Sequence[str]) -> str:
    factors = []
    for name, e in zip(variables, row):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append(f"{name}^{e}")
    return "*".join(factors) if factors else "1"


# ---------------------------------------------------------------------------
# parsing


def _tokenize(text: str) -> list[tuple[str, object, int]]:
    toks: list[tuple[str, object, int]] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in "+*^":
            toks.append((ch, ch, i))
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(("int", int(text[i:j]), i))
            i = j
            continue
        if ch in "wxyz":
            if ch == "x" and i + 1 < n and text[i + 1].isdigit():
                j = i + 1
                while j < n and text[j].isdigit() and j - i < 3:
                    j += 1
                name = text[i:j]
                if name[1] == "0":
                    raise InputSyntaxError(f"invalid variable {name!r}", i)
                toks.append(("var", name, i))
                i = j
                continue
            toks.append(("var", ch, i))
            i += 1
            continue
        raise InputSyntaxError(f"unexpected character {ch!r}", i)
    return toks


def parse_polynomial(text: str) -> InvertiblePolynomial:
    """Parse polynomial text and validate it as an invertible polynomial.

    Raises InputSyntaxError for grammar violations and NotInvertibleError /
    NotDecomposableError for structural ones (wrong monomial count, repeated
    monomial, unmatched exponent patterns).
    """
    toks = _tokenize(text)
    if not toks:
        raise InputSyntaxError("empty polynomial", 0)
    end = len(text)
    k = 0

    def peek() -> tuple[str, object, int]:
        return toks[k] if k < len(toks) else ("end", None, end)

    terms: list[tuple[list[tuple[str, int]], int]] = []
    while True:
        kind, value, pos = peek()
        term_pos = pos
        if kind == "int":
            warnings.warn(
                f"coefficient {value} on the monomial at position {pos} is ignored",
                CoefficientWarning,
                stacklevel=2,
            )
            if value == 0:
                raise NotInvertibleError(f"zero coefficient at position {pos}")
            k += 1
            kind, value, pos = peek()
            if kind != "*":
                raise InputSyntaxError("expected '*' after coefficient", pos)
            k += 1
        factors: list[tuple[str, int]] = []
        while True:
            kind, value, pos = peek()
            if kind != "var":
                raise InputSyntaxError("expected a variable", pos)
            name = value
            k += 1
            kind, value, pos = peek()
            exp = 1
            if kind == "^":
                k += 1
                kind, value, pos = peek()
                if kind != "int":
                    raise InputSyntaxError("expected an integer exponent", pos)
                exp = value
                k += 1
            factors.append((name, exp))
            kind, value, pos = peek()
            if kind == "*":
                k += 1
                continue
            break
        terms.append((factors, term_pos))
        kind, value, pos = peek()
        if kind == "end":
            break
        if kind != "+":
            raise InputSyntaxError("expected '+' between monomials", pos)
        k += 1

    variables: list[str] = []
    for factors, _ in terms:
        for name, _e in factors:
            if name not in variables:
                variables.append(name)
    rows = []
    for factors, _pos in terms:
        row = [0] * len(variables)
        for name, e in factors:
            row[variables.index(name)] += e
        rows.append(tuple(row))
    return from_exponent_matrix(tuple(rows), tuple(variables))


# ---------------------------------------------------------------------------
# construction and structure


def from_exponent_matrix(
    rows: Sequence[Sequence[int]],
    variables: Sequence[str] | None = None,
) -> InvertiblePolynomial:
    """Validate an exponent matrix, match monomials to variables and decompose.

    Rows may arrive in any order; they are stored with monomial i matched to
    variable i (diagonal >= 2), which fixes det E > 0.
    """
    rows = tuple(tuple(int(e) for e in row) for row in rows)
    if variables is None:
        width = len(rows[0]) if rows else 0
        if width <= len(_DEFAULT_NAMES):
            variables = _DEFAULT_NAMES[:width]
        else:
            variables = tuple(f"x{i + 1}" for i in range(width))
    variables = tuple(variables)
    n = len(variables)
    if n == 0 and not rows:
        return InvertiblePolynomial(0, (), (), ())
    if any(len(row) != n for row in rows):
        raise NotInvertibleError("ragged exponent matrix")
    if any(e < 0 for row in rows for e in row):
        raise NotInvertibleError("negative exponent")
    if len(rows) != n:
        raise NotInvertibleError(f"{len(rows)} monomials but {n} variables")
    for j, name in enumerate(variables):
        if all(row[j] == 0 for row in rows):
            raise NotInvertibleError(f"variable {name} never occurs")
    seen: dict[tuple[int, ...], int] = {}
    for i, row in enumerate(rows):
        if row in seen:
            raise NotInvertibleError(f"repeated monomial {_monomial_text(row, variables)}")
        seen[row] = i

    owner_to_row: dict[int, int] = {}
    succ_of_row: dict[int, int | None] = {}
    for i, row in enumerate(rows):
        text = _monomial_text(row, variables)
        big = [j for j, e in enumerate(row) if e >= 2]
        ones = [j for j, e in enumerate(row) if e == 1]
        if len(big) > 1:
            raise NotDecomposableError(f"monomial {text} has two exponents >= 2")
        if not big:
            raise NotDecomposableError(f"monomial {text} has no exponent >= 2")
        if len(ones) > 1:
            raise NotDecomposableError(f"monomial {text} involves more than two variables")
        j = big[0]
        if j in owner_to_row:
            other = _monomial_text(rows[owner_to_row[j]], variables)
            raise NotDecomposableError(
                f"monomials {other} and {text} both carry the exponent >= 2 of {variables[j]}"
            )
        owner_to_row[j] = i
        succ_of_row[i] = ones[0] if ones else None

    exponents = tuple(rows[owner_to_row[j]] for j in range(n))
    succ = [succ_of_row[owner_to_row[j]] for j in range(n)]
    indeg = [0] * n
    for j in range(n):
        s = succ[j]
        if s is not None:
            indeg[s] += 1
            if indeg[s] > 1:
                raise NotDecomposableError(
                    f"variable {variables[s]} is the link variable of two monomials"
                )

    visited = [False] * n
    atoms: list[Atom] = []
    for head in range(n):
        if indeg[head] != 0 or visited[head]:
            continue
        path = []
        j: int | None = head
        while j is not None:
            if visited[j]:
                raise NotDecomposableError("chain runs into a loop")
            visited[j] = True
            path.append(j)
            j = succ[j]
        atoms.append(Atom("chain", tuple(path), tuple(exponents[v][v] for v in path)))
    for start in range(n):
        if visited[start]:
            continue
        cycle = []
        j = start
        while True:
            visited[j] = True
            cycle.append(j)
            j = succ[j]
            assert j is not None
            if j == start:
                break
        atoms.append(Atom("loop", tuple(cycle), tuple(exponents[v][v] for v in cycle)))
    atoms.sort(key=lambda atom: min(atom.var_indices))

    f = InvertiblePolynomial(n, exponents, variables, tuple(atoms))
    assert determinant(f) > 0
    return f


def atom_polynomial(kind: str, a: Sequence[int], variables: Sequence[str] | None = None) -> InvertiblePolynomial:
    """Standalone polynomial consisting of a single chain or loop atom."""
    m = len(a)
    rows = []
    for i, ai in enumerate(a):
        row = [0] * m
        row[i] = ai
        if kind == "loop":
            row[(i + 1) % m] = 1
        elif i + 1 < m:
            row[i + 1] = 1
        rows.append(tuple(row))
    return from_exponent_matrix(tuple(rows), variables)


def decompose(f: InvertiblePolynomial) -> tuple[Atom, ...]:
    return f.atoms


@lru_cache(maxsize=None)
def determinant(f: InvertiblePolynomial) -> int:
    d = ratlinalg.determinant(f.exponents)
    assert d.denominator == 1
    return int(d)


@lru_cache(maxsize=None)
def exponent_inverse(f: InvertiblePolynomial) -> tuple[tuple[Fraction, ...], ...]:
    return ratlinalg.inverse(f.exponents)


@lru_cache(maxsize=None)
def weights(f: InvertiblePolynomial) -> WeightSystem:
    """Unique exact solution of E*q = (1,...,1), solved atom by atom.

    Chains go back to front (q_m = 1/a_m, q_i = (1 - q_{i+1})/a_i); loops by
    eliminating the cyclic recurrence q_{i+1} = 1 - a_i q_i.
    """
    q: list[Fraction | None] = [None] * f.n
    for atom in f.atoms:
        a = atom.a
        m = len(a)
        if atom.kind == "chain":
            acc = Fraction(1, a[-1])
            q[atom.var_indices[-1]] = acc
            for i in range(m - 2, -1, -1):
                acc = (1 - acc) / a[i]
                q[atom.var_indices[i]] = acc
        else:
            c, d = Fraction(0), Fraction(1)
            for i in range(m):
                c, d = 1 - a[i] * c, -a[i] * d
            vals = [c / (1 - d)]
            for i in range(m - 1):
                vals.append(1 - a[i] * vals[-1])
            for idx, val in zip(atom.var_indices, vals):
                q[idx] = val
    qt = tuple(q)  # type: ignore[arg-type]
    assert all(qi is not None and 0 < qi <= Fraction(1, 2) for qi in qt)
    for row in f.exponents:
        assert sum(e * qi for e, qi in zip(row, qt)) == 1
    d = lcm(*(qi.denominator for qi in qt)) if qt else 1
    return WeightSystem(qt, d)


@lru_cache(maxsize=None)
def milnor_number(f: InvertiblePolynomial) -> int:
    mu = prod((1 / qi - 1 for qi in weights(f).q), start=Fraction(1))
    assert mu.denominator == 1 and mu >= 1
    return int(mu)


@lru_cache(maxsize=None)
def transpose(f: InvertiblePolynomial) -> InvertiblePolynomial:
    """The transposed polynomial: the one with exponent matrix E^T.

    Keeps the variable names; chains come back in reversed variable order,
    loops in reversed cyclic order.
    """
    if f.n == 0:
        return f
    return from_exponent_matrix(tuple(zip(*f.exponents)), f.variables)


def restrict(f: InvertiblePolynomial, fixed: Iterable[int]) -> InvertiblePolynomial:
    """Restriction of f to the coordinate subspace indexed by `fixed`.

    Substitutes 0 for every other variable and keeps the surviving monomials.
    For a genuine fixed locus of a symmetry the result is again invertible
    (chains lose a leading segment, loops survive whole or vanish); anything
    else fails validation.
    """
    return _restrict(f, tuple(sorted(set(fixed))))


@lru_cache(maxsize=None)
def _restrict(f: InvertiblePolynomial, idx: tuple[int, ...]) -> InvertiblePolynomial:
    if any(i < 0 or i >= f.n for i in idx):
        raise NotInvertibleError(f"variable index out of range: {idx}")
    keep = set(idx)
    rows = [row for row in f.exponents
            if all(j in keep for j, e in enumerate(row) if e)]
    sub_rows = tuple(tuple(row[j] for j in idx) for row in rows)
    sub_vars = tuple(f.variables[j] for j in idx)
    try:
        return from_exponent_matrix(sub_rows, sub_vars)
    except (NotInvertibleError, NotDecomposableError) as exc:
        raise NotDecomposableError(
            f"indices {idx} are not a fixed locus of {f.to_text()}: {exc}"
        ) from exc
