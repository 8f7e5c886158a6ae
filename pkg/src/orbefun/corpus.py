"""Bundled verification corpus and the per-entry check battery.

An entry is (name, polynomial text, group spec text, optional expectations).
The bundled corpus covers every subgroup of the full symmetry group for all
one- and two-variable entries, a spread of chain/loop mixtures in three and
four variables, and the five-variable Fermat quintic with its four standard
groups.  Expected E-functions frozen from hand computations ride along as
expectations on the golden entries.

`run_entry` executes the full battery: engine agreement, the duality
theorem against the transposed pair, double dual, order product, basis
count, psi structure, parity disjointness (when a mode applies), and the
variance identity (when the grading operator is present).  Entries whose
check does not apply report "-" in that column.

File format (one entry per line, `#` comments):

    name ; polynomial ; group-spec [; expectations-json]
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .basis_engine import (
    efunction_basis,
    hodge_table,
    milnor_basis,
    psi_structure_ok,
)
from .efunction import (
    BiExpPolynomial,
    central_charge,
    check_duality,
    exponent_mean,
    variance,
)
from .errors import InputSyntaxError
from .invertible import (
    InvertiblePolynomial,
    determinant,
    milnor_number,
    parse_polynomial,
    transpose,
)
from .series_engine import efunction_series
from .symmetry import (
    AbelianSubgroup,
    dual_group,
    format_element,
    gf_group,
    grading_operator,
    grading_subgroup,
    is_in_sl,
    parse_group_spec,
    sl_subgroup,
    all_subgroups,
)

CHECKS = (
    "engines",
    "duality",
    "dualdual",
    "orders",
    "mu",
    "psi",
    "parity",
    "variance",
    "expect",
)


@dataclass(frozen=True, eq=False)
class CorpusEntry:
    name: str
    poly: str
    group: str
    expectations: dict | None = None

    def to_line(self) -> str:
        base = f"{self.name} ; {self.poly} ; {self.group}"
        if self.expectations is not None:
            base += f" ; {json.dumps(self.expectations, sort_keys=True)}"
        return base


@dataclass(frozen=True, eq=False)
class EntryResult:
    entry: CorpusEntry
    statuses: dict[str, str]

    @property
    def ok(self) -> bool:
        return all(v != "FAIL" for v in self.statuses.values())


def _pf(ok: bool) -> str:
    return "PASS" if ok else "FAIL"


def run_entry(entry: CorpusEntry) -> EntryResult:
    f = parse_polynomial(entry.poly)
    G = parse_group_spec(f, entry.group)
    st: dict[str, str] = {}

    Eb = efunction_basis(f, G)
    Es = efunction_series(f, G)
    st["engines"] = _pf(Eb == Es)

    ft = transpose(f)
    Gd = dual_group(f, G)
    Ebd = efunction_basis(ft, Gd)
    Esd = efunction_series(ft, Gd)
    st["duality"] = _pf(Ebd == Esd and check_duality(Eb, Ebd, f.n))

    st["dualdual"] = _pf(dual_group(ft, Gd) == G)
    st["orders"] = _pf(G.order * Gd.order == determinant(f))
    st["mu"] = _pf(len(milnor_basis(f)) == milnor_number(f))
    st["psi"] = _pf(psi_structure_ok(f))

    g0 = grading_operator(f)
    in_sl = all(is_in_sl(g) for g in G.generators)
    has_g0 = g0 in G
    if in_sl or has_g0:
        table = hodge_table(f, G)
        st["parity"] = _pf(
            all(de == 0 or do == 0 for de, do in table.entries.values())
        )
    else:
        st["parity"] = "-"
    if has_g0:
        table = hodge_table(f, G)
        ok = variance(table) == central_charge(f) * Eb.chi() / 12
        ok = ok and exponent_mean(table) == 0
        st["variance"] = _pf(ok)
    else:
        st["variance"] = "-"

    exp = entry.expectations
    if exp:
        ok = True
        if "efunction" in exp:
            ok = ok and BiExpPolynomial.from_json_obj(exp["efunction"]) == Eb
        if "chi" in exp:
            ok = ok and Eb.chi() == int(exp["chi"])
        if "variance" in exp:
            ok = ok and variance(hodge_table(f, G)) == Fraction(str(exp["variance"]))
        st["expect"] = _pf(ok)
    else:
        st["expect"] = "-"
    return EntryResult(entry, st)


def run_corpus(entries: Iterable[CorpusEntry]) -> list[EntryResult]:
    return [run_entry(e) for e in entries]


# ---------------------------------------------------------------------------
# the bundled corpus


def _terms(*triples) -> list[dict]:
    return [{"t": t, "tbar": tb, "coeff": c} for t, tb, c in triples]


# Hand-derived golden values; keys are (polynomial text, frozenset of group
# elements as strings) resolved at build time.
_GOLDEN = {
    ("x^3", "trivial"): {
        "efunction": _terms(("-1/6", "1/6", -1), ("1/6", "-1/6", -1)),
        "chi": -2,
    },
    ("x^3", "Gf"): {
        "efunction": _terms(("-1/6", "-1/6", 1), ("1/6", "1/6", 1)),
        "chi": 2,
        "variance": "1/18",
    },
    ("x^3*y + y^2", "Gf"): {
        "efunction": _terms(("-1/3", "-1/3", 1), ("0", "0", 2), ("1/3", "1/3", 1)),
        "chi": 4,
        "variance": "2/9",
    },
    ("x^4 + y^4", "G0"): {
        "efunction": _terms(("-1/2", "-1/2", 1), ("0", "0", 4), ("1/2", "1/2", 1)),
        "chi": 6,
        "variance": "1/2",
    },
    ("x^4 + y^4", "Gf"): {
        "efunction": _terms(
            ("-1/2", "-1/2", 1),
            ("-1/4", "-1/4", 2),
            ("0", "0", 3),
            ("1/4", "1/4", 2),
            ("1/2", "1/2", 1),
        ),
        "chi": 9,
        "variance": "3/4",
    },
    ("x^2*y + y^2*x", "trivial"): {
        "efunction": _terms(("-1/3", "1/3", 1), ("0", "0", 2), ("1/3", "-1/3", 1)),
        "chi": 4,
    },
}


def _spec_name(f: InvertiblePolynomial, H: AbelianSubgroup) -> tuple[str, str]:
    """(short name, group spec text) for a subgroup, preferring the tokens."""
    if H.order == 1:
        return "trivial", "trivial"
    if H == grading_subgroup(f):
        return "G0", "G0"
    if H == sl_subgroup(f):
        return "SL", "SL"
    if H == gf_group(f):
        return "Gf", "Gf"
    text = ", ".join(format_element(g) for g in H.generators)
    return "", text


def _golden_for(f: InvertiblePolynomial, poly_text: str, spec: str) -> dict | None:
    want = _GOLDEN.get((poly_text, spec))
    if want is not None:
        return want
    # Token aliases: a named group may coincide with a golden one.
    try:
        H = parse_group_spec(f, spec)
    except InputSyntaxError:
        return None
    for (p, s), exp in _GOLDEN.items():
        if p == poly_text and parse_group_spec(f, s) == H:
            return exp
    return None


def _all_subgroup_entries(label: str, poly_text: str) -> list[CorpusEntry]:
    f = parse_polynomial(poly_text)
    out = []
    counter = 0
    for H in all_subgroups(gf_group(f)):
        name, spec = _spec_name(f, H)
        if not name:
            counter += 1
            name = f"s{counter:02d}"
        out.append(
            CorpusEntry(
                f"{label}/{name}", poly_text, spec, _golden_for(f, poly_text, spec)
            )
        )
    return out


def _named_entries(label: str, poly_text: str, specs: Iterable[str]) -> list[CorpusEntry]:
    f = parse_polynomial(poly_text)
    seen: list[AbelianSubgroup] = []
    out = []
    for spec in specs:
        H = parse_group_spec(f, spec)
        if any(H == old for old in seen):
            continue
        seen.append(H)
        out.append(
            CorpusEntry(
                f"{label}/{spec}", poly_text, spec, _golden_for(f, poly_text, spec)
            )
        )
    return out


def default_corpus() -> list[CorpusEntry]:
    """The bundled corpus: every subgroup for the small entries, the four
    standard groups for the larger ones."""
    entries: list[CorpusEntry] = []
    for label, poly in (
        ("fermat3", "x^3"),
        ("fermat4", "x^4"),
        ("fermat5", "x^5"),
        ("chain_3_2", "x^3*y + y^2"),
        ("chain_2_3", "x^2*y + y^3"),
        ("chain_4_2", "x^4*y + y^2"),
        ("loop_2_2", "x^2*y + y^2*x"),
        ("loop_3_3", "x^3*y + y^3*x"),
        ("diag_3_3", "x^3 + y^3"),
        ("diag_4_4", "x^4 + y^4"),
    ):
        entries.extend(_all_subgroup_entries(label, poly))
    standard = ("trivial", "G0", "SL", "Gf")
    for label, poly in (
        ("mix_chain_fermat", "x^3*y + y^2 + z^3"),
        ("chain_2_2_3", "x^2*y + y^2*z + z^3"),
        ("loop_2_2_3", "x^2*y + y^2*z + z^2*x"),
        ("loop_2x4", "x^2*y + y^2*z + z^2*w + w^2*x"),
        ("two_loops", "x^2*y + y^2*x + z^2*w + w^2*z"),
        ("quintic", "x1^5 + x2^5 + x3^5 + x4^5 + x5^5"),
    ):
        entries.extend(_named_entries(label, poly, standard))
    return entries


# ---------------------------------------------------------------------------
# file form


def parse_corpus(text: str) -> list[CorpusEntry]:
    entries = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = [p.strip() for p in line.split(";", 3)]
        if len(parts) < 3:
            raise InputSyntaxError(
                f"corpus line {lineno}: expected 'name ; poly ; group-spec'", 0
            )
        expectations = None
        if len(parts) == 4 and parts[3]:
            try:
                expectations = json.loads(parts[3])
            except json.JSONDecodeError as exc:
                raise InputSyntaxError(
                    f"corpus line {lineno}: bad expectations JSON: {exc}", 0
                ) from exc
        entries.append(CorpusEntry(parts[0], parts[1], parts[2], expectations))
    return entries


def format_corpus(entries: Iterable[CorpusEntry]) -> str:
    return "".join(e.to_line() + "\n" for e in entries)
