"""Algebra documents and report documents: the JSON formats of the tool.

Rationals travel as strings like "3" or "-1/2" in every exact-path document;
floats never appear on the parse side. Emission is deterministic (sorted
keys, no timestamps) so identical inputs produce byte-identical output.
"""

from __future__ import annotations

import hashlib
import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Mapping, Sequence

from .algebra import Covector, LieAlgebra
from .errors import ParseError
from .exact import Subspace
from .flows import FixtureInvariant, Parametrization, Term
from .orbits import ClassificationReport

TOOL_VERSION = "0.1.0"
ALGEBRA_SCHEMA = "coadjoint.algebra.v1"
REPORT_SCHEMA = "coadjoint.report.v1"

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def parse_rational(text: Any, path: str) -> Fraction:
    if not isinstance(text, str) or not _RATIONAL_RE.match(text):
        raise ParseError(path, f"malformed rational {text!r} (expected 'p' or 'p/q')")
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise ParseError(path, f"malformed rational {text!r} (zero denominator)") from None


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class BracketEntry:
    i: str
    j: str
    coeffs: tuple[tuple[str, Fraction], ...]  # (basis name, coefficient)


@dataclass(frozen=True)
class FlowPin:
    """Regression pin for the flow sign convention: starting at the named
    functional, flowing along the generator scales one coordinate like
    exp(rate * t)."""

    functional: str
    generator: str
    coordinate: str
    rate: Fraction


@dataclass(frozen=True)
class OrbitFixtures:
    parametrizations: tuple[Parametrization, ...] = ()
    invariants: tuple[FixtureInvariant, ...] = ()
    midpoint_pair: tuple[str, str] | None = None
    flow_pins: tuple[FlowPin, ...] = ()

    def parametrization(self, name: str) -> Parametrization:
        for p in self.parametrizations:
            if p.name == name:
                return p
        raise KeyError(name)


@dataclass(frozen=True)
class AlgebraDocument:
    name: str
    dim: int
    basis: tuple[str, ...]
    brackets: tuple[BracketEntry, ...]
    functionals: tuple[tuple[str, tuple[Fraction, ...]], ...] = ()
    metadata: Mapping[str, Any] = field(default_factory=dict)
    orbit_fixtures: OrbitFixtures | None = None

    def algebra(self) -> LieAlgebra:
        index = {name: k for k, name in enumerate(self.basis)}
        structure: dict[tuple[int, int, int], Fraction] = {}
        for entry in self.brackets:
            i, j = index[entry.i], index[entry.j]
            sign = 1
            if i > j:
                i, j, sign = j, i, -1
            for name, c in entry.coeffs:
                structure[(i, j, index[name])] = sign * c
        return LieAlgebra(self.dim, self.basis, structure)

    def functional(self, name: str) -> Covector:
        for fname, coeffs in self.functionals:
            if fname == name:
                return Covector(coeffs)
        raise ParseError(f"functionals.{name}", "no functional with this name")

    def functional_names(self) -> list[str]:
        return [fname for fname, _ in self.functionals]


def _expect(condition: bool, path: str, message: str) -> None:
    if not condition:
        raise ParseError(path, message)


def _parse_term(obj: Any, path: str, variables: set[str] | None) -> Term:
    _expect(isinstance(obj, dict), path, "term must be an object")
    unknown = set(obj) - {"c", "pow", "exp"}
    _expect(not unknown, path, f"unknown term keys {sorted(unknown)}")
    coeff = parse_rational(obj.get("c", "1"), f"{path}.c")
    powers = []
    for name, p in sorted(obj.get("pow", {}).items()):
        _expect(isinstance(p, int), f"{path}.pow.{name}", "power must be an integer")
        if variables is not None:
            _expect(name in variables, f"{path}.pow.{name}", "unknown variable")
        powers.append((name, p))
    exponents = []
    for name, r in sorted(obj.get("exp", {}).items()):
        if variables is not None:
            _expect(name in variables, f"{path}.exp.{name}", "unknown variable")
        exponents.append((name, parse_rational(r, f"{path}.exp.{name}")))
    return Term(coeff, tuple(powers), tuple(exponents))


def _parse_terms(obj: Any, path: str, variables: set[str] | None) -> tuple[Term, ...]:
    _expect(isinstance(obj, list), path, "expected a list of terms")
    return tuple(_parse_term(t, f"{path}[{k}]", variables) for k, t in enumerate(obj))


def _parse_orbit_fixtures(obj: Any, path: str, basis: Sequence[str], functional_names: set[str]) -> OrbitFixtures:
    _expect(isinstance(obj, dict), path, "orbit_fixtures must be an object")
    basis_set = set(basis)
    parametrizations = []
    for pname, pobj in sorted(obj.get("parametrizations", {}).items()):
        ppath = f"{path}.parametrizations.{pname}"
        _expect(isinstance(pobj, dict), ppath, "parametrization must be an object")
        params = tuple(pobj.get("params", []))
        _expect(all(isinstance(p, str) for p in params), f"{ppath}.params", "params must be strings")
        coords = []
        for cname, terms in sorted(pobj.get("coords", {}).items()):
            _expect(cname in basis_set, f"{ppath}.coords.{cname}", "unknown basis name")
            coords.append((cname, _parse_terms(terms, f"{ppath}.coords.{cname}", set(params))))
        parametrizations.append(Parametrization(pname, params, tuple(coords)))
    known = {p.name for p in parametrizations}
    invariants = []
    for k, iobj in enumerate(obj.get("invariants", [])):
        ipath = f"{path}.invariants[{k}]"
        _expect(isinstance(iobj, dict), ipath, "invariant must be an object")
        name = iobj.get("name")
        _expect(isinstance(name, str), f"{ipath}.name", "invariant needs a name")
        num = _parse_terms(iobj.get("num", []), f"{ipath}.num", basis_set)
        den = _parse_terms(iobj.get("den", [{"c": "1"}]), f"{ipath}.den", basis_set)
        expected = None
        sign = None
        if "expected" in iobj:
            expected = parse_rational(iobj["expected"], f"{ipath}.expected")
        if "sign" in iobj:
            _expect(iobj["sign"] in ("+", "-"), f"{ipath}.sign", "sign must be '+' or '-'")
            sign = 1 if iobj["sign"] == "+" else -1
        _expect((expected is None) != (sign is None), ipath, "need exactly one of expected/sign")
        functional = iobj.get("orbit")
        if functional is not None:
            _expect(functional in functional_names, f"{ipath}.orbit", "unknown functional name")
        invariants.append(FixtureInvariant(name, num, den, expected, sign, functional))
    midpoint_pair = None
    if "midpoint_pair" in obj:
        pair = obj["midpoint_pair"]
        _expect(
            isinstance(pair, list) and len(pair) == 2 and all(p in known for p in pair),
            f"{path}.midpoint_pair",
            "must name two parametrizations",
        )
        midpoint_pair = (pair[0], pair[1])
    pins = []
    for k, pin in enumerate(obj.get("flow_pins", [])):
        ppath = f"{path}.flow_pins[{k}]"
        _expect(isinstance(pin, dict), ppath, "flow pin must be an object")
        _expect(pin.get("functional") in functional_names, f"{ppath}.functional", "unknown functional")
        _expect(pin.get("generator") in basis_set, f"{ppath}.generator", "unknown basis name")
        _expect(pin.get("coordinate") in basis_set, f"{ppath}.coordinate", "unknown basis name")
        pins.append(
            FlowPin(
                pin["functional"],
                pin["generator"],
                pin["coordinate"],
                parse_rational(pin.get("rate"), f"{ppath}.rate"),
            )
        )
    return OrbitFixtures(tuple(parametrizations), tuple(invariants), midpoint_pair, tuple(pins))


def parse_document(data: Any) -> AlgebraDocument:
    """Validate a decoded JSON object into an AlgebraDocument."""
    _expect(isinstance(data, dict), "$", "document must be a JSON object")
    name = data.get("name", "")
    _expect(isinstance(name, str) and name != "", "name", "document needs a nonempty name")
    dim = data.get("dim")
    _expect(isinstance(dim, int) and dim >= 1, "dim", "dim must be a positive integer")
    basis = data.get("basis")
    _expect(isinstance(basis, list) and len(basis) == dim, "basis", f"expected {dim} basis names")
    _expect(all(isinstance(b, str) for b in basis), "basis", "basis names must be strings")
    _expect(len(set(basis)) == dim, "basis", "basis names must be distinct")
    basis = tuple(basis)
    basis_set = set(basis)

    entries = []
    seen_pairs: set[tuple[str, str]] = set()
    for k, b in enumerate(data.get("brackets", [])):
        path = f"brackets[{k}]"
        _expect(isinstance(b, dict), path, "bracket must be an object")
        i, j = b.get("i"), b.get("j")
        _expect(i in basis_set, f"{path}.i", f"unknown basis name {i!r}")
        _expect(j in basis_set, f"{path}.j", f"unknown basis name {j!r}")
        _expect(i != j, path, "bracket of an element with itself is zero and may not be listed")
        key = (i, j) if basis.index(i) < basis.index(j) else (j, i)
        _expect(key not in seen_pairs, path, f"duplicate bracket for pair ({i}, {j})")
        seen_pairs.add(key)
        coeffs = []
        raw = b.get("coeffs", {})
        _expect(isinstance(raw, dict), f"{path}.coeffs", "coeffs must be an object")
        for cname in sorted(raw):
            _expect(cname in basis_set, f"{path}.coeffs.{cname}", f"unknown basis name {cname!r}")
            coeffs.append((cname, parse_rational(raw[cname], f"{path}.coeffs.{cname}")))
        entries.append(BracketEntry(i, j, tuple(coeffs)))

    functionals = []
    raw_functionals = data.get("functionals", {})
    _expect(isinstance(raw_functionals, dict), "functionals", "functionals must be an object")
    for fname in sorted(raw_functionals):
        coeffs = raw_functionals[fname]
        path = f"functionals.{fname}"
        _expect(isinstance(coeffs, list) and len(coeffs) == dim, path, f"expected {dim} coefficients")
        functionals.append(
            (fname, tuple(parse_rational(c, f"{path}[{k}]") for k, c in enumerate(coeffs)))
        )

    metadata = data.get("metadata", {})
    _expect(isinstance(metadata, dict), "metadata", "metadata must be an object")

    orbit_fixtures = None
    if "orbit_fixtures" in data and data["orbit_fixtures"] is not None:
        orbit_fixtures = _parse_orbit_fixtures(
            data["orbit_fixtures"], "orbit_fixtures", basis, {f for f, _ in functionals}
        )

    unknown = set(data) - {"schema", "name", "dim", "basis", "brackets", "functionals", "metadata", "orbit_fixtures"}
    _expect(not unknown, "$", f"unknown top-level keys {sorted(unknown)}")

    return AlgebraDocument(name, dim, basis, tuple(entries), tuple(functionals), metadata, orbit_fixtures)


def parse_algebra(text: str) -> AlgebraDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError("$", f"invalid JSON: {e}") from None
    return parse_document(data)


def _term_to_json(term: Term) -> dict:
    out: dict[str, Any] = {"c": format_rational(term.coeff)}
    if term.powers:
        out["pow"] = {name: p for name, p in term.powers}
    if term.exponents:
        out["exp"] = {name: format_rational(r) for name, r in term.exponents}
    return out


def document_to_json(doc: AlgebraDocument) -> dict:
    out: dict[str, Any] = {
        "schema": ALGEBRA_SCHEMA,
        "name": doc.name,
        "dim": doc.dim,
        "basis": list(doc.basis),
        "brackets": [
            {"i": e.i, "j": e.j, "coeffs": {n: format_rational(c) for n, c in e.coeffs}}
            for e in doc.brackets
        ],
        "functionals": {
            fname: [format_rational(c) for c in coeffs] for fname, coeffs in doc.functionals
        },
        "metadata": dict(doc.metadata),
    }
    fx = doc.orbit_fixtures
    if fx is not None:
        fxout: dict[str, Any] = {}
        if fx.parametrizations:
            fxout["parametrizations"] = {
                p.name: {
                    "params": list(p.params),
                    "coords": {n: [_term_to_json(t) for t in terms] for n, terms in p.coords},
                }
                for p in fx.parametrizations
            }
        if fx.invariants:
            invs = []
            for inv in fx.invariants:
                iobj: dict[str, Any] = {
                    "name": inv.name,
                    "num": [_term_to_json(t) for t in inv.numerator],
                    "den": [_term_to_json(t) for t in inv.denominator],
                }
                if inv.expected is not None:
                    iobj["expected"] = format_rational(inv.expected)
                if inv.sign is not None:
                    iobj["sign"] = "+" if inv.sign > 0 else "-"
                if inv.functional is not None:
                    iobj["orbit"] = inv.functional
                invs.append(iobj)
            fxout["invariants"] = invs
        if fx.midpoint_pair:
            fxout["midpoint_pair"] = list(fx.midpoint_pair)
        if fx.flow_pins:
            fxout["flow_pins"] = [
                {
                    "functional": p.functional,
                    "generator": p.generator,
                    "coordinate": p.coordinate,
                    "rate": format_rational(p.rate),
                }
                for p in fx.flow_pins
            ]
        out["orbit_fixtures"] = fxout
    return out


def emit_algebra(doc: AlgebraDocument) -> str:
    return json.dumps(document_to_json(doc), indent=2, sort_keys=True) + "\n"


def document_hash(doc: AlgebraDocument) -> str:
    canonical = json.dumps(document_to_json(doc), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


def subspace_to_json(s: Subspace) -> dict:
    return {
        "ambient_dim": s.ambient_dim,
        "basis": [[format_rational(x) for x in b] for b in s.basis],
    }


def subspace_from_json(obj: Mapping[str, Any]) -> Subspace:
    vectors = [
        [parse_rational(x, f"basis[{i}][{k}]") for k, x in enumerate(b)]
        for i, b in enumerate(obj["basis"])
    ]
    return Subspace.span(obj["ambient_dim"], vectors)


def covector_to_json(ell: Covector) -> list[str]:
    return [format_rational(c) for c in ell.coeffs]


def report_to_json(report: ClassificationReport) -> dict:
    expo: dict[str, Any] = {"status": report.exponentiality.status}
    if report.exponentiality.reason:
        expo["reason"] = report.exponentiality.reason
    if report.exponentiality.witness_name:
        expo["witness"] = report.exponentiality.witness_name
    cert = report.exponentiality.certificate
    if cert is not None:
        expo["certificate"] = {
            "element": [format_rational(c) for c in cert.element],
            "charpoly": [format_rational(c) for c in cert.charpoly],
            "squares_poly": [format_rational(c) for c in cert.squares_poly],
            "negative_root_count": cert.negative_root_count,
        }
    return {
        "solvable": report.solvable,
        "nilpotent": report.nilpotent,
        "unimodular": report.unimodular,
        "exponentiality": expo,
        "stabilizer": subspace_to_json(report.stabilizer),
        "orbit_dim": report.orbit_dim,
        "stabilizer_is_ideal": report.stabilizer_is_ideal,
        "pker_algebra": subspace_to_json(report.pker_algebra),
        "si_mod_pker": report.si_mod_pker,
        "quotient_unimodular": report.quotient_unimodular,
        "affine_hull_direction": subspace_to_json(report.affine_hull_direction),
        "orbit_closed_affine": report.orbit_closed_affine,
        "cs_status": report.cs_status,
        "notes": list(report.notes),
    }


def report_document(
    report: ClassificationReport,
    *,
    algebra_name: str,
    functional_name: str | None,
    ell: Covector,
    input_hash: str,
    seed: int,
) -> dict:
    return {
        "schema": REPORT_SCHEMA,
        "algebra": algebra_name,
        "functional": {"name": functional_name, "coeffs": covector_to_json(ell)},
        "report": report_to_json(report),
        "provenance": {
            "input_sha256": input_hash,
            "tool_version": TOOL_VERSION,
            "seed": seed,
        },
    }


def emit_report(doc: Mapping[str, Any]) -> str:
    """Deterministic rendering: stable key order, no timestamps."""
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def render_text_report(doc: Mapping[str, Any]) -> str:
    """Human-readable view derived from the JSON document."""
    r = doc["report"]
    lines = [
        f"algebra: {doc['algebra']}",
        f"functional: {doc['functional']['name'] or 'inline'} = {doc['functional']['coeffs']}",
        f"solvable: {r['solvable']}",
        f"nilpotent: {r['nilpotent']}",
        f"unimodular: {r['unimodular']}",
        f"exponentiality: {r['exponentiality']['status']}"
        + (f" ({r['exponentiality'].get('witness', r['exponentiality'].get('reason', ''))})"
           if r['exponentiality']['status'] == 'refuted' else ""),
        f"stabilizer dim: {len(r['stabilizer']['basis'])}",
        f"orbit dim: {r['orbit_dim']}",
        f"stabilizer is ideal / SI mod projective kernel: {r['si_mod_pker']}",
        f"projective-kernel algebra dim: {len(r['pker_algebra']['basis'])}",
        f"quotient unimodular: {r['quotient_unimodular']}",
        f"orbit closed and equal to affine hull: {r['orbit_closed_affine']}",
        f"coherent-state status: {r['cs_status']}",
    ]
    for note in r["notes"]:
        lines.append(f"note: {note}")
    return "\n".join(lines) + "\n"
