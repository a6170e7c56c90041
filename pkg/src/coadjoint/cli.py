"""Command-line interface.

Exit codes: 0 success, 1 when --strict is set and the classification carries
warnings (or a requested check fails), 2 on input errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import checks, documents, fixtures, orbits
from .algebra import Covector, validate_algebra
from .documents import AlgebraDocument
from .errors import InputError
from .flows import write_samples_csv

SQRT2 = 1.4142135623730951


def _load_source(source: str) -> AlgebraDocument:
    if source in fixtures.fixture_names():
        return fixtures.get_fixture(source)
    path = Path(source)
    if not path.exists():
        raise InputError(
            f"{source!r} is neither a fixture name ({', '.join(fixtures.fixture_names())}) "
            "nor an existing file"
        )
    return documents.parse_algebra(path.read_text(encoding="utf-8"))


def _resolve_functional(doc: AlgebraDocument, spec: str) -> tuple[Covector, str | None]:
    if spec in doc.functional_names():
        return doc.functional(spec), spec
    if "=" not in spec:
        raise InputError(
            f"--ell/--f value {spec!r} is neither a functional of {doc.name!r} "
            f"({', '.join(doc.functional_names()) or 'none'}) nor inline 'name=p/q' pairs"
        )
    coeffs = {name: documents.parse_rational("0", "inline") for name in doc.basis}
    for k, pair in enumerate(spec.split(",")):
        if "=" not in pair:
            raise InputError(f"inline functional entry {pair!r} is not of the form name=p/q")
        name, value = pair.split("=", 1)
        name = name.strip()
        if name not in doc.basis:
            raise InputError(f"inline functional names unknown basis element {name!r}")
        coeffs[name] = documents.parse_rational(value.strip(), f"inline[{k}]")
    return Covector(tuple(coeffs[name] for name in doc.basis)), None


def _cmd_validate(args) -> int:
    doc = _load_source(args.source)
    alg = doc.algebra()
    violations = validate_algebra(alg)
    if violations:
        for v in violations:
            names = tuple(alg.basis_names[i] for i in v.triple)
            print(f"Jacobi identity fails at {names}: residual {list(v.residual)}", file=sys.stderr)
        return 2
    print(f"{doc.name}: valid Lie algebra of dimension {doc.dim}")
    return 0


def _cmd_classify(args) -> int:
    doc = _load_source(args.source)
    ell, ell_name = _resolve_functional(doc, args.ell)
    report = orbits.classify(doc.algebra(), ell, seed=args.seed)
    rdoc = documents.report_document(
        report,
        algebra_name=doc.name,
        functional_name=ell_name,
        ell=ell,
        input_hash=documents.document_hash(doc),
        seed=args.seed,
    )
    if args.json:
        sys.stdout.write(documents.emit_report(rdoc))
    else:
        sys.stdout.write(documents.render_text_report(rdoc))
    if args.strict and report.notes:
        return 1
    return 0


def _cmd_orbit(args) -> int:
    doc = _load_source(args.source)
    ell, _ = _resolve_functional(doc, args.ell)
    sample, result = checks.run_orbit_checks(
        doc,
        ell,
        n_points=args.samples,
        word_length=args.word_length,
        step_scale=args.step_scale,
        seed=args.seed,
        tol=args.tol,
    )
    if args.csv:
        write_samples_csv(sample, doc.basis, args.csv)
        print(f"wrote {len(sample.points)} samples to {args.csv}")
    print(f"orbit checks for {result.algebra} / {result.functional}:")
    print(f"  tangent rank at base: {result.base_rank} (exact orbit dim {result.orbit_dim})"
          f" -> {'ok' if result.rank_ok else 'MISMATCH'}")
    if result.membership_checked:
        print(f"  affine-hull membership: {result.n_points - result.membership_failures}"
              f"/{result.n_points} within {args.tol}")
    if result.invariants is not None:
        for r in result.invariants.results:
            detail = (
                f"max deviation {r.max_deviation:.3e}"
                if r.max_deviation or r.worst_value == 0.0
                else f"worst signed value {r.worst_value:.3e}"
            )
            print(f"  invariant {r.name}: {detail} -> {'ok' if r.passed else 'FAIL'}")
        for w in result.invariants.warnings:
            print(f"  warning: {w}", file=sys.stderr)
    for p in result.pins:
        print(f"  flow pin {p.pin.generator}->{p.pin.coordinate}: observed {p.observed:.12f}, "
              f"expected {p.expected:.12f} -> {'ok' if p.ok else 'FAIL'}")
    if not result.passed:
        print("orbit checks FAILED", file=sys.stderr)
        return 1
    print("all orbit checks passed")
    return 0


def _cmd_witness(args) -> int:
    doc = _load_source(args.source)
    ell, _ = _resolve_functional(doc, args.ell)
    f, _ = _resolve_functional(doc, args.f)
    alg = doc.algebra()
    ok = orbits.cs_witness_check(alg, ell, f)
    print(f"stabilizer(f) equals projective-kernel algebra(ell): {str(ok).lower()}")
    exit_code = 0
    if args.strict and not ok:
        exit_code = 1
    if doc.orbit_fixtures is not None and doc.orbit_fixtures.midpoint_pair is not None:
        check = checks.midpoint_check_for_document(doc, args.p, args.a, f, tol=args.tol)
        print(f"midpoint witness at p={args.p}, a={args.a}: "
              f"{'pass' if check.passed else 'FAIL'} (midpoint error {check.midpoint_error:.3e})")
        if args.strict and not check.passed:
            exit_code = 1
    return exit_code


def _cmd_fixtures(args) -> int:
    if args.action == "list" or args.action is None:
        for name in fixtures.fixture_names():
            doc = fixtures.get_fixture(name)
            print(f"{name}: dim {doc.dim}, functionals: {', '.join(doc.functional_names())}")
        return 0
    if args.name is None:
        raise InputError(f"fixtures {args.action} requires a fixture name")
    doc = fixtures.get_fixture(args.name)
    if args.action == "show":
        print(f"name: {doc.name}")
        print(f"dim: {doc.dim}")
        print(f"basis: {', '.join(doc.basis)}")
        alg = doc.algebra()
        for (i, j), comps in sorted(alg.pairs.items()):
            terms = " + ".join(
                f"{documents.format_rational(c)}*{alg.basis_names[k]}" for k, c in sorted(comps.items())
            )
            print(f"[{alg.basis_names[i]}, {alg.basis_names[j]}] = {terms}")
        for fname in doc.functional_names():
            print(f"functional {fname}: {documents.covector_to_json(doc.functional(fname))}")
        if doc.metadata.get("description"):
            print(f"description: {doc.metadata['description']}")
        return 0
    if args.action == "export":
        sys.stdout.write(documents.emit_algebra(doc))
        return 0
    raise InputError(f"unknown fixtures action {args.action!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coadjoint",
        description="Exact coadjoint-orbit classification for solvable Lie algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check the bracket table (Jacobi identity)")
    p.add_argument("source", help="fixture name or JSON file")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("classify", help="classify the orbit of a functional")
    p.add_argument("source")
    p.add_argument("--ell", required=True, help="functional name or inline 'name=p/q,...'")
    p.add_argument("--json", action="store_true", help="emit the JSON report document")
    p.add_argument("--strict", action="store_true", help="exit 1 when the report carries warnings")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("orbit", help="sample the orbit numerically and cross-check it")
    p.add_argument("source")
    p.add_argument("--ell", required=True)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--word-length", type=int, default=8)
    p.add_argument("--step-scale", type=float, default=1.0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--csv", help="write sampled points to this CSV file")
    p.set_defaults(func=_cmd_orbit)

    p = sub.add_parser("witness", help="coherent-state witness and midpoint checks")
    p.add_argument("source")
    p.add_argument("--ell", required=True, help="base functional of the orbit")
    p.add_argument("--f", required=True, help="candidate moment-map value")
    p.add_argument("--p", type=float, default=SQRT2, help="midpoint parameter p")
    p.add_argument("--a", type=float, default=0.0, help="midpoint parameter a")
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--strict", action="store_true", help="exit 1 when a check fails")
    p.set_defaults(func=_cmd_witness)

    p = sub.add_parser("fixtures", help="list, show or export built-in algebras")
    p.add_argument("action", nargs="?", choices=["list", "show", "export"], default="list")
    p.add_argument("name", nargs="?")
    p.set_defaults(func=_cmd_fixtures)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        print(f"run 'coadjoint {args.command} --help' for usage", file=sys.stderr)
        return 2
    except KeyError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
