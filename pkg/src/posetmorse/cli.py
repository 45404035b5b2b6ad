"""Command-line front end.

Every run emits a single deterministic report: a JSON document with a
schema_version (--format doc) or a human table derived from the same
data (--format table).  Exit codes: 0 when every verdict holds, 1 for
input or precondition errors, 2 when a theorem verdict comes back false,
which the theorems say cannot happen on valid input and therefore flags
a bug.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .cellular import cellular_chain_complex, check_cellularity, verify_cellular_agreement
from .category import hccat, hccat_face_poset_consistency, ls_theorem_check, minimal_subcomplex
from .dynamics import basic_sets, is_morse_matching, is_morse_smale, orbit_multiplicity
from .errors import PosetMorseError
from .formats import (
    load_complex,
    load_poset,
    parse_function_text,
    parse_matching_text,
    report_document,
    serialize_function,
    serialize_matching,
    serialize_poset,
)
from .homology import homology, poset_homology, simplicial_chain_complex
from .inequalities import (
    euler_characteristics,
    orbit_inequalities_multiplicity,
    orbit_inequalities_torsion,
    strong_morse_bott,
)
from .morse import MorseBottFunction, filtration_sweep, integrate_matching
from .randgen import XorShift64Star, random_graded_poset, random_matching, random_simplicial_complex
from .simplicial import face_poset, serialize_simplicial_complex


def _read(path: str) -> str:
    return Path(path).read_text()


def _load_space(args):
    """The poset under analysis, plus the raw complex when kind=simplicial."""
    text = _read(args.input)
    if args.kind == "simplicial":
        complex = load_complex(text)
        return face_poset(complex), complex, False
    poset, reduced = load_poset(text)
    return poset, None, reduced


def _emit(args, command: str, results: dict, inputs: dict | None = None,
          table_lines: list[str] | None = None) -> None:
    if args.format == "doc":
        sys.stdout.write(report_document(command, results, inputs))
    else:
        for line in table_lines or []:
            print(line)


def _rows_table(report) -> list[str]:
    lines = [f"{report.name}:"]
    lines.append("  k | lhs | rhs | ok")
    for row in report.rows:
        lines.append(f"  {row.k} | {row.lhs} | {row.rhs} | {'yes' if row.ok else 'NO'}")
    lines.append(f"  holds: {report.holds}")
    return lines


def cmd_validate(args) -> int:
    poset, complex, reduced = _load_space(args)
    if reduced:
        print("warning: input covers were not transitively reduced; "
              "redundant pairs dropped", file=sys.stderr)
    report = check_cellularity(poset)
    results = {"cellularity": report.to_doc(), "elements": len(poset.elements),
               "covers": len(poset.covers)}
    lines = [f"elements: {len(poset.elements)}  covers: {len(poset.covers)}",
             f"graded: {report.is_graded}",
             f"cellular: {report.is_cellular}",
             f"homologically admissible: {report.is_homologically_admissible}"]
    if complex is not None:
        counts = {d: len(s) for d, s in complex.simplices.items()}
        results["f_vector"] = {str(d): c for d, c in sorted(counts.items())}
        lines.insert(0, "f-vector: " + " ".join(f"{d}:{c}" for d, c in sorted(counts.items())))
    for w in report.witnesses[:10]:
        lines.append(f"  witness: {w}")
    _emit(args, "validate", results, {"input": args.input, "kind": args.kind}, lines)
    return 0


def cmd_homology(args) -> int:
    poset, complex, _ = _load_space(args)
    if args.kind == "simplicial" and not args.via_poset:
        summary = homology(simplicial_chain_complex(complex, reduced=args.reduced),
                           args.coeff)
    else:
        summary = poset_homology(poset, reduced=args.reduced, coefficients=args.coeff)
    results = {"homology": summary.to_doc(), "pretty": str(summary)}
    _emit(args, "homology", results, {"input": args.input, "kind": args.kind},
          [str(summary)])
    return 0


def cmd_cellular(args) -> int:
    poset, _, _ = _load_space(args)
    cell = cellular_chain_complex(poset)
    agrees = verify_cellular_agreement(poset)
    summary = homology(cell.complex, args.coeff)
    results = {
        "incidence": cell.incidence_table(),
        "boundaries": {str(p): mat.to_lists()
                       for p, mat in sorted(cell.complex.boundary.items())},
        "cellular_homology": summary.to_doc(),
        "order_complex_homology": poset_homology(poset, coefficients=args.coeff).to_doc(),
        "pipelines_agree": agrees,
    }
    lines = [f"cellular homology: {summary}", f"pipelines agree: {agrees}"]
    lines += [f"  eps({x}, {w}) = {e}" for x, w, e in cell.incidence_table()]
    _emit(args, "cellular", results, {"input": args.input, "kind": args.kind}, lines)
    return 0 if agrees else 2


def cmd_matching(args) -> int:
    poset, _, _ = _load_space(args)
    matching = parse_matching_text(poset, _read(args.matching))
    dec = basic_sets(poset, matching)
    morse = is_morse_matching(poset, matching)
    results = {"basic_sets": dec.to_doc(), "morse": morse}
    lines = [f"critical: {', '.join(dec.critical) or '(none)'}"]
    for cls in dec.orbit_classes:
        lines.append(f"orbit class (index {cls.index}): {', '.join(cls.elements)}")
    lines.append(f"Morse matching: {morse}")
    report = check_cellularity(poset)
    if report.is_homologically_admissible:
        verdict = is_morse_smale(poset, matching)
        results["morse_smale"] = verdict.is_morse_smale
        lines.append(f"Morse-Smale: {verdict.is_morse_smale}")
        if verdict.is_morse_smale and verdict.orbits:
            cell = cellular_chain_complex(poset)
            mults = [{"start": o.nodes[0], "index": o.index,
                      "multiplicity": orbit_multiplicity(poset, matching, o, cell)}
                     for o in verdict.orbits]
            results["orbit_multiplicities"] = mults
            for m in mults:
                lines.append(f"orbit at {m['start']}: index {m['index']}, "
                             f"multiplicity {m['multiplicity']:+d}")
    _emit(args, "matching", results,
          {"input": args.input, "matching": args.matching}, lines)
    return 0


def cmd_integrate(args) -> int:
    poset, _, _ = _load_space(args)
    matching = parse_matching_text(poset, _read(args.matching))
    function = integrate_matching(poset, matching)
    text = serialize_function(poset, function.values)
    if args.format == "doc":
        results = {"function": {e: str(v) for e, v in function.values.items()}}
        _emit(args, "integrate", results,
              {"input": args.input, "matching": args.matching})
    else:
        sys.stdout.write(text)
    return 0


def cmd_sweep(args) -> int:
    poset, _, _ = _load_space(args)
    matching = parse_matching_text(poset, _read(args.matching))
    if args.function:
        values = parse_function_text(poset, _read(args.function))
        function = MorseBottFunction(poset=poset, values=values, matching=matching)
    else:
        function = integrate_matching(poset, matching)
    reports, ok = filtration_sweep(poset, function, matching)
    results = {"ok": ok, "intervals": [r.to_doc() for r in reports]}
    lines = []
    for r in reports:
        lo, hi = r.interval
        lines.append(f"[{lo}, {hi}] {r.kind}: {'ok' if r.ok else 'FAILED'}")
    lines.append(f"sweep: {'ok' if ok else 'FAILED'}")
    _emit(args, "sweep", results,
          {"input": args.input, "matching": args.matching}, lines)
    return 0 if ok else 2


def cmd_inequalities(args) -> int:
    poset, _, _ = _load_space(args)
    matching = parse_matching_text(poset, _read(args.matching))
    reports = [strong_morse_bott(poset, matching, args.coeff)]
    verdict = is_morse_smale(poset, matching)
    if verdict.is_morse_smale:
        reports.append(orbit_inequalities_torsion(poset, matching))
        reports.append(orbit_inequalities_multiplicity(poset, matching))
    results = {r.name: r.to_doc() for r in reports}
    results["morse_smale"] = verdict.is_morse_smale
    lines = []
    for r in reports:
        lines.extend(_rows_table(r))
    ok = all(r.holds for r in reports)
    _emit(args, "inequalities", results,
          {"input": args.input, "matching": args.matching}, lines)
    return 0 if ok else 2


def cmd_hccat(args) -> int:
    poset, complex, _ = _load_space(args)
    value = hccat(poset)
    results = {"hccat": value}
    lines = [f"hccat: {value}"]
    cell = cellular_chain_complex(poset)
    witness = minimal_subcomplex(cell.complex)
    results["minimal_subcomplex_ranks"] = {str(k): v for k, v in sorted(witness.rank_profile.items())}
    results["minimal_subcomplex_quasi_isomorphism"] = witness.quasi_isomorphism_verified
    lines.append("minimal subcomplex ranks: " + " ".join(
        f"{k}:{v}" for k, v in sorted(witness.rank_profile.items())))
    ok = witness.quasi_isomorphism_verified
    ok = ok and sum(witness.rank_profile.values()) == value
    if complex is not None:
        consistent = hccat_face_poset_consistency(complex)
        results["face_poset_consistent"] = consistent
        lines.append(f"face-poset consistency: {consistent}")
        ok = ok and consistent
    chi_g, chi = euler_characteristics(poset)
    results["chi_g"] = chi_g
    results["chi"] = chi
    lines.append(f"chi_g: {chi_g}  chi: {chi}")
    _emit(args, "hccat", results, {"input": args.input, "kind": args.kind}, lines)
    return 0 if ok else 2


def cmd_ls_check(args) -> int:
    poset, _, _ = _load_space(args)
    matching = parse_matching_text(poset, _read(args.matching))
    report = ls_theorem_check(poset, matching)
    ok = report.holds and report.intermediate_holds and report.counts_match_formula
    lines = [
        f"hccat: {report.hccat_value}",
        f"sum over basic sets: {report.basic_set_bound}",
        f"theorem holds: {report.holds}",
        f"intermediate bound (sum m*): {report.intermediate_holds}",
        f"m* matches c_p + A_p + A_(p-1) and flow ranks: {report.counts_match_formula}",
    ]
    for w in report.warnings:
        lines.append(f"warning: {w}")
    _emit(args, "ls-check", report.to_doc() | {"ok": ok},
          {"input": args.input, "matching": args.matching}, lines)
    return 0 if ok else 2


def cmd_gen(args) -> int:
    rng = XorShift64Star(args.seed)
    if args.kind == "poset":
        poset = random_graded_poset(rng, max_elements=args.size)
        sys.stdout.write(serialize_poset(poset))
    elif args.kind == "simplicial":
        complex = random_simplicial_complex(rng, max_vertices=max(2, min(args.size, 9)))
        sys.stdout.write(serialize_simplicial_complex(complex))
    elif args.kind == "matching":
        if not args.input:
            raise PosetMorseError("gen --kind matching needs --input POSET")
        poset, _, _ = _load_space(args)
        matching = random_matching(rng, poset)
        sys.stdout.write(serialize_matching(matching))
    else:
        raise PosetMorseError(f"cannot generate kind {args.kind!r}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="posetmorse",
        description="Morse-Bott theory on finite posets: exact homology, "
                    "matching dynamics, inequality theorems, and the "
                    "homological Lusternik-Schnirelmann bound.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, matching=False, function=False, needs_input=True, kinds=None):
        p.add_argument("--input", required=needs_input, help="input file")
        p.add_argument("--kind", choices=kinds or ["poset", "simplicial"],
                       default="poset")
        p.add_argument("--coeff", choices=["int", "rat"], default="int")
        p.add_argument("--reduced", action="store_true")
        p.add_argument("--format", choices=["table", "doc"], default="table")
        if matching:
            p.add_argument("--matching", required=True, help="matching file")
        if function:
            p.add_argument("--function", help="function file (element value lines)")

    common(sub.add_parser("validate", help="poset/complex checks and cellularity report"))
    p = sub.add_parser("homology", help="homology of a poset or complex")
    common(p)
    p.add_argument("--via-poset", action="store_true",
                   help="for simplicial input, go through the face poset")
    common(sub.add_parser("cellular", help="incidence table and pipeline agreement"))
    common(sub.add_parser("matching", help="basic sets and matching verdicts"), matching=True)
    common(sub.add_parser("integrate", help="emit an integrated Morse-Bott function"),
           matching=True)
    common(sub.add_parser("sweep", help="collapse/attachment checks over the filtration"),
           matching=True, function=True)
    common(sub.add_parser("inequalities", help="all applicable inequality theorems"),
           matching=True)
    common(sub.add_parser("hccat", help="homological chain category and its subcomplex witness"))
    common(sub.add_parser("ls-check", help="Lusternik-Schnirelmann theorem verdicts"),
           matching=True)
    p = sub.add_parser("gen", help="deterministic random fixtures")
    common(p, needs_input=False, kinds=["poset", "simplicial", "matching"])
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--size", type=int, default=10)
    return parser


HANDLERS = {
    "validate": cmd_validate,
    "homology": cmd_homology,
    "cellular": cmd_cellular,
    "matching": cmd_matching,
    "integrate": cmd_integrate,
    "sweep": cmd_sweep,
    "inequalities": cmd_inequalities,
    "hccat": cmd_hccat,
    "ls-check": cmd_ls_check,
    "gen": cmd_gen,
}


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return HANDLERS[args.command](args)
    except PosetMorseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
