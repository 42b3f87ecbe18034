"""gradex command line: analyses of quantum-commutative graded extensions."""
from __future__ import annotations

import argparse
import json
import sys
from typing import Callable

from . import algebra, bicharacter, galois, hopf, realization, specfile
from .algebra import ParseError, format_element, format_word
from .kernel import StructureError
from .specfile import SpecDocument, SpecError

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _b_matrix(doc: SpecDocument) -> list[list[str]]:
    return [[str(x) for x in row] for row in doc.factor().matrix()]


def _report(command: str, doc: SpecDocument | None, verdict: str, details: dict, failures: list[str], **extra) -> dict:
    out = {
        "command": command,
        "spec_digest": specfile.digest(doc) if doc else None,
        "verdict": verdict,
        "details": details,
        "failures": failures,
    }
    out.update(extra)
    return out


def _parse_elements(spec, texts: list[str]):
    try:
        return [algebra.parse_element(spec, t) for t in texts]
    except ParseError as exc:
        raise UsageError(str(exc)) from None


# ---------------------------------------------------------------------------
# commands: each returns (report dict, text lines, exit code)


def cmd_validate(doc, args):
    spec = doc.algebra_spec()
    rep = bicharacter.validate(spec.cf)
    qc = algebra.quantum_commutativity_check(spec, args.max_len)
    ok = rep.passed and qc.passed
    details = {"b_matrix": _b_matrix(doc), "commutation_factor": rep.to_dict(), "quantum_commutativity": qc.to_dict()}
    lines = rep.lines() + qc.lines()
    return _report("validate", doc, "pass" if ok else "fail", details, rep.failures() + qc.failures()), lines, EXIT_OK if ok else EXIT_FAIL


def cmd_normal_form(doc, args):
    spec = doc.algebra_spec()
    if len(args.args) != 1:
        raise UsageError("normal-form takes exactly one WORD")
    try:
        raw = algebra.parse_raw(spec, args.args[0])
    except ParseError as exc:
        raise UsageError(str(exc)) from None
    result = algebra.Element()
    for coeff, word in raw:
        result = result + algebra.normal_form(spec, word, coeff)
    text = format_element(spec, result)
    details = {"input": args.args[0], "result": text,
               "terms": [{"coeff": str(c), "word": format_word(spec, w)} for w, c in result]}
    return _report("normal-form", doc, "ok", details, []), [text], EXIT_OK


def cmd_mul(doc, args):
    spec = doc.algebra_spec()
    if len(args.args) != 2:
        raise UsageError("mul takes exactly two elements E1 E2")
    u, v = _parse_elements(spec, args.args)
    text = format_element(spec, algebra.multiply(spec, u, v))
    return _report("mul", doc, "ok", {"left": args.args[0], "right": args.args[1], "result": text}, []), [text], EXIT_OK


def cmd_classify(doc, args):
    spec = doc.algebra_spec()
    rep = realization.consistency_check(spec)
    if doc.flux is not None:
        rep.flux_label = "composite_fermion" if rep.verdict == "reality" else "composite_boson"
    d = rep.to_dict()
    details = {"b_matrix": _b_matrix(doc), "injective": d["injective"], "lost_words": d["lost_words"],
               "pair_factors": d["pair_factors"]}
    failures = [f"pauli pair {p}" for p in d["pauli_pairs"]] + [f"r kills or identifies {w}" for w in d["lost_words"]]
    lines = [f"verdict: {rep.verdict}"]
    if rep.flux_label:
        lines.append(f"flux label: {rep.flux_label}")
    lines.append("b matrix: " + json.dumps(details["b_matrix"]))
    lines.append("pauli pairs: " + (", ".join(map(str, d["pauli_pairs"])) or "none"))
    lines.append("r injective: " + ("yes" if rep.injective else "no (" + ", ".join(rep.lost_words) + ")"))
    out = _report("classify", doc, rep.verdict, details, failures, flux_label=rep.flux_label, pauli_pairs=d["pauli_pairs"])
    return out, lines, EXIT_OK


def cmd_hopf_check(doc, args):
    spec = doc.algebra_spec()
    if spec.modulus == 0:
        raise UsageError("hopf-check needs a finite group; set group.modulus to n >= 2 (reduce Z^N to Z_n^N)")
    hm = hopf.hopf_module_check(spec)
    acts = hopf.action_checks(spec)
    cqt = bicharacter.validate(spec.cf)
    ok = hm.passed and acts.passed and cqt.passed
    details = {"hopf_module": hm.to_dict(), "actions": acts.to_dict(), "coquasitriangular": cqt.to_dict(),
               "b_matrix": _b_matrix(doc)}
    lines = hm.lines() + acts.lines() + cqt.lines()
    return (_report("hopf-check", doc, "pass" if ok else "fail", details, hm.failures() + acts.failures() + cqt.failures()),
            lines, EXIT_OK if ok else EXIT_FAIL)


def cmd_galois_check(doc, args):
    spec = doc.algebra_spec()
    if spec.modulus == 0:
        raise UsageError("galois-check needs a finite group; set group.modulus to n >= 2")
    if args.quotient:
        model, comps = galois.pauli_quotient(spec)
        mode = "pauli_quotient"
    else:
        model, comps = galois.full_extension(spec)
        mode = "full_extension"
    res = galois.galois_verdict(model, comps)
    found, missing = galois.surjectivity_witnesses(model, comps)
    failing = [p.to_dict() for p in res.evidence]
    details = {
        "mode": mode,
        "component_dims": {str(g): c.dim for g, c in sorted(comps.items())},
        "pairs_checked": len(res.report.pairs),
        "deficient_pairs": failing,
        "beta_witnesses": {"found": found, "missing": len(missing)},
    }
    failures = [f"A_{tuple(p['g'])} A_{tuple(p['h'])} spans {p['span_dim']} of {p['target_dim']} in A_{tuple(p['gh'])}" for p in failing]
    lines = [f"mode: {mode}", f"verdict: {res.verdict}",
             f"strong grading: {len(res.report.pairs) - len(failing)}/{len(res.report.pairs)} pairs pass",
             f"beta preimages: {found} found, {len(missing)} missing"]
    lines += ["  " + f for f in failures]
    return _report("galois-check", doc, res.verdict, details, failures), lines, EXIT_OK if res.is_galois else EXIT_FAIL


def _format_tensor(spec, result) -> list[dict]:
    out = []
    for gs, e in sorted(result.parts.items(), key=lambda kv: [g.exps for g in kv[0]]):
        out.append({"element": format_element(spec, e), "groups": [list(g.exps) for g in gs]})
    return out


def cmd_beta(doc, args):
    spec = doc.algebra_spec()
    if len(args.args) < 2:
        raise UsageError("beta takes at least two elements")
    elems = _parse_elements(spec, args.args)
    result = galois.beta(spec, *elems) if len(elems) == 2 else galois.beta_n(spec, elems)
    parts = _format_tensor(spec, result)
    lines = [f"{p['element']} (x) " + " (x) ".join("(" + ",".join(map(str, g)) + ")" for g in p["groups"]) for p in parts] or ["0"]
    return _report("beta", doc, "ok", {"n": len(elems) - 1, "parts": parts}, []), lines, EXIT_OK


COMMANDS: dict[str, Callable] = {
    "validate": cmd_validate,
    "normal-form": cmd_normal_form,
    "mul": cmd_mul,
    "classify": cmd_classify,
    "hopf-check": cmd_hopf_check,
    "galois-check": cmd_galois_check,
    "beta": cmd_beta,
}

HELP = {
    "validate": "check the commutation-factor axioms and quantum commutativity",
    "normal-form": "reduce a word to canonical form",
    "mul": "multiply two elements",
    "classify": "realization consistency: reality or degenerate",
    "hopf-check": "Hopf module compatibility over all basis/group pairs",
    "galois-check": "strong grading and beta surjectivity",
    "beta": "apply the canonical map to a0 a1 ... an",
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--spec", metavar="FILE", help="JSON algebra description")
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument("--max-len", type=int, default=2, metavar="K", help="word length bound for exhaustive checks")
    common.add_argument("--quotient", action="store_true", help="galois-check on the Pauli quotient subalgebra")

    parser = argparse.ArgumentParser(prog="gradex", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common], help=HELP[name])
        p.add_argument("args", nargs="*")
    p = sub.add_parser("preset", parents=[common], help="emit a preset spec document")
    p.add_argument("kind", choices=["flux"])
    p.add_argument("N", type=int)
    return parser


def _emit(report: dict, lines: list[str], as_json: bool, out):
    if as_json:
        out.write(json.dumps(report, sort_keys=True, indent=2) + "\n")
    else:
        out.write("\n".join(lines) + "\n")


def main(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    if args.command == "preset":
        if args.N < 1:
            err.write("gradex: error: flux preset needs N >= 1\n")
            return EXIT_USAGE
        out.write(specfile.dumps(specfile.flux_document(args.N)))
        return EXIT_OK

    if not args.spec:
        err.write(f"gradex: error: {args.command} requires --spec FILE\n")
        return EXIT_USAGE
    try:
        doc = specfile.parse_spec(args.spec)
    except OSError as exc:
        err.write(f"gradex: error: cannot read spec: {exc}\n")
        return EXIT_USAGE
    except SpecError as exc:
        err.write(f"gradex: error: {exc}\n")
        return EXIT_USAGE

    try:
        report, lines, code = COMMANDS[args.command](doc, args)
    except (UsageError, StructureError, IndexError, ValueError) as exc:
        err.write(f"gradex: error: {exc}\n")
        return EXIT_USAGE
    _emit(report, lines, args.json, out)
    return code


if __name__ == "__main__":
    sys.exit(main())
