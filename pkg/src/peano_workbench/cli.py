"""Command line: ``peano-workbench <command> [options] PATH``.

Exit codes: 0 success, 1 semantic negative (rejected proof, witness found),
2 input error.  Options may also come from the environment as ``PAW_BOUND``,
``PAW_MODE``, ``PAW_BUDGET``, ``PAW_JSON`` and ``PAW_STRICT_PA``; flags win.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import engine
from .consistency import DEFAULT_COVERAGE, UncheckedProofError, consistency_scan
from .evidence import DEFAULT_BUDGET, default_relations, diagonal_d
from .kernel import ProofFormatError, check_proof, load_proof
from .machines import MachineSpecError, load_machines, run_tm
from .notation import ParseError, parse_formula, print_formula
from .syntax import free_variables, sorted_vars, universal_closure

ENV_PREFIX = "PAW_"
EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    def __init__(self, message, span=None):
        super().__init__(message)
        self.span = span


def _positive(text):
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return n


def _flag(text) -> bool:
    return str(text).strip().lower() in ("1", "true", "yes", "on")


def _env_defaults(env) -> dict:
    out = {}
    try:
        if ENV_PREFIX + "BOUND" in env:
            out["bound"] = _positive(env[ENV_PREFIX + "BOUND"])
        if ENV_PREFIX + "BUDGET" in env:
            out["budget"] = _positive(env[ENV_PREFIX + "BUDGET"])
    except argparse.ArgumentTypeError as e:
        raise InputError(f"environment: {e}") from None
    if ENV_PREFIX + "MODE" in env:
        if env[ENV_PREFIX + "MODE"] not in engine.MODES:
            raise InputError(f"environment: {ENV_PREFIX}MODE must be one of {', '.join(engine.MODES)}")
        out["mode"] = env[ENV_PREFIX + "MODE"]
    if ENV_PREFIX + "JSON" in env:
        out["json"] = _flag(env[ENV_PREFIX + "JSON"])
    if ENV_PREFIX + "STRICT_PA" in env:
        out["strict_pa"] = _flag(env[ENV_PREFIX + "STRICT_PA"])
    return out


def build_parser(defaults=None) -> argparse.ArgumentParser:
    d = {"bound": engine.DEFAULT_BOUND, "budget": DEFAULT_BUDGET, "mode": "standard",
         "json": False, "strict_pa": False}
    d.update(defaults or {})
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--bound", type=_positive, default=d["bound"],
                        help="enumeration bound / table size n (default %(default)s)")
    common.add_argument("--mode", choices=engine.MODES, default=d["mode"])
    common.add_argument("--budget", type=_positive, default=d["budget"],
                        help="Turing machine step budget (default %(default)s)")
    common.add_argument("--json", action="store_true", default=d["json"], help="JSON output")
    common.add_argument("--strict-pa", action="store_true", default=d["strict_pa"],
                        help="reject the reflexivity axiom EQ")

    p = argparse.ArgumentParser(prog="peano-workbench", description="Peano arithmetic proofs, truth verdicts and machine evidence.")
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("parse", parents=[common], help="parse and print a formula").add_argument("path")
    sub.add_parser("check", parents=[common], help="check a proof file").add_argument("path")
    sub.add_parser("eval", parents=[common], help="truth value of a formula").add_argument("path")
    sub.add_parser("verify", parents=[common], help="instance table for inputs up to --bound").add_argument("path")
    sub.add_parser("classify", parents=[common], help="computable / verifiable-only").add_argument("path")
    scan = sub.add_parser("scan", parents=[common], help="scan a proof directory for witnesses")
    scan.add_argument("path")
    scan.add_argument("--coverage", type=int, default=DEFAULT_COVERAGE)
    tm = sub.add_parser("tm", parents=[common], help="run one machine")
    tm.add_argument("index", type=_positive, help="1-based machine number")
    tm.add_argument("--input", default="", help="tape contents over 0, 1, _")
    tm.add_argument("--machines", help="machine file (default: bundled)")
    diag = sub.add_parser("diag", parents=[common], help="diagonal function table")
    diag.add_argument("--count", type=_positive, default=8)
    diag.add_argument("--machines", help="machine file (default: bundled)")
    return p


# input helpers


def _read(path) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from None


def _formula(path):
    # blank out comment lines in place so error offsets index the file itself
    lines = _read(path).split("\n")
    text = "\n".join(" " * len(line) if line.lstrip().startswith("#") else line for line in lines)
    try:
        return parse_formula(text.rstrip())
    except ParseError as e:
        raise InputError(str(e), [e.span.start, e.span.end]) from None


def _proof(path):
    try:
        return load_proof(path)
    except ProofFormatError as e:
        raise InputError(str(e)) from None
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from None


def _machines(args):
    try:
        return load_machines(getattr(args, "machines", None))
    except (MachineSpecError, OSError) as e:
        raise InputError(str(e)) from None


# commands; each returns (payload, exit code)


def cmd_parse(args):
    f = _formula(args.path)
    closure = universal_closure(f)
    return {
        "primitive": print_formula(f),
        "sugared": print_formula(f, "sugared"),
        "unicode": print_formula(f, "sugared", unicode=True),
        "free_variables": [v.name for v in sorted_vars(free_variables(f))],
        "closure": print_formula(closure, "sugared"),
        "closure_free_variables": [],
    }, EXIT_OK


def cmd_check(args):
    report = check_proof(_proof(args.path), strict_pa=args.strict_pa)
    return report.to_dict(), EXIT_OK if report.accepted else EXIT_NEGATIVE


def cmd_eval(args):
    f = _formula(args.path)
    v = engine.truth(f, args.bound, args.mode, default_relations(args.budget))
    return {"formula": print_formula(f, "sugared"),
            "closure": print_formula(universal_closure(f), "sugared"),
            "verdict": v.to_dict()}, EXIT_OK


def cmd_verify(args):
    f = _formula(args.path)
    if not free_variables(f):
        raise InputError("no free variables")
    table = engine.verify_up_to(f, args.bound, default_relations(args.budget), args.mode)
    return table.to_dict(), EXIT_OK


def cmd_classify(args):
    f = _formula(args.path)
    c = engine.classify(f, args.bound, default_relations(args.budget))
    return {"formula": print_formula(f, "sugared"), "classification": c.to_dict()}, EXIT_OK


def cmd_scan(args):
    root = Path(args.path)
    if not root.is_dir():
        raise InputError(f"not a directory: {root}")
    files = sorted(root.glob("*.proof"))
    if not files:
        raise InputError(f"no .proof files in {root}")
    corpus = [(p.name, _proof(p)) for p in files]
    try:
        report = consistency_scan(corpus, args.coverage, strict_pa=args.strict_pa)
    except UncheckedProofError as e:
        raise InputError(str(e)) from None
    return report.to_dict(), EXIT_NEGATIVE if report.witness_found else EXIT_OK


def cmd_tm(args):
    ms = _machines(args)
    if args.index > len(ms):
        raise InputError(f"machine {args.index} out of range 1..{len(ms)}")
    try:
        r = run_tm(ms[args.index - 1], args.input, args.budget)
    except ValueError as e:
        raise InputError(str(e)) from None
    return {"machine": args.index, "name": ms[args.index - 1].name, "input": args.input,
            "result": r.to_dict()}, EXIT_OK


def cmd_diag(args):
    ms = _machines(args)
    if args.count > len(ms):
        raise InputError(f"only {len(ms)} machines")
    rows = []
    for n in range(1, args.count + 1):
        value, ev = diagonal_d(n, ms, args.budget)
        rows.append({"n": n, "d": value, "evidence": ev.to_dict()})
    return {"budget": args.budget, "values": [r["d"] for r in rows], "rows": rows}, EXIT_OK


COMMANDS = {"parse": cmd_parse, "check": cmd_check, "eval": cmd_eval, "verify": cmd_verify,
            "classify": cmd_classify, "scan": cmd_scan, "tm": cmd_tm, "diag": cmd_diag}


# output


def _config(args) -> dict:
    cfg = {"bound": args.bound, "mode": args.mode, "budget": args.budget, "strict_pa": args.strict_pa}
    for key in ("path", "coverage", "index", "count"):
        if hasattr(args, key):
            cfg[key] = getattr(args, key)
    return cfg


def _text(command, payload, code) -> str:
    if "error" in payload:
        span = f" at {payload['span'][0]}..{payload['span'][1]}" if payload.get("span") else ""
        return f"error{span}: {payload['error']}"
    if command == "parse":
        fv = ", ".join(payload["free_variables"]) or "none"
        return (f"primitive: {payload['primitive']}\nsugared:   {payload['sugared']}\n"
                f"free vars: {fv}\nclosure:   {payload['closure']}")
    if command == "check":
        if payload["verdict"] == "Accepted":
            return f"Accepted ({len(payload['lines'])} lines)"
        return f"Rejected at line {payload['failing_line']}: {payload['reason']}"
    if command == "eval":
        v = payload["verdict"]
        extra = f" bound={v['bound']} polarity={v['polarity']}" if v["kind"] == engine.VERIFIED_UP_TO else ""
        label = f" ({v['evidence']['label']})" if v["evidence"]["label"] else ""
        return f"{payload['closure']}: {v['kind']}{extra}{label}"
    if command == "verify":
        lines = [f"{payload['formula']}  n={payload['n']}  polarity={payload['polarity']}"]
        for r in payload["rows"]:
            args = ", ".join(f"{x}={v}" for x, v in zip(payload["variables"], r["input"]))
            lines.append(f"  {args}: {r['kind']} {r['value']}")
        return "\n".join(lines)
    if command == "classify":
        c = payload["classification"]
        return f"{payload['formula']}: {c['kind']} at bound {c['bound']} ({c['detail']})"
    if command == "scan":
        lines = [f"{len(payload['goals'])} goals, coverage {payload['coverage']}"]
        for w in payload["simple_inconsistency"]:
            lines.append(f"simple inconsistency: {w['positive']} vs {w['negative']}: {w['formula']}")
        for w in payload["omega_patterns"]:
            lines.append(f"omega pattern up to {w['pattern_up_to']}: {w['negative']}: ~{w['formula']}")
        if not payload["witness_found"]:
            lines.append("no witness patterns")
        return "\n".join(lines)
    if command == "tm":
        return f"machine {payload['machine']} ({payload['name']}): {payload['result']['status']}"
    if command == "diag":
        return "d = " + " ".join(str(v) for v in payload["values"])
    return json.dumps(payload)


def render(report: dict, as_json: bool) -> str:
    if as_json:
        return json.dumps(report, sort_keys=True, indent=2) + "\n"
    return _text(report["command"], report["payload"], report["exit_code"]) + "\n"


def main(argv=None, env=None) -> int:
    env = os.environ if env is None else env
    try:
        defaults = _env_defaults(env)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    parser = build_parser(defaults)
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_OK
    try:
        payload, code = COMMANDS[args.command](args)
    except InputError as e:
        payload, code = {"error": str(e), "span": e.span}, EXIT_INPUT
    except engine.EngineError as e:
        payload, code = {"error": str(e), "span": None}, EXIT_INPUT
    report = {"command": args.command, "config": _config(args), "payload": payload, "exit_code": code}
    sys.stdout.write(render(report, args.json))
    return code


if __name__ == "__main__":
    sys.exit(main())
