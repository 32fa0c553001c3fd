"""Command-line entry point.

Exit codes: 0 success or agreement, 1 input error, 2 validated discrepancy.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

import numpy as np

from .codegen import construct, cross_check
from .cyclotomy import InvalidParameters
from .distance import (
    DEFAULT_ENUM_BUDGET,
    DEFAULT_SEARCH_CAP,
    exact_min_distance,
    min_weight_support_search,
)
from .reference import exit_status, run_examples
from .sequence import Setting, make_setting
from .verify import frobenius_facts, run_all

EXIT_OK, EXIT_INPUT, EXIT_DISCREPANCY = 0, 1, 2
COMMANDS = ("classify", "generate", "check", "distance", "examples")


@dataclass
class JobConfig:
    command: str
    n1: int | None = None
    n2: int | None = None
    q: int | None = None
    fmt: str = "json"
    wmax: int = 4
    enum_budget: int = DEFAULT_ENUM_BUDGET
    search_cap: int = DEFAULT_SEARCH_CAP
    theorem: int | None = None
    indices: tuple = ()
    examples: tuple = field(default_factory=tuple)

    def setting(self) -> Setting:
        if None in (self.n1, self.n2, self.q):
            raise InvalidParameters(f"{self.command} needs --n1, --n2 and --q")
        return make_setting(self.n1, self.n2, self.q)


def _jsonable(o):
    if isinstance(o, np.integer):
        return int(o)
    if isinstance(o, np.ndarray):
        return o.tolist()
    if isinstance(o, tuple):
        return list(o)
    raise TypeError(f"cannot serialise {type(o).__name__}")


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, default=_jsonable)


# commands return (payload, exit code)


def cmd_classify(cfg: JobConfig):
    s = cfg.setting()
    xc = cross_check(s)
    report = xc.classification.to_dict()
    return {
        "system": s.sys.summary(),
        "q": s.q,
        "m": s.m,
        "field_modulus": s.field.modulus.to_comma(),
        "classification": report,
        "frobenius": frobenius_facts(s),
        "d_divides_gcd": xc.d_divides_gcd,
    }, EXIT_OK


def cmd_generate(cfg: JobConfig):
    s = cfg.setting()
    if cfg.theorem is not None:
        code = construct(s, cfg.theorem, cfg.indices)
        out = code.record()
        out["distance"] = code.distance.to_dict()
        return {"code": out}, EXIT_OK
    xc = cross_check(s)
    out = {"code": xc.oracle.record(), "cross_check": xc.to_dict()}
    if xc.closed_form is not None:
        out["closed_form"] = xc.closed_form.record()
    return out, EXIT_OK if xc.agree else EXIT_DISCREPANCY


def cmd_check(cfg: JobConfig):
    s = cfg.setting()
    checks = run_all(s)
    xc = cross_check(s)
    checks.append({"check": "closed_form_agrees", "ok": xc.agree, "detail": xc.classification.branch})
    ok = all(c["ok"] for c in checks)
    return {"params": [s.n1, s.n2, s.q], "checks": checks, "ok": ok}, EXIT_OK if ok else EXIT_DISCREPANCY


def cmd_distance(cfg: JobConfig):
    s = cfg.setting()
    if cfg.theorem is not None:
        code = construct(s, cfg.theorem, cfg.indices)
    else:
        code = cross_check(s).oracle
    results = {}
    if code.distance is not None:
        results["theorem"] = code.distance.to_dict()
    exact = exact_min_distance(code, cfg.enum_budget)
    results["enumeration"] = exact.to_dict()
    if exact.kind != "exact":
        results["support_search"] = min_weight_support_search(code, cfg.wmax, cfg.search_cap).to_dict()
    return {"code": code.record(), "distance": results}, EXIT_OK


def cmd_examples(cfg: JobConfig):
    results = run_examples(cfg.examples or None, cfg.wmax, cfg.enum_budget, cfg.search_cap)
    return {"examples": [r.to_dict() for r in results]}, exit_status(results)


HANDLERS = {
    "classify": cmd_classify,
    "generate": cmd_generate,
    "check": cmd_check,
    "distance": cmd_distance,
    "examples": cmd_examples,
}


# table rendering


def _cell(v) -> str:
    if isinstance(v, dict):
        return ", ".join(f"{k}={_cell(x)}" for k, x in v.items())
    if isinstance(v, (list, tuple)):
        return "[" + ",".join(_cell(x) for x in v) + "]"
    s = str(v)
    return s if len(s) <= 48 else s[:45] + "..."


def _rows(rows: list, headers: list) -> str:
    cells = [[_cell(r.get(h, "")) for h in headers] for r in rows]
    widths = [max(len(h), *(len(c[i]) for c in cells)) if cells else len(h) for i, h in enumerate(headers)]
    line = lambda vals: "  ".join(v.ljust(w) for v, w in zip(vals, widths)).rstrip()
    return "\n".join([line(headers), line(["-" * w for w in widths])] + [line(c) for c in cells])


def render_table(command: str, payload: dict) -> str:
    if command == "examples":
        rows = []
        for ex in payload["examples"]:
            for c in ex["checks"]:
                rows.append({"example": ex["id"], "construction": ex["construction"], **c})
        return _rows(rows, ["example", "construction", "field", "reported", "computed", "status"])
    if command == "check":
        return _rows(payload["checks"], ["check", "ok", "detail"])
    flat = []

    def walk(prefix, v):
        if isinstance(v, dict):
            for k in sorted(v):
                walk(f"{prefix}.{k}" if prefix else k, v[k])
        else:
            flat.append({"key": prefix, "value": v})

    walk("", payload)
    return _rows(flat, ["key", "value"])


# argument parsing


def _int_tuple(text: str) -> tuple:
    try:
        return tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage, which would read as a discrepancy
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="whiteman6", description="Cyclic codes from order-6 two-prime cyclotomic sequences.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--n1", type=int)
    p.add_argument("--n2", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--format", dest="fmt", choices=("json", "table"), default="json")
    p.add_argument("--wmax", type=int, default=4)
    p.add_argument("--enum-budget", type=int, default=DEFAULT_ENUM_BUDGET)
    p.add_argument("--search-cap", type=int, default=DEFAULT_SEARCH_CAP)
    p.add_argument("--theorem", type=int, choices=range(3, 9))
    p.add_argument("--indices", type=_int_tuple, default=())
    p.add_argument("--examples", type=_int_tuple, default=(), help="subset of example ids, e.g. 1,2,7")
    return p


def config_from_args(argv=None) -> JobConfig:
    a = build_parser().parse_args(argv)
    return JobConfig(
        a.command, a.n1, a.n2, a.q, a.fmt, a.wmax, a.enum_budget, a.search_cap, a.theorem, a.indices, a.examples
    )


def run(cfg: JobConfig) -> tuple[str, int]:
    payload, code = HANDLERS[cfg.command](cfg)
    text = dumps(payload) if cfg.fmt == "json" else render_table(cfg.command, payload)
    return text, code


def main(argv=None) -> int:
    cfg = config_from_args(argv)
    try:
        text, code = run(cfg)
    except (InvalidParameters, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
