"""Command-line front end.

Exit codes: 0 success, 2 validation error, 3 budget exceeded, 1 internal
invariant violation. Errors go to stderr prefixed ``E:<code>:``.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import burau as _burau
from . import gassner as _gassner
from . import quantum, states
from .braids import BraidWord, parse_braid
from .errors import BraidrepError, InvariantViolation, ResourceError, ValidationError
from .multiindex import MultiIndex
from .ring import LaurentPoly, RingMatrix

COMMANDS = (
    "burau",
    "gassner",
    "alexander",
    "morton",
    "hfb",
    "hfp",
    "wedge",
    "qhat",
    "strace",
    "states",
    "bijection",
    "tangle-delta",
    "markov-check",
    "trivial-check",
)
NEEDS_INDICES = {"hfb", "hfp", "states", "tangle-delta"}


class UsageError(ValidationError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass
class CliConfig:
    command: str
    braid: BraidWord
    rows: MultiIndex | None = None
    cols: MultiIndex | None = None
    output: str = "text"
    var_display: str = "t-if-even"
    seed: int | None = None
    trials: int | None = None
    budget: int | None = None
    moves: str = "mixed"


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="braidrep", description="Burau/Gassner/gl(1|1) invariants of braid words.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--braid", required=True, help='e.g. "3: 1 -2 1 -2"')
    p.add_argument("--rows", help="multi-index, e.g. 2,3 (j* for tangle-delta, j for wedge)")
    p.add_argument("--cols", help="multi-index (k)")
    p.add_argument("--output", choices=("text", "json"), default="text")
    p.add_argument("--var-display", choices=("q", "t-if-even"), default="t-if-even")
    p.add_argument("--seed", type=int)
    p.add_argument("--trials", type=int)
    p.add_argument("--budget", type=int)
    p.add_argument("--moves", choices=("conjugate", "stabilize", "mixed"), default="mixed")
    return p


def parse_config(argv) -> CliConfig:
    ns = build_parser().parse_args(argv)
    braid = parse_braid(ns.braid)
    rows = MultiIndex.parse(braid.n, ns.rows) if ns.rows is not None else None
    cols = MultiIndex.parse(braid.n, ns.cols) if ns.cols is not None else None
    if ns.command in NEEDS_INDICES and (rows is None or cols is None):
        raise UsageError(f"{ns.command} requires --rows and --cols")
    if ns.command == "wedge" and (rows is None) != (cols is None):
        raise UsageError("wedge takes both --rows and --cols or neither")
    if ns.command not in NEEDS_INDICES | {"wedge"} and (rows is not None or cols is not None):
        raise UsageError(f"{ns.command} does not take --rows/--cols")
    if ns.budget is not None and ns.budget <= 0:
        raise UsageError("--budget must be positive")
    if ns.trials is not None and ns.trials < 0:
        raise UsageError("--trials must be >= 0")
    return CliConfig(
        ns.command, braid, rows, cols, ns.output, ns.var_display, ns.seed, ns.trials, ns.budget, ns.moves
    )


def _poly(cfg: CliConfig, p: LaurentPoly):
    return p.to_json_obj() if cfg.output == "json" else p.format(cfg.var_display)


def _matrix(cfg: CliConfig, m: RingMatrix):
    return m.to_json_obj() if cfg.output == "json" else m.format(cfg.var_display)


def _require(condition: bool, message: str):
    if not condition:
        raise InvariantViolation(message)


def execute(cfg: CliConfig):
    """Run one command; returns a JSON-able object or a text string."""
    w = cfg.braid
    budget = cfg.budget
    cmd = cfg.command
    if cmd == "burau":
        return _matrix(cfg, _burau.burau(w))
    if cmd == "gassner":
        return _matrix(cfg, _gassner.gassner(w))
    if cmd == "alexander":
        return _poly(cfg, _burau.alexander_via_minor(w))
    if cmd == "morton":
        return _poly(cfg, _burau.morton_det(w))
    if cmd == "hfb":
        value = _burau.hfb_poincare_minor(w, cfg.rows, cfg.cols)
        return _poly(cfg, value)
    if cmd == "hfp":
        return _poly(cfg, _gassner.hfp_poincare_minor(w, cfg.rows, cfg.cols))
    if cmd == "wedge":
        if cfg.rows is not None:
            return _poly(cfg, quantum.wedge_entry_minor(w, cfg.rows, cfg.cols))
        wm = quantum.wedge_rep(w)
        _require(wm == quantum.wedge_rep_composed(w), "wedge routes disagree")
        if cfg.output == "json":
            return {"basis": [list(b) for b in wm.basis], "matrix": wm.matrix.to_json_obj()}
        labels = " ".join(str(b) for b in wm.basis)
        return f"basis: {labels}\n{wm.matrix.format(cfg.var_display)}"
    if cmd == "qhat":
        value = quantum.qhat(w)
        canon = value.canonical_unit_form("q")
        if w.n >= 2:
            _require(canon == _burau.alexander_via_minor(w), "qhat disagrees with the Alexander minor")
        return _poly(cfg, canon)
    if cmd == "strace":
        value = quantum.super_trace(w)
        det = (RingMatrix.identity(w.n, value.vars) - _burau.burau(w)).det()
        _require(quantum.alternating_diagonal_sum(w) == det, "exterior-trace identity fails")
        return _poly(cfg, value)
    if cmd == "states":
        found = states.enumerate_states(w, cfg.rows, cfg.cols, budget)
        total = states.hfb_poincare_from_states(w, cfg.rows, cfg.cols, budget)
        _require(total == _burau.hfb_poincare_minor(w, cfg.rows, cfg.cols), "state sum disagrees with the minor")
        if cfg.output == "json":
            return {"states": [s.to_json_obj() for s in found], "sum": total.to_json_obj()}
        lines = [json.dumps(s.to_json_obj(), ensure_ascii=False) for s in found]
        lines.append(f"sum: {total.format(cfg.var_display)}")
        return "\n".join(lines)
    if cmd == "bijection":
        pairs = states.cfk_weight_bijection(w, budget)
        summary = {"cfk_states": len(pairs), "gamma_terms": len(pairs), "violations": 0}
        if cfg.output == "json":
            summary["pairs"] = [
                {"cfk": p.cfk_state.to_json_obj(), "gamma": p.gamma_term.to_json_obj(),
                 "cfk_weight": p.cfk_weight.to_json_obj(), "gamma_weight": p.gamma_weight.to_json_obj()}
                for p in pairs
            ]
            return summary
        return " ".join(f"{k}={v}" for k, v in summary.items())
    if cmd == "tangle-delta":
        value = states.tangle_delta(w, cfg.rows, cfg.cols)
        other = states.tangle_delta_from_states(w, cfg.rows, cfg.cols, budget)
        _require(value.equal_up_to_unit(other, "q"), "tangle_delta routes disagree")
        return _poly(cfg, value)
    if cmd == "markov-check":
        trials = 20 if cfg.trials is None else cfg.trials
        seed = 0 if cfg.seed is None else cfg.seed
        report = quantum.qhat_markov_check(w, trials, seed, cfg.moves)
        if cfg.output == "json":
            return report.to_json_obj()
        return f"trials={report.trials} failures={len(report.failures)}"
    if cmd == "trivial-check":
        value = _burau.trivial_braid_necessary(w)
        return value if cfg.output == "json" else str(value).lower()
    raise UsageError(f"unknown command {cmd}")


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        cfg = parse_config(argv)
        result = execute(cfg)
    except ValidationError as exc:
        return _fail(2, exc)
    except ResourceError as exc:
        return _fail(3, exc)
    except (InvariantViolation, BraidrepError) as exc:
        return _fail(1, exc)
    if isinstance(result, str):
        print(result)
    else:
        print(json.dumps(result, ensure_ascii=False))
    return 0


def _fail(code: int, exc: Exception) -> int:
    print(f"E:{code}: {exc}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
