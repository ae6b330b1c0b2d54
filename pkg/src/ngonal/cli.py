"""``ngonal`` command-line frontend.

Exit codes: 0 success, 1 bad input (syntax, duplicate component, usage),
2 numerical failure, 3 inconsistent monodromy (gcd not divisible).
Errors print one JSON line on stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence, TextIO

from . import numpoly, report
from .alexander import alexander_from_words
from .bench import BenchRow, run_bench
from .curve import Curve, parse_curve, singular_fibers
from .errors import NgonalError, NotDivisible, NumericalFailure
from .rbd import all_loops, build_diagram
from .tracker import global_monodromy, monodromy_from_diagram

COMMANDS = ("fibers", "monodromy", "alexander", "diagram", "bench")
EXIT_INPUT, EXIT_NUMERIC, EXIT_NOT_DIVISIBLE = 1, 2, 3


@dataclass
class RunConfig:
    command: str
    curve_text: str = ""
    eps0: float | None = None
    tol: float | None = None
    json: bool = False
    svg: Path | None = None
    degrees: list[int] = field(default_factory=list)
    count: int | None = None
    seed: int = 0


class UsageError(NgonalError, ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # keep exit 2 free for numerical failures
        raise UsageError(message)


def _positive_int(s: str) -> int:
    v = int(s)
    if v <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {s}")
    return v


def _positive_float(s: str) -> float:
    v = float(s)
    if not v > 0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {s}")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="ngonal", description="Braid monodromy and Alexander polynomials of completely reducible n-gonal curves.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("curve", nargs="?", default="",
                   help='curve, e.g. "(y-x^2)(y-x-1)(y-1)" or "y1 = x^2; y2 = x+1"')
    p.add_argument("--eps0", type=_positive_float, help="initial tracking step (default: 1/16 of the shortest loop edge)")
    p.add_argument("--tol", type=_positive_float, help="root clustering tolerance for singular fibers")
    p.add_argument("--json", action="store_true", help="emit JSON instead of text")
    p.add_argument("--svg", type=Path, help="write a figure (diagram, or bench timings) to this path")
    p.add_argument("--degree", type=_positive_int, nargs="+", default=[], help="bench: total degree(s)")
    p.add_argument("--count", type=_positive_int, help="bench: curves per degree")
    p.add_argument("--seed", type=int, default=0, help="bench: random seed")
    return p


def parse_args(argv: Sequence[str] | None = None) -> RunConfig:
    a = build_parser().parse_args(argv)
    cfg = RunConfig(a.command, a.curve, a.eps0, a.tol, a.json, a.svg, list(a.degree), a.count, a.seed)
    if cfg.command == "bench":
        if not cfg.degrees or cfg.count is None:
            raise UsageError("bench requires --degree and --count")
        if cfg.seed < 0:
            raise UsageError("--seed must be non-negative")
    elif not cfg.curve_text.strip():
        raise UsageError(f"{cfg.command} requires a curve")
    return cfg


def _emit(out: TextIO, lines: Sequence[str]) -> None:
    for line in lines:
        print(line, file=out)


def _tol(cfg: RunConfig) -> float:
    return numpoly.DEFAULT_MERGE_TOL if cfg.tol is None else cfg.tol


def _run_curve(cfg: RunConfig, out: TextIO) -> None:
    c: Curve = parse_curve(cfg.curve_text)
    fibers = singular_fibers(c, _tol(cfg))
    diagram = build_diagram([f.x for f in fibers]) if fibers else None

    if cfg.command == "fibers":
        doc = report.curve_doc(c, fibers)
        text = report.fibers_text(fibers)
    elif cfg.command == "diagram":
        if diagram is None:
            raise UsageError("curve has no singular fibers, nothing to draw")
        loops = all_loops(diagram)
        doc = report.curve_doc(c, fibers)
        doc["diagram"] = report.diagram_doc(diagram, loops)
        svg = cfg.svg or Path("diagram.svg")
        from .plotting import save_diagram
        save_diagram(diagram, svg, loops, title=c.source_text)
        text = report.fibers_text(fibers) + [f"diagram written to {svg}"]
    else:
        if diagram is None:
            results = global_monodromy(c, cfg.eps0, _tol(cfg))
        else:
            results = monodromy_from_diagram(c, fibers, diagram, cfg.eps0)
        if cfg.command == "monodromy":
            doc = report.curve_doc(c, fibers, results)
            text = report.monodromy_text(results)
        else:
            poly, _ = alexander_from_words([r.word for r in results])
            doc = report.curve_doc(c, fibers, results, poly)
            text = report.alexander_text(poly)

    if cfg.svg is not None and cfg.command != "diagram" and diagram is not None:
        from .plotting import save_diagram
        save_diagram(diagram, cfg.svg, all_loops(diagram), title=c.source_text)
    if cfg.json:
        print(report.dumps(doc), file=out)
    else:
        _emit(out, text)


def _run_bench(cfg: RunConfig, out: TextIO) -> None:
    rows: list[BenchRow] = []
    for deg in cfg.degrees:
        row, _, _ = run_bench(deg, cfg.count, cfg.seed)
        rows.append(row)
    if cfg.json:
        print(report.dumps([{"degree": r.degree, "count": r.count, "meanMs": report.fnum(r.mean_ms),
                             "maxMs": report.fnum(r.max_ms)} for r in rows]), file=out)
    else:
        print("degree,mean_ms,max_ms", file=out)
        for r in rows:
            print(f"{r.degree},{r.mean_ms:.3f},{r.max_ms:.3f}", file=out)
    if cfg.svg is not None:
        from .plotting import save_bench
        save_bench(rows, cfg.svg)


def _error(err: TextIO, exc: BaseException, code: int) -> int:
    record = {"error": type(exc).__name__, "message": str(exc), "exit": code}
    pos = getattr(exc, "position", None)
    if pos is not None:
        record["position"] = pos
    print(json.dumps(record, sort_keys=True), file=err)
    return code


def run(cfg: RunConfig, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        if cfg.command == "bench":
            _run_bench(cfg, out)
        else:
            _run_curve(cfg, out)
    except NotDivisible as e:
        return _error(err, e, EXIT_NOT_DIVISIBLE)
    except NumericalFailure as e:
        return _error(err, e, EXIT_NUMERIC)
    except (NgonalError, ValueError) as e:
        return _error(err, e, EXIT_INPUT)
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    try:
        cfg = parse_args(argv)
    except UsageError as e:
        return _error(sys.stderr, e, EXIT_INPUT)
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
