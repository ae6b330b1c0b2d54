"""JSON and text renderings of pipeline results.

Floats are rounded to 12 significant digits and keys are sorted, so
``dumps(loads(s)) == s`` for every document produced here.
"""

from __future__ import annotations

import json
from typing import Any, Sequence

from .braid import word_to_string
from .curve import Curve, SingularFiber
from .exactalg import LaurentPoly, cyclotomic_display, format_poly
from .rbd import Diagram, DiagramLoop
from .tracker import MonodromyResult


def fnum(x: float) -> float:
    v = float(f"{x:.12g}")
    return 0.0 if v == 0 else v


def cnum(z: complex) -> dict[str, float]:
    return {"re": fnum(z.real), "im": fnum(z.imag)}


def dumps(doc: Any) -> str:
    return json.dumps(doc, sort_keys=True, indent=2)


def fiber_doc(f: SingularFiber) -> dict:
    # component indices are 1-based on the wire, matching y_1..y_n
    return {"x": cnum(f.x), "pairs": [[i + 1, j + 1, m] for i, j, m in f.pairs]}


def monodromy_doc(r: MonodromyResult) -> dict:
    return {
        "fiber": "infinity" if r.fiber is None else cnum(r.fiber.x),
        "word": list(r.word.letters),
        "wordStr": word_to_string(r.word.letters),
    }


def alexander_doc(p: LaurentPoly) -> dict:
    return {
        "coeffs": [int(c) for c in p.coeffs],
        "minDeg": p.min_deg,
        "display": cyclotomic_display(p),
    }


def curve_doc(c: Curve, fibers: Sequence[SingularFiber] = (),
              monodromies: Sequence[MonodromyResult] = (),
              alexander: LaurentPoly | None = None) -> dict:
    doc: dict[str, Any] = {
        "curve": c.source_text,
        "n": c.n,
        "fibers": [fiber_doc(f) for f in fibers],
        "monodromies": [monodromy_doc(r) for r in monodromies],
    }
    if alexander is not None:
        doc["alexander"] = alexander_doc(alexander)
    return doc


def loop_doc(loop: DiagramLoop) -> dict:
    return {
        "fiber": "infinity" if loop.fiber_index is None else loop.fiber_index,
        "vertices": [cnum(v) for v in loop.vertices],
    }


def diagram_doc(d: Diagram, loops: Sequence[DiagramLoop]) -> dict:
    return {
        "verticalLines": [fnum(v) for v in d.vertical_lines],
        "horizontalLines": [fnum(v) for v in d.horizontal_lines],
        "basePoint": cnum(d.base_point),
        "cells": [
            {"fiber": cnum(f), "xmin": fnum(c[0]), "xmax": fnum(c[1]), "ymin": fnum(c[2]), "ymax": fnum(c[3])}
            for f, c in zip(d.fibers, d.cells)
        ],
        "loops": [loop_doc(loop) for loop in loops],
    }


def fmt_complex(z: complex) -> str:
    re, im = fnum(z.real), fnum(z.imag)
    if im == 0:
        return f"{re:.12g}"
    if re == 0:
        return f"{im:.12g}i"
    return f"{re:.12g}{'+' if im > 0 else '-'}{abs(im):.12g}i"


def fibers_text(fibers: Sequence[SingularFiber]) -> list[str]:
    lines = []
    for f in fibers:
        pairs = ", ".join(f"y{i + 1}=y{j + 1} (mult {m})" for i, j, m in f.pairs)
        lines.append(f"x = {fmt_complex(f.x)}\t{pairs}")
    return lines


def monodromy_text(results: Sequence[MonodromyResult]) -> list[str]:
    return [
        f"{'infinity' if r.fiber is None else 'x = ' + fmt_complex(r.fiber.x)}\t{word_to_string(r.word.letters)}"
        for r in results
    ]


def alexander_text(p: LaurentPoly) -> list[str]:
    return [cyclotomic_display(p), f"expanded: {format_poly(p)}"]
