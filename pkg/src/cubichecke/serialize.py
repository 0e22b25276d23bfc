"""Canonical JSON forms for every value the library exchanges.

The encoding is deterministic: rationals render as "p" or "p/q" strings,
cyclotomic elements as their four coefficients, polynomial terms sort in the
canonical term order, and objects serialize with sorted keys and no
whitespace, so identical inputs always produce byte-identical reports.
"""

from __future__ import annotations

import hashlib
import json
from fractions import Fraction

from .catalog import ModuleLabel, Path
from .cyclotomic import Cyclotomic
from .laurent import LaurentPoly
from .matrix import Matrix
from .ratfunc import RatFunc

SCHEMA_VERSION = 1


def frac_to_json(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return "%d/%d" % (q.numerator, q.denominator)


def frac_from_json(s: str) -> Fraction:
    return Fraction(s)


def cyc_to_json(c: Cyclotomic) -> list:
    return [frac_to_json(x) for x in c.c]


def cyc_from_json(data) -> Cyclotomic:
    return Cyclotomic(*(Fraction(x) for x in data))


def poly_to_json(p: LaurentPoly) -> list:
    return [[list(e), cyc_to_json(c)] for e, c in p.sorted_terms()]


def poly_from_json(data, nvars: int = 3) -> LaurentPoly:
    terms = {}
    for e, c in data:
        terms[tuple(e)] = cyc_from_json(c)
    return LaurentPoly(nvars, terms)


def ratfunc_to_json(f: RatFunc) -> dict:
    r = f.reduce()
    return {"num": poly_to_json(r.num), "den": poly_to_json(r.den)}


def ratfunc_from_json(data) -> RatFunc:
    return RatFunc(poly_from_json(data["num"]), poly_from_json(data["den"]))


def matrix_to_json(m: Matrix) -> dict:
    return {
        "rows": m.rows,
        "cols": m.cols,
        "entries": [[ratfunc_to_json(a) for a in row] for row in m.entries],
    }


def matrix_from_json(data) -> Matrix:
    return Matrix([[ratfunc_from_json(a) for a in row] for row in data["entries"]])


def label_to_json(label: ModuleLabel) -> dict:
    out = {"level": label.level, "exps": list(label.exps), "name": label.name}
    if label.theta:
        out["theta"] = label.theta
    if label.star:
        out["star"] = True
    if label.bar is not None:
        out["bar"] = list(label.bar)
    return out


def path_to_json(path: Path) -> list:
    return [path.g2.name, path.g3.name, path.g4.name]


def canonical_dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def input_digest(payload) -> str:
    return hashlib.sha256(canonical_dumps(payload).encode()).hexdigest()[:16]


def envelope(command: list, result, markdown: str = "") -> dict:
    """The report wrapper every CLI command emits."""
    from . import __version__

    out = {
        "schema": SCHEMA_VERSION,
        "version": __version__,
        "command": command,
        "input_digest": input_digest(command),
        "result": result,
    }
    if markdown:
        out["markdown"] = markdown
    return out
