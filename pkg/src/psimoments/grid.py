"""Rectangular sampling of f over the complex plane, with CSV/JSON writers.

Records are ordered row-major with the imaginary part outer and the real
part inner, so row j of a plot is ``records[j*re_steps:(j+1)*re_steps]``.
"""
from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass

import numpy as np

from .evaluator import MAX_DEPTH, OVERFLOW, POLE_PROXIMITY, EvalConfig, EvalResult, eval_f
from .precision import format_float
from .sequences import LambdaTable

CSV_HEADER = ("re", "im", "f_re", "f_im", "err", "n_used", "flag")


@dataclass(frozen=True)
class GridSpec:
    re_min: float
    re_max: float
    im_min: float
    im_max: float
    re_steps: int
    im_steps: int
    tol: float = 1e-10

    def __post_init__(self):
        if not (self.re_min < self.re_max and self.im_min < self.im_max):
            raise ValueError("grid bounds must satisfy min < max on both axes")
        if self.re_steps < 2 or self.im_steps < 2:
            raise ValueError("grid needs at least 2 steps per axis")

    def points(self):
        re = np.linspace(self.re_min, self.re_max, self.re_steps)
        im = np.linspace(self.im_min, self.im_max, self.im_steps)
        for y in im:
            for x in re:
                yield float(x), float(y)


@dataclass(frozen=True)
class GridRecord:
    re: float
    im: float
    f_re: float
    f_im: float
    err: float
    n_used: int
    flag: str

    @classmethod
    def from_result(cls, x: float, y: float, r: EvalResult) -> "GridRecord":
        if r.value.at_infinity:
            f_re = f_im = math.inf
        else:
            v = complex(r.value.value)
            f_re, f_im = v.real, v.imag
        return cls(x, y, f_re, f_im, float(r.error_estimate), r.n_used, flag_of(r))


def flag_of(r: EvalResult) -> str:
    if OVERFLOW in r.flags:
        return "overflow"
    if POLE_PROXIMITY in r.flags:
        return "pole"
    if MAX_DEPTH in r.flags:
        return "maxdepth"
    return "ok"


def evaluate_grid(spec: GridSpec, table: LambdaTable | None = None,
                  cfg: EvalConfig | None = None) -> list[GridRecord]:
    cfg = cfg or EvalConfig(tol=spec.tol)
    return [GridRecord.from_result(x, y, eval_f(complex(x, y), cfg, table))
            for x, y in spec.points()]


def _num(x: float) -> str:
    return format_float(x)


def records_to_csv(records) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in records:
        w.writerow([_num(r.re), _num(r.im), _num(r.f_re), _num(r.f_im), _num(r.err),
                    r.n_used, r.flag])
    return buf.getvalue()


def _json_num(x: float):
    return None if not math.isfinite(x) else x


def records_to_json(records) -> str:
    rows = [{"re": r.re, "im": r.im, "f_re": _json_num(r.f_re), "f_im": _json_num(r.f_im),
             "err": _json_num(r.err), "n_used": r.n_used, "flag": r.flag} for r in records]
    return json.dumps(rows, indent=1) + "\n"
