"""Paired two-sample t-test for means."""

from __future__ import annotations

import math
import statistics
from collections.abc import Sequence
from dataclasses import dataclass

from scipy.stats import t as student_t

from .errors import InputError


@dataclass(frozen=True)
class TTestResult:
    t_statistic: float
    degrees_of_freedom: int
    p_value: float
    degenerate: bool = False


def paired_t_test(xs: Sequence[float], ys: Sequence[float]) -> TTestResult:
    """Two-tailed paired t-test on ``xs - ys``.

    Zero-variance differences make the statistic undefined; the result is
    then flagged ``degenerate`` with p = 1 (zero mean, t = 0) or p = 0
    (non-zero mean, t = +/-inf).
    """
    if len(xs) != len(ys):
        raise InputError(f"samples differ in length: {len(xs)} vs {len(ys)}")
    n = len(xs)
    if n < 2:
        raise InputError("paired t-test needs at least two pairs")
    d = [float(x) - float(y) for x, y in zip(xs, ys)]
    df = n - 1
    mean = statistics.fmean(d)
    # constant differences, or a spread that underflows to zero
    sd = 0.0 if all(v == d[0] for v in d) else statistics.stdev(d, xbar=mean)
    if sd == 0.0:
        if mean == 0.0:
            return TTestResult(0.0, df, 1.0, True)
        return TTestResult(math.copysign(math.inf, mean), df, 0.0, True)
    t = mean / (sd / math.sqrt(n))
    p = 2.0 * float(student_t.sf(abs(t), df))
    return TTestResult(t, df, min(1.0, p), False)
