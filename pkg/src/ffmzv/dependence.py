"""Numeric linear-dependence search over F_q[T] from truncated series.

Solves sum_j a_j(T) v_j = 0 through the known coefficient range, with
polynomial unknowns of bounded degree, by exact F_q Gaussian
elimination.  Results are candidates valid to the working precision
only; every returned tuple is re-verified against the inputs before it
is emitted.  An independent probe for the symbolic reduction pipeline,
and a way to hunt for relations outside the proven families.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import LaurentSeries, Poly
from .errors import InvalidInput


@dataclass
class DependenceProblem:
    values: list
    deg_bound: int

    def __post_init__(self):
        if not self.values:
            raise InvalidInput("need at least one value")
        if self.deg_bound < 0:
            raise InvalidInput("degree bound must be >= 0")
        spec = self.values[0].spec
        prec = self.values[0].prec
        for v in self.values:
            if not isinstance(v, LaurentSeries):
                raise InvalidInput("values must be Laurent series")
            if v.spec != spec:
                raise InvalidInput("values must share one field")
            if v.prec != prec:
                raise InvalidInput("values must share one precision")
        if prec <= 0:
            raise InvalidInput("need positive precision")
        self.spec = spec
        self.prec = prec


def recommended_precision(m: int, deg_bound: int) -> int:
    return m * (deg_bound + 1) + 8


def precision_warning(problem: DependenceProblem) -> str | None:
    rec = recommended_precision(len(problem.values), problem.deg_bound)
    if problem.prec < rec:
        return (f"precision {problem.prec} below the recommended "
                f"{rec} for {len(problem.values)} values at degree bound "
                f"{problem.deg_bound}; kernel may contain spurious candidates")
    return None


def find_dependence(problem: DependenceProblem) -> list:
    """Kernel of sum_j a_j v_j = 0 (deg a_j <= D) through T^-(prec - D).

    Returns a list of coefficient tuples of exact polynomials, one per
    kernel basis vector, normalized so the first nonzero polynomial is
    monic.  Candidates are certified only to the precision of the
    inputs; each one is substituted back before being returned.
    """
    spec = problem.spec
    D = problem.deg_bound
    vals = problem.values
    m = len(vals)
    # rows where every shifted series is known: exponents from the top lead
    # down to -(prec - D)
    low = -(problem.prec - D)
    high = max((v.lead if not v.is_zero_to_prec else low) for v in vals) + D
    if high < low:
        high = low
    nrows = high - low + 1
    ncols = m * (D + 1)
    mat = np.zeros((nrows, ncols), dtype=np.int64)
    for j, v in enumerate(vals):
        for t in range(D + 1):
            shifted = v.shift(t)
            col = j * (D + 1) + t
            for r, expo in enumerate(range(high, low - 1, -1)):
                mat[r, col] = shifted.coeff(expo).i
    kernel = spec.vec.kernel(mat)
    out = []
    for vec in kernel:
        polys = []
        for j in range(m):
            codes = [int(vec[j * (D + 1) + t]) for t in range(D + 1)]
            polys.append(Poly(spec, [spec.from_index(c) for c in codes]))
        # normalize: first nonzero polynomial monic
        lead = next((p for p in polys if not p.is_zero), None)
        if lead is None:
            continue
        inv = lead.leading().inverse()
        polys = [p.scale(inv) for p in polys]
        # re-verify against the inputs at their common precision
        acc = None
        for p, v in zip(polys, vals):
            term = _poly_times_series(p, v)
            acc = term if acc is None else acc + term
        if not acc.is_zero_to_prec:
            continue
        out.append(tuple(polys))
    return out


def _poly_times_series(p: Poly, v: LaurentSeries) -> LaurentSeries:
    out = LaurentSeries.zero(v.spec, v.prec - max(p.degree, 0))
    for t, c in enumerate(p.c):
        if c:
            out = out + v.shift(t).scale(v.spec.from_index(c))
    return out
