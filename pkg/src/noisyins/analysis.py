"""Rates, capacity and closed-form code-size lower bounds.

Bounds are returned as :class:`fractions.Fraction` when the value is
rational for the given ``(q, n)`` and as ``float`` otherwise.  A bound below
1 says nothing about an integer code size and is flagged vacuous.
"""

from __future__ import annotations

import json
import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from . import kernels as K
from .alphabet import as_alphabet
from .codebook import candidate_words, scan_best, scan_best_params
from .codes import rll_threshold
from .errors import DomainError, EnumerationLimitError

BOUND_NAMES = ("compsub", "sirr", "burst", "final")


def log_q(value, q: int) -> float:
    return math.log2(value) / math.log2(q)


def rate(size: int, n: int, q: int) -> float:
    if size < 1:
        raise DomainError("the rate of an empty code is undefined")
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    return log_q(size, q) / n


def capacity_noisy(q: int) -> float:
    as_alphabet(q)
    return log_q(q - 2, q)


def bound_compsub(q: int, n: int) -> Fraction:
    """``q^(n-2) / (2n)``, exact."""
    return Fraction(q**n, q * q * 2 * n)


def _rll_correction(q: int, n: int):
    # 1 - 1 / (2 (q-2) sqrt(n)); rational when n is a perfect square
    r = math.isqrt(n)
    if r * r == n:
        return 1 - Fraction(1, 2 * (q - 2) * r)
    return 1 - 1 / (2 * (q - 2) * math.sqrt(n))


def bound_sirr(q: int, n: int):
    return q * (q - 2) ** (n - 1) * _rll_correction(q, n)


def bound_burst(q: int, n: int) -> float:
    denom = 2 * (3 * log_q(n, q) + 4) * q**2 * n
    return q * (q - 2) ** (n - 1) / denom * float(_rll_correction(q, n))


def bound_final(q: int, n: int) -> float:
    denom = 4 * (3 * log_q(n, q) + 4) * q**3 * n**3
    return q * (q - 2) ** (n - 1) / denom * float(_rll_correction(q, n))


def is_vacuous(bound) -> bool:
    return bound < 1


def count_sirr(q: int, n: int) -> int:
    """Irreducible words whose odd-position row has runs of at most ``T``."""
    words = candidate_words("final", q, n)
    runs = K.word_stats(words[:, 0::2])[:, K.RUN]
    return int((runs <= rll_threshold(q, n)).sum())


@dataclass
class RateReport:
    q: int
    n: int
    code_size: int
    rate: float
    capacity: float
    bounds: dict[str, float] = field(default_factory=dict)
    vacuous: dict[str, bool] = field(default_factory=dict)
    actual: dict[str, int | None] = field(default_factory=dict)
    params: dict[str, int] = field(default_factory=dict)
    runtime_ms: int = 0

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "n": self.n,
            "code_size": self.code_size,
            "rate": self.rate,
            "capacity": self.capacity,
            "bounds": {k: float(self.bounds[k]) for k in BOUND_NAMES},
            "vacuous": {k: self.vacuous[k] for k in BOUND_NAMES},
            "actual": {k: self.actual.get(k) for k in BOUND_NAMES},
            "params": self.params,
            "runtime_ms": self.runtime_ms,
        }


def rate_report(q: int, n: int) -> RateReport:
    start = time.perf_counter()
    params, size = scan_best_params(q, n)
    bounds = {
        "compsub": bound_compsub(q, n),
        "sirr": bound_sirr(q, n),
        "burst": bound_burst(q, n),
        "final": bound_final(q, n),
    }
    try:
        compsub_best = scan_best("compsub", q, n)[1]
    except EnumerationLimitError:
        compsub_best = None
    actual = {
        "compsub": compsub_best,
        "sirr": count_sirr(q, n),
        "burst": scan_best("burst", q, n)[1],
        "final": size,
    }
    return RateReport(
        q=q,
        n=n,
        code_size=size,
        rate=rate(size, n, q),
        capacity=capacity_noisy(q),
        bounds=bounds,
        vacuous={k: is_vacuous(v) for k, v in bounds.items()},
        actual=actual,
        params={k: getattr(params, k) for k in "abdhwefg"},
        runtime_ms=int((time.perf_counter() - start) * 1000),
    )


def rates_table(q: int, n_list: Iterable[int]) -> list[RateReport]:
    return [rate_report(q, n) for n in n_list]


def reports_to_json(reports: list[RateReport]) -> str:
    return json.dumps([r.to_dict() for r in reports], indent=2)


def format_table(reports: list[RateReport]) -> str:
    head = f"{'q':>3} {'n':>4} {'size':>6} {'rate':>8} {'cap':>8}"
    head += "".join(f" {name:>12}" for name in BOUND_NAMES)
    lines = [head]
    for r in reports:
        row = f"{r.q:>3} {r.n:>4} {r.code_size:>6} {r.rate:>8.4f} {r.capacity:>8.4f}"
        for name in BOUND_NAMES:
            cell = f"{float(r.bounds[name]):.4g}" + ("*" if r.vacuous[name] else "")
            row += f" {cell:>12}"
        lines.append(row)
    lines.append("* vacuous bound (< 1)")
    return "\n".join(lines)
