"""Counting irreducible words and the rates that follow from the counts.

All counts are exact Python integers; logarithms are taken of the integers
themselves, so nothing overflows at n in the hundreds.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence


@lru_cache(maxsize=None)
def _rll_table(q: int, k: int, m: int) -> tuple[int, ...]:
    rl = []
    for i in range(m + 1):
        rl.append(q**i if i < k else (q - 1) * sum(rl[i - k : i]))
    return tuple(rl)


def count_rll(m: int, q: int, k: int) -> int:
    """Number of q-ary strings of length m without a run of k zeros."""
    if m < 0:
        raise ValueError("m must be non-negative")
    if q < 2 or k < 1:
        raise ValueError("need q >= 2 and k >= 1")
    return _rll_table(q, k, m)[m]


def count_irreducible(n: int, q: int, k: int) -> int:
    """Number of length-n words with no length-k tandem repeat."""
    if n < k:
        raise ValueError("need n >= k")
    return q**k * count_rll(n - k, q, k)


def log_q(value: int, q: int) -> float:
    # math.log handles big ints exactly enough (it works on the bit length)
    return math.log(value) / math.log(q)


def growth_rate(q: int, k: int, tol: float = 1e-13) -> float:
    """Dominant root of x^k = (q-1)(x^{k-1} + ... + 1), by bisection on [1, q]."""
    if q < 2 or k < 1:
        raise ValueError("need q >= 2 and k >= 1")

    def f(x: float) -> float:
        return x**k - (q - 1) * sum(x**i for i in range(k))

    lo, hi = 1.0, float(q)
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if f(mid) > 0:
            hi = mid
        else:
            lo = mid
    return (lo + hi) / 2


def asymptotic_rate(q: int, k: int) -> float:
    return math.log(growth_rate(q, k)) / math.log(q)


def approx_rate_formula(q: int, k: int) -> float:
    """Closed-form approximation 1 - (q-1) log_q(e) / q^(k+2)."""
    return 1 - (q - 1) / math.log(q) / q ** (k + 2)


@dataclass(frozen=True)
class RateRow:
    q: int
    k: int
    n: int
    irr_count_log: float  # log_q |Irr(n)|
    upper_rate: float
    lower_rate: float


def bound_denominator(q: int, k: int, n: int) -> int:
    """Number of residue tuples counted by the pigeonhole bound on the best class."""
    half = -(-(n - k) // 2)
    nk = -(-n // k)
    return 5 * q**4 * half**2 * (4 * nk**2 - 1) ** k * (n - k) ** 2


def rate_row(q: int, k: int, n: int) -> RateRow:
    if n <= 2 * k:
        raise ValueError(f"need n > 2k, got n={n}, k={k}")
    irr = count_irreducible(n, q, k)
    irr_log = log_q(irr, q)
    lower = (irr_log - log_q(bound_denominator(q, k, n), q)) / n
    return RateRow(q, k, n, irr_log, irr_log / n, lower)


def rate_table(k: int, q_list: Iterable[int], n_range: Iterable[int]) -> list[RateRow]:
    n_values = list(n_range)
    return [rate_row(q, k, n) for q in q_list for n in n_values]


CSV_HEADER = ("q", "k", "n", "upper_rate", "lower_rate")


def rates_csv(rows: Sequence[RateRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in rows:
        w.writerow([r.q, r.k, r.n, f"{r.upper_rate:.9f}", f"{r.lower_rate:.9f}"])
    return buf.getvalue()
