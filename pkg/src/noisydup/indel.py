"""Single-indel-correcting codes: binary Varshamov-Tenengolts and Tenengolts' q-ary code.

Both codes are used as syndrome classes, not through systematic encoders.
Words may be shorter than the nominal length (at most m-1 for VT, at most m
for the q-ary code); decoding needs the original length from the caller.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .words import Word, zeta

# Below this length the brute-force ball search backs up the fast path.
FALLBACK_MAX_LENGTH = 12


class DecodeError(ValueError):
    """No codeword (or more than one) is consistent with the received word."""


@dataclass(frozen=True)
class VtParams:
    a: int
    m: int

    def __post_init__(self):
        if self.m < 1 or not 0 <= self.a < self.m:
            raise ValueError(f"invalid VT parameters a={self.a}, m={self.m}")


@dataclass(frozen=True)
class TqParams:
    alpha: int
    beta: int
    m: int


@dataclass(frozen=True)
class IndelReport:
    word: Word
    value: int | None  # symbol that was inserted or deleted; None when no indel
    position: int | None  # 0-based, leftmost in its run


def vt_syndrome(u: Sequence[int], m: int) -> int:
    if len(u) > m - 1:
        raise ValueError(f"length {len(u)} exceeds m-1 = {m - 1}")
    return sum(i * b for i, b in enumerate(u, 1)) % m


def _vt_weighted_sum(u: Sequence[int]) -> int:
    return sum(i * b for i, b in enumerate(u, 1))


def _vt_fast(r: Word, n_orig: int, p: VtParams) -> list[IndelReport]:
    m = p.m
    n = len(r)
    w = sum(r)
    syn = _vt_weighted_sum(r) % m
    found: dict[Word, IndelReport] = {}
    if n == n_orig - 1:
        # restore a deleted bit: a 0 with R ones to its right raises the
        # checksum by R, a 1 with L zeros to its left by L + w + 1
        delta = (p.a - syn) % m
        for d in (delta, delta + m):
            if d <= w:
                # 0 goes just left of the d-th one from the right
                ones_seen = 0
                pos = n
                while ones_seen < d:
                    pos -= 1
                    ones_seen += r[pos]
                # leftmost slot in the run of zeros ending at pos
                while pos > 0 and r[pos - 1] == 0:
                    pos -= 1
                cand = r[:pos] + (0,) + r[pos:]
                found.setdefault(cand, IndelReport(cand, 0, pos))
            zeros_left = d - w - 1
            if 0 <= zeros_left <= n - w:
                seen = 0
                pos = 0
                while seen < zeros_left:
                    seen += 1 - r[pos]
                    pos += 1
                # leftmost slot among the ones following the last counted zero
                cand = r[:pos] + (1,) + r[pos:]
                found.setdefault(cand, IndelReport(cand, 1, pos))
    elif n == n_orig + 1:
        # remove an inserted bit: dropping a 0 with R ones to its right lowers
        # the checksum by R; dropping a 1 with L zeros to its left by L + w
        delta = (syn - p.a) % m
        for d in (delta, delta + m):
            if d <= w:
                ones_seen = 0
                pos = n
                while ones_seen < d:
                    pos -= 1
                    ones_seen += r[pos]
                # need a zero at pos-1 with exactly d ones right of it
                if pos > 0 and r[pos - 1] == 0:
                    start = pos - 1
                    while start > 0 and r[start - 1] == 0:
                        start -= 1
                    cand = r[:start] + r[start + 1 :]
                    found.setdefault(cand, IndelReport(cand, 0, start))
            zeros_left = d - w
            if 0 <= zeros_left <= n - w and w > 0:
                seen = 0
                pos = 0
                while seen < zeros_left:
                    seen += 1 - r[pos]
                    pos += 1
                if pos < n and r[pos] == 1:
                    cand = r[:pos] + r[pos + 1 :]
                    found.setdefault(cand, IndelReport(cand, 1, pos))
    elif n == n_orig:
        if syn == p.a:
            found[r] = IndelReport(r, None, None)
    return list(found.values())


def _vt_brute(r: Word, n_orig: int, p: VtParams) -> list[IndelReport]:
    found: dict[Word, IndelReport] = {}
    n = len(r)
    if n == n_orig:
        if _vt_weighted_sum(r) % p.m == p.a:
            found[r] = IndelReport(r, None, None)
    elif n == n_orig - 1:
        for pos in range(n + 1):
            for bit in (0, 1):
                cand = r[:pos] + (bit,) + r[pos:]
                if _vt_weighted_sum(cand) % p.m == p.a and cand not in found:
                    found[cand] = IndelReport(cand, bit, pos)
    elif n == n_orig + 1:
        for pos in range(n):
            cand = r[:pos] + r[pos + 1 :]
            if _vt_weighted_sum(cand) % p.m == p.a and cand not in found:
                found[cand] = IndelReport(cand, r[pos], pos)
    return list(found.values())


def _unique(cands: list[IndelReport], what: str) -> IndelReport:
    if not cands:
        raise DecodeError(f"{what}: no consistent codeword")
    if len(cands) > 1:
        raise DecodeError(f"{what}: {len(cands)} consistent codewords")
    return cands[0]


def vt_decode_report(r: Sequence[int], n_orig: int, p: VtParams, *, brute: bool = False) -> IndelReport:
    """Correct at most one indel and report the symbol value and leftmost position."""
    r = tuple(r)
    if len(r) - n_orig not in (-1, 0, 1):
        raise DecodeError(f"length {len(r)} is not within one indel of {n_orig}")
    if n_orig > p.m - 1:
        raise ValueError(f"original length {n_orig} exceeds m-1 = {p.m - 1}")
    cands = _vt_brute(r, n_orig, p) if brute else _vt_fast(r, n_orig, p)
    if not cands and not brute and n_orig < FALLBACK_MAX_LENGTH:
        cands = _vt_brute(r, n_orig, p)
    return _unique(cands, "VT decode")


def vt_decode(r: Sequence[int], n_orig: int, p: VtParams) -> Word:
    return vt_decode_report(r, n_orig, p).word


def tq_syndromes(z: Sequence[int], q: int, m: int) -> tuple[int, int]:
    if len(z) > m:
        raise ValueError(f"length {len(z)} exceeds m = {m}")
    return sum(z) % q, sum(i * b for i, b in enumerate(zeta(z))) % m


def _tq_beta(z: Sequence[int], m: int) -> int:
    return sum(i * b for i, b in enumerate(zeta(z))) % m


def _tq_fast(r: Word, n_orig: int, q: int, p: TqParams) -> list[IndelReport]:
    # the symbol sum fixes the value of the indel; only its position is scanned
    n = len(r)
    found: dict[Word, IndelReport] = {}
    if n == n_orig:
        if sum(r) % q == p.alpha and _tq_beta(r, p.m) == p.beta:
            found[r] = IndelReport(r, None, None)
    elif n == n_orig - 1:
        v = (p.alpha - sum(r)) % q
        for pos in range(n + 1):
            if pos > 0 and r[pos - 1] == v:
                continue  # same word as inserting one slot to the left
            cand = r[:pos] + (v,) + r[pos:]
            if _tq_beta(cand, p.m) == p.beta:
                found.setdefault(cand, IndelReport(cand, v, pos))
    elif n == n_orig + 1:
        v = (sum(r) - p.alpha) % q
        for pos in range(n):
            if r[pos] != v or (pos > 0 and r[pos - 1] == v):
                continue
            cand = r[:pos] + r[pos + 1 :]
            if _tq_beta(cand, p.m) == p.beta:
                found.setdefault(cand, IndelReport(cand, v, pos))
    return list(found.values())


def _tq_brute(r: Word, n_orig: int, q: int, p: TqParams) -> list[IndelReport]:
    def ok(z):
        return sum(z) % q == p.alpha and _tq_beta(z, p.m) == p.beta

    found: dict[Word, IndelReport] = {}
    n = len(r)
    if n == n_orig:
        if ok(r):
            found[r] = IndelReport(r, None, None)
    elif n == n_orig - 1:
        for pos in range(n + 1):
            for v in range(q):
                cand = r[:pos] + (v,) + r[pos:]
                if cand not in found and ok(cand):
                    found[cand] = IndelReport(cand, v, pos)
    elif n == n_orig + 1:
        for pos in range(n):
            cand = r[:pos] + r[pos + 1 :]
            if cand not in found and ok(cand):
                found[cand] = IndelReport(cand, r[pos], pos)
    return list(found.values())


def tq_decode_report(r: Sequence[int], n_orig: int, q: int, p: TqParams, *, brute: bool = False) -> IndelReport:
    r = tuple(r)
    if len(r) - n_orig not in (-1, 0, 1):
        raise DecodeError(f"length {len(r)} is not within one indel of {n_orig}")
    if n_orig > p.m:
        raise ValueError(f"original length {n_orig} exceeds m = {p.m}")
    cands = _tq_brute(r, n_orig, q, p) if brute else _tq_fast(r, n_orig, q, p)
    if not cands and not brute and n_orig < FALLBACK_MAX_LENGTH:
        cands = _tq_brute(r, n_orig, q, p)
    return _unique(cands, "Tenengolts decode")


def tq_decode(r: Sequence[int], n_orig: int, q: int, p: TqParams) -> Word:
    return tq_decode_report(r, n_orig, q, p).word
