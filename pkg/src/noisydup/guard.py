"""Binary code C_(a,b,c): VT checksum mod 2n+3, weight mod 5, prefix-sum checksum mod 2n+1.

A single error from the following menu is corrected without knowing its type:
deletion, insertion of 0 or 1, substitution, 00<->11, 0->11, 1->00, adjacent
transposition, and the two-bit insertions 11, 00 and 1->010.

The decoder dispatches on the length change and the signed weight change.
Inside a branch every candidate site is scanned and its predicted change of
the VT checksum is compared with the observed one; survivors are checked
against all three syndromes and must be unique.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .indel import DecodeError
from .words import Word

ERROR_KINDS = (
    "none",
    "deletion",
    "insertion0",
    "insertion1",
    "substitution",
    "double_substitution",
    "expand0",  # 0 -> 11
    "expand1",  # 1 -> 00
    "transposition",
    "insert11",
    "insert00",
    "insert010",  # 1 -> 010
)

# length change caused by each kind
LENGTH_CHANGE = {
    "none": 0,
    "deletion": -1,
    "insertion0": 1,
    "insertion1": 1,
    "substitution": 0,
    "double_substitution": 0,
    "expand0": 1,
    "expand1": 1,
    "transposition": 0,
    "insert11": 2,
    "insert00": 2,
    "insert010": 2,
}


class GuardDecodeError(DecodeError):
    pass


@dataclass(frozen=True)
class GuardParams:
    n: int
    a: int
    b: int
    c: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be positive")
        if not 0 <= self.a <= 2 * (self.n + 1):
            raise ValueError(f"a={self.a} outside [0, {2 * (self.n + 1)}]")
        if not 0 <= self.b <= 4:
            raise ValueError(f"b={self.b} outside [0, 4]")
        if not 0 <= self.c <= 2 * self.n:
            raise ValueError(f"c={self.c} outside [0, {2 * self.n}]")


@dataclass(frozen=True)
class GuardError:
    kind: str
    position: int | None = None  # 0-based index in the codeword


def vt_sum(u: Sequence[int]) -> int:
    return sum(i * b for i, b in enumerate(u, 1))


def transition_sum(u: Sequence[int]) -> int:
    """sum_i i * (u_1 + ... + u_i)."""
    total = 0
    acc = 0
    for i, b in enumerate(u, 1):
        acc += b
        total += i * acc
    return total


def guard_syndromes(u: Sequence[int]) -> tuple[int, int, int]:
    n = len(u)
    return vt_sum(u) % (2 * n + 3), sum(u) % 5, transition_sum(u) % (2 * n + 1)


def guard_membership(u: Sequence[int], p: GuardParams) -> bool:
    if len(u) != p.n:
        raise ValueError(f"word length {len(u)} != n = {p.n}")
    return guard_syndromes(u) == (p.a, p.b, p.c)


def signed_mod5(x: int) -> int:
    x %= 5
    return x - 5 if x > 2 else x


def _ones_after(r: Word) -> list[int]:
    """ones_after[i] = number of ones at indices > i (length n + 1, last entry 0)."""
    n = len(r)
    out = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        out[i] = out[i + 1] + (r[i + 1] if i + 1 < n else 0)
    out[n] = 0
    return out


def _sites(r: Word, kind: str) -> Iterator[tuple[int, Word, int, int]]:
    """Yield (position, original word, predicted VT change, predicted prefix-sum change).

    Changes are "received minus original", except for deletions where the
    original is the longer word and the sign is the same convention.
    The prefix-sum change is only meaningful for transpositions (0 otherwise).
    """
    n = len(r)
    after = _ones_after(r)
    if kind == "deletion":
        ones_from = [after[g] + r[g] if g < n else 0 for g in range(n + 1)]
        for g in range(n + 1):
            # restoring a 0 adds ones_from[g]; restoring a 1 adds g+1+ones_from[g]
            yield g, r[:g] + (0,) + r[g:], -ones_from[g], 0
            yield g, r[:g] + (1,) + r[g:], -(g + 1 + ones_from[g]), 0
    elif kind in ("insertion0", "insertion1"):
        bit = 0 if kind == "insertion0" else 1
        for i in range(n):
            if r[i] == bit and (i == 0 or r[i - 1] != bit):
                yield i, r[:i] + r[i + 1 :], after[i] + bit * (i + 1), 0
    elif kind == "substitution":
        for i in range(n):
            if r[i] == 1:  # original 0
                yield i, r[:i] + (0,) + r[i + 1 :], i + 1, 0
            else:
                yield i, r[:i] + (1,) + r[i + 1 :], -(i + 1), 0
    elif kind == "double_substitution":
        for i in range(n - 1):
            if r[i] == r[i + 1] == 1:  # original 00
                yield i, r[:i] + (0, 0) + r[i + 2 :], 2 * (i + 1) + 1, 0
            elif r[i] == r[i + 1] == 0:
                yield i, r[:i] + (1, 1) + r[i + 2 :], -(2 * (i + 1) + 1), 0
    elif kind == "transposition":
        for i in range(n - 1):
            if r[i] != r[i + 1]:
                orig = r[:i] + (r[i + 1], r[i]) + r[i + 2 :]
                if r[i] == 1:  # original 01: the one moved left, prefix sum at i+1 rose
                    yield i, orig, -1, i + 1
                else:
                    yield i, orig, 1, -(i + 1)
    elif kind == "expand0":
        for i in range(n - 1):
            if r[i] == r[i + 1] == 1:
                yield i, r[:i] + (0,) + r[i + 2 :], 2 * (i + 1) + 1 + after[i + 1], 0
    elif kind == "expand1":
        for i in range(n - 1):
            if r[i] == r[i + 1] == 0:
                yield i, r[:i] + (1,) + r[i + 2 :], -(i + 1) + after[i + 1], 0
    elif kind == "insert11":
        for i in range(n - 1):
            if r[i] == r[i + 1] == 1:
                yield i, r[:i] + r[i + 2 :], (i + 1) + (i + 2) + 2 * after[i + 1], 0
    elif kind == "insert00":
        for i in range(n - 1):
            if r[i] == r[i + 1] == 0:
                yield i, r[:i] + r[i + 2 :], 2 * after[i + 1], 0
    elif kind == "insert010":
        for i in range(n - 2):
            if r[i] == 0 and r[i + 1] == 1 and r[i + 2] == 0:
                yield i, r[:i] + (1,) + r[i + 3 :], 1 + 2 * after[i + 2], 0
    elif kind == "none":
        yield 0, r, 0, 0
    else:
        raise ValueError(f"unknown error kind {kind!r}")


def preimages(
    r: Sequence[int], kind: str, n: int, a: int, c: int | None = None
) -> list[tuple[Word, GuardError]]:
    """Words of length n with VT residue a (mod 2n+3) that ``kind`` maps onto r.

    When c is given the prefix-sum residue (mod 2n+1) must match as well.
    Each distinct preimage is reported once, with its leftmost site.
    """
    r = tuple(r)
    if len(r) - LENGTH_CHANGE[kind] != n:
        return []
    m, mc = 2 * n + 3, 2 * n + 1
    observed = (vt_sum(r) - a) % m
    observed_c = None
    if kind == "transposition" and c is not None:
        observed_c = (transition_sum(r) - c) % mc
    found: dict[Word, GuardError] = {}
    for pos, orig, dv, dc in _sites(r, kind):
        if dv % m != observed or orig in found:
            continue
        if observed_c is not None and dc % mc != observed_c:
            continue
        if c is not None and transition_sum(orig) % mc != c:
            continue
        found[orig] = GuardError(kind, None if kind == "none" else pos)
    return list(found.items())


def _branch_kinds(r: Word, p: GuardParams) -> list[str]:
    dl = len(r) - p.n
    bd = signed_mod5(sum(r) - p.b)
    if dl == -1:
        return ["deletion"]
    if dl == 0:
        if bd == 0:
            return ["none", "transposition"]
        return {1: ["substitution"], -1: ["substitution"], 2: ["double_substitution"], -2: ["double_substitution"]}[bd]
    if dl == 1:
        return {0: ["insertion0"], 1: ["insertion1"], 2: ["expand0"], -1: ["expand1"]}.get(bd, [])
    if dl == 2:
        if bd == 2:
            return ["insert11"]
        if bd == 0:
            m = 2 * p.n + 3
            # 00 moves r1 ones by two places (even); 1->010 adds one more
            return ["insert00"] if ((vt_sum(r) - p.a) % m) % 2 == 0 else ["insert010"]
        return []
    raise GuardDecodeError(f"length change {dl} outside the correctable range")


def guard_decode(r: Sequence[int], p: GuardParams) -> tuple[Word, GuardError]:
    r = tuple(r)
    results: dict[Word, GuardError] = {}
    for kind in _branch_kinds(r, p):
        for word, err in preimages(r, kind, p.n, p.a, p.c):
            if guard_syndromes(word) == (p.a, p.b, p.c):
                results.setdefault(word, err)
        if results:
            break  # "none" takes precedence over a transposition
    if len(results) != 1:
        raise GuardDecodeError(f"{len(results)} codewords consistent with the received word")
    return next(iter(results.items()))


def inject_errors(u: Sequence[int]) -> Iterator[tuple[GuardError, Word]]:
    """Every single error from the menu applied to u (duplicates included)."""
    u = tuple(u)
    n = len(u)
    yield GuardError("none"), u
    for i in range(n):
        yield GuardError("deletion", i), u[:i] + u[i + 1 :]
        yield GuardError("substitution", i), u[:i] + (1 - u[i],) + u[i + 1 :]
        if u[i] == 0:
            yield GuardError("expand0", i), u[:i] + (1, 1) + u[i + 1 :]
        else:
            yield GuardError("expand1", i), u[:i] + (0, 0) + u[i + 1 :]
            yield GuardError("insert010", i), u[:i] + (0, 1, 0) + u[i + 1 :]
    for i in range(n + 1):
        yield GuardError("insertion0", i), u[:i] + (0,) + u[i:]
        yield GuardError("insertion1", i), u[:i] + (1,) + u[i:]
        yield GuardError("insert11", i), u[:i] + (1, 1) + u[i:]
        yield GuardError("insert00", i), u[:i] + (0, 0) + u[i:]
    for i in range(n - 1):
        if u[i] == u[i + 1]:
            b = 1 - u[i]
            yield GuardError("double_substitution", i), u[:i] + (b, b) + u[i + 2 :]
        else:
            yield GuardError("transposition", i), u[:i] + (u[i + 1], u[i]) + u[i + 2 :]
