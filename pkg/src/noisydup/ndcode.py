"""The noisy-duplication code C_nd: membership, codebooks and decoding.

A codeword x is an irreducible word of length n. Everything the code checks
lives in mu = phi(x).tail (length n - k): its k residue-class strings mu_j,
their indicators s_j, and four Tenengolts constraints on the interleaving
IL(mu) = mu_1 ... mu_k.
"""

from __future__ import annotations

import itertools
import math
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from . import analysis
from .channel import EnumerationLimitError, descendants
from .guard import preimages, signed_mod5, transition_sum, vt_sum
from .indel import DecodeError, TqParams, VtParams, tq_decode, vt_decode_report
from .words import (
    Word,
    cusum,
    deinterleave,
    difference,
    format_word,
    has_zero_run,
    indicator,
    interleave,
    join_strings,
    merge_odd_even,
    mu,
    odd_even,
    parse_word,
    phi,
    phi_inv,
    split,
    split_lengths,
    zeta,
)


class NdDecodeError(DecodeError):
    """The received word is not in the single-noisy-duplication cone of any codeword."""


def _tq_beta(z: Sequence[int], m: int) -> int:
    return sum(i * b for i, b in enumerate(zeta(z))) % m


@dataclass(frozen=True)
class CodeParams:
    q: int
    k: int
    n: int
    a: tuple[int, ...]
    c: tuple[int, ...]
    b: int
    abar: tuple[int, int, int, int]
    bbar: tuple[int, int, int, int]

    def __post_init__(self):
        if self.n <= 2 * self.k:
            raise ValueError(f"need n > 2k, got n={self.n}, k={self.k}")
        if len(self.a) != self.k or len(self.c) != self.k:
            raise ValueError("a and c need one residue per string")
        if len(self.abar) != 4 or len(self.bbar) != 4:
            raise ValueError("abar and bbar need four residues each")
        for value, modulus in zip(self.flat(), self.moduli()):
            if not 0 <= value < modulus:
                raise ValueError(f"residue {value} outside [0, {modulus})")

    @property
    def string_lengths(self) -> list[int]:
        return split_lengths(self.n - self.k, self.k)

    def moduli(self) -> tuple[int, ...]:
        return code_moduli(self.q, self.k, self.n)

    def flat(self) -> tuple[int, ...]:
        """Residues in file order: a_1..a_k, c_1..c_k, b, abar_1..abar_4, bbar_1..bbar_4."""
        return (*self.a, *self.c, self.b, *self.abar, *self.bbar)

    @classmethod
    def from_flat(cls, q: int, k: int, n: int, values: Sequence[int]) -> CodeParams:
        values = list(values)
        if len(values) != 2 * k + 9:
            raise ValueError(f"expected {2 * k + 9} residues, got {len(values)}")
        return cls(q, k, n, tuple(values[:k]), tuple(values[k : 2 * k]), values[2 * k],
                   tuple(values[2 * k + 1 : 2 * k + 5]), tuple(values[2 * k + 5 :]))


def code_moduli(q: int, k: int, n: int) -> tuple[int, ...]:
    L = n - k
    lens = split_lengths(L, k)
    half = math.ceil(L / 2)
    return (
        *(2 * m + 3 for m in lens),
        *(2 * m + 1 for m in lens),
        5,
        q, q, q, q,
        half, half, L, L,
    )


def _syndrome_tuple(z: Word, q: int, k: int) -> tuple[int, ...]:
    """Residues of a 0^k-free transform tail, in CodeParams.flat() order."""
    L = len(z)
    parts = [split(z, j, k) for j in range(1, k + 1)]
    s = [indicator(p) for p in parts]
    a = tuple(vt_sum(sj) % (2 * len(sj) + 3) for sj in s)
    c = tuple(transition_sum(sj) % (2 * len(sj) + 1) for sj in s)
    b = sum(sum(sj) for sj in s) % 5
    il = interleave(z, k)
    odd, even = odd_even(il)
    r = cusum(il, q)
    half = math.ceil(L / 2)
    abar = (sum(odd) % q, sum(even) % q, sum(r) % q, sum(il) % q)
    bbar = (_tq_beta(odd, half), _tq_beta(even, half), _tq_beta(r, L), _tq_beta(il, L))
    return (*a, *c, b, *abar, *bbar)


def nd_syndromes(x: Sequence[int], q: int, k: int) -> CodeParams:
    """The parameter tuple of the class containing the irreducible word x."""
    x = tuple(x)
    z = phi(x, k, q).tail
    if has_zero_run(z, k):
        raise ValueError("word is not irreducible")
    return CodeParams.from_flat(q, k, len(x), _syndrome_tuple(z, q, k))


def nd_membership(x: Sequence[int], p: CodeParams) -> bool:
    x = tuple(x)
    if len(x) != p.n:
        raise ValueError(f"word length {len(x)} != n = {p.n}")
    z = phi(x, p.k, p.q).tail
    if has_zero_run(z, p.k):
        return False
    return _syndrome_tuple(z, p.q, p.k) == p.flat()


# ---------------------------------------------------------------------------
# codebooks


@dataclass(frozen=True)
class Codebook:
    params: CodeParams
    words: tuple[Word, ...]

    def __post_init__(self):
        object.__setattr__(self, "words", tuple(sorted(set(self.words))))

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self):
        return iter(self.words)

    def to_text(self) -> str:
        p = self.params
        lines = [f"{p.q} {p.k} {p.n}", " ".join(str(v) for v in p.flat())]
        lines += [format_word(w, p.q) for w in self.words]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> Codebook:
        lines = [ln.strip() for ln in text.splitlines()]
        if len(lines) < 2:
            raise ValueError("codebook needs a header line and a parameter line")
        q, k, n = (int(v) for v in lines[0].split())
        params = CodeParams.from_flat(q, k, n, [int(v) for v in lines[1].split()])
        words = [parse_word(ln, q) for ln in lines[2:] if ln]
        for w in words:
            if not nd_membership(w, params):
                raise ValueError(f"{format_word(w, q)} is not a member of the stated code")
        return cls(params, tuple(words))


def irreducible_tails(q: int, k: int, n: int, budget: int = 10_000_000) -> Iterable[Word]:
    L = n - k
    if q**L > budget:
        raise EnumerationLimitError(f"{q}^{L} candidate tails exceed the budget of {budget}")
    for z in itertools.product(range(q), repeat=L):
        if not has_zero_run(z, k):
            yield z


def syndrome_classes(q: int, k: int, n: int, budget: int = 10_000_000) -> dict[tuple[int, ...], list[Word]]:
    """Partition the 0^k-free tails of length n-k by their residue tuple."""
    classes: dict[tuple[int, ...], list[Word]] = defaultdict(list)
    for z in irreducible_tails(q, k, n, budget):
        classes[_syndrome_tuple(z, q, k)].append(z)
    return classes


def _expand(tails: Iterable[Word], q: int, k: int) -> list[Word]:
    heads = list(itertools.product(range(q), repeat=k))
    return [phi_inv((h, z), q) for z in tails for h in heads]


def build_codebook(q: int, k: int, n: int, params: CodeParams | None = None, budget: int = 10_000_000) -> Codebook:
    """Enumerate one syndrome class of Irr(n).

    With ``params`` the given class is returned; otherwise the largest class,
    ties going to the lexicographically smallest residue tuple.
    """
    if n <= 2 * k:
        raise ValueError("need n > 2k")
    if params is not None:
        if (params.q, params.k, params.n) != (q, k, n):
            raise ValueError("parameters were built for a different (q, k, n)")
        target = params.flat()
        tails = [z for z in irreducible_tails(q, k, n, budget) if _syndrome_tuple(z, q, k) == target]
        return Codebook(params, tuple(_expand(tails, q, k)))
    classes = syndrome_classes(q, k, n, budget)
    best = min(classes, key=lambda key: (-len(classes[key]), key))
    return Codebook(CodeParams.from_flat(q, k, n, best), tuple(_expand(classes[best], q, k)))


def size_lower_bound(q: int, k: int, n: int) -> Fraction:
    """|Irr(n)| / (5 q^4 ceil((n-k)/2)^2 (4 ceil(n/k)^2 - 1)^k (n-k)^2)."""
    if n <= 2 * k:
        raise ValueError("need n > 2k")
    return Fraction(analysis.count_irreducible(n, q, k), analysis.bound_denominator(q, k, n))


# ---------------------------------------------------------------------------
# decoding


@dataclass
class DecodeTrace:
    delta: int | str  # -k, 0, k, 2k, or "clean"
    branch: str = ""
    star_string: int | None = None  # 1-based index of the string carrying the (*) edit
    stage: str | None = None  # "odd_even", "cusum" or "concat"
    corrections: list[str] = field(default_factory=list)


def _delete(u: Word, idx: Iterable[int]) -> Word:
    drop = set(idx)
    return tuple(s for i, s in enumerate(u) if i not in drop)


class _Decoder:
    def __init__(self, head: Word, mu2: Word, p: CodeParams):
        self.p = p
        self.head = head
        self.mu2 = mu2
        self.q, self.k, self.n = p.q, p.k, p.n
        self.L = p.n - p.k
        self.lens = p.string_lengths
        self.parts = [split(mu2, j, self.k) for j in range(1, self.k + 1)]
        self.s = [indicator(u) for u in self.parts]
        self.bd = signed_mod5(sum(map(sum, self.s)) - p.b)
        self.results: dict[Word, DecodeTrace] = {}

    # one candidate mu: rebuild the word and keep it if it is a codeword
    def offer(self, mu_parts: Sequence[Word] | None, il: Word | None, trace: DecodeTrace):
        try:
            if il is not None:
                cand_mu = deinterleave(il, self.L, self.k)
            else:
                if [len(u) for u in mu_parts] != self.lens:
                    return
                cand_mu = join_strings(mu_parts)
        except ValueError:
            return
        x = phi_inv((self.head, cand_mu), self.q)
        if nd_membership(x, self.p):
            self.results.setdefault(x, trace)

    def vt_delta(self, j: int) -> int:
        m = 2 * self.lens[j] + 3
        return (vt_sum(self.s[j]) - self.p.a[j]) % m

    def pre(self, j: int, kind: str):
        return preimages(self.s[j], kind, self.lens[j], self.p.a[j], self.p.c[j])

    # -- |mu''| = |mu| - k: a zero went missing from every string
    def shrink(self):
        options = []
        for j in range(self.k):
            opts = []
            for word, err in self.pre(j, "deletion"):
                g = err.position
                if word[g] == 0:
                    opts.append(self.parts[j][:g] + (0,) + self.parts[j][g:])
            options.append(opts)
        for combo in itertools.product(*options):
            self.offer(combo, None, DecodeTrace(-self.k, "restore one zero per string"))

    # -- |mu''| = |mu|
    def same_length(self):
        changed = [j for j in range(self.k) if self.vt_delta(j) != 0]
        if not changed:
            self.offer(self.parts, None, DecodeTrace("clean", "no change"))
            return
        if len(changed) >= 2:
            options = []
            for j in range(self.k):
                if j not in changed:
                    options.append([self.parts[j]])
                    continue
                opts = []
                for _, err in self.pre(j, "transposition"):
                    i = err.position
                    u = self.parts[j]
                    opts.append(u[:i] + (u[i + 1], u[i]) + u[i + 2 :])
                options.append(opts)
            for combo in itertools.product(*options):
                self.offer(combo, None, DecodeTrace(0, "adjacent swaps", corrections=[f"s{j + 1}" for j in changed]))
            return
        j = changed[0]
        u = self.parts[j]
        fixes = []
        if self.bd == 2:
            for word, err in self.pre(j, "double_substitution"):
                i = err.position
                if self.s[j][i] == 1:  # received 11, sent 00
                    fixes.append((u[:i] + (0, (u[i] + u[i + 1]) % self.q) + u[i + 2 :], "0c -> a(c-a) with c = 0"))
        elif self.bd == 1:
            for word, err in self.pre(j, "substitution"):
                i = err.position
                if self.s[j][i] != 1:
                    continue
                if i < len(u) - 1:
                    fixes.append((u[:i] + (0, (u[i] + u[i + 1]) % self.q) + u[i + 2 :], "0c -> a(c-a)"))
                else:
                    fixes.append((u[:i] + (0,), "0 -> a at the tail"))
        elif self.bd == 0:
            for word, err in self.pre(j, "transposition"):
                i = err.position
                fixes.append((u[:i] + (u[i + 1], u[i]) + u[i + 2 :], "adjacent swap"))
        for fixed, label in fixes:
            parts = list(self.parts)
            parts[j] = fixed
            self.offer(parts, None, DecodeTrace(0, label, star_string=j + 1, corrections=[label]))

    def _zero_removals(self, j: int) -> list[Word]:
        return [_delete(self.parts[j], [err.position]) for _, err in self.pre(j, "insertion0")]

    def _finish_single_insertion(self, fixed: list[Word | None], js: int, branch: str, stage: str | None = None):
        """fixed holds recovered strings and None at js; repair the raw string through IL'."""
        parts = [fixed[j] if j != js else self.parts[js] for j in range(self.k)]
        il_raw: Word = sum(parts, ())
        q, L = self.q, self.L
        if stage is None:
            odd, even = odd_even(il_raw)
            d = (sum(odd) - self.p.abar[0] + sum(even) - self.p.abar[1]) % q
            stage = "concat" if d != 0 else "cusum"
        try:
            if stage == "concat":
                il = tq_decode(il_raw, L, q, TqParams(self.p.abar[3], self.p.bbar[3], L))
            else:
                r = tq_decode(cusum(il_raw, q), L, q, TqParams(self.p.abar[2], self.p.bbar[2], L))
                il = difference(r, q)
        except DecodeError:
            return
        self.offer(None, il, DecodeTrace(self.k, branch, star_string=js + 1, stage=stage))

    # -- |mu''| = |mu| + k
    def grow_one(self):
        if self.bd == 0:
            options = [self._zero_removals(j) for j in range(self.k)]
            for combo in itertools.product(*options):
                self.offer(combo, None, DecodeTrace(self.k, "one zero inserted per string"))
            return
        if self.bd == 1:
            reports = []
            for j in range(self.k):
                try:
                    reports.append(vt_decode_report(self.s[j], self.lens[j], VtParams(self.p.a[j], 2 * self.lens[j] + 3)))
                except DecodeError:
                    return
            stars = [j for j, rep in enumerate(reports) if rep.value == 1]
            if len(stars) != 1:
                return
            js = stars[0]
            fixed: list[Word | None] = [None] * self.k
            for j, rep in enumerate(reports):
                if j != js:
                    fixed[j] = _delete(self.parts[j], [rep.position])
            self._finish_single_insertion(fixed, js, "one string gained a nonzero symbol")
            return
        if self.bd == 2:
            # 0 -> a(-a) in one string; the indicator shows 0 -> 11 there
            for js in range(self.k):
                if not self.pre(js, "expand0"):
                    continue
                others = [self._zero_removals(j) if j != js else [None] for j in range(self.k)]
                for combo in itertools.product(*others):
                    self._finish_single_insertion(list(combo), js, "0 -> a(-a) in one string", stage="cusum")

    # -- |mu''| = |mu| + 2k
    def grow_two(self):
        if self.bd != 2:
            return
        half = math.ceil(self.L / 2)
        for js in range(self.k):
            if not self.pre(js, "insert11"):
                continue
            options = []
            for j in range(self.k):
                if j == js:
                    options.append([self.parts[js]])
                    continue
                m = 2 * self.lens[j] + 3
                kind = "insert00" if self.vt_delta(j) % 2 == 0 else "insert010"
                opts = []
                for _, err in self.pre(j, kind):
                    i = err.position
                    opts.append(_delete(self.parts[j], [i, i + 1] if kind == "insert00" else [i, i + 2]))
                options.append(opts)
            for combo in itertools.product(*options):
                odd, even = odd_even(sum(combo, ()))
                try:
                    odd = tq_decode(odd, half, self.q, TqParams(self.p.abar[0], self.p.bbar[0], half))
                    even = tq_decode(even, self.L // 2, self.q, TqParams(self.p.abar[1], self.p.bbar[1], half))
                except DecodeError:
                    continue
                self.offer(None, merge_odd_even(odd, even),
                           DecodeTrace(2 * self.k, "pair a(-a) inserted in one string", star_string=js + 1, stage="odd_even"))

    def run(self) -> tuple[Word, DecodeTrace]:
        delta = len(self.mu2) - self.L
        k = self.k
        if delta == -k:
            self.shrink()
        elif delta == 0:
            self.same_length()
        elif delta == k:
            self.grow_one()
        elif delta == 2 * k:
            self.grow_two()
        else:
            raise NdDecodeError(f"root length changed by {delta}, expected one of -k, 0, k, 2k")
        if not self.results:
            raise NdDecodeError(f"no codeword explains the received word (delta {delta})")
        if len(self.results) > 1:
            raise NdDecodeError(f"{len(self.results)} codewords explain the received word (delta {delta})")
        return next(iter(self.results.items()))


def nd_decode(received: Sequence[int], p: CodeParams, *, check_cone: bool = False,
              budget: int = 1_000_000) -> tuple[Word, DecodeTrace]:
    """Recover the codeword whose single-noisy-duplication cone contains ``received``.

    With ``check_cone`` the answer is also confirmed by enumerating the cone of
    the decoded codeword up to the number of duplications implied by the length.
    """
    y = tuple(received)
    if len(y) < p.n:
        raise NdDecodeError(f"received word is shorter than n = {p.n}")
    if (len(y) - p.n) % p.k:
        raise NdDecodeError("length difference is not a multiple of k")
    head, tail = phi(y, p.k, p.q)
    x, trace = _Decoder(head, mu(tail, p.k), p).run()
    if check_cone:
        t = (len(y) - p.n) // p.k
        if y not in descendants(x, p.k, p.q, t, min(t, 1), budget=budget):
            raise NdDecodeError("decoded codeword does not reach the received word")
    return x, trace
