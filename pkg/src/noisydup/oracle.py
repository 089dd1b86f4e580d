"""Brute-force verification of the code constructions.

Everything here is written from the definitions, independently of the fast
paths: a second copy of every syndrome formula, a separate cone enumerator
and a separate error injector. The library is only reached through its
public membership and decode functions.
"""

from __future__ import annotations

import itertools
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any

from .channel import ROWS, EnumerationLimitError, UnclassifiedChange, classify_root_change
from .guard import GuardParams, guard_decode
from .indel import DecodeError
from .ndcode import Codebook, nd_decode, nd_syndromes
from .words import Word, format_word

DEFAULT_BUDGET = 10_000_000


@dataclass
class VerificationReport:
    scenario: str
    instances: int = 0
    failures: list[tuple[Any, Any, Any]] = field(default_factory=list)
    elapsed: float = 0.0
    details: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_text(self, max_failures: int = 20) -> str:
        lines = [
            f"scenario: {self.scenario}",
            f"status: {'pass' if self.passed else 'FAIL'}",
            f"instances: {self.instances}",
            f"failures: {len(self.failures)}",
            f"elapsed: {self.elapsed:.3f}s",
        ]
        for key, value in self.details.items():
            lines.append(f"{key}: {value}")
        for inp, expected, got in self.failures[:max_failures]:
            lines.append(f"  input={inp} expected={expected} got={got}")
        return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# second copies of the definitions


def ref_derivative(x: Word, k: int, q: int) -> tuple[Word, Word]:
    return x[:k], tuple((x[i] - x[i - k]) % q for i in range(k, len(x)))


def ref_reduce(z: Word, k: int) -> Word:
    """Drop k zeros at a time from every zero run until no run reaches k."""
    out = []
    i = 0
    while i < len(z):
        if z[i] != 0:
            out.append(z[i])
            i += 1
            continue
        j = i
        while j < len(z) and z[j] == 0:
            j += 1
        out.extend([0] * ((j - i) % k))
        i = j
    return tuple(out)


def ref_irreducible(x: Word, k: int) -> bool:
    """No substring of the form vv with |v| = k."""
    return not any(x[i : i + k] == x[i + k : i + 2 * k] for i in range(len(x) - 2 * k + 1))


def ref_code_residues(x: Word, q: int, k: int) -> tuple[int, ...]:
    """Residue tuple of an irreducible word, in codebook-file order."""
    _, z = ref_derivative(x, k, q)
    L = len(z)
    strings = [z[j::k] for j in range(k)]
    ind = [[1 if v else 0 for v in u] for u in strings]
    a = [sum((i + 1) * b for i, b in enumerate(s)) % (2 * len(s) + 3) for s in ind]
    c = []
    for s in ind:
        total = sum((i + 1) * sum(s[: i + 1]) for i in range(len(s)))
        c.append(total % (2 * len(s) + 1))
    b = sum(map(sum, ind)) % 5
    il = [v for u in strings for v in u]
    odd, even = il[0::2], il[1::2]
    r = [sum(il[: i + 1]) % q for i in range(L)]
    half = (L + 1) // 2

    def beta(u, m):
        # sum over i >= 2 of (i-1) [u_i >= u_{i-1}]
        return sum(i for i in range(1, len(u)) if u[i] >= u[i - 1]) % m

    abar = [sum(odd) % q, sum(even) % q, sum(r) % q, sum(il) % q]
    bbar = [beta(odd, half), beta(even, half), beta(r, L), beta(il, L)]
    return (*a, *c, b, *abar, *bbar)


def _ref_children(x: Word, k: int, q: int, noisy: bool):
    for i in range(len(x) - k + 1):
        block = x[i : i + k]
        if not noisy:
            yield x[: i + k] + block + x[i + k :]
            continue
        for off in range(k):
            for a in range(1, q):
                copy = block[:off] + ((block[off] + a) % q,) + block[off + 1 :]
                yield x[: i + k] + copy + x[i + k :]


def ref_cone(x: Word, k: int, q: int, t_max: int, p_max: int = 1, budget: int = DEFAULT_BUDGET) -> set[Word]:
    """Depth-first enumeration of words reachable with at most t_max duplications, p_max noisy."""
    seen: set[tuple[Word, int]] = set()
    stack = [(x, 0, 0)]
    best_depth: dict[tuple[Word, int], int] = {}
    while stack:
        word, used, depth = stack.pop()
        key = (word, used)
        if best_depth.get(key, t_max + 1) <= depth:
            continue
        best_depth[key] = depth
        seen.add(key)
        if len(best_depth) > budget:
            raise EnumerationLimitError(f"cone exceeds budget of {budget} nodes")
        if depth == t_max:
            continue
        for y in _ref_children(word, k, q, False):
            stack.append((y, used, depth + 1))
        if used < p_max:
            for y in _ref_children(word, k, q, True):
                stack.append((y, used + 1, depth + 1))
    return {w for w, _ in seen}


def ref_guard_errors(u: Word):
    """Every menu error applied to a binary word: yields (label, corrupted word)."""
    n = len(u)
    yield "none", u
    for i in range(n + 1):
        for ins in ((0,), (1,), (1, 1), (0, 0)):
            yield f"insert {ins} at {i}", u[:i] + ins + u[i:]
    for i in range(n):
        yield f"delete {i}", u[:i] + u[i + 1 :]
        yield f"flip {i}", u[:i] + (1 - u[i],) + u[i + 1 :]
        yield f"expand {i}", u[:i] + ((1, 1) if u[i] == 0 else (0, 0)) + u[i + 1 :]
        if u[i] == 1:
            yield f"wrap {i}", u[:i] + (0, 1, 0) + u[i + 1 :]
    for i in range(n - 1):
        if u[i] == u[i + 1]:
            yield f"flip pair {i}", u[:i] + (1 - u[i], 1 - u[i]) + u[i + 2 :]
        else:
            yield f"swap {i}", u[:i] + (u[i + 1], u[i]) + u[i + 2 :]


def ref_guard_residues(u: Word) -> tuple[int, int, int]:
    n = len(u)
    vt = sum(i * b for i, b in enumerate(u, 1))
    pref = sum(i * sum(u[:i]) for i in range(1, n + 1))
    return vt % (2 * n + 3), sum(u) % 5, pref % (2 * n + 1)


# ---------------------------------------------------------------------------
# verifiers


def verify_syndromes(q: int, k: int, n: int) -> VerificationReport:
    """Library residues and membership agree with the second copy on all of Irr(n)."""
    t0 = time.perf_counter()
    rep = VerificationReport(f"syndromes q={q} k={k} n={n}")
    classes: Counter = Counter()
    for x in itertools.product(range(q), repeat=n):
        if not ref_irreducible(x, k):
            continue
        rep.instances += 1
        expected = ref_code_residues(x, q, k)
        got = nd_syndromes(x, q, k).flat()
        classes[expected] += 1
        if got != expected:
            rep.failures.append((format_word(x, q), expected, got))
    rep.details["classes"] = len(classes)
    rep.details["largest class"] = max(classes.values(), default=0)
    rep.elapsed = time.perf_counter() - t0
    return rep


def verify_cone_disjoint(book: Codebook, t_max: int, budget: int = DEFAULT_BUDGET) -> VerificationReport:
    p = book.params
    t0 = time.perf_counter()
    rep = VerificationReport(f"cone-disjoint q={p.q} k={p.k} n={p.n} t_max={t_max}")
    owner: dict[Word, Word] = {}
    for c in book.words:
        for y in ref_cone(c, p.k, p.q, t_max, 1, budget):
            rep.instances += 1
            prev = owner.setdefault(y, c)
            if prev != c:
                rep.failures.append((format_word(y, p.q), format_word(prev, p.q), format_word(c, p.q)))
        if len(owner) > budget:
            raise EnumerationLimitError(f"union of cones exceeds budget of {budget}")
    rep.details["codewords"] = len(book)
    rep.details["distinct descendants"] = len(owner)
    rep.elapsed = time.perf_counter() - t0
    return rep


def _decode_cone(args) -> tuple[int, list, Counter]:
    c, params, t_max, budget = args
    count = 0
    failures = []
    branches: Counter = Counter()
    for y in sorted(ref_cone(c, params.k, params.q, t_max, 1, budget)):
        count += 1
        try:
            got, trace = nd_decode(y, params)
            branches[f"{trace.delta}: {trace.branch}"] += 1
        except DecodeError as e:
            failures.append((format_word(y, params.q), format_word(c, params.q), f"error: {e}"))
            continue
        if got != c:
            failures.append((format_word(y, params.q), format_word(c, params.q), format_word(got, params.q)))
    return count, failures, branches


def verify_decode_exhaustive(book: Codebook, t_max: int, threads: int = 1,
                             budget: int = DEFAULT_BUDGET) -> VerificationReport:
    """Every descendant (at most one noisy duplication) of every codeword decodes to it."""
    p = book.params
    t0 = time.perf_counter()
    rep = VerificationReport(f"decode q={p.q} k={p.k} n={p.n} t_max={t_max}")
    jobs = [(c, p, t_max, budget) for c in book.words]
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_decode_cone, jobs))
    else:
        results = [_decode_cone(j) for j in jobs]
    branches: Counter = Counter()
    for count, failures, br in results:  # book order, so the merge is deterministic
        rep.instances += count
        rep.failures.extend(failures)
        branches.update(br)
    rep.details["codewords"] = len(book)
    rep.details["branches"] = dict(sorted(branches.items()))
    rep.elapsed = time.perf_counter() - t0
    return rep


def verify_guard_exhaustive(n: int) -> VerificationReport:
    """All (a, b, c) classes of length n: they partition {0,1}^n and every menu error decodes."""
    if n > 12:
        raise ValueError("exhaustive guard check is limited to n <= 12")
    t0 = time.perf_counter()
    rep = VerificationReport(f"guard n={n}")
    classes: Counter = Counter()
    for u in itertools.product((0, 1), repeat=n):
        a, b, c = ref_guard_residues(u)
        classes[(a, b, c)] += 1
        params = GuardParams(n, a, b, c)
        for label, r in ref_guard_errors(u):
            rep.instances += 1
            try:
                got, _ = guard_decode(r, params)
            except DecodeError as e:
                rep.failures.append((f"{''.join(map(str, u))} {label}", u, f"error: {e}"))
                continue
            if got != u:
                rep.failures.append((f"{''.join(map(str, u))} {label}", u, got))
    total = sum(classes.values())
    if total != 2**n:
        rep.failures.append(("partition", 2**n, total))
    rep.details["classes"] = len(classes)
    rep.details["class space"] = (2 * n + 3) * 5 * (2 * n + 1)
    rep.elapsed = time.perf_counter() - t0
    return rep


def verify_table_coverage(q: int, k: int, n_max: int, t_max: int, noisy: bool = True,
                          budget: int = DEFAULT_BUDGET) -> VerificationReport:
    """Classify every (mu, mu'') pair the channel can produce from roots of length <= n_max.

    Exact duplications after the noisy one leave mu'' unchanged, so each pair
    is generated by t_max - 1 exact duplications followed by one noisy one
    (or t_max exact ones when ``noisy`` is off). Roots with head 0^k suffice:
    the change in mu depends only on the derivative.
    """
    t0 = time.perf_counter()
    rep = VerificationReport(f"table coverage q={q} k={k} n_max={n_max} t_max={t_max} noisy={noisy}")
    rows: Counter = Counter()
    deltas: Counter = Counter()
    seen_pairs: set[tuple[Word, Word]] = set()
    nodes = 0
    for length in range(k + 1, n_max + 1):
        for z in itertools.product(range(q), repeat=length - k):
            if any(z[i : i + k] == (0,) * k for i in range(len(z) - k + 1)):
                continue
            # rebuild x from its derivative with head 0^k
            xs = [0] * k
            for i, d in enumerate(z):
                xs.append((xs[i] + d) % q)
            x = tuple(xs)
            exact = ref_cone(x, k, q, t_max - 1 if noisy else t_max, 0, budget)
            nodes += len(exact)
            if nodes > budget:
                raise EnumerationLimitError(f"coverage sweep exceeds budget of {budget}")
            targets = set()
            for y in exact:
                if noisy:
                    targets.update(_ref_children(y, k, q, True))
                else:
                    targets.add(y)
            for y in targets:
                mu2 = ref_reduce(ref_derivative(y, k, q)[1], k)
                pair = (z, mu2)
                if pair in seen_pairs:
                    continue
                seen_pairs.add(pair)
                rep.instances += 1
                deltas[len(mu2) - len(z)] += 1
                try:
                    change = classify_root_change(z, mu2, k, q)
                except UnclassifiedChange:
                    rep.failures.append((format_word(z, q), "some row", format_word(mu2, q)))
                    continue
                rows.update(change.rows)
    rep.details["rows witnessed"] = dict(sorted(rows.items()))
    rep.details["rows not reached"] = sorted(set(ROWS) - set(rows))
    rep.details["deltas"] = dict(sorted(deltas.items()))
    rep.elapsed = time.perf_counter() - t0
    return rep
