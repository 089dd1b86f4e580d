"""Exact and noisy tandem duplications, descendant cones, random sampling, and
classification of how one noisy duplication changes the reduced derivative mu.
"""

from __future__ import annotations

import random
from collections.abc import Iterable
from dataclasses import dataclass, field
from typing import Sequence

from .words import Word, split

DEFAULT_BUDGET = 10_000_000


class EnumerationLimitError(RuntimeError):
    """A cone or sweep grew past its node budget."""


@dataclass(frozen=True)
class ChannelEvent:
    """One duplication. ``position`` is the 0-based prefix length before the copied block.

    Noisy events also carry the 1-based offset of the altered symbol inside
    the inserted copy and the additive noise value in [1, q-1].
    """

    kind: str
    position: int
    offset: int | None = None
    noise: int | None = None

    def __post_init__(self):
        if self.kind == "exact":
            if self.offset is not None or self.noise is not None:
                raise ValueError("exact events carry no offset or noise")
        elif self.kind == "noisy":
            if self.offset is None or self.noise is None or self.noise == 0:
                raise ValueError("noisy events need an offset and a nonzero noise value")
        else:
            raise ValueError(f"unknown event kind {self.kind!r}")
        if self.position < 0:
            raise ValueError("position must be non-negative")

    def to_line(self) -> str:
        if self.kind == "exact":
            return f"exact {self.position}"
        return f"noisy {self.position} {self.offset} {self.noise}"

    @classmethod
    def from_line(cls, line: str) -> ChannelEvent:
        parts = line.split()
        if not parts:
            raise ValueError("empty event line")
        if parts[0] == "exact" and len(parts) == 2:
            return cls("exact", int(parts[1]))
        if parts[0] == "noisy" and len(parts) == 4:
            return cls("noisy", int(parts[1]), int(parts[2]), int(parts[3]))
        raise ValueError(f"malformed event line: {line!r}")


def dump_events(events: Iterable[ChannelEvent]) -> str:
    return "".join(e.to_line() + "\n" for e in events)


def load_events(text: str) -> list[ChannelEvent]:
    return [ChannelEvent.from_line(line) for line in text.splitlines() if line.strip() and not line.startswith("#")]


def apply_td(x: Sequence[int], i: int, k: int) -> Word:
    x = tuple(x)
    if i < 0:
        raise ValueError("position must be non-negative")
    if i + k > len(x):
        return x
    return x[: i + k] + x[i : i + k] + x[i + k :]


def apply_nd(x: Sequence[int], i: int, k: int, offset: int, noise: int, q: int) -> Word:
    """Duplicate x[i:i+k] and add ``noise`` to symbol ``offset`` (1-based) of the copy."""
    x = tuple(x)
    if i < 0 or i + k > len(x):
        raise ValueError(f"no length-{k} block at position {i} in a word of length {len(x)}")
    if not 1 <= offset <= k:
        raise ValueError(f"offset {offset} outside [1, {k}]")
    if not 1 <= noise <= q - 1:
        raise ValueError(f"noise {noise} outside [1, {q - 1}]")
    y = list(apply_td(x, i, k))
    p = i + k + offset - 1
    y[p] = (y[p] + noise) % q
    return tuple(y)


def apply_event(x: Sequence[int], e: ChannelEvent, k: int, q: int) -> Word:
    if e.kind == "exact":
        return apply_td(x, e.position, k)
    return apply_nd(x, e.position, k, e.offset, e.noise, q)


def _successors(x: Word, k: int, q: int, noisy: bool):
    for i in range(len(x) - k + 1):
        if noisy:
            for off in range(1, k + 1):
                for a in range(1, q):
                    yield apply_nd(x, i, k, off, a, q)
        else:
            yield apply_td(x, i, k)


def descendants(
    x: Sequence[int], k: int, q: int, t_max: int, p_max: int = 0, budget: int = DEFAULT_BUDGET
) -> set[Word]:
    """All words reachable with at most t_max duplications, at most p_max of them noisy."""
    if p_max not in (0, 1):
        raise ValueError("only p_max in {0, 1} is supported")
    if t_max < p_max:
        raise ValueError("t_max must be at least p_max")
    x = tuple(x)
    frontier: set[tuple[Word, int]] = {(x, 0)}
    seen = set(frontier)
    for _ in range(t_max):
        nxt: set[tuple[Word, int]] = set()
        for word, used in frontier:
            for y in _successors(word, k, q, False):
                nxt.add((y, used))
            if used < p_max:
                for y in _successors(word, k, q, True):
                    nxt.add((y, used + 1))
            if len(seen) + len(nxt) > budget:
                raise EnumerationLimitError(f"descendant cone exceeds budget of {budget} nodes")
        nxt -= seen
        seen |= nxt
        frontier = nxt
    return {w for w, _ in seen}


def sample_channel(
    x: Sequence[int], k: int, q: int, t: int, noisy: bool, seed=None
) -> tuple[Word, list[ChannelEvent]]:
    """Apply t duplications at uniform positions; with ``noisy`` exactly one of them is noisy."""
    if noisy and t < 1:
        raise ValueError("a noisy channel needs at least one duplication")
    rng = random.Random(seed)
    word = tuple(x)
    if len(word) < k:
        return word, []
    noisy_step = rng.randrange(t) if noisy else -1
    events = []
    for step in range(t):
        i = rng.randrange(len(word) - k + 1)
        if step == noisy_step:
            e = ChannelEvent("noisy", i, rng.randint(1, k), rng.randint(1, q - 1))
        else:
            e = ChannelEvent("exact", i)
        word = apply_event(word, e, k, q)
        events.append(e)
    return word, events


# ---------------------------------------------------------------------------
# Root-change classification
#
# A noisy duplication adds a to one derivative symbol and -a to the symbol k
# places later. Rows "I.*" are the cases where both symbols exist; rows "II.*"
# are the cases where the altered symbol sits in the last k positions and has
# no partner. Per-string edit classes in STAR_EDITS may occur in at most one
# of the k residue-class strings.

STAR_EDITS = frozenset({"ins_pair", "split", "zero_to_pair", "ins_nonzero", "double_sub", "sub_zero"})

ROWS = {
    "same": "no change",
    "I.+2k": "insert 0^{j-1}a0^{k-j} and 0^{t-1}(-a)0^{k-t}",
    "I.+k.ins_sub": "insert 0^{j-1}a0^{k-j} and substitute b -> b-a",
    "I.+k.sub_ins": "substitute 0 -> a and insert 0^{t-1}(-a)0^{k-t}",
    "I.0.swap": "insert 0^{j-1}a0^{k-j} and delete 0^{t-1}a0^{k-t}",
    "I.0.double_sub": "substitute 0 -> a and b -> b-a at distance k",
    "I.-k": "substitute 0 -> a and delete 0^{t-1}a0^{k-t}",
    "II.+k": "insert 0^{j-1}a0^{k-j} (tail)",
    "II.0": "substitute 0 -> a (tail)",
}


@dataclass(frozen=True)
class RootChange:
    delta: int
    rows: tuple[str, ...]
    per_string_changes: tuple[frozenset, ...] = field(default_factory=tuple)


class UnclassifiedChange(ValueError):
    """No table row explains the observed change (a channel-model violation)."""


def _is_insertion(u: Word, v: Word, accept) -> bool:
    """v is u with one symbol inserted, and accept(symbol) holds."""
    if len(v) != len(u) + 1:
        return False
    for i in range(len(v)):
        if v[:i] + v[i + 1 :] == u and accept(v[i]):
            return True
    return False


def edit_classes(u: Word, v: Word, q: int) -> frozenset:
    """Every single-string edit class that turns u into v."""
    out = set()
    lu, lv = len(u), len(v)
    if u == v:
        out.add("same")
    if lv == lu + 1:
        if _is_insertion(u, v, lambda s: s == 0):
            out.add("ins_zero")
        if _is_insertion(u, v, lambda s: s != 0):
            out.add("ins_nonzero")
        # c -> a(c-a), a != 0
        for i in range(lu):
            if v[:i] == u[:i] and v[i + 2 :] == u[i + 1 :] and v[i] != 0 and (v[i] + v[i + 1]) % q == u[i]:
                if u[i] == 0:
                    out.add("zero_to_pair")
                elif v[i] != u[i]:
                    out.add("split")
    elif lv == lu - 1:
        if _is_insertion(v, u, lambda s: s == 0):
            out.add("del_zero")
    elif lv == lu + 2:
        for i in range(lu + 1):
            if v[:i] == u[:i] and v[i + 2 :] == u[i:]:
                if v[i] == v[i + 1] == 0:
                    out.add("ins_00")
                elif v[i] != 0 and (v[i] + v[i + 1]) % q == 0:
                    out.add("ins_pair")
        for i in range(lu):
            if v[:i] == u[:i] and v[i + 3 :] == u[i + 1 :] and v[i] == v[i + 2] == 0 and v[i + 1] == u[i]:
                out.add("wrap_zeros")
    elif lv == lu:
        diff = [i for i in range(lu) if u[i] != v[i]]
        if len(diff) == 1:
            i = diff[0]
            if u[i] == 0:
                out.add("sub_zero")
        elif len(diff) == 2 and diff[1] == diff[0] + 1:
            i = diff[0]
            if u[i] != 0 and u[i + 1] == 0 and v[i] == 0 and v[i + 1] == u[i]:
                out.add("swap")
            if u[i] == 0 and v[i] != 0 and (v[i] + v[i + 1]) % q == u[i + 1]:
                out.add("double_sub")
    return frozenset(out)


def _match_row(changes: Sequence[frozenset], star: Iterable[str], others: Iterable[str], star_required: bool) -> bool:
    """Exactly one string (or at most one when not required) uses a star edit, the rest use ``others``."""
    star = set(star)
    others = set(others)
    k = len(changes)
    if all(ch & others for ch in changes) and not star_required:
        return True
    for j in range(k):
        if changes[j] & star and all(changes[t] & others for t in range(k) if t != j):
            return True
    return False


def classify_root_change(mu_before: Sequence[int], mu_after: Sequence[int], k: int, q: int) -> RootChange:
    """Find every table row consistent with the change mu -> mu''.

    Raises UnclassifiedChange when none matches.
    """
    u, v = tuple(mu_before), tuple(mu_after)
    delta = len(v) - len(u)
    if u == v:
        changes = tuple(frozenset({"same"}) for _ in range(k))
        return RootChange(0, ("same",), changes)
    changes = tuple(edit_classes(split(u, j, k), split(v, j, k), q) for j in range(1, k + 1))
    rows = []
    if delta == 2 * k:
        if _match_row(changes, {"ins_pair"}, {"ins_00", "wrap_zeros"}, True):
            rows.append("I.+2k")
    elif delta == k:
        if _match_row(changes, {"split"}, {"ins_zero"}, False):
            rows.append("I.+k.ins_sub")
        if _match_row(changes, {"zero_to_pair"}, {"ins_zero"}, True):
            rows.append("I.+k.ins_sub")
            rows.append("I.+k.sub_ins")
        if _match_row(changes, {"ins_nonzero"}, {"ins_zero"}, True):
            rows.append("II.+k")
    elif delta == 0:
        if all(ch & {"swap", "same"} for ch in changes) and any("swap" in ch for ch in changes):
            rows.append("I.0.swap")
        if _match_row(changes, {"double_sub"}, {"same"}, True):
            rows.append("I.0.double_sub")
        if _match_row(changes, {"sub_zero"}, {"same"}, True):
            rows.append("II.0")
    elif delta == -k:
        if all("del_zero" in ch for ch in changes):
            rows.append("I.-k")
    if not rows:
        raise UnclassifiedChange(f"no table row explains {u} -> {v} (delta {delta})")
    return RootChange(delta, tuple(dict.fromkeys(rows)), changes)
