"""Words over the alphabet {0, ..., q-1} and the transforms defined on them.

Words are plain tuples of ints. The alphabet size ``q`` is passed explicitly
to every operation that does modular arithmetic; 1-based indices in the
docstrings follow the usual coding-theory convention, the code itself is
0-based.
"""

from __future__ import annotations

from typing import NamedTuple, Sequence

Word = tuple[int, ...]

EMPTY: Word = ()


class TransformPair(NamedTuple):
    """Result of the k-discrete-derivative: the first k symbols and the lag-k differences."""

    head: Word
    tail: Word

    @property
    def k(self) -> int:
        return len(self.head)


def check_word(x: Sequence[int], q: int) -> Word:
    if q < 2:
        raise ValueError(f"alphabet size must be at least 2, got {q}")
    w = tuple(int(s) for s in x)
    for s in w:
        if not 0 <= s < q:
            raise ValueError(f"symbol {s} outside alphabet of size {q}")
    return w


def parse_word(text: str, q: int) -> Word:
    """Parse the text form of a word.

    For q <= 10 the word is a plain digit string ("1201210"); for larger
    alphabets symbols are comma separated. An empty string is the empty word.
    """
    text = text.strip()
    if not text:
        return EMPTY
    if q <= 10:
        if not text.isdigit():
            raise ValueError(f"not a digit string: {text!r}")
        symbols = [int(ch) for ch in text]
    else:
        try:
            symbols = [int(tok) for tok in text.split(",")]
        except ValueError:
            raise ValueError(f"not a comma-separated word: {text!r}") from None
    return check_word(symbols, q)


def format_word(x: Sequence[int], q: int) -> str:
    if q <= 10:
        return "".join(str(s) for s in x)
    return ",".join(str(s) for s in x)


def phi(x: Sequence[int], k: int, q: int) -> TransformPair:
    """k-discrete-derivative: (x_1..x_k, x_{k+i} - x_i mod q)."""
    if k < 1:
        raise ValueError("k must be positive")
    if len(x) < k:
        raise ValueError(f"word of length {len(x)} is shorter than k={k}")
    x = tuple(x)
    return TransformPair(x[:k], tuple((x[i + k] - x[i]) % q for i in range(len(x) - k)))


def phi_inv(pair: tuple[Sequence[int], Sequence[int]], q: int) -> Word:
    head, tail = pair
    out = list(head)
    for i, d in enumerate(tail):
        out.append((out[i] + d) % q)
    return tuple(out)


def mu(z: Sequence[int], k: int) -> Word:
    """Reduce every maximal run of zeros modulo k."""
    out: list[int] = []
    run = 0
    for s in z:
        if s == 0:
            run += 1
        else:
            out.extend([0] * (run % k))
            out.append(s)
            run = 0
    out.extend([0] * (run % k))
    return tuple(out)


def has_zero_run(z: Sequence[int], k: int) -> bool:
    run = 0
    for s in z:
        run = run + 1 if s == 0 else 0
        if run >= k:
            return True
    return False


def root(x: Sequence[int], k: int, q: int) -> Word:
    """Duplication root: the word with every length-k tandem repeat removed."""
    head, tail = phi(x, k, q)
    return phi_inv((head, mu(tail, k)), q)


def is_irreducible(x: Sequence[int], k: int, q: int) -> bool:
    return not has_zero_run(phi(x, k, q).tail, k)


def indicator(z: Sequence[int]) -> Word:
    return tuple(1 if s else 0 for s in z)


def split(u: Sequence[int], j: int, k: int) -> Word:
    """Entries of u at positions j, j+k, j+2k, ... (1-based j)."""
    if not 1 <= j <= k:
        raise ValueError(f"split index {j} outside [1, {k}]")
    return tuple(u[j - 1 :: k])


def split_lengths(length: int, k: int) -> list[int]:
    """Lengths of split(u, j, k) for j = 1..k when |u| = length."""
    return [(length - j) // k + 1 if length >= j else 0 for j in range(1, k + 1)]


def interleave(u: Sequence[int], k: int) -> Word:
    out: list[int] = []
    for j in range(1, k + 1):
        out.extend(split(u, j, k))
    return tuple(out)


def join_strings(parts: Sequence[Sequence[int]]) -> Word:
    """Inverse of splitting: rebuild u from its k residue-class strings."""
    k = len(parts)
    total = sum(len(p) for p in parts)
    out = [0] * total
    for j, part in enumerate(parts):
        out[j::k] = part
    return tuple(out)


def deinterleave(v: Sequence[int], original_length: int, k: int) -> Word:
    if len(v) != original_length:
        raise ValueError(f"interleaved word has length {len(v)}, expected {original_length}")
    parts = []
    pos = 0
    for size in split_lengths(original_length, k):
        parts.append(v[pos : pos + size])
        pos += size
    return join_strings(parts)


def cusum(z: Sequence[int], q: int) -> Word:
    out = []
    acc = 0
    for s in z:
        acc = (acc + s) % q
        out.append(acc)
    return tuple(out)


def difference(r: Sequence[int], q: int) -> Word:
    """Inverse of cusum: first differences mod q."""
    prev = 0
    out = []
    for s in r:
        out.append((s - prev) % q)
        prev = s
    return tuple(out)


def odd_even(z: Sequence[int]) -> tuple[Word, Word]:
    return tuple(z[0::2]), tuple(z[1::2])


def merge_odd_even(odd: Sequence[int], even: Sequence[int]) -> Word:
    if not 0 <= len(odd) - len(even) <= 1:
        raise ValueError("odd/even lengths are incompatible")
    return join_strings([odd, even])


def zeta(z: Sequence[int]) -> Word:
    """Ascent signature: 1 at the first position, then 1 iff z_i >= z_{i-1}."""
    if not z:
        return EMPTY
    return (1,) + tuple(1 if z[i] >= z[i - 1] else 0 for i in range(1, len(z)))
