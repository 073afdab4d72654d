"""Signed run-length codec for fixed-length words and the block-count index.

A length-L word splits into maximal blocks of equal bits. Reading from the
least significant end, each block becomes one signed coefficient: negative
for a block of zeros, positive for a block of ones, magnitude = block
length. The coefficient count ("run-length dimension", rld) is the
complexity index used by the interval statistics.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import groupby
from typing import Iterator

from .core import binary_length, check_frame, check_in_frame
from .hierarchy import decode, encode
from .reflection import reflect
from .report import CheckReport


class InvalidCodeError(ValueError):
    """A coefficient list that cannot come from any fixed-length word."""


@dataclass(frozen=True)
class RunLengthCode:
    """Alternating signed block lengths of one word, lowest block first."""

    coeffs: tuple[int, ...]
    frame: int

    def __post_init__(self):
        check_frame(self.frame)
        if not self.coeffs:
            raise InvalidCodeError("empty coefficient list")
        for c in self.coeffs:
            if c == 0:
                raise InvalidCodeError("zero coefficient")
        for a, b in zip(self.coeffs, self.coeffs[1:]):
            if (a > 0) == (b > 0):
                raise InvalidCodeError(f"signs do not alternate: {self.coeffs}")
        if sum(abs(c) for c in self.coeffs) != self.frame:
            raise InvalidCodeError(
                f"block lengths sum to {sum(abs(c) for c in self.coeffs)}, frame is {self.frame}"
            )

    def __len__(self) -> int:
        return len(self.coeffs)


def rl_encode(x: int, L: int) -> RunLengthCode:
    """Run-length code of x in an L-bit frame."""
    check_in_frame(x, L)
    coeffs = []
    for bit, run in groupby(decode(x, L)):
        n = len(list(run))
        coeffs.append(n if bit else -n)
    return RunLengthCode(tuple(coeffs), L)


def rl_decode(code: RunLengthCode) -> int:
    """Word value of a run-length code; inverse of rl_encode in the same frame."""
    bits: list[int] = []
    for c in code.coeffs:
        bits.extend([1 if c > 0 else 0] * abs(c))
    return encode(bits)


def rld(x: int, L: int) -> int:
    """Number of run-length coefficients (blocks) of x in an L-bit frame.

    Computed directly: x ^ (x >> 1) has a 1-bit at every position where a
    block starts, counting the word's top set bit as the boundary into the
    leading-zeros block when one exists.
    """
    check_in_frame(x, L)
    if x == 0:
        return 1
    transitions = (x ^ (x >> 1)).bit_count()
    return transitions + 1 if binary_length(x) < L else transitions


def rld_sequence(L: int) -> list[int]:
    """Pointwise rld over the whole interval [0, 2**L - 1]."""
    check_frame(L)
    return [rld(x, L) for x in range(1 << L)]


def rld_sequence_recursion(L: int) -> list[int]:
    """The rld sequence built by interval doubling instead of pointwise.

    Appending a 0 above a word adds a block exactly when the word's top bit
    is 1; the half with an appended 1 is the first half complemented, and
    complement preserves block structure, so it is the first half reversed.
    Equals rld_sequence(L).
    """
    check_frame(L)
    seq = [1, 1]
    for frame in range(1, L):
        top = 1 << (frame - 1)
        first = [seq[x] + (1 if x & top else 0) for x in range(1 << frame)]
        seq = first + first[::-1]
    return seq


def rld_reflection_invariance(L: int) -> CheckReport:
    """Check rld(reflect(n, L), L) == rld(n, L) over the whole interval."""
    check_frame(L)
    for n in range(1 << L):
        if rld(reflect(n, L), L) != rld(n, L):
            return CheckReport(False, n + 1, counterexample=(L, n))
    return CheckReport(True, 1 << L)


def integer_partitions(n: int) -> Iterator[tuple[int, ...]]:
    """All partitions of n into positive parts, each in non-increasing order."""
    if n < 0:
        raise ValueError("n must be non-negative")

    def rec(remaining: int, cap: int, prefix: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield prefix
            return
        for part in range(min(cap, remaining), 0, -1):
            yield from rec(remaining - part, part, prefix + (part,))

    yield from rec(n, n, ())


def partition_coverage(L: int) -> CheckReport:
    """Check that the block-length multisets over [0, 2**L - 1] realize every partition of L."""
    check_frame(L)
    seen = {
        tuple(sorted((abs(c) for c in rl_encode(x, L).coeffs), reverse=True))
        for x in range(1 << L)
    }
    missing = [p for p in integer_partitions(L) if p not in seen]
    if missing:
        return CheckReport(False, 1 << L, counterexample=missing[0],
                           note=f"{len(missing)} partitions unrealized")
    return CheckReport(True, 1 << L)


def rld_distribution(L: int) -> dict[int, int]:
    """Histogram {block count: occurrences} of rld over [0, 2**L - 1]."""
    check_frame(L)
    counts: dict[int, int] = {}
    for v in rld_sequence(L):
        counts[v] = counts.get(v, 0) + 1
    return counts


def digit_sum_distribution(L: int) -> dict[int, int]:
    """Histogram {1-bit count: occurrences} over [0, 2**L - 1]; binomial C(L, k)."""
    check_frame(L)
    counts: dict[int, int] = {}
    for x in range(1 << L):
        v = x.bit_count()
        counts[v] = counts.get(v, 0) + 1
    return counts
