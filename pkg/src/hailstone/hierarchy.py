"""Fixed-length words over nested power-of-two intervals.

A length-L word is the list [a_0, ..., a_{L-1}] with a_0 the least
significant bit; its value is sum(a_i * 2**i). The interval [0, 2**L - 1]
then stands in one-to-one correspondence with the set of length-L words,
and sequence transforms can be written as decode -> transform -> encode.
"""

from __future__ import annotations

from collections.abc import Callable, Sequence

from .core import OutOfFrameError, check_frame, check_in_frame, check_natural
from .report import CheckReport


def encode(word: Sequence[int]) -> int:
    """Value of a bit list, least significant bit first."""
    value = 0
    for i, bit in enumerate(word):
        if bit not in (0, 1):
            raise ValueError(f"word position {i} is {bit!r}, expected 0 or 1")
        value |= bit << i
    return value


def decode(x: int, L: int) -> list[int]:
    """Bit list of x in an L-bit frame, least significant bit first, leading zeros kept."""
    check_in_frame(x, L)
    return [(x >> i) & 1 for i in range(L)]


def matrix_entry(i: int, j: int, L: int) -> int:
    """Bit i of the column index j in the L-row pattern matrix.

    Row i is periodic in j with period 2**(i+1): the square wave of
    2**i zeros followed by 2**i ones.
    """
    check_frame(L)
    if not 0 <= i < L:
        raise IndexError(f"row {i} outside [0, {L})")
    if not 0 <= j < (1 << L):
        raise IndexError(f"column {j} outside [0, 2**{L})")
    return (j >> i) & 1


def extend_interval(s: Sequence[int], L: int) -> list[int]:
    """One interval-doubling step: [s, s + 2**L] as a list concatenation.

    `s` must already span an interval of 2**L entries (L = 0 is allowed,
    covering the seed list [0]).
    """
    check_natural(L)
    if len(s) != 1 << L:
        raise ValueError(f"expected 2**{L} = {1 << L} entries, got {len(s)}")
    shift = 1 << L
    return list(s) + [v + shift for v in s]


def project_automaton(f: Callable[[list[int]], object], L: int) -> list[int]:
    """Project a word transform onto values: x -> encode(f(decode(x, L))).

    `f` may return a bit list (transducer) or a plain int (indicator /
    already-encoded value).
    """
    check_frame(L)
    out = []
    for x in range(1 << L):
        result = f(decode(x, L))
        if isinstance(result, int):
            out.append(check_natural(result))
        else:
            out.append(encode(result))  # type: ignore[arg-type]
    return out


def permutation_transfer_check(perm: Sequence[int], L: int) -> CheckReport:
    """Check the position/exponent transfer identity for a permutation of [0, L).

    Moving symbols by `perm` (new position i holds the symbol from perm[i])
    must equal moving exponents by the inverse permutation:
    sum(a[perm[i]] * 2**i) == sum(a[i] * 2**inv[i]).
    """
    check_frame(L)
    if sorted(perm) != list(range(L)):
        raise ValueError(f"{perm!r} is not a permutation of [0, {L})")
    inverse = [0] * L
    for i, p in enumerate(perm):
        inverse[p] = i
    checked = 0
    for x in range(1 << L):
        word = decode(x, L)
        by_position = encode([word[perm[i]] for i in range(L)])
        by_exponent = sum(word[i] << inverse[i] for i in range(L))
        checked += 1
        if by_position != by_exponent:
            return CheckReport(False, checked, counterexample=(x, by_position, by_exponent))
    return CheckReport(True, checked)


def mirror_sequence_recursion(L: int) -> list[int]:
    """Bit-reversal permutation of [0, 2**L - 1] built by interval doubling.

    Starts from [0] and applies r -> [r, r + 2**(L-i-1)] for i = 0..L-1;
    the result equals the pointwise bit reversal of every index.
    """
    check_frame(L)
    seq = [0]
    for i in range(L):
        shift = 1 << (L - i - 1)
        seq = seq + [v + shift for v in seq]
    return seq
