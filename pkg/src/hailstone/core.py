"""Integer primitives on binary expansions.

Everything is computed on plain Python ints, so results are exact at any
size; there is no bounded representation and therefore no wraparound.
"""

from __future__ import annotations


class UndefinedInputError(ValueError):
    """The operation has no defined value for this input."""


class OutOfFrameError(ValueError):
    """The value does not fit in the requested expansion length."""


def check_natural(x: int) -> int:
    if not isinstance(x, int) or isinstance(x, bool) or x < 0:
        raise UndefinedInputError(f"expected a non-negative integer, got {x!r}")
    return x


def check_frame(L: int) -> int:
    if not isinstance(L, int) or isinstance(L, bool) or L < 1:
        raise ValueError(f"expansion length must be a positive integer, got {L!r}")
    return L


def check_in_frame(x: int, L: int) -> int:
    """Validate 0 <= x < 2**L and return x."""
    check_natural(x)
    check_frame(L)
    if x >> L:
        raise OutOfFrameError(f"{x} does not fit in {L} bits")
    return x


def binary_length(x: int) -> int:
    """Number of binary digits of x: 1 + floor(log2 x) for x >= 1, and 0 for x = 0."""
    return check_natural(x).bit_length()


def trailing_zeros(x: int, frame: int | None = None) -> int:
    """Exponent of the largest power of two dividing x (OEIS A007814).

    x = 0 divides every power of two, so it has no finite value on its own;
    inside an explicit frame the all-zeros word convention applies and the
    frame length is returned.
    """
    check_natural(x)
    if x == 0:
        if frame is None:
            raise UndefinedInputError("trailing_zeros(0) is unbounded; supply a frame")
        return check_frame(frame)
    if frame is not None:
        check_in_frame(x, frame)
    return (x & -x).bit_length() - 1


def odd_part(x: int) -> int:
    """Largest odd divisor of x (OEIS A000265)."""
    check_natural(x)
    if x == 0:
        raise UndefinedInputError("0 has no odd part")
    return x >> trailing_zeros(x)


def complement(x: int, L: int) -> int:
    """Bitwise NOT inside an L-bit frame: 2**L - 1 - x."""
    check_in_frame(x, L)
    return (1 << L) - 1 - x


def digit_sum(x: int) -> int:
    """Number of 1-bits in the binary expansion of x."""
    return check_natural(x).bit_count()


def is_power_of_two(x: int) -> bool:
    return x >= 1 and x & (x - 1) == 0


def tzs_value_histogram(L: int) -> dict[int, int]:
    """Histogram {value: count} of trailing_zeros over x in [1, 2**L - 1].

    Counted by direct scan (exponential in L); the counts obey
    count(v) = 2**(L - v - 1) for 0 <= v <= L - 1.
    """
    check_frame(L)
    counts: dict[int, int] = {}
    for x in range(1, 1 << L):
        v = (x & -x).bit_length() - 1
        counts[v] = counts.get(v, 0) + 1
    return counts
