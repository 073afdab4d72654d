"""Bit-order reversal on fixed-length words, and the palindromes it fixes.

Reversal is only a bijection when the expansion length is pinned: the
leading zeros of a word become trailing zeros of its mirror image. All
operations here therefore take the frame length explicitly.
"""

from __future__ import annotations

from .core import (
    binary_length,
    check_frame,
    check_in_frame,
    trailing_zeros,
)
from .report import CheckReport

# Full tables above this get large (list of 2**L ints); pointwise reflect
# stays available at any length.
TABLE_MAX_LENGTH = 24


def reflect(x: int, L: int) -> int:
    """Value of the length-L word of x with its bit order reversed.

    An involution, hence a permutation of [0, 2**L - 1].
    """
    check_in_frame(x, L)
    r = 0
    for _ in range(L):
        r = (r << 1) | (x & 1)
        x >>= 1
    return r


def reflection_table(L: int) -> list[int]:
    """The full permutation [reflect(0, L), ..., reflect(2**L - 1, L)]."""
    check_frame(L)
    if L > TABLE_MAX_LENGTH:
        raise ValueError(f"table capped at L <= {TABLE_MAX_LENGTH}; use reflect() pointwise")
    return [reflect(x, L) for x in range(1 << L)]


def reflect_sequence_scaling(L: int) -> list[int]:
    """Reflection table built by the doubling recursion instead of pointwise.

    Appending a 0 (resp. 1) above every word of the previous frame shifts
    each reflected value by one bit: table(L+1) = [2*t, 2*t + 1] applied to
    the previous table t. Equals reflection_table(L).
    """
    check_frame(L)
    if L > TABLE_MAX_LENGTH:
        raise ValueError(f"table capped at L <= {TABLE_MAX_LENGTH}")
    table = [0]
    for _ in range(L):
        table = [2 * v for v in table] + [2 * v + 1 for v in table]
    return table


def concat_reflect(x: int, y: int, L: int) -> int:
    """Reflect the concatenation x + y * 2**L inside a 2L-bit frame.

    Reversal is an antihomomorphism for concatenation: the result must
    equal reflect(y, L) + reflect(x, L) * 2**L, which is verified on every
    call.
    """
    check_in_frame(x, L)
    check_in_frame(y, L)
    whole = reflect(x + (y << L), 2 * L)
    parts = reflect(y, L) + (reflect(x, L) << L)
    if whole != parts:
        raise RuntimeError(
            f"antihomomorphism identity violated at x={x}, y={y}, L={L}: {whole} != {parts}"
        )
    return whole


def mirror_length_identity(x: int, L: int) -> tuple[int, int]:
    """The two mirror length sums for x in an L-bit frame.

    Returns (binary_length(x) + t(reflect(x)), binary_length(reflect(x)) + t(x));
    both equal L for every x < 2**L, with the frame conventions at 0.
    """
    check_in_frame(x, L)
    r = reflect(x, L)
    return (
        binary_length(x) + trailing_zeros(r, frame=L),
        binary_length(r) + trailing_zeros(x, frame=L),
    )


def sorted_tzs_property(L: int) -> CheckReport:
    """Check that reflecting every index sorts the trailing-zeros sequence.

    Over [0, 2**L - 1] (with t(0) = L), the sequence n -> t(reflect(n))
    must equal the descending sort of n -> t(n).
    """
    check_frame(L)
    direct = [trailing_zeros(n, frame=L) for n in range(1 << L)]
    reflected = [trailing_zeros(reflect(n, L), frame=L) for n in range(1 << L)]
    expected = sorted(direct, reverse=True)
    if reflected == expected:
        return CheckReport(True, 1 << L)
    bad = next(i for i in range(1 << L) if reflected[i] != expected[i])
    return CheckReport(False, 1 << L, counterexample=(L, bad, reflected[bad], expected[bad]))


def palindrome(w: int, k: int) -> int:
    """The 2k-bit palindrome indexed by w < 2**k: reflect(w, k) + w * 2**k.

    The map w -> palindrome(w, k) is strictly increasing and enumerates all
    fixed points of reflect(., 2k) in order.
    """
    check_in_frame(w, k)
    return reflect(w, k) + (w << k)


def palindrome_sequence(k: int) -> list[int]:
    """All 2**k even-length palindromes of frame 2k, in increasing order."""
    check_frame(k)
    if k > TABLE_MAX_LENGTH:
        raise ValueError(f"sequence capped at k <= {TABLE_MAX_LENGTH}")
    return [palindrome(w, k) for w in range(1 << k)]


def palindrome_count(L: int) -> int:
    """Number of fixed points of reflect(., L) for even L, by direct scan.

    Equals 2**(L/2). Odd frames keep a free middle bit and are not handled.
    """
    check_frame(L)
    if L % 2:
        raise ValueError("odd expansion lengths are not supported")
    return sum(1 for x in range(1 << L) if reflect(x, L) == x)


def palindrome_diff(w: int, k: int) -> int:
    """Gap palindrome(w, k) - palindrome(w - 1, k), for w >= 1.

    Always equals 3 * 2**(k - t(w) - 1): consecutive palindromes differ by
    a pair of mirrored bit flips whose joint weight is three times a power
    of two.
    """
    check_in_frame(w, k)
    if w == 0:
        raise ValueError("w = 0 has no predecessor")
    return palindrome(w, k) - palindrome(w - 1, k)


def reflect_diff(w: int, k: int) -> int:
    """Signed gap reflect(w, k) - reflect(w - 1, k), for w >= 1.

    Always equals 3 * 2**(k - t(w) - 1) - 2**k.
    """
    check_in_frame(w, k)
    if w == 0:
        raise ValueError("w = 0 has no predecessor")
    return reflect(w, k) - reflect(w - 1, k)


def palindrome_partial_sum(i: int, k: int) -> int:
    """Rebuild palindrome(i, k) as the cumulative sum of its gaps.

    Sums 3 * 2**(k - t(j) - 1) over j = 1..i; every summand is an exact
    integer because t(j) <= k - 1 inside the frame.
    """
    check_in_frame(i, k)
    total = 0
    for j in range(1, i + 1):
        total += 3 << (k - trailing_zeros(j) - 1)
    return total


def reflect_partial_sum(i: int, k: int) -> int:
    """Rebuild reflect(i, k) as the cumulative sum of its signed gaps.

    Sums 3 * 2**(k - t(j) - 1) - 2**k over j = 1..i. Note the frame
    correction 2**k is applied per term, not once.
    """
    check_in_frame(i, k)
    total = 0
    for j in range(1, i + 1):
        total += (3 << (k - trailing_zeros(j) - 1)) - (1 << k)
    return total
