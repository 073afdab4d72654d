"""The 3x+1 dynamics in four equivalent formulations.

The classic branched map halves even values and maps odd x to 3x+1. The
accelerated map folds every halving run into one step, x -> 3*odd_part(x)+1,
and has the single fixed point 4. Two further step functions recover the
same accelerated map from mirror-image data: one from the gap between
consecutive fixed-length palindromes, one from the bit length of the
reflected word.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import (
    UndefinedInputError,
    binary_length,
    check_natural,
    is_power_of_two,
    odd_part,
    trailing_zeros,
)
from .reflection import palindrome, reflect
from .report import CheckReport

BRANCHED = "branched"
ACCELERATED = "accelerated"
MIRROR_PALINDROME = "mirror-palindrome"
MIRROR_REFLECTION = "mirror-reflection"
FORMULATIONS = (BRANCHED, ACCELERATED, MIRROR_PALINDROME, MIRROR_REFLECTION)

TERMINATED_FIXED_POINT = "fixed-point"
TERMINATED_POWER_OF_TWO = "power-of-two"
TERMINATED_STEP_LIMIT = "step-limit"
TERMINATED_OVERFLOW = "overflow"


def _check_positive(x: int) -> int:
    check_natural(x)
    if x < 1:
        raise UndefinedInputError("the dynamics are defined on positive integers")
    return x


def step_branched(x: int) -> int:
    """One step of the branched map: x/2 for even x, 3x+1 for odd x."""
    _check_positive(x)
    return 3 * x + 1 if x & 1 else x >> 1


def step_accelerated(x: int) -> int:
    """One step of the single-branch map: 3 * odd_part(x) + 1. Always even."""
    _check_positive(x)
    return 3 * odd_part(x) + 1


def step_mirror_palindrome(x: int) -> int:
    """Accelerated step with the coefficient read off palindrome gaps.

    The gap between the palindromes indexed x and x-1 at half-length
    binary_length(x), divided by 2**(binary_length(x)-1), is exactly
    3 / 2**t(x); the step applies that coefficient and adds 1.
    """
    _check_positive(x)
    lmax = binary_length(x)
    gap = palindrome(x, lmax) - palindrome(x - 1, lmax)
    coefficient = Fraction(gap, 1 << (lmax - 1))
    if coefficient != Fraction(3, 1 << trailing_zeros(x)):
        raise RuntimeError(f"palindrome gap gave coefficient {coefficient} at x={x}")
    result = coefficient * x + 1
    if result.denominator != 1:
        raise RuntimeError(f"non-integer step value {result} at x={x}")
    return result.numerator


def step_mirror_reflection(x: int) -> int:
    """Accelerated step with the shift read off the mirror image's bit length.

    In the minimal frame, binary_length(reflect(x)) falls short of
    binary_length(x) by exactly t(x), so 3x is shifted down by that
    difference before adding 1.
    """
    _check_positive(x)
    lmax = binary_length(x)
    shift = lmax - binary_length(reflect(x, lmax))
    y = 3 * x
    if y & ((1 << shift) - 1):
        raise RuntimeError(f"3x not divisible by 2**{shift} at x={x}")
    return (y >> shift) + 1


STEP_FUNCTIONS = {
    BRANCHED: step_branched,
    ACCELERATED: step_accelerated,
    MIRROR_PALINDROME: step_mirror_palindrome,
    MIRROR_REFLECTION: step_mirror_reflection,
}


def complement_length_step(x: int) -> tuple[Fraction, bool]:
    """Diagnostic step variant driven by the complement's bit length.

    Shifts 3x by binary_length(complement) - binary_length(x) and adds 1,
    evaluated as an exact rational. Returns (value, agrees) where `agrees`
    says whether it coincides with step_accelerated(x); it does for some
    inputs (x=2) and fails for others (x=4), so it is not usable as a step
    function.
    """
    _check_positive(x)
    lmax = binary_length(x)
    lnot = binary_length((1 << lmax) - 1 - x)
    value = Fraction(3 * x, 1 << (lmax - lnot)) + 1
    return value, value == step_accelerated(x)


@dataclass(frozen=True)
class StepCoefficients:
    """Linear form of one accelerated step: next = multiplier * x + offset."""

    multiplier: Fraction
    offset: int


def step_coefficients(x: int) -> StepCoefficients:
    """Exact coefficients of the accelerated step at x.

    The multiplier is 3 / 2**t(x). The offset as a two-branch formula is
    1 + (x mod 2) * (2**-t(x) - 1), which collapses to 1 for every x since
    odd x has t(x) = 0; this is recomputed and checked on each call.
    """
    _check_positive(x)
    t = trailing_zeros(x)
    offset = 1 + (x & 1) * (Fraction(1, 1 << t) - 1)
    if offset != 1:
        raise RuntimeError(f"offset {offset} != 1 at x={x}")
    return StepCoefficients(Fraction(3, 1 << t), 1)


@dataclass
class Trajectory:
    """Orbit of one start value under one formulation.

    `steps` lists (value, trailing_zeros(value)) pairs, the start value
    included as step 0. `terminated` is one of the TERMINATED_* constants;
    the branched orbit stops on reaching 1, the entry to the trivial cycle
    through the powers of two, and reports that as power-of-two
    termination.
    """

    start: int
    formulation: str
    steps: list[tuple[int, int]]
    terminated: str

    @property
    def values(self) -> list[int]:
        return [value for value, _ in self.steps]


def trajectory(
    x0: int,
    formulation: str = ACCELERATED,
    max_steps: int = 10_000,
    value_limit: int | None = None,
) -> Trajectory:
    """Iterate the chosen step function from x0 until a terminal condition.

    The accelerated-family orbits stop at the fixed point 4; hitting any
    other power of two triggers one final resolving step onto 4. The
    branched orbit stops on reaching 1. `max_steps` bounds the number of
    transitions; `value_limit`, if given, terminates the orbit instead of
    producing a value above the limit (reported as overflow).
    """
    _check_positive(x0)
    if formulation not in FORMULATIONS:
        raise ValueError(f"unknown formulation {formulation!r}")
    step = STEP_FUNCTIONS[formulation]
    steps = [(x0, trailing_zeros(x0))]
    value = x0

    def done(reason: str) -> Trajectory:
        return Trajectory(x0, formulation, steps, reason)

    while True:
        if formulation == BRANCHED:
            if value == 1 and len(steps) > 1:
                return done(TERMINATED_POWER_OF_TWO)
        else:
            if value == 4:
                return done(TERMINATED_FIXED_POINT)
        if len(steps) - 1 >= max_steps:
            return done(TERMINATED_STEP_LIMIT)
        if formulation != BRANCHED and is_power_of_two(value):
            value = step(value)
            steps.append((value, trailing_zeros(value)))
            return done(TERMINATED_POWER_OF_TWO)
        nxt = step(value)
        if value_limit is not None and nxt > value_limit:
            return done(TERMINATED_OVERFLOW)
        value = nxt
        steps.append((value, trailing_zeros(value)))


def verify_subsequence(x0: int, horizon: int = 200_000) -> CheckReport:
    """Check that the accelerated orbit is the 3x+1-event subsequence of the branched one.

    Runs the branched orbit of x0 to 1, collecting x0 followed by the value
    produced at each 3x+1 application, and replays the accelerated map
    against that list element by element.
    """
    _check_positive(x0)
    events = [x0]
    v = x0
    n = 0
    while v != 1 and n < horizon:
        if v & 1:
            v = 3 * v + 1
            events.append(v)
        else:
            v >>= 1
        n += 1
    if v != 1:
        return CheckReport(False, n, note=f"branched orbit of {x0} still running after {horizon} steps")
    acc = x0
    for i in range(1, len(events)):
        acc = 3 * (acc >> ((acc & -acc).bit_length() - 1)) + 1
        if acc != events[i]:
            return CheckReport(False, i, counterexample=(x0, i, acc, events[i]))
    # the window always closes on a power of two, so the next step is the fixed point
    tail = acc if acc == 4 else 3 * (acc >> ((acc & -acc).bit_length() - 1)) + 1
    if tail != 4:
        return CheckReport(False, len(events), counterexample=(x0, tail),
                           note="accelerated orbit does not settle on 4 after the window")
    return CheckReport(True, len(events))


def find_fixed_points(range_end: int) -> list[int]:
    """All x in [1, range_end] with step_accelerated(x) == x."""
    _check_positive(range_end)
    found = []
    for x in range(1, range_end + 1):
        if 3 * (x >> ((x & -x).bit_length() - 1)) + 1 == x:
            found.append(x)
    return found
