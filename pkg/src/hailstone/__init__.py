"""Trailing-zeros arithmetic, fixed-length reflections and palindromes,
run-length complexity, and the 3x+1 dynamics built on top of them."""

from .core import (
    OutOfFrameError,
    UndefinedInputError,
    binary_length,
    complement,
    digit_sum,
    odd_part,
    trailing_zeros,
    tzs_value_histogram,
)
from .collatz import (
    FORMULATIONS,
    Trajectory,
    find_fixed_points,
    step_accelerated,
    step_branched,
    step_coefficients,
    step_mirror_palindrome,
    step_mirror_reflection,
    trajectory,
    verify_subsequence,
)
from .reflection import (
    palindrome,
    palindrome_count,
    palindrome_diff,
    palindrome_sequence,
    reflect,
    reflection_table,
)
from .runlength import RunLengthCode, rl_decode, rl_encode, rld, rld_sequence

__version__ = "0.1.0"

__all__ = [
    "FORMULATIONS",
    "OutOfFrameError",
    "RunLengthCode",
    "Trajectory",
    "UndefinedInputError",
    "binary_length",
    "complement",
    "digit_sum",
    "find_fixed_points",
    "odd_part",
    "palindrome",
    "palindrome_count",
    "palindrome_diff",
    "palindrome_sequence",
    "reflect",
    "reflection_table",
    "rl_decode",
    "rl_encode",
    "rld",
    "rld_sequence",
    "step_accelerated",
    "step_branched",
    "step_coefficients",
    "step_mirror_palindrome",
    "step_mirror_reflection",
    "trailing_zeros",
    "trajectory",
    "tzs_value_histogram",
    "verify_subsequence",
]
