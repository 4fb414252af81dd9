"""Classic Fibonacci universal code."""

from ghcodes.bits import from_codeword, value
from ghcodes.sequences import fib_sequence

__all__ = ["fib_decode", "fib_encode"]


def fib_encode(n: int) -> str:
    """Greedy Zeckendorf bits for n plus the closing 1.

    Taking the largest term not exceeding the remainder leaves less than
    the next term down, so no two adjacent indices are ever set and the
    remainder always reaches zero.
    """
    if n < 1:
        raise ValueError(f"only positive integers are encodable, got {n}")
    seq = fib_sequence()
    top = seq.largest_leq(n)
    terms = seq.prefix(top)
    word = ["0"] * top
    remainder = n
    for i in range(top - 1, -1, -1):
        if terms[i] <= remainder:
            word[i] = "1"
            remainder -= terms[i]
    return "".join(word) + "1"


def fib_decode(code: str) -> int:
    """Integer a codeword stands for; structure is validated first."""
    return value(fib_sequence(), from_codeword(code))
