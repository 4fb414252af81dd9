import math

import pytest
from hypothesis import given, strategies as st

from ghcodes.fibcodec import fib_decode, fib_encode
from ghcodes.sequences import fib_sequence

GOLDEN = {
    1: "11", 2: "011", 3: "0011", 4: "1011", 5: "00011",
    6: "10011", 7: "01011", 8: "000011", 9: "100011", 10: "010011",
    11: "001011", 12: "101011", 13: "0000011", 14: "1000011", 15: "0100011",
}


def test_golden_codes():
    for n, code in GOLDEN.items():
        assert fib_encode(n) == code
        assert fib_decode(code) == n


def test_decode_examples():
    assert fib_decode("11") == 1
    assert fib_decode("1011") == 4
    assert fib_decode("010011") == 10


def test_encode_rejects_nonpositive():
    for n in (0, -1, -100):
        with pytest.raises(ValueError):
            fib_encode(n)


def test_decode_rejects_malformed():
    with pytest.raises(ValueError):
        fib_decode("10")
    with pytest.raises(ValueError):
        fib_decode("011011")


@given(n=st.integers(min_value=1, max_value=10**9))
def test_round_trip_property(n):
    assert fib_decode(fib_encode(n)) == n


def test_round_trip_and_length_bound_sweep():
    # length(code) <= ceil(log_phi(sqrt(5) * (n + 1))) + 1 across the sweep
    log_phi = math.log((1 + math.sqrt(5)) / 2)
    sqrt5 = math.sqrt(5)
    for n in range(1, 1_000_001):
        code = fib_encode(n)
        assert fib_decode(code) == n
        assert len(code) <= math.ceil(math.log(sqrt5 * (n + 1)) / log_phi) + 1


def test_zeckendorf_uniqueness_by_exhaustion():
    # count every no-two-adjacent index subset summing to each n <= 5000;
    # exactly one representation per n is the uniqueness claim
    seq = fib_sequence()
    limit = 5000
    top = seq.largest_leq(limit)
    counts: dict[int, int] = {}

    def walk(i: int, total: int) -> None:
        if total > limit:
            return
        if i > top:
            if total >= 1:
                counts[total] = counts.get(total, 0) + 1
            return
        walk(i + 1, total)
        walk(i + 2, total + seq.term(i))

    walk(1, 0)
    for n in range(1, limit + 1):
        assert counts.get(n, 0) == 1
