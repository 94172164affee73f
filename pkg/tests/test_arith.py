import pytest

from neumaier import arith


def test_is_prime_known_values():
    primes = [2, 3, 5, 13, 61, 139, 421, 977, 1021, 817519]
    for p in primes:
        assert arith.is_prime(p)
    composites = [4, 9, 15, 247, 561, 1105, 9763, 2 ** 31 + 1]
    for n in composites:
        assert not arith.is_prime(n)


def test_primality_rejects_below_two():
    with pytest.raises(ValueError):
        arith.is_prime(1)
    with pytest.raises(ValueError):
        arith.is_prime(0)


def test_factorize_examples():
    assert arith.factorize(247) == [13, 19]
    assert arith.factorize(817519) == [817519]
    assert arith.factorize(9763) == [13, 751]
    assert arith.factorize(2 ** 40) == [2] * 40
    # semiprime with two large factors exercises the rho path
    n = 1000003 * 998117
    assert arith.factorize(n) == [998117, 1000003]


def test_factorize_is_deterministic():
    n = 600851475143
    assert arith.factorize(n) == arith.factorize(n) == [71, 839, 1471, 6857]


def test_factorize_range_errors():
    with pytest.raises(ValueError):
        arith.factorize(1)
    with pytest.raises(ValueError):
        arith.factorize(2 ** 63)


def test_crt_pair():
    assert arith.crt_pair(2, 421, 2, 5) == 2
    assert arith.crt_pair(15, 817519, 69, 247) == 22890547
    with pytest.raises(ValueError):
        arith.crt_pair(1, 6, 2, 9)


def test_orders_and_generators():
    assert arith.multiplicative_order(2, 65) == 12
    assert arith.multiplicative_order(17, 21) == 6
    assert arith.smallest_generator(13) == 2
    assert arith.smallest_generator(7) == 3
    assert arith.is_generator(2, 13)
    assert not arith.is_generator(3, 13)
    assert arith.nu2(976) == 4


def test_validate_cayley_triple_names_the_condition():
    arith.validate_cayley_triple(13, 5, 2)  # fine
    with pytest.raises(ValueError, match="not an odd prime"):
        arith.validate_cayley_triple(15, 7, 2)
    with pytest.raises(ValueError, match="not a unit"):
        arith.validate_cayley_triple(13, 5, 26)
    with pytest.raises(ValueError, match="does not generate"):
        arith.validate_cayley_triple(13, 5, 3)
    with pytest.raises(ValueError, match="not -1"):
        arith.validate_cayley_triple(13, 5, 6)
