import random
from fractions import Fraction

import pytest

from nccalc import GF, QQ, FpElement, field_from_name, is_prime


def test_is_prime_small_cases():
    assert not is_prime(0)
    assert not is_prime(1)
    assert is_prime(2)
    assert is_prime(3)
    assert not is_prime(4)
    assert is_prime(10007)
    # Carmichael numbers fool Fermat tests but not this one
    assert not is_prime(561)
    assert not is_prime(41041)
    assert is_prime(2**61 - 1)
    assert not is_prime(2**67 - 1)


def test_is_prime_agrees_with_trial_division():
    for m in range(2, 2000):
        by_trial = all(m % d for d in range(2, int(m**0.5) + 1))
        assert is_prime(m) == by_trial, m


def test_gf_requires_prime_modulus():
    with pytest.raises(ValueError):
        GF(4)
    with pytest.raises(ValueError):
        GF(1)
    with pytest.raises(ValueError):
        GF(100)


def test_field_names_round_trip():
    assert field_from_name("Q") is QQ
    assert field_from_name("Fp:10007") is GF(10007)
    assert GF(7).name == "Fp:7"
    assert QQ.name == "Q"
    with pytest.raises(ValueError):
        field_from_name("nope")
    with pytest.raises(ValueError):
        field_from_name("Fp:6")


def test_fp_arithmetic_matches_integers_mod_p():
    rng = random.Random(101)
    p = 10007
    F = GF(p)
    for _ in range(300):
        a, b = rng.randrange(p), rng.randrange(p)
        fa, fb = F.of(a), F.of(b)
        assert (fa + fb).val == (a + b) % p
        assert (fa - fb).val == (a - b) % p
        assert (fa * fb).val == (a * b) % p
        assert (-fa).val == (-a) % p
        if b:
            assert ((fa / fb) * fb) == fa
    e = rng.randrange(1, 40)
    a = rng.randrange(1, p)
    assert (F.of(a) ** e).val == pow(a, e, p)
    assert (F.of(a) ** -1) * F.of(a) == F.of(1)


def test_fp_division_by_zero():
    F = GF(7)
    with pytest.raises(ZeroDivisionError):
        F.of(3) / F.of(0)


def test_fp_coercions():
    F = GF(7)
    a = F.of(3)
    assert a + 1 == F.of(4)
    assert 1 + a == F.of(4)
    assert a * 2 == F.of(6)
    assert a - 10 == F.of(0)
    # 1/2 = 4 mod 7
    assert F.of(Fraction(1, 2)) == F.of(4)
    assert a + Fraction(1, 2) == F.of(0)
    with pytest.raises(ZeroDivisionError):
        F.of(Fraction(1, 7))


def test_fp_canonical_representatives_and_hash():
    F = GF(11)
    a = F.of(-3)
    assert 0 <= a.val < 11
    assert a == F.of(8)
    assert hash(F.of(8)) == hash(F.of(19))
    assert len({F.of(t) for t in range(33)}) == 11


def test_rational_field_of():
    assert QQ.of(3) == Fraction(3)
    assert QQ.of("3/4") == Fraction(3, 4)
    assert QQ.of(Fraction(-1, 2)) == Fraction(-1, 2)


def test_fp_elements_refuse_mixed_moduli():
    with pytest.raises((ValueError, TypeError)):
        GF(7).of(1) + GF(11).of(1)
