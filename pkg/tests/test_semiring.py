import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from multautomata import (
    BOOLEAN,
    INTEGER,
    MINUS_INF,
    NATURAL,
    RATIONAL,
    TROPICAL,
    CapabilityError,
    additive_monoid_parameters,
    one_plus_one_equals_one,
    semiring_from_tag,
    zmod,
)

from conftest import ALL_SEMIRINGS


@pytest.mark.parametrize(
    "sr, expected",
    [
        (BOOLEAN, (1, 1)),
        (zmod(5), (0, 5)),
        (RATIONAL, (math.inf, None)),
        (TROPICAL, (1, 1)),
        (NATURAL, (math.inf, None)),
        (zmod(2), (0, 2)),
    ],
    ids=lambda x: getattr(x, "tag", str(x)),
)
def test_additive_monoid_parameters(sr, expected):
    assert additive_monoid_parameters(sr, 10) == expected


def test_additive_monoid_parameters_rejects_bad_bound():
    with pytest.raises(ValueError):
        additive_monoid_parameters(RATIONAL, 0)


@pytest.mark.parametrize("sr, expected", [(BOOLEAN, True), (RATIONAL, False), (TROPICAL, True), (zmod(2), False)])
def test_one_plus_one(sr, expected):
    assert one_plus_one_equals_one(sr) is expected


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(ALL_SEMIRINGS), st.integers(0, 2**32))
def test_semiring_laws(sr, seed):
    rng = random.Random(seed)
    a, b, c = (sr.sample(rng) for _ in range(3))
    eq = sr.eq
    assert eq(sr.add(a, b), sr.add(b, a))
    assert eq(sr.add(sr.add(a, b), c), sr.add(a, sr.add(b, c)))
    assert eq(sr.add(a, sr.zero), a)
    assert eq(sr.mul(sr.mul(a, b), c), sr.mul(a, sr.mul(b, c)))
    assert eq(sr.mul(a, sr.one), a) and eq(sr.mul(sr.one, a), a)
    assert eq(sr.mul(a, sr.add(b, c)), sr.add(sr.mul(a, b), sr.mul(a, c)))
    assert eq(sr.mul(sr.add(b, c), a), sr.add(sr.mul(b, a), sr.mul(c, a)))
    assert eq(sr.mul(a, sr.zero), sr.zero) and eq(sr.mul(sr.zero, a), sr.zero)
    assert eq(sr.mul(a, b), sr.mul(b, a))


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(ALL_SEMIRINGS), st.integers(0, 40), st.integers(0, 40))
def test_nat_embed_is_monoid_morphism(sr, m, n):
    assert sr.eq(sr.nat_embed(0), sr.zero)
    assert sr.eq(sr.nat_embed(n + 1), sr.add(sr.nat_embed(n), sr.one))
    assert sr.eq(sr.nat_embed(m + n), sr.add(sr.nat_embed(m), sr.nat_embed(n)))


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([RATIONAL, zmod(2), zmod(5), zmod(7)]), st.integers(0, 2**32))
def test_field_inverses(sr, seed):
    assert sr.is_field and sr.has_subtraction
    x = sr.sample(random.Random(seed))
    if sr.is_zero(x):
        return
    assert sr.eq(sr.mul(x, sr.inv(x)), sr.one)
    assert sr.eq(sr.add(x, sr.neg(x)), sr.zero)


def test_non_fields_refuse_inverses():
    for sr in (BOOLEAN, NATURAL, INTEGER, TROPICAL, zmod(4)):
        assert not sr.is_field
        with pytest.raises(CapabilityError):
            sr.inv(sr.one)
    with pytest.raises(CapabilityError):
        NATURAL.neg(1)


def test_rationals_stay_normalized():
    x = RATIONAL.add(RATIONAL.parse("2/4"), RATIONAL.parse("1/6"))
    assert (x.numerator, x.denominator) == (2, 3)
    assert RATIONAL.format(x) == "2/3"
    assert RATIONAL.format(Fraction(-6, 3)) == "-2"


def test_residues_in_range():
    z = zmod(5)
    assert z.coerce(-1) == 4
    assert z.parse("1/2") == 3
    assert all(0 <= z.sample(random.Random(s)) < 5 for s in range(50))


def test_tropical_arithmetic():
    t = TROPICAL
    assert t.add(3, MINUS_INF) == 3
    assert t.mul(3, MINUS_INF) is MINUS_INF
    assert t.add(2, 5) == 5 and t.mul(2, 5) == 7
    assert t.parse("-inf") is MINUS_INF and t.format(MINUS_INF) == "-inf"
    with pytest.raises(ValueError):
        t.coerce(-2)


@pytest.mark.parametrize("tag", ["boolean", "natural", "integer", "rational", "zmod:7", "tropical"])
def test_tags_round_trip(tag):
    assert semiring_from_tag(tag).tag == tag


@pytest.mark.parametrize("tag", ["real", "zmod:", "zmod:x", "zmod:1"])
def test_bad_tags(tag):
    with pytest.raises(ValueError):
        semiring_from_tag(tag)


def test_scalar_text_round_trip(semiring):
    rng = random.Random(1)
    for _ in range(30):
        x = semiring.sample(rng)
        assert semiring.eq(semiring.parse(semiring.format(x)), x)
