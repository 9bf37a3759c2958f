"""Trace trichotomy and canonical forms."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from sl2real import (
    CENTRAL,
    ELLIPTIC,
    HYPERBOLIC,
    IDENTITY,
    NEG_IDENTITY,
    PARABOLIC,
    ROT_2PI3,
    ROT_PI,
    U,
    Cycle,
    Mat2,
    NotElliptic,
    NotParabolic,
    NotSL2,
    classify,
    elliptic_canonicalize,
    parabolic_canonicalize,
    parabolic_signed_shift,
    v_pow,
)

from conftest import random_unimodular

ELLIPTIC_REPS = (ROT_PI, ROT_2PI3, -ROT_2PI3)


def test_classify_central():
    c = classify(IDENTITY)
    assert c.kind == CENTRAL and c.sign == 1
    c = classify(NEG_IDENTITY)
    assert c.kind == CENTRAL and c.sign == -1
    assert c.to_json_obj() == {"kind": "central", "sign": -1}


def test_classify_elliptic():
    c = classify(ROT_PI)
    assert c.kind == ELLIPTIC and c.trace == 0
    assert classify(ROT_2PI3).trace == 1
    assert classify(-ROT_2PI3).trace == -1
    assert c.to_json_obj() == {"kind": "elliptic", "trace": 0}


def test_classify_parabolic():
    c = classify(Mat2(1, 0, 5, 1))
    assert c.kind == PARABOLIC and c.sign == 1 and c.shift == 5
    c = classify(Mat2(-1, 0, -2, -1))
    assert c.kind == PARABOLIC and c.sign == -1 and c.shift == 2
    c = classify(U)
    assert c.shift == 1
    assert classify(Mat2(1, 0, 5, 1)).to_json_obj() == {
        "kind": "parabolic",
        "sign": 1,
        "shift": "5",
    }


def test_classify_hyperbolic():
    c = classify(Mat2(2, 1, 1, 1))
    assert c.kind == HYPERBOLIC and c.sign == 1
    assert c.cycle == Cycle((1, 1))
    c = classify(Mat2(-12, -5, -7, -3))
    assert c.sign == -1 and c.cycle == Cycle((1, 1, 2, 2))
    assert classify(Mat2(2, 1, 1, 1)).to_json_obj() == {
        "kind": "hyperbolic",
        "sign": 1,
        "cycle": ["1", "1"],
    }


def test_classify_rejects_non_sl2():
    with pytest.raises(NotSL2):
        classify(Mat2(1, 0, 0, -1))
    with pytest.raises(NotSL2):
        classify(Mat2(2, 0, 0, 2))


# ------------------------------------------------------------ elliptic


def test_elliptic_canonicalize_pinned():
    form = elliptic_canonicalize(Mat2(0, -1, 1, 0))
    assert form.representative == ROT_PI
    assert form.conjugator == Mat2(1, 0, 0, -1)
    assert form.sign == 1
    assert form.reconstruct() == Mat2(0, -1, 1, 0)


def test_elliptic_canonicalize_fixes_representatives():
    for rep in ELLIPTIC_REPS:
        form = elliptic_canonicalize(rep)
        assert form.representative == rep
        assert form.reconstruct() == rep


def test_elliptic_canonicalize_errors():
    with pytest.raises(NotElliptic):
        elliptic_canonicalize(U)
    with pytest.raises(NotElliptic):
        elliptic_canonicalize(IDENTITY)
    with pytest.raises(NotSL2):
        elliptic_canonicalize(Mat2(0, 1, 1, 0))


@settings(max_examples=150, deadline=None)
@given(st.integers(min_value=0, max_value=10**6), st.integers(min_value=0, max_value=2))
def test_elliptic_canonicalize_random_conjugates(seed, which):
    rng = random.Random(seed)
    g = random_unimodular(rng, steps=10)
    m = g @ ELLIPTIC_REPS[which] @ g.inverse()
    form = elliptic_canonicalize(m)
    assert form.representative == ELLIPTIC_REPS[which]
    assert form.conjugator.det in (1, -1)
    assert form.reconstruct() == m


def test_elliptic_orders():
    rng = random.Random(3)
    for _ in range(40):
        g = random_unimodular(rng)
        m = g @ rng.choice(ELLIPTIC_REPS) @ g.inverse()
        if m.trace == 0:
            assert m @ m == NEG_IDENTITY
            assert m**4 == IDENTITY
        else:
            assert m**6 == IDENTITY
            assert m**3 in (IDENTITY, NEG_IDENTITY)


# ----------------------------------------------------------- parabolic


def test_parabolic_canonicalize_pinned():
    form = parabolic_canonicalize(Mat2(1, 0, 3, 1))
    assert form.representative == v_pow(3)
    assert form.conjugator == IDENTITY
    assert form.sign == 1

    form = parabolic_canonicalize(Mat2(-1, 0, -2, -1))
    assert form.representative == v_pow(2)
    assert form.sign == -1
    assert form.reconstruct() == Mat2(-1, 0, -2, -1)

    form = parabolic_canonicalize(U)
    assert form.representative == v_pow(1)
    assert form.conjugator == Mat2(0, -1, -1, 0).inverse()
    assert form.reconstruct() == U


def test_parabolic_signed_shift_pinned():
    assert parabolic_signed_shift(Mat2(3, -1, 4, -1)) == (1, 1)
    assert parabolic_signed_shift(Mat2(1, 0, 5, 1)) == (5, 1)
    assert parabolic_signed_shift(Mat2(1, -3, 0, 1)) == (3, 1)
    assert parabolic_signed_shift(Mat2(-1, 0, -2, -1)) == (2, -1)


def test_parabolic_errors():
    with pytest.raises(NotParabolic):
        parabolic_canonicalize(ROT_PI)
    with pytest.raises(NotParabolic):
        parabolic_canonicalize(IDENTITY)
    with pytest.raises(NotSL2):
        parabolic_signed_shift(Mat2(1, 1, 1, 1))


@settings(max_examples=150, deadline=None)
@given(
    st.integers(min_value=0, max_value=10**6),
    st.integers(min_value=1, max_value=40),
    st.sampled_from((1, -1)),
)
def test_parabolic_canonicalize_random_conjugates(seed, n, sign):
    rng = random.Random(seed)
    g = random_unimodular(rng, steps=10)
    base = v_pow(n) if sign == 1 else -v_pow(n)
    m = g @ base @ g.inverse()
    form = parabolic_canonicalize(m)
    assert form.representative == v_pow(n)
    assert form.sign == sign
    assert form.reconstruct() == m
    assert parabolic_signed_shift(m) == (n, sign)


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=0, max_value=10**6), st.integers(min_value=1, max_value=20))
def test_parabolic_shift_of_inverse_flips_sign(seed, n):
    # V^n and V^-n are GL- but not SL-conjugate: the signed shift
    # separates them, the absolute shift does not
    rng = random.Random(seed)
    g = random_unimodular(rng)
    m = g @ v_pow(n) @ g.inverse()
    assert parabolic_signed_shift(m) == (n, 1)
    assert parabolic_signed_shift(m.inverse()) == (-n, 1)
    assert classify(m).shift == classify(m.inverse()).shift == n
