"""Shared generators for the test suite.

Everything is driven by an explicit random.Random so failures are
reproducible from the seed alone.
"""

import random

from sl2real import Cycle, Mat2, Word, u_pow, v_pow

IDENT = Mat2(1, 0, 0, 1)


def random_unimodular(rng: random.Random, steps: int = 8) -> Mat2:
    """A random element of SL(2,Z) as a short word in U^e, V^e."""
    m = IDENT
    for _ in range(steps):
        e = rng.choice((-2, -1, 1, 2))
        m = m @ (u_pow(e) if rng.random() < 0.5 else v_pow(e))
    return m


def random_word(rng: random.Random, max_runs: int = 6, max_exp: int = 9) -> Word:
    # even run count so the word is U-first and V-last
    n = 2 * rng.randint(1, max(1, max_runs // 2))
    return Word(tuple(rng.randint(1, max_exp) for _ in range(n)), "U")


def random_hyperbolic(
    rng: random.Random,
    max_runs: int = 6,
    max_exp: int = 9,
    conj_steps: int = 6,
) -> Mat2:
    g = random_unimodular(rng, conj_steps)
    m = g @ random_word(rng, max_runs, max_exp).matrix() @ g.inverse()
    return m if rng.random() < 0.5 else -m


def random_palindrome(rng: random.Random, length: int, max_exp: int) -> list[int]:
    assert length % 2 == 1
    half = [rng.randint(1, max_exp) for _ in range(length // 2)]
    return half + [rng.randint(1, max_exp)] + half[::-1]


def random_odd_bipalindromic_cycle(
    rng: random.Random, max_len: int = 10, max_exp: int = 7
) -> Cycle:
    """A cycle made of two odd-length palindromic blocks."""
    while True:
        first = rng.randrange(1, max_len, 2)
        second = rng.randrange(1, max_len, 2)
        if first + second <= max_len:
            break
    exps = random_palindrome(rng, first, max_exp)
    exps += random_palindrome(rng, second, max_exp)
    return Cycle(tuple(exps))
