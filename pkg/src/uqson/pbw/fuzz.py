"""Seeded associativity fuzzing of the straightening engine.

Confluence of the rewrite system is equivalent to well-definedness of the
normal-form product; random triples a, b, c with (a*b)*c != a*(b*c) would
witness a broken rule table.
"""

from __future__ import annotations

import random

from ..coeffring import LaurentPoly
from ._rules import PLUS, check_rank, gen_pairs
from .algebra import AlgebraElement

# coefficient pool: +-1 and +-q^(+-1/2), as raw doubled-exponent dicts
_COEFFS = ({0: 1}, {0: -1}, {1: 1}, {1: -1}, {-1: 1}, {-1: -1})


def random_monomial(rng, n, degree, variant=PLUS):
    """Product of up to `degree` random generators (each used at most twice),
    in random order, scaled by a random unit coefficient."""
    pairs = gen_pairs(n)
    length = rng.randint(1, degree)
    word = []
    counts = {}
    while len(word) < length:
        c = rng.randrange(len(pairs))
        if counts.get(c, 0) >= 2:
            continue
        counts[c] = counts.get(c, 0) + 1
        word.append(pairs[c])
    coeff = LaurentPoly.from_exp2(rng.choice(_COEFFS))
    return AlgebraElement.from_word(n, word, variant) * coeff


def associativity_fuzz(n, degree, trials, seed, variant=PLUS):
    """Run `trials` random checks of (a*b)*c == a*(b*c); exact comparison."""
    check_rank(n)
    if degree < 1:
        raise ValueError("degree must be >= 1")
    rng = random.Random(seed)
    failures = []
    for trial in range(trials):
        a = random_monomial(rng, n, degree, variant)
        b = random_monomial(rng, n, degree, variant)
        c = random_monomial(rng, n, degree, variant)
        if (a * b) * c != a * (b * c):
            failures.append({"trial": trial, "a": str(a), "b": str(b), "c": str(c)})
    return {
        "n": n,
        "degree": degree,
        "trials": trials,
        "seed": seed,
        "variant": variant,
        "failures": failures,
        "pass": not failures,
    }
