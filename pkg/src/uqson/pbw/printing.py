"""Canonical text form for algebra elements.

Monomials are listed in PBW order (bytes-lexicographic on code words, so the
scalar term comes first); each coefficient prints with ascending q-exponents.
The output is stable byte-for-byte and round-trips through the expression
parser.
"""

from __future__ import annotations

from ..coeffring import format_laurent, format_qpower, format_rational
from ._rules import MINUS, gen_pairs


def generator_name(k, l, variant):
    """I<k><l> for neighbors and plus-variant elements, Im<k><l> for minus."""
    if variant == MINUS and k > l + 1:
        return f"Im{k}{l}"
    return f"I{k}{l}"


def _term_piece(items, mono):
    """(negative, body) for one term; sign is pulled out of single-term coeffs."""
    if not mono:
        if len(items) == 1:
            e2, c = items[0]
            return c < 0, format_laurent(((e2, abs(c)),))
        return False, "(" + format_laurent(items) + ")"
    if len(items) == 1:
        e2, c = items[0]
        neg = c < 0
        mag = abs(c)
        factors = []
        if e2 == 0:
            if mag != 1:
                factors.append(format_rational(mag))
        else:
            if mag != 1:
                factors.append(format_rational(mag))
            factors.append(format_qpower(e2))
        factors.append(mono)
        return neg, "*".join(factors)
    return False, "(" + format_laurent(items) + ")*" + mono


def element_to_str(el):
    if not el._terms:
        return "0"
    pairs = gen_pairs(el.n)
    pieces = []
    for word in sorted(el._terms):
        items = tuple(sorted(el._terms[word].items()))
        mono = "*".join(
            generator_name(*pairs[c], el.variant) for c in word
        )
        pieces.append(_term_piece(items, mono))
    out = ("-" if pieces[0][0] else "") + pieces[0][1]
    for neg, body in pieces[1:]:
        out += (" - " if neg else " + ") + body
    return out
