"""Pure-Python straightening kernel.

Words are bytes of generator codes, coefficients are {doubled exponent:
rational} dicts. The compiled kernel in _straighten_cy.pyx mirrors this
module exactly; both are selected through _kernel.
"""

KERNEL = "python"


def cadd(a, b):
    if not a:
        return dict(b)
    if not b:
        return dict(a)
    out = dict(a)
    for e, c in b.items():
        s = out.get(e)
        if s is None:
            out[e] = c
        else:
            s = s + c
            if s:
                out[e] = s
            else:
                del out[e]
    return out


def cmul(a, b):
    out = {}
    if not a or not b:
        return out
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = ea + eb
            s = out.get(e)
            s = ca * cb if s is None else s + ca * cb
            if s:
                out[e] = s
            else:
                del out[e]
    return out


def first_inversion(w, start):
    i = start if start > 0 else 0
    last = len(w) - 1
    while i < last:
        if w[i] > w[i + 1]:
            return i
        i += 1
    return -1


def straighten_into(out, word, coeff, hint, rules):
    """Accumulate the normal form of coeff*word into out (word dict)."""
    pending = {word: (coeff, hint)}
    while pending:
        w, (c, h) = pending.popitem()
        i = first_inversion(w, h)
        if i < 0:
            cur = out.get(w)
            if cur is None:
                out[w] = c
            else:
                cur = cadd(cur, c)
                if cur:
                    out[w] = cur
                else:
                    del out[w]
            continue
        pre = w[:i]
        post = w[i + 2 :]
        nh = i - 1 if i > 0 else 0
        for repl, rc in rules[(w[i] << 8) | w[i + 1]]:
            nw = pre + repl + post
            nc = cmul(c, rc)
            ent = pending.get(nw)
            if ent is None:
                pending[nw] = (nc, nh)
            else:
                merged = cadd(ent[0], nc)
                h2 = ent[1] if ent[1] < nh else nh
                if merged:
                    pending[nw] = (merged, h2)
                else:
                    del pending[nw]
    return out


def mul_terms(ta, tb, rules):
    """Normal form of the product of two term maps {word: coeff}."""
    out = {}
    for wa, ca in ta.items():
        la = len(wa)
        hint = la - 1 if la else 0
        for wb, cb in tb.items():
            straighten_into(out, wa + wb, cmul(ca, cb), hint, rules)
    return out
