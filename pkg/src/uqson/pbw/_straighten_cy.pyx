# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled straightening kernel; mirrors _straighten_py exactly."""

from cpython.bytes cimport PyBytes_AS_STRING, PyBytes_GET_SIZE

KERNEL = "cython"


cpdef dict cadd(dict a, dict b):
    cdef dict out
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


cpdef dict cmul(dict a, dict b):
    cdef dict out = {}
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


cdef inline Py_ssize_t _first_inversion(bytes w, Py_ssize_t start):
    cdef const unsigned char* s = <const unsigned char*> PyBytes_AS_STRING(w)
    cdef Py_ssize_t last = PyBytes_GET_SIZE(w) - 1
    cdef Py_ssize_t i = start if start > 0 else 0
    while i < last:
        if s[i] > s[i + 1]:
            return i
        i += 1
    return -1


def first_inversion(bytes w, Py_ssize_t start):
    return _first_inversion(w, start)


cpdef dict straighten_into(dict out, bytes word, dict coeff, Py_ssize_t hint, dict rules):
    """Accumulate the normal form of coeff*word into out (word dict)."""
    cdef dict pending = {word: (coeff, hint)}
    cdef bytes w, pre, post, nw, repl
    cdef tuple entry, item
    cdef dict c, nc, merged, cur
    cdef Py_ssize_t i, nh
    cdef long key
    cdef const unsigned char* s
    while pending:
        w, entry = pending.popitem()
        c = <dict> entry[0]
        i = _first_inversion(w, <Py_ssize_t> entry[1])
        if i < 0:
            cur = <dict> out.get(w)
            if cur is None:
                out[w] = c
            else:
                cur = cadd(cur, c)
                if cur:
                    out[w] = cur
                else:
                    del out[w]
            continue
        s = <const unsigned char*> PyBytes_AS_STRING(w)
        key = (<long> s[i] << 8) | <long> s[i + 1]
        pre = w[:i]
        post = w[i + 2:]
        nh = i - 1 if i > 0 else 0
        for item in <tuple> rules[key]:
            repl = <bytes> item[0]
            nw = pre + repl + post
            nc = cmul(c, <dict> item[1])
            ent = pending.get(nw)
            if ent is None:
                pending[nw] = (nc, nh)
            else:
                merged = cadd(<dict> (<tuple> ent)[0], nc)
                h2 = (<tuple> ent)[1]
                if <Py_ssize_t> h2 > nh:
                    h2 = nh
                if merged:
                    pending[nw] = (merged, h2)
                else:
                    del pending[nw]
    return out


cpdef dict mul_terms(dict ta, dict tb, dict rules):
    """Normal form of the product of two term maps {word: coeff}."""
    cdef dict out = {}
    cdef bytes wa, wb
    cdef Py_ssize_t la, hint
    for wa, ca in ta.items():
        la = PyBytes_GET_SIZE(wa)
        hint = la - 1 if la else 0
        for wb, cb in tb.items():
            straighten_into(out, wa + wb, cmul(<dict> ca, <dict> cb), hint, rules)
    return out
