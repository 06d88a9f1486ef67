# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled term-map kernels; mirrors `screwinv._kernel._py` exactly.

Exponents are kept as Python tuples of small ints so the two backends are
interchangeable; the win comes from C-level loop and tuple handling around
the coefficient arithmetic.
"""

from cpython.ref cimport Py_INCREF
from cpython.tuple cimport PyTuple_GET_ITEM, PyTuple_GET_SIZE, PyTuple_New, PyTuple_SET_ITEM


cdef inline tuple _tuple_add(tuple e1, tuple e2):
    cdef Py_ssize_t i, n = PyTuple_GET_SIZE(e1)
    cdef tuple out = PyTuple_New(n)
    cdef object s
    for i in range(n):
        s = (<object>PyTuple_GET_ITEM(e1, i)) + (<object>PyTuple_GET_ITEM(e2, i))
        Py_INCREF(s)
        PyTuple_SET_ITEM(out, i, s)
    return out


def monom_mul(tuple e1, tuple e2):
    """Product of two monomials = componentwise sum of exponent tuples."""
    return _tuple_add(e1, e2)


def terms_add(dict a, dict b):
    """Sum of two term maps."""
    if not a:
        return dict(b)
    if not b:
        return dict(a)
    cdef dict out = dict(a)
    cdef object e, c, s
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


def terms_sub(dict a, dict b):
    """Difference of two term maps."""
    cdef dict out = dict(a)
    cdef object e, c, s
    for e, c in b.items():
        s = out.get(e)
        if s is None:
            out[e] = -c
        else:
            s = s - c
            if s:
                out[e] = s
            else:
                del out[e]
    return out


def terms_scale(dict a, c):
    """Term map scaled by a coefficient (caller guarantees c != 0)."""
    cdef dict out = {}
    cdef object e, v
    for e, v in a.items():
        out[e] = c * v
    return out


def terms_mul(dict a, dict b):
    """Distributive product of two term maps."""
    if not a or not b:
        return {}
    cdef dict out = {}
    cdef tuple ea, eb, e
    cdef object ca, cb, prev
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = _tuple_add(ea, eb)
            prev = out.get(e)
            if prev is None:
                out[e] = ca * cb
            else:
                prev = prev + ca * cb
                if prev:
                    out[e] = prev
                else:
                    del out[e]
    return out
