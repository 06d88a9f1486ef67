"""Pure-Python term-map kernels.

A *term map* is a dict sending exponent tuples (one small non-negative int
per variable) to nonzero coefficients.  Coefficients are treated as opaque
field elements: anything supporting `+`, `*` and truthiness (`Fraction`,
`int`).  These four functions are the inner loops of every polynomial
operation in the library; `screwinv._kernel` swaps in the compiled variant
when it is available.

All functions return fresh dicts and never store a zero coefficient.
"""

from __future__ import annotations


def monom_mul(e1, e2):
    """Product of two monomials = componentwise sum of exponent tuples."""
    return tuple(x + y for x, y in zip(e1, e2))


def terms_add(a, b):
    """Sum of two term maps."""
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


def terms_sub(a, b):
    """Difference of two term maps."""
    out = dict(a)
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


def terms_scale(a, c):
    """Term map scaled by a coefficient (caller guarantees c != 0)."""
    return {e: c * v for e, v in a.items()}


def terms_mul(a, b):
    """Distributive product of two term maps."""
    if not a or not b:
        return {}
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
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
