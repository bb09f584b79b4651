# cython: language_level=3
"""Compiled convolution kernel for sparse polynomial multiplication.

Drop-in replacement for ``tame3._kernel_py`` (same packed-monomial contract,
same results); only the loop overhead differs.  Coefficients stay arbitrary-
precision Python ints — exactness is non-negotiable, the speedup comes from
C-level iteration and dict access.
"""


def mul_packed(dict a, dict b):
    """Convolve two packed-monomial → int-coefficient maps."""
    cdef dict out = {}
    cdef list items_b
    cdef tuple pair
    cdef object ea, ca, eb, cb, e, prev
    if len(a) < len(b):
        a, b = b, a
    items_b = list(b.items())
    for ea, ca in a.items():
        for pair in items_b:
            eb = pair[0]
            cb = pair[1]
            e = ea + eb
            prev = out.get(e)
            if prev is None:
                out[e] = ca * cb
            else:
                out[e] = prev + ca * cb
    return {e: c for e, c in out.items() if c}
