"""Pure-Python convolution kernel for sparse polynomial multiplication.

This is the reference implementation of the one hot loop in the package.
``tame3._kernel`` is the compiled (Cython) drop-in replacement; ``poly``
selects whichever is importable.  Both operate on *packed* monomials: the
exponent triple (a1, a2, a3) is encoded as the integer
``a1 << 42 | a2 << 21 | a3``, so that monomial multiplication is plain integer
addition (each component stays far below 2**21, enforced by the degree cap in
``poly``).  Coefficients are Python ints — callers clear denominators first.
"""

from __future__ import annotations

from typing import Dict


def mul_packed(a: Dict[int, int], b: Dict[int, int]) -> Dict[int, int]:
    """Convolve two packed-monomial → int-coefficient maps.

    Returns the product map with zero coefficients removed.  The result is
    independent of dict iteration order (integer arithmetic is commutative and
    associative), so the compiled kernel is bit-for-bit interchangeable.
    """
    out: Dict[int, int] = {}
    get = out.get
    if len(a) < len(b):  # outer loop over the smaller operand
        a, b = b, a
    items_b = list(b.items())
    for ea, ca in a.items():
        for eb, cb in items_b:
            e = ea + eb
            out[e] = get(e, 0) + ca * cb
    return {e: c for e, c in out.items() if c}
