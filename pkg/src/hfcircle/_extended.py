"""Per-node Taylor data in extended precision (mpmath).

The fundamental polynomials of low-alpha systems have Lebesgue sums of order
1e7 at n = 32, so independent rounding in R'(z_k) and c_pk is amplified by
that factor when the basis is summed.  Computing the O(n^2) per-node data at
34 digits and rounding once removes that source; evaluation stays in double.
"""

from __future__ import annotations

import mpmath as mp

DPS = 34
SIZE = 6


def product_jet(roots, a, skip=None):
    """Taylor coefficients at ``a`` of prod_j (z - roots[j]), j != skip."""
    c = [mp.mpc(1)] + [mp.mpc(0)] * (SIZE - 1)
    for j, r in enumerate(roots):
        if j == skip:
            continue
        d = a - r
        for i in range(SIZE - 1, 0, -1):
            c[i] = c[i] * d + c[i - 1]
        c[0] = c[0] * d
    return c


def to_mp(values):
    return [mp.mpc(complex(v).real, complex(v).imag) for v in values]


def mul(a, b):
    return [sum(a[i] * b[k - i] for i in range(k + 1)) for k in range(SIZE)]


def pows(c, top):
    out = [[mp.mpc(1)] + [mp.mpc(0)] * (SIZE - 1)]
    for _ in range(top):
        out.append(mul(out[-1], c))
    return out
