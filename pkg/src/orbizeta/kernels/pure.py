"""Pure-Python (numpy) fallback for the brute-force counting kernel.

Same contract as the compiled extension: count solutions in the chunk
where the leading variable is pinned to ``lead``.  The remaining
coordinates are evaluated as flat vectorized table gathers.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np


@lru_cache(maxsize=8)
def _grid(q: int, nrem: int):
    if nrem == 0:
        return np.zeros((0, 1), dtype=np.int64)
    return np.indices((q,) * nrem).reshape(nrem, -1)


def count_chunk(q, n, lead, coeffs, exps, offs, powt, add, mul):
    coords = _grid(q, n - 1)
    npts = coords.shape[1]
    good = np.ones(npts, dtype=bool)
    for e in range(len(offs) - 1):
        acc = np.zeros(npts, dtype=np.int32)
        for t in range(offs[e], offs[e + 1]):
            v = np.full(npts, coeffs[t], dtype=np.int32)
            for j in range(n):
                ex = exps[t, j]
                if ex:
                    xs = powt[ex, lead] if j == 0 else powt[ex][coords[j - 1]]
                    v = mul[v, xs]
            acc = add[acc, v]
        good &= acc == 0
        if not good.any():
            return 0
    return int(good.sum())
