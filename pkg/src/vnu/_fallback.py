"""Pure-numpy implementations of the compiled kernels.

Selected at import time by vnu.kernels when the Cython extension is not
built.  Same contracts as vnu._core; vectorized with chunking to bound the
temporary (points x width x width) gather arrays.
"""

import numpy as np

_CHUNK = 4096


def kb_gather_2d(fine, ix, iy, wx, wy):
    """out[p] = sum_{a,b} fine[ix[p,a], iy[p,b]] * wx[p,a] * wy[p,b]."""
    npts = ix.shape[0]
    out = np.empty(npts, dtype=np.complex128)
    for lo in range(0, npts, _CHUNK):
        hi = min(lo + _CHUNK, npts)
        block = fine[ix[lo:hi, :, None], iy[lo:hi, None, :]]
        out[lo:hi] = np.einsum("pab,pa,pb->p", block, wx[lo:hi], wy[lo:hi])
    return out
