# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Hot inner loops of the nonuniform spectral sampler.

The gather below dominates the cost of evaluating a band-limited field at
arbitrary points (azimuthal ring transforms); everything around it is FFT
work already handled by compiled libraries.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()


def kb_gather_2d(const double complex[:, ::1] fine,
                 const int[:, ::1] ix, const int[:, ::1] iy,
                 const double[:, ::1] wx, const double[:, ::1] wy):
    """out[p] = sum_{a,b} fine[ix[p,a], iy[p,b]] * wx[p,a] * wy[p,b].

    Index arrays are pre-wrapped into [0, Nf); weight arrays hold the
    separable window values.
    """
    cdef Py_ssize_t npts = ix.shape[0]
    cdef Py_ssize_t w = ix.shape[1]
    cdef Py_ssize_t p, a, b
    cdef double complex acc, rowacc
    cdef double wxa
    out = np.empty(npts, dtype=np.complex128)
    cdef double complex[::1] out_v = out
    for p in range(npts):
        acc = 0
        for a in range(w):
            rowacc = 0
            for b in range(w):
                rowacc = rowacc + fine[ix[p, a], iy[p, b]] * wy[p, b]
            wxa = wx[p, a]
            acc = acc + rowacc * wxa
        out_v[p] = acc
    return out
