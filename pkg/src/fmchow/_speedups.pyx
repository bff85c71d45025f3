# cython: language_level=3, boundscheck=False, wraparound=False
"""Sparse exact row-echelon kernel, compiled lane.

Same representation and semantics as fmchow._elim_py (keep in sync): rows
are parallel lists of ascending column indices and nonzero arbitrary-
precision integer coefficients.  Cython removes the interpreter overhead
of the merge loops; coefficient arithmetic stays on Python integers, so
results are bit-identical to the pure lane.
"""

from math import gcd


cdef _content(list coeffs):
    cdef Py_ssize_t i, n = len(coeffs)
    g = 0
    for i in range(n):
        g = gcd(g, coeffs[i])
        if g == 1:
            return 1
    return g


cdef tuple _combine(a, list cols1, list coeffs1, b, list cols2, list coeffs2):
    """a*row1 + b*row2 as a sorted merge, zero coefficients dropped."""
    cdef list out_cols = []
    cdef list out_coeffs = []
    cdef Py_ssize_t i = 0, j = 0
    cdef Py_ssize_t n1 = len(cols1), n2 = len(cols2)
    cdef long c1, c2
    while i < n1 and j < n2:
        c1 = cols1[i]
        c2 = cols2[j]
        if c1 < c2:
            out_cols.append(c1)
            out_coeffs.append(a * coeffs1[i])
            i += 1
        elif c1 > c2:
            out_cols.append(c2)
            out_coeffs.append(b * coeffs2[j])
            j += 1
        else:
            v = a * coeffs1[i] + b * coeffs2[j]
            if v:
                out_cols.append(c1)
                out_coeffs.append(v)
            i += 1
            j += 1
    while i < n1:
        out_cols.append(cols1[i])
        out_coeffs.append(a * coeffs1[i])
        i += 1
    while j < n2:
        out_cols.append(cols2[j])
        out_coeffs.append(b * coeffs2[j])
        j += 1
    return out_cols, out_coeffs


cdef class Echelon:
    """Incrementally maintained row-echelon span of integer rows."""

    cdef public Py_ssize_t ncols
    cdef public Py_ssize_t rank
    cdef dict _pivots

    def __init__(self, ncols):
        self.ncols = ncols
        self.rank = 0
        self._pivots = {}

    cpdef tuple reduce(self, list cols, list coeffs):
        """Residue of the row modulo the current span (content-reduced)."""
        cdef dict pivots = self._pivots
        cdef tuple piv
        cdef list pcols, pcoeffs
        cdef Py_ssize_t k, n
        while cols:
            piv = pivots.get(cols[0])
            if piv is None:
                break
            pcols = <list> piv[0]
            pcoeffs = <list> piv[1]
            cols, coeffs = _combine(pcoeffs[0], cols, coeffs, -coeffs[0], pcols, pcoeffs)
            g = _content(coeffs)
            if g > 1:
                n = len(coeffs)
                for k in range(n):
                    coeffs[k] = coeffs[k] // g
        return cols, coeffs

    cpdef bint insert(self, cols, coeffs):
        """Add a row to the span; True iff it increased the rank."""
        cdef list rcols, rcoeffs
        cdef Py_ssize_t k, n
        rcols, rcoeffs = self.reduce(list(cols), list(coeffs))
        if not rcols:
            return False
        g = _content(rcoeffs)
        if rcoeffs[0] < 0:
            g = -g
        if g != 0 and g != 1:
            n = len(rcoeffs)
            for k in range(n):
                rcoeffs[k] = rcoeffs[k] // g
        self._pivots[rcols[0]] = (rcols, rcoeffs)
        self.rank += 1
        return True

    cpdef bint contains(self, cols, coeffs):
        """True iff the row lies in the current rational span."""
        cdef list rcols, rcoeffs
        rcols, rcoeffs = self.reduce(list(cols), list(coeffs))
        return not rcols
