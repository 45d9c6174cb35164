# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the hot table-scan kernels (see ``pure.py``).

Function contracts, scan orders and outputs match the pure-Python fallback
exactly; the test suite asserts the equivalence.
"""

from cpython.bytes cimport PyBytes_FromStringAndSize
from libc.stdlib cimport free, malloc
from libc.string cimport memcpy

BACKEND = "c"


cdef inline int[::1] _as_view(object table):
    from array import array
    if isinstance(table, array) and table.typecode == "i":
        return table
    return array("i", table)


def pbci_ok(arrow, squig, int n, int unit):
    """True iff the two tables satisfy the pseudo-BCI axioms."""
    cdef int[::1] a = _as_view(arrow)
    cdef int[::1] s = _as_view(squig)
    return _pbci_ok(&a[0], &s[0], n, unit) != 0


cdef int _pbci_ok(int *arrow, int *squig, int n, int unit) nogil:
    cdef int x, y, z, xn, yn, axy, sxy, t
    cdef int un = unit * n
    for x in range(n):
        if arrow[un + x] != x or squig[un + x] != x:
            return 0
    for x in range(n):
        xn = x * n
        for y in range(x + 1, n):
            if arrow[xn + y] == unit and arrow[y * n + x] == unit:
                return 0
    for x in range(n):
        xn = x * n
        for y in range(n):
            axy = arrow[xn + y]
            sxy = squig[xn + y]
            yn = y * n
            for z in range(n):
                t = squig[arrow[yn + z] * n + arrow[xn + z]]
                if squig[axy * n + t] != unit:
                    return 0
                t = arrow[squig[yn + z] * n + squig[xn + z]]
                if arrow[sxy * n + t] != unit:
                    return 0
    return 1


def rpom3_ok(prod, arrow, int n):
    """True iff (x*y) -> z == x -> (y -> z) for all x, y, z."""
    cdef int[::1] p = _as_view(prod)
    cdef int[::1] a = _as_view(arrow)
    cdef int x, y, z, xn, yn, pn
    for x in range(n):
        xn = x * n
        for y in range(n):
            pn = p[xn + y] * n
            yn = y * n
            for z in range(n):
                if a[pn + z] != a[xn + a[yn + z]]:
                    return False
    return True


def residuation_ok(leq, prod, resl, resr, int n):
    """True iff the residuation law holds for all triples."""
    cdef int[::1] le = _as_view(leq)
    cdef int[::1] p = _as_view(prod)
    cdef int[::1] rl = _as_view(resl)
    cdef int[::1] rr = _as_view(resr)
    cdef int x, y, z, xn, yn, pxy, pyx
    for x in range(n):
        xn = x * n
        for y in range(n):
            yn = y * n
            pxy = p[xn + y] * n
            pyx = p[yn + x] * n
            for z in range(n):
                if le[xn + rl[yn + z]] != le[pxy + z]:
                    return False
                if le[xn + rr[yn + z]] != le[pyx + z]:
                    return False
    return True


def arguesian_witness(join, meet, int n):
    """First 6-tuple violating the arguesian identity, else None."""
    cdef int[::1] jv = _as_view(join)
    cdef int[::1] mv = _as_view(meet)
    cdef int *j = &jv[0]
    cdef int *m = &mv[0]
    cdef int x1, y1, x2, y2, x3, y3
    cdef int x1n, y1n, x2n, y2n, x3n
    cdef int p1, jxx12, lhs12, z12, jxx13, jxx23
    cdef int lhs, z13, z23, z, rhs
    for x1 in range(n):
        x1n = x1 * n
        for y1 in range(n):
            y1n = y1 * n
            p1 = j[x1n + y1] * n
            for x2 in range(n):
                x2n = x2 * n
                jxx12 = j[x1n + x2] * n
                for y2 in range(n):
                    y2n = y2 * n
                    lhs12 = m[p1 + j[x2n + y2]] * n
                    z12 = m[jxx12 + j[y1n + y2]]
                    for x3 in range(n):
                        x3n = x3 * n
                        jxx13 = j[x1n + x3] * n
                        jxx23 = j[x2n + x3] * n
                        for y3 in range(n):
                            lhs = m[lhs12 + j[x3n + y3]]
                            z13 = m[jxx13 + j[y1n + y3]]
                            z23 = m[jxx23 + j[y2n + y3]]
                            z = m[z12 * n + j[z13 * n + z23]]
                            rhs = j[m[x1n + j[x2n + z]] * n
                                    + m[y1n + j[y2n + z]]]
                            if m[lhs * n + rhs] != lhs:
                                return (x1, y1, x2, y2, x3, y3)
    return None


cdef int _consistent(int *arrow, int *squig, int n, int unit) nogil:
    cdef int x, y, z, xn, yn, axy, sxy, ax1, ay1, sx1, sy1
    cdef int t, r, lhs, rhs, ayz, axz, syz, sxz, l
    for x in range(n):
        xn = x * n
        for y in range(x + 1, n):
            if arrow[xn + y] == unit and arrow[y * n + x] == unit:
                return 0
    for x in range(n):
        xn = x * n
        ax1 = arrow[xn + unit]
        for y in range(n):
            yn = y * n
            axy = arrow[xn + y]
            sxy = squig[xn + y]
            if axy >= 0 and ax1 >= 0:
                ay1 = arrow[yn + unit]
                if ay1 >= 0:
                    lhs = arrow[axy * n + unit]
                    rhs = squig[ax1 * n + ay1]
                    if lhs >= 0 and rhs >= 0 and lhs != rhs:
                        return 0
            if sxy >= 0:
                sx1 = squig[xn + unit]
                sy1 = squig[yn + unit]
                if sx1 >= 0 and sy1 >= 0:
                    lhs = squig[sxy * n + unit]
                    rhs = arrow[sx1 * n + sy1]
                    if lhs >= 0 and rhs >= 0 and lhs != rhs:
                        return 0
            for z in range(n):
                ayz = arrow[yn + z]
                axz = arrow[xn + z]
                if axy >= 0 and ayz >= 0 and axz >= 0:
                    t = squig[ayz * n + axz]
                    if t >= 0:
                        r = squig[axy * n + t]
                        if r >= 0 and r != unit:
                            return 0
                syz = squig[yn + z]
                sxz = squig[xn + z]
                if sxy >= 0 and syz >= 0 and sxz >= 0:
                    t = arrow[syz * n + sxz]
                    if t >= 0:
                        r = arrow[sxy * n + t]
                        if r >= 0 and r != unit:
                            return 0
                if syz >= 0 and axz >= 0:
                    l = arrow[xn + syz]
                    r = squig[yn + axz]
                    if l >= 0 and r >= 0 and l != r:
                        return 0
    return 1


cdef struct SearchState:
    int n
    int unit
    int ncells
    int *arrow
    int *squig
    int *cellx
    int *celly


cdef int _emit(SearchState *st, list out, long max_raw) except -1:
    cdef int n = st.n
    cdef char *buf = <char *> malloc(2 * n * n)
    cdef int i
    if buf == NULL:
        raise MemoryError()
    for i in range(n * n):
        buf[i] = <char> st.arrow[i]
        buf[n * n + i] = <char> st.squig[i]
    out.append(PyBytes_FromStringAndSize(buf, 2 * n * n))
    free(buf)
    return 0


cdef int _fill(SearchState *st, int k, list out, long max_raw) except -1:
    cdef int n = st.n
    cdef int unit = st.unit
    cdef int x, y, i, v, w
    if max_raw >= 0 and len(out) >= max_raw:
        return 0
    if k == st.ncells:
        if _pbci_ok(st.arrow, st.squig, n, unit):
            _emit(st, out, max_raw)
        return 0
    x = st.cellx[k]
    y = st.celly[k]
    i = x * n + y
    if y == unit:
        for v in range(n):
            st.arrow[i] = v
            st.squig[i] = v
            if _consistent(st.arrow, st.squig, n, unit):
                _fill(st, k + 1, out, max_raw)
    else:
        for v in range(n):
            st.arrow[i] = v
            if v == unit:
                st.squig[i] = unit
                if _consistent(st.arrow, st.squig, n, unit):
                    _fill(st, k + 1, out, max_raw)
            else:
                for w in range(n):
                    if w == unit:
                        continue
                    st.squig[i] = w
                    if _consistent(st.arrow, st.squig, n, unit):
                        _fill(st, k + 1, out, max_raw)
    st.arrow[i] = -1
    st.squig[i] = -1
    return 0


def enumerate_tables(int n, int unit, long max_raw=-1):
    """All table pairs passing the pseudo-BCI axioms; see the pure twin."""
    cdef SearchState st
    cdef int x, y, i, k
    cdef list out = []
    st.n = n
    st.unit = unit
    st.arrow = <int *> malloc(n * n * sizeof(int))
    st.squig = <int *> malloc(n * n * sizeof(int))
    st.cellx = <int *> malloc(n * n * sizeof(int))
    st.celly = <int *> malloc(n * n * sizeof(int))
    if st.arrow == NULL or st.squig == NULL or st.cellx == NULL or st.celly == NULL:
        free(st.arrow); free(st.squig); free(st.cellx); free(st.celly)
        raise MemoryError()
    try:
        for i in range(n * n):
            st.arrow[i] = -1
            st.squig[i] = -1
        for y in range(n):
            st.arrow[unit * n + y] = y
            st.squig[unit * n + y] = y
        for x in range(n):
            st.arrow[x * n + x] = unit
            st.squig[x * n + x] = unit
        k = 0
        for x in range(n):
            if x == unit:
                continue
            for y in range(n):
                if y == x:
                    continue
                st.cellx[k] = x
                st.celly[k] = y
                k += 1
        st.ncells = k
        _fill(&st, 0, out, max_raw)
    finally:
        free(st.arrow)
        free(st.squig)
        free(st.cellx)
        free(st.celly)
    return out
