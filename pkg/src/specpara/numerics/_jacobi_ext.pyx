# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled cyclic Jacobi sweeps (row-major pivot order), operating in place."""
from libc.math cimport sqrt, fabs


cdef double _off_norm(double[:, ::1] a, Py_ssize_t n) noexcept nogil:
    cdef Py_ssize_t p, q
    cdef double s = 0.0
    for p in range(n):
        for q in range(p + 1, n):
            s += a[p, q] * a[p, q]
    return sqrt(2.0 * s)


def jacobi_sweeps(double[:, ::1] a, double tol, int max_sweeps):
    """Diagonalise the symmetric matrix ``a`` in place.

    Returns ``(sweeps, off_norm)`` where ``off_norm`` is the Frobenius norm of
    the off-diagonal part after the last sweep.  Stops once
    ``off_norm <= tol`` or after ``max_sweeps`` sweeps.
    """
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t p, q, k
    cdef double apq, app, aqq, theta, t, c, s, akp, akq
    cdef double off
    cdef int sweep = 0
    cdef double skip = tol / (<double> n * n + 1.0)
    with nogil:
        off = _off_norm(a, n)
        while off > tol and sweep < max_sweeps:
            for p in range(n - 1):
                for q in range(p + 1, n):
                    apq = a[p, q]
                    if fabs(apq) <= skip:
                        continue
                    app = a[p, p]
                    aqq = a[q, q]
                    theta = (aqq - app) / (2.0 * apq)
                    if fabs(theta) > 1e150:
                        t = 0.5 / theta
                    elif theta >= 0.0:
                        t = 1.0 / (theta + sqrt(theta * theta + 1.0))
                    else:
                        t = -1.0 / (-theta + sqrt(theta * theta + 1.0))
                    c = 1.0 / sqrt(t * t + 1.0)
                    s = t * c
                    for k in range(n):
                        if k == p or k == q:
                            continue
                        akp = a[k, p]
                        akq = a[k, q]
                        a[k, p] = c * akp - s * akq
                        a[k, q] = s * akp + c * akq
                        a[p, k] = a[k, p]
                        a[q, k] = a[k, q]
                    a[p, p] = app - t * apq
                    a[q, q] = aqq + t * apq
                    a[p, q] = 0.0
                    a[q, p] = 0.0
            sweep += 1
            off = _off_norm(a, n)
    return sweep, off
