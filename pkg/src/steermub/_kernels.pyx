# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled inner loops for the optimisation objectives.

Signatures and semantics match ``_kernels_py`` exactly; states enter as
Bloch data (a, b, T) with T[i, j] = Tr(rho s_i x s_j).
"""

from libc.math cimport sqrt, log2, cos, sin, fabs

cdef double P_TINY = 1e-12


cdef inline double _bloch_entropy(double r) noexcept nogil:
    cdef double p, q
    if r >= 1.0:
        return 0.0
    p = 0.5 * (1.0 + r)
    q = 0.5 * (1.0 - r)
    return -(p * log2(p) + q * log2(q))


cdef double _holevo(const double[::1] a, const double[::1] b, const double[:, ::1] T,
                    double n0, double n1, double n2) noexcept nogil:
    cdef double na = n0 * a[0] + n1 * a[1] + n2 * a[2]
    cdef double t0 = n0 * T[0, 0] + n1 * T[1, 0] + n2 * T[2, 0]
    cdef double t1 = n0 * T[0, 1] + n1 * T[1, 1] + n2 * T[2, 1]
    cdef double t2 = n0 * T[0, 2] + n1 * T[1, 2] + n2 * T[2, 2]
    cdef double rb = sqrt(b[0] * b[0] + b[1] * b[1] + b[2] * b[2])
    cdef double chi = _bloch_entropy(rb)
    cdef double p, x, y, z, r
    cdef int s
    for s in range(2):
        if s == 0:
            p = 0.5 * (1.0 + na)
            x = b[0] + t0; y = b[1] + t1; z = b[2] + t2
        else:
            p = 0.5 * (1.0 - na)
            x = b[0] - t0; y = b[1] - t1; z = b[2] - t2
        if p < P_TINY:
            continue
        r = sqrt(x * x + y * y + z * z) / (2.0 * p)
        chi -= p * _bloch_entropy(r)
    if chi < 0.0:
        chi = 0.0
    return chi


cdef inline void _frame(double al, double be, double ga, double* R) noexcept nogil:
    # columns of Rz(al) Ry(be) Rz(ga), stored column-major: R[3*k + i]
    cdef double ca = cos(al), sa = sin(al), cb = cos(be), sb = sin(be)
    cdef double cg = cos(ga), sg = sin(ga)
    R[0] = ca * cb * cg - sa * sg
    R[1] = sa * cb * cg + ca * sg
    R[2] = -sb * cg
    R[3] = -ca * cb * sg - sa * cg
    R[4] = -sa * cb * sg + ca * cg
    R[5] = sb * sg
    R[6] = ca * sb
    R[7] = sa * sb
    R[8] = cb


def bloch_entropy(double r):
    """Entropy (bits) of a qubit whose Bloch vector has length r."""
    return _bloch_entropy(r)


def holevo_bloch(const double[::1] a, const double[::1] b, const double[:, ::1] T,
                 const double[::1] n):
    return _holevo(a, b, T, n[0], n[1], n[2])


def sphere_holevo(const double[::1] x, const double[::1] a, const double[::1] b,
                  const double[:, ::1] T):
    """Holevo quantity for the Alice direction at polar angles x = (theta, phi)."""
    cdef double st = sin(x[0])
    return _holevo(a, b, T, st * cos(x[1]), st * sin(x[1]), cos(x[0]))


def frame_min_holevo(const double[::1] x, const double[::1] a, const double[::1] b,
                     const double[:, ::1] T, int m):
    """Smallest Holevo quantity over the first m axes of the ZYZ frame x."""
    cdef double R[9]
    cdef double best = 2.0, chi
    cdef int k
    _frame(x[0], x[1], x[2], R)
    for k in range(m):
        chi = _holevo(a, b, T, R[3 * k], R[3 * k + 1], R[3 * k + 2])
        if chi < best:
            best = chi
    return best


def cjwr_frame_value(const double[::1] x, const double[:, ::1] T, int n):
    """CJWR value with Bob on the first n axes of frame x and Alice's
    directions chosen optimally (parallel to T b_k)."""
    cdef double R[9]
    cdef double tot = 0.0, u0, u1, u2
    cdef int k
    _frame(x[0], x[1], x[2], R)
    for k in range(n):
        u0 = T[0, 0] * R[3 * k] + T[0, 1] * R[3 * k + 1] + T[0, 2] * R[3 * k + 2]
        u1 = T[1, 0] * R[3 * k] + T[1, 1] * R[3 * k + 1] + T[1, 2] * R[3 * k + 2]
        u2 = T[2, 0] * R[3 * k] + T[2, 1] * R[3 * k + 1] + T[2, 2] * R[3 * k + 2]
        tot += sqrt(u0 * u0 + u1 * u1 + u2 * u2)
    return tot / sqrt(<double>n)


# ---- Nelder-Mead over the objectives above ----------------------------------

cdef enum Kind:
    SPHERE = 0
    FRAME = 1
    CJWR = 2

KINDS = {"sphere": SPHERE, "frame": FRAME, "cjwr": CJWR}
DIMS = {"sphere": 2, "frame": 3, "cjwr": 3}


cdef class _Problem:
    cdef int kind, m, dim
    cdef double a[3]
    cdef double b[3]
    cdef double T[9]
    cdef double[::1] av, bv
    cdef double[:, ::1] Tv

    def __init__(self, kind, double[::1] a, double[::1] b, double[:, ::1] T, int m):
        cdef int i, j
        self.kind = KINDS[kind]
        self.dim = DIMS[kind]
        self.m = m
        for i in range(3):
            self.a[i] = a[i]
            self.b[i] = b[i]
            for j in range(3):
                self.T[3 * i + j] = T[i, j]
        self.av, self.bv, self.Tv = a, b, T

    cdef double value(self, double* x) noexcept:
        # objective to maximise
        cdef double R[9]
        cdef double best, chi, st, tot, u0, u1, u2
        cdef int k
        if self.kind == SPHERE:
            st = sin(x[0])
            return _holevo(self.av, self.bv, self.Tv, st * cos(x[1]), st * sin(x[1]), cos(x[0]))
        _frame(x[0], x[1], x[2], R)
        if self.kind == FRAME:
            best = 2.0
            for k in range(self.m):
                chi = _holevo(self.av, self.bv, self.Tv, R[3 * k], R[3 * k + 1], R[3 * k + 2])
                if chi < best:
                    best = chi
            return best
        tot = 0.0
        for k in range(self.m):
            u0 = self.T[0] * R[3 * k] + self.T[1] * R[3 * k + 1] + self.T[2] * R[3 * k + 2]
            u1 = self.T[3] * R[3 * k] + self.T[4] * R[3 * k + 1] + self.T[5] * R[3 * k + 2]
            u2 = self.T[6] * R[3 * k] + self.T[7] * R[3 * k + 1] + self.T[8] * R[3 * k + 2]
            tot += sqrt(u0 * u0 + u1 * u1 + u2 * u2)
        return tot / sqrt(<double>self.m)

    cdef double nelder_mead(self, double* x, double xatol, double fatol, int maxiter) noexcept:
        """Minimise -value from x in place; returns the maximum found."""
        cdef int n = self.dim, j, k, it = 0
        cdef double sim[4][3]
        cdef double fsim[4]
        cdef double xbar[3], xr[3], xe[3], xc[3]
        cdef double fxr, fxe, fxc, dx, df
        cdef bint shrink
        for j in range(n):
            sim[0][j] = x[j]
        for k in range(n):
            for j in range(n):
                sim[k + 1][j] = x[j]
            if x[k] != 0.0:
                sim[k + 1][k] = 1.05 * x[k]
            else:
                sim[k + 1][k] = 0.00025
        for k in range(n + 1):
            fsim[k] = -self.value(sim[k])
        _sort(sim, fsim, n)
        while it < maxiter:
            dx = 0.0
            df = 0.0
            for k in range(1, n + 1):
                if fabs(fsim[k] - fsim[0]) > df:
                    df = fabs(fsim[k] - fsim[0])
                for j in range(n):
                    if fabs(sim[k][j] - sim[0][j]) > dx:
                        dx = fabs(sim[k][j] - sim[0][j])
            if dx <= xatol and df <= fatol:
                break
            for j in range(n):
                xbar[j] = 0.0
                for k in range(n):
                    xbar[j] += sim[k][j]
                xbar[j] /= n
            for j in range(n):
                xr[j] = 2.0 * xbar[j] - sim[n][j]
            fxr = -self.value(xr)
            shrink = False
            if fxr < fsim[0]:
                for j in range(n):
                    xe[j] = 3.0 * xbar[j] - 2.0 * sim[n][j]
                fxe = -self.value(xe)
                if fxe < fxr:
                    for j in range(n):
                        sim[n][j] = xe[j]
                    fsim[n] = fxe
                else:
                    for j in range(n):
                        sim[n][j] = xr[j]
                    fsim[n] = fxr
            elif fxr < fsim[n - 1]:
                for j in range(n):
                    sim[n][j] = xr[j]
                fsim[n] = fxr
            elif fxr < fsim[n]:
                for j in range(n):
                    xc[j] = 1.5 * xbar[j] - 0.5 * sim[n][j]
                fxc = -self.value(xc)
                if fxc <= fxr:
                    for j in range(n):
                        sim[n][j] = xc[j]
                    fsim[n] = fxc
                else:
                    shrink = True
            else:
                for j in range(n):
                    xc[j] = 0.5 * xbar[j] + 0.5 * sim[n][j]
                fxc = -self.value(xc)
                if fxc < fsim[n]:
                    for j in range(n):
                        sim[n][j] = xc[j]
                    fsim[n] = fxc
                else:
                    shrink = True
            if shrink:
                for k in range(1, n + 1):
                    for j in range(n):
                        sim[k][j] = sim[0][j] + 0.5 * (sim[k][j] - sim[0][j])
                    fsim[k] = -self.value(sim[k])
            it += 1
            _sort(sim, fsim, n)
        for j in range(n):
            x[j] = sim[0][j]
        return -fsim[0]


cdef void _sort(double sim[4][3], double* fsim, int n) noexcept:
    # stable insertion sort of vertices by objective
    cdef int k, i, j
    cdef double f, v[3]
    for k in range(1, n + 1):
        f = fsim[k]
        for j in range(n):
            v[j] = sim[k][j]
        i = k - 1
        while i >= 0 and fsim[i] > f:
            fsim[i + 1] = fsim[i]
            for j in range(n):
                sim[i + 1][j] = sim[i][j]
            i -= 1
        fsim[i + 1] = f
        for j in range(n):
            sim[i + 1][j] = v[j]


def multistart_maximize(kind, double[:, ::1] starts, double[::1] a, double[::1] b,
                        double[:, ::1] T, int m, double xatol, double fatol, int maxiter):
    """Nelder-Mead from every row of ``starts``, each run polished once by a
    restart from its end point. Returns (end points, maxima)."""
    cdef _Problem prob = _Problem(kind, a, b, T, m)
    cdef Py_ssize_t r, R = starts.shape[0]
    cdef int j
    cdef double x[3]
    import numpy as np
    xs = np.empty((R, prob.dim))
    vals = np.empty(R)
    cdef double[:, ::1] xv = xs
    cdef double[::1] vv = vals
    for r in range(R):
        for j in range(prob.dim):
            x[j] = starts[r, j]
        prob.nelder_mead(x, xatol, fatol, maxiter)
        vv[r] = prob.nelder_mead(x, xatol, fatol, maxiter)
        for j in range(prob.dim):
            xv[r, j] = x[j]
    return xs, vals
