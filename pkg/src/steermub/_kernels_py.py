"""Pure-Python twin of the compiled ``_kernels`` extension.

Used when the extension is not built or STEERMUB_PURE_PYTHON is set.
"""

from math import cos, log2, sin, sqrt

P_TINY = 1e-12


def bloch_entropy(r):
    """Entropy (bits) of a qubit whose Bloch vector has length r."""
    if r >= 1.0:
        return 0.0
    p = 0.5 * (1.0 + r)
    q = 0.5 * (1.0 - r)
    return -(p * log2(p) + q * log2(q))


def _holevo(a, b, T, n0, n1, n2):
    a0, a1, a2 = float(a[0]), float(a[1]), float(a[2])
    b0, b1, b2 = float(b[0]), float(b[1]), float(b[2])
    (T00, T01, T02), (T10, T11, T12), (T20, T21, T22) = T.tolist()
    na = n0 * a0 + n1 * a1 + n2 * a2
    t0 = n0 * T00 + n1 * T10 + n2 * T20
    t1 = n0 * T01 + n1 * T11 + n2 * T21
    t2 = n0 * T02 + n1 * T12 + n2 * T22
    chi = bloch_entropy(sqrt(b0 * b0 + b1 * b1 + b2 * b2))
    for sign in (1.0, -1.0):
        p = 0.5 * (1.0 + sign * na)
        if p < P_TINY:
            continue
        x, y, z = b0 + sign * t0, b1 + sign * t1, b2 + sign * t2
        chi -= p * bloch_entropy(sqrt(x * x + y * y + z * z) / (2.0 * p))
    return max(chi, 0.0)


def _frame(al, be, ga):
    ca, sa, cb, sb, cg, sg = cos(al), sin(al), cos(be), sin(be), cos(ga), sin(ga)
    return (
        (ca * cb * cg - sa * sg, sa * cb * cg + ca * sg, -sb * cg),
        (-ca * cb * sg - sa * cg, -sa * cb * sg + ca * cg, sb * sg),
        (ca * sb, sa * sb, cb),
    )


def holevo_bloch(a, b, T, n):
    return _holevo(a, b, T, float(n[0]), float(n[1]), float(n[2]))


def sphere_holevo(x, a, b, T):
    st = sin(x[0])
    return _holevo(a, b, T, st * cos(x[1]), st * sin(x[1]), cos(x[0]))


def frame_min_holevo(x, a, b, T, m):
    axes = _frame(float(x[0]), float(x[1]), float(x[2]))
    return min(_holevo(a, b, T, *axes[k]) for k in range(m))


def cjwr_frame_value(x, T, n):
    axes = _frame(float(x[0]), float(x[1]), float(x[2]))
    rows = T.tolist()
    tot = 0.0
    for k in range(n):
        v = axes[k]
        tot += sqrt(sum((r[0] * v[0] + r[1] * v[1] + r[2] * v[2]) ** 2 for r in rows))
    return tot / sqrt(n)


# ---- Nelder-Mead over the objectives above ----------------------------------

DIMS = {"sphere": 2, "frame": 3, "cjwr": 3}


def _objective(kind, a, b, T, m):
    if kind == "sphere":
        return lambda x: sphere_holevo(x, a, b, T)
    if kind == "frame":
        return lambda x: frame_min_holevo(x, a, b, T, m)
    if kind == "cjwr":
        return lambda x: cjwr_frame_value(x, T, m)
    raise KeyError(kind)


def nelder_mead(f, x0, xatol, fatol, maxiter):
    """Maximise f from x0; standard coefficients (1, 2, 1/2, 1/2).

    Returns (argmax, max).
    """
    n = len(x0)
    sim = [list(x0)]
    for k in range(n):
        y = list(x0)
        y[k] = 1.05 * y[k] if y[k] != 0.0 else 0.00025
        sim.append(y)
    fsim = [-f(v) for v in sim]

    def order():
        idx = sorted(range(n + 1), key=lambda i: fsim[i])
        return [sim[i] for i in idx], [fsim[i] for i in idx]

    sim, fsim = order()
    for _ in range(maxiter):
        dx = max(abs(sim[k][j] - sim[0][j]) for k in range(1, n + 1) for j in range(n))
        df = max(abs(fsim[k] - fsim[0]) for k in range(1, n + 1))
        if dx <= xatol and df <= fatol:
            break
        xbar = [sum(sim[k][j] for k in range(n)) / n for j in range(n)]
        worst = sim[n]
        xr = [2.0 * xbar[j] - worst[j] for j in range(n)]
        fxr = -f(xr)
        shrink = False
        if fxr < fsim[0]:
            xe = [3.0 * xbar[j] - 2.0 * worst[j] for j in range(n)]
            fxe = -f(xe)
            sim[n], fsim[n] = (xe, fxe) if fxe < fxr else (xr, fxr)
        elif fxr < fsim[n - 1]:
            sim[n], fsim[n] = xr, fxr
        elif fxr < fsim[n]:
            xc = [1.5 * xbar[j] - 0.5 * worst[j] for j in range(n)]
            fxc = -f(xc)
            if fxc <= fxr:
                sim[n], fsim[n] = xc, fxc
            else:
                shrink = True
        else:
            xc = [0.5 * xbar[j] + 0.5 * worst[j] for j in range(n)]
            fxc = -f(xc)
            if fxc < fsim[n]:
                sim[n], fsim[n] = xc, fxc
            else:
                shrink = True
        if shrink:
            for k in range(1, n + 1):
                sim[k] = [sim[0][j] + 0.5 * (sim[k][j] - sim[0][j]) for j in range(n)]
                fsim[k] = -f(sim[k])
        sim, fsim = order()
    return sim[0], -fsim[0]


def multistart_maximize(kind, starts, a, b, T, m, xatol, fatol, maxiter):
    """Nelder-Mead from every row of ``starts``, each run polished once by a
    restart from its end point. Returns (end points, maxima)."""
    import numpy as np

    f = _objective(kind, a, b, T, m)
    xs, vals = [], []
    for x0 in starts:
        x, _ = nelder_mead(f, [float(v) for v in x0], xatol, fatol, maxiter)
        x, v = nelder_mead(f, x, xatol, fatol, maxiter)
        xs.append(x)
        vals.append(v)
    return np.array(xs, dtype=float).reshape(len(starts), DIMS[kind]), np.array(vals)
