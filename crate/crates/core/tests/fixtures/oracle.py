"""Independent mpmath oracle for the frozen values in oracle_values.json.

Run with `python3 oracle.py > oracle_values.json`. Nothing here shares code
with the Rust implementation: matrices are rebuilt from the closed form,
eigenvalues come from mpmath's own solvers or from Sylvester inertia counts
by bisection, norms use mpmath.quad, and the slit transform uses numpy's
Gauss-Legendre nodes with a trapezoid rule in momentum.
"""
import json
import mpmath as mp

mp.mp.prec = 512


def prolate(xs, pmax=mp.pi, hbar=1):
    n = len(xs)
    s = mp.matrix(n, n)
    for k in range(n):
        for r in range(n):
            if k == r:
                s[k, r] = pmax / (mp.pi * hbar)
            else:
                d = xs[k] - xs[r]
                s[k, r] = mp.sin(d * pmax / hbar) / (mp.pi * d)
    return s


def grid(n, dx):
    return [mp.mpf(k) * dx for k in range(n)]


def eig_sorted(s):
    ev = mp.eigsy(s)[0]
    return sorted([ev[i] for i in range(len(ev))])


def count_below(s, t):
    # Sylvester inertia: negative pivots of LDL^T of S - tI
    n = s.rows
    a = s - t * mp.eye(n)
    d = []
    l = mp.matrix(n, n)
    neg = 0
    for j in range(n):
        dj = a[j, j] - sum(l[j, k] ** 2 * d[k] for k in range(j))
        d.append(dj)
        if dj < 0:
            neg += 1
        for i in range(j + 1, n):
            l[i, j] = (a[i, j] - sum(l[i, k] * l[j, k] * d[k] for k in range(j))) / dj
    return neg


def smin_by_inertia(s):
    lo, hi = mp.mpf(0), mp.mpf(s.rows)
    for _ in range(700):
        mid = (lo + hi) / 2
        if count_below(s, mid) >= 1:
            hi = mid
        else:
            lo = mid
    return (lo + hi) / 2


def s(x):
    return mp.nstr(x, 40)


out = {}

# cond(S) for n = 10, dx / lambda_min = 0.05
ev = eig_sorted(prolate(grid(10, mp.mpf("0.1"))))
out["cond_n10_r005_log2"] = s(mp.log(ev[-1] / ev[0], 2))
ev = eig_sorted(prolate(grid(16, mp.mpf("0.2"))))
out["cond_n16_r01_log2"] = s(mp.log(ev[-1] / ev[0], 2))

# s_min for N = 5, dx = 0.1 by determinant bisection
S5 = prolate(grid(5, mp.mpf("0.1")))
out["smin_n5_dx01_inertia"] = s(smin_by_inertia(S5))
out["smin_n5_dx01_eigsy"] = s(eig_sorted(S5)[0])

# minimum-norm coefficients for N = 5, dx = 0.1, a_k = (-1)^k
a5 = mp.matrix([(-1) ** k for k in range(5)])
c5 = mp.lu_solve(S5, a5)
out["coeffs_n5_dx01_alt"] = [s(c5[i]) for i in range(5)]
norm5 = (a5.T * c5)[0]
out["norm_sq_n5_dx01_alt"] = s(norm5)

# Parseval by mpmath.quad of |psi~|^2 on [-pi, pi]
xs5 = grid(5, mp.mpf("0.1"))
def psit(p):
    return sum(c5[r] * mp.expj(-xs5[r] * p) for r in range(5)) / mp.sqrt(2 * mp.pi)
out["parseval_n5_dx01_alt"] = s(mp.quad(lambda p: abs(psit(p)) ** 2, mp.linspace(-mp.pi, mp.pi, 9)))

# maximal amplitude for N = 8, dx = 0.05
S8 = prolate(grid(8, mp.mpf("0.05")))
sm8 = eig_sorted(S8)[0]
out["smin_n8_dx005"] = s(sm8)
out["amp_n8_dx005"] = s(mp.sqrt(sm8))

# scaling sweeps
def smin_eq(n, dx):
    return eig_sorted(prolate(grid(n, dx)))[0]

def lsq(xv, yv):
    m = len(xv)
    mx = sum(xv) / m
    my = sum(yv) / m
    sxx = sum((x - mx) ** 2 for x in xv)
    sxy = sum((x - mx) * (y - my) for x, y in zip(xv, yv))
    slope = sxy / sxx
    icpt = my - slope * mx
    ss_res = sum((y - slope * x - icpt) ** 2 for x, y in zip(xv, yv))
    ss_tot = sum((y - my) ** 2 for y in yv)
    return slope, icpt, 1 - ss_res / ss_tot

lam = 2
for n in (2, 3, 4):
    ratios = [mp.mpf("0.2") * mp.mpf("0.1") ** (mp.mpf(i) / 6) for i in range(0, 7)]
    # smallest decade only: 0.02 .. 0.2 lambda_min is exactly one decade
    vals = [smin_eq(n, r * lam) for r in ratios]
    slope, _, r2 = lsq([mp.log(r * lam) for r in ratios], [mp.log(v) for v in vals])
    out[f"alpha_n{n}"] = s(slope)

for label, ratio in (("005", mp.mpf("0.05")), ("01", mp.mpf("0.1")), ("02", mp.mpf("0.2"))):
    ns = list(range(4, 17))
    vals = [smin_eq(n, ratio * lam) for n in ns]
    ys = [mp.log(v) - mp.log(n) / 2 for v, n in zip(vals, ns)]
    slope, _, r2 = lsq([mp.mpf(n) for n in ns], ys)
    out[f"gamma_r{label}"] = s(-slope)
    out[f"gamma_r{label}_r2"] = s(r2)
    if label == "01":
        out["smin_sweepN_r01"] = [s(v) for v in vals]
        f, _, _ = lsq([mp.mpf(n) for n in ns[:7]], ys[:7])
        b, _, _ = lsq([mp.mpf(n) for n in ns[6:]], ys[6:])
        out["gamma_r01_front"] = s(-f)
        out["gamma_r01_back"] = s(-b)
        plain = [mp.log(v) for v in vals]
        sl, ic, _ = lsq([mp.mpf(n) for n in ns], plain)
        out["maxres_plain_r01"] = s(max(abs(y - sl * n - ic) for y, n in zip(plain, ns)))
        sl, ic, _ = lsq([mp.mpf(n) for n in ns], ys)
        out["maxres_corrected_r01"] = s(max(abs(y - sl * n - ic) for y, n in zip(ys, ns)))

# slit: N = 10 alternating, dx = 0.1, window = node span [0, 0.9]
mp.mp.prec = 256
xs10 = grid(10, mp.mpf("0.1"))
S10 = prolate(xs10)
a10 = mp.matrix([(-1) ** k for k in range(10)])
c10 = mp.lu_solve(S10, a10)
def psi10(x):
    tot = mp.mpf(0)
    for r in range(10):
        d = x - xs10[r]
        tot += c10[r] * (mp.sin(mp.pi * d) / (mp.pi * d) if d != 0 else 1)
    return tot
mp.mp.dps = 40
# psi on the window by Chebyshev-free dense Gauss-Legendre via mpmath
import numpy as np
gl_x, gl_w = np.polynomial.legendre.leggauss(40)
panels = 45
lo, hi = 0.0, 0.9
xq, wq = [], []
for j in range(panels):
    a = lo + (hi - lo) * j / panels
    b = lo + (hi - lo) * (j + 1) / panels
    xq.extend(0.5 * (b - a) * gl_x + 0.5 * (a + b))
    wq.extend(0.5 * (b - a) * gl_w)
xq = np.array(xq)
wq = np.array(wq)
vals = np.array([float(psi10(mp.mpf(x))) for x in xq])
captured_unnorm = float(np.sum(wq * vals ** 2))
pmax_grid = 4 * np.pi / 0.1
pg = np.linspace(-pmax_grid, pmax_grid, 8001)
amp = np.array([np.sum(wq * vals * np.exp(-1j * p * xq)) for p in pg]) / np.sqrt(2 * np.pi)
dens = np.abs(amp) ** 2
# trapezoid on the uniform grid
def trap(f):
    return float(np.trapezoid(f, pg))
mass = trap(dens)
dens /= mass
out["slit_n10_grid_mass_over_window_mass"] = s(mp.mpf(mass / captured_unnorm))
out["slit_n10_expect_abs_p"] = s(mp.mpf(trap(np.abs(pg) * dens)))
out["slit_n10_fraction_above"] = s(mp.mpf(trap(np.where(np.abs(pg) > np.pi, dens, 0.0))))
# zero crossings of psi over node span
xs_dense = np.linspace(0.0, 0.9, 9 * 64 + 1)
v = np.array([float(psi10(mp.mpf(x))) for x in xs_dense])
idx = np.nonzero(np.sign(v[:-1]) * np.sign(v[1:]) < 0)[0]
zs = []
for i in idx:
    a, b = mp.mpf(xs_dense[i]), mp.mpf(xs_dense[i + 1])
    zs.append(float(mp.findroot(psi10, (a, b), solver="anderson")))
out["zeros_n10"] = zs
out["local_wavelength_n10"] = 2 * float(np.mean(np.diff(zs)))

print(json.dumps(out, indent=1))
