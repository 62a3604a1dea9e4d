"""Numba-compiled kernels.

Scalar per-interface flux cores are the single implementation of the
five schemes; the public batch kernels (used by the flux API and the
oracle tests) and the fused solver passes both call them.

Layout conventions:

* 1-D states: (rho, rho*u, E).
* 2-D states: natural component order (rho, rho*u, rho*v, E); the
  directional kernels take the component indices (iu, iv) of the
  normal/tangential momenta, so the same code serves the x- and the
  y-direction without permuting arrays.  Directional flux vectors are
  ordered (mass, normal momentum, tangential momentum, energy).

The fused passes validate the cell states they read and report the
first bad cell instead of letting a sqrt of a negative produce NaNs;
reconstructed interface values falling outside the physical regime are
replaced by their own cell values (positivity fallback).
"""

import numpy as np
from numba import njit, prange

WENO_EPS = 1e-12
WENO3_EPS = 3e-4

# fastmath without nnan/ninf so validity checks keep IEEE semantics
_FM = {"contract", "reassoc", "nsz", "arcp"}


# ---------------------------------------------------------------------------
# scalar helpers
# ---------------------------------------------------------------------------

@njit(cache=True)
def _minmod2(a, b):
    if a > 0.0 and b > 0.0:
        return min(a, b)
    if a < 0.0 and b < 0.0:
        return max(a, b)
    return 0.0


@njit(cache=True)
def _minmod3(a, b, c):
    if a > 0.0 and b > 0.0 and c > 0.0:
        return min(a, min(b, c))
    if a < 0.0 and b < 0.0 and c < 0.0:
        return max(a, max(b, c))
    return 0.0


@njit(cache=True)
def _speeds_plain(ul, cl, ur, cr):
    ap = max(ur + cr, ul + cl)
    am = min(ur - cr, ul - cl)
    return am, ap


@njit(cache=True)
def _speeds_clamped(ul, cl, ur, cr):
    ap = max(max(ur + cr, ul + cl), 0.0)
    am = min(min(ur - cr, ul - cl), 0.0)
    return am, ap


@njit(cache=True)
def _weno3_left(w0, w1, w2, eps):
    """Third-order WENO-Z interpolation at the midpoint right of w1.

    The first-difference indicators vanish identically at symmetric
    smooth extrema, so eps must stay well above round-off there (see
    WENO3_EPS) to keep the formal order.
    """
    b0 = (w1 - w0) ** 2
    b1 = (w2 - w1) ** 2
    tau = abs(b1 - b0)
    a0 = 0.25 * (1.0 + (tau / (b0 + eps)) ** 2)
    a1 = 0.75 * (1.0 + (tau / (b1 + eps)) ** 2)
    q0 = 1.5 * w1 - 0.5 * w0
    q1 = 0.5 * (w1 + w2)
    return (a0 * q0 + a1 * q1) / (a0 + a1)


@njit(cache=True)
def _weno5_left(w0, w1, w2, w3, w4):
    """Fifth-order WENO-Z interpolation at the midpoint right of w2."""
    b0 = 13.0 / 12.0 * (w0 - 2.0 * w1 + w2) ** 2 + 0.25 * (w0 - 4.0 * w1 + 3.0 * w2) ** 2
    b1 = 13.0 / 12.0 * (w1 - 2.0 * w2 + w3) ** 2 + 0.25 * (w1 - w3) ** 2
    b2 = 13.0 / 12.0 * (w2 - 2.0 * w3 + w4) ** 2 + 0.25 * (3.0 * w2 - 4.0 * w3 + w4) ** 2
    tau = abs(b0 - b2)
    a0 = 0.0625 * (1.0 + (tau / (b0 + WENO_EPS)) ** 2)
    a1 = 0.625 * (1.0 + (tau / (b1 + WENO_EPS)) ** 2)
    a2 = 0.3125 * (1.0 + (tau / (b2 + WENO_EPS)) ** 2)
    q0 = (3.0 * w0 - 10.0 * w1 + 15.0 * w2) / 8.0
    q1 = (-w1 + 6.0 * w2 + 3.0 * w3) / 8.0
    q2 = (3.0 * w2 + 6.0 * w3 - w4) / 8.0
    return (a0 * q0 + a1 * q1 + a2 * q2) / (a0 + a1 + a2)


# ---------------------------------------------------------------------------
# analytic eigenbases of the Euler Jacobians (conserved variables)
# ---------------------------------------------------------------------------

@njit(cache=True)
def _fill_basis3(rho, u, p, gamma, R, L):
    """1-D right/left eigenvectors at a primitive state; fields (u-c, u, u+c)."""
    c = np.sqrt(gamma * p / rho)
    H = c * c / (gamma - 1.0) + 0.5 * u * u
    R[0, 0] = 1.0
    R[1, 0] = u - c
    R[2, 0] = H - u * c
    R[0, 1] = 1.0
    R[1, 1] = u
    R[2, 1] = 0.5 * u * u
    R[0, 2] = 1.0
    R[1, 2] = u + c
    R[2, 2] = H + u * c
    b1 = (gamma - 1.0) / (c * c)
    b2 = 0.5 * b1 * u * u
    L[0, 0] = 0.5 * (b2 + u / c)
    L[0, 1] = -0.5 * (b1 * u + 1.0 / c)
    L[0, 2] = 0.5 * b1
    L[1, 0] = 1.0 - b2
    L[1, 1] = b1 * u
    L[1, 2] = -b1
    L[2, 0] = 0.5 * (b2 - u / c)
    L[2, 1] = -0.5 * (b1 * u - 1.0 / c)
    L[2, 2] = 0.5 * b1
    return c


@njit(cache=True)
def _fill_basis4(rho, un, ut, p, gamma, R, L):
    """Directional 2-D eigenvectors in (rho, m_n, m_t, E) component order.

    Field order: (un-c, entropy un, shear un, un+c); the shear field
    carries the tangential-velocity jump.
    """
    c = np.sqrt(gamma * p / rho)
    q2 = un * un + ut * ut
    H = c * c / (gamma - 1.0) + 0.5 * q2
    R[0, 0] = 1.0
    R[1, 0] = un - c
    R[2, 0] = ut
    R[3, 0] = H - un * c
    R[0, 1] = 1.0
    R[1, 1] = un
    R[2, 1] = ut
    R[3, 1] = 0.5 * q2
    R[0, 2] = 0.0
    R[1, 2] = 0.0
    R[2, 2] = 1.0
    R[3, 2] = ut
    R[0, 3] = 1.0
    R[1, 3] = un + c
    R[2, 3] = ut
    R[3, 3] = H + un * c
    b1 = (gamma - 1.0) / (c * c)
    b2 = 0.5 * b1 * q2
    L[0, 0] = 0.5 * (b2 + un / c)
    L[0, 1] = -0.5 * (b1 * un + 1.0 / c)
    L[0, 2] = -0.5 * b1 * ut
    L[0, 3] = 0.5 * b1
    L[1, 0] = 1.0 - b2
    L[1, 1] = b1 * un
    L[1, 2] = b1 * ut
    L[1, 3] = -b1
    L[2, 0] = -ut
    L[2, 1] = 0.0
    L[2, 2] = 1.0
    L[2, 3] = 0.0
    L[3, 0] = 0.5 * (b2 - un / c)
    L[3, 1] = -0.5 * (b1 * un - 1.0 / c)
    L[3, 2] = -0.5 * b1 * ut
    L[3, 3] = 0.5 * b1
    return c


# ---------------------------------------------------------------------------
# scalar flux cores (shared by the batch API and the fused passes)
# ---------------------------------------------------------------------------

@njit(cache=True)
def _f3_hll(rl, ul, pl, El, rr, ur, pr, Er, a, b):
    fl0 = rl * ul
    fl1 = fl0 * ul + pl
    fl2 = ul * (El + pl)
    if a >= 0.0:
        return fl0, fl1, fl2
    fr0 = rr * ur
    fr1 = fr0 * ur + pr
    fr2 = ur * (Er + pr)
    if b <= 0.0:
        return fr0, fr1, fr2
    d = b - a
    if d <= 0.0:
        return fl0, fl1, fl2
    ab = a * b
    return ((b * fl0 - a * fr0 + ab * (rr - rl)) / d,
            (b * fl1 - a * fr1 + ab * (rr * ur - rl * ul)) / d,
            (b * fl2 - a * fr2 + ab * (Er - El)) / d)


@njit(cache=True)
def _f3_hllc(rl, ul, pl, El, rr, ur, pr, Er, a, b):
    fl0 = rl * ul
    fl1 = fl0 * ul + pl
    fl2 = ul * (El + pl)
    if a >= 0.0:
        return fl0, fl1, fl2
    fr0 = rr * ur
    fr1 = fr0 * ur + pr
    fr2 = ur * (Er + pr)
    if b <= 0.0:
        return fr0, fr1, fr2
    wl = rl * (a - ul)
    wr = rr * (b - ur)
    den = wl - wr
    if den == 0.0:
        return _f3_hll(rl, ul, pl, El, rr, ur, pr, Er, a, b)
    astar = (pr - pl + ul * wl - ur * wr) / den
    # classical three-wave star states: density rescaled, normal
    # velocity jumps to a*, energy picks up the contact-pressure work
    if astar >= 0.0:
        rs = wl / (a - astar)
        Es = rs * (El / rl + (astar - ul) * (astar + pl / wl))
        return (fl0 + a * (rs - rl),
                fl1 + a * (rs * astar - rl * ul),
                fl2 + a * (Es - El))
    rs = wr / (b - astar)
    Es = rs * (Er / rr + (astar - ur) * (astar + pr / wr))
    return (fr0 + b * (rs - rr),
            fr1 + b * (rs * astar - rr * ur),
            fr2 + b * (Es - Er))


@njit(cache=True)
def _f3_tv(rl, ul, pl, El, rr, ur, pr, Er, gamma):
    """TV split parts: returns (adv0, adv1, adv2, p0, p1, p2)."""
    cl2 = gamma * pl / rl
    cr2 = gamma * pr / rr
    Cm = rl * (ul - np.sqrt(ul * ul + 4.0 * cl2))
    Cp = rr * (ur + np.sqrt(ur * ur + 4.0 * cr2))
    den = Cp - Cm
    ustar = (Cp * ur - Cm * ul) / den - 2.0 * (pr - pl) / den
    pstar = (Cp * pl - Cm * pr) / den + Cp * Cm * (ur - ul) / (2.0 * den)
    if ustar >= 0.0:
        a0 = ustar * rl
        a1 = ustar * rl * ul
        a2 = ustar * 0.5 * rl * ul * ul
    else:
        a0 = ustar * rr
        a1 = ustar * rr * ur
        a2 = ustar * 0.5 * rr * ur * ur
    return a0, a1, a2, 0.0, pstar, gamma * ustar * pstar / (gamma - 1.0)


@njit(cache=True)
def _f3_ldcu(rl, ul, pl, El, rr, ur, pr, Er, a, b):
    fl0 = rl * ul
    fl1 = fl0 * ul + pl
    fl2 = ul * (El + pl)
    d = b - a
    if d <= 0.0:
        return fl0, fl1, fl2
    fr0 = rr * ur
    fr1 = fr0 * ur + pr
    fr2 = ur * (Er + pr)
    ab = a * b
    cu0 = (b * fl0 - a * fr0 + ab * (rr - rl)) / d
    cu1 = (b * fl1 - a * fr1 + ab * (fr0 - fl0)) / d
    cu2 = (b * fl2 - a * fr2 + ab * (Er - El)) / d
    rst = (b * rr - a * rl - (fr0 - fl0)) / d
    mst = (b * fr0 - a * fl0 - (fr1 - fl1)) / d
    if rst <= 0.0:
        return cu0, cu1, cu2
    ust = mst / rst
    asm = a - ust
    asp = b - ust
    qrho = _minmod2(-asm * (rst - rl), asp * (rr - rst))
    if ust < 0.0:
        alpha = b / asp
    elif asm != 0.0:
        alpha = a / asm
    else:
        alpha = 0.0
    q0 = alpha * qrho
    return cu0 + q0, cu1 + q0 * ust, cu2 + q0 * 0.5 * ust * ust


@njit(cache=True)
def _f3_lcdcu(rl, ul, pl, El, rr, ur, pr, Er,
              ra, ua, pa, gamma, eps0, R, Lm):
    cl = np.sqrt(gamma * pl / rl)
    cr = np.sqrt(gamma * pr / rr)
    fl0 = rl * ul
    fl1 = fl0 * ul + pl
    fl2 = ul * (El + pl)
    fr0 = rr * ur
    fr1 = fr0 * ur + pr
    fr2 = ur * (Er + pr)
    _fill_basis3(ra, ua, pa, gamma, R, Lm)
    o0 = 0.0
    o1 = 0.0
    o2 = 0.0
    for i in range(3):
        if i == 0:
            laml = ul - cl
            lamr = ur - cr
        elif i == 1:
            laml = ul
            lamr = ur
        else:
            laml = ul + cl
            lamr = ur + cr
        lp = max(max(laml, lamr), 0.0)
        lm = min(min(laml, lamr), 0.0)
        dl = lp - lm
        if dl > eps0:
            Pi = lp / dl
            Mi = -lm / dl
            Qi = lp * lm / dl
        else:
            Pi = 0.5
            Mi = 0.5
            Qi = 0.0
        wF = Lm[i, 0] * fl0 + Lm[i, 1] * fl1 + Lm[i, 2] * fl2
        wG = Lm[i, 0] * fr0 + Lm[i, 1] * fr1 + Lm[i, 2] * fr2
        wD = (Lm[i, 0] * (rr - rl) + Lm[i, 1] * (fr0 - fl0)
              + Lm[i, 2] * (Er - El))
        comb = Pi * wF + Mi * wG + Qi * wD
        o0 += R[0, i] * comb
        o1 += R[1, i] * comb
        o2 += R[2, i] * comb
    return o0, o1, o2


@njit(cache=True)
def _f4_hll(rl, unl, utl, pl, El, rr, unr, utr, pr, Er, a, b):
    fl0 = rl * unl
    fl1 = fl0 * unl + pl
    fl2 = fl0 * utl
    fl3 = unl * (El + pl)
    if a >= 0.0:
        return fl0, fl1, fl2, fl3
    fr0 = rr * unr
    fr1 = fr0 * unr + pr
    fr2 = fr0 * utr
    fr3 = unr * (Er + pr)
    if b <= 0.0:
        return fr0, fr1, fr2, fr3
    d = b - a
    if d <= 0.0:
        return fl0, fl1, fl2, fl3
    ab = a * b
    return ((b * fl0 - a * fr0 + ab * (rr - rl)) / d,
            (b * fl1 - a * fr1 + ab * (fr0 - fl0)) / d,
            (b * fl2 - a * fr2 + ab * (rr * utr - rl * utl)) / d,
            (b * fl3 - a * fr3 + ab * (Er - El)) / d)


@njit(cache=True)
def _f4_hllc(rl, unl, utl, pl, El, rr, unr, utr, pr, Er, a, b):
    fl0 = rl * unl
    fl1 = fl0 * unl + pl
    fl2 = fl0 * utl
    fl3 = unl * (El + pl)
    if a >= 0.0:
        return fl0, fl1, fl2, fl3
    fr0 = rr * unr
    fr1 = fr0 * unr + pr
    fr2 = fr0 * utr
    fr3 = unr * (Er + pr)
    if b <= 0.0:
        return fr0, fr1, fr2, fr3
    wl = rl * (a - unl)
    wr = rr * (b - unr)
    den = wl - wr
    if den == 0.0:
        return _f4_hll(rl, unl, utl, pl, El, rr, unr, utr, pr, Er, a, b)
    astar = (pr - pl + unl * wl - unr * wr) / den
    if astar >= 0.0:
        rs = wl / (a - astar)
        Es = rs * (El / rl + (astar - unl) * (astar + pl / wl))
        return (fl0 + a * (rs - rl),
                fl1 + a * (rs * astar - rl * unl),
                fl2 + a * (rs * utl - rl * utl),
                fl3 + a * (Es - El))
    rs = wr / (b - astar)
    Es = rs * (Er / rr + (astar - unr) * (astar + pr / wr))
    return (fr0 + b * (rs - rr),
            fr1 + b * (rs * astar - rr * unr),
            fr2 + b * (rs * utr - rr * utr),
            fr3 + b * (Es - Er))


@njit(cache=True)
def _f4_tv(rl, unl, utl, pl, El, rr, unr, utr, pr, Er, gamma):
    """Returns (adv0..adv3, p0..p3) directional split parts."""
    cl2 = gamma * pl / rl
    cr2 = gamma * pr / rr
    Cm = rl * (unl - np.sqrt(unl * unl + 4.0 * cl2))
    Cp = rr * (unr + np.sqrt(unr * unr + 4.0 * cr2))
    den = Cp - Cm
    ustar = (Cp * unr - Cm * unl) / den - 2.0 * (pr - pl) / den
    pstar = (Cp * pl - Cm * pr) / den + Cp * Cm * (unr - unl) / (2.0 * den)
    if ustar >= 0.0:
        a0 = ustar * rl
        a1 = ustar * rl * unl
        a2 = ustar * rl * utl
        a3 = ustar * 0.5 * rl * (unl * unl + utl * utl)
    else:
        a0 = ustar * rr
        a1 = ustar * rr * unr
        a2 = ustar * rr * utr
        a3 = ustar * 0.5 * rr * (unr * unr + utr * utr)
    return a0, a1, a2, a3, 0.0, pstar, 0.0, gamma * ustar * pstar / (gamma - 1.0)


@njit(cache=True)
def _f4_ldcu(rl, unl, utl, pl, El, rr, unr, utr, pr, Er, a, b):
    fl0 = rl * unl
    fl1 = fl0 * unl + pl
    fl2 = fl0 * utl
    fl3 = unl * (El + pl)
    d = b - a
    if d <= 0.0:
        return fl0, fl1, fl2, fl3
    fr0 = rr * unr
    fr1 = fr0 * unr + pr
    fr2 = fr0 * utr
    fr3 = unr * (Er + pr)
    mtl = rl * utl
    mtr = rr * utr
    ab = a * b
    cu0 = (b * fl0 - a * fr0 + ab * (rr - rl)) / d
    cu1 = (b * fl1 - a * fr1 + ab * (fr0 - fl0)) / d
    cu2 = (b * fl2 - a * fr2 + ab * (mtr - mtl)) / d
    cu3 = (b * fl3 - a * fr3 + ab * (Er - El)) / d
    rst = (b * rr - a * rl - (fr0 - fl0)) / d
    mnst = (b * fr0 - a * fl0 - (fr1 - fl1)) / d
    mtst = (b * mtr - a * mtl - (fr2 - fl2)) / d
    if rst <= 0.0:
        return cu0, cu1, cu2, cu3
    ust = mnst / rst
    asm = a - ust
    asp = b - ust
    qrho = _minmod2(-asm * (rst - rl), asp * (rr - rst))
    qmt = _minmod2(-asm * (mtst - mtl), asp * (mtr - mtst))
    # energy anti-diffusion: the a*- term leads so that the shear
    # contribution cancels the central dissipation exactly (pure shear
    # jumps upwind exactly; a stationary shear has zero energy flux);
    # the braced term is dropped when its shifted densities turn
    # non-positive
    braces = 0.0
    if asp != 0.0 and asm != 0.0:
        dp = rst + qrho / asp
        dm = rst + qrho / asm
        if dp > 0.0 and dm > 0.0:
            tp = mtst + qmt / asp
            tm = mtst + qmt / asm
            braces = tm * tm / (2.0 * dm) - tp * tp / (2.0 * dp)
    qE = asp * asm / d * braces + 0.5 * ust * ust * qrho
    if ust < 0.0:
        alpha = b / asp
    elif asm != 0.0:
        alpha = a / asm
    else:
        alpha = 0.0
    return (cu0 + alpha * qrho, cu1 + alpha * ust * qrho,
            cu2 + alpha * qmt, cu3 + alpha * qE)


@njit(cache=True)
def _f4_lcdcu(rl, unl, utl, pl, El, rr, unr, utr, pr, Er,
              ra, una, uta, pa, gamma, eps0, R, Lm):
    cl = np.sqrt(gamma * pl / rl)
    cr = np.sqrt(gamma * pr / rr)
    fl0 = rl * unl
    fl1 = fl0 * unl + pl
    fl2 = fl0 * utl
    fl3 = unl * (El + pl)
    fr0 = rr * unr
    fr1 = fr0 * unr + pr
    fr2 = fr0 * utr
    fr3 = unr * (Er + pr)
    mtl = rl * utl
    mtr = rr * utr
    _fill_basis4(ra, una, uta, pa, gamma, R, Lm)
    o0 = 0.0
    o1 = 0.0
    o2 = 0.0
    o3 = 0.0
    for i in range(4):
        if i == 0:
            laml = unl - cl
            lamr = unr - cr
        elif i == 3:
            laml = unl + cl
            lamr = unr + cr
        else:
            laml = unl
            lamr = unr
        lp = max(max(laml, lamr), 0.0)
        lm = min(min(laml, lamr), 0.0)
        dl = lp - lm
        if dl > eps0:
            Pi = lp / dl
            Mi = -lm / dl
            Qi = lp * lm / dl
        else:
            Pi = 0.5
            Mi = 0.5
            Qi = 0.0
        wF = Lm[i, 0] * fl0 + Lm[i, 1] * fl1 + Lm[i, 2] * fl2 + Lm[i, 3] * fl3
        wG = Lm[i, 0] * fr0 + Lm[i, 1] * fr1 + Lm[i, 2] * fr2 + Lm[i, 3] * fr3
        wD = (Lm[i, 0] * (rr - rl) + Lm[i, 1] * (fr0 - fl0)
              + Lm[i, 2] * (mtr - mtl) + Lm[i, 3] * (Er - El))
        comb = Pi * wF + Mi * wG + Qi * wD
        o0 += R[0, i] * comb
        o1 += R[1, i] * comb
        o2 += R[2, i] * comb
        o3 += R[3, i] * comb
    return o0, o1, o2, o3


@njit(cache=True)
def _dispatch3(scheme, rl, ul, pl, El, rr, ur, pr, Er, gamma, eps0, R, Lm):
    cl = np.sqrt(gamma * pl / rl)
    cr = np.sqrt(gamma * pr / rr)
    if scheme == 0:
        a, b = _speeds_plain(ul, cl, ur, cr)
        return _f3_hll(rl, ul, pl, El, rr, ur, pr, Er, a, b)
    if scheme == 1:
        a, b = _speeds_plain(ul, cl, ur, cr)
        return _f3_hllc(rl, ul, pl, El, rr, ur, pr, Er, a, b)
    if scheme == 2:
        a0, a1, a2, p0, p1, p2 = _f3_tv(rl, ul, pl, El, rr, ur, pr, Er, gamma)
        return a0 + p0, a1 + p1, a2 + p2
    if scheme == 3:
        a, b = _speeds_clamped(ul, cl, ur, cr)
        return _f3_ldcu(rl, ul, pl, El, rr, ur, pr, Er, a, b)
    ra = 0.5 * (rl + rr)
    ua = 0.5 * (rl * ul + rr * ur) / ra
    Ea = 0.5 * (El + Er)
    pa = (gamma - 1.0) * (Ea - 0.5 * ra * ua * ua)
    return _f3_lcdcu(rl, ul, pl, El, rr, ur, pr, Er, ra, ua, pa, gamma, eps0, R, Lm)


@njit(cache=True)
def _dispatch4(scheme, rl, unl, utl, pl, El, rr, unr, utr, pr, Er,
               gamma, eps0, R, Lm):
    cl = np.sqrt(gamma * pl / rl)
    cr = np.sqrt(gamma * pr / rr)
    if scheme == 0:
        a, b = _speeds_plain(unl, cl, unr, cr)
        return _f4_hll(rl, unl, utl, pl, El, rr, unr, utr, pr, Er, a, b)
    if scheme == 1:
        a, b = _speeds_plain(unl, cl, unr, cr)
        return _f4_hllc(rl, unl, utl, pl, El, rr, unr, utr, pr, Er, a, b)
    if scheme == 2:
        a0, a1, a2, a3, p0, p1, p2, p3 = _f4_tv(
            rl, unl, utl, pl, El, rr, unr, utr, pr, Er, gamma)
        return a0 + p0, a1 + p1, a2 + p2, a3 + p3
    if scheme == 3:
        a, b = _speeds_clamped(unl, cl, unr, cr)
        return _f4_ldcu(rl, unl, utl, pl, El, rr, unr, utr, pr, Er, a, b)
    ra = 0.5 * (rl + rr)
    una = 0.5 * (rl * unl + rr * unr) / ra
    uta = 0.5 * (rl * utl + rr * utr) / ra
    Ea = 0.5 * (El + Er)
    pa = (gamma - 1.0) * (Ea - 0.5 * ra * (una * una + uta * uta))
    return _f4_lcdcu(rl, unl, utl, pl, El, rr, unr, utr, pr, Er,
                     ra, una, uta, pa, gamma, eps0, R, Lm)


# ---------------------------------------------------------------------------
# validity scans (public flux API)
# ---------------------------------------------------------------------------

@njit(cache=True)
def first_invalid_3(UL, UR, gamma):
    """Index of the first interface whose pair has rho<=0 or p<=0, else -1."""
    M = UL.shape[0]
    for m in range(M):
        for side in range(2):
            U = UL[m] if side == 0 else UR[m]
            rho = U[0]
            if not (rho > 0.0):
                return m
            u = U[1] / rho
            p = (gamma - 1.0) * (U[2] - 0.5 * rho * u * u)
            if not (p > 0.0):
                return m
    return -1


@njit(cache=True)
def first_invalid_4(UL, UR, gamma):
    M = UL.shape[0]
    for m in range(M):
        for side in range(2):
            U = UL[m] if side == 0 else UR[m]
            rho = U[0]
            if not (rho > 0.0):
                return m
            un = U[1] / rho
            ut = U[2] / rho
            p = (gamma - 1.0) * (U[3] - 0.5 * rho * (un * un + ut * ut))
            if not (p > 0.0):
                return m
    return -1


# ---------------------------------------------------------------------------
# batch one-sided speeds (public speeds/flux API)
# ---------------------------------------------------------------------------

@njit(cache=True, parallel=True)
def speeds_batch_3(UL, UR, gamma, clamp, am, ap):
    M = UL.shape[0]
    for m in prange(M):
        rl = UL[m, 0]
        ul = UL[m, 1] / rl
        pl = (gamma - 1.0) * (UL[m, 2] - 0.5 * rl * ul * ul)
        rr = UR[m, 0]
        ur = UR[m, 1] / rr
        pr = (gamma - 1.0) * (UR[m, 2] - 0.5 * rr * ur * ur)
        cl = np.sqrt(gamma * pl / rl)
        cr = np.sqrt(gamma * pr / rr)
        if clamp:
            a, b = _speeds_clamped(ul, cl, ur, cr)
        else:
            a, b = _speeds_plain(ul, cl, ur, cr)
        am[m] = a
        ap[m] = b


@njit(cache=True, parallel=True)
def speeds_batch_4(UL, UR, gamma, clamp, am, ap):
    M = UL.shape[0]
    for m in prange(M):
        rl = UL[m, 0]
        unl = UL[m, 1] / rl
        utl = UL[m, 2] / rl
        pl = (gamma - 1.0) * (UL[m, 3] - 0.5 * rl * (unl * unl + utl * utl))
        rr = UR[m, 0]
        unr = UR[m, 1] / rr
        utr = UR[m, 2] / rr
        pr = (gamma - 1.0) * (UR[m, 3] - 0.5 * rr * (unr * unr + utr * utr))
        cl = np.sqrt(gamma * pl / rl)
        cr = np.sqrt(gamma * pr / rr)
        if clamp:
            a, b = _speeds_clamped(unl, cl, unr, cr)
        else:
            a, b = _speeds_plain(unl, cl, unr, cr)
        am[m] = a
        ap[m] = b


# ---------------------------------------------------------------------------
# batch flux kernels (public flux API; thin loops over the scalar cores)
# ---------------------------------------------------------------------------

@njit(cache=True, parallel=True)
def hll_batch_3(UL, UR, am, ap, gamma, out):
    for m in prange(UL.shape[0]):
        rl = UL[m, 0]
        ul = UL[m, 1] / rl
        pl = (gamma - 1.0) * (UL[m, 2] - 0.5 * rl * ul * ul)
        rr = UR[m, 0]
        ur = UR[m, 1] / rr
        pr = (gamma - 1.0) * (UR[m, 2] - 0.5 * rr * ur * ur)
        f0, f1, f2 = _f3_hll(rl, ul, pl, UL[m, 2], rr, ur, pr, UR[m, 2],
                             am[m], ap[m])
        out[m, 0] = f0
        out[m, 1] = f1
        out[m, 2] = f2


@njit(cache=True, parallel=True)
def hllc_batch_3(UL, UR, am, ap, gamma, out):
    for m in prange(UL.shape[0]):
        rl = UL[m, 0]
        ul = UL[m, 1] / rl
        pl = (gamma - 1.0) * (UL[m, 2] - 0.5 * rl * ul * ul)
        rr = UR[m, 0]
        ur = UR[m, 1] / rr
        pr = (gamma - 1.0) * (UR[m, 2] - 0.5 * rr * ur * ur)
        f0, f1, f2 = _f3_hllc(rl, ul, pl, UL[m, 2], rr, ur, pr, UR[m, 2],
                              am[m], ap[m])
        out[m, 0] = f0
        out[m, 1] = f1
        out[m, 2] = f2


@njit(cache=True, parallel=True)
def tv_batch_3(UL, UR, gamma, outA, outP):
    for m in prange(UL.shape[0]):
        rl = UL[m, 0]
        ul = UL[m, 1] / rl
        pl = (gamma - 1.0) * (UL[m, 2] - 0.5 * rl * ul * ul)
        rr = UR[m, 0]
        ur = UR[m, 1] / rr
        pr = (gamma - 1.0) * (UR[m, 2] - 0.5 * rr * ur * ur)
        a0, a1, a2, p0, p1, p2 = _f3_tv(rl, ul, pl, UL[m, 2],
                                        rr, ur, pr, UR[m, 2], gamma)
        outA[m, 0] = a0
        outA[m, 1] = a1
        outA[m, 2] = a2
        outP[m, 0] = p0
        outP[m, 1] = p1
        outP[m, 2] = p2


@njit(cache=True, parallel=True)
def ldcu_batch_3(UL, UR, am, ap, gamma, out):
    for m in prange(UL.shape[0]):
        rl = UL[m, 0]
        ul = UL[m, 1] / rl
        pl = (gamma - 1.0) * (UL[m, 2] - 0.5 * rl * ul * ul)
        rr = UR[m, 0]
        ur = UR[m, 1] / rr
        pr = (gamma - 1.0) * (UR[m, 2] - 0.5 * rr * ur * ur)
        f0, f1, f2 = _f3_ldcu(rl, ul, pl, UL[m, 2], rr, ur, pr, UR[m, 2],
                              am[m], ap[m])
        out[m, 0] = f0
        out[m, 1] = f1
        out[m, 2] = f2


@njit(cache=True, parallel=True)
def lcdcu_batch_3(UL, UR, Uavg, gamma, eps0, out):
    for m in prange(UL.shape[0]):
        R = np.empty((3, 3))
        Lm = np.empty((3, 3))
        rl = UL[m, 0]
        ul = UL[m, 1] / rl
        pl = (gamma - 1.0) * (UL[m, 2] - 0.5 * rl * ul * ul)
        rr = UR[m, 0]
        ur = UR[m, 1] / rr
        pr = (gamma - 1.0) * (UR[m, 2] - 0.5 * rr * ur * ur)
        ra = Uavg[m, 0]
        ua = Uavg[m, 1] / ra
        pa = (gamma - 1.0) * (Uavg[m, 2] - 0.5 * ra * ua * ua)
        f0, f1, f2 = _f3_lcdcu(rl, ul, pl, UL[m, 2], rr, ur, pr, UR[m, 2],
                               ra, ua, pa, gamma, eps0, R, Lm)
        out[m, 0] = f0
        out[m, 1] = f1
        out[m, 2] = f2


@njit(cache=True, parallel=True)
def hll_batch_4(UL, UR, am, ap, gamma, out):
    for m in prange(UL.shape[0]):
        rl = UL[m, 0]
        unl = UL[m, 1] / rl
        utl = UL[m, 2] / rl
        pl = (gamma - 1.0) * (UL[m, 3] - 0.5 * rl * (unl * unl + utl * utl))
        rr = UR[m, 0]
        unr = UR[m, 1] / rr
        utr = UR[m, 2] / rr
        pr = (gamma - 1.0) * (UR[m, 3] - 0.5 * rr * (unr * unr + utr * utr))
        f0, f1, f2, f3 = _f4_hll(rl, unl, utl, pl, UL[m, 3],
                                 rr, unr, utr, pr, UR[m, 3], am[m], ap[m])
        out[m, 0] = f0
        out[m, 1] = f1
        out[m, 2] = f2
        out[m, 3] = f3


@njit(cache=True, parallel=True)
def hllc_batch_4(UL, UR, am, ap, gamma, out):
    for m in prange(UL.shape[0]):
        rl = UL[m, 0]
        unl = UL[m, 1] / rl
        utl = UL[m, 2] / rl
        pl = (gamma - 1.0) * (UL[m, 3] - 0.5 * rl * (unl * unl + utl * utl))
        rr = UR[m, 0]
        unr = UR[m, 1] / rr
        utr = UR[m, 2] / rr
        pr = (gamma - 1.0) * (UR[m, 3] - 0.5 * rr * (unr * unr + utr * utr))
        f0, f1, f2, f3 = _f4_hllc(rl, unl, utl, pl, UL[m, 3],
                                  rr, unr, utr, pr, UR[m, 3], am[m], ap[m])
        out[m, 0] = f0
        out[m, 1] = f1
        out[m, 2] = f2
        out[m, 3] = f3


@njit(cache=True, parallel=True)
def tv_batch_4(UL, UR, gamma, outA, outP):
    for m in prange(UL.shape[0]):
        rl = UL[m, 0]
        unl = UL[m, 1] / rl
        utl = UL[m, 2] / rl
        pl = (gamma - 1.0) * (UL[m, 3] - 0.5 * rl * (unl * unl + utl * utl))
        rr = UR[m, 0]
        unr = UR[m, 1] / rr
        utr = UR[m, 2] / rr
        pr = (gamma - 1.0) * (UR[m, 3] - 0.5 * rr * (unr * unr + utr * utr))
        a0, a1, a2, a3, p0, p1, p2, p3 = _f4_tv(
            rl, unl, utl, pl, UL[m, 3], rr, unr, utr, pr, UR[m, 3], gamma)
        outA[m, 0] = a0
        outA[m, 1] = a1
        outA[m, 2] = a2
        outA[m, 3] = a3
        outP[m, 0] = p0
        outP[m, 1] = p1
        outP[m, 2] = p2
        outP[m, 3] = p3


@njit(cache=True, parallel=True)
def ldcu_batch_4(UL, UR, am, ap, gamma, out):
    for m in prange(UL.shape[0]):
        rl = UL[m, 0]
        unl = UL[m, 1] / rl
        utl = UL[m, 2] / rl
        pl = (gamma - 1.0) * (UL[m, 3] - 0.5 * rl * (unl * unl + utl * utl))
        rr = UR[m, 0]
        unr = UR[m, 1] / rr
        utr = UR[m, 2] / rr
        pr = (gamma - 1.0) * (UR[m, 3] - 0.5 * rr * (unr * unr + utr * utr))
        f0, f1, f2, f3 = _f4_ldcu(rl, unl, utl, pl, UL[m, 3],
                                  rr, unr, utr, pr, UR[m, 3], am[m], ap[m])
        out[m, 0] = f0
        out[m, 1] = f1
        out[m, 2] = f2
        out[m, 3] = f3


@njit(cache=True, parallel=True)
def lcdcu_batch_4(UL, UR, Uavg, gamma, eps0, out):
    for m in prange(UL.shape[0]):
        R = np.empty((4, 4))
        Lm = np.empty((4, 4))
        rl = UL[m, 0]
        unl = UL[m, 1] / rl
        utl = UL[m, 2] / rl
        pl = (gamma - 1.0) * (UL[m, 3] - 0.5 * rl * (unl * unl + utl * utl))
        rr = UR[m, 0]
        unr = UR[m, 1] / rr
        utr = UR[m, 2] / rr
        pr = (gamma - 1.0) * (UR[m, 3] - 0.5 * rr * (unr * unr + utr * utr))
        ra = Uavg[m, 0]
        una = Uavg[m, 1] / ra
        uta = Uavg[m, 2] / ra
        pa = (gamma - 1.0) * (Uavg[m, 3] - 0.5 * ra * (una * una + uta * uta))
        f0, f1, f2, f3 = _f4_lcdcu(rl, unl, utl, pl, UL[m, 3],
                                   rr, unr, utr, pr, UR[m, 3],
                                   ra, una, uta, pa, gamma, eps0, R, Lm)
        out[m, 0] = f0
        out[m, 1] = f1
        out[m, 2] = f2
        out[m, 3] = f3


# ---------------------------------------------------------------------------
# fused solver passes: reconstruction + validity + flux in one sweep
# ---------------------------------------------------------------------------

@njit(cache=True, parallel=True, fastmath=_FM)
def pass_fv_3(W, scheme, order, gamma, theta, eps0, klo, khi, F):
    """FV interface fluxes for 1-D lines W (L, T, 3), orders 1-2.

    Fills F (L, K, 3); returns the encoded index (line*T + cell) of the
    first invalid *cell* state, or -1.
    """
    L, T, _ = W.shape
    K = khi - klo + 1
    bad = L * T
    for l in prange(L):
        R = np.empty((3, 3))
        Lm = np.empty((3, 3))
        for k in range(klo, khi + 1):
            rl = W[l, k - 1, 0]
            ml = W[l, k - 1, 1]
            El = W[l, k - 1, 2]
            rr = W[l, k, 0]
            mr = W[l, k, 1]
            Er = W[l, k, 2]
            if order == 2:
                dm0 = W[l, k - 1, 0] - W[l, k - 2, 0]
                dp0 = W[l, k, 0] - W[l, k - 1, 0]
                dm1 = W[l, k - 1, 1] - W[l, k - 2, 1]
                dp1 = W[l, k, 1] - W[l, k - 1, 1]
                dm2 = W[l, k - 1, 2] - W[l, k - 2, 2]
                dp2 = W[l, k, 2] - W[l, k - 1, 2]
                sl0 = _minmod3(theta * dm0, 0.5 * (dm0 + dp0), theta * dp0)
                sl1 = _minmod3(theta * dm1, 0.5 * (dm1 + dp1), theta * dp1)
                sl2 = _minmod3(theta * dm2, 0.5 * (dm2 + dp2), theta * dp2)
                rl2 = rl + 0.5 * sl0
                ml2 = ml + 0.5 * sl1
                El2 = El + 0.5 * sl2
                dm0 = dp0
                dp0 = W[l, k + 1, 0] - W[l, k, 0]
                dm1 = dp1
                dp1 = W[l, k + 1, 1] - W[l, k, 1]
                dm2 = dp2
                dp2 = W[l, k + 1, 2] - W[l, k, 2]
                sr0 = _minmod3(theta * dm0, 0.5 * (dm0 + dp0), theta * dp0)
                sr1 = _minmod3(theta * dm1, 0.5 * (dm1 + dp1), theta * dp1)
                sr2 = _minmod3(theta * dm2, 0.5 * (dm2 + dp2), theta * dp2)
                rr2 = rr - 0.5 * sr0
                mr2 = mr - 0.5 * sr1
                Er2 = Er - 0.5 * sr2
                # positivity fallback: revert a side to its cell value
                ul2 = ml2 / rl2 if rl2 > 0.0 else 0.0
                pl2 = (gamma - 1.0) * (El2 - 0.5 * rl2 * ul2 * ul2)
                if rl2 > 0.0 and pl2 > 0.0:
                    rl, ml, El = rl2, ml2, El2
                ur2 = mr2 / rr2 if rr2 > 0.0 else 0.0
                pr2 = (gamma - 1.0) * (Er2 - 0.5 * rr2 * ur2 * ur2)
                if rr2 > 0.0 and pr2 > 0.0:
                    rr, mr, Er = rr2, mr2, Er2
            ul = ml / rl
            pl = (gamma - 1.0) * (El - 0.5 * rl * ul * ul)
            ur = mr / rr
            pr = (gamma - 1.0) * (Er - 0.5 * rr * ur * ur)
            if not (rl > 0.0 and pl > 0.0):
                bad = min(bad, l * T + (k - 1))
                continue
            if not (rr > 0.0 and pr > 0.0):
                bad = min(bad, l * T + k)
                continue
            f0, f1, f2 = _dispatch3(scheme, rl, ul, pl, El,
                                    rr, ur, pr, Er, gamma, eps0, R, Lm)
            F[l, k - klo, 0] = f0
            F[l, k - klo, 1] = f1
            F[l, k - klo, 2] = f2
    return -1 if bad == L * T else bad


@njit(cache=True, parallel=True, fastmath=_FM)
def pass_fv_4(W, iu, iv, scheme, order, gamma, theta, eps0, klo, khi, F):
    """FV directional interface fluxes for 2-D lines W (L, T, 4).

    W is a (possibly strided) view in natural component order; iu/iv
    select the normal/tangential momentum components.  F rows come out
    in directional order (mass, m_n, m_t, E).
    """
    L, T, _ = W.shape
    K = khi - klo + 1
    bad = L * T
    for l in prange(L):
        R = np.empty((4, 4))
        Lm = np.empty((4, 4))
        for k in range(klo, khi + 1):
            rl = W[l, k - 1, 0]
            mnl = W[l, k - 1, iu]
            mtl = W[l, k - 1, iv]
            El = W[l, k - 1, 3]
            rr = W[l, k, 0]
            mnr = W[l, k, iu]
            mtr = W[l, k, iv]
            Er = W[l, k, 3]
            if order == 2:
                dm0 = rl - W[l, k - 2, 0]
                dp0 = rr - rl
                dm1 = mnl - W[l, k - 2, iu]
                dp1 = mnr - mnl
                dm2 = mtl - W[l, k - 2, iv]
                dp2 = mtr - mtl
                dm3 = El - W[l, k - 2, 3]
                dp3 = Er - El
                rl2 = rl + 0.5 * _minmod3(theta * dm0, 0.5 * (dm0 + dp0), theta * dp0)
                mnl2 = mnl + 0.5 * _minmod3(theta * dm1, 0.5 * (dm1 + dp1), theta * dp1)
                mtl2 = mtl + 0.5 * _minmod3(theta * dm2, 0.5 * (dm2 + dp2), theta * dp2)
                El2 = El + 0.5 * _minmod3(theta * dm3, 0.5 * (dm3 + dp3), theta * dp3)
                em0 = W[l, k + 1, 0] - rr
                em1 = W[l, k + 1, iu] - mnr
                em2 = W[l, k + 1, iv] - mtr
                em3 = W[l, k + 1, 3] - Er
                rr2 = rr - 0.5 * _minmod3(theta * dp0, 0.5 * (dp0 + em0), theta * em0)
                mnr2 = mnr - 0.5 * _minmod3(theta * dp1, 0.5 * (dp1 + em1), theta * em1)
                mtr2 = mtr - 0.5 * _minmod3(theta * dp2, 0.5 * (dp2 + em2), theta * em2)
                Er2 = Er - 0.5 * _minmod3(theta * dp3, 0.5 * (dp3 + em3), theta * em3)
                if rl2 > 0.0:
                    unl2 = mnl2 / rl2
                    utl2 = mtl2 / rl2
                    pl2 = (gamma - 1.0) * (El2 - 0.5 * rl2 * (unl2 * unl2 + utl2 * utl2))
                    if pl2 > 0.0:
                        rl, mnl, mtl, El = rl2, mnl2, mtl2, El2
                if rr2 > 0.0:
                    unr2 = mnr2 / rr2
                    utr2 = mtr2 / rr2
                    pr2 = (gamma - 1.0) * (Er2 - 0.5 * rr2 * (unr2 * unr2 + utr2 * utr2))
                    if pr2 > 0.0:
                        rr, mnr, mtr, Er = rr2, mnr2, mtr2, Er2
            unl = mnl / rl
            utl = mtl / rl
            pl = (gamma - 1.0) * (El - 0.5 * rl * (unl * unl + utl * utl))
            unr = mnr / rr
            utr = mtr / rr
            pr = (gamma - 1.0) * (Er - 0.5 * rr * (unr * unr + utr * utr))
            if not (rl > 0.0 and pl > 0.0):
                bad = min(bad, l * T + (k - 1))
                continue
            if not (rr > 0.0 and pr > 0.0):
                bad = min(bad, l * T + k)
                continue
            f0, f1, f2, f3 = _dispatch4(scheme, rl, unl, utl, pl, El,
                                        rr, unr, utr, pr, Er, gamma, eps0, R, Lm)
            F[l, k - klo, 0] = f0
            F[l, k - klo, 1] = f1
            F[l, k - klo, 2] = f2
            F[l, k - klo, 3] = f3
    return -1 if bad == L * T else bad


@njit(cache=True, parallel=True, fastmath=_FM)
def pass_weno_3(W, scheme, use5, gamma, eps0, weps, klo, khi, F):
    """A-WENO interface fluxes for 1-D lines W (L, T, 3), orders 3/5."""
    L, T, _ = W.shape
    bad = L * T
    for l in prange(L):
        R = np.empty((3, 3))
        Lm = np.empty((3, 3))
        RB = np.empty((3, 3))
        LB = np.empty((3, 3))
        ch = np.empty((6, 3))
        vl = np.empty(3)
        vr = np.empty(3)
        for k in range(klo, khi + 1):
            rl = W[l, k - 1, 0]
            ml = W[l, k - 1, 1]
            El = W[l, k - 1, 2]
            rr = W[l, k, 0]
            mr = W[l, k, 1]
            Er = W[l, k, 2]
            ulc = ml / rl
            plc = (gamma - 1.0) * (El - 0.5 * rl * ulc * ulc)
            if not (rl > 0.0 and plc > 0.0):
                bad = min(bad, l * T + (k - 1))
                continue
            urc = mr / rr
            prc = (gamma - 1.0) * (Er - 0.5 * rr * urc * urc)
            if not (rr > 0.0 and prc > 0.0):
                bad = min(bad, l * T + k)
                continue
            ra = 0.5 * (rl + rr)
            ua = 0.5 * (ml + mr) / ra
            pa = (gamma - 1.0) * (0.5 * (El + Er) - 0.5 * ra * ua * ua)
            _fill_basis3(ra, ua, pa, gamma, RB, LB)
            if use5:
                npts = 6
                s0 = k - 3
            else:
                npts = 4
                s0 = k - 2
            for s in range(npts):
                for i in range(3):
                    ch[s, i] = (LB[i, 0] * W[l, s0 + s, 0]
                                + LB[i, 1] * W[l, s0 + s, 1]
                                + LB[i, 2] * W[l, s0 + s, 2])
            for i in range(3):
                if use5:
                    vl[i] = _weno5_left(ch[0, i], ch[1, i], ch[2, i], ch[3, i], ch[4, i])
                    vr[i] = _weno5_left(ch[5, i], ch[4, i], ch[3, i], ch[2, i], ch[1, i])
                else:
                    vl[i] = _weno3_left(ch[0, i], ch[1, i], ch[2, i], weps)
                    vr[i] = _weno3_left(ch[3, i], ch[2, i], ch[1, i], weps)
            r1 = RB[0, 0] * vl[0] + RB[0, 1] * vl[1] + RB[0, 2] * vl[2]
            m1 = RB[1, 0] * vl[0] + RB[1, 1] * vl[1] + RB[1, 2] * vl[2]
            E1 = RB[2, 0] * vl[0] + RB[2, 1] * vl[1] + RB[2, 2] * vl[2]
            r2 = RB[0, 0] * vr[0] + RB[0, 1] * vr[1] + RB[0, 2] * vr[2]
            m2 = RB[1, 0] * vr[0] + RB[1, 1] * vr[1] + RB[1, 2] * vr[2]
            E2 = RB[2, 0] * vr[0] + RB[2, 1] * vr[1] + RB[2, 2] * vr[2]
            # positivity fallback to the adjacent cell values
            ok = r1 > 0.0
            if ok:
                u1 = m1 / r1
                ok = (gamma - 1.0) * (E1 - 0.5 * r1 * u1 * u1) > 0.0
            if not ok:
                r1, m1, E1 = rl, ml, El
            ok = r2 > 0.0
            if ok:
                u2 = m2 / r2
                ok = (gamma - 1.0) * (E2 - 0.5 * r2 * u2 * u2) > 0.0
            if not ok:
                r2, m2, E2 = rr, mr, Er
            u1 = m1 / r1
            p1 = (gamma - 1.0) * (E1 - 0.5 * r1 * u1 * u1)
            u2 = m2 / r2
            p2 = (gamma - 1.0) * (E2 - 0.5 * r2 * u2 * u2)
            f0, f1, f2 = _dispatch3(scheme, r1, u1, p1, E1,
                                    r2, u2, p2, E2, gamma, eps0, R, Lm)
            F[l, k - klo, 0] = f0
            F[l, k - klo, 1] = f1
            F[l, k - klo, 2] = f2
    return -1 if bad == L * T else bad


@njit(cache=True, parallel=True, fastmath=_FM)
def pass_weno_4(W, iu, iv, scheme, use5, gamma, eps0, weps, klo, khi, F):
    """A-WENO directional interface fluxes for 2-D lines W (L, T, 4)."""
    L, T, _ = W.shape
    bad = L * T
    for l in prange(L):
        R = np.empty((4, 4))
        Lm = np.empty((4, 4))
        RB = np.empty((4, 4))
        LB = np.empty((4, 4))
        ch = np.empty((6, 4))
        vl = np.empty(4)
        vr = np.empty(4)
        for k in range(klo, khi + 1):
            rl = W[l, k - 1, 0]
            mnl = W[l, k - 1, iu]
            mtl = W[l, k - 1, iv]
            El = W[l, k - 1, 3]
            rr = W[l, k, 0]
            mnr = W[l, k, iu]
            mtr = W[l, k, iv]
            Er = W[l, k, 3]
            unl = mnl / rl
            utl = mtl / rl
            plc = (gamma - 1.0) * (El - 0.5 * rl * (unl * unl + utl * utl))
            if not (rl > 0.0 and plc > 0.0):
                bad = min(bad, l * T + (k - 1))
                continue
            unr = mnr / rr
            utr = mtr / rr
            prc = (gamma - 1.0) * (Er - 0.5 * rr * (unr * unr + utr * utr))
            if not (rr > 0.0 and prc > 0.0):
                bad = min(bad, l * T + k)
                continue
            ra = 0.5 * (rl + rr)
            una = 0.5 * (mnl + mnr) / ra
            uta = 0.5 * (mtl + mtr) / ra
            pa = (gamma - 1.0) * (0.5 * (El + Er)
                                  - 0.5 * ra * (una * una + uta * uta))
            _fill_basis4(ra, una, uta, pa, gamma, RB, LB)
            if use5:
                npts = 6
                s0 = k - 3
            else:
                npts = 4
                s0 = k - 2
            for s in range(npts):
                w0 = W[l, s0 + s, 0]
                w1 = W[l, s0 + s, iu]
                w2 = W[l, s0 + s, iv]
                w3 = W[l, s0 + s, 3]
                for i in range(4):
                    ch[s, i] = (LB[i, 0] * w0 + LB[i, 1] * w1
                                + LB[i, 2] * w2 + LB[i, 3] * w3)
            for i in range(4):
                if use5:
                    vl[i] = _weno5_left(ch[0, i], ch[1, i], ch[2, i], ch[3, i], ch[4, i])
                    vr[i] = _weno5_left(ch[5, i], ch[4, i], ch[3, i], ch[2, i], ch[1, i])
                else:
                    vl[i] = _weno3_left(ch[0, i], ch[1, i], ch[2, i], weps)
                    vr[i] = _weno3_left(ch[3, i], ch[2, i], ch[1, i], weps)
            r1 = RB[0, 0] * vl[0] + RB[0, 1] * vl[1] + RB[0, 2] * vl[2] + RB[0, 3] * vl[3]
            mn1 = RB[1, 0] * vl[0] + RB[1, 1] * vl[1] + RB[1, 2] * vl[2] + RB[1, 3] * vl[3]
            mt1 = RB[2, 0] * vl[0] + RB[2, 1] * vl[1] + RB[2, 2] * vl[2] + RB[2, 3] * vl[3]
            E1 = RB[3, 0] * vl[0] + RB[3, 1] * vl[1] + RB[3, 2] * vl[2] + RB[3, 3] * vl[3]
            r2 = RB[0, 0] * vr[0] + RB[0, 1] * vr[1] + RB[0, 2] * vr[2] + RB[0, 3] * vr[3]
            mn2 = RB[1, 0] * vr[0] + RB[1, 1] * vr[1] + RB[1, 2] * vr[2] + RB[1, 3] * vr[3]
            mt2 = RB[2, 0] * vr[0] + RB[2, 1] * vr[1] + RB[2, 2] * vr[2] + RB[2, 3] * vr[3]
            E2 = RB[3, 0] * vr[0] + RB[3, 1] * vr[1] + RB[3, 2] * vr[2] + RB[3, 3] * vr[3]
            ok = r1 > 0.0
            if ok:
                a1 = mn1 / r1
                b1 = mt1 / r1
                ok = (gamma - 1.0) * (E1 - 0.5 * r1 * (a1 * a1 + b1 * b1)) > 0.0
            if not ok:
                r1, mn1, mt1, E1 = rl, mnl, mtl, El
            ok = r2 > 0.0
            if ok:
                a2 = mn2 / r2
                b2 = mt2 / r2
                ok = (gamma - 1.0) * (E2 - 0.5 * r2 * (a2 * a2 + b2 * b2)) > 0.0
            if not ok:
                r2, mn2, mt2, E2 = rr, mnr, mtr, Er
            un1 = mn1 / r1
            ut1 = mt1 / r1
            p1 = (gamma - 1.0) * (E1 - 0.5 * r1 * (un1 * un1 + ut1 * ut1))
            un2 = mn2 / r2
            ut2 = mt2 / r2
            p2 = (gamma - 1.0) * (E2 - 0.5 * r2 * (un2 * un2 + ut2 * ut2))
            f0, f1, f2, f3 = _dispatch4(scheme, r1, un1, ut1, p1, E1,
                                        r2, un2, ut2, p2, E2, gamma, eps0, R, Lm)
            F[l, k - klo, 0] = f0
            F[l, k - klo, 1] = f1
            F[l, k - klo, 2] = f2
            F[l, k - klo, 3] = f3
    return -1 if bad == L * T else bad


# ---------------------------------------------------------------------------
# rate accumulation, field scans, and time-stepping updates
# ---------------------------------------------------------------------------

@njit(cache=True, parallel=True, fastmath=_FM)
def rate_x_4(H, dxn, rate):
    """rate[i, l, :] -= (H[l, i+1, :] - H[l, i, :]) / dxn; H directional=(x)."""
    ny, K, _ = H.shape
    nx = K - 1
    for i in prange(nx):
        for l in range(ny):
            rate[i, l, 0] -= (H[l, i + 1, 0] - H[l, i, 0]) / dxn
            rate[i, l, 1] -= (H[l, i + 1, 1] - H[l, i, 1]) / dxn
            rate[i, l, 2] -= (H[l, i + 1, 2] - H[l, i, 2]) / dxn
            rate[i, l, 3] -= (H[l, i + 1, 3] - H[l, i, 3]) / dxn


@njit(cache=True, parallel=True, fastmath=_FM)
def rate_y_4(H, dyn, rate):
    """rate[l, j, :] -= (H[l, j+1, :] - H[l, j, :]) / dyn with the
    directional components (mass, m_y, m_x, E) mapped back."""
    nx, K, _ = H.shape
    ny = K - 1
    for l in prange(nx):
        for j in range(ny):
            rate[l, j, 0] -= (H[l, j + 1, 0] - H[l, j, 0]) / dyn
            rate[l, j, 2] -= (H[l, j + 1, 1] - H[l, j, 1]) / dyn
            rate[l, j, 1] -= (H[l, j + 1, 2] - H[l, j, 2]) / dyn
            rate[l, j, 3] -= (H[l, j + 1, 3] - H[l, j, 3]) / dyn


@njit(cache=True, parallel=True)
def scan_2d(U, g, nx, ny, gamma):
    """One pass over the interior: (min_rho, min_p, s_x, s_y, bad)."""
    minr = 1e300
    minp = 1e300
    sx = 0.0
    sy = 0.0
    bad = nx * ny
    for i in prange(nx):
        for j in range(ny):
            rho = U[g + i, g + j, 0]
            mx = U[g + i, g + j, 1]
            my = U[g + i, g + j, 2]
            E = U[g + i, g + j, 3]
            tot = rho + mx + my + E
            if not np.isfinite(tot) or not (rho > 0.0):
                bad = min(bad, i * ny + j)
                continue
            u = mx / rho
            v = my / rho
            p = (gamma - 1.0) * (E - 0.5 * rho * (u * u + v * v))
            if not (p > 0.0):
                bad = min(bad, i * ny + j)
                continue
            c = np.sqrt(gamma * p / rho)
            minr = min(minr, rho)
            minp = min(minp, p)
            sx = max(sx, abs(u) + c)
            sy = max(sy, abs(v) + c)
    return minr, minp, sx, sy, -1 if bad == nx * ny else bad


@njit(cache=True, parallel=True)
def scan_1d(U, g, nx, gamma):
    minr = 1e300
    minp = 1e300
    sx = 0.0
    bad = nx
    for i in prange(nx):
        rho = U[g + i, 0]
        m = U[g + i, 1]
        E = U[g + i, 2]
        tot = rho + m + E
        if not np.isfinite(tot) or not (rho > 0.0):
            bad = min(bad, i)
            continue
        u = m / rho
        p = (gamma - 1.0) * (E - 0.5 * rho * u * u)
        if not (p > 0.0):
            bad = min(bad, i)
            continue
        c = np.sqrt(gamma * p / rho)
        minr = min(minr, rho)
        minp = min(minp, p)
        sx = max(sx, abs(u) + c)
    return minr, minp, sx, 0.0, -1 if bad == nx else bad


@njit(cache=True, parallel=True, fastmath=_FM)
def rk_combine_2d(U, U0, L, dt, c0, c1):
    """U = c0*U0 + c1*(U + dt*L) on (nx, ny, nv) views."""
    nx, ny, nv = U.shape
    for i in prange(nx):
        for j in range(ny):
            for c in range(nv):
                U[i, j, c] = c0 * U0[i, j, c] + c1 * (U[i, j, c] + dt * L[i, j, c])


@njit(cache=True, parallel=True, fastmath=_FM)
def rk_combine_1d(U, U0, L, dt, c0, c1):
    nx, nv = U.shape
    for i in prange(nx):
        for c in range(nv):
            U[i, c] = c0 * U0[i, c] + c1 * (U[i, c] + dt * L[i, c])
