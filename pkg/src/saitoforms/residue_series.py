"""Higher residue pairings for univariate models, as exact t-series.

Two closed-form kernels are implemented:

* A_m, f = z^(m+1)/(m+1), volume form dz:
      K(a, b) = sum_r (-t)^r Res_0( b (1/f') D^r(a) dz ),
      D(g) = d/dz (g / f'),
  whose single-argument specialization is the classical product formula
      sum_r (-t)^r prod_{k<r}(m + k(m+1)) Res_0( h dz / z^(r(m+1)+m) ).

* the P^1 mirror f = z + q/z, volume form dz/z:
      K(a, b) = sum_r t^r (Res_0 + Res_inf)( b (1/(z^2-q)) D^r(a) dz ),
      D(g) = z d/dz ( z g / (z^2 - q) ),
  where all rational functions have denominator a power of P = z^2 - q,
  so both residues are computed from exact finite series expansions.

Values are dicts {t_power: Fraction}; by convention K(a,b)(t)
equals K(b,a)(-t).
"""

from fractions import Fraction

from .mpoly import MPoly


def _as_laurent_dict(h):
    if isinstance(h, MPoly):
        if len(h.variables) != 1:
            raise ValueError("univariate pairing needs one variable")
        return {e[0]: c for e, c in h.terms.items()}
    return {int(e): Fraction(c) for e, c in dict(h).items() if c}


def _lau_mul(a, b):
    out = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = e1 + e2
            c = out.get(e, 0) + c1 * c2
            if c:
                out[e] = c
            elif e in out:
                del out[e]
    return out


def _lau_diff(a):
    return {e - 1: c * e for e, c in a.items() if e}


def _lau_shift(a, k):
    return {e + k: c for e, c in a.items()}


def _lau_scale(a, s):
    return {e: c * s for e, c in a.items()} if s else {}


def higher_residue_Am(h, m, t_order):
    """Closed-form higher residue of a single class in the A_m model."""
    h = _as_laurent_dict(h)
    out = {}
    product = Fraction(1)
    for r in range(t_order + 1):
        # Res_0(h dz / z^(r(m+1)+m)) is the z^(r(m+1)+m-1) coefficient.
        coeff = h.get(r * (m + 1) + m - 1, Fraction(0))
        value = product * coeff * (-1) ** r
        if value:
            out[r] = value
        product *= m + r * (m + 1)
    return out


def pairing_univariate_Am(a, b, m, t_order):
    """K(a, b) for the A_m model through order t^t_order."""
    a = _as_laurent_dict(a)
    b = _as_laurent_dict(b)
    out = {}
    g = dict(a)
    for r in range(t_order + 1):
        integrand = _lau_mul(b, _lau_shift(g, -m))
        value = integrand.get(-1, Fraction(0)) * (-1) ** r
        if value:
            out[r] = value
        g = _lau_diff(_lau_shift(g, -m))
    return out


def _p1_res0(num, q, k):
    """Res_0 of num / (z^2 - q)^k dz, num a Laurent polynomial."""
    lo = min(num, default=0)
    depth = -1 - lo
    if depth < 0:
        return Fraction(0)
    # (z^2 - q)^(-k) = (-q)^(-k) (1 - z^2/q)^(-k)
    series = {}
    x = Fraction(1, 1)
    binom = Fraction(1)
    j = 0
    while 2 * j <= depth:
        series[2 * j] = binom * x
        j += 1
        binom = binom * (k + j - 1) / j
        x /= q
    scale = Fraction(1) / (-q) ** k
    total = Fraction(0)
    for e, c in num.items():
        s = series.get(-1 - e)
        if s is not None:
            total += c * s * scale
    return total


def _p1_res_inf(num, q, k):
    """Residue at infinity of num / (z^2 - q)^k dz."""
    hi = max(num, default=0)
    depth = hi - 2 * k + 1
    if depth < 0:
        return Fraction(0)
    # (z^2 - q)^(-k) = z^(-2k) (1 - q z^(-2))^(-k)
    series = {}
    x = Fraction(1)
    binom = Fraction(1)
    j = 0
    while 2 * j <= depth:
        series[2 * j] = binom * x
        j += 1
        binom = binom * (k + j - 1) / j
        x *= q
    total = Fraction(0)
    for e, c in num.items():
        # coefficient of z^(-1): need e - 2k - 2j == -1
        s = series.get(e - 2 * k + 1)
        if s is not None:
            total += c * s
    return -total


def pairing_univariate_p1(a, b, q, t_order):
    """K(a, b) for the P^1 mirror through order t^t_order."""
    q = Fraction(q)
    a = _as_laurent_dict(a)
    b = _as_laurent_dict(b)
    out = {}
    num, k = dict(a), 0          # current D^r(a) = num / P^k
    for r in range(t_order + 1):
        integrand = _lau_mul(b, num)
        value = _p1_res0(integrand, q, k + 1) + _p1_res_inf(integrand, q, k + 1)
        if value:
            out[r] = value
        # D: (num, k) -> ( z(num + z num')P - 2(k+1) z^3 num, k + 2 )
        zn = _lau_shift(num, 1)
        zdn = _lau_shift(_lau_mul({0: Fraction(1)}, _lau_diff(num)), 2)
        part = {}
        for term in (zn, zdn):
            for e, c in term.items():
                c0 = part.get(e, 0) + c
                if c0:
                    part[e] = c0
                elif e in part:
                    del part[e]
        p_poly = {2: Fraction(1), 0: -q}
        new = _lau_mul(part, p_poly)
        sub = _lau_scale(_lau_shift(num, 3), Fraction(2 * (k + 1)))
        for e, c in sub.items():
            c0 = new.get(e, 0) - c
            if c0:
                new[e] = c0
            elif e in new:
                del new[e]
        num, k = new, k + 2
    return out


def pairing_univariate(a, b, t_order, m=None, q=None):
    """Dispatch on the model: pass m for A_m, q for the P^1 mirror."""
    if (m is None) == (q is None):
        raise ValueError("specify exactly one of m (A_m) or q (P^1 mirror)")
    if m is not None:
        return pairing_univariate_Am(a, b, m, t_order)
    return pairing_univariate_p1(a, b, q, t_order)
