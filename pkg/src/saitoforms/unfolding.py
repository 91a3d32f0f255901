"""Universal unfoldings, opposite-filtration basis changes, and
oscillator matrices.

The unfolding F = f + sum_j psi_j(u) phi_j is truncated at total
u-degree N. Oscillator matrices A^(k)(u) collect the t^k component of
the reduced classes e^((F-f)/t) Phi_i = sum_{j,k} A^(k)_ij t^k Phi_j.
"""

import math
from fractions import Fraction

from . import linalg
from .brieskorn import ReducedClass, reduce_ring_poly
from .truncated import UnfoldRingElem


class GradingViolation(Exception):
    pass


class OppositeFiltration:
    """Basis change Phi_i = phi_i + sum_j c_ij t^(r(i,j)) phi_j for a
    point c of the moduli of good opposite filtrations."""

    def __init__(self, base, c=None):
        self.base = base
        mu = base.mu
        self.c = {}
        mat = linalg.identity(mu)
        for (i, j), value in (c or {}).items():
            value = Fraction(value)
            if not value:
                continue
            r = base.degrees[i - 1] - base.degrees[j - 1]
            if r.denominator != 1 or r <= 0:
                raise GradingViolation(
                    "c[%d,%d] requires degree gap in Z_>0, got %s" % (i, j, r))
            self.c[(i, j)] = value
            mat[i - 1][j - 1] = value
        self.mat = mat
        self.inv = linalg.mat_inv(mat)

    def is_trivial(self):
        return not self.c

    def t_power(self, i, j):
        """Integer t-exponent attached to the (i, j) matrix slot."""
        r = self.base.degrees[i] - self.base.degrees[j]
        if r.denominator != 1:
            raise GradingViolation("non-integer t-power between phi_%d and "
                                   "phi_%d" % (i + 1, j + 1))
        return int(r)

    def rows_to_upper(self, rows):
        """Given reduced rows for phi_i, return reduced rows for Phi_i."""
        mu = self.base.mu
        out = []
        for i in range(mu):
            row = ReducedClass(mu)
            for j in range(mu):
                if self.mat[i][j]:
                    row.add_scaled(rows[j], self.mat[i][j],
                                   self.t_power(i, j))
            out.append(row.compress())
        return out

    def coords_to_upper(self, reduced):
        """Rewrite a reduced class from phi coordinates into Phi
        coordinates (right-multiplication by the inverse basis change)."""
        mu = self.base.mu
        out = ReducedClass(mu)
        for k, vec in reduced.coeffs.items():
            for l in range(mu):
                if not _nz(vec[l]):
                    continue
                for j in range(mu):
                    if self.inv[l][j]:
                        tgt = out.coeffs.setdefault(
                            k + self.t_power(l, j), [0] * mu)
                        tgt[j] = tgt[j] + vec[l] * self.inv[l][j]
        return out.compress()

    def coords_to_phi(self, reduced):
        mu = self.base.mu
        out = ReducedClass(mu)
        for k, vec in reduced.coeffs.items():
            for j in range(mu):
                if not _nz(vec[j]):
                    continue
                for l in range(mu):
                    if self.mat[j][l]:
                        tgt = out.coeffs.setdefault(
                            k + self.t_power(j, l), [0] * mu)
                        tgt[l] = tgt[l] + vec[j] * self.mat[j][l]
        return out.compress()


def _nz(c):
    return bool(c) if isinstance(c, (int, Fraction)) else not c.is_zero()


class UnfoldingData:
    """A truncated universal unfolding of one singularity."""

    def __init__(self, base, N, indices, u_names, coeffs, override):
        self.base = base
        self.N = N
        self.indices = indices        # 0-based basis positions with parameters
        self.u_names = u_names
        self.nu = len(indices)
        self.coeffs = coeffs          # UnfoldRingElem per index
        self.override = override
        self.deg_u = [1 - base.degrees[j] for j in indices]
        self.f_diff = {}              # z-exponent -> UnfoldRingElem, F - f
        for j, coeff in zip(indices, coeffs):
            for exp, c in base.basis[j].terms.items():
                prior = self.f_diff.get(exp)
                term = coeff * c
                self.f_diff[exp] = term if prior is None else prior + term
        self.laurent = base.mode == "laurent"
        self._exp_powers = None

    def ring_zero(self):
        return UnfoldRingElem.zero(self.nu, self.N)

    def ring_one(self):
        return UnfoldRingElem.constant(self.nu, self.N, 1)

    def u_degree(self, exp):
        """Graded weight of a u-monomial (sum alpha_l deg u_l)."""
        return sum(d * e for d, e in zip(self.deg_u, exp))

    def exp_powers(self):
        """[(F-f)^k / k! as z-exp -> ring dicts, k = 0..N]."""
        if self._exp_powers is None:
            powers = [{tuple([0] * self.base.n): self.ring_one()}]
            for k in range(1, self.N + 1):
                prev = powers[-1]
                nxt = {}
                inv_k = Fraction(1, k)
                for e1, c1 in prev.items():
                    for e2, c2 in self.f_diff.items():
                        c = c1 * c2
                        if c.is_zero():
                            continue
                        e = tuple(a + b for a, b in zip(e1, e2))
                        prior = nxt.get(e)
                        nxt[e] = c if prior is None else prior + c
                powers.append({e: c * inv_k for e, c in nxt.items()
                               if not c.is_zero()})
            self._exp_powers = powers
        return self._exp_powers

    def truncate(self, M):
        """The same unfolding at a smaller truncation order."""
        coeffs = [c.truncate(M) for c in self.coeffs]
        return UnfoldingData(self.base, M, list(self.indices),
                             list(self.u_names), coeffs, self.override)


def build_unfolding(base, N, mask=None, overrides=None, u_names=None):
    """Construct the truncated universal unfolding.

    mask: 1-based basis indices that carry a parameter (default: all).
    overrides: {1-based index: callable(elem) -> elem} replacing the
        default linear coefficient u_j by a series in it (used for the
        exponentiated P^1 direction).
    u_names: display names, default u1..u_mu keyed by basis position.
    """
    mu = base.mu
    if mask is None:
        indices = list(range(mu))
    else:
        indices = sorted(i - 1 for i in mask)
        if any(i < 0 or i >= mu for i in indices):
            raise ValueError("mask index out of range")
    if u_names is None:
        u_names = ["u%d" % (i + 1) for i in indices]
    nu = len(indices)
    coeffs = []
    override = False
    for pos, j in enumerate(indices):
        var = UnfoldRingElem.variable(nu, N, pos)
        fn = (overrides or {}).get(j + 1)
        if fn is not None:
            var = fn(var)
            override = True
        coeffs.append(var)
    return UnfoldingData(base, N, indices, u_names, coeffs, override)


class OscillatorData:
    """The family A^(k)(u), k ranging over the t-powers that occur."""

    def __init__(self, unf, filtration, matrices, a):
        self.unf = unf
        self.filtration = filtration
        self.matrices = matrices      # k -> mu x mu matrix of ring elems
        self.a = a

    def matrix(self, k):
        mu = self.unf.base.mu
        m = self.matrices.get(k)
        if m is None:
            zero = self.unf.ring_zero()
            m = [[zero] * mu for _ in range(mu)]
        return m


def positive_bound(base, N):
    """Largest t-power a that can appear in an oscillator matrix."""
    if base.mode == "laurent":
        return 0
    s = base.s
    return max(math.floor(N * (s - 1) + s), math.floor(s))


def oscillator_matrices(unf, c=None, prune=True):
    """Compute the A^(k) family in the Phi(c) basis."""
    base = unf.base
    mu = base.mu
    filtration = c if isinstance(c, OppositeFiltration) else \
        OppositeFiltration(base, c)
    rows = []
    for i in range(mu):
        row = ReducedClass(mu)
        phi = base.basis[i]
        for k, power in enumerate(unf.exp_powers()):
            shifted = {}
            for e1, celem in power.items():
                for e2, cb in phi.terms.items():
                    e = tuple(a + b for a, b in zip(e1, e2))
                    term = celem * cb
                    prior = shifted.get(e)
                    shifted[e] = term if prior is None else prior + term
            row.add_scaled(reduce_ring_poly(base, shifted), 1, -k)
        rows.append(row.compress())
    if not filtration.is_trivial():
        rows = filtration.rows_to_upper(rows)
        rows = [filtration.coords_to_upper(r) for r in rows]
    a = positive_bound(base, unf.N)
    matrices = {}
    zero = unf.ring_zero()
    for i, row in enumerate(rows):
        for k, vec in row.coeffs.items():
            for j in range(mu):
                if not _nz(vec[j]):
                    continue
                if k > a:
                    raise GradingViolation(
                        "t^%d term beyond the bound a=%d at A[%d][%d]"
                        % (k, a, i + 1, j + 1))
                m = matrices.setdefault(k, [[zero] * mu for _ in range(mu)])
                m[i][j] = vec[j] if isinstance(vec[j], UnfoldRingElem) \
                    else UnfoldRingElem.constant(unf.nu, unf.N, vec[j])
    osc = OscillatorData(unf, filtration, matrices, a)
    _check_base_point(osc)
    if not unf.override:
        _check_grading(osc)
    return osc


def _check_base_point(osc):
    """At u = 0 the oscillator family must be the identity at t^0."""
    mu = osc.unf.base.mu
    for k, m in osc.matrices.items():
        for i in range(mu):
            for j in range(mu):
                want = Fraction(1) if (k == 0 and i == j) else Fraction(0)
                if m[i][j].constant_term() != want:
                    raise GradingViolation(
                        "A^(%d)[%d][%d](0) = %s, expected %s"
                        % (k, i + 1, j + 1, m[i][j].constant_term(), want))


def _check_grading(osc):
    """Every u-monomial of A^(k)_ij satisfies
    k + sum(alpha_l deg u_l) + d_j - d_i = 0."""
    unf = osc.unf
    degrees = unf.base.degrees
    for k, m in osc.matrices.items():
        for i, row in enumerate(m):
            for j, elem in enumerate(row):
                for exp in elem.terms:
                    total = k + unf.u_degree(exp) + degrees[j] - degrees[i]
                    if total != 0:
                        raise GradingViolation(
                            "off-grade term u^%r in A^(%d)[%d][%d]"
                            % (exp, k, i + 1, j + 1))
