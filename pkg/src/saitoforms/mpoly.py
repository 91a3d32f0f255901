"""Sparse multivariate polynomials over exact rationals.

Terms are stored as a dict mapping exponent tuples to nonzero Fractions.
Negative exponents are permitted when the polynomial is flagged as Laurent.
Monomial comparisons use graded reverse lexicographic (grevlex) order.
"""

from fractions import Fraction


class PolynomialError(Exception):
    pass


def grevlex_key(exp):
    """Sort key realizing grevlex: compare total degree, then reversed
    exponents with the *smallest* last variable winning ties."""
    return (sum(exp), tuple(-e for e in reversed(exp)))


def monomial_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def monomial_divides(a, b):
    """True if monomial a divides monomial b (componentwise)."""
    return all(x <= y for x, y in zip(a, b))


def monomial_div(b, a):
    """Exponent of monomial b / monomial a."""
    return tuple(x - y for x, y in zip(b, a))


def monomial_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


class MPoly:
    """Polynomial (or Laurent polynomial) in named variables."""

    __slots__ = ("variables", "terms", "laurent")

    def __init__(self, variables, terms=None, laurent=False):
        self.variables = tuple(variables)
        self.laurent = laurent
        clean = {}
        n = len(self.variables)
        if terms:
            for exp, coeff in terms.items():
                exp = tuple(exp)
                if len(exp) != n:
                    raise PolynomialError(
                        "exponent arity %d != %d variables" % (len(exp), n))
                if not laurent and any(e < 0 for e in exp):
                    raise PolynomialError(
                        "negative exponent %r in non-Laurent polynomial" % (exp,))
                c = Fraction(coeff)
                if c:
                    c0 = clean.get(exp)
                    c = c + c0 if c0 is not None else c
                    if c:
                        clean[exp] = c
                    else:
                        del clean[exp]
        self.terms = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, variables, laurent=False):
        return cls(variables, {}, laurent)

    @classmethod
    def constant(cls, variables, c, laurent=False):
        n = len(variables)
        return cls(variables, {(0,) * n: Fraction(c)}, laurent)

    @classmethod
    def variable(cls, name, variables, laurent=False):
        variables = tuple(variables)
        i = variables.index(name)
        exp = tuple(1 if j == i else 0 for j in range(len(variables)))
        return cls(variables, {exp: Fraction(1)}, laurent)

    @classmethod
    def monomial(cls, variables, exp, coeff=1, laurent=False):
        return cls(variables, {tuple(exp): Fraction(coeff)}, laurent)

    # -- predicates ---------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        n = len(self.variables)
        return all(e == (0,) * n for e in self.terms)

    def constant_value(self):
        return self.terms.get((0,) * len(self.variables), Fraction(0))

    def _check(self, other):
        if self.variables != other.variables:
            raise PolynomialError(
                "variable mismatch: %r vs %r" % (self.variables, other.variables))

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MPoly.constant(self.variables, other, self.laurent)
        self._check(other)
        terms = dict(self.terms)
        for exp, c in other.terms.items():
            c0 = terms.get(exp)
            c = c + c0 if c0 is not None else c
            if c:
                terms[exp] = c
            elif exp in terms:
                del terms[exp]
        out = MPoly.__new__(MPoly)
        out.variables = self.variables
        out.laurent = self.laurent or other.laurent
        out.terms = terms
        return out

    __radd__ = __add__

    def __neg__(self):
        out = MPoly.__new__(MPoly)
        out.variables = self.variables
        out.laurent = self.laurent
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MPoly.constant(self.variables, other, self.laurent)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return MPoly.zero(self.variables, self.laurent)
            out = MPoly.__new__(MPoly)
            out.variables = self.variables
            out.laurent = self.laurent
            out.terms = {e: c * v for e, v in self.terms.items()}
            return out
        self._check(other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = monomial_mul(e1, e2)
                c = c1 * c2
                c0 = terms.get(e)
                c = c + c0 if c0 is not None else c
                if c:
                    terms[e] = c
                elif e in terms:
                    del terms[e]
        out = MPoly.__new__(MPoly)
        out.variables = self.variables
        out.laurent = self.laurent or other.laurent
        out.terms = terms
        return out

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise PolynomialError("negative power of a polynomial")
        out = MPoly.constant(self.variables, 1, self.laurent)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MPoly.constant(self.variables, other, self.laurent)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    # -- calculus and structure ---------------------------------------

    def diff(self, var):
        """Partial derivative with respect to a named variable or index."""
        i = var if isinstance(var, int) else self.variables.index(var)
        terms = {}
        for exp, c in self.terms.items():
            e = exp[i]
            if e == 0:
                continue
            new = list(exp)
            new[i] = e - 1
            terms[tuple(new)] = c * e
        return MPoly(self.variables, terms, self.laurent)

    def leading(self):
        """(exponent, coefficient) of the grevlex-largest term."""
        if not self.terms:
            raise PolynomialError("zero polynomial has no leading term")
        exp = max(self.terms, key=grevlex_key)
        return exp, self.terms[exp]

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def sorted_terms(self, reverse=True):
        return sorted(self.terms.items(), key=lambda t: grevlex_key(t[0]),
                      reverse=reverse)

    def subs_values(self, values):
        """Evaluate at a point given as {name: Fraction}. Exact."""
        total = Fraction(0)
        vals = [Fraction(values[v]) for v in self.variables]
        for exp, c in self.terms.items():
            term = c
            for v, e in zip(vals, exp):
                if e:
                    term *= v ** e
            total += term
        return total

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exp, c in self.sorted_terms():
            factors = []
            for name, e in zip(self.variables, exp):
                if e == 1:
                    factors.append(name)
                elif e:
                    factors.append("%s^%d" % (name, e))
            mono = "*".join(factors)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append("%s*%s" % (c, mono))
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    __repr__ = __str__


class WeightSystem:
    """Rational weights q_i in (0, 1/2] for the variables of a polynomial."""

    def __init__(self, weights):
        self.weights = tuple(Fraction(q) for q in weights)
        for q in self.weights:
            if not (0 < q <= Fraction(1, 2)):
                raise PolynomialError("weight %s outside (0, 1/2]" % q)

    def __len__(self):
        return len(self.weights)

    def __iter__(self):
        return iter(self.weights)

    def __getitem__(self, i):
        return self.weights[i]

    def degree_of_exponent(self, exp):
        return sum(q * e for q, e in zip(self.weights, exp))

    def weighted_degree(self, poly):
        """Weighted degree if poly is weighted homogeneous, else None.
        Zero polynomial reports None as well."""
        degs = {self.degree_of_exponent(e) for e in poly.terms}
        if len(degs) == 1:
            return degs.pop()
        return None

    def central_charge(self):
        return sum(1 - 2 * q for q in self.weights)
