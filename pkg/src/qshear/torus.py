"""Weyl-ordered quantum-torus arithmetic over a skew form.

Generators live on a doubled exponent lattice: the integer vector du
represents the Weyl-ordered exponential W(u) = :exp(u . Z):, with u =
du/2, so edge matrices carrying exp(+-Z/2) stay integral.  The product
rule is

    W(du) * W(dv) = t**(du . beta . dv) * W(du + dv),

which on true exponents reads exp(u.Z) exp(v.Z) = q**(u.beta.v)
exp((u+v).Z) since q = t**4.
"""

from __future__ import annotations

from .coeffs import Coefficient, ONE


class SkewForm:
    """Antisymmetric integer pairing on named generators."""

    __slots__ = ("names", "beta", "_index")

    def __init__(self, names, beta):
        names = tuple(names)
        beta = tuple(tuple(int(x) for x in row) for row in beta)
        n = len(names)
        if len(set(names)) != n:
            raise ValueError("generator names must be distinct")
        if len(beta) != n or any(len(row) != n for row in beta):
            raise ValueError("beta must be square of matching dimension")
        for i in range(n):
            for j in range(n):
                if beta[i][j] != -beta[j][i]:
                    raise ValueError("beta must be antisymmetric")
                if not -2 <= beta[i][j] <= 2:
                    raise ValueError("beta entries must lie in -2..2")
        self.names = names
        self.beta = beta
        self._index = {name: i for i, name in enumerate(names)}

    @property
    def dim(self):
        return len(self.names)

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown generator {name!r}") from None

    def pairing(self, du, dv):
        """du . beta . dv on the doubled lattice (always an integer)."""
        total = 0
        beta = self.beta
        for i, a in enumerate(du):
            if a:
                row = beta[i]
                for j, b in enumerate(dv):
                    if b:
                        total += a * row[j] * b
        return total

    def bracket(self, name_a, name_b):
        return self.beta[self.index(name_a)][self.index(name_b)]

    def du(self, exponents):
        """Doubled exponent vector from {name: true_exponent*2} entries.

        Values are the *doubled* exponents: du({'X': 2}) is exp(X),
        du({'X': 1}) is exp(X/2).
        """
        vec = [0] * self.dim
        for name, dexp in exponents.items():
            vec[self.index(name)] += int(dexp)
        return tuple(vec)

    def __eq__(self, other):
        return (
            isinstance(other, SkewForm)
            and self.names == other.names
            and self.beta == other.beta
        )

    def __hash__(self):
        return hash((self.names, self.beta))

    def __repr__(self):
        return f"SkewForm({self.names})"


class TorusElement:
    """Finite sum of Weyl monomials with Coefficient coefficients."""

    __slots__ = ("form", "terms")

    def __init__(self, form, terms=None):
        self.form = form
        clean = {}
        if terms:
            for du, c in terms.items():
                if c:
                    du = tuple(int(x) for x in du)
                    if len(du) != form.dim:
                        raise ValueError("exponent vector has wrong length")
                    prev = clean.get(du)
                    c = prev + c if prev is not None else c
                    if c:
                        clean[du] = c
                    elif du in clean:
                        del clean[du]
        self.terms = clean

    # -- constructors ---------------------------------------------------

    @staticmethod
    def zero(form):
        return TorusElement(form)

    @staticmethod
    def one(form):
        return TorusElement.monomial(form, (0,) * form.dim)

    @staticmethod
    def monomial(form, du, coeff=ONE):
        el = TorusElement(form)
        if coeff:
            el.terms[tuple(int(x) for x in du)] = coeff
        return el

    @staticmethod
    def scalar(form, coeff):
        return TorusElement.monomial(form, (0,) * form.dim, coeff)

    # -- ring operations --------------------------------------------------

    def _require_same(self, other):
        if self.form is not other.form and self.form != other.form:
            raise ValueError("elements live over different skew forms")

    def __add__(self, other):
        self._require_same(other)
        out = TorusElement(self.form)
        terms = dict(self.terms)
        for du, c in other.terms.items():
            prev = terms.get(du)
            nc = prev + c if prev is not None else c
            if nc:
                terms[du] = nc
            elif du in terms:
                del terms[du]
        out.terms = terms
        return out

    def __neg__(self):
        out = TorusElement(self.form)
        out.terms = {du: -c for du, c in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def mul(self, other):
        """Bilinear extension of the Weyl product rule."""
        self._require_same(other)
        form = self.form
        out_terms = {}
        for du, cu in self.terms.items():
            for dv, cv in other.terms.items():
                tpow = form.pairing(du, dv)
                c = cu.mul(cv, tshift=tpow)
                if not c:
                    continue
                dw = tuple(a + b for a, b in zip(du, dv))
                prev = out_terms.get(dw)
                nc = prev + c if prev is not None else c
                if nc:
                    out_terms[dw] = nc
                elif dw in out_terms:
                    del out_terms[dw]
        out = TorusElement(form)
        out.terms = out_terms
        return out

    def __mul__(self, other):
        if isinstance(other, TorusElement):
            return self.mul(other)
        return NotImplemented

    def scale(self, coeff):
        out = TorusElement(self.form)
        for du, c in self.terms.items():
            nc = c * coeff
            if nc:
                out.terms[du] = nc
        return out

    def times_t(self, k):
        out = TorusElement(self.form)
        out.terms = {du: c.times_t(k) for du, c in self.terms.items()}
        return out

    def star(self):
        """The *-involution: coefficientwise bar, monomials fixed.

        Weyl monomials are self-adjoint, so star(x*y) = star(y)*star(x)
        follows from the bar on the t-power in the product rule.
        """
        out = TorusElement(self.form)
        out.terms = {du: c.bar() for du, c in self.terms.items()}
        return out

    def at_t_one(self, form_commutative=None):
        """Classical specialization t -> 1, optionally re-homed on a
        commutative (beta = 0) form with the same generator names."""
        form = form_commutative if form_commutative is not None else self.form
        out = TorusElement(form)
        for du, c in self.terms.items():
            c1 = c.at_t_one()
            if not c1:
                continue
            prev = out.terms.get(du)
            nc = prev + c1 if prev is not None else c1
            if nc:
                out.terms[du] = nc
            elif du in out.terms:
                del out.terms[du]
        return out

    # -- queries ---------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, TorusElement):
            return NotImplemented
        self._require_same(other)
        return self.terms == other.terms

    def __hash__(self):
        return hash((self.form, tuple(sorted((du, c.key()) for du, c in self.terms.items()))))

    def key(self):
        return tuple(sorted((du, c.key()) for du, c in self.terms.items()))

    def monomials(self):
        """Iterate (du, coefficient) pairs in a canonical order."""
        return sorted(self.terms.items())

    def __repr__(self):
        if not self.terms:
            return "0"
        names = self.form.names
        bits = []
        for du, c in self.monomials():
            expo = []
            for name, d in zip(names, du):
                if d:
                    expo.append(name if d == 2 else f"{d}/2*{name}" if d % 2 else f"{d // 2}*{name}")
            mono = "e^{" + "+".join(expo).replace("+-", "-") + "}" if expo else "1"
            bits.append(f"({c!r})*{mono}")
        return " + ".join(bits)


def even_check(x, affected):
    """True iff every monomial of x has an even doubled exponent (hence an
    integer true exponent) in every affected generator."""
    idx = [x.form.index(n) for n in affected]
    for du in x.terms:
        for i in idx:
            if du[i] % 2:
                return False
    return True


def torus_mul(x, y, form=None):
    if form is not None and (x.form != form or y.form != form):
        raise ValueError("operands do not live over the given form")
    return x.mul(y)


def torus_star(x):
    return x.star()


def commutative_shadow(form):
    """The beta = 0 form with the same generator names (q = 1 limit)."""
    n = form.dim
    return SkewForm(form.names, [[0] * n for _ in range(n)])


def ew(form, exponents, coeff=ONE):
    """Weyl exponential with integer true exponents: ew(f, {'X': -1, 'Z': -1})
    is exp(-X-Z)."""
    return TorusElement.monomial(form, form.du({n: 2 * e for n, e in exponents.items()}), coeff)


def half(form, exponents, coeff=ONE):
    """Weyl exponential with half-integer steps: half(f, {'Z': 1}) is
    exp(Z/2)."""
    return TorusElement.monomial(form, form.du(exponents), coeff)
