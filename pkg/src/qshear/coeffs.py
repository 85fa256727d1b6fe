"""Exact scalar coefficients: Laurent polynomials in the quarter-power
deformation variable t (q = t**4) whose coefficients are rational-number
polynomials in named central parameters (orbifold weights, commutant
entries).

All arithmetic is exact; no floating point enters the symbolic layer.
"""

from __future__ import annotations

from fractions import Fraction


def _param_key(params):
    """Normalize a parameter monomial to a sorted tuple of (name, power)."""
    items = tuple(sorted((n, int(e)) for n, e in params if e))
    for _, e in items:
        if e < 0:
            raise ValueError("parameter powers must be non-negative")
    return items


class Coefficient:
    """Element of Q[params][t, t^-1].

    Terms map (t-exponent, parameter monomial) to a nonzero Fraction; the
    zero element has no terms.  Instances are immutable and hashable, so
    they can key denominator tables.
    """

    __slots__ = ("_terms", "_key")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for (texp, params), val in terms.items():
                val = Fraction(val)
                if not val:
                    continue
                k = (int(texp), _param_key(params))
                newval = clean.get(k, Fraction(0)) + val
                if newval:
                    clean[k] = newval
                elif k in clean:
                    del clean[k]
        self._terms = clean
        self._key = None

    # -- constructors ------------------------------------------------

    @staticmethod
    def zero():
        return _ZERO

    @staticmethod
    def one():
        return _ONE

    @staticmethod
    def rational(x):
        return Coefficient({(0, ()): Fraction(x)})

    @staticmethod
    def t_power(k, val=1):
        """val * t**k"""
        return Coefficient({(int(k), ()): Fraction(val)})

    @staticmethod
    def q_power(k, val=1):
        """val * q**k with q = t**4; k may be a Fraction with denominator
        dividing 4 (so q**(1/4) = t is representable)."""
        tk = Fraction(k) * 4
        if tk.denominator != 1:
            raise ValueError(f"q-power {k} is not an integer t-power")
        return Coefficient.t_power(tk.numerator, val)

    @staticmethod
    def parameter(name, power=1, val=1):
        return Coefficient({(0, ((name, power),)): Fraction(val)})

    # -- ring operations ----------------------------------------------

    def __add__(self, other):
        if not other._terms:
            return self
        if not self._terms:
            return other
        terms = dict(self._terms)
        for k, v in other._terms.items():
            nv = terms.get(k, Fraction(0)) + v
            if nv:
                terms[k] = nv
            elif k in terms:
                del terms[k]
        out = Coefficient.__new__(Coefficient)
        out._terms = terms
        out._key = None
        return out

    def __neg__(self):
        out = Coefficient.__new__(Coefficient)
        out._terms = {k: -v for k, v in self._terms.items()}
        out._key = None
        return out

    def __sub__(self, other):
        return self + (-other)

    def mul(self, other, tshift=0):
        """self * other * t**tshift (fused, the hot path of torus products)."""
        if not self._terms or not other._terms:
            return _ZERO
        acc = {}
        for (t1, p1), v1 in self._terms.items():
            for (t2, p2), v2 in other._terms.items():
                if p1 and p2:
                    merged = {}
                    for n, e in p1:
                        merged[n] = merged.get(n, 0) + e
                    for n, e in p2:
                        merged[n] = merged.get(n, 0) + e
                    pk = tuple(sorted(merged.items()))
                elif p1:
                    pk = p1
                else:
                    pk = p2
                k = (t1 + t2 + tshift, pk)
                nv = acc.get(k, Fraction(0)) + v1 * v2
                if nv:
                    acc[k] = nv
                elif k in acc:
                    del acc[k]
        out = Coefficient.__new__(Coefficient)
        out._terms = acc
        out._key = None
        return out

    def __mul__(self, other):
        return self.mul(other)

    def times_t(self, k):
        if not k or not self._terms:
            return self
        out = Coefficient.__new__(Coefficient)
        out._terms = {(t + k, p): v for (t, p), v in self._terms.items()}
        out._key = None
        return out

    def bar(self):
        """The star involution on scalars: t -> t**-1, parameters and
        rationals fixed."""
        out = Coefficient.__new__(Coefficient)
        out._terms = {(-t, p): v for (t, p), v in self._terms.items()}
        out._key = None
        return out

    def at_t_one(self):
        """Specialize t -> 1 (classical limit), keeping parameters."""
        acc = {}
        for (_, p), v in self._terms.items():
            k = (0, p)
            nv = acc.get(k, Fraction(0)) + v
            if nv:
                acc[k] = nv
            elif k in acc:
                del acc[k]
        out = Coefficient.__new__(Coefficient)
        out._terms = acc
        out._key = None
        return out

    # -- queries -------------------------------------------------------

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def items(self):
        return self._terms.items()

    def key(self):
        if self._key is None:
            self._key = tuple(sorted(self._terms.items()))
        return self._key

    def __eq__(self, other):
        if not isinstance(other, Coefficient):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(self.key())

    def evaluate(self, t_value, param_values):
        """Numeric value with t = t_value and parameters from a name->value
        mapping.  Used only by the numeric oracle."""
        total = 0j
        for (texp, params), val in self._terms.items():
            x = complex(val) * t_value ** texp
            for name, e in params:
                x *= complex(param_values[name]) ** e
            total += x
        return total

    def __repr__(self):
        if not self._terms:
            return "0"
        bits = []
        for (texp, params), val in sorted(self._terms.items()):
            s = str(val)
            if texp:
                s += f"*t^{texp}"
            for name, e in params:
                s += f"*{name}" + (f"^{e}" if e != 1 else "")
            bits.append(s)
        return " + ".join(bits)


_ZERO = Coefficient()
_ONE = Coefficient({(0, ()): Fraction(1)})

ZERO = _ZERO
ONE = _ONE
