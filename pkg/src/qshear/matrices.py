"""Matrices over the quantum torus / Ore ring, scalar R-matrices, and the
constructors for edge, turn, orbifold-rotation and commutant matrices.
"""

from __future__ import annotations

from .coeffs import Coefficient, ONE, ZERO
from .ore import OreElement
from .torus import TorusElement


def ring_add(a, b):
    if isinstance(a, TorusElement) and isinstance(b, TorusElement):
        return a + b
    return _ore(a) + _ore(b)


def ring_mul(a, b):
    if isinstance(a, TorusElement) and isinstance(b, TorusElement):
        return a.mul(b)
    return _ore(a).mul(_ore(b))


def _ore(a):
    return OreElement.from_torus(a) if isinstance(a, TorusElement) else a


def ring_is_zero(a):
    return a.is_zero()


class AlgMatrix:
    """Square matrix with TorusElement or OreElement entries sharing one
    skew form."""

    __slots__ = ("form", "n", "rows")

    def __init__(self, form, rows):
        rows = tuple(tuple(row) for row in rows)
        n = len(rows)
        if n not in (2, 4, 8) or any(len(r) != n for r in rows):
            raise ValueError("AlgMatrix must be square of size 2, 4 or 8")
        for row in rows:
            for x in row:
                if x.form != form:
                    raise ValueError("entries live over different forms")
        self.form = form
        self.n = n
        self.rows = rows

    @staticmethod
    def identity(form, n=2):
        one = TorusElement.one(form)
        zero = TorusElement.zero(form)
        return AlgMatrix(form, [[one if i == j else zero for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def mul(self, other):
        if isinstance(other, ScalarMatrix):
            other = other.promote(self.form)
        if self.n != other.n:
            raise ValueError("size mismatch")
        n = self.n
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = None
                for k in range(n):
                    p = ring_mul(self.rows[i][k], other.rows[k][j])
                    acc = p if acc is None else ring_add(acc, p)
                row.append(acc)
            out.append(row)
        return AlgMatrix(self.form, out)

    def __mul__(self, other):
        return self.mul(other)

    def add(self, other):
        if self.n != other.n:
            raise ValueError("size mismatch")
        return AlgMatrix(
            self.form,
            [
                [ring_add(a, b) for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.rows, other.rows)
            ],
        )

    def __add__(self, other):
        return self.add(other)

    def neg(self):
        return AlgMatrix(self.form, [[-x for x in row] for row in self.rows])

    def __neg__(self):
        return self.neg()

    def __sub__(self, other):
        return self.add(other.neg())

    def scale_t(self, tpow):
        return AlgMatrix(self.form, [[x.times_t(tpow) for x in row] for row in self.rows])

    def scale(self, coeff):
        return AlgMatrix(self.form, [[x.scale(coeff) for x in row] for row in self.rows])

    def scalar_mul_left(self, element):
        """element * M entrywise, element an algebra scalar (not central)."""
        return AlgMatrix(self.form, [[ring_mul(element, x) for x in row] for row in self.rows])

    def scalar_mul_right(self, element):
        return AlgMatrix(self.form, [[ring_mul(x, element) for x in row] for row in self.rows])

    def trace(self):
        acc = None
        for i in range(self.n):
            acc = self.rows[i][i] if acc is None else ring_add(acc, self.rows[i][i])
        return acc

    def is_zero(self):
        return all(ring_is_zero(x) for row in self.rows for x in row)

    def equals(self, other):
        return (self - other).is_zero()

    def __repr__(self):
        return "AlgMatrix[\n" + "\n".join("  " + repr(list(r)) for r in self.rows) + "\n]"


class ScalarMatrix:
    """Matrix over plain Coefficients (central scalars)."""

    __slots__ = ("n", "rows")

    def __init__(self, rows):
        rows = tuple(tuple(row) for row in rows)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("ScalarMatrix must be square")
        self.n = n
        self.rows = rows

    @staticmethod
    def identity(n):
        return ScalarMatrix([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def mul(self, other):
        if isinstance(other, AlgMatrix):
            return self.promote(other.form).mul(other)
        if self.n != other.n:
            raise ValueError("size mismatch")
        n = self.n
        return ScalarMatrix(
            [
                [
                    sum(
                        (self.rows[i][k] * other.rows[k][j] for k in range(n)),
                        ZERO,
                    )
                    for j in range(n)
                ]
                for i in range(n)
            ]
        )

    def __mul__(self, other):
        return self.mul(other)

    def __sub__(self, other):
        return ScalarMatrix(
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)]
        )

    def transpose(self):
        return ScalarMatrix(tuple(zip(*self.rows)))

    def is_zero(self):
        return all(x.is_zero() for row in self.rows for x in row)

    def equals(self, other):
        return (self - other).is_zero()

    def promote(self, form):
        return AlgMatrix(
            form,
            [[TorusElement.scalar(form, c) for c in row] for row in self.rows],
        )

    def __repr__(self):
        return "ScalarMatrix[\n" + "\n".join("  " + repr(list(r)) for r in self.rows) + "\n]"


# -- constructors -------------------------------------------------------


def edge_matrix(form, name):
    """[[0, -exp(Z/2)], [exp(-Z/2), 0]] for the named edge."""
    zero = TorusElement.zero(form)
    up = TorusElement.monomial(form, form.du({name: 1}))
    dn = TorusElement.monomial(form, form.du({name: -1}))
    return AlgMatrix(form, [[zero, -up], [dn, zero]])


def double_edge_matrix(form, name):
    """[[0, -exp(Z)], [exp(-Z), 0]]: an edge traversed with doubled value,
    the order-2 collapse of edge * F_0 * edge."""
    zero = TorusElement.zero(form)
    up = TorusElement.monomial(form, form.du({name: 2}))
    dn = TorusElement.monomial(form, form.du({name: -2}))
    return AlgMatrix(form, [[zero, -up], [dn, zero]])


def turn_matrix(form, kind):
    """R = [[1,1],[-1,0]], L = R^2 = [[0,1],[-1,-1]]."""
    one = TorusElement.one(form)
    zero = TorusElement.zero(form)
    if kind == "R":
        return AlgMatrix(form, [[one, one], [-one, zero]])
    if kind == "L":
        return AlgMatrix(form, [[zero, one], [-one, -one]])
    raise ValueError(f"turn kind must be 'L' or 'R', not {kind!r}")


def f_matrix(form, omega):
    """[[0, 1], [-1, -omega]]: rotation about an orbifold point of weight
    omega = 2 cos(pi/p)."""
    one = TorusElement.one(form)
    zero = TorusElement.zero(form)
    w = TorusElement.scalar(form, omega)
    return AlgMatrix(form, [[zero, one], [-one, -w]])


def omega_commutant(form, a, c, omega):
    """[[a, c], [-c, a - omega*c]]: the general matrix commuting with
    F_omega (scalar parameters a, c)."""
    am = TorusElement.scalar(form, a)
    cm = TorusElement.scalar(form, c)
    corner = TorusElement.scalar(form, a - omega * c)
    return AlgMatrix(form, [[am, cm], [-cm, corner]])


def mat_mul(x, y):
    return x.mul(y)


def mat_trace(x):
    return x.trace()


def mat_scale(x, tpow):
    return x.scale_t(tpow)


def r_matrix(power):
    """The standard 4x4 quantum R-matrix at q**power (q = t**4):

        [[q, 0, 0,       0],
         [0, 1, q - 1/q,  0],
         [0, 0, 1,        0],
         [0, 0, 0,        q]]

    in the basis (11, 12, 21, 22).
    """
    q = Coefficient.t_power(4 * power)
    qinv = Coefficient.t_power(-4 * power)
    one = ONE
    zero = ZERO
    return ScalarMatrix(
        [
            [q, zero, zero, zero],
            [zero, one, q - qinv, zero],
            [zero, zero, one, zero],
            [zero, zero, zero, q],
        ]
    )


def tensor_embed(m, slot):
    """Embed a 2x2 algebra matrix into slot 1 or 2 of a 2-fold tensor
    space; rows/columns ordered (11, 12, 21, 22), entries multiply left to
    right so embed(M,1)*embed(N,2) has ((ik),(jl)) entry M_ij * N_kl."""
    if m.n != 2:
        raise ValueError("tensor_embed expects a 2x2 matrix")
    if slot not in (1, 2):
        raise ValueError("slot must be 1 or 2")
    form = m.form
    zero = TorusElement.zero(form)
    one = TorusElement.one(form)
    out = [[zero] * 4 for _ in range(4)]
    for i in range(2):
        for j in range(2):
            for k in range(2):
                if slot == 1:
                    out[2 * i + k][2 * j + k] = _entry_copy(m.rows[i][j])
                else:
                    out[2 * k + i][2 * k + j] = _entry_copy(m.rows[i][j])
    del one
    return AlgMatrix(form, out)


def _entry_copy(x):
    return x


def scalar_tensor(r, slots, nslots=3):
    """Embed a 4x4 scalar matrix acting on tensor legs `slots` (a pair of
    distinct legs in 1..nslots) into the 2**nslots scalar matrix."""
    if r.n != 4:
        raise ValueError("scalar_tensor expects a 4x4 matrix")
    a, b = slots
    if a == b or not (1 <= a <= nslots and 1 <= b <= nslots):
        raise ValueError("slots must be two distinct legs")
    dim = 2 ** nslots
    out = [[ZERO] * dim for _ in range(dim)]
    for row in range(dim):
        rbits = [(row >> (nslots - 1 - k)) & 1 for k in range(nslots)]
        for col in range(dim):
            cbits = [(col >> (nslots - 1 - k)) & 1 for k in range(nslots)]
            ok = all(rbits[k] == cbits[k] for k in range(nslots) if k not in (a - 1, b - 1))
            if not ok:
                continue
            ri = 2 * rbits[a - 1] + rbits[b - 1]
            ci = 2 * cbits[a - 1] + cbits[b - 1]
            out[row][col] = r.rows[ri][ci]
    return ScalarMatrix(out)
