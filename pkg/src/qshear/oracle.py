"""Independent numeric cross-checks.

Two layers:

* finite-dimensional clock-and-shift representations of the quantum torus
  at a root of unity, built from an integer skew normal form of beta;
  symbolic identities must evaluate to numerically zero matrices, and the
  representations are sampled at two moduli to suppress lattice-mod-N
  aliasing;

* the commutative q = 1 limit with random real shears, checking the
  classical flip identities, trace positivity of closed geodesics, the
  hole-boundary trace and the classical pentagon in floating point.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction

import numpy as np

from .flips import (
    ShearState,
    classical_flip,
    classical_identity_sides,
    classical_pending_flip,
)
from .ore import OreElement
from .torus import TorusElement


# ---------------------------------------------------------------------------
# integer skew normal form
# ---------------------------------------------------------------------------


def skew_normal_form(beta):
    """U with U beta U^T block-diagonal: hyperbolic blocks [[0,d],[-d,0]]
    followed by zeros.  Returns (U, pairings) with pairings the list of d's.
    """
    n = len(beta)
    m = [list(row) for row in beta]
    u = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def swap(i, j):
        if i == j:
            return
        m[i], m[j] = m[j], m[i]
        for row in m:
            row[i], row[j] = row[j], row[i]
        u[i], u[j] = u[j], u[i]

    def add_row(i, j, t):
        # row i += t * row j, and the congruent column operation
        m[i] = [a + t * b for a, b in zip(m[i], m[j])]
        for row in m:
            row[i] += t * row[j]
        u[i] = [a + t * b for a, b in zip(u[i], u[j])]

    pairings = []
    k = 0
    while k + 1 < n:
        entries = [
            (abs(m[i][j]), i, j)
            for i in range(k, n)
            for j in range(k, n)
            if m[i][j]
        ]
        if not entries:
            break
        _, pi, pj = min(entries)
        swap(k, pi)
        if pj == k:
            pj = pi
        swap(k + 1, pj)
        if m[k][k + 1] < 0:
            swap(k, k + 1)
        while True:
            d = m[k][k + 1]
            dirty = False
            for r in range(n):
                if r in (k, k + 1) or not m[r][k + 1]:
                    continue
                t = m[r][k + 1] // d
                if t:
                    add_row(r, k, -t)
                if m[r][k + 1]:
                    # remainder smaller than the pivot: promote it
                    swap(k, r)
                    if m[k][k + 1] < 0:
                        swap(k, k + 1)
                    dirty = True
                    break
            if dirty:
                continue
            for r in range(n):
                if r in (k, k + 1) or not m[r][k]:
                    continue
                t = m[r][k] // m[k + 1][k]
                if t:
                    add_row(r, k + 1, -t)
                if m[r][k]:
                    swap(k + 1, r)
                    dirty = True
                    break
            if not dirty:
                break
        pairings.append(m[k][k + 1])
        k += 2
    return u, pairings


def _integer_inverse_transpose(u):
    n = len(u)
    aug = [[Fraction(u[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col])
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    inv = [[aug[i][n + j] for j in range(n)] for i in range(n)]
    out = []
    for j in range(n):
        row = []
        for i in range(n):
            x = inv[i][j]
            if x.denominator != 1:
                raise ValueError("transform is not unimodular")
            row.append(x.numerator)
        out.append(row)
    return out  # transpose of the inverse


class ClockShiftRep:
    """Finite-dimensional model of a quantum torus at t = exp(i pi / N)."""

    def __init__(self, form, modulus, seed=0):
        if modulus < 3 or modulus % 2 == 0:
            raise ValueError("modulus must be an odd integer >= 3")
        self.form = form
        self.modulus = modulus
        self.t_value = cmath.exp(1j * math.pi / modulus)
        u, pairings = skew_normal_form(form.beta)
        self.transform = _integer_inverse_transpose(u)
        self.pairings = pairings
        self.nblocks = len(pairings)
        rng = np.random.default_rng(seed)
        self.free_phases = [
            cmath.exp(2j * math.pi * rng.random())
            for _ in range(form.dim - 2 * self.nblocks)
        ]
        self.dim = modulus ** self.nblocks
        self._cache = {}

    def _block_matrix(self, d, y1, y2):
        n = self.modulus
        zeta = self.t_value ** (2 * d)
        mat = np.zeros((n, n), dtype=complex)
        phase = self.t_value ** (-d * y1 * y2)
        for j in range(n):
            mat[(j + y2) % n, j] = phase * zeta ** (y1 * (j + y2))
        return mat

    def image(self, du):
        du = tuple(du)
        if du in self._cache:
            return self._cache[du]
        y = [sum(self.transform[i][j] * du[j] for j in range(len(du))) for i in range(len(du))]
        mat = np.eye(1, dtype=complex)
        for b, d in enumerate(self.pairings):
            mat = np.kron(mat, self._block_matrix(d, y[2 * b], y[2 * b + 1]))
        scalar = 1.0 + 0j
        for idx, lam in enumerate(self.free_phases):
            scalar *= lam ** y[2 * self.nblocks + idx]
        out = scalar * mat
        if len(self._cache) < 4096:
            self._cache[du] = out
        return out

    def evaluate(self, element, params=None):
        """Dense image of a torus or Ore element; denominators are inverted
        numerically (condition-checked)."""
        params = params or {}
        if isinstance(element, TorusElement):
            acc = np.zeros((self.dim, self.dim), dtype=complex)
            for du, coeff in element.terms.items():
                acc += coeff.evaluate(self.t_value, params) * self.image(du)
            return acc
        if isinstance(element, OreElement):
            acc = np.zeros((self.dim, self.dim), dtype=complex)
            for num, dens in element.terms:
                mat = self.evaluate(num, params)
                for d in dens:
                    dmat = self.evaluate(d.as_torus(), params)
                    if np.linalg.cond(dmat) > 1e8:
                        raise ArithmeticError("denominator is numerically singular; resample")
                    mat = mat @ np.linalg.inv(dmat)
                acc += mat
            return acc
        raise TypeError(f"cannot evaluate {type(element).__name__}")

    def norm(self, element, params=None):
        return float(np.max(np.abs(self.evaluate(element, params))))


def default_param_values(elements, seed=20240229):
    """Reproducible numeric values for every parameter occurring in the
    given elements."""
    names = set()
    for el in elements:
        terms = el.terms if isinstance(el, TorusElement) else None
        if terms is None:
            for num, dens in el.terms:
                for _, c in num.terms.items():
                    for (_, params) in dict(c.items()):
                        for nm, _ in params:
                            names.add(nm)
                for d in dens:
                    for c in d.coeffs:
                        for (_, params) in dict(c.items()):
                            for nm, _ in params:
                                names.add(nm)
        else:
            for _, c in terms.items():
                for (_, params) in dict(c.items()):
                    for nm, _ in params:
                        names.add(nm)
    rng = np.random.default_rng(seed)
    return {nm: 0.25 + 1.5 * rng.random() for nm in sorted(names)}


def oracle_check(elements, form, moduli=(5, 7), seed=20240229, tol=1e-9):
    """Max norm of symbolically-zero elements over the requested moduli;
    returns (max_norm, per-element list of (label, norm))."""
    params = default_param_values([el for _, el in elements], seed)
    reps = [ClockShiftRep(form, nn, seed=seed) for nn in moduli]
    results = []
    worst = 0.0
    for label, el in elements:
        norm = max(rep.norm(el, params) for rep in reps)
        worst = max(worst, norm)
        results.append((label, norm))
    return worst, results


# ---------------------------------------------------------------------------
# independent numeric re-verification (block matrix words in the rep)
# ---------------------------------------------------------------------------


def _block_zero(dim):
    return np.zeros((dim, dim), dtype=complex)


def _bmat_mul(x, y):
    n = len(x)
    return [
        [sum((x[i][k] @ y[k][j] for k in range(n)), _block_zero(x[0][0].shape[0])) for j in range(n)]
        for i in range(n)
    ]


def _bmat_sub(x, y):
    return [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(x, y)]


def _bmat_norm(x):
    return max(float(np.max(np.abs(b))) for row in x for b in row)


def rep_word_value(rep, graph, path, params):
    """Numeric 2x2 block value of a written word, built from generator
    images only; this route never touches the symbolic product."""
    dim = rep.dim
    eye = np.eye(dim, dtype=complex)
    zero = _block_zero(dim)
    lmat = [[zero, eye], [-eye, -eye]]
    rmat = [[eye, eye], [-eye, zero]]
    form = rep.form

    def edge_block(name, doubled=False):
        d = 2 if doubled else 1
        up = rep.image(form.du({name: d}))
        dn = rep.image(form.du({name: -d}))
        return [[zero, -up], [dn, zero]]

    def f_block(weight):
        w = weight.evaluate(rep.t_value, params) * eye
        return [[zero, eye], [-eye, -w]]

    mat = None
    for step in path.steps:
        if step[0] == "turn":
            factor = lmat if step[1] == "L" else rmat
        elif step[0] == "edge":
            factor = edge_block(step[1])
        else:
            _, name, k = step
            acc = [[eye, zero], [zero, eye]]
            fb = f_block(graph.pending[name].weight)
            for _ in range(k):
                acc = _bmat_mul(acc, fb)
            if k % 2 == 0:
                acc = [[-b for b in row] for row in acc]
            factor = _bmat_mul(_bmat_mul(edge_block(name), acc), edge_block(name))
        mat = factor if mat is None else _bmat_mul(mat, factor)
    return mat


def numeric_realization(rep, real, params):
    """Recompile the monodromy words numerically and extract (a, b, c)."""
    from .fatgraph import monodromy_path

    graph = real.graph
    qinv = rep.t_value ** -4
    out = []
    for idx, point in enumerate(real.points, start=1):
        if real.root is not None:
            word = monodromy_path(graph, real.root, point)
        else:
            from .fatgraph import PathWord

            turn_in, turn_out = ("L", "R") if point == "Z" else ("R", "L")
            word = PathWord(
                [("edge", "X"), ("turn", turn_in), ("orb", point, 1), ("turn", turn_out), ("edge", "X")]
            )
        m = rep_word_value(rep, graph, word, params)
        a = -m[1][1] / qinv
        b = -m[0][1]
        c = m[1][0]
        w = real.omegas[idx].evaluate(rep.t_value, params)
        out.append({"M": m, "a": a, "b": b, "c": c, "w": w})
    return out


def numeric_relation_pairs(rep, real, params, indices=None):
    """(label, lhs, rhs) numeric pairs for the entry algebra, geodesic
    algebra and R-matrix form, all built from the numeric realization."""
    q = rep.t_value ** 4
    qi = 1 / q
    dim = rep.dim
    eye = np.eye(dim, dtype=complex)
    data = numeric_realization(rep, real, params)
    n = len(data)
    idx = list(indices) if indices is not None else list(range(0, n + 1))
    pairs = []
    for i in range(1, n + 1):
        a, b, c, w = (data[i - 1][k] for k in ("a", "b", "c", "w"))
        pairs.append((f"num q a{i} b{i} = q^-1 b{i} a{i}", q * a @ b, qi * b @ a))
        pairs.append((f"num q^-1 a{i} c{i} = q c{i} a{i}", qi * a @ c, q * c @ a))
        pairs.append(
            (f"num b{i} c{i} = 1 + w q a{i} + q^2 a{i}^2", b @ c, eye + w * q * a + q * q * a @ a)
        )
        shape = data[i - 1]["M"]
        pairs.append((f"num M{i}[00] = q a{i} + w", shape[0][0], q * a + w * eye))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            ai, bi, ci, wi = (data[i - 1][k] for k in ("a", "b", "c", "w"))
            aj, bj, cj, wj = (data[j - 1][k] for k in ("a", "b", "c", "w"))
            pairs.append((f"num q^-1 b{i}b{j} = q b{j}b{i}", qi * bi @ bj, q * bj @ bi))
            pairs.append((f"num q^-1 c{i}c{j} = q c{j}c{i}", qi * ci @ cj, q * cj @ ci))
            pairs.append((f"num a{i}b{j} = b{j}a{i}", ai @ bj, bj @ ai))
            pairs.append((f"num c{i}a{j} = a{j}c{i}", ci @ aj, aj @ ci))
            pairs.append((f"num q c{i}b{j} = q^-1 b{j}c{i}", q * ci @ bj, qi * bj @ ci))
            # mixed relations in the weight-deformed form (weights 0 gives
            # back the plain chain case)
            pairs.append(
                (
                    f"num b{i}a{j} mixed",
                    bi @ aj + qi * qi * ai @ bj + wi * qi * bj,
                    aj @ bi + q * q * bj @ ai + wi * q * bj,
                )
            )
            pairs.append(
                (
                    f"num a{i}c{j} mixed",
                    ai @ cj + qi * qi * ci @ aj + wj * qi * ci,
                    cj @ ai + q * q * aj @ ci + wj * q * ci,
                )
            )
    all_even = all(abs(d["w"]) < 1e-14 for d in data)
    if all_even:
        # the plain-chain extras: commuting a's up to b c corrections and
        # the geodesic adjacency family
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                ai, bi, ci = (data[i - 1][k] for k in ("a", "b", "c"))
                aj, bj, cj = (data[j - 1][k] for k in ("a", "b", "c"))
                pairs.append(
                    (
                        f"num a{i}a{j} rel",
                        ai @ aj,
                        aj @ ai + (1 - qi * qi) * bj @ ci,
                    )
                )
        w0 = real.omega0.evaluate(rep.t_value, params)

        def g_num(i, j):
            if i == 0:
                d = data[j - 1]
                return d["b"] + d["c"] + w0 * d["a"]
            di, dj = data[i - 1], data[j - 1]
            return (
                q * di["b"] @ dj["c"]
                + q ** 3 * di["c"] @ dj["b"]
                - (q ** 3 + q) * di["a"] @ dj["a"]
            )

        gs = {}
        for x in range(len(idx)):
            for y in range(x + 1, len(idx)):
                i, j = idx[x], idx[y]
                if 0 < j <= n:
                    gs[(i, j)] = g_num(i, j)
        from itertools import combinations

        d2 = q * q - qi * qi
        support = sorted({x for p in gs for x in p})
        for i, j, k in combinations(support, 3):
            if (i, j) in gs and (j, k) in gs and (i, k) in gs:
                pairs.append(
                    (
                        f"num adjacent G({i},{j})G({j},{k})",
                        q * gs[(i, j)] @ gs[(j, k)] - qi * gs[(j, k)] @ gs[(i, j)],
                        d2 * gs[(i, k)],
                    )
                )
    elif n == 2:
        pairs.extend(numeric_pvi_pairs(rep, real, params, data))
    return pairs


def numeric_pvi_pairs(rep, real, params, data):
    """Four-point-sphere extras: q-commuting a's, the consistency
    condition, duality of the K elements and the AW(3) relations."""
    q = rep.t_value ** 4
    qi = 1 / q
    eye = np.eye(rep.dim, dtype=complex)
    a1, b1, c1, w1 = (data[0][k] for k in ("a", "b", "c", "w"))
    a2, b2, c2, w2 = (data[1][k] for k in ("a", "b", "c", "w"))
    w0 = real.omega0.evaluate(rep.t_value, params)
    pairs = [
        ("num q^-1 a1a2 = q a2a1", qi * a1 @ a2, q * a2 @ a1),
        ("num a1a2 = q^2 c1b2", a1 @ a2, q * q * c1 @ b2),
    ]
    k1 = a1 @ c2 - q * q * c1 @ a2 - q * w2 * c1
    k2 = a2 @ b1 - qi * qi * b2 @ a1 - qi * w1 * b2
    pairs.append(("num K1 K2 = 1", k1 @ k2, eye))
    for nm, kk in (("K1", k1), ("K2", k2)):
        for gn, g in (("a1", a1), ("b2", b2), ("c1", c1)):
            pairs.append((f"num {nm} central vs {gn}", kk @ g, g @ kk))
    gxz = c1 + b1 + w0 * a1
    gxy = c2 + b2 + w0 * a2
    gyz = q * b1 @ c2 - q ** 3 * a1 @ a2 - q * q * (w1 * a2 + w2 * a1) - q * w1 * w2 * eye
    om3 = k1 + k2
    d = q * q - qi * qi
    e = q - qi
    pairs.append(
        ("num AW3 (XY,XZ)", q * gxy @ gxz - qi * gxz @ gxy, d * gyz + e * (w1 * w2 * eye + w0 * om3))
    )
    pairs.append(
        ("num AW3 (XZ,YZ)", q * gxz @ gyz - qi * gyz @ gxz, d * gxy + e * (w2 * w0 * eye + w1 * om3))
    )
    pairs.append(
        ("num AW3 (YZ,XY)", q * gyz @ gxy - qi * gxy @ gyz, d * gxz + e * (w0 * w1 * eye + w2 * om3))
    )
    return pairs


def numeric_reflection_pairs(rep, real, params):
    """The mixed and single-matrix reflection forms on the 2x2 tensor of
    the representation space."""
    q = rep.t_value ** 4
    data = numeric_realization(rep, real, params)
    dim = rep.dim
    eye = np.eye(dim, dtype=complex)

    def r_scalar(power):
        qq = q ** power
        out = [[_block_zero(dim) for _ in range(4)] for _ in range(4)]
        for k, val in ((0, qq), (3, qq), (1, 1.0), (2, 1.0)):
            out[k][k] = val * eye
        out[1][2] = (qq - 1 / qq) * eye
        return out

    def embed(m, slot):
        out = [[_block_zero(dim) for _ in range(4)] for _ in range(4)]
        for i in range(2):
            for j in range(2):
                for k in range(2):
                    if slot == 1:
                        out[2 * i + k][2 * j + k] = m[i][j]
                    else:
                        out[2 * k + i][2 * k + j] = m[i][j]
        return out

    pairs = []
    rpos = r_scalar(-1)
    rneg = r_scalar(1)
    for i in range(len(data)):
        for j in range(i + 1, len(data)):
            mi = embed(data[i]["M"], 1)
            mj = embed(data[j]["M"], 2)
            lhs = _bmat_mul(_bmat_mul(_bmat_mul(rpos, mi), rneg), mj)
            rhs = _bmat_mul(_bmat_mul(_bmat_mul(mj, rpos), mi), rneg)
            pairs.append((f"num reflection ({i+1},{j+1})", lhs, rhs))
    rt = r_scalar(-2)
    rtt = [[rt[j][i] for j in range(4)] for i in range(4)]
    for i in range(len(data)):
        if abs(data[i]["w"]) > 1e-14:
            continue  # the single-matrix form holds only at weight zero
        mi1 = embed(data[i]["M"], 1)
        mi2 = embed(data[i]["M"], 2)
        lhs = _bmat_mul(_bmat_mul(rtt, mi2), mi1)
        rhs = _bmat_mul(_bmat_mul(mi1, mi2), rt)
        pairs.append((f"num reflection-ii ({i+1})", lhs, rhs))
    return pairs


def numeric_pair_norms(pairs):
    out = []
    for label, lhs, rhs in pairs:
        if isinstance(lhs, np.ndarray):
            out.append((label, float(np.max(np.abs(lhs - rhs)))))
        else:
            out.append((label, _bmat_norm(_bmat_sub(lhs, rhs))))
    return out


def mutation_check(pairs, count=50, seed=20240229, floor=1e-6, t_value=None):
    """Perturb passing numeric identities and verify every variant is
    caught: one side is rescaled by a nontrivial power of t, or the two
    factors of one side are transposed."""
    rng = np.random.default_rng(seed)
    if not pairs:
        raise ValueError("no identities to mutate")
    caught = []
    for _ in range(count):
        label, lhs, rhs = pairs[int(rng.integers(len(pairs)))]
        kind = int(rng.integers(2))
        if isinstance(lhs, list):
            lhs_m = lhs
            rhs_m = rhs
            if kind == 0:
                tpow = (t_value or cmath.exp(1j * math.pi / 5)) ** int(rng.integers(1, 4))
                lhs_m = [[tpow * b for b in row] for row in lhs]
            else:
                lhs_m = [[b.T for b in row] for row in lhs]
            norm = _bmat_norm(_bmat_sub(lhs_m, rhs_m))
        else:
            if kind == 0:
                tpow = (t_value or cmath.exp(1j * math.pi / 5)) ** int(rng.integers(1, 4))
                mutated = tpow * lhs
            else:
                mutated = lhs.T
            norm = float(np.max(np.abs(mutated - rhs)))
        caught.append(norm > floor)
    return caught


# ---------------------------------------------------------------------------
# classical float layer
# ---------------------------------------------------------------------------

_L = np.array([[0.0, 1.0], [-1.0, -1.0]])
_R = np.array([[1.0, 1.0], [-1.0, 0.0]])


def _xmat(v):
    return np.array([[0.0, -math.exp(v / 2)], [math.exp(-v / 2), 0.0]])


def _fmat(w):
    return np.array([[0.0, 1.0], [-1.0, -w]])


def evaluate_path_numeric(graph, path, values, params=None):
    """Float 2x2 value of a written word at a classical sample."""
    params = params or {}
    mat = np.eye(2)
    started = False
    for step in path.steps:
        if step[0] == "turn":
            factor = _L if step[1] == "L" else _R
        elif step[0] == "edge":
            factor = _xmat(values[step[1]])
        else:
            _, name, k = step
            w = graph.pending[name].weight.evaluate(1.0, params).real
            x = _xmat(values[name])
            f = np.linalg.matrix_power(_fmat(w), k) * (-1.0) ** (k + 1)
            factor = x @ f @ x
        mat = factor if not started else mat @ factor
        started = True
    return mat


def numeric_identity_deviation(ident, sample_count=1000, seed=20240229):
    """Max entrywise deviation of a classical flip identity over seeded
    random shears, evaluated through the exact-ring word catalog."""
    rng = np.random.default_rng(seed)
    lhs, rhs = classical_identity_sides(ident)
    ring = lhs[0][0].ring

    def value(celem, assign):
        tval = sum(
            coeff.evaluate(1.0, assign).real
            * math.exp(sum(assign[n] * d / 2 for n, d in zip(ring.names, du)))
            for du, coeff in ring.t_poly.items()
        )
        total = 0.0
        for (du, rdeg), coeff in celem.terms.items():
            x = coeff.evaluate(1.0, assign).real
            x *= math.exp(sum(assign[n] * d / 2 for n, d in zip(ring.names, du)))
            if rdeg:
                x *= math.sqrt(tval)
            total += x
        return total / tval ** celem.tk

    worst = 0.0
    for _ in range(sample_count):
        assign = {n: float(rng.uniform(-2, 2)) for n in ring.names}
        assign["w"] = 2 * math.cos(math.pi / int(rng.integers(2, 7)))
        assign["a"] = float(rng.uniform(-2, 2))
        assign["c"] = float(rng.uniform(-2, 2))
        for i in range(2):
            for j in range(2):
                dev = abs(value(lhs[i][j], assign) - value(rhs[i][j], assign))
                worst = max(worst, dev)
    return worst


def random_state(graph, seed, low=-2.0, high=2.0):
    rng = np.random.default_rng(seed)
    values = {e: float(rng.uniform(low, high)) for e in graph.edges}
    params = {"omega0": 2 * math.cos(math.pi / 5)}
    return ShearState(graph, values, params)


def flip_involution_deviation(graph, edge, samples=1000, seed=20240229):
    worst = 0.0
    for k in range(samples):
        state = random_state(graph, seed + k)
        back = classical_flip(classical_flip(state, edge), edge)
        worst = max(
            worst, max(abs(back.values[e] - state.values[e]) for e in graph.edges)
        )
    return worst


def pending_flip_involution_deviation(graph, edge, samples=1000, seed=20240229):
    worst = 0.0
    for k in range(samples):
        state = random_state(graph, seed + k)
        back = classical_pending_flip(classical_pending_flip(state, edge), edge)
        worst = max(
            worst, max(abs(back.values[e] - state.values[e]) for e in graph.edges)
        )
    return worst


def pentagon_deviation(graph, e1, e2, samples=200, seed=20240229):
    """Five alternating flips of two adjacent inner edges must restore all
    shear values (edge labels swap roles)."""
    worst = 0.0
    for k in range(samples):
        state = random_state(graph, seed + k)
        cur = state
        for edge in (e1, e2, e1, e2, e1):
            cur = classical_flip(cur, edge)
        swap = {e1: e2, e2: e1}
        for e in graph.edges:
            want = state.values[swap.get(e, e)]
            worst = max(worst, abs(cur.values[e] - want))
    return worst


def boundary_word_tokens(graph):
    """True-order token list of the closed all-left-turn word along the
    (single) face boundary, with winding insertions at pending U-turns.
    Requires a graph without spectator stubs."""
    (face,) = graph.faces()
    steps = []
    i = 0
    m = len(face)
    while i < m:
        e, k = face[i]
        if len(graph.incidence(e)) == 1 and i + 1 < m and face[i + 1][0] == e:
            if not graph.is_pending(e):
                raise ValueError("boundary word needs orbifold data at stubs")
            steps.append(("orb", e, 1))
            i += 2
        else:
            steps.append(("edge", e))
            i += 1
    return steps


def boundary_trace_deviation(graph, samples=200, seed=20240229):
    """| trace(boundary word) | - 2 cosh(half the center exponent sum)."""
    steps = boundary_word_tokens(graph)
    index = {e: i for i, e in enumerate(graph.edges)}
    (center,) = graph.center_elements()
    worst = 0.0
    for k in range(samples):
        state = random_state(graph, seed + k)
        mat = np.eye(2)
        for step in steps:
            mat = mat @ _L
            if step[0] == "edge":
                mat = mat @ _xmat(state.values[step[1]])
            else:
                _, name, _ = step
                w = state.weight_value(name)
                x = _xmat(state.values[name])
                mat = mat @ (x @ _fmat(w) @ x)
        tr = np.trace(mat)
        half = sum(center[index[e]] * state.values[e] for e in graph.edges) / 4.0
        worst = max(worst, abs(abs(tr) - 2 * math.cosh(half)))
    return worst


def random_closed_words(graph, count, seed, max_len=12):
    """Random closed geodesic words respecting the ribbon structure.

    The walk state is (vertex, edge we arrived along); every step turns L
    or R onto the next edge, bouncing through free ends with a winding
    insertion.  Words are returned as true-order token lists of
    ('edge', e) / ('turn', t) / ('orb', e, 1) whose cyclic product is a
    legal closed path word.
    """
    rng = np.random.default_rng(seed)
    internal = [e for e in graph.edges if graph.is_internal(e)]
    words = []
    attempts = 0
    while len(words) < count and attempts < count * 400:
        attempts += 1
        e0 = internal[int(rng.integers(len(internal)))]
        (v_a, _), (v_b, _) = graph.incidence(e0)
        v0 = v_a if rng.integers(2) else v_b
        tokens = [("edge", e0)]
        v, arrived = v0, e0
        closed = False
        for _ in range(max_len):
            turn = "L" if rng.integers(2) else "R"
            out = graph.succ_at(v, arrived) if turn == "L" else graph.pred_at(v, arrived)
            tokens.append(("turn", turn))
            slots = graph.incidence(out)
            if len(slots) == 1:
                if not graph.is_pending(out):
                    break  # spectator stub: abandon this walk
                tokens.append(("orb", out, 1))
                arrived = out  # bounced back to the same vertex
            else:
                tokens.append(("edge", out))
                (va, _), (vb, _) = slots
                v = vb if va == v else va
                arrived = out
                if (v, arrived) == (v0, e0) and tokens[-1] == ("edge", e0):
                    closed = True
                    break
        if closed and len(tokens) > 3:
            words.append(tokens[:-1])  # final edge duplicates the first
    return words


def _word_value(graph, state, tokens):
    mat = np.eye(2)
    for step in tokens:
        if step[0] == "turn":
            mat = mat @ (_L if step[1] == "L" else _R)
        elif step[0] == "edge":
            mat = mat @ _xmat(state.values[step[1]])
        else:
            w = state.weight_value(step[1])
            x = _xmat(state.values[step[1]])
            mat = mat @ (x @ _fmat(w) @ x)
    return mat


def closed_trace_minimum(graph, samples=200, seed=20240229, paths=25):
    """Minimum trace over random closed geodesic words and samples; the
    positivity statement says this never drops below 2."""
    words = random_closed_words(graph, paths, seed)
    if not words:
        raise ValueError("no closed words found")
    lowest = math.inf
    for k in range(samples):
        state = random_state(graph, seed + 1000 + k)
        for tokens in words:
            lowest = min(lowest, float(np.trace(_word_value(graph, state, tokens))))
    return lowest


def sign_structure_violation(graph, samples=50, seed=20240229, paths=15):
    """Products of turn-edge blocks must have the sign pattern
    [[+,-],[-,+]] (weakly); returns the largest wrong-signed magnitude."""
    words = random_closed_words(graph, paths, seed)
    worst = 0.0
    signs = np.array([[1.0, -1.0], [-1.0, 1.0]])
    for k in range(samples):
        state = random_state(graph, seed + 5000 + k)
        for tokens in words:
            # rotate so the word starts with a turn: block products only
            mat = _word_value(graph, state, tokens[1:] + tokens[:1])
            bad = np.minimum(mat * signs, 0.0)
            worst = max(worst, float(np.max(np.abs(bad))))
    return worst
