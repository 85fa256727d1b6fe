import random

import pytest

from qshear.coeffs import Coefficient
from qshear.fatgraph import flip_roles, spine_graph_an
from qshear.flips import (
    apply_substitution,
    classical_limit_defects,
    homomorphism_defects,
    linear_sum_defect,
    quantum_flip_substitution,
    quantum_pending_substitution,
    star_defects,
    tilde_expansion_defects,
)
from qshear.monodromy import build_monodromy, geodesic_G
from qshear.ore import OreElement, ore_zero_test
from qshear.torus import TorusElement, ew, half


@pytest.fixture(scope="module")
def an4():
    return spine_graph_an(4)


@pytest.fixture(scope="module")
def sub_x2(an4):
    return quantum_flip_substitution(an4, "X2")


def test_image_table_closed_forms(an4, sub_x2):
    form = sub_x2.source_form
    a, b, c, d = flip_roles(an4, "X2")
    qm1 = Coefficient.q_power(-1)
    # successor roles are dressed by the binomial with the inverse q power
    img_a = sub_x2.image_of_generator(a, +1)
    binom = TorusElement.one(form) + ew(form, {"X2": 1}, qm1)
    want = OreElement.from_torus(binom.mul(ew(form, {a: 1})))
    assert ore_zero_test(img_a - want)
    # predecessor roles invert the opposite binomial
    img_b = sub_x2.image_of_generator(b, +1)
    prod = OreElement.from_torus(
        (TorusElement.one(form) + ew(form, {"X2": -1}, qm1))
    ).mul(img_b)
    assert ore_zero_test(prod - OreElement.from_torus(ew(form, {b: 1})))
    # flipped edge inverts
    img_z = sub_x2.image_of_generator("X2", +1)
    assert ore_zero_test(img_z - OreElement.from_torus(ew(form, {"X2": -1})))


def test_pending_image_trinomial(an4):
    sub = quantum_pending_substitution(an4, "S")
    form = sub.source_form
    a, b = "Z4", "X1"
    w0 = Coefficient.parameter("omega0")
    qm1 = Coefficient.q_power(-1)
    qm2 = Coefficient.q_power(-2)
    trinom = (
        TorusElement.one(form)
        + ew(form, {"S": 1}, qm1 * w0)
        + ew(form, {"S": 2}, qm2)
    )
    want = OreElement.from_torus(trinom.mul(ew(form, {a: 1})))
    assert ore_zero_test(sub.image_of_generator(a, +1) - want)
    # q = 1 limit of the trinomial image is the classical formula
    assert not [lbl for lbl, d in classical_limit_defects(sub) if not ore_zero_test(d)]


def test_substitution_is_homomorphism(sub_x2):
    assert not [lbl for lbl, d in homomorphism_defects(sub_x2) if not ore_zero_test(d)]


def test_substitution_star_equivariant(sub_x2):
    assert not [lbl for lbl, d in star_defects(sub_x2) if not ore_zero_test(d)]


def test_substitution_classical_limit(sub_x2):
    assert not [lbl for lbl, d in classical_limit_defects(sub_x2) if not ore_zero_test(d)]


def test_linear_sum_invariant(sub_x2):
    assert ore_zero_test(linear_sum_defect(sub_x2))


def test_apply_to_unit(sub_x2):
    one = TorusElement.one(sub_x2.target_form)
    assert ore_zero_test(apply_substitution(sub_x2, one) - OreElement.one(sub_x2.source_form))


def test_apply_is_multiplicative_on_random_even_pairs(sub_x2):
    rng = random.Random(23)
    tform = sub_x2.target_form
    affected = set(sub_x2.affected)

    def rand_even():
        el = TorusElement.zero(tform)
        for _ in range(2):
            du = {}
            for name in tform.names:
                du[name] = 2 * rng.randint(-1, 1) if name in affected else rng.randint(-1, 1)
            el = el + TorusElement.monomial(
                tform, tform.du(du), Coefficient.t_power(rng.randint(-2, 2))
            )
        return el

    for _ in range(10):
        x, y = rand_even(), rand_even()
        lhs = apply_substitution(sub_x2, x.mul(y))
        rhs = apply_substitution(sub_x2, x).mul(apply_substitution(sub_x2, y))
        assert ore_zero_test(lhs - rhs)


def test_apply_rejects_odd_exponents(sub_x2):
    bad = half(sub_x2.target_form, {"X2": 1})
    with pytest.raises(ValueError):
        apply_substitution(sub_x2, bad)


def test_tilde_expansion_matches_display(sub_x2):
    bad = [k for k, d in tilde_expansion_defects(sub_x2) if not d.is_zero()]
    assert not bad


def test_monodromy_invariance_under_inner_flips(an4):
    real = build_monodromy(an4)
    for edge in ("X1", "X2"):
        sub = quantum_flip_substitution(an4, edge)
        real2 = build_monodromy(sub.target_graph)
        for i in (1, 4):
            for r in range(2):
                for s in range(2):
                    img = apply_substitution(sub, real2.matrix(i)[r, s])
                    diff = img - OreElement.from_torus(real.matrix(i)[r, s])
                    assert ore_zero_test(diff), (edge, i, r, s)


def test_geodesics_invariant_under_root_flip(an4):
    real = build_monodromy(an4)
    sub = quantum_pending_substitution(an4, "S")
    real2 = build_monodromy(sub.target_graph)
    for i in (1, 3):
        img = apply_substitution(sub, geodesic_G(real2, 0, i))
        assert ore_zero_test(img - OreElement.from_torus(geodesic_G(real, 0, i)))


def test_scale_rule_bookkeeping():
    """In each certified flip identity the relating t-power is the quarter
    of the difference of turn counts between the two sides."""
    words = {
        "inner-1": (("R", "R"), ("R",), 1),
        "inner-2": (("R", "L"), ("L", "R"), 0),
        "inner-3": (("L",), ("L", "L"), 1),
        "pending-1": (("L", "L"), ("R", "R"), -4),
        "pending-2": (("L", "R"), ("R", "L"), 0),
        "pending-3": (("R", "L"), ("L", "R"), 0),
    }
    for ident, (lhs, rhs, tpow) in words.items():
        bal = lambda ts: sum(1 if t == "R" else -1 for t in ts)
        assert bal(lhs) - bal(rhs) == tpow, ident
