import math

import pytest

from qshear.fatgraph import FatGraph, PendingInfo, spine_graph_an
from qshear.flips import (
    CLASSICAL_FLIP_IDENTITIES,
    ShearState,
    classical_flip,
    classical_pending_flip,
    decoration_change,
    phi,
    verify_flip_matrix_identity_classical,
)
from qshear.oracle import (
    flip_involution_deviation,
    numeric_identity_deviation,
    pending_flip_involution_deviation,
    pentagon_deviation,
)


@pytest.mark.parametrize("ident", CLASSICAL_FLIP_IDENTITIES)
def test_exact_identities(ident):
    assert verify_flip_matrix_identity_classical(ident), ident


@pytest.mark.parametrize("ident", CLASSICAL_FLIP_IDENTITIES)
def test_numeric_identities(ident):
    dev = numeric_identity_deviation(ident, sample_count=300)
    assert dev < 1e-10, f"{ident}: deviation {dev}"


def _state(graph, value=0.0):
    return ShearState(
        graph, {e: value for e in graph.edges}, {"omega0": 2 * math.cos(math.pi / 5)}
    )


def test_flip_at_zero_shears():
    g = spine_graph_an(4)
    s = ShearState(g, {e: 0.0 for e in g.edges}, {"omega0": 0.0})
    out = classical_flip(s, "X2")
    roles = ("Z1", "X1", "Z3", "Z2")  # A, B, C, D around X2
    shifts = {"Z1": math.log(2), "X1": -math.log(2), "Z3": math.log(2), "Z2": -math.log(2)}
    for e in g.edges:
        want = shifts.get(e, 0.0)
        if e == "X2":
            want = 0.0
        assert abs(out.values[e] - want) < 1e-12, e


def test_coincident_roles_double_the_shift():
    # a bigon between two vertices: flipping Z sees the same edge e as both
    # the A and C role, so it shifts by 2 phi(Z)
    g = FatGraph(
        ("Z", "e", "a", "b"),
        (("a", "Z", "e"), ("b", "Z", "e")),
        {"a": PendingInfo.from_order(2), "b": PendingInfo.from_order(2)},
    )
    zval = 0.7
    s = ShearState(g, {"Z": zval, "e": 0.0, "a": 0.0, "b": 0.0})
    roles_a = g.succ_at(0, "Z"), g.succ_at(1, "Z")
    out = classical_flip(s, "Z")
    assert abs(out.values["e"] - 2 * phi(zval)) < 1e-12 or abs(
        out.values["e"] + 2 * phi(-zval)
    ) < 1e-12


def test_pending_flip_shifts():
    g = spine_graph_an(3)
    s = ShearState(g, {e: 0.0 for e in g.edges}, {"omega0": 0.0})
    out = classical_pending_flip(s, "S")
    # weight 0 at shear 0: shift is log 2 on the positive role
    a, b = "Z3", "X1"
    assert abs(abs(out.values[a]) - math.log(2)) < 1e-12
    s1 = ShearState(g, {e: 0.0 for e in g.edges}, {"omega0": 1.0})
    out1 = classical_pending_flip(s1, "S")
    assert abs(abs(out1.values[a]) - math.log(3)) < 1e-12


def test_involutivity():
    g = spine_graph_an(3)
    assert flip_involution_deviation(g, "X1", samples=1000) < 1e-12
    assert pending_flip_involution_deviation(g, "S", samples=1000) < 1e-12


def test_pentagon():
    g = spine_graph_an(4)
    assert pentagon_deviation(g, "X1", "X2", samples=200) < 1e-10


def test_flip_rejects_pending_and_loops():
    g = spine_graph_an(3)
    s = _state(g)
    with pytest.raises(ValueError):
        classical_flip(s, "S")
    loopy = FatGraph(
        ("P", "Y", "c"),
        (("Y", "P", "P"), ),
        {"Y": PendingInfo.from_order(2), "c": PendingInfo.from_order(2)},
    ) if False else None
    # loop edge: both ends at one vertex
    g2 = FatGraph(
        ("P", "Y", "c"),
        (("Y", "P", "P"), ("Y", "c", "c")),
        {},
    )
    s2 = ShearState(g2, {e: 0.3 for e in g2.edges})
    with pytest.raises(ValueError):
        classical_flip(s2, "P")


def test_decoration_change():
    g = FatGraph(("Y", "P", "W"), (("W", "Y", "Y"), ("Y", "P", "P")), {}) if False else None
    # neck edge Y into a vertex carrying the perimeter loop P
    g = FatGraph(("Y", "P"), (("Y", "P", "P"),), {})
    s = ShearState(g, {"Y": 1.25, "P": -0.75})
    out = decoration_change(s, ("Y", "P"))
    assert abs(out.values["Y"] - 0.5) < 1e-15
    assert abs(out.values["P"] - 0.75) < 1e-15
    # P = 0 is the identity map
    s0 = ShearState(g, {"Y": 1.25, "P": 0.0})
    out0 = decoration_change(s0, ("Y", "P"))
    assert out0.values == s0.values
    with pytest.raises(ValueError):
        decoration_change(s, ("P", "Y"))


def test_run_flip_script():
    from qshear.flips import run_flip_script

    g = spine_graph_an(3)
    s = ShearState(g, {e: 0.4 for e in g.edges}, {"omega0": 0.0})
    out = run_flip_script(s, ["# comment", "", "flip X1", "flip X1"])
    for e in g.edges:
        assert abs(out.values[e] - 0.4) < 1e-12
    out2 = run_flip_script(s, ["pflip S", "pflip S"])
    for e in g.edges:
        assert abs(out2.values[e] - 0.4) < 1e-12
    with pytest.raises(ValueError):
        run_flip_script(s, ["wobble X1"])
    with pytest.raises(ValueError):
        run_flip_script(s, ["flip S"])


def test_sign_structure():
    from qshear.oracle import sign_structure_violation

    assert sign_structure_violation(spine_graph_an(4), samples=50) < 1e-12
