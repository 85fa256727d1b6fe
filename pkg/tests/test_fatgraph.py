import json
import random

import pytest

from qshear.coeffs import Coefficient
from qshear.fatgraph import (
    FatGraph,
    PathWord,
    PendingInfo,
    compile_path,
    flip_graph,
    graph_from_dict,
    graph_to_dict,
    monodromy_path,
    pending_flip_graph,
    pvi_graph,
    spine_graph_an,
)
from qshear.matrices import AlgMatrix, edge_matrix, f_matrix, turn_matrix
from qshear.torus import ew


def test_an2_skew_form_quoted_relations():
    g = spine_graph_an(2)
    f = g.skew_form()
    # (X, Y, Z) of the figure are (X1, Z2, Z1) here
    assert f.bracket("X1", "S") == 1
    assert f.bracket("X1", "Z2") == 1
    assert f.bracket("Z2", "Z1") == 1
    assert f.bracket("Z1", "X1") == 1
    assert f.bracket("S", "Z2") == 0
    assert f.bracket("S", "Z1") == 0


def test_single_vertex_cyclic_form():
    g = FatGraph(
        ("X", "Y", "Z"),
        (("X", "Y", "Z"),),
        {"Y": PendingInfo.from_order(2), "Z": PendingInfo.from_order(2)},
    )
    f = g.skew_form()
    assert f.bracket("X", "Y") == 1
    assert f.bracket("Y", "Z") == 1
    assert f.bracket("Z", "X") == 1


def test_double_contribution_entry():
    # two parallel edges between two vertices contribute twice
    g = FatGraph(
        ("e", "f", "a", "b"),
        (("e", "f", "a"), ("e", "f", "b")),
        {
            "a": PendingInfo.from_order(2),
            "b": PendingInfo.from_order(2),
        },
    )
    assert g.skew_form().bracket("e", "f") == 2


def test_skew_form_antisymmetric_range_random():
    rng = random.Random(13)
    for _ in range(100):
        nv = rng.randint(1, 4)
        nedges = 3 * nv
        names = [f"e{i}" for i in range(nedges)]
        slots = [n for n in names]
        rng.shuffle(slots)
        vertices = [tuple(slots[3 * k : 3 * k + 3]) for k in range(nv)]
        g = FatGraph(names, vertices)
        f = g.skew_form()
        for i in range(f.dim):
            for j in range(f.dim):
                assert f.beta[i][j] == -f.beta[j][i]
                assert -2 <= f.beta[i][j] <= 2


def test_centers_commute_everywhere():
    rng = random.Random(17)
    graphs = [spine_graph_an(n) for n in (2, 3, 4, 5)] + [pvi_graph()]
    for _ in range(50):
        nv = rng.randint(1, 3)
        names = [f"e{i}" for i in range(3 * nv)]
        slots = list(names)
        rng.shuffle(slots)
        graphs.append(FatGraph(names, [tuple(slots[3 * k : 3 * k + 3]) for k in range(nv)]))
    for g in graphs:
        f = g.skew_form()
        for c in g.center_elements():
            for i in range(f.dim):
                basis = tuple(2 if j == i else 0 for j in range(f.dim))
                assert f.pairing(c, basis) == 0, (g, c)


def test_face_count_matches_declared_holes():
    for n in (3, 4, 5):
        g = spine_graph_an(n)
        assert len(g.faces()) == g.meta[1]


def test_disc_center_counts_pending_twice():
    g = spine_graph_an(3)
    (center,) = g.center_elements()
    idx = {e: i for i, e in enumerate(g.edges)}
    # every edge of the single face is walked twice here: pendants out and
    # back, internal edges once per side
    for e in g.edges:
        assert center[idx[e]] == 4


def test_edge_count_formula():
    g = spine_graph_an(4)
    gg, ss, rr = g.meta
    assert (gg, ss, rr) == (0, 1, 5)
    assert len(g.edges) == 6 * gg - 6 + 3 * ss + 2 * rr == 7
    assert g.validate() == []


def test_monodromy_words_match_figure():
    g = spine_graph_an(2)
    p1 = monodromy_path(g, "S", "Z1")
    assert p1.steps == (
        ("edge", "S"),
        ("turn", "L"),
        ("edge", "X1"),
        ("turn", "L"),
        ("orb", "Z1", 1),
        ("turn", "R"),
        ("edge", "X1"),
        ("turn", "R"),
        ("edge", "S"),
    )
    p2 = monodromy_path(g, "S", "Z2")
    assert p2.steps == (
        ("edge", "S"),
        ("turn", "L"),
        ("edge", "X1"),
        ("turn", "R"),
        ("orb", "Z2", 1),
        ("turn", "L"),
        ("edge", "X1"),
        ("turn", "R"),
        ("edge", "S"),
    )


def test_compiled_monodromy_entry():
    g = spine_graph_an(2)
    f = g.skew_form()
    m1 = compile_path(g, monodromy_path(g, "S", "Z1"), f)
    a1 = ew(f, {"X1": -1, "Z1": -1}) + ew(f, {"Z1": -1})
    assert m1[0, 0] == a1.scale(Coefficient.q_power(1))
    assert m1[1, 0] == ew(f, {"X1": -1, "Z1": -1, "S": -1})


def test_corner_word_validates():
    g = pvi_graph()
    f = g.skew_form()
    # single-turn corner fragment ... X_X L X_Z F X_Z L X_Y ... around the
    # orbifold point of the pending edge Z
    w = PathWord(
        [("edge", "X"), ("turn", "L"), ("orb", "Z", 1), ("turn", "L"), ("edge", "Y")]
    )
    compile_path(g, w, f)  # validates turns
    bad = PathWord(
        [("edge", "X"), ("turn", "R"), ("orb", "Z", 1), ("turn", "L"), ("edge", "Y")]
    )
    with pytest.raises(ValueError):
        compile_path(g, bad, f)


def test_winding_collapse_in_path():
    g = pvi_graph()
    f = g.skew_form()
    # with weight w = 2cos(pi/p) the p-fold winding merely avoids the point
    g2 = FatGraph(
        g.edges,
        g.vertices,
        {"Y": PendingInfo.from_order(2), "Z": PendingInfo.from_order(3)},
    )
    f2 = g2.skew_form()
    looped = compile_path(
        g2,
        PathWord([("edge", "X"), ("turn", "L"), ("orb", "Z", 3), ("turn", "L"), ("edge", "Y")]),
        f2,
    )
    direct = compile_path(
        g2, PathWord([("edge", "X"), ("turn", "R"), ("edge", "Y")]), f2
    )
    assert (looped - direct).is_zero()


def test_pvi_words():
    g = pvi_graph()
    f = g.skew_form()
    m1 = compile_path(
        g,
        PathWord([("edge", "X"), ("turn", "L"), ("orb", "Z", 1), ("turn", "R"), ("edge", "X")]),
        f,
    )
    w1 = Coefficient.parameter("omega1")
    b1 = ew(f, {"X": 1, "Z": -1}) + ew(f, {"X": 1, "Z": 1}) + ew(f, {"X": 1}, w1)
    assert m1[0, 1] == -b1


def test_parameter_counting():
    # the chain with n points besides the root carries 2n independent
    # entry operators and 2(n+1)-3 edges; for n = 2 a spectator stub is
    # added so the quoted bracket table embeds
    for n in (3, 4, 5):
        g = spine_graph_an(n)
        assert len(g.edges) == 2 * (n + 1) - 3
    assert len(spine_graph_an(2).edges) == 5


def test_flip_graph_bracket_transform():
    g = spine_graph_an(4)
    f = g.skew_form()
    g2, roles = flip_graph(g, "X2")
    f2 = g2.skew_form()
    for name in roles:
        assert f2.bracket(name, "X2") == -f.bracket(name, "X2")
    g3, _ = flip_graph(g2, "X2")
    def normalize(vs):
        out = []
        for v in vs:
            rots = [tuple(v[i:] + v[:i]) for i in range(3)]
            out.append(min(rots))
        return sorted(out)
    assert normalize(g3.vertices) == normalize(g.vertices)


def test_pending_flip_graph_roundtrip():
    g = spine_graph_an(3)
    g2, (a, b) = pending_flip_graph(g, "S")
    assert {a, b} == {"X1", "Z3"}
    g3, _ = pending_flip_graph(g2, "S")
    assert sorted(g3.vertices) == sorted(g.vertices)


def test_graph_json_roundtrip(tmp_path):
    g = spine_graph_an(3)
    d = graph_to_dict(g)
    g2 = graph_from_dict(json.loads(json.dumps(d)))
    assert g2.edges == g.edges
    assert g2.vertices == g.vertices
    assert g2.meta == g.meta


def test_graph_json_rejects_unknown_fields():
    d = graph_to_dict(spine_graph_an(3))
    d["extra"] = 1
    with pytest.raises(ValueError):
        graph_from_dict(d)
    d2 = graph_to_dict(spine_graph_an(3))
    d2["pending"]["Z1"] = {"param": "w", "p": 2}
    with pytest.raises(ValueError):
        graph_from_dict(d2)


def test_validate_reports_edge_count_violation():
    d = graph_to_dict(spine_graph_an(4))
    d["meta"]["r"] = 4
    g = graph_from_dict(d)
    problems = g.validate()
    assert any("6g-6+3s+2r" in p for p in problems)


def test_spine_rejects_small_n():
    with pytest.raises(ValueError):
        spine_graph_an(1)


def test_hole_boundary_trace_is_cosh_pair():
    # the symbolic trace of the all-left boundary word is a single t-power
    # times W(c/2) + W(-c/2) for the face center c; at q = 1 it is exactly
    # the 2cosh pair
    from qshear.matrices import AlgMatrix, f_matrix, turn_matrix
    from qshear.oracle import boundary_word_tokens
    from qshear.torus import TorusElement, commutative_shadow

    g = spine_graph_an(3)
    f = g.skew_form()
    mat = AlgMatrix.identity(f)
    for step in boundary_word_tokens(g):
        mat = mat.mul(turn_matrix(f, "L"))
        if step[0] == "edge":
            mat = mat.mul(edge_matrix(f, step[1]))
        else:
            x = edge_matrix(f, step[1])
            mat = mat.mul(x.mul(f_matrix(f, g.weight(step[1]))).mul(x))
    tr = mat.trace()
    (center,) = g.center_elements()
    half = tuple(x // 2 for x in center)
    assert set(tr.terms) == {half, tuple(-x for x in half)}
    coeffs = list(tr.terms.values())
    assert coeffs[0] == coeffs[1]
    shadow = commutative_shadow(f)
    want = TorusElement.monomial(shadow, half) + TorusElement.monomial(
        shadow, tuple(-x for x in half)
    )
    assert (tr.at_t_one(shadow) - want).is_zero()
