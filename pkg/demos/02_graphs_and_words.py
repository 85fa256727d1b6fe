"""Fat graphs, their induced skew forms, and geodesic matrix words.

A spine stores cyclic triples of edges at each vertex; cyclically
consecutive pairs bracket to +1.  Paths compile to products of edge,
turn and orbifold-rotation matrices.
"""

from qshear import compile_path, monodromy_path, pvi_graph, spine_graph_an

g = spine_graph_an(2)
print("edges:   ", g.edges)
print("vertices:", g.vertices)

form = g.skew_form()
print("bracket {X1,S} =", form.bracket("X1", "S"))
print("bracket {Z2,Z1} =", form.bracket("Z2", "Z1"))
print("bracket {S,Z1} =", form.bracket("S", "Z1"), "(root commutes with far points)")

# the monodromy word around the first orbifold point
word = monodromy_path(g, "S", "Z1")
print("\nM1 word:", word)
m1 = compile_path(g, word, form)
print("M1[0][0] =", m1[0, 0])
print("M1[1][0] =", m1[1, 0])

# faces and their Poisson centers
print("\nfaces:", len(g.faces()))
(center,) = g.center_elements()
print("center exponents (doubled):", dict(zip(g.edges, center)))
ok = all(
    form.pairing(center, tuple(2 if j == i else 0 for j in range(form.dim))) == 0
    for i in range(form.dim)
)
print("center commutes with every generator:", ok)

# the four-point sphere graph: one vertex, two orbifold legs, one
# spectator leg toward the root
gp = pvi_graph()
print("\nfour-point graph:", gp.vertices, "pending:", sorted(gp.pending))
