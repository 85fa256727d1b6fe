"""Quantum mutation substitutions and what they leave invariant.

A flip of an inner edge Z induces a morphism of quantum tori: the flipped
coordinates become rational expressions in the original exponentials,
with binomial dressings whose q-offsets are pinned by the homomorphism
and star-equivariance requirements.  Monodromy matrix words compiled on
the flipped graph map back exactly onto the original ones.
"""

from qshear.fatgraph import spine_graph_an
from qshear.flips import (
    apply_substitution,
    homomorphism_defects,
    linear_sum_defect,
    quantum_flip_substitution,
    quantum_pending_substitution,
)
from qshear.monodromy import build_monodromy, geodesic_G
from qshear.ore import OreElement, ore_zero_test

g = spine_graph_an(4)
sub = quantum_flip_substitution(g, "X2")
print("flipping X2; affected generators:", sub.affected)
for name in sub.affected:
    print(f"  image of exp({name}):", sub.image_of_generator(name, +1))

bad = [k for k, d in homomorphism_defects(sub) if not ore_zero_test(d)]
print("substitution is a homomorphism:", not bad)
print("exp(D~+C~+Z~) maps to exp(D+C):", ore_zero_test(linear_sum_defect(sub)))

real = build_monodromy(g)
real2 = build_monodromy(sub.target_graph)
img = apply_substitution(sub, real2.matrix(1)[0, 0])
print(
    "M1[0][0] invariant under the flip:",
    ore_zero_test(img - OreElement.from_torus(real.matrix(1)[0, 0])),
)

rsub = quantum_pending_substitution(g, "S")
real3 = build_monodromy(rsub.target_graph)
img = apply_substitution(rsub, geodesic_G(real3, 0, 2))
print(
    "G(0,2) invariant under the root pending flip:",
    ore_zero_test(img - OreElement.from_torus(geodesic_G(real, 0, 2))),
)
