"""The clock-and-shift oracle: independent numeric checks at roots of unity.

The skew form is put in integer normal form; each hyperbolic pair becomes
a clock/shift pair at t = exp(i pi / N).  Monodromy words are recompiled
blockwise in the representation (never touching the symbolic product) and
every relation is re-verified numerically at two moduli.
"""

import numpy as np

from qshear.monodromy import an_realization
from qshear.oracle import (
    ClockShiftRep,
    mutation_check,
    numeric_pair_norms,
    numeric_relation_pairs,
    skew_normal_form,
)

real = an_realization(3)
u, pairings = skew_normal_form(real.form.beta)
print("skew normal form pairings:", pairings)

params = {"omega0": 0.47}
for modulus in (5, 7):
    rep = ClockShiftRep(real.form, modulus, seed=1)
    print(f"\nmodulus {modulus}: representation dimension {rep.dim}")
    du = real.form.du({"X1": 2})
    dv = real.form.du({"S": 2})
    lhs = rep.image(du) @ rep.image(dv)
    rhs = rep.t_value ** real.form.pairing(du, dv) * rep.image(
        tuple(a + b for a, b in zip(du, dv))
    )
    print("  defining relation defect:", float(np.max(np.abs(lhs - rhs))))
    pairs = numeric_relation_pairs(rep, real, params)
    worst = max(n for _, n in numeric_pair_norms(pairs))
    print(f"  {len(pairs)} relations re-verified, worst norm {worst:.2e}")
    caught = mutation_check(pairs, count=50, seed=3, t_value=rep.t_value)
    print(f"  mutated identities caught: {sum(caught)}/{len(caught)}")
