"""Named verification suites: every identity in the catalog is checked
exactly, and when oracle moduli are configured each suite also re-verifies
its content numerically in clock-and-shift representations.
"""

from __future__ import annotations

from . import oracle
from .fatgraph import load_graph, spine_graph_an
from .flips import (
    CLASSICAL_FLIP_IDENTITIES,
    apply_substitution,
    classical_limit_defects,
    homomorphism_defects,
    linear_sum_defect,
    quantum_flip_substitution,
    quantum_pending_substitution,
    star_defects,
    tilde_expansion_defects,
    verify_flip_matrix_identity_classical,
)
from .monodromy import (
    an_realization,
    braid_alternative_form_defects,
    braid_apply,
    braid_product_invariance_defects,
    braid_relation_defects,
    build_monodromy,
    cross_relation_defects,
    element_is_zero,
    geodesic_G,
    gm_relation_defects,
    hermiticity_defects,
    nelson_regge_defects,
    pvi_defects,
    pvi_realization,
    quantum_determinant_defects,
    reflection_defects,
    reflection_ii_defects,
    uqsl2_defects,
    yang_baxter_defect,
)
from .ore import OreElement
from .reports import IdentityReport, timed, witness_digest


class RunConfig:
    """Suite selection plus oracle and sampling knobs."""

    def __init__(
        self,
        suites=(),
        graphs=(),
        oracle_moduli=(5, 7),
        samples=1000,
        seed=20240229,
        jobs=1,
    ):
        self.suites = tuple(suites)
        self.graphs = tuple(graphs)
        self.oracle_moduli = tuple(int(m) for m in oracle_moduli)
        self.samples = int(samples)
        self.seed = int(seed)
        self.jobs = int(jobs)
        unknown = [s for s in self.suites if s not in SUITES]
        if unknown:
            raise ValueError(f"unknown suites: {unknown}; known: {sorted(SUITES)}")
        for m in self.oracle_moduli:
            if m < 3 or m % 2 == 0:
                raise ValueError(f"oracle modulus {m} must be an odd integer >= 3")
        if not self.oracle_moduli:
            raise ValueError("need at least one oracle modulus")
        if self.samples < 1:
            raise ValueError("samples must be positive")
        if self.jobs < 1:
            raise ValueError("jobs must be positive")


def _defect_report(ident, anchor, defects, extras=None):
    with timed() as tm:
        witness = None
        for label, el in defects:
            if not element_is_zero(el):
                witness = f"{label}: {witness_digest(el)}"
                break
    ex = dict(extras or {})
    ex["checks"] = len(defects)
    return IdentityReport(ident, anchor, witness is None, tm.elapsed, witness, ex)


def _bool_report(ident, anchor, ok, extras=None, witness=None):
    return IdentityReport(
        ident, anchor, bool(ok), 0.0, None if ok else (witness or "failed"), dict(extras or {})
    )


def _numeric_reports(prefix, anchor, real, config, indices=None, reflections=False):
    out = []
    params = oracle.default_param_values([], config.seed)
    params.setdefault("omega0", 0.47)
    params.setdefault("omega1", 0.83)
    params.setdefault("omega2", 1.21)
    for modulus in config.oracle_moduli:
        with timed() as tm:
            rep = oracle.ClockShiftRep(real.form, modulus, seed=config.seed)
            pairs = oracle.numeric_relation_pairs(rep, real, params, indices)
            if reflections:
                pairs = pairs + oracle.numeric_reflection_pairs(rep, real, params)
            norms = oracle.numeric_pair_norms(pairs)
        worst = max(n for _, n in norms) if norms else 0.0
        bad = [lbl for lbl, n in norms if n > 1e-9]
        out.append(
            IdentityReport(
                f"{prefix}-oracle-N{modulus}",
                anchor,
                not bad,
                tm.elapsed,
                None if not bad else f"norms above 1e-9: {bad[:5]}",
                {"pairs": len(norms), "max_norm": worst},
            )
        )
    return out


# -- suite runners ----------------------------------------------------------


def run_an_core(config):
    reports = []
    for n in (3, 4):
        real = an_realization(n)
        for i in range(1, n + 1):
            reports.append(
                _defect_report(
                    f"an{n}-uqsl2-{i}",
                    "entry algebra of one monodromy matrix and M^2 = -E",
                    uqsl2_defects(real, i),
                )
            )
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                reports.append(
                    _defect_report(
                        f"an{n}-cross-{i}{j}",
                        "complete cross relations between two matrices",
                        cross_relation_defects(real, i, j),
                    )
                )
        reports.extend(
            _numeric_reports(f"an{n}-core", "numeric re-check of the entry algebra", real, config)
        )
    return reports


def run_an_nelson_regge(config):
    real = an_realization(4)
    reports = [
        _defect_report(
            "an4-nelson-regge-0123",
            "geodesic function algebra over indices 0..3",
            nelson_regge_defects(real, [0, 1, 2, 3]),
        ),
        _defect_report(
            "an4-nelson-regge-full",
            "geodesic function algebra over all index tuples",
            nelson_regge_defects(real, [0, 1, 2, 3, 4]),
        ),
        _defect_report(
            "an4-hermitian",
            "geodesic functions are star-fixed",
            hermiticity_defects(real, [(i, j) for i in range(0, 4) for j in range(i + 1, 5)]),
        ),
    ]
    reports.extend(
        _numeric_reports("an4-nr", "numeric re-check incl. geodesic adjacency", real, config)
    )
    return reports


def run_an_rmatrix(config):
    reports = [
        _bool_report(
            "ybe-8x8",
            "quantum Yang-Baxter equation on three tensor legs",
            yang_baxter_defect().is_zero(),
        )
    ]
    for n in (3, 4):
        real = an_realization(n)
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                reports.append(
                    _defect_report(
                        f"an{n}-reflection-{i}{j}",
                        "mixed reflection equation in R-matrix form",
                        reflection_defects(real, i, j),
                    )
                )
        for i in range(1, n + 1):
            reports.append(
                _defect_report(
                    f"an{n}-reflection-ii-{i}",
                    "single-matrix reflection equation",
                    reflection_ii_defects(real, i),
                )
            )
    realp = pvi_realization()
    reports.append(
        _defect_report(
            "pvi-reflection-12",
            "four-point monodromies satisfy the same reflection equation",
            reflection_defects(realp, 1, 2),
        )
    )
    real = an_realization(3)
    reports.extend(
        _numeric_reports(
            "an3-rmatrix", "numeric reflection equations", real, config, reflections=True
        )
    )
    return reports


def run_an_braid(config):
    reports = []
    for n in (3, 4):
        real = an_realization(n)
        for i in range(1, n - 1):
            reports.append(
                _defect_report(
                    f"an{n}-braid-relation-{i}{i+1}",
                    "braid group relation compared matrix by matrix",
                    braid_relation_defects(real, i),
                )
            )
        for i in range(1, n):
            reports.append(
                _defect_report(
                    f"an{n}-braid-alt-{i}",
                    "braid image as a geodesic-function combination",
                    braid_alternative_form_defects(real, i),
                )
            )
            imaged = braid_apply(real, i)
            reports.append(
                _defect_report(
                    f"an{n}-braid-det-{i}",
                    "quantum determinant preserved by the braid action",
                    quantum_determinant_defects(imaged),
                )
            )
            cross = []
            for x in range(1, n + 1):
                for y in range(x + 1, n + 1):
                    cross.extend(cross_relation_defects(imaged, x, y))
            reports.append(
                _defect_report(
                    f"an{n}-braid-cross-{i}",
                    "cross relations preserved by the braid action",
                    cross,
                )
            )
            reports.append(
                _defect_report(
                    f"an{n}-braid-product-{i}",
                    "ordered matrix products are braid invariants",
                    braid_product_invariance_defects(real, i),
                )
            )
        gm = []
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                gm.extend(gm_relation_defects(real, i, j))
        reports.append(
            _defect_report(
                f"an{n}-gm-table",
                "commutation table of geodesic functions with monodromies",
                gm,
            )
        )
    return reports


def run_pvi(config):
    real = pvi_realization()
    defects = pvi_defects(real)
    groups = {
        "pvi-entry-algebra": [],
        "pvi-K1K2": [],
        "pvi-hermitian": [],
        "pvi-aw3": [],
    }
    for label, el in defects:
        if label.startswith("K") or label.startswith("num K"):
            groups["pvi-K1K2"].append((label, el))
        elif "Hermitian" in label:
            groups["pvi-hermitian"].append((label, el))
        elif label.startswith("AW3"):
            groups["pvi-aw3"].append((label, el))
        else:
            groups["pvi-entry-algebra"].append((label, el))
    anchors = {
        "pvi-entry-algebra": "deformed entry algebra and consistency condition",
        "pvi-K1K2": "central elements with K1 K2 = 1",
        "pvi-hermitian": "geodesic functions are star-fixed",
        "pvi-aw3": "three-term quadratic algebra of the geodesic functions",
    }
    reports = [_defect_report(k, anchors[k], v) for k, v in groups.items()]
    reports.extend(_numeric_reports("pvi", "numeric re-check of the four-point algebra", real, config))
    return reports


def run_flips_classical(config):
    reports = []
    for ident in CLASSICAL_FLIP_IDENTITIES:
        with timed() as tm:
            ok = verify_flip_matrix_identity_classical(ident)
        reports.append(
            IdentityReport(
                f"classical-{ident}",
                "flip matrix identities in the exact square-root ring",
                ok,
                tm.elapsed,
            )
        )
        with timed() as tm:
            dev = oracle.numeric_identity_deviation(ident, config.samples, config.seed)
        reports.append(
            IdentityReport(
                f"classical-{ident}-numeric",
                "same identity at random real shears",
                dev < 1e-10,
                tm.elapsed,
                None if dev < 1e-10 else f"max deviation {dev}",
                {"max_deviation": dev},
            )
        )
    g3 = spine_graph_an(3)
    g4 = spine_graph_an(4)
    checks = [
        (
            "flip-involution",
            oracle.flip_involution_deviation(g3, "X1", min(config.samples, 1000), config.seed),
            1e-12,
        ),
        (
            "pending-involution",
            oracle.pending_flip_involution_deviation(g3, "S", min(config.samples, 1000), config.seed),
            1e-12,
        ),
        (
            "pentagon",
            oracle.pentagon_deviation(g4, "X1", "X2", min(config.samples, 200), config.seed),
            1e-10,
        ),
        (
            "hole-boundary-trace",
            oracle.boundary_trace_deviation(g3, min(config.samples, 200), config.seed),
            1e-10,
        ),
    ]
    for name, dev, tol in checks:
        reports.append(
            IdentityReport(
                f"classical-{name}",
                "numeric classical consistency",
                dev < tol,
                0.0,
                None if dev < tol else f"deviation {dev}",
                {"max_deviation": dev},
            )
        )
    with timed() as tm:
        low = oracle.closed_trace_minimum(g4, min(config.samples, 200), config.seed)
    reports.append(
        IdentityReport(
            "classical-closed-traces",
            "closed geodesic traces stay at or above two",
            low >= 2.0 - 1e-9,
            tm.elapsed,
            None if low >= 2.0 - 1e-9 else f"minimum trace {low}",
            {"min_trace": low},
        )
    )
    with timed() as tm:
        viol = oracle.sign_structure_violation(g4, min(config.samples, 50), config.seed)
    reports.append(
        IdentityReport(
            "classical-sign-structure",
            "block products keep the alternating sign pattern",
            viol < 1e-12,
            tm.elapsed,
            None if viol < 1e-12 else f"violation {viol}",
            {"max_violation": viol},
        )
    )
    return reports


def run_flips_quantum(config):
    reports = []
    for n in (2, 3, 4):
        graph = spine_graph_an(n)
        real = build_monodromy(graph)
        inner = [e for e in graph.edges if graph.is_internal(e)]
        for edge in inner:
            sub = quantum_flip_substitution(graph, edge)
            reports.append(
                _defect_report(
                    f"an{n}-sub-{edge}-morphism",
                    "flip substitution is a star-algebra morphism with the right classical limit",
                    [
                        *homomorphism_defects(sub),
                        *star_defects(sub),
                        *classical_limit_defects(sub),
                        ("linear sum", linear_sum_defect(sub)),
                    ],
                )
            )
            reports.append(
                _defect_report(
                    f"an{n}-tilde-expansion-{edge}",
                    "Weyl expansion of the flipped double-left word",
                    tilde_expansion_defects(sub),
                )
            )
            real2 = build_monodromy(sub.target_graph)
            defects = []
            for i in range(1, n + 1):
                m_src = real.matrix(i)
                m_tgt = real2.matrix(i)
                for r in range(2):
                    for s in range(2):
                        img = apply_substitution(sub, m_tgt[r, s])
                        defects.append(
                            (f"M{i}[{r}{s}]", img - OreElement.from_torus(m_src[r, s]))
                        )
            reports.append(
                _defect_report(
                    f"an{n}-flip-invariance-{edge}",
                    "monodromy matrices invariant under the inner flip",
                    defects,
                )
            )
        sub = quantum_pending_substitution(graph, "S")
        reports.append(
            _defect_report(
                f"an{n}-sub-root-morphism",
                "root pending substitution is a star-algebra morphism",
                [
                    *homomorphism_defects(sub),
                    *star_defects(sub),
                    *classical_limit_defects(sub),
                ],
            )
        )
        real2 = build_monodromy(sub.target_graph)
        defects = []
        for i in range(1, n + 1):
            img = apply_substitution(sub, geodesic_G(real2, 0, i))
            defects.append(
                (f"G(0,{i})", img - OreElement.from_torus(geodesic_G(real, 0, i)))
            )
        reports.append(
            _defect_report(
                f"an{n}-root-flip-G0i",
                "two-point geodesic functions invariant under the root flip",
                defects,
            )
        )
    return reports


def run_graph_validate(config):
    reports = []
    if not config.graphs:
        for n in (2, 3, 4):
            g = spine_graph_an(n)
            problems = g.validate()
            reports.append(
                _bool_report(
                    f"builtin-an{n}-valid",
                    "structural validation incl. 6g-6+3s+2r edge count",
                    not problems,
                    witness="; ".join(problems),
                )
            )
        return reports
    for path in config.graphs:
        try:
            g = load_graph(path)
            problems = g.validate()
        except (ValueError, OSError) as exc:
            reports.append(
                _bool_report(f"graph-{path}", "graph file validation", False, witness=str(exc))
            )
            continue
        reports.append(
            _bool_report(
                f"graph-{path}",
                "graph file validation incl. 6g-6+3s+2r edge count",
                not problems,
                witness="; ".join(problems),
            )
        )
    return reports


def run_oracle_soundness(config):
    reports = []
    real = an_realization(3)
    params = {"omega0": 0.47}
    pairs = []
    for modulus in config.oracle_moduli:
        rep = oracle.ClockShiftRep(real.form, modulus, seed=config.seed)
        pairs = oracle.numeric_relation_pairs(rep, real, params)
        pairs += oracle.numeric_reflection_pairs(rep, real, params)
        with timed() as tm:
            caught = oracle.mutation_check(
                pairs, count=50, seed=config.seed, t_value=rep.t_value
            )
        reports.append(
            IdentityReport(
                f"mutations-N{modulus}",
                "50 deliberately broken identities are all caught",
                all(caught),
                tm.elapsed,
                None if all(caught) else f"missed {caught.count(False)}",
                {"caught": sum(caught), "total": len(caught)},
            )
        )
    return reports


SUITES = {
    "an-core": ("entry algebra and M^2 = -E on the order-2 chains", run_an_core),
    "an-nelson-regge": ("geodesic function algebra (disjoint/nested/crossing/adjacent)", run_an_nelson_regge),
    "an-rmatrix": ("R-matrix form: Yang-Baxter and reflection equations", run_an_rmatrix),
    "an-braid": ("braid group action, determinants and invariants", run_an_braid),
    "pvi": ("four-point sphere: deformed algebra, K elements, AW(3)", run_pvi),
    "flips-classical": ("classical flip identities, pentagon, trace positivity", run_flips_classical),
    "flips-quantum": ("quantum substitutions and mutation invariance", run_flips_quantum),
    "graph-validate": ("structural validation of graph files", run_graph_validate),
    "oracle-soundness": ("mutation testing of the numeric oracle", run_oracle_soundness),
}


def list_suites():
    lines = []
    for name in sorted(SUITES):
        anchor, _ = SUITES[name]
        lines.append(f"{name:18s} {anchor}")
    return "\n".join(lines)


def run_suite(name, config):
    anchor, runner = SUITES[name]
    reports = runner(config)
    return sorted(reports, key=lambda r: r.ident)
