from fractions import Fraction as F

from mine.classify import UNDETECTED_FAMILIES, classify
from mine.costs import INF
from mine.geometry import Drawing
from mine.instance import make_instance


def potts_table(k, c):
    return tuple(tuple(0 if a == b else c for b in range(k)) for a in range(k))


def table(rows):
    return tuple(tuple(r) for r in rows)


# The fixed regression corpus: (name, instance, optional drawing, verdict, solver)
def corpus():
    chain = make_instance({0: 3, 1: 3, 2: 3},
                          pairwise={(0, 1): potts_table(3, 1), (1, 2): potts_table(3, 1)})
    star = make_instance({0: 2, 1: 2, 2: 2, 3: 2},
                         pairwise={(0, 1): table([(1, 0), (0, 1)]),
                                   (0, 2): table([(1, 0), (0, 1)]),
                                   (0, 3): table([(1, 0), (0, 1)])})
    single = make_instance({0: 4}, {0: (3, 1, 4, 1)})
    empty_edges = make_instance({0: 2, 1: 3}, {0: (0, 1), 1: (2, 0, 1)})

    cyc = {(0, 1), (1, 2), (0, 2)}
    sub_bin = make_instance({u: 2 for u in range(3)},
                            pairwise={e: table([(0, 1), (1, 0)]) for e in cyc})
    nonsub_bin = make_instance({u: 2 for u in range(3)},
                               pairwise={e: table([(1, 0), (0, 1)]) for e in cyc})
    abs_diff = tuple(tuple(abs(a - b) for b in range(3)) for a in range(3))
    lattice = make_instance({u: 3 for u in range(3)},
                            pairwise={e: abs_diff for e in cyc})
    potts = make_instance({u: 3 for u in range(3)},
                          pairwise={e: potts_table(3, 2) for e in cyc})
    # metric but neither Potts nor lattice-submodular:
    # f(0,2)+f(1,1) = 1 < f(0,1)+f(1,2) = 3 breaks the lattice inequality
    metric_t = table([(0, 1, 1), (1, 0, 2), (1, 2, 0)])
    metric = make_instance({u: 3 for u in range(3)},
                           pairwise={e: metric_t for e in cyc})
    gen3 = make_instance({u: 3 for u in range(3)},
                         pairwise={e: table([(0, 5, 1), (3, 1, 0), (2, 2, 4)]) for e in cyc})

    # binary triangle (not a forest), non-submodular, drawn without crossings
    planar2 = make_instance({u: 2 for u in range(3)},
                            {0: (0, 1), 1: (1, 0), 2: (0, 0)},
                            {(0, 1): table([(1, 0), (0, 3)]),
                             (1, 2): table([(0, 0), (1, 0)]),
                             (0, 2): table([(2, 0), (0, 1)])})
    planar2_d = Drawing({0: (F(0), F(0)), 1: (F(1), F(0)), 2: (F(2), F(1))})

    planar3 = make_instance({u: 3 for u in range(3)},
                            pairwise={(0, 1): table([(0, 5, 1), (3, 1, 0), (2, 2, 4)]),
                                      (1, 2): table([(1, 0, 2), (0, 4, 1), (5, 0, 0)]),
                                      (0, 2): table([(2, 0, 1), (0, 3, 2), (1, 1, 0)])})
    planar3_d = Drawing({0: (F(0), F(0)), 1: (F(1), F(1)), 2: (F(2), F(0))})
    return [
        ("chain", chain, None, "PO", "tree"),
        ("star", star, None, "PO", "tree"),
        ("single-node", single, None, "PO", "tree"),
        ("no-edges", empty_edges, None, "PO", "tree"),
        ("submodular-binary-cycle", sub_bin, None, "PO", "mincut"),
        ("lattice-submodular-cycle", lattice, None, "PO", "elim"),
        ("potts-cycle", potts, None, "APX", "alphaexp"),
        ("metric-non-potts-cycle", metric, None, "log-APX", "alphaexp"),
        ("general-binary-cycle", nonsub_bin, None, "exp-APX-complete-class", "brute"),
        ("general-3label-cycle", gen3, None, "exp-APX-complete-class", "brute"),
        ("planar-2label-general", planar2, planar2_d, "unknown", "brute"),
        ("planar-3label-general", planar3, planar3_d, "exp-APX-complete-class", "brute"),
    ]


def test_regression_corpus_verdicts():
    rows = corpus()
    assert len(rows) == 12
    for name, inst, d, verdict, solver in rows:
        report = classify(inst, d)
        assert report.verdict == verdict, (name, report)
        assert report.solver == solver, (name, report)


def test_verdict_consistent_with_flags():
    for name, inst, d, _, _ in corpus():
        r = classify(inst, d)
        if r.verdict == "PO" and r.solver == "mincut":
            assert r.submodular_binary
        if r.verdict == "APX":
            assert r.potts
        if r.verdict == "log-APX":
            assert r.metric and not r.potts


def test_edge_removal_always_po():
    for name, inst, d, _, _ in corpus():
        stripped = make_instance(dict(inst.labels),
                                 {u: inst.unary[u] for u in inst.nodes})
        assert classify(stripped).verdict == "PO", name


def test_report_lists_undetected_families():
    r = classify(make_instance({0: 2}, {0: (0, 1)}))
    assert r.undetected == UNDETECTED_FAMILIES
    text = r.render()
    assert "verdict: PO" in text
    assert "undetected families:" in text


def test_planarity_flag_requires_drawing():
    inst = make_instance({0: 2, 1: 2}, pairwise={(0, 1): ((1, 0), (0, 1))})
    assert classify(inst).planar_by_drawing is None
    d = Drawing({0: (F(0), F(0)), 1: (F(1), F(0))})
    assert classify(inst, d).planar_by_drawing is True
