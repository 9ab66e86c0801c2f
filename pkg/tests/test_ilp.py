import io
import random

import pytest
from hypothesis import given, settings, strategies as st

from maglab.generators import complete_graph, cycle
from maglab.graph import Cls
from maglab.ilp import IlpError, IlpModel, build_ilp, feasible_k_range, ilp_sweep, write_model
from maglab.labelling import EDGE_ONLY, TOTAL, Kind, TargetKind, random_labelling, weights_of

from strategies import instances

EDGE_MAGIC = TargetKind(Cls.EDGE, Kind.MAGIC)


def test_k3_total_counts():
    m = build_ilp(complete_graph(3), TOTAL, EDGE_MAGIC, 12)
    assert len(m.binaries) == 36 and len(m.continuous) == 3
    names = [c.name for c in m.constraints]
    assert sum(n.startswith("row_") for n in names) == 6
    assert sum(n.startswith("col_") for n in names) == 6
    assert sum(n.startswith("abs") for n in names) == 6


@settings(max_examples=50)
@given(instances(max_vertices=5, kinds=(Kind.MAGIC,)), st.integers(1, 40))
def test_general_counts(inst, K):
    g, sel, tk = inst
    if tk.super_:
        return
    m = build_ilp(g, sel, tk, K)
    n, s = sel.size(g), g.count(tk.target)
    assert m.n_variables == n * n + s
    assert len(m.constraints) == 2 * n + 2 * s


@settings(max_examples=50)
@given(instances(max_vertices=5, kinds=(Kind.MAGIC,)), st.integers(0, 2**32), st.integers(1, 40))
def test_bridge(inst, seed, K):
    g, sel, tk = inst
    if tk.super_:
        return
    m = build_ilp(g, sel, tk, K)
    lab = random_labelling(g, sel, seed=seed)
    point = m.encode(lab.labels)
    assert all(c.holds(point) for c in m.constraints if c.name.startswith(("row_", "col_")))
    y = m.minimal_y(point)
    point.update(y)
    assert all(c.holds(point) for c in m.constraints)
    assert sum(y.values()) == sum(abs(w - K) for w in weights_of(g, lab, tk.target))


def test_lp_text_is_deterministic():
    a = write_model(build_ilp(cycle(4), TOTAL, EDGE_MAGIC, 12))
    b = write_model(build_ilp(cycle(4), TOTAL, EDGE_MAGIC, 12))
    assert a == b
    assert a.splitlines()[1] == "Minimize" and a.rstrip().endswith("End")
    assert all(len(line) <= 201 for line in a.splitlines())
    sink = io.StringIO()
    write_model(build_ilp(cycle(4), TOTAL, EDGE_MAGIC, 12), sink)
    assert sink.getvalue() == a


def test_rejections():
    with pytest.raises(IlpError):
        build_ilp(cycle(3), TOTAL, TargetKind(Cls.EDGE, Kind.ANTIMAGIC), 5)
    with pytest.raises(IlpError):
        build_ilp(cycle(3), TOTAL, TargetKind(Cls.EDGE, Kind.MAGIC, super_=True), 9)
    with pytest.raises(IlpError):
        write_model(IlpModel(n=0, K=0, beta={}))


def test_sweep_covers_feasible_range():
    ks = [K for K, _ in ilp_sweep(cycle(3), TOTAL, EDGE_MAGIC)]
    assert ks == list(feasible_k_range(cycle(3), TOTAL, EDGE_MAGIC))
    assert {9, 10, 11, 12} <= set(ks)


def _solve_with_highs(text, tmp_path):
    highspy = pytest.importorskip("highspy")
    path = tmp_path / "model.lp"
    path.write_text(text)
    h = highspy.Highs()
    h.silent()
    assert h.readModel(str(path)) == highspy.HighsStatus.kOk
    h.run()
    return h.getInfo().objective_function_value


@pytest.mark.parametrize("K, optimum", [(6, 0), (7, 1), (5, 1)])
def test_external_solver_reads_model(K, optimum, tmp_path):
    text = write_model(build_ilp(complete_graph(2), TOTAL, EDGE_MAGIC, K))
    assert _solve_with_highs(text, tmp_path) == pytest.approx(optimum)


def test_external_solver_c3(tmp_path):
    assert _solve_with_highs(write_model(build_ilp(cycle(3), TOTAL, EDGE_MAGIC, 10)), tmp_path) == pytest.approx(0)
    # K4 edge labelling is never vertex-magic
    text = write_model(build_ilp(complete_graph(4), EDGE_ONLY, TargetKind(Cls.VERTEX, Kind.MAGIC), 10))
    assert _solve_with_highs(text, tmp_path) > 0.5
