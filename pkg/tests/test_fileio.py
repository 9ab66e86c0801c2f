import io

import pytest
from hypothesis import given, settings, strategies as st

from maglab.fileio import (BENCH_HEADER, BenchRecord, BenchWriter, FormatError, LabellingRecord,
                           format_graph, format_labelling, parse_graph, parse_labelling, read_bench,
                           read_graph, write_graph)
from maglab.generators import cycle, petersen, wheel
from maglab.graph import Cls, GraphError
from maglab.labelling import TOTAL, Kind, TargetKind, random_labelling, verify

from strategies import instances, small_graphs


@given(small_graphs())
def test_graph_round_trip(g):
    assert parse_graph(format_graph(g)) == g


def test_graph_file_round_trip(tmp_path):
    g = wheel(6, faces=True)
    path = tmp_path / "w.txt"
    write_graph(g, str(path))
    assert read_graph(str(path)) == g


def test_face_closing_vertex_is_optional():
    open_walk = "graph 3 3 1\ne 1 2\ne 2 3\ne 3 1\nf 1 2 3\n"
    closed_walk = "graph 3 3 1\ne 1 2\ne 2 3\ne 3 1\nf 1 2 3 1\n"
    assert parse_graph(open_walk) == parse_graph(closed_walk) == cycle(3, faces=True)


@pytest.mark.parametrize("text, exc", [
    ("e 1 2\n", FormatError),
    ("graph 2 2 0\ne 1 2\n", FormatError),
    ("graph 2 1 0\ne 1 x\n", FormatError),
    ("graph 2 1 0\nq 1 2\n", FormatError),
    ("graph 2 1 0\ne 1 1\n", GraphError),
    ("graph 2 1 0\ne 1 3\n", GraphError),
])
def test_bad_graph_files(text, exc):
    with pytest.raises(exc):
        parse_graph(text)


def test_comments_and_blank_lines():
    text = "# a path\ngraph 2 1 0\n\ne 1 2  # the edge\n"
    assert parse_graph(text).edges == ((0, 1),)


@settings(max_examples=60)
@given(instances(), st.integers(0, 2**32))
def test_labelling_round_trip_and_reverify(inst, seed):
    g, sel, tk = inst
    lab = random_labelling(g, sel, tk.super_, seed)
    report = verify(g, lab, sel, tk)
    rec = LabellingRecord(lab, tk, report.accepted, report.attestation(), {"seed": str(seed)})
    back = parse_labelling(format_labelling(g, rec), g)
    assert back.labelling.labels == lab.labels
    assert back.target == tk
    assert back.meta == {"seed": str(seed)}
    again = verify(g, back.labelling, back.labelling.selector, back.target)
    assert again.attestation() == back.attestation


def test_labelling_structure_errors():
    g = cycle(3)
    lab = random_labelling(g, TOTAL, seed=0)
    text = format_labelling(g, LabellingRecord(lab, TargetKind(Cls.EDGE, Kind.MAGIC)))
    with pytest.raises(FormatError):
        parse_labelling(text.replace("n 6", "n 7"), g)
    with pytest.raises(FormatError):
        parse_labelling("\n".join(l for l in text.splitlines() if l != "v 1 " + str(lab.labels[0])), g)
    with pytest.raises(FormatError):
        parse_labelling(text + "v 9 1\n", g)
    with pytest.raises(FormatError):
        parse_labelling(text + "f 1 1\n", g)
    with pytest.raises(FormatError):
        parse_labelling(text.replace("labelling\n", "", 1), g)


def test_bench_round_trip():
    recs = [BenchRecord("kn-super-vmt", "6", 0, 1234, 56, 0.25, True),
            BenchRecord("p2p3-antimagic", "3:1", 1, 99, 7, None, False)]
    buf = io.StringIO()
    w = BenchWriter(buf)
    for r in recs:
        w.write(r)
    assert buf.getvalue().splitlines()[0] == ",".join(BENCH_HEADER)
    buf.seek(0)
    assert read_bench(buf) == recs


def test_bench_header_checked():
    with pytest.raises(FormatError):
        read_bench(io.StringIO("a,b\n1,2\n"))


def test_petersen_file_has_expected_size():
    text = format_graph(petersen())
    assert text.splitlines()[0] == "graph 10 15 0"
