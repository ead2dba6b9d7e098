"""Lattice geometry and walk mechanics."""

import pytest

from hexsaw import lattice
from hexsaw.errors import ClassificationError, InvalidParameterError
from hexsaw.lattice import Walk, classify_walk, iter_turn_sequences


def test_vertex_predicate():
    assert lattice.is_vertex(0, 1)
    assert lattice.is_vertex(1, 2)
    assert not lattice.is_vertex(0, 0)
    assert not lattice.is_vertex(1, 1)
    assert not lattice.is_vertex(0, 3)
    # parity alternation between rows
    assert lattice.is_vertex(0, 5) and not lattice.is_vertex(1, 5)
    assert lattice.is_vertex(1, 4) and not lattice.is_vertex(0, 4)


def test_vertex_types_and_neighbors():
    assert lattice.vertex_type(1, 2) == "Y"
    assert lattice.vertex_type(0, 1) == "lam"
    for v in [(0, 1), (1, 2), (1, 4), (0, 5)]:
        nbrs = lattice.vertex_neighbors(*v)
        assert len(nbrs) == 3
        for nb in nbrs:
            assert lattice.is_vertex(*nb)
            assert v in lattice.vertex_neighbors(*nb)


def test_mid_edge_roundtrip():
    a, b = (1, 2), (1, 4)
    m = lattice.mid_edge(a, b)
    assert m == (2, 6)
    assert set(lattice.mid_endpoints(*m)) == {a, b}
    assert lattice.mid_orientation(*m) == 0
    with pytest.raises(InvalidParameterError):
        lattice.mid_edge((1, 2), (0, 5))


def test_step_geometry():
    vtx, mid, heading = lattice.step(lattice.START_MID, 0, "R")
    assert vtx == (0, 1) and mid == (1, 3) and heading == 1
    vtx, mid, heading = lattice.step(lattice.START_MID, 0, "L")
    assert vtx == (0, 1) and mid == (-1, 3) and heading == 5


def test_walk_trace_and_winding():
    w = Walk(turns=("R", "L", "L", "R"))
    assert len(w) == 4
    assert w.end == (0, 12)
    assert w.winding() == 0
    assert w.is_self_avoiding()
    assert Walk(turns=("R", "R")).winding() == -2
    assert Walk(turns=("L",)).winding() == 1


def test_walk_mid_distinctness_kills_hexagon():
    # six identical turns close a hexagon: vertices distinct only until
    # the final step revisits the starting mid-edge
    w = Walk(turns=("R",) * 6)
    assert not w.is_self_avoiding()


def test_subwalk_reflect_translate():
    w = Walk(turns=("R", "L", "L", "R"))
    s = w.subwalk(2, 4)
    assert s.start == w.mids[2] and len(s) == 2
    r = w.reflect()
    assert r.end == (-w.end[0], w.end[1])
    t = w.translate(4, 0)
    assert t.end == (4, 12)


def test_classify():
    assert classify_walk(Walk(turns=("R", "L"))) == "bridge"
    assert classify_walk(Walk(turns=("R", "L", "L", "R"))) == "bridge"
    assert classify_walk(Walk(turns=("R", "R", "R"))) == "arch"
    assert classify_walk(Walk(turns=("R",))) == "half-plane"
    # one step down from above cannot happen from the start heading, but a
    # walk that dips back to the start line without ending vertical is
    # neither arch nor bridge
    assert classify_walk(Walk(turns=("R", "R"))) == "half-plane"
    with pytest.raises(ClassificationError):
        classify_walk(Walk())


def test_classify_heights_definition():
    # brute force: bridge iff interior mid-edges strictly between the
    # endpoint heights and both ends vertical upward
    for n in range(1, 7):
        for turns in iter_turn_sequences(n):
            w = Walk(turns=turns)
            if not w.is_self_avoiding():
                continue
            mids, heads = w.mids, w.headings
            expect = (
                heads[0] == 0
                and heads[-1] == 0
                and lattice.mid_orientation(*mids[-1]) == 0
                and all(mids[0][1] < m[1] < mids[-1][1] for m in mids[1:-1])
            )
            assert (classify_walk(w) == "bridge") == expect


def test_real_coordinates():
    x, y = lattice.real_xy(2, 6)
    assert abs(x - 3**0.5 / 2) < 1e-15 and abs(y - 1.5) < 1e-15
