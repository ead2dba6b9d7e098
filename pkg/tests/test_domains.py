"""Domain builders and boundary classification.

The boundary oracle below re-derives every class from coordinate
predicates alone, independent of the owner-vertex logic in the package.
"""

import pytest

from hexsaw import domains as dm
from hexsaw import lattice
from hexsaw.errors import InvalidParameterError


def _oracle_class(domain, mid):
    """Classify a boundary mid-edge from raw coordinates only."""
    U, V = mid
    if V == 0:
        return dm.A_START if mid == (0, 0) else dm.A_BOTTOM
    if V == 6 * domain.T:
        return dm.B_TOP
    if domain.kind == "rectangle":
        # the half-edge points up out of the domain iff the missing
        # endpoint vertex sits above the inside one
        p, q = lattice.mid_endpoints(U, V)
        inside, outside = (p, q) if p in domain.vertices else (q, p)
        return dm.E_PLUS if outside[1] > inside[1] else dm.E_MINUS
    return dm.E_RIGHT if U > 0 else dm.E_LEFT


def _boundary_by_degree(domain):
    """A mid-edge is boundary iff one endpoint vertex lies outside."""
    out = {}
    for m in domain.mids:
        p, q = lattice.mid_endpoints(*m)
        n_in = (p in domain.vertices) + (q in domain.vertices)
        assert n_in in (1, 2)
        if n_in == 1:
            out[m] = _oracle_class(domain, m)
    return out


@pytest.mark.parametrize(
    "domain",
    [
        dm.build_trapezoid(1, 1),
        dm.build_trapezoid(2, 1),
        dm.build_trapezoid(1, 3),
        dm.build_trapezoid(3, 2),
        dm.build_rectangle(2, 2),
        dm.build_rectangle(3, 3),
        dm.build_strip_prefix(2, 2),
        dm.build_strip_prefix(2, 2, surface="bottom"),
    ],
    ids=lambda d: f"{d.kind}-{d.T}-{d.L}",
)
def test_boundary_against_oracle(domain):
    oracle = _boundary_by_degree(domain)
    for m, cls in domain.boundary.items():
        if cls == dm.INTERIOR:
            assert m not in oracle
        else:
            assert oracle[m] == cls


def test_trapezoid_boundary_counts():
    for T, L in [(1, 1), (1, 2), (2, 1), (2, 3), (3, 2)]:
        d = dm.build_trapezoid(T, L)
        assert len(d.boundary_mids(dm.A_START)) == 1
        assert len(d.boundary_mids(dm.A_BOTTOM)) == 2 * L
        assert len(d.boundary_mids(dm.B_TOP)) == 2 * L + T + 1
        assert len(d.boundary_mids(dm.E_RIGHT)) == T
        assert len(d.boundary_mids(dm.E_LEFT)) == T
        assert len(d.surface) == 2 * L + T + 1


def test_rectangle_shape():
    d = dm.build_rectangle(2, 2)
    assert d.surface == frozenset()
    assert all(abs(u) <= 2 for u, _ in d.vertices)
    eplus, eminus = d.boundary_mids(dm.E_PLUS), d.boundary_mids(dm.E_MINUS)
    assert len(eplus) == len(eminus) == d.T
    # E+ mid-edges point up out of the domain: their inside vertex is a
    # down-pointing one
    for m in eplus:
        p, q = lattice.mid_endpoints(*m)
        owner = p if p in d.vertices else q
        assert lattice.vertex_type(*owner) == "lam"


def test_strip_prefix_surface_rows():
    top = dm.build_strip_prefix(2, 3)
    bottom = dm.build_strip_prefix(2, 3, surface="bottom")
    assert {v for _, v in top.surface} == {5}
    assert {v for _, v in bottom.surface} == {1}
    assert top.max_reliable_len == 6
    assert top.vertices == bottom.vertices


def test_contains_walk():
    d = dm.build_trapezoid(1, 1)
    assert d.contains_walk(lattice.Walk(turns=("R", "L")))
    tall = lattice.Walk(turns=("R", "L", "L", "R", "R", "L"))
    assert not d.contains_walk(tall)


def test_guards():
    with pytest.raises(InvalidParameterError):
        dm.build_trapezoid(0, 1)
    with pytest.raises(InvalidParameterError):
        dm.build_strip_prefix(1, 1, surface="left")
    with pytest.raises(InvalidParameterError):
        dm.Domain("x", 1, 1, frozenset({(0, 0)}), frozenset())
