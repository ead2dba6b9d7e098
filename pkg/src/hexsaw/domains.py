"""Finite domains: trapezoids, rectangles and truncated strips.

A domain is a finite vertex set plus the half-edges they carry.  Every
mid-edge incident to a domain vertex belongs to the domain; a mid-edge
whose far endpoint falls outside the vertex set is a boundary half-edge
and gets a boundary class.  Walks start on the marked vertical mid-edge
``a = (0, 0)`` just below the bottom row and may end on any mid-edge.

Trapezoid D(T, L): T rows of cells, bottom row 2L+1 cells wide, each row
one cell wider per side going up, sides sloping outward.  The weighted
surface is the top row of vertices.  Its boundary splits into the bottom
line A (2L+1 vertical mid-edges, including a), the top line B (2L+T+1
mid-edges), and T outward-sloping half-edges on each side (E right,
EBAR left).

Rectangle R(T, L): vertical sides instead, |u| <= L.  Side half-edges
point up out of a down-vertex row (class EPLUS) or down out of an
up-vertex row (EMINUS).  The rectangle carries no weighted surface.

Strip prefix: the infinite strip of height T cut at |u| <= 2*Lmax + 1.
Tallies agree with the infinite strip for walks of length <= 2*Lmax;
enumerating longer walks raises TruncationError upstream.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property

from .errors import InvalidParameterError
from . import lattice
from .lattice import is_vertex, mid_endpoints, vertex_mids, vertex_type

# Boundary classes.
A_START = "a"        # the marked starting mid-edge itself
A_BOTTOM = "A"       # other bottom-line mid-edges
B_TOP = "B"
E_RIGHT = "E"
E_LEFT = "EBAR"
E_PLUS = "E+"
E_MINUS = "E-"
INTERIOR = "int"


@dataclass(frozen=True)
class Domain:
    kind: str
    T: int
    L: int
    vertices: frozenset[tuple[int, int]]
    surface: frozenset[tuple[int, int]]
    #: walks longer than this are unreliable (None = no truncation)
    max_reliable_len: int | None = None

    def __post_init__(self):
        for u, v in self.vertices:
            if not is_vertex(u, v):
                raise InvalidParameterError(f"({u}, {v}) is not a lattice vertex")
        if not self.surface <= self.vertices:
            raise InvalidParameterError("surface vertices must lie in the domain")
        if lattice.START_MID not in self.mids:
            raise InvalidParameterError("domain does not contain the start mid-edge")

    @cached_property
    def mids(self) -> frozenset[tuple[int, int]]:
        out = set()
        for vtx in self.vertices:
            out.update(vertex_mids(*vtx))
        return frozenset(out)

    @cached_property
    def boundary(self) -> dict[tuple[int, int], str]:
        """Boundary class of every mid-edge (INTERIOR for full edges)."""
        out = {}
        for m in self.mids:
            p, q = mid_endpoints(*m)
            inside = [vtx for vtx in (p, q) if vtx in self.vertices]
            if len(inside) == 2:
                out[m] = INTERIOR
            else:
                out[m] = self._classify_boundary(m, inside[0])
        return out

    def _classify_boundary(self, m, owner) -> str:
        U, V = m
        if V == 0:
            return A_START if m == lattice.START_MID else A_BOTTOM
        if V == 6 * self.T:
            return B_TOP
        if self.kind == "rectangle":
            return E_PLUS if vertex_type(*owner) == "lam" else E_MINUS
        return E_RIGHT if U > 0 else E_LEFT

    def boundary_mids(self, cls: str) -> list[tuple[int, int]]:
        return sorted(m for m, c in self.boundary.items() if c == cls)

    def contains_walk(self, w: lattice.Walk) -> bool:
        return all(v in self.vertices for v in w.vertices) and all(
            m in self.mids for m in w.mids
        )

    def to_json(self) -> str:
        return json.dumps(
            {
                "kind": self.kind,
                "T": self.T,
                "L": self.L,
                "vertices": sorted(self.vertices),
                "surface": sorted(self.surface),
                "boundary": {
                    cls: self.boundary_mids(cls)
                    for cls in (A_START, A_BOTTOM, B_TOP, E_RIGHT, E_LEFT,
                                E_PLUS, E_MINUS)
                    if self.boundary_mids(cls)
                },
                "max_reliable_len": self.max_reliable_len,
            },
            indent=1,
        )


def _check_TL(T: int, L: int) -> None:
    if T < 1 or L < 1:
        raise InvalidParameterError(f"need T >= 1 and L >= 1, got T={T}, L={L}")


def build_trapezoid(T: int, L: int) -> Domain:
    _check_TL(T, L)
    verts = set()
    for k in range(T):
        # down-vertex row of cell row k, then up-vertex row (one wider).
        for u in range(-(2 * L + k), 2 * L + k + 1):
            if (u - k) % 2 == 0:
                verts.add((u, 3 * k + 1))
        for u in range(-(2 * L + 1 + k), 2 * L + k + 2):
            if (u - k - 1) % 2 == 0:
                verts.add((u, 3 * k + 2))
    surface = frozenset(v for v in verts if v[1] == 3 * T - 1)
    return Domain("trapezoid", T, L, frozenset(verts), surface)


def build_rectangle(T: int, L: int) -> Domain:
    _check_TL(T, L)
    verts = set()
    for v in range(1, 3 * T):
        for u in range(-L, L + 1):
            if is_vertex(u, v):
                verts.add((u, v))
    return Domain("rectangle", T, L, frozenset(verts), frozenset())


def build_strip_prefix(T: int, Lmax: int, surface: str = "top") -> Domain:
    """Height-T strip truncated at |u| <= 2*Lmax + 1.

    Walk tallies below length 2*Lmax coincide with the infinite strip: a
    walk of n steps moves at most n columns sideways, so it cannot feel
    the cut.  ``surface`` selects which vertex row carries the contact
    weight ('top' or 'bottom').
    """
    _check_TL(T, Lmax)
    if surface not in ("top", "bottom"):
        raise InvalidParameterError(f"surface must be 'top' or 'bottom', not {surface!r}")
    width = 2 * Lmax + 1
    verts = set()
    for v in range(1, 3 * T):
        for u in range(-width, width + 1):
            if is_vertex(u, v):
                verts.add((u, v))
    row = 3 * T - 1 if surface == "top" else 1
    srf = frozenset(v for v in verts if v[1] == row)
    dom = Domain("strip", T, Lmax, frozenset(verts), srf,
                 max_reliable_len=2 * Lmax)
    return dom
