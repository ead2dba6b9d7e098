"""Honeycomb lattice geometry: vertices, mid-edges, headings and walks.

Conventions
-----------
Vertices carry integer coordinates ``(u, v)`` with real position
``(u * sqrt(3)/2, v / 2)``.  A pair is a vertex iff ``v % 3 != 0`` and the
parity of ``u`` matches the row: ``u`` even when ``v % 6`` is 1 or 5, odd
when it is 2 or 4.  Rows with ``v % 3 == 2`` hold "Y" vertices (their
vertical edge points up), rows with ``v % 3 == 1`` hold inverted-Y
vertices (vertical edge points down).

Mid-edges use doubled coordinates ``(U, V)`` equal to the sum of the two
endpoint vertices, so every mid-edge is an integer pair with real position
``(U * sqrt(3)/4, V / 4)``.  The marked starting mid-edge ``a`` is
``(0, 0)``, the midpoint of the vertical edge between ``(0, -1)`` and
``(0, 1)``.

Headings are indexed 0..5 clockwise from "straight up"; heading ``h``
points along ``exp(i*(pi/2 - h*pi/3))``.  A walk never goes straight
through a vertex: each step turns left (heading - 1) or right
(heading + 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Literal

from .errors import ClassificationError, InvalidParameterError

Turn = Literal["L", "R"]

# Vertex-to-vertex displacement for each heading, in (u, v) units.
HEADING_STEPS: tuple[tuple[int, int], ...] = (
    (0, 2),
    (1, 1),
    (1, -1),
    (0, -2),
    (-1, -1),
    (-1, 1),
)

#: The marked mid-edge every walk starts from, and its outgoing heading.
START_MID = (0, 0)
START_HEADING = 0


def is_vertex(u: int, v: int) -> bool:
    r = v % 6
    if r in (1, 5):
        return u % 2 == 0
    if r in (2, 4):
        return u % 2 == 1
    return False


def vertex_type(u: int, v: int) -> str:
    """'Y' for an up-pointing vertical edge, 'lam' for down-pointing."""
    if not is_vertex(u, v):
        raise InvalidParameterError(f"({u}, {v}) is not a lattice vertex")
    return "Y" if v % 3 == 2 else "lam"


def vertex_neighbors(u: int, v: int) -> list[tuple[int, int]]:
    if vertex_type(u, v) == "Y":
        return [(u, v + 2), (u - 1, v - 1), (u + 1, v - 1)]
    return [(u, v - 2), (u - 1, v + 1), (u + 1, v + 1)]


def mid_edge(a: tuple[int, int], b: tuple[int, int]) -> tuple[int, int]:
    """Doubled coordinates of the midpoint of edge a--b."""
    if b not in vertex_neighbors(*a):
        raise InvalidParameterError(f"{a} and {b} are not adjacent")
    return (a[0] + b[0], a[1] + b[1])


def mid_endpoints(U: int, V: int) -> tuple[tuple[int, int], tuple[int, int]]:
    """The two vertices of the edge whose midpoint is (U, V)."""
    out = []
    for du, dv in HEADING_STEPS:
        uu, vv = U + du, V + dv
        if uu % 2 == 0 and vv % 2 == 0 and is_vertex(uu // 2, vv // 2):
            out.append((uu // 2, vv // 2))
    if len(out) != 2:
        raise InvalidParameterError(f"({U}, {V}) is not a mid-edge")
    return out[0], out[1]


def mid_headings(U: int, V: int) -> tuple[int, int]:
    """The two headings along which a walk can traverse this mid-edge."""
    hs = []
    for h, (du, dv) in enumerate(HEADING_STEPS):
        uu, vv = U + du, V + dv
        if uu % 2 == 0 and vv % 2 == 0 and is_vertex(uu // 2, vv // 2):
            hs.append(h)
    if len(hs) != 2:
        raise InvalidParameterError(f"({U}, {V}) is not a mid-edge")
    return hs[0], hs[1]


def mid_orientation(U: int, V: int) -> int:
    """0 = vertical, 1 = NE/SW slant, 2 = SE/NW slant."""
    return mid_headings(U, V)[0] % 3


def vertex_mids(u: int, v: int) -> list[tuple[int, int]]:
    """The three mid-edges incident to a vertex."""
    return [(u + w[0], v + w[1]) for w in vertex_neighbors(u, v)]


def step(
    mid: tuple[int, int], heading: int, turn: Turn
) -> tuple[tuple[int, int], tuple[int, int], int]:
    """One step: returns (vertex traversed, next mid, next heading)."""
    du, dv = HEADING_STEPS[heading]
    u, v = (mid[0] + du) // 2, (mid[1] + dv) // 2
    nh = (heading - 1) % 6 if turn == "L" else (heading + 1) % 6
    ndu, ndv = HEADING_STEPS[nh]
    return (u, v), (2 * u + ndu, 2 * v + ndv), nh


def real_xy(U: float, V: float) -> tuple[float, float]:
    return (U * 3**0.5 / 4, V / 4)


@dataclass(frozen=True)
class Walk:
    """A walk on mid-edges, stored as a start state plus a turn sequence.

    ``mids`` has length ``len(turns) + 1``; ``vertices`` lists the
    vertices traversed, one per step.
    """

    start: tuple[int, int] = START_MID
    heading: int = START_HEADING
    turns: tuple[Turn, ...] = ()

    def __post_init__(self) -> None:
        if self.heading not in mid_headings(*self.start):
            raise InvalidParameterError(
                f"heading {self.heading} does not traverse mid-edge {self.start}"
            )

    def __len__(self) -> int:
        return len(self.turns)

    @cached_property
    def _trace(self) -> tuple[list[tuple[int, int]], list[tuple[int, int]], list[int]]:
        mids = [self.start]
        verts: list[tuple[int, int]] = []
        heads = [self.heading]
        m, h = self.start, self.heading
        for t in self.turns:
            vtx, m, h = step(m, h, t)
            verts.append(vtx)
            mids.append(m)
            heads.append(h)
        return mids, verts, heads

    @property
    def mids(self) -> list[tuple[int, int]]:
        return self._trace[0]

    @property
    def vertices(self) -> list[tuple[int, int]]:
        return self._trace[1]

    @property
    def headings(self) -> list[int]:
        return self._trace[2]

    @property
    def end(self) -> tuple[int, int]:
        return self.mids[-1]

    def is_self_avoiding(self) -> bool:
        mids, verts, _ = self._trace
        return len(set(mids)) == len(mids) and len(set(verts)) == len(verts)

    def winding(self) -> int:
        """Total turning in units of pi/3 (counterclockwise positive)."""
        return self.turns.count("L") - self.turns.count("R")

    def subwalk(self, i: int, j: int) -> "Walk":
        """The portion between mid-edge indices i <= j."""
        if not 0 <= i <= j <= len(self):
            raise InvalidParameterError(f"bad subwalk range [{i}, {j}]")
        mids, _, heads = self._trace
        return Walk(mids[i], heads[i], self.turns[i:j])

    def reflect(self) -> "Walk":
        """Mirror image about the vertical axis through the start mid-edge."""
        flipped = tuple("R" if t == "L" else "L" for t in self.turns)
        return Walk(self.start, (-self.heading) % 6, flipped)

    def translate(self, dU: int, dV: int) -> "Walk":
        return Walk((self.start[0] + dU, self.start[1] + dV), self.heading, self.turns)


def winding(w: Walk) -> int:
    return w.winding()


def classify_walk(w: Walk) -> str:
    """Classify as 'bridge', 'arch', 'half-plane' or 'other'.

    A bridge starts and ends on vertical mid-edges traversed upward, with
    all interior mid-edges strictly between the two in height.  An arch
    stays strictly above its start line and comes back down to it.  A
    half-plane walk merely stays strictly above the start line.
    """
    if not w.is_self_avoiding():
        raise ClassificationError("walk is not self-avoiding")
    mids = w.mids
    v0, vn = mids[0][1], mids[-1][1]
    interior = [m[1] for m in mids[1:-1]]
    n = len(w)
    if n == 0:
        raise ClassificationError("the empty walk is not classifiable")
    vertical_up_ends = (
        mid_orientation(*mids[0]) == 0
        and mid_orientation(*mids[-1]) == 0
        and w.headings[0] == 0
        and w.headings[-1] == 0
    )
    if vertical_up_ends and all(v0 < y < vn for y in interior):
        return "bridge"
    above = all(m[1] > v0 for m in mids[1:])
    if above:
        return "half-plane"
    if vn == v0 and all(y > v0 for y in interior):
        return "arch"
    return "other"


def iter_turn_sequences(n: int) -> Iterator[tuple[Turn, ...]]:
    """All 2**n turn sequences of length n (reference-oracle helper)."""
    if n == 0:
        yield ()
        return
    for rest in iter_turn_sequences(n - 1):
        yield ("L",) + rest
        yield ("R",) + rest
