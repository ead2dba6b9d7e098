"""Exhaustive enumeration of walks and loop configurations in a domain.

The hot path (full endpoint histograms keyed by boundary class, length
and surface contacts) runs through a step-table kernel: the compiled
extension when available, otherwise a pure-Python twin with identical
semantics.  Everything that needs per-walk detail (winding phases,
penultimate mid-edges, loop decoration) uses a plain generator and is
only intended for small domains.
"""

from __future__ import annotations

import csv
import json
import sys
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterator

import numpy as np

from . import domains as dm
from . import lattice
from .errors import CapacityError, TruncationError

try:
    from . import _dfs as _kernel

    COMPILED = True
except ImportError:  # pragma: no cover - depends on build environment
    from . import _dfs_py as _kernel

    COMPILED = False

from . import _dfs_py as _pure_kernel

CLASS_ORDER = (dm.A_START, dm.A_BOTTOM, dm.B_TOP, dm.E_RIGHT, dm.E_LEFT,
               dm.E_PLUS, dm.E_MINUS, dm.INTERIOR)
CLASS_ID = {c: i for i, c in enumerate(CLASS_ORDER)}
LOOP_VERTEX_CAP = 40


@dataclass(frozen=True, eq=False)
class KernelTables:
    """Flattened stepping tables consumed by both kernels."""

    mids: tuple
    verts: tuple
    step_vert: np.ndarray    # [2*mid + dir] -> vertex ahead, -1 if outside
    step_mid: np.ndarray     # [4*mid + 2*dir + turn] -> next mid
    step_dir: np.ndarray     # [4*mid + 2*dir + turn] -> next dir flag
    vert_surface: np.ndarray
    mid_class: np.ndarray
    start_mid: int
    start_dir: int
    n_classes: int
    n_surface: int


@lru_cache(maxsize=64)
def build_tables(domain: dm.Domain) -> KernelTables:
    mids = tuple(sorted(domain.mids))
    verts = tuple(sorted(domain.vertices))
    mid_idx = {m: i for i, m in enumerate(mids)}
    vert_idx = {v: i for i, v in enumerate(verts)}
    headings = [lattice.mid_headings(*m) for m in mids]

    step_vert = np.full(2 * len(mids), -1, dtype=np.int32)
    step_mid = np.zeros(4 * len(mids), dtype=np.int32)
    step_dir = np.zeros(4 * len(mids), dtype=np.int32)
    for i, m in enumerate(mids):
        for d, h in enumerate(headings[i]):
            du, dv = lattice.HEADING_STEPS[h]
            vtx = ((m[0] + du) // 2, (m[1] + dv) // 2)
            if vtx not in domain.vertices:
                continue
            step_vert[2 * i + d] = vert_idx[vtx]
            for t, turn in enumerate(("L", "R")):
                _, nm, nh = lattice.step(m, h, turn)
                j = mid_idx[nm]
                step_mid[4 * i + 2 * d + t] = j
                step_dir[4 * i + 2 * d + t] = headings[j].index(nh)

    vert_surface = np.array(
        [1 if v in domain.surface else 0 for v in verts], dtype=np.uint8
    )
    mid_class = np.array(
        [CLASS_ID[domain.boundary[m]] for m in mids], dtype=np.int32
    )
    sm = mid_idx[lattice.START_MID]
    return KernelTables(
        mids=mids,
        verts=verts,
        step_vert=step_vert,
        step_mid=step_mid,
        step_dir=step_dir,
        vert_surface=vert_surface,
        mid_class=mid_class,
        start_mid=sm,
        start_dir=headings[sm].index(lattice.START_HEADING),
        n_classes=len(CLASS_ORDER),
        n_surface=int(vert_surface.sum()),
    )


def _resolve_max_len(domain: dm.Domain, max_len: int | None) -> int:
    hard = len(domain.mids) - 1
    if max_len is None:
        max_len = hard
    if domain.max_reliable_len is not None and max_len > domain.max_reliable_len:
        raise TruncationError(
            f"walks of length {max_len} can reach the truncation cut "
            f"(reliable up to {domain.max_reliable_len}); widen the prefix"
        )
    return min(max_len, hard)


def backend_name() -> str:
    return "compiled" if COMPILED else "pure-python"


def class_histogram(
    domain: dm.Domain, max_len: int | None = None, backend: str = "auto"
) -> np.ndarray:
    """counts[class_id, length, contacts] over all walks from a."""
    n = _resolve_max_len(domain, max_len)
    kern = {"auto": _kernel, "compiled": _kernel, "pure": _pure_kernel}[backend]
    if backend == "compiled" and not COMPILED:
        raise CapacityError("compiled kernel unavailable")
    return kern.tally_class(build_tables(domain), n)


@dataclass(frozen=True)
class SawVisit:
    """One enumerated walk, as seen by a visitor."""

    end: tuple[int, int]
    prev: tuple[int, int] | None   # penultimate mid-edge
    length: int
    contacts: int
    winding: int                   # units of pi/3
    vertices: frozenset
    mids: frozenset


def iter_saws(domain: dm.Domain, max_len: int | None = None) -> Iterator[SawVisit]:
    """Every self-avoiding walk from a, including the empty walk."""
    n_max = _resolve_max_len(domain, max_len)
    verts_used: list = []
    mids_used: list = [lattice.START_MID]
    out: list[SawVisit] = []

    def rec(mid, heading, length, contacts, wind):
        yield SawVisit(
            end=mid,
            prev=mids_used[-2] if length else None,
            length=length,
            contacts=contacts,
            winding=wind,
            vertices=frozenset(verts_used),
            mids=frozenset(mids_used),
        )
        if length >= n_max:
            return
        du, dv = lattice.HEADING_STEPS[heading]
        vtx = ((mid[0] + du) // 2, (mid[1] + dv) // 2)
        if vtx not in domain.vertices or vtx in verts_used:
            return
        verts_used.append(vtx)
        dc = 1 if vtx in domain.surface else 0
        for turn, dw in (("L", 1), ("R", -1)):
            _, nm, nh = lattice.step(mid, heading, turn)
            if nm not in mids_used:
                mids_used.append(nm)
                yield from rec(nm, nh, length + 1, contacts + dc, wind + dw)
                mids_used.pop()
        verts_used.pop()

    yield from rec(lattice.START_MID, lattice.START_HEADING, 0, 0, 0)


def enumerate_saw(
    domain: dm.Domain,
    visitor: Callable[[SawVisit], None],
    max_len: int | None = None,
) -> int:
    """Drive a visitor over every walk; returns the number of walks."""
    n = 0
    for visit in iter_saws(domain, max_len):
        visitor(visit)
        n += 1
    return n


@dataclass(frozen=True)
class Loop:
    vertices: frozenset
    length: int
    contacts: int


def enumerate_loops(domain: dm.Domain) -> list[Loop]:
    """All simple cycles fully inside the domain (vertex cap 40)."""
    if len(domain.vertices) > LOOP_VERTEX_CAP:
        raise CapacityError(
            f"loop search capped at {LOOP_VERTEX_CAP} vertices, domain has "
            f"{len(domain.vertices)}"
        )
    verts = sorted(domain.vertices)
    adj = {
        v: [w for w in lattice.vertex_neighbors(*v) if w in domain.vertices]
        for v in verts
    }
    loops = []
    path: list = []

    def extend(root, cur):
        for nxt in adj[cur]:
            if nxt == root and len(path) >= 3:
                # Count each cycle once: fix orientation by requiring the
                # second vertex to precede the last one.
                if path[1] < path[-1]:
                    vs = frozenset(path)
                    loops.append(
                        Loop(vs, len(path), sum(1 for v in vs if v in domain.surface))
                    )
            elif nxt > root and nxt not in path:
                path.append(nxt)
                extend(root, nxt)
                path.pop()

    for r in verts:
        path = [r]
        extend(r, r)
    return loops


def _loop_subsets(loops: list[Loop], busy: frozenset) -> Iterator[tuple[int, int, int]]:
    """(total length, total contacts, count) over disjoint loop subsets."""

    def rec(i, used, tot_len, tot_con, k):
        yield (tot_len, tot_con, k)
        for j in range(i, len(loops)):
            lp = loops[j]
            if not (lp.vertices & used) and not (lp.vertices & busy):
                yield from rec(
                    j + 1, used | lp.vertices, tot_len + lp.length,
                    tot_con + lp.contacts, k + 1,
                )

    yield from rec(0, frozenset(), 0, 0, 0)


Tallies = dict  # class -> {(length, contacts, loops): count}


def boundary_tallies(
    domain: dm.Domain,
    max_len: int | None = None,
    with_loops: bool = False,
    backend: str = "auto",
) -> Tallies:
    """Configuration tallies keyed by boundary class of the walk's end."""
    out: Tallies = {c: {} for c in CLASS_ORDER}
    if not with_loops:
        hist = class_histogram(domain, max_len, backend)
        nz = np.argwhere(hist)
        for ci, ln, ct in nz:
            out[CLASS_ORDER[ci]][(int(ln), int(ct), 0)] = int(hist[ci, ln, ct])
        return out
    loops = enumerate_loops(domain)
    for visit in iter_saws(domain, max_len):
        cls = domain.boundary[visit.end]
        tally = out[cls]
        for ll, lc, lk in _loop_subsets(loops, visit.vertices):
            key = (visit.length + ll, visit.contacts + lc, lk)
            tally[key] = tally.get(key, 0) + 1
    return out


def evaluate_tally(tally: dict, consts, y) -> object:
    """Sum count * x_c^len * y^contacts * n^loops over one tally."""
    yv = consts.surface_weight(y)
    x = consts.x_c
    total = consts.one() * 0
    xpow = {}
    for (ln, ct, lp), cnt in sorted(tally.items()):
        if lp and consts.n == 0:
            continue
        if ln not in xpow:
            xpow[ln] = x**ln
        term = cnt * xpow[ln] * yv**ct
        if lp:
            term = term * consts.n**lp
        total = total + term
    return total


def observable_f(
    domain: dm.Domain,
    consts,
    y,
    with_loops: bool = False,
    split_prev: bool = False,
) -> dict:
    """The parafermionic observable F(p) at every mid-edge p.

    With ``split_prev`` the keys are (end, penultimate mid) pairs, which
    is what the boundary-vertex identity needs.
    """
    yv = consts.surface_weight(y)
    x = consts.x_c
    loops = enumerate_loops(domain) if with_loops else []
    acc: dict = {}
    xpow: dict = {}
    phases: dict = {}
    for visit in iter_saws(domain):
        if visit.length not in xpow:
            xpow[visit.length] = x**visit.length
        if visit.winding not in phases:
            phases[visit.winding] = consts.phase(visit.winding)
        base = xpow[visit.length] * phases[visit.winding]
        if with_loops:
            w = consts.one() * 0
            for ll, lc, lk in _loop_subsets(loops, visit.vertices):
                if lk and consts.n == 0:
                    continue
                t = x**ll * yv ** (visit.contacts + lc)
                if lk:
                    t = t * consts.n**lk
                w = w + t
            term = base * w
        else:
            term = base * yv**visit.contacts
        key = (visit.end, visit.prev) if split_prev else visit.end
        acc[key] = acc.get(key, consts.one() * 0) + term
    return acc


def half_plane_counts(N: int, backend: str = "auto") -> dict[tuple[int, int], int]:
    """c[n, i]: walks of length n <= N in the upper half-plane with i
    visits to the boundary vertex row."""
    Lmax = (N + 1) // 2 + 1
    domain = dm.build_strip_prefix(max(N, 1), Lmax, surface="bottom")
    hist = class_histogram(domain, max_len=N, backend=backend)
    # Walks ending back on the bottom line leave the open upper
    # half-plane, so the A class is excluded (the start itself stays:
    # it only ever holds the empty walk).
    keep = [i for i, c in enumerate(CLASS_ORDER) if c != dm.A_BOTTOM]
    agg = hist[keep].sum(axis=0)
    out = {}
    for n in range(N + 1):
        for i in range(agg.shape[1]):
            if agg[n, i]:
                out[(n, i)] = int(agg[n, i])
    return out


def tallies_to_json(tallies: Tallies) -> str:
    return json.dumps(
        {
            cls: [[ln, ct, lp, cnt] for (ln, ct, lp), cnt in sorted(t.items())]
            for cls, t in tallies.items()
            if t
        },
        indent=1,
    )


def tallies_to_csv(tallies: Tallies, fh=None) -> None:
    w = csv.writer(fh or sys.stdout)
    w.writerow(["class", "length", "contacts", "loops", "count"])
    for cls in CLASS_ORDER:
        for (ln, ct, lp), cnt in sorted(tallies.get(cls, {}).items()):
            w.writerow([cls, ln, ct, lp, cnt])
