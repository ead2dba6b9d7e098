"""Renewal structure of bridges, diamond points, unfolding, prime-arch
factorization, the stickbreak perturbation, and a truncated renewal
sampler.

A bridge decomposes uniquely at its renewal points into irreducible
bridges.  The critical weights x_c^|gamma| of irreducible bridges sum
to 1 (Kesten's relation); this module computes exact truncated partial
sums of that series in Q(zeta_48).

Coordinates follow :mod:`hexsaw.lattice`: mid-edges carry doubled
integer pairs (U, V) with real position (U*sqrt(3)/4, V/4), so a
bridge's height is (V_end - V_start)/6 and the x-spread of a set of
mid-edges is (max U - min U)*sqrt(3)/4.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

from . import lattice
from .cyclo import Cyclo48
from .errors import CapacityError, ClassificationError, InvalidParameterError
from .lattice import Walk
from .model import constants

#: Enumeration budget for the truncated irreducible-bridge pool.
N_CAP = 20


# ---------------------------------------------------------------------------
# height, width, renewal points
# ---------------------------------------------------------------------------

def height_width(w: Walk) -> tuple[Fraction, Fraction]:
    """Exact height (2/3 of the vertical extent of the endpoint) and
    width (horizontal spread of the mid-edges divided by sqrt(3))."""
    mids = w.mids
    height = Fraction(mids[-1][1] - mids[0][1], 6)
    us = [m[0] for m in mids]
    width = Fraction(max(us) - min(us), 4)
    return height, width


def _require_bridge(b: Walk) -> None:
    if lattice.classify_walk(b) != "bridge":
        raise ClassificationError("walk is not a bridge")


def renewal_points(b: Walk) -> list[int]:
    """Mid-edge indices splitting the bridge into two bridges.

    Always contains 0 and len(b).  An interior index qualifies iff the
    mid-edge is vertical, traversed upward, and strictly separates the
    walk by height.
    """
    _require_bridge(b)
    mids, heads = b.mids, b.headings
    n = len(b)
    out = [0]
    running_max = mids[0][1]
    suffix_min = [0] * (n + 1)
    suffix_min[n] = mids[n][1]
    for i in range(n - 1, -1, -1):
        suffix_min[i] = min(mids[i][1], suffix_min[i + 1])
    for i in range(1, n):
        if (
            heads[i] == 0
            and lattice.mid_orientation(*mids[i]) == 0
            and running_max < mids[i][1] < suffix_min[i + 1]
        ):
            out.append(i)
        running_max = max(running_max, mids[i][1])
    out.append(n)
    return out


def is_irreducible(b: Walk) -> bool:
    return len(renewal_points(b)) == 2


@dataclass(frozen=True)
class BridgeDecomposition:
    """A bridge cut at its renewal points into irreducible factors."""

    bridge: Walk
    renewal_indices: tuple[int, ...]
    factors: tuple[Walk, ...]       # each translated to start at a
    heights: tuple[Fraction, ...]
    widths: tuple[Fraction, ...]


def irreducible_factors(b: Walk) -> BridgeDecomposition:
    idx = renewal_points(b)
    factors = []
    for i, j in zip(idx, idx[1:]):
        piece = b.subwalk(i, j)
        factors.append(Walk(lattice.START_MID, 0, piece.turns))
    hw = [height_width(f) for f in factors]
    return BridgeDecomposition(
        bridge=b,
        renewal_indices=tuple(idx),
        factors=tuple(factors),
        heights=tuple(h for h, _ in hw),
        widths=tuple(w for _, w in hw),
    )


def concat_bridges(factors: Sequence[Walk]) -> Walk:
    """Concatenate bridges started at a by splicing their turn lists."""
    turns: tuple = ()
    for f in factors:
        _require_bridge(f)
        turns = turns + f.turns
    return Walk(lattice.START_MID, 0, turns)


# ---------------------------------------------------------------------------
# free enumeration of half-plane walks and bridges
# ---------------------------------------------------------------------------

def iter_half_plane_walks(max_len: int) -> Iterator[Walk]:
    """Every nonempty self-avoiding walk from a whose mid-edges after
    the start stay strictly above the start line, up to max_len steps."""
    start = lattice.START_MID
    turns: list[str] = []
    mid_set = {start}
    vert_set: set[tuple[int, int]] = set()

    def rec(mid, head):
        if turns:
            yield Walk(start, 0, tuple(turns))
        if len(turns) >= max_len:
            return
        for t in ("L", "R"):
            vtx, nmid, nhead = lattice.step(mid, head, t)
            if nmid[1] <= 0 or nmid in mid_set or vtx in vert_set:
                continue
            turns.append(t)
            mid_set.add(nmid)
            vert_set.add(vtx)
            yield from rec(nmid, nhead)
            turns.pop()
            mid_set.remove(nmid)
            vert_set.remove(vtx)

    yield from rec(start, 0)


def iter_bridges(max_len: int, irreducible: bool | None = None) -> Iterator[Walk]:
    for w in iter_half_plane_walks(max_len):
        if lattice.classify_walk(w) != "bridge":
            continue
        if irreducible is None or is_irreducible(w) == irreducible:
            yield w


@lru_cache(maxsize=8)
def bridge_height_length_counts(
    max_len: int, irreducible_only: bool = False
) -> dict[tuple[int, int], int]:
    """Counts of bridges by (height, length) up to max_len steps."""
    if max_len > N_CAP:
        raise CapacityError(f"bridge enumeration capped at length {N_CAP}")
    counts: dict[tuple[int, int], int] = {}
    for b in iter_bridges(max_len, irreducible=True if irreducible_only else None):
        h, _ = height_width(b)
        key = (int(h), len(b))
        counts[key] = counts.get(key, 0) + 1
    return counts


# ---------------------------------------------------------------------------
# Kesten partial sums
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RenewalStats:
    """Truncated renewal data for irreducible bridges of length <= N."""

    N: int
    counts: dict                    # (height, length) -> int, irreducible
    f_h: dict                       # height -> Cyclo48 mass
    partial_sum: Cyclo48            # sum of f_h, exact
    partial_sum_float: float
    mean_height: Cyclo48            # sum h*f_h / Z_N, exact
    mean_height_float: float

    def to_json(self) -> str:
        return json.dumps(
            {
                "truncation_N": self.N,
                "kesten_partial": self.partial_sum_float,
                "f_h": {str(h): self.f_h[h].to_float() for h in sorted(self.f_h)},
                "mean_height_truncated": self.mean_height_float,
            },
            indent=1,
        )


def kesten_partial(N: int) -> RenewalStats:
    """Exact partial sum of x_c^|gamma| over irreducible bridges with
    |gamma| <= N, together with the per-height masses f_h."""
    counts = bridge_height_length_counts(N, irreducible_only=True)
    x_c = constants(0, "dilute").x_c
    xpow = {0: Cyclo48.from_rational(1)}
    for k in range(1, N + 1):
        xpow[k] = xpow[k - 1] * x_c
    zero = Cyclo48.from_rational(0)
    f_h: dict[int, Cyclo48] = {}
    for (h, n), c in counts.items():
        f_h[h] = f_h.get(h, zero) + xpow[n] * c
    total = zero
    weighted = zero
    for h, v in f_h.items():
        total = total + v
        weighted = weighted + v * h
    mean = weighted / total
    return RenewalStats(
        N=N,
        counts=dict(counts),
        f_h=f_h,
        partial_sum=total,
        partial_sum_float=total.to_float(),
        mean_height=mean,
        mean_height_float=mean.to_float(),
    )


def renewal_consistency(N: int, t_max: int) -> list[dict]:
    """Renewal sequence v_T of the truncated height masses, compared with
    the limit Z_N / sum(h*f_h) it converges to, and with the strip
    bridge series B_T(x_c, 1).

    No convergence of B_T to the truncated limit is asserted: the exact
    mean height of irreducible bridges is infinite, so the truncated
    expectation only grows with N.
    """
    from . import strip as sp

    stats = kesten_partial(N)
    z = stats.partial_sum_float
    # normalized height distribution of the truncated irreducible pool
    f = {h: v.to_float() / z for h, v in stats.f_h.items()}
    limit = 1.0 / sum(h * v for h, v in f.items())      # = Z_N / sum h*f_h
    inv_mean = limit / z                                # = 1 / sum h*f_h
    v = [1.0]
    rows = []
    for t in range(1, t_max + 1):
        v.append(sum(f.get(h, 0.0) * v[t - h] for h in range(1, t + 1)))
        if t <= sp.T_CAP_FLOAT:
            mode = "auto" if t <= sp.T_CAP_EXACT else "float"
            val = sp.strip_gf(t, 1, "bridge", mode=mode).value
            b_t = val.to_float() if isinstance(val, Cyclo48) else float(val)
        else:
            b_t = None
        rows.append(
            {
                "T": t,
                "N": N,
                "v_T": v[t],
                "renewal_limit": limit,
                "gap_vT_limit": abs(v[t] - limit),
                "inverse_mean_height": inv_mean,
                "B_T": b_t,
            }
        )
    return rows


# ---------------------------------------------------------------------------
# diamond points and stickbreak
# ---------------------------------------------------------------------------

def diamond_points(b: Walk) -> list[int]:
    """Indices of vertical mid-edges such that the whole walk lies in the
    double cone with apexes half an edge below and above the mid-edge
    and boundary slopes +-60 degrees."""
    _require_bridge(b)
    mids = b.mids
    out = []
    for k, (uk, vk) in enumerate(mids):
        if lattice.mid_orientation(uk, vk) != 0:
            continue
        ok = True
        for (u, v) in mids:
            d = 3 * abs(u - uk)
            if not (v - vk + 2 >= d or vk + 2 - v >= d):
                ok = False
                break
        if ok:
            out.append(k)
    return out


def stickbreak(b: Walk, i: int, j: int) -> Walk:
    """Rotate the subpath between the i-th and j-th diamond points
    clockwise by pi/3, splicing it back with one extra right turn before
    and one extra left turn after.  The result is a self-avoiding bridge
    two steps longer than the input."""
    d = diamond_points(b)
    if not (0 <= i < j < len(d)):
        raise InvalidParameterError(
            f"need diamond positions 0 <= i < j < {len(d)}, got ({i}, {j})"
        )
    di, dj = d[i], d[j]
    t = b.turns
    return Walk(b.start, b.heading, t[:di] + ("R",) + t[di:dj] + ("L",) + t[dj:])


def rotated_segment(b: Walk, i: int, j: int) -> Walk:
    """The middle segment of ``stickbreak(b, i, j)`` as it appears in the
    output: the subpath between the selected diamond points, rotated
    clockwise by pi/3."""
    out = stickbreak(b, i, j)
    d = diamond_points(b)
    return out.subwalk(d[i] + 1, d[j] + 1)


# ---------------------------------------------------------------------------
# unfolding
# ---------------------------------------------------------------------------

def _turns_from_headings(heads: Sequence[int]) -> tuple[str, ...]:
    out = []
    for h, nh in zip(heads, heads[1:]):
        if nh == (h - 1) % 6:
            out.append("L")
        elif nh == (h + 1) % 6:
            out.append("R")
        else:
            raise ClassificationError("reflection broke the turn sequence")
    return tuple(out)


def _reflect_suffix(w: Walk, k: int) -> Walk:
    """Reflect the part of the walk after vertex index k in the vertical
    line through that vertex.  The turn at the pivot vertex flips
    exactly when its outgoing mid-edge is a slanted one."""
    heads = w.headings
    new_heads = list(heads[: k + 1]) + [(-h) % 6 for h in heads[k + 1:]]
    return Walk(w.start, w.heading, _turns_from_headings(new_heads))


def _reflect_prefix(w: Walk, k: int) -> Walk:
    """Reflect the part of the walk before vertex index k in the vertical
    line through that vertex."""
    heads = w.headings
    uk = w.vertices[k][0]
    new_heads = [(-h) % 6 for h in heads[: k + 1]] + list(heads[k + 1:])
    new_start = (4 * uk - w.start[0], w.start[1])
    return Walk(new_start, new_heads[0], _turns_from_headings(new_heads))


def unfold(w: Walk) -> Walk:
    """Iterated reflection at extremal-x vertices until the start
    mid-edge is minimal and the end mid-edge maximal in x.

    The input must be self-avoiding; the output has the same length, is
    self-avoiding, and is a fixpoint of this map.
    """
    if not w.is_self_avoiding():
        raise ClassificationError("walk is not self-avoiding")
    if len(w) == 0:
        return w
    for _ in range(4 * len(w) + 8):
        verts = w.vertices
        us = [2 * u for u, _ in verts]
        if max(us) > w.end[0]:
            m = max(u for u, _ in verts)
            k = max(i for i, (u, _) in enumerate(verts) if u == m)
            w = _reflect_suffix(w, k)
            continue
        if min(us) < w.start[0]:
            m = min(u for u, _ in verts)
            k = min(i for i, (u, _) in enumerate(verts) if u == m)
            w = _reflect_prefix(w, k)
            continue
        return w
    raise ClassificationError("unfolding failed to terminate")


# ---------------------------------------------------------------------------
# unfolded arches and prime factorization
# ---------------------------------------------------------------------------

def is_unfolded_arch(w: Walk) -> bool:
    """An arch (returning to the start line) all of whose vertices lie
    weakly right of the start and strictly left of the end, except the
    final vertex which sits directly above the end mid-edge."""
    if lattice.classify_walk(w) != "arch":
        return False
    u0, ub = w.start[0], w.end[0]
    verts = w.vertices
    return all(u0 <= 2 * u for u, _ in verts) and all(
        2 * u < ub for u, _ in verts[:-1]
    ) and 2 * verts[-1][0] == ub


def arch_seams(w: Walk) -> list[int]:
    """Vertex indices where an unfolded arch splits into two unfolded
    arches: bottom-row vertices entered through their upper-left slant
    mid-edge and left through their upper-right one, with every earlier
    vertex strictly left and every later vertex weakly right."""
    if not is_unfolded_arch(w):
        raise ClassificationError("walk is not an unfolded arch")
    mids, verts = w.mids, w.vertices
    seams = []
    for k, (u, v) in enumerate(verts):
        if v != 1 or k == 0 or k == len(verts) - 1:
            continue
        if mids[k] != (2 * u - 1, 3) or mids[k + 1] != (2 * u + 1, 3):
            continue
        if all(verts[i][0] < u for i in range(k)) and all(
            verts[i][0] >= u for i in range(k, len(verts))
        ):
            seams.append(k)
    return seams


def prime_arch_factors(w: Walk) -> list[Walk]:
    """Split an unfolded arch at its seams into prime unfolded arches,
    each translated to start at a.  A deleted downward step is restored
    at the end of every factor but the last, and the forced upward step
    is restored at the start of every factor but the first."""
    seams = arch_seams(w)
    t = w.turns
    bounds = [-1] + seams + [len(t)]
    factors = []
    for idx, (lo, hi) in enumerate(zip(bounds, bounds[1:])):
        head = () if idx == 0 else ("R",)
        tail = ("R",) if hi < len(t) else ()
        factors.append(Walk(lattice.START_MID, 0, head + t[lo + 1: hi] + tail))
    return factors


def concat_arches(factors: Sequence[Walk]) -> Walk:
    """Inverse of :func:`prime_arch_factors` (up to translation)."""
    turns: tuple = ()
    for idx, f in enumerate(factors):
        t = f.turns
        if idx > 0:
            t = t[1:]
        if idx < len(factors) - 1:
            if t[-1] != "R":
                raise ClassificationError("factor does not end with a seam step")
            t = t[:-1] + ("L",)
        turns = turns + t
    return Walk(lattice.START_MID, 0, turns)


def wavy_column_arch(T: int) -> Walk:
    """The prime unfolded arch made of a single wavy column with 2(T-1)
    vertical edges in a strip of height T: length 4T-1, two contacts."""
    if T < 1:
        raise InvalidParameterError("need T >= 1")
    up: list[str] = []
    for k in range(T - 1):
        up += ["R", "L"] if k % 2 == 0 else ["L", "R"]
    turns = up + ["R", "R", "R"] + ["L", "R"] * (T - 1)
    return Walk(lattice.START_MID, 0, tuple(turns))


def _series_add(a, b):
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) + v
    return out


def _series_mul(a, b, max_len):
    out: dict[tuple[int, int], int] = {}
    for (la, ca), va in a.items():
        for (lb, cb), vb in b.items():
            if la + lb <= max_len:
                key = (la + lb, ca + cb)
                out[key] = out.get(key, 0) + va * vb
    return out


def _seam_shift(a):
    # one concatenation seam removes one step and merges one contact
    return {(l - 1, c - 1): v for (l, c), v in a.items()}


def iter_strip_walks(T: int, max_len: int) -> Iterator[Walk]:
    """Every nonempty self-avoiding walk from a whose vertices lie in
    the height-T strip (rows 1 .. 3T-1), up to max_len steps."""
    start = lattice.START_MID
    turns: list[str] = []
    mid_set = {start}
    vert_set: set[tuple[int, int]] = set()
    v_top = 3 * T - 1

    def rec(mid, head):
        if turns:
            yield Walk(start, 0, tuple(turns))
        if len(turns) >= max_len:
            return
        du, dv = lattice.HEADING_STEPS[head]
        vtx = ((mid[0] + du) // 2, (mid[1] + dv) // 2)
        if not 1 <= vtx[1] <= v_top or vtx in vert_set:
            return
        vert_set.add(vtx)
        for t in ("L", "R"):
            _, nmid, nhead = lattice.step(mid, head, t)
            if nmid not in mid_set:
                turns.append(t)
                mid_set.add(nmid)
                yield from rec(nmid, nhead)
                turns.pop()
                mid_set.remove(nmid)
        vert_set.remove(vtx)

    yield from rec(start, 0)


def unfolded_arch_series(T: int, max_len: int, prime: bool = False):
    """Counts of (prime) unfolded arches in a strip of height T with the
    bottom row weighted, tallied by (length, contacts)."""
    counts: dict[tuple[int, int], int] = {}
    for w in iter_strip_walks(T, max_len):
        if not is_unfolded_arch(w):
            continue
        if prime and arch_seams(w):
            continue
        contacts = sum(1 for _, v in set(w.vertices) if v == 1)
        key = (len(w), contacts)
        counts[key] = counts.get(key, 0) + 1
    return counts


def check_prime_arch_series(T: int, max_len: int) -> dict:
    """Coefficientwise check, up to max_len, of the geometric relation
    between unfolded arches and their prime factors: the full series is
    sum_k P^k with one (step, contact) pair removed per seam."""
    full = unfolded_arch_series(T, max_len)
    prime = unfolded_arch_series(T, max_len, prime=True)
    acc = dict(prime)
    total = dict(prime)
    while acc:
        acc = _seam_shift(_series_mul(acc, prime, max_len + 1))
        acc = {k: v for k, v in acc.items() if k[0] <= max_len}
        total = _series_add(total, acc)
    ok = full == {k: v for k, v in total.items() if v}
    return {"T": T, "max_len": max_len, "ok": ok, "full": full, "rebuilt": total}


# ---------------------------------------------------------------------------
# truncated renewal sampler
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SamplerConfig:
    """Truncated stand-in for the infinite irreducible-bridge measure."""

    N: int
    k: int
    seed: int


def sample_renewal(cfg: SamplerConfig) -> tuple[Walk, dict]:
    """Concatenate ``cfg.k`` independent draws from the irreducible
    bridges of length <= N, drawn with probability x_c^|gamma| / Z_N."""
    if cfg.k < 1:
        raise InvalidParameterError("need at least one factor")
    if cfg.N > N_CAP:
        raise CapacityError(f"bridge enumeration capped at length {N_CAP}")
    pool = list(iter_bridges(cfg.N, irreducible=True))
    x_c = constants(0, "dilute").x_c.to_float()
    weights = [x_c ** len(b) for b in pool]
    rng = random.Random(cfg.seed)
    picks = rng.choices(range(len(pool)), weights=weights, k=cfg.k)
    factors = [pool[p] for p in picks]
    bridge = concat_bridges(factors)
    stats = kesten_partial(cfg.N)
    heights = [int(height_width(f)[0]) for f in factors]
    h_total, w_total = height_width(bridge)
    report = {
        "truncation_N": cfg.N,
        "factors": cfg.k,
        "seed": cfg.seed,
        "length": len(bridge),
        "height": int(h_total),
        "width": str(w_total),
        "renewal_points": len(renewal_points(bridge)),
        "diamond_points": len(diamond_points(bridge)),
        "mean_factor_height": sum(heights) / len(heights),
        "expected_factor_height": stats.mean_height_float,
    }
    return bridge, report
