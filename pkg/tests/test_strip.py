"""Strip transfer operator, growth rates and the bridge/arch identities."""

from fractions import Fraction

import pytest

from hexsaw import bridges as br
from hexsaw import strip as sp
from hexsaw.cyclo import Cyclo48, ONE
from hexsaw.errors import CapacityError, InvalidParameterError
from hexsaw.model import constants


@pytest.mark.parametrize("T", [1, 2, 3])
def test_transfer_matches_dfs(T):
    """Operator series must equal direct walk enumeration, every y power."""
    max_len = 14 if T < 3 else 12
    op = sp.build_transfer(T, "top")
    got = sp.series_counts(op, max_len, kind="walk")
    ref: dict = {(0, 0): 1}
    top_row = 3 * T - 1
    for w in br.iter_strip_walks(T, max_len):
        if len(w) == 0:
            continue
        ct = sum(1 for _, v in w.vertices if v == top_row)
        key = (len(w), ct)
        ref[key] = ref.get(key, 0) + 1
    assert got == ref


def test_transfer_arch_bridge_split():
    """Arch/bridge filtered series agree with walk classification."""
    T, max_len = 2, 12
    op = sp.build_transfer(T, "top")
    arches = sp.series_counts(op, max_len, kind="arch")
    bridges_ = sp.series_counts(op, max_len, kind="bridge")
    from hexsaw.lattice import classify_walk

    ref_a: dict = {}
    ref_b: dict = {}
    top_row = 3 * T - 1
    for w in br.iter_strip_walks(T, max_len):
        if len(w) == 0:
            continue
        cls = classify_walk(w)
        ct = sum(1 for _, v in w.vertices if v == top_row)
        key = (len(w), ct)
        if cls == "arch":
            ref_a[key] = ref_a.get(key, 0) + 1
        elif cls == "bridge" and w.end[1] == 6 * T:
            ref_b[key] = ref_b.get(key, 0) + 1
    assert arches == ref_a
    assert bridges_ == ref_b


@pytest.mark.parametrize("T", [1, 2, 3])
def test_strip_identity_exact_y1(T):
    rep = sp.check_strip_identity(T, 1)
    assert rep.mode == "exact" and rep.exact_zero


def test_strip_identity_exact_T2_y2():
    rep = sp.check_strip_identity(2, 2)
    assert rep.mode == "exact" and rep.exact_zero


def test_strip_identity_float():
    rep = sp.check_strip_identity(4, 1)
    assert rep.mode == "float" and rep.max_abs < 1e-9


def test_exact_vs_float_gf():
    for kind in ("arch", "bridge", "walk"):
        e = sp.strip_gf(2, 1, kind, mode="exact")
        f = sp.strip_gf(2, 1, kind, mode="float")
        assert isinstance(e.value, Cyclo48)
        assert abs(e.value.to_float() - f.value) < 1e-10


def test_exact_gf_values_T1():
    """T=1 closed forms, derivable by hand from the two-state column walk."""
    a = sp.strip_gf(1, 1, "arch").value
    b = sp.strip_gf(1, 1, "bridge").value
    c = constants(0, "dilute")
    # alpha*A + beta(1)*B = 1 with beta(1) = 1
    assert c.coeff_a * a + b == ONE
    # B_1(x_c, 1): bridges in a height-1 strip are single vertical
    # crossings dressed by horizontal excursions
    assert b.sign() == 1 and (ONE - b).sign() == 1


def test_growth_mu_monotone_and_bounded():
    mus = [sp.growth_mu(T, 1).mu for T in (1, 2, 3, 4)]
    assert all(m2 > m1 for m1, m2 in zip(mus, mus[1:]))
    assert all(m < sp.MU_BULK for m in mus)
    assert abs(mus[0] - 1.0) < 1e-9  # T=1, y=1 walks grow linearly


def test_growth_methods_agree():
    e = sp.growth_mu(2, 1, method="eigen")
    s = sp.growth_mu(2, 1, method="series-ratio")
    assert abs(e.mu - s.mu) < 3 * s.error


def test_surface_side_counts():
    """Moving the weighted row cannot change the total number of walks,
    only how contacts are distributed; in a height-1 strip the rows
    alternate, fixing the contact count per length on each side."""
    for T in (1, 2):
        top = sp.series_counts(sp.build_transfer(T, "top"), 10)
        bottom = sp.series_counts(sp.build_transfer(T, "bottom"), 10)
        for n in range(11):
            assert sum(c for (ln, _), c in top.items() if ln == n) == sum(
                c for (ln, _), c in bottom.items() if ln == n
            )
    t1_top = sp.series_counts(sp.build_transfer(1, "top"), 9)
    t1_bot = sp.series_counts(sp.build_transfer(1, "bottom"), 9)
    assert all(ct == n // 2 for (n, ct) in t1_top)
    assert all(ct == (n + 1) // 2 or n == 0 for (n, ct) in t1_bot)


def test_solve_yT_sequence():
    ys = [sp.solve_yT(T, tol=1e-7) for T in (1, 2, 3, 4)]
    assert ys[0] == pytest.approx(sp.MU_BULK**2, abs=1e-9)
    assert all(a > b for a, b in zip(ys, ys[1:]))
    y_star = 1 + 2**0.5
    assert all(y > y_star for y in ys)


def test_divergence_guard():
    with pytest.raises(sp.DivergenceError):
        sp.strip_gf(1, 8, "walk")


def test_guards():
    with pytest.raises(CapacityError):
        sp.build_transfer(sp.T_CAP_FLOAT + 1)
    with pytest.raises(CapacityError):
        sp.strip_gf(4, 1, "walk", mode="exact")
    with pytest.raises(InvalidParameterError):
        sp.strip_gf(1, 1, "spiral")
    with pytest.raises(InvalidParameterError):
        sp.growth_mu(1, 0)


def test_check_bounds_small():
    rep = sp.check_bounds(2, y_grid=(1, Fraction(3, 2)))
    assert rep["ok"]
    names = {c["check"] for c in rep["checks"]}
    assert "B_1 > B_2" in names
    assert any(n.startswith("inverse-bridge-bound") for n in names)
    for c in rep["checks"]:
        assert c["margin"] >= -1e-12
