"""Local vertex identity and the telescoped boundary identities."""

import json
from fractions import Fraction

import pytest

from hexsaw import domains as dm
from hexsaw import identity as idn
from hexsaw.model import constants


def test_local_identity_exact_dilute():
    c = constants(0, "dilute")
    rep = idn.check_local(dm.build_trapezoid(1, 2), c, 1)
    assert rep.ok and rep.exact_zero
    # surface vertices included: the trapezoid has a weighted top row
    surface = dm.build_trapezoid(1, 2).surface
    assert surface and all(v in rep.residuals for v in surface)


def test_local_identity_exact_dense():
    c = constants(0, "dense")
    rep = idn.check_local(dm.build_trapezoid(1, 1), c, 1)
    assert rep.ok and rep.exact_zero


@pytest.mark.parametrize("y", [1, Fraction(1, 2), Fraction(3, 2), 2])
def test_local_identity_surface_weight(y):
    # the surface correction must cancel for every admissible y, not
    # just y = 1 where it vanishes identically
    c = constants(0, "dilute")
    rep = idn.check_local(dm.build_trapezoid(1, 1), c, y)
    assert rep.exact_zero


@pytest.mark.parametrize("n", [-1.0, 1.0, 2.0])
def test_local_identity_float_with_loops(n):
    c = constants(n, "dilute", mode="float")
    rep = idn.check_local(dm.build_trapezoid(1, 1), c, 1.0, with_loops=True)
    assert rep.mode == "float" and not rep.exact_zero
    assert rep.max_abs < 1e-9 and rep.ok


@pytest.mark.parametrize("T,L", [(1, 1), (1, 2), (2, 1), (2, 2)])
@pytest.mark.parametrize("y", [1, Fraction(3, 2), 2])
def test_global_trapezoid_exact(T, L, y):
    c = constants(0, "dilute")
    rep = idn.check_global_trapezoid(T, L, c, y)
    assert rep.exact_zero, rep.residuals


@pytest.mark.parametrize("y", [1, Fraction(1, 2)])
def test_global_trapezoid_dense(y):
    c = constants(0, "dense")
    rep = idn.check_global_trapezoid(1, 2, c, y)
    assert rep.exact_zero, rep.residuals


def test_global_rectangle_exact():
    c = constants(0, "dilute")
    for T, L in [(2, 2), (2, 3)]:
        rep = idn.check_global_rectangle(T, L, c)
        assert rep.exact_zero, rep.residuals


@pytest.mark.parametrize("n", [-1.0, 1.0, 2.0])
def test_global_float_with_loops(n):
    c = constants(n, "dilute", mode="float")
    rep = idn.check_global_trapezoid(1, 2, c, 1.0, with_loops=True)
    assert rep.max_abs < 1e-9 and rep.ok


def test_identity_fails_off_criticality():
    # sanity: the identity is a property of the critical weight, so a
    # wrong x must leave a visible residual
    c = constants(0.0, "dilute", mode="float")
    perturbed = type(c)(**{**c.__dict__, "x_c": c.x_c * 1.01})
    rep = idn.check_local(dm.build_trapezoid(1, 1), perturbed, 1.0)
    assert rep.max_abs > 1e-6 and not rep.ok


def test_report_json_roundtrip():
    c = constants(0, "dilute")
    rep = idn.check_global_trapezoid(1, 1, c, 1)
    doc = json.loads(rep.to_json())
    assert doc["ok"] is True
    assert doc["exact_zero"] is True
    assert doc["kind"] == "global-trapezoid"
    assert doc["params"]["T"] == 1
    assert doc["residuals"]["global"] == [0.0, 0.0]
