"""Identity registry, verification runner and report integrity."""
import math

import pytest

from zetalim import (
    Domain,
    DomainError,
    IdentityCase,
    default_x_grid,
    quadrature_zeta2_integral,
    registry,
    uniform_x,
    verify,
    verify_all,
)
from zetalim.identities import _integral_zeta2


def _by_id(cid):
    matches = [c for c in registry() if c.id == cid]
    assert len(matches) == 1, cid
    return matches[0]


def _single(case, **kwargs):
    report = verify(case, **kwargs)
    assert report.cases_run == 1
    return report.cases[0]


def test_registry_shape():
    cases = registry()
    assert len(cases) >= 18
    ids = [c.id for c in cases]
    assert len(set(ids)) == len(ids)
    for c in cases:
        assert 1e-12 <= c.tol <= 1e-5, c.id
        assert c.notes, c.id


def test_registry_specific_cases():
    assert _by_id("EQ4.1").tol == 1e-6
    dom = _by_id("EQ3.20").domain
    assert dom.kind == "scalar"
    assert dom.label == "u"
    assert dom.values == (2.0,)


@pytest.mark.parametrize("density", [3, 5, 9])
def test_grids_avoid_singular_points(density):
    for c in registry():
        for coords in c.domain.points(density):
            for label, value in coords:
                if label in ("x", "u"):
                    assert 0.0 < value, (c.id, coords)
                    if c.domain.kind in ("x-default", "u-default"):
                        assert 0.0 < value < 1.0
                if label == "s":
                    assert abs(value - 1.0) > 1e-3, (c.id, coords)


def test_default_grid_contents():
    g = default_x_grid(9)
    assert len(g) == 12
    assert g == tuple(sorted(g))
    for special in (0.25, 1.0 / 3.0, 0.75):
        assert special in g
    assert default_x_grid(5) == uniform_x(5)
    assert uniform_x(5) == tuple((k + 1) / 6.0 for k in range(5))
    with pytest.raises(DomainError):
        uniform_x(2)
    with pytest.raises(DomainError):
        default_x_grid(0)


def test_cosine_limit_case_all_points():
    res = _single(_by_id("EQ4.14"))
    assert res.passed
    assert len(res.points) == 12
    for p in res.points:
        assert p.passed
        assert p.rhs == pytest.approx(-0.5, abs=1e-15)


def test_sine_limit_vanishes_at_half():
    res = _single(_by_id("EQ4.1"))
    at_half = [p for p in res.points if p.coords[0][1] == 0.5]
    assert len(at_half) == 1
    assert at_half[0].lhs == pytest.approx(0.0, abs=1e-7)
    assert at_half[0].rhs == pytest.approx(0.0, abs=1e-15)


def test_eq412_point_residual():
    res = _single(_by_id("EQ4.12"))
    at_third = [p for p in res.points if abs(p.coords[0][1] - 1.0 / 3.0) < 1e-12]
    assert len(at_third) == 1
    assert at_third[0].residual <= 1e-6


def test_verify_all_coarse_grid():
    report = verify_all(grid_density=3)
    assert report.cases_run == len(registry())
    assert report.cases_passed == report.cases_run
    case_max = max(c.max_residual for c in report.cases)
    point_max = max(
        p.residual
        for c in report.cases
        for p in c.points
        if p.residual is not None
    )
    assert report.max_residual == case_max == point_max
    assert report.wall_time >= 0.0
    fine = _single(_by_id("EQ4.14"), grid_density=9)
    coarse = next(c for c in report.cases if c.case_id == "EQ4.14")
    assert len(coarse.points) < len(fine.points)


def test_reports_are_sorted_by_case_id():
    report = verify_all(grid_density=3)
    ids = [c.case_id for c in report.cases]
    assert ids == sorted(ids)


def test_tol_scale_loosens():
    report = verify_all(grid_density=3, tol_scale=1e-3)
    assert report.cases_passed == report.cases_run


def test_tol_scale_tightens_to_failure_without_raising():
    res = _single(_by_id("EQ2.3"), tol_scale=1e12)
    assert not res.passed
    assert any(not p.passed for p in res.points)
    assert res.max_residual is not None


def test_reflection_residuals_close():
    case = _by_id("EQ4.8")
    res = _single(case)
    def residual_at(x):
        pts = [p for p in res.points if abs(p.coords[0][1] - x) < 1e-12]
        assert len(pts) == 1, x
        return pts[0].residual
    assert abs(residual_at(0.3) - residual_at(0.7)) <= 1e-9


def test_point_errors_are_captured_not_raised():
    def boom(pt):
        raise ValueError("synthetic failure for the runner")

    case = IdentityCase(
        id="SYNTH",
        lhs=boom,
        rhs=lambda pt: 0.0,
        domain=Domain(kind="x-default"),
        tol=1e-6,
        notes="runner error-capture check",
    )
    res = _single(case)
    assert not res.passed
    assert all(not p.passed for p in res.points)
    assert all(p.residual is None for p in res.points)
    assert all("synthetic failure" in p.note for p in res.points)


def test_case_validation():
    with pytest.raises(ValueError):
        IdentityCase(
            id="BAD",
            lhs=lambda pt: 0.0,
            rhs=lambda pt: 0.0,
            domain=Domain(kind="x-default"),
            tol=1e-4,
            notes="tolerance outside the allowed band",
        )
    with pytest.raises(DomainError):
        Domain(kind="y-grid")


def test_runner_argument_validation():
    with pytest.raises(DomainError):
        verify_all(grid_density=2)
    with pytest.raises(DomainError):
        verify_all(tol_scale=0.0)
    with pytest.raises(DomainError):
        verify(_by_id("EQ2.3"), grid_density=1)


def test_quadrature_vanishes():
    r = quadrature_zeta2_integral()
    assert abs(r.value) <= 1e-6
    assert r.err_estimate >= 0.0
    assert r.terms_used >= 1


def test_quadrature_panels_are_additive():
    left = _integral_zeta2(0.0, 0.5)
    right = _integral_zeta2(0.5, 1.0)
    full = _integral_zeta2(0.0, 1.0)
    assert left[0] + right[0] == pytest.approx(full[0], abs=1e-12)
