"""Smoke tests for the python bindings."""

import math

import pytest

bmhull = pytest.importorskip("bmhull")


def test_analytic_constants():
    assert bmhull.analytic_ell("one")["value"] == 1.0
    tri = bmhull.analytic_ell("triangle")
    assert abs(tri["value"] - math.pi / math.sqrt(3)) < 1e-12
    assert tri["route"] == "closed_form"
    circle = bmhull.analytic_ell("circle")
    assert abs(circle["value"] - 2.0832332771131280) < 1e-8
    assert set(bmhull.preset_names()) == {
        "one", "two", "perp", "cone", "three-quarters", "triangle", "square", "circle",
    }


def test_route_agreement():
    assert abs(bmhull.ell_via_laplace("strip") - math.pi / 2) < 1e-7
    assert abs(bmhull.ell_via_laplace("triangle-pomega") - math.pi / math.sqrt(3)) < 1e-7


def test_geometry():
    square = [(1, 1), (-1, 1), (-1, -1), (1, -1), (0, 0)]
    assert len(bmhull.convex_hull(square)) == 4
    assert abs(bmhull.hull_perimeter(square) - 8.0) < 1e-12
    assert abs(bmhull.support_value(square, math.pi / 4) - math.sqrt(2)) < 1e-12
    seg = [(0, 0), (1, 0)]
    assert abs(bmhull.rotated_hull_perimeter(seg, [0.0, math.pi / 2]) - (2 + math.sqrt(2))) < 1e-12
    assert abs(bmhull.rotated_hull_perimeter([(3, 4)], "circle") - 10 * math.pi) < 1e-12


def test_exit_laws():
    assert abs(bmhull.laplace_transform("halfplane", 1.0) - math.exp(-1)) < 1e-14
    assert abs(bmhull.survival("strip", 1.0) - 0.37077742979952391) < 1e-12
    assert abs(bmhull.mellin_triangle(1.0) - 1.0 / 18.0) < 1e-12
    assert abs(bmhull.inv_sqrt_moment("cone60") - 1.5 * math.sqrt(2 / math.pi)) < 1e-9
    with pytest.raises(Exception):
        bmhull.survival("disk", 1.0)


def test_special_functions():
    assert abs(bmhull.bessel_i0(2.0) - 2.2795853023360673) < 1e-12
    assert bmhull.chi3(5) == -1
    assert abs(bmhull.rect_integral(1.0, math.inf, 1.0, math.inf) - (2 - math.sqrt(2))) < 1e-12
    assert abs(bmhull.dirichlet_l_chi3(1.0) - math.pi / (3 * math.sqrt(3))) < 1e-12


def test_sampling_determinism():
    a = bmhull.sample_path(16, seed=42, path_index=3)
    b = bmhull.sample_path(16, seed=42, path_index=3)
    assert a == b
    assert a[0] == (0.0, 0.0)
    assert len(a) == 17


def test_monte_carlo():
    est = bmhull.estimate_ell("one", n_steps=1024, n_paths=300, seed=7, threads=2)
    again = bmhull.estimate_ell("one", n_steps=1024, n_paths=300, seed=7, threads=1)
    assert est["mean"] == again["mean"]
    assert abs(est["mean"] - 1.0) < 0.1
    report = bmhull.verify_all(n_steps=512, n_paths=200, seed=7, rel_tol=0.1)
    assert len(report["rows"]) == 8
    assert report["all_pass"]
