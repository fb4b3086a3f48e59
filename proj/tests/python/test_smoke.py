import math

import pytest

import fracfield as ff


def test_ml_reduces_to_exp():
    assert abs(ff.ml(1.0, 1.0, 1.0) - math.e) < 1e-14
    assert abs(ff.ml(2.0, 1.0, -4.0) - math.cos(2.0)) < 1e-14


def test_wright_at_zero():
    assert abs(ff.wright(-0.5, 0.5, 0.0) - 1 / math.sqrt(math.pi)) < 1e-15


def test_foxh_matches_ml():
    spec = ff.ml_as_h(1.5, 1.0)
    assert abs(ff.foxh(spec, 2.0) - ff.ml(1.5, 1.0, 2.0)) < 1e-12


def test_solve_dalembert():
    problem = {"kind": "wave", "alpha": 2, "mu": 2, "nu": 1,
               "f": {"preset": "gaussian", "width": 0.5}}
    rows = ff.solve(problem, {"x_list": [-1.0, 0.0, 0.5], "y_list": [0.7]})
    w = 0.5
    f = lambda x: math.exp(-0.5 * x * x / (w * w)) / (w * math.sqrt(2 * math.pi))
    assert len(rows) == 3
    for x, y, n, imag, method, err in rows:
        assert err == ""
        assert abs(n - 0.5 * (f(x - y) + f(x + y))) < 1e-9


def test_errors_map_to_python():
    with pytest.raises(ff.ValidityError):
        ff.solve({"kind": "laplace", "alpha": 0.5}, {"x_list": [0], "y_list": [1]})
    with pytest.raises(ff.ValidityError):
        ff.verify("nonsense")


def test_verify_suite():
    report = ff.verify("identities", seed=3)
    assert report["failed"] == 0
    assert report["seed"] == 3
