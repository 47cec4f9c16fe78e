import cmath
import math

import pytest

import hermjost as hj


def gaussian(x):
    return math.exp(-x * x / 2) / math.sqrt(2 * math.pi)


def test_faddeeva():
    assert hj.faddeeva_w(0) == 1
    z = 1.5 + 0.3j
    assert abs(hj.faddeeva_w(z) - hj.w_contour_oracle(z)) < 1e-10 * abs(hj.faddeeva_w(z))
    d = hj.w_derivatives(0.0, 2)
    assert abs(d[1] - 2j / math.sqrt(math.pi) / math.sqrt(2)) < 1e-15


def test_free_density():
    op = hj.build_operator(hj.free_spec())
    for lam in (-3.0, 0.0, 1.5):
        assert abs(hj.spectral_density(op, lam) - gaussian(lam)) < 1e-10
    assert hj.jost_function(op, 0.4) == 1


def test_power_spec_sample():
    spec = hj.make_spec(hj.Family.power(0.1, 0.5), hj.Family.power(0.2, 1.0))
    op = hj.build_operator(spec)
    s = hj.evaluate(op, 0.0)
    assert s.identity_residual < 1e-8
    assert s.m_boundary.imag > 0
    assert abs(s.rho - 0.340838329) < 2e-9


def test_measure():
    op = hj.build_operator(hj.free_spec(), 4000)
    m = hj.truncated_measure(op, 500)
    assert len(m) == 500
    assert abs(sum(m.weights) - 1) < 1e-12
    assert hj.cdf_compare(m, gaussian, [-1.0, 0.0, 1.0], -10.0) < 0.05


def test_errors():
    bad = hj.build_operator(hj.make_spec(hj.Family.constant(1.0), hj.Family.zero()), 2000)
    with pytest.raises(hj.NotAdmissible):
        hj.jost_function(bad, 0.0)
    with pytest.raises(hj.DomainError):
        hj.Family.power(1.0, -1.0)


def test_run_config():
    rc, out, err = hj.run_config("lambda=-1:1:3\n")
    assert rc == 0
    lines = out.strip().split("\n")
    assert lines[0].startswith("lambda,re_F")
    assert len(lines) == 4
    rc, _, err = hj.run_config("c=const:1.0\n")
    assert rc == 3 and "diverges" in err
    rc, _, err = hj.run_config("lambda=4:-4:201\n")
    assert rc == 2
