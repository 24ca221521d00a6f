from fractions import Fraction as F

import pytest

from qinv.alexander import AlexanderPolynomial
from qinv.errors import UnsupportedCaseError
from qinv.lmo import EMPTY, FormalDiagramSeries, Gamma, H, Wheels, connected_sum_omega, omega_rescale, z_lmo
from qinv.manifold import S3, ClassicalData
from qinv.series import MultiPoly


def test_b1_five_gives_one():
    s = z_lmo(ClassicalData(b1=5), 3)
    assert s.coeffs == {EMPTY: 1}
    assert s.render() == "1"


def test_t3_all_ones():
    s = z_lmo(ClassicalData(b1=3, cup_triple=1), 3)
    assert s.coeffs == {EMPTY: 1, Gamma(1): 1, Gamma(2): 1, Gamma(3): 1}


def test_b1_three_mu_two():
    s = z_lmo(ClassicalData(b1=3, cup_triple=2), 2)
    assert s.render() == "1 + 4·γ1 + 16·γ2"


def test_b1_two_uses_h_symbols():
    s = z_lmo(ClassicalData(b1=2, tor_order=3, linking_mu=2), 2)
    assert s.coeffs == {EMPTY: 1, H(1): 6, H(2): 36}


def test_s2xs1_first_wheel():
    s = z_lmo(ClassicalData(b1=1, alexander=AlexanderPolynomial.trivial()), 1)
    assert s.coeffs == {EMPTY: 1, Wheels([1]): F(1, 24)}


def test_unsupported():
    with pytest.raises(UnsupportedCaseError):
        z_lmo(S3, 2)
    with pytest.raises(UnsupportedCaseError):
        z_lmo(ClassicalData(b1=1, tor_order=2, alexander=AlexanderPolynomial.trivial()), 2)


@pytest.mark.parametrize("mu", [1, 2, 3])
def test_b1_three_invariant_under_mu_sign(mu):
    assert z_lmo(ClassicalData(b1=3, cup_triple=mu), 3).coeffs == z_lmo(ClassicalData(b1=3, cup_triple=-mu), 3).coeffs


def test_b1_two_sign_covariance():
    plus = z_lmo(ClassicalData(b1=2, linking_mu=F(5, 3)), 4)
    minus = z_lmo(ClassicalData(b1=2, linking_mu=F(-5, 3)), 4)
    for n in range(5):
        assert minus[H(n)] == (-1) ** n * plus[H(n)]


def test_degree_zero_is_one():
    for d in (
        ClassicalData(b1=4),
        ClassicalData(b1=3, cup_triple=0),
        ClassicalData(b1=2, linking_mu=F(1, 2)),
        ClassicalData(b1=1, alexander=AlexanderPolynomial.from_half([3, -1])),
    ):
        assert z_lmo(d, 3)[EMPTY] == 1


def test_series_rejects_high_degree():
    with pytest.raises(ValueError):
        FormalDiagramSeries(1, {Gamma(2): 1})


def test_omega_rescale():
    assert omega_rescale(7, 3, 4, 4) == 7
    assert omega_rescale(7, 0, 4, 2) == 0
    assert omega_rescale(5, 2, 3, 1) == 20


def test_connected_sum_omega():
    v1 = [2, 3, 5]
    assert connected_sum_omega(v1, [1, 0, 0]) == 5
    x = [MultiPoly.var(f"x{i}") for i in range(2)]
    y = [MultiPoly.var(f"y{i}") for i in range(2)]
    assert connected_sum_omega(x, y) == x[0] * y[1] + x[1] * y[0]
    with pytest.raises(ValueError):
        connected_sum_omega([1], [1, 2])
