from fractions import Fraction

import pytest

import heisquartic as hq


def test_group():
    assert hq.group_order() == 32
    assert hq.label_name(11) == "s1*t1*t2"
    assert hq.symplectic_form(8, 2) == 1
    assert hq.symplectic_form(1, 2) == 0


def test_family():
    fermat = [1, 1, 1, 1, -2, -2]
    assert hq.segre_value(fermat) == -12
    assert hq.discriminant(fermat) == 3072
    assert hq.discriminant([1, 1, 1, -1, -1, -1]) == 0
    assert hq.quartic(fermat) == "4*x^4 + 4*y^4 + 4*z^4 + 4*w^4"
    with pytest.raises(ValueError):
        hq.discriminant([1, 2, 3])


def test_kummer_seed():
    u = hq.kummer_param([1, 2, 3, 4])
    assert u == [1, -34, -43, Fraction(226, 5), Fraction(149, 5), 1]
    assert hq.discriminant(u) == 0
    with pytest.raises(hq.SingularSystemError):
        hq.kummer_param([1, 0, 0, 0])


def test_mukai():
    assert hq.mukai_average([1, 2, 3, 5, 7, -18]) == 9


def test_configuration_and_lattices():
    assert hq.incidence_set() == [1, 3, 4, 5, 6, 7, 8, 11, 14, 15]
    m = hq.conic_submatrix()
    assert hq.det(m) == -512
    assert hq.signature(m) == (1, 15)
    assert hq.is_even(m)
    lam = hq.lambda15()
    assert hq.det(lam) == 512
    assert hq.norm_counts([[2, -1], [-1, 2]], 2) == {0: 1, 2: 6}


def test_verify_subset():
    report = hq.verify(["group", "config"])
    assert [c["criterion"] for c in report["criteria"]] == [1, 10]
    assert all(c["pass"] for c in report["criteria"])
