from fractions import Fraction

import pytest

from generators.base import ConstructionReport, bch_generator, dimension_value
from generators.hop import HopGenerator, construct_hop
from generators.primitive import PrimitiveGenerator, construct_g1
from generators.quaternary import QuaternaryGenerator, construct_g2
from algebra.polyring import big_field_context
from utils.errors import FieldTooLarge, OutOfRange, UsageError


def test_hop_t1():
    report = construct_hop(1, distance='auto')
    assert (report.n, report.k_actual, report.d_exact) == (9, 2, 6)
    assert report.k_formula == 2
    assert report.hlcd
    assert report.notes['remark'] == 'almost optimal'


def test_hop_t2_dimension():
    report = construct_hop(2)
    assert (report.n, report.k_actual, report.k_formula) == (33, 22, 22)
    assert report.d_bound_actual == 6
    assert report.code.defining_set.elems == (0, 1, 2, 4, 8, 16, 17, 25, 29, 31, 32)
    assert report.hlcd


def test_hop_t3():
    report = construct_hop(3)
    assert (report.n, report.k_actual) == (129, 114)
    assert report.k_matches
    assert report.d_bound_actual >= 6
    assert report.hlcd
    assert report.notes['remark'] == 'optimal'


def test_hop_t0_is_degenerate():
    report = construct_hop(0)
    assert report.n == 3
    assert report.k_actual == 0
    assert 'degenerate' in report.notes


def test_hop_negative_t():
    with pytest.raises(OutOfRange):
        construct_hop(-1)


def test_report_as_dict_keys():
    report = construct_hop(1, distance='auto').as_dict()
    assert report['field'] == {'p': 2, 'k': 2}
    assert report['family'] == 'hop'
    assert report['params'] == {'family': 'hop', 'q': 2, 't': 1, 'delta': 4, 'b': 0}
    assert (report['n'], report['k'], report['d']) == (9, 2, 6)
    assert report['generator'] == [1, 1, 0, 1, 1, 0, 1, 1]
    assert report['distance']['method'] == 'message-enum'


def test_unknown_distance_mode():
    with pytest.raises(UsageError):
        HopGenerator(distance='exact')


def test_bch_generator_range(gf4):
    ctx = big_field_context(9, gf4)
    assert bch_generator(ctx, 4, 0).degree == 7
    with pytest.raises(OutOfRange):
        bch_generator(ctx, 10, 0)


def test_g1_examples():
    assert construct_g1(2, 2, 5, e=3).k_actual == 2
    report = construct_g1(2, 3, 8, e=3)
    assert report.n == 63
    assert report.k_actual == 29
    assert report.k_formula == 29
    assert report.notes['n_hat'] == 21


@pytest.mark.parametrize('m', [2, 3])
@pytest.mark.parametrize('e', [1, 3])
def test_g1_dimension_formula_q2(m, e):
    for delta in range(2, 4 ** ((m + 1) // 2) + 2):
        report = construct_g1(2, m, delta, e=e)
        assert report.k_matches, delta
        assert report.hlcd


def test_g1_dimension_formula_q3_m2():
    for delta in range(2, 11):
        report = construct_g1(3, 2, delta)
        assert report.n == 80
        assert report.k_matches, delta


@pytest.mark.slow
def test_g1_dimension_formula_q3_m3_sampled():
    for delta in (10, 26, 27, 40, 52, 53, 54, 78, 79, 80, 81, 82):
        report = construct_g1(3, 3, delta)
        assert report.k_matches, delta


def test_g1_distance_bound_formula():
    report = construct_g1(2, 3, 8)
    assert report.d_bound_formula == 8 + 1 + 7 // 2
    assert report.d_bound_actual >= report.d_bound_formula


G1_BOUND_CASES = [(2, 2, 1), (2, 2, 3), (2, 3, 1), (2, 3, 3), (3, 2, 1), (3, 2, 2), (3, 2, 4)]


@pytest.mark.parametrize('q, m, e', G1_BOUND_CASES)
def test_g1_distance_bound_never_exceeds_bch(q, m, e):
    for delta in range(2, (q * q) ** ((m + 1) // 2) + 2):
        report = construct_g1(q, m, delta, e=e)
        if report.d_bound_formula is None:
            continue
        assert report.d_bound_formula <= report.d_bound_actual, delta


@pytest.mark.parametrize('m', [2, 3, 4])
def test_g2_distance_bound_never_exceeds_bch(m):
    for delta in range(2, 2 ** m + 1):
        report = construct_g2(m, delta)
        if report.d_bound_formula is None:
            continue
        assert report.d_bound_formula <= report.d_bound_actual, delta


def test_g1_argument_checks():
    with pytest.raises(OutOfRange):
        construct_g1(2, 2, 5, e=2)
    with pytest.raises(OutOfRange):
        construct_g1(2, 2, 1)
    with pytest.raises(FieldTooLarge):
        construct_g1(2, 14, 4)


def test_g1_outside_hypotheses_has_no_formula():
    report = construct_g1(2, 2, 6)
    assert report.k_formula is None
    assert report.k_matches is None


def test_g2_examples():
    assert construct_g2(4, 5).k_actual == 60
    assert QuaternaryGenerator.k_formula(4, 5) == 60
    assert QuaternaryGenerator.k_formula(5, 32) == 135


def test_g2_half_integer_correction():
    assert QuaternaryGenerator.correction(5, 32) == Fraction(9, 2)
    assert dimension_value(Fraction(9, 2)) == '9/2'
    assert dimension_value(Fraction(4, 2)) == 2


def test_g2_m2_top_delta_mismatch():
    report = construct_g2(2, 4)
    assert report.k_formula == 4
    assert report.k_actual == 0
    assert report.k_matches is False


@pytest.mark.parametrize('delta', [2, 3])
def test_g2_m2_small_delta(delta):
    assert construct_g2(2, delta).k_matches


def test_g2_dimension_formula_m4():
    for delta in range(2, 17):
        report = construct_g2(4, delta)
        assert report.n == 85
        assert report.k_matches, delta
        assert report.hlcd


@pytest.mark.slow
def test_g2_dimension_formula_m5():
    for delta in range(2, 33):
        report = construct_g2(5, delta)
        assert report.k_matches, delta


def test_g2_odd_m_carries_exception_audit():
    report = construct_g2(5, 22)
    audit = report.notes['leader_exceptions']
    assert audit['observed'] == [22, 27]


def test_g2_delta_range():
    with pytest.raises(OutOfRange):
        construct_g2(2, 6)


def test_reports_are_frozen():
    report = construct_hop(1)
    assert isinstance(report, ConstructionReport)
    with pytest.raises(Exception):
        report.hlcd = False
