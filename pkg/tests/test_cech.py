import pytest

from superproj.cech import (
    CechWindow,
    TransitionSheaf,
    cech_cohomology,
    default_window,
    oracle_check_line,
    standard_transition,
    twist_sheaf,
)
from superproj.cohomology import DimPair, cohomology_dims
from superproj.errors import DomainError, ParityError
from superproj.parser import parse_superpoly

P13_TRANSITION = "1 + (p1*p2 + p1*p3 + p2*p3)*w^-1"
P13_COCYCLES = [
    "w^-1*p1*p2",
    "w^-1*p1*p3",
    "w^-1*p2*p3",
    "w^-1*p1*p2*p3",
    "w^-2*p1*p2*p3",
]


@pytest.fixture(scope="module")
def p13():
    W, _ = parse_superpoly(P13_TRANSITION)
    return cech_cohomology(TransitionSheaf(3, W))


def test_transition_sheaf_validation():
    ctx = standard_transition(2).ctx_b
    with pytest.raises(ParityError):
        TransitionSheaf(2, ctx.var("p1"))
    with pytest.raises(DomainError):
        TransitionSheaf(2, ctx.one() + ctx.var("w"))  # two-term body
    with pytest.raises(DomainError):
        TransitionSheaf(2, ctx.zero())


def test_twist_calibration_classical():
    # W = w^ell carries the sheaf with h^0 = ell + 1 for ell >= 0 at m = 0
    for ell in range(0, 4):
        res = cech_cohomology(twist_sheaf(0, ell), want_generators=False)
        assert res.h0 == DimPair(ell + 1, 0)
        assert res.h1 == DimPair(0, 0)
    res = cech_cohomology(twist_sheaf(0, -3), want_generators=False)
    assert res.h0 == DimPair(0, 0)
    assert res.h1 == DimPair(2, 0)


def test_oracle_lines_sample():
    for m, ell in [(0, 0), (1, -2), (2, 0), (3, -1), (4, 2), (5, -4)]:
        assert oracle_check_line(m, ell)


def test_oracle_grid_bounds():
    with pytest.raises(DomainError):
        oracle_check_line(7, 0)


def test_window_check():
    sheaf = twist_sheaf(2, -3)
    with pytest.raises(DomainError):
        cech_cohomology(sheaf, CechWindow(2))
    assert default_window(sheaf).D == 2 * 3 + 2 + 2


def test_h0_generators_of_positive_twist():
    res = cech_cohomology(twist_sheaf(1, 1))
    # sections of O(1) on the 1|1 superline: 1, w, psi1 (V-chart components)
    assert res.h0 == DimPair(2, 1)
    assert res.stabilized


def test_p13_h0(p13):
    assert p13.h0 == DimPair(0, 0)


def test_p13_h1_true_value(p13):
    # the three even pair cocycles sum to a coboundary, so the even part is 2
    assert p13.h1 == DimPair(2, 2)


def test_p13_published_cocycles_span_h1(p13):
    cocycles = [parse_superpoly(t, m=3)[0] for t in P13_COCYCLES]
    assert p13.h1_span_equals(cocycles)


def test_p13_even_sum_is_coboundary(p13):
    ctx = standard_transition(3).ctx_b
    total = ctx.zero()
    for text in P13_COCYCLES[:3]:
        total = total + parse_superpoly(text, m=3)[0]
    assert p13.h1_class(total) == {}
    # but each single pair cocycle is a nonzero class
    single = parse_superpoly(P13_COCYCLES[0], m=3)[0]
    assert p13.h1_class(single) != {}


def test_p13_explicit_coboundary(p13):
    # delta of the constant pair (1, 1): 1 - W = -(sum of pair cocycles)
    W, _ = parse_superpoly(P13_TRANSITION)
    ctx = W.ctx
    assert p13.h1_class(ctx.one() - W) == {}


def test_p13_euler_characteristic(p13):
    # chi from the split filtration of this sheaf: even 1 - 3 = -2, odd -2
    chi_even = (p13.h0.even - p13.h1.even)
    chi_odd = (p13.h0.odd - p13.h1.odd)
    assert (chi_even, chi_odd) == (-2, -2)


def test_structure_sheaf_h1_zero():
    for m in range(4):
        res = cech_cohomology(twist_sheaf(m, 0), want_generators=False)
        assert res.h0.even >= 1
        assert res.h0 == cohomology_dims(1, m, 0)[0]
        assert res.h1 == cohomology_dims(1, m, 0)[1]


def test_coboundary_twist_invariance():
    tr = standard_transition(2)
    ctx_b = tr.ctx_b
    W = ctx_b.var("w") + ctx_b.monomial(2, (-1,), 0b11)
    sheaf = TransitionSheaf(2, W)
    q = ctx_b.one() + ctx_b.monomial(1, (1,), 0b11)
    twisted = TransitionSheaf(2, q * W)
    a = cech_cohomology(sheaf, want_generators=False)
    b = cech_cohomology(twisted, want_generators=False)
    assert (a.h0, a.h1) == (b.h0, b.h1)
