import pytest

from superproj.scalars import HALF, I, ONE, Scalar
from superproj.superlie import (
    U_SIGMA_TABLE,
    NonClosureError,
    bracket_via_constants,
    check_srs_pair,
    conformal_basis,
    general_odd_section,
    integrability_conditions,
    standard_fields,
    structure_constants,
    u_sigma_basis,
    v_xi_basis,
    verify_osp22,
)
from superproj.superpoly import SuperDerivation, p1m_transition


@pytest.fixture(scope="module")
def fields():
    return standard_fields()


def test_closure_of_standard_bases():
    for basis in (u_sigma_basis(), conformal_basis(), v_xi_basis()):
        tensor = structure_constants(basis)
        assert len(tensor) == len(basis.names) ** 2


def test_non_closure_detected(fields):
    from superproj.superlie import SuperLieBasis

    bad = SuperLieBasis(["V1", "V3"], {k: fields[k] for k in ("V1", "V3")})
    with pytest.raises(NonClosureError):
        structure_constants(bad)  # [V1, V3] needs V2 + 2*V5-type terms


def test_super_antisymmetry_of_tensor():
    basis = u_sigma_basis()
    tensor = structure_constants(basis)
    par = basis.parities
    for (a, b), combo in tensor.items():
        sign = Scalar(-1 if not (par[a] and par[b]) else 1)
        flipped = {k: c * sign for k, c in tensor[(b, a)].items()}
        assert combo == flipped, (a, b)


def test_jacobi_via_tensor():
    basis = conformal_basis()
    tensor = structure_constants(basis)
    par = basis.parities
    names = basis.names
    for x in names:
        for y in names:
            for z in names:
                lhs = bracket_via_constants(
                    tensor, basis, {x: ONE}, tensor[(y, z)]
                )
                t1 = bracket_via_constants(
                    tensor, basis, tensor[(x, y)], {z: ONE}
                )
                sgn = Scalar(-1 if par[x] and par[y] else 1)
                t2 = {
                    k: c * sgn
                    for k, c in bracket_via_constants(
                        tensor, basis, {y: ONE}, tensor[(x, z)]
                    ).items()
                }
                total = dict(t1)
                for k, c in t2.items():
                    total[k] = total.get(k, Scalar(0)) + c
                total = {k: v for k, v in total.items() if not v.is_zero()}
                assert lhs == total, (x, y, z)


def test_u_sigma_table_verbatim(fields):
    from superproj.superlie import _combo_matches

    for (a, b), combo in U_SIGMA_TABLE.items():
        assert _combo_matches(fields, combo, fields[a].bracket(fields[b])), (a, b)


def test_u_sigma_span_is_4_4(fields):
    from superproj.linalg import sparse_rank

    names = ["U1", "U2", "U3", "U4", "Sigma1", "Sigma2", "Sigma3", "Sigma4"]
    assert sparse_rank([fields[k].vectorize() for k in names]) == 8


def test_conformal_change_of_basis_consistency():
    # structure constants of {H,K,D,Y,Q,S} computed directly must agree with
    # transforming the U/Sigma tensor through the defining linear change
    us = u_sigma_basis()
    conf = conformal_basis()
    t_us = structure_constants(us)
    t_conf = structure_constants(conf)
    change = {
        "H": {"U1": ONE},
        "K": {"U3": ONE},
        "D": {"U2": HALF, "U4": HALF},
        "Y": {"U2": HALF, "U4": -HALF},
    }
    from superproj.scalars import INV_SQRT2

    change["Q1"] = {"Sigma1": INV_SQRT2, "Sigma3": -(I * INV_SQRT2)}
    change["Q2"] = {"Sigma3": INV_SQRT2, "Sigma1": -(I * INV_SQRT2)}
    change["S1"] = {"Sigma2": -INV_SQRT2, "Sigma4": I * INV_SQRT2}
    change["S2"] = {"Sigma4": -INV_SQRT2, "Sigma2": I * INV_SQRT2}
    us_vectors = [us.elements[n].vectorize() for n in us.names]
    from superproj.linalg import express_in_span

    for a in conf.names:
        for b in conf.names:
            via_us = bracket_via_constants(t_us, us, change[a], change[b])
            # express the direct bracket in the U/Sigma basis for comparison
            direct = conf.elements[a].bracket(conf.elements[b])
            combo = express_in_span(us_vectors, direct.vectorize())
            direct_named = {
                us.names[k]: c for k, c in combo.items() if not c.is_zero()
            }
            assert via_us == direct_named, (a, b)


def test_osp22_all_equations_pass():
    report = verify_osp22()
    assert report.all_passed
    assert len(report.entries) == 58
    computed = dict(report.computed_only)
    assert computed["[K,Q1]"] == "(1)*S1"
    assert computed["[K,Q2]"] == "(1)*S2"
    assert computed["[K,S1]"] == "0"
    assert computed["[K,S2]"] == "0"


def test_y_brackets_rotate_with_i(fields):
    # [Y, Q1] = (i/2) Q2 and cyclic variants, fixed by direct computation
    assert fields["Y"].bracket(fields["Q1"]) == fields["Q2"] * (I * HALF)
    assert fields["Y"].bracket(fields["Q2"]) == fields["Q1"] * (-(I * HALF))
    assert fields["Y"].bracket(fields["S1"]) == fields["S2"] * (I * HALF)
    assert fields["Y"].bracket(fields["S2"]) == fields["S1"] * (-(I * HALF))


def test_integrability_conditions_contain_published_triple():
    conditions = integrability_conditions()
    ctx = conditions[0].ctx

    def quad(pairs):
        out = ctx.zero()
        for a, b in pairs:
            out = out + ctx.var(f"a{a}") * ctx.var(f"a{b}")
        return out

    published = [
        quad([(1, 5), (7, 3)]),
        quad([(2, 6), (8, 4)]),
        quad([(1, 6), (2, 5), (3, 8), (4, 7)]),
    ]
    for target in published:
        assert any(
            c == target or c == -target or c * 2 == target for c in conditions
        ), str(target)


def test_integrability_strictly_stronger_than_triple(fields):
    # Xi3 + Xi6 satisfies the three published conditions but squares to
    # theta2 d/dtheta1, witnessing the extra condition a4 a5 - a3 a6
    d = fields["Xi3"] + fields["Xi6"]
    ctx = d.ctx
    sq = d.bracket(d) * HALF
    assert sq == SuperDerivation(ctx, 0, {"t1": ctx.var("t2")})
    conditions = integrability_conditions()
    rendered = {str(c) for c in conditions}
    assert any("a4*a5" in r and "a3*a6" in r for r in rendered)
    assert len(conditions) == 7


def test_general_odd_section_squares_encode_conditions():
    d = general_odd_section()
    sq = d.bracket(d)
    assert not sq.is_zero()
    assert sq.parity == 0


def test_srs_standard_pair(fields):
    d1 = fields["Xi3"] + fields["Xi5"]
    d2 = fields["Xi1"] + fields["Xi7"]
    rep = check_srs_pair(d1, d2)
    assert rep.d1_square_zero and rep.d2_square_zero
    ctx = d1.ctx
    assert rep.anticommutator == SuperDerivation(ctx, 0, {"z": ctx.one() * 2})
    # frame holds at every finite U sample but degenerates at w = 0
    for chart, point, ok in rep.frame_results:
        if chart == "U":
            assert ok, point
        else:
            assert ok == (point != 0), point
    assert not rep.frame_everywhere


def test_srs_shifted_pair_moves_the_degeneracy(fields):
    # (1 + z - t1 t2)(Xi3 + Xi5) vanishes at z = -1 instead of at infinity,
    # so the frame now holds at w = -3 in the V chart but fails at z = -1
    d1 = fields["Xi3"] + fields["Xi5"] + fields["Xi4"] + fields["Xi6"]
    d2 = fields["Xi1"] + fields["Xi7"]
    rep = check_srs_pair(d1, d2)
    assert rep.d1_square_zero and rep.d2_square_zero
    results = {(chart, pt): ok for chart, pt, ok in rep.frame_results}
    assert not results[("U", -1)]
    assert results[("U", 0)] and results[("U", 2)]
    assert results[("V", -3)]


def test_srs_solved_family_anticommutator(fields):
    ctx = p1m_transition(2).ctx_a
    z, t1, t2 = ctx.var("z"), ctx.var("t1"), ctx.var("t2")
    d1 = fields["Xi4"] + fields["Xi6"]  # (z - t1 t2)(Xi3 + Xi5)
    d2 = fields["Xi2"] + fields["Xi8"]  # (z + t1 t2)(Xi1 + Xi7)
    anti = d1.bracket(d2)
    expected = SuperDerivation(
        ctx,
        0,
        {"z": z * z * 2, "t1": z * t1 * 2, "t2": z * t2 * 2},
    )
    assert anti == expected


def test_srs_rejects_wrong_chart():
    from superproj.errors import DomainError

    ctx = p1m_transition(3).ctx_a
    d = SuperDerivation(ctx, 1, {"t1": ctx.one()})
    with pytest.raises(DomainError):
        check_srs_pair(d, d)
