from fractions import Fraction
from math import comb

import pytest

from pfafflab import branching as br
from pfafflab.algebra import so
from pfafflab.pfaffian import hat_set, pf_F
from pfafflab.projector import SingularWeightError
from pfafflab.report import VerificationReport
from pfafflab.reps import shape_to_highest, tensor_module
from pfafflab.suites import mz_pins


@pytest.fixture(scope="module")
def pins():
    return mz_pins()


def test_D_examples():
    h = Fraction(3)
    assert br.D_polynomial(1, [h]) == h + Fraction(1, 2)
    assert br.D_polynomial(2, [Fraction(2), Fraction(5)]) == 2 * (5 + 1)
    with pytest.raises(ValueError):
        br.D_polynomial(2, [h])


def test_rho_of_positive_system():
    assert [br.rho(i, -1) for i in (1, 2, 3)] == [Fraction(-1, 2), Fraction(-3, 2), Fraction(-5, 2)]
    assert br.rho(-2, -1) == Fraction(3, 2)
    assert br.rho(0) == 0


def test_labels_and_tables_small():
    assert br.enumerate_branching_labels((0, 0), (0,)) == [br.BranchingLabel(0, (0, 0))]
    assert br.count_gt_tables((0, 0)) == 1
    assert br.count_gt_tables((-1,)) == 3
    assert br.count_gt_tables((0,)) == 1
    with pytest.raises(ValueError):
        br.enumerate_branching_labels((0, 0), (0, 0))


def test_labels_count_highest_vectors(o5_modules):
    for shape, M in o5_modules.items():
        lam = shape_to_highest(5, shape)
        spaces = M.highest_spaces()
        for mu in br._candidate_mus(lam):
            H = spaces.get(tuple(map(Fraction, mu)))
            assert len(br.enumerate_branching_labels(lam, mu)) == (len(H) if H else 0)
        assert br.count_gt_tables(lam) == M.dim


def test_gt_rows_interlace():
    for table in br.enumerate_gt_tables((-1, -2)):
        top, low = table
        assert top.row == (-1, -2)
        assert br.is_valid_label(top.row, low.row, br.BranchingLabel(top.sigma, top.primed))


def test_top_xi_is_highest_vector(o5_modules):
    for shape in [(1, 1), (2, 1), (2, 2)]:
        M = o5_modules[shape]
        act = br.MzAction(M)
        lam = shape_to_highest(5, shape)
        v = br.xi_vector(act, lam, lam[:1], br.BranchingLabel(0, lam))
        assert v == M.highest_vector()


def test_xi_sigma_one_is_z_n0_of_sigma_zero(o5_modules):
    M = o5_modules[(2, 2)]
    act = br.MzAction(M)
    lam = (-2, -2)
    for mu in [(-1,), (-2,)]:
        for l in br.enumerate_branching_labels(lam, mu):
            if l.sigma:
                x0 = br.xi_vector(act, lam, mu, br.BranchingLabel(0, l.nu))
                assert br.xi_vector(act, lam, mu, l) == act.z(2, 0, x0)


def test_xi_negative_exponent_rejected(o5_modules):
    act = br.MzAction(o5_modules[(1, 1)])
    with pytest.raises(ValueError):
        br.xi_vector(act, (-1, -1), (0,), br.BranchingLabel(0, (-1, -1)))


def _highest_samples(M):
    for mu, H in M.highest_spaces().items():
        for v in H.basis:
            yield mu, H, v


def test_z_check_mirror_sign(o5_modules):
    # F[i,a] = -F[-a,-i], so the mirrored operator differs by a sign
    M = o5_modules[(2, 1)]
    act = br.MzAction(M)
    for mu, H, v in _highest_samples(M):
        for i in (-1, 0, 1):
            try:
                a, b = act.z_check(i, 2, v), act.z_check(-2, -i, v)
            except SingularWeightError:
                continue
            assert a == {p: -c for p, c in b.items()}


def test_raising_operators_shift_mu(o5_modules):
    M = o5_modules[(2, 1)]
    act = br.MzAction(M)
    seen = 0
    for mu, H, v in _highest_samples(M):
        for i in (-1, 0, 1):
            try:
                w = act.z(2, i, v)
            except SingularWeightError:
                continue
            if not w:
                continue
            shift = -1 if i > 0 else (1 if i < 0 else 0)
            assert {act.mu_of(M.weights[p]) for p in w} == {(mu[0] + shift,)}
            seen += 1
    assert seen


def test_Z_is_cubic_in_u_and_keeps_highest(o5_modules):
    M = o5_modules[(2, 1)]
    act = br.MzAction(M)
    spaces = M.highest_spaces()
    for mu, H, v in _highest_samples(M):
        vals = [act.Z(2, -2, u, v) for u in range(5)]
        diff = {}
        for k, x in enumerate(vals):
            for p, c in x.items():
                diff[p] = diff.get(p, 0) + (-1) ** k * comb(4, k) * c
        assert not any(diff.values())
        for x in vals:
            if x:
                assert spaces[mu].contains(x)


def test_Z_rejects_inner_indices(o5_modules):
    act = br.MzAction(o5_modules[(1, 1)])
    with pytest.raises(ValueError):
        act.Z(1, -2, 0, act.module.highest_vector())


def test_harish_chandra_images():
    for N in (5, 7, 9):
        A = so(N)
        for I in br.symmetric_inner_sets(A.n):
            assert br.harish_chandra_image(A, I) == br.hc_polynomial(I, Fraction(-1, 2))


def test_hc_image_small_case():
    # PfF over {-1, 1} is F[1,1]
    assert br.harish_chandra_image(so(5), (-1, 1)) == {(1,): Fraction(1)}


def test_nonsymmetric_vanishing_symbolic():
    A = so(7)
    rep = VerificationReport("t")
    for I in br.nonsymmetric_inner_sets(3):
        br.check_nonsymmetric_symbolic(A, I, rep)
    assert rep.passed


def test_kappa_and_product_form(o5_modules, pins):
    assert pins["kappa"] == Fraction(3, 2)
    mu = (Fraction(-2),)
    assert br.tm_scalar(1, mu, pins["kappa"]) == br.tm_scalar(1, mu)
    rep = VerificationReport("t")
    for M in o5_modules.values():
        br.theorem_tm_check(M, rep, kappa=pins["kappa"])
    assert rep.passed


def test_tm_product_form_on_o7():
    rep = VerificationReport("t")
    M = tensor_module(7, (1, 1))
    br.theorem_tm_check(M, rep)
    assert not rep.failures


def test_main_pins(pins):
    assert pins["den"] == (-1, Fraction(-1))
    assert pins["sign"] == -1
    assert pins["deltas"] == [Fraction(-1, 2)]


@pytest.mark.parametrize("shape", [(1, 1), (2, 2)])
def test_main_formula_on_modules_without_Z_steps(pins, shape):
    rep = VerificationReport("t")
    br.check_main_theorem(tensor_module(5, shape), shape_to_highest(5, shape), rep, tm_c=pins["tm_c"],
                          sign=pins["sign"], den=pins["den"], data=pins["data"][shape])
    assert rep.passed
    assert any(r.check_id == "mz.main_theorem" for r in rep.records)


def test_main_formula_fails_where_Z_steps_occur(pins):
    # the sigma = 1 coefficients disagree with the gamma-ratio formula on (-1, -2)
    rep = VerificationReport("t")
    br.check_main_theorem(tensor_module(5, (2, 1)), (-1, -2), rep, tm_c=pins["tm_c"], sign=pins["sign"],
                          den=pins["den"])
    bad = rep.failures
    assert bad and all(r.check_id in ("mz.main_theorem", "mz.main_boundary") for r in bad)
    assert all(r.params["sigma"] == 1 for r in bad)
    assert all(r.check_id == "mz.xi_basis" and r.ok for r in rep.records if r.check_id == "mz.xi_basis")


def test_sigma_one_coefficients_example():
    # gamma = (nu_1, nu_2 - 1) under the default rho
    c = br.sigma_one_coefficients((-1, -2))
    g1, g2 = Fraction(-1), Fraction(-3)
    assert c == [-g2 ** 2 / (g1 ** 2 - g2 ** 2), -g1 ** 2 / (g2 ** 2 - g1 ** 2)]
