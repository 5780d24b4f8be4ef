"""Langlands projection and branching.

Core claims:
    - pi_project keeps exactly the X* entries and is Weyl-equivariant
    - the direct and tensor branching routes agree, with leading term 1 and
      nonnegative multiplicities, and the closed form joins them where its
      precondition holds
    - the Steinberg factorization and the product formula for the shift
      character hold weight-by-weight
    - complementary constituents stay outside the shift coset and the
      dimension bookkeeping balances
"""

import random

import pytest

import oracles
from weylchar import (
    ClosedFormUnavailableError,
    NotDominantError,
    SublatticeError,
    WeightFunction,
    dual_coords,
    embed,
    freudenthal_character,
    in_sublattice,
    langlands_branching,
    langlands_branching_direct,
    langlands_branching_tensor,
    minuscule_branching_closed_form,
    modified_datum,
    orbit,
    pi_project,
    rho_shift_product_formula,
    root_datum,
    star_dominant_box,
    steinberg_character_identity,
    steinberg_weight,
    verify_branching_theorem,
    weyl_dimension,
)
from weylchar.langlands import verify_structure


def test_pi_project_examples(md_b2, b2):
    chi_w1 = freudenthal_character(b2, (1, 0))
    # all five weights of the vector character have even second coordinate
    assert set(chi_w1.support()) == {(1, 0), (-1, 2), (1, -2), (-1, 0), (0, 0)}
    proj = pi_project(md_b2, chi_w1)
    assert proj.datum == md_b2.dual
    assert dict(proj.items()) == {
        (1, 0): 1, (-1, 1): 1, (1, -1): 1, (-1, 0): 1, (0, 0): 1,
    }

    chi_w2 = freudenthal_character(b2, (0, 1))
    assert len(pi_project(md_b2, chi_w2)) == 0  # all second coordinates odd


def test_pi_project_identity_when_simply_laced(a2):
    md = modified_datum(a2, 1)
    chi = freudenthal_character(a2, (1, 1))
    proj = pi_project(md, chi)
    assert dict(proj.items()) == dict(chi.items())


def test_pi_project_weyl_equivariant(md_b2, b2):
    rng = random.Random(37)
    mat = b2.cartan.matrix
    dual_mat = md_b2.dual.cartan.matrix
    for _ in range(20):
        f = {
            tuple(rng.randint(-4, 4) for _ in range(2)): rng.randint(-3, 3)
            for _ in range(6)
        }
        f = {w: c for w, c in f.items() if c}
        wf = WeightFunction(b2, f)
        for i in range(2):
            moved = WeightFunction(b2, {oracles.reflect_row(mat, w, i): c for w, c in f.items()})
            lhs = pi_project(md_b2, moved)
            proj = pi_project(md_b2, wf)
            rhs = {
                oracles.reflect_row(dual_mat, w, i): c for w, c in proj.items()
            }
            assert dict(lhs.items()) == rhs


def test_branching_examples(md_b2):
    assert langlands_branching_direct(md_b2, (1, 0)) == {(1, 0): 1, (0, 0): 1}
    assert langlands_branching_tensor(md_b2, (1, 0)) == {(1, 0): 1, (0, 0): 1}
    assert langlands_branching_direct(md_b2, (0, 0)) == {(0, 0): 1}
    # lambda = 2 w2 = (0,2): orbit shifts of w2 through (0,3),(1,1),(-1,3),(0,1)
    # keep the dominant ones, giving dual weights (0,1),(1,0),(0,0)
    expected = {(0, 1): 1, (1, 0): 1, (0, 0): 1}
    assert langlands_branching_direct(md_b2, (0, 2)) == expected
    assert langlands_branching_tensor(md_b2, (0, 2)) == expected
    assert minuscule_branching_closed_form(md_b2, (0, 2)) == expected


def test_branching_input_validation(md_b2):
    with pytest.raises(SublatticeError):
        langlands_branching_direct(md_b2, (0, 1))
    with pytest.raises(NotDominantError):
        langlands_branching_direct(md_b2, (-1, 0))
    with pytest.raises(SublatticeError):
        langlands_branching_tensor(md_b2, (0, 3))


def test_branching_simply_laced(a2):
    md = modified_datum(a2, 1)
    for lam in [(0, 0), (2, 1), (3, 3)]:
        result = langlands_branching(md, lam)
        assert result.direct == {lam: 1}
        assert result.agree
        assert len(result.complementary) == 0


def test_branching_result_json(md_b2):
    result = langlands_branching(md_b2, (1, 2))
    obj = result.to_json()
    assert obj["lambda"] == [1, 2]
    assert obj["ell"] == 2
    assert obj["routes_agree"] is True
    assert obj["m"][0] == {"mu": [1, 1], "mult": "1"}
    assert all(isinstance(e["mult"], str) for e in obj["m"] + obj["n"])
    got = {tuple(e["mu"]): int(e["mult"]) for e in obj["m"]}
    assert got == result.direct


def test_complement_and_dimension_bookkeeping(md_b2):
    b3 = root_datum("B", 3)
    md3 = modified_datum(b3, 2)
    sigma3 = steinberg_weight(md3)
    for md, lam in [(md_b2, (1, 2)), (md_b2, (3, 2)), (md3, (1, 1, 0)), (md3, (2, 1, 2))]:
        result = langlands_branching(md, lam)
        assert result.agree
        sigma = steinberg_weight(md)
        base = md.base
        for nu, c in result.complementary.items():
            assert c > 0
            assert not in_sublattice(md, tuple(a - b for a, b in zip(nu, sigma)))
        total = sum(
            c * weyl_dimension(base, tuple(a + b for a, b in zip(embed(md, mu), sigma)))
            for mu, c in result.direct.items()
        ) + sum(c * weyl_dimension(base, nu) for nu, c in result.complementary.items())
        assert total == weyl_dimension(base, sigma) * weyl_dimension(base, lam)
    assert sigma3 == (0, 0, 1)


def test_branching_keys_below_lambda(md_b2):
    b3 = root_datum("B", 3)
    md3 = modified_datum(b3, 2)
    for md, lam in [(md_b2, (3, 2)), (md_b2, (2, 4)), (md3, (2, 1, 2))]:
        result = langlands_branching(md, lam)
        assert result.direct[dual_coords(md, lam)] == 1
        for mu in result.direct:
            assert md.base.dominance_leq(embed(md, mu), lam)


def test_steinberg_identity_examples(md_b2, b2):
    holds, witness = steinberg_character_identity(md_b2, (1, 0))
    assert holds and witness is None
    # the identity chi(rho) = chi(w2) * chi_dual(w1) is 16 = 4 x 4
    lhs = freudenthal_character(b2, (1, 1))
    rhs = freudenthal_character(b2, (0, 1)) * WeightFunction(
        b2,
        {
            embed(md_b2, w): m
            for w, m in freudenthal_character(md_b2.dual, (1, 0)).items()
        },
    )
    assert lhs == rhs
    assert steinberg_character_identity(md_b2, (0, 0)) == (True, None)
    c3 = root_datum("C", 3)
    md_c3 = modified_datum(c3, 2)
    assert steinberg_character_identity(md_c3, (2, 0, 0)) == (True, None)


def test_product_formula(md_b2, a2):
    pf = rho_shift_product_formula(md_b2)
    # two short positive roots alpha2=(-1,2) and alpha1+alpha2=(1,0) with
    # l_alpha = 2: expanding (1+e^-a2)(1+e^-(a1+a2)) from (0,1) by hand
    assert dict(pf.items()) == {(0, 1): 1, (1, -1): 1, (-1, 1): 1, (0, -1): 1}
    assert dict(pf.items()) == dict(freudenthal_character(md_b2.base, (0, 1)).items())

    md_a2 = modified_datum(a2, 1)
    assert dict(rho_shift_product_formula(md_a2).items()) == {(0, 0): 1}


def test_closed_form_precondition(md_b2, g2):
    md_g2 = modified_datum(g2, 3)
    with pytest.raises(ClosedFormUnavailableError):
        minuscule_branching_closed_form(md_g2, (0, 0))
    # B2 satisfies it: shift character is the single orbit of w2
    assert minuscule_branching_closed_form(md_b2, (0, 0)) == {(0, 0): 1}
    assert minuscule_branching_closed_form(md_b2, (1, 0)) == {(1, 0): 1, (0, 0): 1}


def test_closed_form_three_way_agreement(md_b2):
    for lam in star_dominant_box(md_b2, 3):
        closed = minuscule_branching_closed_form(md_b2, lam)
        assert closed == langlands_branching_direct(md_b2, lam)
        assert closed == langlands_branching_tensor(md_b2, lam)


def test_star_dominant_box(md_b2):
    lams = star_dominant_box(md_b2, 4)
    assert len(lams) == 15
    assert all(in_sublattice(md_b2, lam) and min(lam) >= 0 and max(lam) <= 4 for lam in lams)
    assert lams == sorted(lams)


def test_verify_branching_theorem(md_b2, a2, g2):
    report = verify_branching_theorem(md_b2, 4, include_steinberg=True)
    assert report.passed
    assert report.lambdas_checked == 15
    assert report.steinberg_checked == 15
    assert report.max_dimension > 0
    assert verify_structure(md_b2) == []

    report_a2 = verify_branching_theorem(modified_datum(a2, 1), 3)
    assert report_a2.passed

    report_g2 = verify_branching_theorem(modified_datum(g2, 3), 2, include_steinberg=True)
    assert report_g2.passed


def test_verify_jobs_deterministic(md_b2):
    r1 = verify_branching_theorem(md_b2, 3, include_steinberg=True, jobs=1)
    r2 = verify_branching_theorem(md_b2, 3, include_steinberg=True, jobs=2)
    j1, j2 = r1.to_json(), r2.to_json()
    j1.pop("wall_time_s"), j2.pop("wall_time_s")
    assert j1 == j2
