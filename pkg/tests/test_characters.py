"""Characters: Freudenthal multiplicities, the Kostant oracle, dimensions,
decomposition, and tensor products.

Core claims:
    - Freudenthal output equals the Kostant alternating sum on every weight
      (dual-route check) and sums to the Weyl dimension
    - decompose_into_weyl inverts evaluate_virtual, agrees with a naive
      full-support decomposition, and rejects non-invariant input
    - the Brauer/Klimyk product equals decompose(convolution) computed with
      independent plain loops
    - tensor products are symmetric, nonnegative, and dimension-multiplicative
"""

import random

import pytest

import oracles
from weylchar import (
    NotDominantError,
    NotWInvariantError,
    VirtualCharacter,
    WeightFunction,
    brauer_klimyk_product,
    decompose_into_weyl,
    evaluate_virtual,
    freudenthal_character,
    kostant_multiplicity_oracle,
    orbit,
    root_datum,
    tensor_decompose,
    weyl_dimension,
)


def test_character_examples(b2):
    ch = freudenthal_character(b2, (0, 1))
    assert dict(ch.items()) == {w: 1 for w in orbit(b2, (0, 1))}
    assert ch.dimension() == 4

    triv = freudenthal_character(b2, (0, 0))
    assert dict(triv.items()) == {(0, 0): 1}

    # chi(rho) is 16-dimensional; rho is not in the B2 root lattice, so
    # weight 0 does not occur; the interior weights have multiplicity 2
    chr_rho = freudenthal_character(b2, (1, 1))
    assert chr_rho.dimension() == 16
    assert chr_rho[(0, 0)] == 0
    assert chr_rho[(0, 1)] == 2
    assert chr_rho[(1, -1)] == 2
    assert kostant_multiplicity_oracle(b2, (1, 1), (0, 0)) == 0
    assert kostant_multiplicity_oracle(b2, (1, 1), (0, 1)) == 2


def test_character_rejects_non_dominant(b2):
    with pytest.raises(NotDominantError):
        freudenthal_character(b2, (-1, 0))
    with pytest.raises(NotDominantError):
        freudenthal_character(b2, (1,))


def test_kostant_oracle_basics(b2):
    assert kostant_multiplicity_oracle(b2, (2, 1), (2, 1)) == 1
    # mu not below lambda
    assert kostant_multiplicity_oracle(b2, (1, 0), (5, 5)) == 0
    assert kostant_multiplicity_oracle(b2, (1, 0), (0, 1)) == 0  # wrong coset


@pytest.mark.parametrize(
    "family,rank,lams",
    [
        ("A", 1, [(0,), (1,), (4,), (7,)]),
        ("A", 2, [(1, 1), (2, 1), (3, 0)]),
        ("B", 2, [(1, 1), (2, 0), (0, 2), (2, 1)]),
        ("G", 2, [(1, 0), (0, 1), (1, 1)]),
    ],
)
def test_freudenthal_equals_kostant(family, rank, lams):
    datum = root_datum(family, rank)
    for lam in lams:
        ch = freudenthal_character(datum, lam)
        assert ch.dimension() == weyl_dimension(datum, lam)
        for mu, m in ch.items():
            assert kostant_multiplicity_oracle(datum, lam, mu) == m
        assert ch.is_w_invariant()


def test_support_contains_every_dominant_weight_below(b2, g2):
    # independent enumeration: every dominant mu <= lam must appear, with
    # the oracle multiplicity
    for datum, lam in [(b2, (2, 2)), (g2, (1, 1))]:
        ch = freudenthal_character(datum, lam)
        cap = datum.height_key(lam)
        box = [
            (a, b)
            for a in range(cap // datum.height_vector[0] + 1)
            for b in range(cap // datum.height_vector[1] + 1)
        ]
        for mu in box:
            if datum.dominance_leq(mu, lam):
                assert ch[mu] == kostant_multiplicity_oracle(datum, lam, mu) > 0


def test_weyl_dimension_examples(b2):
    assert weyl_dimension(b2, (0, 1)) == 4
    assert weyl_dimension(b2, (0, 0)) == 1
    assert weyl_dimension(b2, (1, 1)) == 16
    assert weyl_dimension(b2, (1, 0)) == 5


def test_decompose_examples(b2):
    chi = freudenthal_character(b2, (2, 1))
    assert dict(decompose_into_weyl(chi).items()) == {(2, 1): 1}

    # orbit of the 5-dim vector character: orbit(w1) plus multiplicity 1 at 0
    xi = WeightFunction(b2, {w: 1 for w in orbit(b2, (1, 0))} | {(0, 0): 1})
    assert kostant_multiplicity_oracle(b2, (1, 0), (0, 0)) == 1
    assert dict(decompose_into_weyl(xi).items()) == {(1, 0): 1}

    mixed = 2 * freudenthal_character(b2, (1, 1)) - freudenthal_character(b2, (0, 2))
    assert dict(decompose_into_weyl(mixed).items()) == {(1, 1): 2, (0, 2): -1}


def test_decompose_rejects_non_invariant(b2):
    with pytest.raises(NotWInvariantError):
        decompose_into_weyl(WeightFunction(b2, {(1, 0): 1}))


def test_decompose_matches_naive_oracle(b2, g2):
    rng = random.Random(23)
    for datum in (b2, g2):
        for _ in range(10):
            terms = {
                tuple(rng.randint(0, 2) for _ in range(2)): rng.choice([-2, -1, 1, 2, 3])
                for _ in range(rng.randint(1, 3))
            }
            vc = VirtualCharacter(datum, terms)
            xi = evaluate_virtual(vc)
            assert dict(decompose_into_weyl(xi).items()) == dict(vc.items())
            assert oracles.naive_decompose(datum, dict(xi.items())) == dict(vc.items())


def test_brauer_klimyk_examples(a1, b2):
    unit = WeightFunction(b2, {(0, 0): 1})
    assert dict(brauer_klimyk_product(unit, (2, 1)).items()) == {(2, 1): 1}

    # A1 Clebsch-Gordan from the convolution oracle
    chi1 = freudenthal_character(a1, (1,))
    conv = oracles.convolve_dicts(dict(chi1.items()), dict(chi1.items()))
    assert oracles.naive_decompose(a1, conv) == {(2,): 1, (0,): 1}
    assert dict(brauer_klimyk_product(chi1, (1,)).items()) == {(2,): 1, (0,): 1}

    chi_w1 = freudenthal_character(b2, (1, 0))
    prod = brauer_klimyk_product(chi_w1, (0, 1))
    assert dict(prod.items()) == {(1, 1): 1, (0, 1): 1}
    assert weyl_dimension(b2, (1, 1)) + weyl_dimension(b2, (0, 1)) == 20


def test_brauer_klimyk_equals_convolution_route(b2, g2):
    rng = random.Random(29)
    for datum in (b2, g2):
        for _ in range(6):
            lam = tuple(rng.randint(0, 2) for _ in range(2))
            nu = tuple(rng.randint(0, 2) for _ in range(2))
            chi = freudenthal_character(datum, lam)
            fast = dict(brauer_klimyk_product(chi, nu).items())
            conv = oracles.convolve_dicts(
                dict(chi.items()), dict(freudenthal_character(datum, nu).items())
            )
            assert oracles.naive_decompose(datum, conv) == fast


def test_tensor_examples(a1, b2):
    assert dict(tensor_decompose(b2, (1, 0), (0, 0)).items()) == {(1, 0): 1}
    assert dict(tensor_decompose(b2, (0, 1), (1, 0)).items()) == {(1, 1): 1, (0, 1): 1}
    assert dict(tensor_decompose(a1, (2,), (1,)).items()) == {(3,): 1, (1,): 1}


def test_tensor_symmetry_positivity_dimensions(b2, g2, a2):
    rng = random.Random(31)
    for datum in (b2, g2, a2):
        for _ in range(6):
            lam = tuple(rng.randint(0, 2) for _ in range(datum.rank))
            mu = tuple(rng.randint(0, 2) for _ in range(datum.rank))
            t1 = tensor_decompose(datum, lam, mu)
            t2 = tensor_decompose(datum, mu, lam)
            assert t1 == t2
            assert all(c > 0 for _, c in t1.items())
            total = sum(c * weyl_dimension(datum, nu) for nu, c in t1.items())
            assert total == weyl_dimension(datum, lam) * weyl_dimension(datum, mu)


def test_evaluate_virtual(b2):
    assert dict(evaluate_virtual(VirtualCharacter(b2, {(0, 0): 1})).items()) == {(0, 0): 1}
    wf = evaluate_virtual(VirtualCharacter(b2, {(0, 1): 1}))
    assert dict(wf.items()) == {w: 1 for w in orbit(b2, (0, 1))}


def test_weight_function_algebra(b2):
    f = freudenthal_character(b2, (1, 0))
    g = freudenthal_character(b2, (0, 1))
    assert (f + g) - g == f
    assert (2 * f)[(0, 0)] == 2
    assert (f * g).dimension() == 20
    shifted = f.shift((0, 1))
    assert shifted[(1, 1)] == f[(1, 0)]
    conv = oracles.convolve_dicts(dict(f.items()), dict(g.items()))
    assert dict((f * g).items()) == conv


def test_virtual_character_requires_dominant_keys(b2):
    with pytest.raises(NotDominantError):
        VirtualCharacter(b2, {(-1, 0): 1})


def test_json_round_trips(b2):
    f = freudenthal_character(b2, (1, 1))
    obj = f.to_json()
    assert all(isinstance(e["mult"], str) for e in obj["entries"])
    assert WeightFunction.from_json(obj) == f

    vc = tensor_decompose(b2, (1, 0), (0, 1))
    obj2 = vc.to_json()
    assert VirtualCharacter.from_json(obj2) == vc
