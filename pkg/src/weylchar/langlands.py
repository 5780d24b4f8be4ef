"""Langlands-dual projection and branching multiplicities, by two routes.

Route one projects the character onto the sublattice X* and decomposes the
result into Weyl characters of the dual datum, using the dual datum's own
Freudenthal machinery. Route two never projects: it reads the same numbers
off the tensor product with the shift character chi(rho_L - rho), splitting
the constituents by the coset of rho_L - rho modulo X*. The two
computations share no intermediate data, so their agreement is a real
check of the branching identity; positivity or agreement failures raise
TheoremViolationError because they can only come from bugs.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import _kernels as K
from .characters import (
    VirtualCharacter,
    WeightFunction,
    _decompose_dominant,
    _full_char_dict,
    dominant_multiplicities,
    tensor_decompose,
    weyl_dimension,
)
from .errors import (
    ClosedFormUnavailableError,
    InternalConsistencyError,
    NotDominantError,
    TheoremViolationError,
)
from .root_data import (
    ModifiedDatum,
    Weight,
    dual_coords,
    embed,
    in_sublattice,
    root_scaling_map,
    scaling_factors,
)
from .weyl import steinberg_weight


def _check_star_dominant(md: ModifiedDatum, lam) -> Weight:
    lam = tuple(int(x) for x in lam)
    if len(lam) != md.base.rank:
        raise NotDominantError(f"weight {lam} has wrong length for rank {md.base.rank}")
    if min(lam) < 0:
        raise NotDominantError(f"weight {lam} is not dominant")
    if not in_sublattice(md, lam):
        dual_coords(md, lam)  # raises, listing the violated divisibility
    return lam


def pi_project(md: ModifiedDatum, xi: WeightFunction) -> WeightFunction:
    """Keep exactly the entries supported on X*, re-expressed in dual
    coordinates. Equivariant for the (identified) Weyl group actions."""
    if xi.datum != md.base:
        raise ValueError("weight function does not live on the base datum")
    l = md.l
    out = {}
    for w, m in xi.items():
        if all(x % li == 0 for x, li in zip(w, l)):
            out[tuple(x // li for x, li in zip(w, l))] = m
    return WeightFunction(md.dual, out, _own=True)


def langlands_branching_direct(md: ModifiedDatum, lam: Weight) -> dict[Weight, int]:
    """Branching multiplicities m_mu by projecting char(lam) to X* and
    decomposing into dual Weyl characters.

    Works on dominant restrictions: base-dominance and dual-dominance agree
    on X*, and the projection of a character is dual-Weyl-invariant.
    """
    lam = _check_star_dominant(md, lam)
    dom = dominant_multiplicities(md.base, lam)
    l = md.l
    sliced = {}
    for w, m in dom.items():
        if all(x % li == 0 for x, li in zip(w, l)):
            sliced[tuple(x // li for x, li in zip(w, l))] = m
    out = _decompose_dominant(md.dual, sliced)
    lam_dual = dual_coords(md, lam)
    if out.get(lam_dual) != 1:
        raise TheoremViolationError(
            f"leading branching coefficient at {lam_dual} is {out.get(lam_dual)}, not 1"
        )
    bad = {mu: c for mu, c in out.items() if c < 0}
    if bad:
        raise TheoremViolationError(f"negative branching multiplicities (direct route): {bad}")
    return out


def _tensor_branching_parts(md: ModifiedDatum, lam: Weight) -> tuple[dict, dict]:
    """Split the constituents of char(rho_L - rho) x char(lam) by the coset
    of rho_L - rho modulo X*: the matching coset carries the branching
    multiplicities, the rest is the complementary part."""
    lam = _check_star_dominant(md, lam)
    sigma = steinberg_weight(md)
    tensor = tensor_decompose(md.base, sigma, lam)
    m: dict[Weight, int] = {}
    n: dict[Weight, int] = {}
    for nu, c in tensor.items():
        if c < 0:
            raise TheoremViolationError(f"negative tensor multiplicity at {nu}")
        shifted = tuple(a - b for a, b in zip(nu, sigma))
        if in_sublattice(md, shifted):
            if min(shifted) < 0:
                raise TheoremViolationError(
                    f"constituent {nu} lies in the shift coset but {shifted} is not dominant"
                )
            m[dual_coords(md, shifted)] = c
        else:
            n[nu] = c
    lam_dual = dual_coords(md, lam)
    if m.get(lam_dual) != 1:
        raise TheoremViolationError(
            f"leading branching coefficient at {lam_dual} is {m.get(lam_dual)}, not 1"
        )
    return m, n


def langlands_branching_tensor(md: ModifiedDatum, lam: Weight) -> dict[Weight, int]:
    """Branching multiplicities read off tensor-product multiplicities:
    m_mu = multiplicity of char(embed(mu) + rho_L - rho) in
    char(rho_L - rho) x char(lam)."""
    return _tensor_branching_parts(md, lam)[0]


@dataclass(frozen=True)
class BranchingResult:
    """Both branching routes for one highest weight, plus the complementary
    (non-X*-coset) summand of the tensor product."""

    md: ModifiedDatum
    lam: Weight
    direct: dict[Weight, int]
    via_tensor: dict[Weight, int]
    complementary: VirtualCharacter
    agree: bool

    def to_json(self) -> dict:
        dual_hk = self.md.dual.height_key
        base_hk = self.md.base.height_key
        return {
            "lambda": list(self.lam),
            "ell": self.md.ell,
            "m": [
                {"mu": list(mu), "mult": str(c)}
                for mu, c in sorted(self.direct.items(), key=lambda kv: (-dual_hk(kv[0]), kv[0]))
            ],
            "n": [
                {"nu": list(nu), "mult": str(c)}
                for nu, c in sorted(
                    self.complementary.items(), key=lambda kv: (-base_hk(kv[0]), kv[0])
                )
            ],
            "routes_agree": self.agree,
        }


def langlands_branching(md: ModifiedDatum, lam: Weight) -> BranchingResult:
    """Compute both routes and compare them key by key."""
    direct = langlands_branching_direct(md, lam)
    m, n = _tensor_branching_parts(md, lam)
    return BranchingResult(
        md=md,
        lam=tuple(lam),
        direct=direct,
        via_tensor=m,
        complementary=VirtualCharacter(md.base, n),
        agree=direct == m,
    )


def steinberg_character_identity(md: ModifiedDatum, lam: Weight) -> tuple[bool, Weight | None]:
    """Weight-by-weight comparison of char(lam + rho_L - rho) against the
    convolution char(rho_L - rho) * char_dual(lam), the dual character
    embedded back into the base lattice. Returns (holds, first differing
    weight or None)."""
    lam = _check_star_dominant(md, lam)
    sigma = steinberg_weight(md)
    lhs = _full_char_dict(md.base, tuple(a + b for a, b in zip(lam, sigma)))
    dual_char = _full_char_dict(md.dual, dual_coords(md, lam))
    embedded = {embed(md, w): m for w, m in dual_char.items()}
    rhs = K.convolve(_full_char_dict(md.base, sigma), embedded)
    if lhs == rhs:
        return True, None
    hk = md.base.height_key
    diffs = [w for w in set(lhs) | set(rhs) if lhs.get(w, 0) != rhs.get(w, 0)]
    witness = min(diffs, key=lambda w: (-hk(w), w))
    return False, witness


def rho_shift_product_formula(md: ModifiedDatum) -> WeightFunction:
    """Expand e^(rho_L - rho) * prod over positive roots alpha of
    (1 + e^-alpha + ... + e^-(l_alpha - 1) alpha) and check it equals
    char(rho_L - rho) exactly."""
    sigma = steinberg_weight(md)
    f: dict[Weight, int] = {sigma: 1}
    for root, l_alpha in zip(md.base.positive_roots, scaling_factors(md)):
        if l_alpha == 1:
            continue
        alpha = root.weight
        g: dict[Weight, int] = {}
        for w, c in f.items():
            for k in range(l_alpha):
                key = tuple(a - k * b for a, b in zip(w, alpha))
                g[key] = g.get(key, 0) + c
        f = g
    expected = _full_char_dict(md.base, sigma)
    if f != expected:
        raise InternalConsistencyError(
            "product formula disagrees with the Freudenthal character of rho_L - rho"
        )
    return WeightFunction(md.base, f, _own=True)


def minuscule_branching_closed_form(md: ModifiedDatum, lam: Weight) -> dict[Weight, int]:
    """Orbit-sum branching formula, valid when char(rho_L - rho) is
    multiplicity-free with a single Weyl orbit as support: sum over orbit
    points p of the shift weight with lam + p - (rho_L - rho) dominant."""
    lam = _check_star_dominant(md, lam)
    sigma = steinberg_weight(md)
    if dominant_multiplicities(md.base, sigma) != {sigma: 1}:
        raise ClosedFormUnavailableError(
            "char(rho_L - rho) is not a multiplicity-free single orbit here; "
            "use the direct or tensor branching routes"
        )
    out: dict[Weight, int] = {}
    for p in K.weyl_orbit(md.base.simple_roots, sigma):
        mu = tuple(a + b - c for a, b, c in zip(lam, p, sigma))
        if min(mu) >= 0:
            out[dual_coords(md, mu)] = out.get(dual_coords(md, mu), 0) + 1
    return out


def star_dominant_box(md: ModifiedDatum, bound: int) -> list[Weight]:
    """All dominant weights in X* with every coordinate at most bound,
    ordered lexicographically."""
    ranges = [tuple(range(0, bound + 1, li)) for li in md.l]
    out: list[Weight] = [()]
    for r in ranges:
        out = [w + (x,) for w in out for x in r]
    return sorted(out)


@dataclass
class VerificationReport:
    """Outcome of a branching-theorem sweep."""

    ell: int
    bound: int
    lambdas_checked: int = 0
    max_dimension: int = 0
    wall_time_s: float = 0.0
    steinberg_checked: int = 0
    failures: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "ell": self.ell,
            "bound": self.bound,
            "lambdas_checked": self.lambdas_checked,
            "max_dimension": str(self.max_dimension),
            "steinberg_checked": self.steinberg_checked,
            "wall_time_s": self.wall_time_s,
            "passed": self.passed,
            "failures": self.failures,
        }


def _verify_one(md: ModifiedDatum, lam: Weight, include_steinberg: bool) -> dict:
    """Full invariant battery for one highest weight; returns a record with
    any failures (empty list when everything holds)."""
    sigma = steinberg_weight(md)
    failures = []
    record: dict = {"lambda": list(lam), "failures": failures}
    try:
        result = langlands_branching(md, lam)
        if not result.agree:
            failures.append(
                {
                    "check": "routes_agree",
                    "direct": {str(k): str(v) for k, v in sorted(result.direct.items())},
                    "tensor": {str(k): str(v) for k, v in sorted(result.via_tensor.items())},
                }
            )
        dim_sigma = weyl_dimension(md.base, sigma)
        dim_lam = weyl_dimension(md.base, lam)
        record["dimension"] = dim_sigma * dim_lam
        total = 0
        for mu, c in result.direct.items():
            total += c * weyl_dimension(md.base, tuple(a + b for a, b in zip(embed(md, mu), sigma)))
        for nu, c in result.complementary.items():
            total += c * weyl_dimension(md.base, nu)
        if total != dim_sigma * dim_lam:
            failures.append(
                {"check": "dimension_bookkeeping", "expected": str(dim_sigma * dim_lam), "got": str(total)}
            )
        for nu in result.complementary:
            if in_sublattice(md, tuple(a - b for a, b in zip(nu, sigma))):
                failures.append({"check": "coset_separation", "nu": list(nu)})
        if include_steinberg:
            holds, witness = steinberg_character_identity(md, lam)
            record["steinberg"] = holds
            if not holds:
                failures.append({"check": "steinberg_identity", "witness": list(witness)})
    except TheoremViolationError as exc:
        failures.append({"check": "positivity", "error": str(exc)})
    return record


def verify_branching_theorem(
    md: ModifiedDatum,
    bound: int,
    *,
    include_steinberg: bool = False,
    jobs: int = 1,
) -> VerificationReport:
    """Run both branching routes (and optionally the Steinberg identity) for
    every dominant weight of X* inside the coordinate box, and collect any
    disagreements. Aggregation is deterministic: records are ordered by the
    sorted weight list regardless of job count."""
    start = time.monotonic()
    lams = star_dominant_box(md, bound)
    report = VerificationReport(ell=md.ell, bound=bound)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(_verify_one, [md] * len(lams), lams, [include_steinberg] * len(lams)))
    else:
        records = [_verify_one(md, lam, include_steinberg) for lam in lams]
    for record in records:
        report.lambdas_checked += 1
        report.max_dimension = max(report.max_dimension, record.get("dimension", 0))
        if record.get("steinberg") is not None:
            report.steinberg_checked += 1
        for failure in record["failures"]:
            report.failures.append({"lambda": record["lambda"], **failure})
    report.wall_time_s = time.monotonic() - start
    return report


def verify_structure(md: ModifiedDatum) -> list[dict]:
    """Datum-level identities: the root-scaling bijection and the product
    formula for the shift character. Returns failure records (empty when
    all hold)."""
    failures = []
    try:
        root_scaling_map(md)
    except InternalConsistencyError as exc:
        failures.append({"check": "root_scaling_map", "error": str(exc)})
    try:
        rho_shift_product_formula(md)
    except InternalConsistencyError as exc:
        failures.append({"check": "product_formula", "error": str(exc)})
    return failures
