"""Finite-type Cartan data, root data, and the ell-modified (dual) datum.

Coordinate convention: a weight is a tuple of integers in fundamental-weight
coordinates, coords[i] = <coroot_i, weight>. The j-th simple root then has
coordinate vector equal to the j-th column of the Cartan matrix, and the
simple reflection s_i subtracts coords[i] times that column.

Node numbering follows Bourbaki throughout: chains run 1..n; B_n has
alpha_n short, C_n has alpha_n long; D_n forks at node n-2; E_n hangs node 2
off node 4 of the chain 1-3-4-5-...; F4 is long-long-short-short; G2 has
alpha_1 short. For B2 this makes alpha_1 the long root and alpha_2 the
short root, with symmetrizers (2, 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd, lcm
from typing import NamedTuple

from .errors import CartanError, InternalConsistencyError, SublatticeError

Weight = tuple[int, ...]

#: positive-root counts per type, used as a construction-time sanity check
POSITIVE_ROOT_COUNTS = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}

_RANK_RANGE = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (4, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}


#: practical construction limit; exact character computations are already
#: out of reach long before this rank
MAX_RANK = 64


def _leading_minors_positive(rows) -> bool:
    """Whether all leading principal minors are positive, via one
    fraction-free Bareiss pass (the pivots are exactly the minors; a zero
    pivot means a zero minor, so no pivoting is ever needed)."""
    n = len(rows)
    m = [list(r) for r in rows]
    prev = 1
    for k in range(n):
        piv = m[k][k]
        if piv <= 0:
            return False
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * piv - m[i][k] * m[k][j]) // prev
        prev = piv
    return True


def _det_int(rows: list[list[int]]) -> int:
    """Exact determinant of an integer matrix (Bareiss elimination)."""
    n = len(rows)
    if n == 0:
        return 1
    m = [list(r) for r in rows]
    prev = 1
    sign = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def _invert_rational(rows) -> tuple[tuple[Fraction, ...], ...]:
    """Exact inverse via Gauss-Jordan over Fractions."""
    n = len(rows)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(rows)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise CartanError("matrix is singular")
        a[col], a[piv] = a[piv], a[col]
        inv = Fraction(1) / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return tuple(tuple(row[n:]) for row in a)


def minimal_symmetrizers(matrix) -> tuple[int, ...]:
    """Smallest positive integer vector d with d_i a_ij = d_j a_ji.

    Propagates the ratio d_j/d_i = a_ij/a_ji along edges of the Coxeter
    graph, one connected component at a time, then clears denominators.
    """
    n = len(matrix)
    vals: list[Fraction | None] = [None] * n
    for start in range(n):
        if vals[start] is not None:
            continue
        vals[start] = Fraction(1)
        stack = [start]
        comp = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if i == j or matrix[i][j] == 0:
                    continue
                want = vals[i] * Fraction(matrix[i][j], matrix[j][i])
                if vals[j] is None:
                    vals[j] = want
                    comp.append(j)
                    stack.append(j)
                elif vals[j] != want:
                    raise CartanError("matrix is not symmetrizable")
        scale = lcm(*(vals[k].denominator for k in comp))
        scaled = [int(vals[k] * scale) for k in comp]
        shrink = gcd(*scaled)
        for k, x in zip(comp, scaled):
            vals[k] = Fraction(x // shrink)
    out = tuple(int(v) for v in vals)  # type: ignore[arg-type]
    if any(v <= 0 for v in out):
        raise CartanError("symmetrizers must be positive")
    return out


@dataclass(frozen=True)
class CartanDatum:
    """A generalized Cartan matrix with an integral symmetrization vector.

    Validated on construction: integer entries, 2s on the diagonal,
    nonpositive off-diagonal with symmetric zero pattern, the symmetrization
    equation d_i a_ij = d_j a_ji, and finite type (all leading principal
    minors positive, equivalently the symmetrized matrix is positive
    definite).
    """

    matrix: tuple[tuple[int, ...], ...]
    symmetrizers: tuple[int, ...]
    family: str | None = None

    def __post_init__(self):
        mat = tuple(tuple(int(x) for x in row) for row in self.matrix)
        sym = tuple(int(x) for x in self.symmetrizers)
        object.__setattr__(self, "matrix", mat)
        object.__setattr__(self, "symmetrizers", sym)
        n = len(mat)
        if n == 0 or any(len(row) != n for row in mat):
            raise CartanError("Cartan matrix must be square and nonempty")
        if n > MAX_RANK:
            raise CartanError(f"rank {n} exceeds the supported limit of {MAX_RANK}")
        if len(sym) != n:
            raise CartanError("symmetrizer vector length must match the rank")
        if any(x <= 0 for x in sym):
            raise CartanError("symmetrizers must be positive integers")
        for i in range(n):
            if mat[i][i] != 2:
                raise CartanError(f"diagonal entry a_{i}{i} = {mat[i][i]} != 2")
            for j in range(n):
                if i != j:
                    if mat[i][j] > 0:
                        raise CartanError(f"positive off-diagonal entry a_{i}{j}")
                    if (mat[i][j] == 0) != (mat[j][i] == 0):
                        raise CartanError(f"zero pattern not symmetric at ({i},{j})")
                    if sym[i] * mat[i][j] != sym[j] * mat[j][i]:
                        raise CartanError(
                            f"symmetrization fails at ({i},{j}): "
                            f"{sym[i]}*{mat[i][j]} != {sym[j]}*{mat[j][i]}"
                        )
        if not _leading_minors_positive(mat):
            raise CartanError("matrix is not of finite type (nonpositive leading minor)")

    @property
    def rank(self) -> int:
        return len(self.matrix)

    @property
    def d(self) -> int:
        """Least common multiple of the symmetrizers."""
        return lcm(*self.symmetrizers)

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "rank": self.rank,
            "matrix": [list(row) for row in self.matrix],
            "symmetrizers": list(self.symmetrizers),
            "labeling": "bourbaki",
        }

    @classmethod
    def from_json(cls, obj: dict) -> "CartanDatum":
        return cls(
            matrix=tuple(tuple(row) for row in obj["matrix"]),
            symmetrizers=tuple(obj["symmetrizers"]),
            family=obj.get("family"),
        )


def cartan_matrix(family: str, rank: int) -> CartanDatum:
    """Standard Cartan matrix for a finite type, with minimal symmetrizers."""
    fam = str(family).upper()
    if fam not in _RANK_RANGE:
        raise CartanError(f"unknown family {family!r}; expected one of A-G")
    lo, hi = _RANK_RANGE[fam]
    if rank < lo or (hi is not None and rank > hi):
        raise CartanError(f"{fam}_{rank} is not a valid finite type")
    if rank > MAX_RANK:
        raise CartanError(f"rank {rank} exceeds the supported limit of {MAX_RANK}")
    n = rank
    mat = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def edge(i, j, aij=-1, aji=-1):
        mat[i][j] = aij
        mat[j][i] = aji

    if fam in ("A", "B", "C", "F", "G"):
        for i in range(n - 1):
            edge(i, i + 1)
        if fam == "B" and n >= 2:
            mat[n - 1][n - 2] = -2  # alpha_n short
        elif fam == "C" and n >= 2:
            mat[n - 2][n - 1] = -2  # alpha_n long
        elif fam == "F":
            mat[2][1] = -2  # arrow 2 -> 3: alpha_3, alpha_4 short
        elif fam == "G":
            mat[0][1] = -3  # alpha_1 short
    elif fam == "D":
        for i in range(n - 2):
            edge(i, i + 1)
        edge(n - 3, n - 1)
    elif fam == "E":
        chain = [0, 2, 3, 4, 5, 6, 7][: n - 1]
        for a, b in zip(chain, chain[1:]):
            edge(a, b)
        edge(1, 3)
    matrix = tuple(tuple(row) for row in mat)
    return CartanDatum(matrix, minimal_symmetrizers(matrix), family=fam)


def validate_cartan(matrix, symmetrizers) -> CartanDatum:
    """Validate a user-supplied matrix and symmetrizer vector.

    Non-minimal symmetrizations (multiples of the minimal vector) are
    accepted; every check lives in the CartanDatum constructor.
    """
    return CartanDatum(tuple(tuple(row) for row in matrix), tuple(symmetrizers))


class PositiveRoot(NamedTuple):
    weight: Weight  # fundamental-weight coordinates
    coords: tuple[int, ...]  # expansion over the simple roots

    @property
    def height(self) -> int:
        return sum(self.coords)


@dataclass(frozen=True, eq=True)
class RootDatum:
    """Simply connected realization of a finite-type Cartan datum.

    X = Z^n in fundamental-weight coordinates; the simple roots are the
    Cartan-matrix columns and the positive roots are generated by closing
    the simple roots under simple reflections.
    """

    cartan: CartanDatum

    @property
    def rank(self) -> int:
        return self.cartan.rank

    @cached_property
    def simple_roots(self) -> tuple[Weight, ...]:
        """simple_roots[i] is the i-th Cartan column: the weight vector of
        alpha_i, and also the vector subtracted w[i] times by s_i."""
        return tuple(zip(*self.cartan.matrix))

    @cached_property
    def positive_roots(self) -> tuple[PositiveRoot, ...]:
        n = self.rank
        cols = self.simple_roots
        found: dict[tuple[int, ...], Weight] = {}
        frontier = []
        for i in range(n):
            e = tuple(int(i == j) for j in range(n))
            found[e] = cols[i]
            frontier.append(e)
        while frontier:
            nxt = []
            for rc in frontier:
                w = found[rc]
                for i in range(n):
                    p = w[i]
                    c = rc[i] - p
                    if c < 0:
                        continue
                    new_rc = rc[:i] + (c,) + rc[i + 1 :]
                    if not any(new_rc) or new_rc in found:
                        continue
                    found[new_rc] = tuple(a - p * b for a, b in zip(w, cols[i]))
                    nxt.append(new_rc)
            frontier = nxt
        roots = sorted(found.items(), key=lambda kv: (sum(kv[0]), kv[0]))
        out = tuple(PositiveRoot(weight=w, coords=rc) for rc, w in roots)
        fam = self.cartan.family
        if fam in POSITIVE_ROOT_COUNTS:
            expected = POSITIVE_ROOT_COUNTS[fam](self.rank)
            if len(out) != expected:
                raise InternalConsistencyError(
                    f"{fam}_{self.rank}: found {len(out)} positive roots, expected {expected}"
                )
        return out

    @cached_property
    def inverse_cartan(self) -> tuple[tuple[Fraction, ...], ...]:
        return _invert_rational(self.cartan.matrix)

    @cached_property
    def det(self) -> int:
        return _det_int([list(r) for r in self.cartan.matrix])

    @cached_property
    def height_vector(self) -> tuple[int, ...]:
        """Integer vector h with h . w = det * (sum of root coordinates of w);
        a dominance-compatible height key."""
        inv = self.inverse_cartan
        det = self.det
        n = self.rank
        out = []
        for j in range(n):
            s = sum(inv[i][j] for i in range(n)) * det
            if s.denominator != 1:
                raise InternalConsistencyError("height vector not integral")
            out.append(int(s))
        return tuple(out)

    def height_key(self, w: Weight) -> int:
        return sum(h * x for h, x in zip(self.height_vector, w))

    def is_dominant(self, w: Weight) -> bool:
        return all(x >= 0 for x in w)

    def root_coords(self, w: Weight) -> tuple[Fraction, ...]:
        """Exact coordinates of w over the simple roots."""
        inv = self.inverse_cartan
        return tuple(sum(row[j] * w[j] for j in range(self.rank)) for row in inv)

    def int_root_coords(self, w: Weight) -> tuple[int, ...] | None:
        """Root coordinates if w lies in the root lattice, else None."""
        rc = self.root_coords(w)
        if any(x.denominator != 1 for x in rc):
            return None
        return tuple(int(x) for x in rc)

    def dominance_leq(self, lower: Weight, upper: Weight) -> bool:
        """Whether upper - lower is a nonnegative integer sum of simple roots."""
        diff = tuple(a - b for a, b in zip(upper, lower))
        rc = self.int_root_coords(diff)
        return rc is not None and all(x >= 0 for x in rc)

    def to_json(self) -> dict:
        return self.cartan.to_json()

    @classmethod
    def from_json(cls, obj: dict) -> "RootDatum":
        return cls(CartanDatum.from_json(obj))


def root_datum(family: str, rank: int) -> RootDatum:
    return RootDatum(cartan_matrix(family, rank))


def positive_roots(datum: RootDatum) -> tuple[PositiveRoot, ...]:
    """Complete positive system, ordered by (height, root coordinates)."""
    return datum.positive_roots


_TRANSPOSE_FAMILY = {"A": "A", "B": "C", "C": "B", "D": "D", "E": "E"}


@dataclass(frozen=True)
class ModifiedDatum:
    """The ell-modification of a root datum, for ell a multiple of d.

    l[i] is the smallest positive integer with l_i * d_i in ell*Z (= ell/d_i
    here), X* is the sublattice where l_i divides the i-th coordinate, and
    the dual datum is built from the transposed Cartan matrix with its
    minimal symmetrizers.
    """

    base: RootDatum
    ell: int
    l: tuple[int, ...]
    dual: RootDatum


def modified_datum(datum: RootDatum, ell: int) -> ModifiedDatum:
    d = datum.cartan.d
    if ell <= 0 or ell % d != 0:
        raise SublatticeError(
            f"ell={ell} must be a positive multiple of d={d}: only then is the "
            "modified Cartan matrix the transpose (Langlands dual) of the original"
        )
    l = tuple(ell // gcd(di, ell) for di in datum.cartan.symmetrizers)
    mat = datum.cartan.matrix
    tmat = tuple(tuple(mat[j][i] for j in range(len(mat))) for i in range(len(mat)))
    fam = datum.cartan.family
    dual_fam = _TRANSPOSE_FAMILY.get(fam) if fam else None
    dual = RootDatum(CartanDatum(tmat, minimal_symmetrizers(tmat), family=dual_fam))
    return ModifiedDatum(base=datum, ell=ell, l=l, dual=dual)


def in_sublattice(md: ModifiedDatum, w: Weight) -> bool:
    """Membership of w in X*: l_i divides the i-th coordinate for all i."""
    return all(x % li == 0 for x, li in zip(w, md.l))


def dual_coords(md: ModifiedDatum, w: Weight) -> Weight:
    """Coordinates of w in the dual datum (divide coordinate i by l_i)."""
    bad = [i for i, (x, li) in enumerate(zip(w, md.l)) if x % li != 0]
    if bad:
        detail = ", ".join(f"l_{i + 1}={md.l[i]} does not divide {w[i]}" for i in bad)
        raise SublatticeError(f"weight {w} is not in X*: {detail}")
    return tuple(x // li for x, li in zip(w, md.l))


def embed(md: ModifiedDatum, w: Weight) -> Weight:
    """Base-datum coordinates of a dual-datum weight (multiply by l_i)."""
    return tuple(x * li for x, li in zip(w, md.l))


def scaling_factors(md: ModifiedDatum) -> tuple[int, ...]:
    """l_alpha for each base positive root, aligned with base.positive_roots.

    l_alpha depends only on the root length: 2*d_alpha = (alpha, alpha) and
    l_alpha is the smallest positive integer with l_alpha * d_alpha in ell*Z,
    which agrees with l_i on the Weyl orbit of alpha_i.
    """
    sym = md.base.cartan.symmetrizers
    out = []
    for root in md.base.positive_roots:
        norm = sum(s * c * x for s, c, x in zip(sym, root.coords, root.weight))
        d_alpha = norm // 2
        if norm % 2 or d_alpha <= 0:
            raise InternalConsistencyError(f"root {root.weight} has bad norm {norm}")
        out.append(md.ell // gcd(d_alpha, md.ell))
    return tuple(out)


class RootScaling(NamedTuple):
    root: PositiveRoot  # positive root of the base datum
    image: PositiveRoot  # the matching positive root of the dual datum
    factor: int  # l_alpha: image (embedded in X) equals factor * root


def root_scaling_map(md: ModifiedDatum) -> tuple[RootScaling, ...]:
    """The bijection alpha <-> alpha* with alpha* = l_alpha * alpha.

    Matches every base positive root, scaled by its l_alpha, against the
    embedded positive system of the dual datum, and verifies the match is a
    bijection; failure is an internal-consistency error, not a user error.
    """
    factors = scaling_factors(md)
    dual_by_weight = {}
    for droot in md.dual.positive_roots:
        dual_by_weight[embed(md, droot.weight)] = droot
    if len(dual_by_weight) != len(md.dual.positive_roots):
        raise InternalConsistencyError("embedded dual roots collide")
    out = []
    used = set()
    for root, l_alpha in zip(md.base.positive_roots, factors):
        target = tuple(l_alpha * x for x in root.weight)
        image = dual_by_weight.get(target)
        if image is None or target in used:
            raise InternalConsistencyError(
                f"root scaling is not a bijection at {root.weight} (l_alpha={l_alpha})"
            )
        used.add(target)
        out.append(RootScaling(root=root, image=image, factor=l_alpha))
    if len(used) != len(md.dual.positive_roots):
        raise InternalConsistencyError("root scaling misses dual roots")
    return tuple(out)
