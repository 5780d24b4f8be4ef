"""Characters as sparse integer functions on the weight lattice.

Weight multiplicities come from the Freudenthal recursion, which is exact in
integer arithmetic here: every pairing it needs is of the form
(weight, root) = sum_j d_j * root_coords_j * weight_coords_j. The Kostant
alternating sum over the Weyl group, driven by a brute-force partition
count, is kept as a fully independent oracle for the same numbers.

Characters are stored two ways: as multiplicities on dominant weights (the
canonical, small form, memoized per (datum, weight)) and, when needed, as
the full Weyl-orbit expansion. Decomposition into Weyl characters and the
Brauer/Klimyk product are the workhorses of the Langlands branching module.
"""

from __future__ import annotations

import heapq
from typing import Iterable, Iterator, Mapping

from . import _kernels as K
from .errors import InternalConsistencyError, NotDominantError, NotWInvariantError
from .root_data import RootDatum, Weight


class WeightFunction:
    """Finitely supported integer-valued function on the weight lattice.

    Immutable by convention: no method mutates, arithmetic returns new
    objects. Zero values are never stored.
    """

    __slots__ = ("datum", "_entries")

    def __init__(self, datum: RootDatum, entries: Mapping[Weight, int] | Iterable, *, _own: bool = False):
        if _own and isinstance(entries, dict):
            data = entries
        else:
            data = {}
            items = entries.items() if isinstance(entries, Mapping) else entries
            for w, m in items:
                m = int(m)
                if m:
                    data[tuple(w)] = m
        object.__setattr__(self, "datum", datum)
        object.__setattr__(self, "_entries", data)

    def __setattr__(self, name, value):
        raise AttributeError("WeightFunction is immutable")

    def _check_compatible(self, other: "WeightFunction"):
        if self.datum != other.datum:
            raise ValueError("weight functions live on different root data")

    def __getitem__(self, w: Weight) -> int:
        return self._entries.get(tuple(w), 0)

    def __len__(self) -> int:
        return len(self._entries)

    def __bool__(self) -> bool:
        return bool(self._entries)

    def __iter__(self) -> Iterator[Weight]:
        return iter(self._entries)

    def items(self):
        return self._entries.items()

    def support(self):
        return self._entries.keys()

    def as_dict(self) -> dict[Weight, int]:
        return dict(self._entries)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, WeightFunction)
            and self.datum == other.datum
            and self._entries == other._entries
        )

    def __hash__(self):
        return hash((self.datum, frozenset(self._entries.items())))

    def __add__(self, other: "WeightFunction") -> "WeightFunction":
        self._check_compatible(other)
        out = dict(self._entries)
        K.sub_scaled(out, other._entries, -1)
        return WeightFunction(self.datum, out, _own=True)

    def __sub__(self, other: "WeightFunction") -> "WeightFunction":
        self._check_compatible(other)
        out = dict(self._entries)
        K.sub_scaled(out, other._entries, 1)
        return WeightFunction(self.datum, out, _own=True)

    def __neg__(self) -> "WeightFunction":
        return WeightFunction(self.datum, {w: -m for w, m in self._entries.items()}, _own=True)

    def __mul__(self, other):
        if isinstance(other, WeightFunction):
            self._check_compatible(other)
            return WeightFunction(self.datum, K.convolve(self._entries, other._entries), _own=True)
        c = int(other)
        if c == 0:
            return WeightFunction(self.datum, {}, _own=True)
        return WeightFunction(self.datum, {w: c * m for w, m in self._entries.items()}, _own=True)

    __rmul__ = __mul__

    def shift(self, v: Weight) -> "WeightFunction":
        """Translate the support by v (multiply by e^v)."""
        v = tuple(v)
        return WeightFunction(
            self.datum,
            {tuple(a + b for a, b in zip(w, v)): m for w, m in self._entries.items()},
            _own=True,
        )

    def dimension(self) -> int:
        """Sum of all values: the dimension when this is a character."""
        return sum(self._entries.values())

    def is_w_invariant(self) -> bool:
        cols = self.datum.simple_roots
        get = self._entries.get
        for w, m in self._entries.items():
            for i in range(self.datum.rank):
                if w[i] and get(K.reflect(cols, w, i), 0) != m:
                    return False
        return True

    def restrict_dominant(self) -> dict[Weight, int]:
        return {w: m for w, m in self._entries.items() if min(w, default=0) >= 0}

    def sorted_entries(self) -> list[tuple[Weight, int]]:
        """Entries ordered highest weight first: by descending height, then
        ascending lexicographic coordinates."""
        hk = self.datum.height_key
        return sorted(self._entries.items(), key=lambda kv: (-hk(kv[0]), kv[0]))

    def to_json(self) -> dict:
        return {
            "datum": self.datum.to_json(),
            "entries": [
                {"weight": list(w), "mult": str(m)} for w, m in self.sorted_entries()
            ],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "WeightFunction":
        datum = RootDatum.from_json(obj["datum"])
        return cls(datum, {tuple(e["weight"]): int(e["mult"]) for e in obj["entries"]})

    def __repr__(self):
        return f"WeightFunction({len(self._entries)} weights, total {self.dimension()})"


class VirtualCharacter:
    """Integer combination of Weyl characters, stored by dominant highest
    weight. Zero coefficients are never stored."""

    __slots__ = ("datum", "_coeffs")

    def __init__(self, datum: RootDatum, coeffs: Mapping[Weight, int] | Iterable, *, _own: bool = False):
        if _own and isinstance(coeffs, dict):
            data = coeffs
        else:
            data = {}
            items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
            for w, m in items:
                m = int(m)
                if m:
                    data[tuple(w)] = m
        for w in data:
            if min(w, default=0) < 0:
                raise NotDominantError(f"virtual-character key {w} is not dominant")
        object.__setattr__(self, "datum", datum)
        object.__setattr__(self, "_coeffs", data)

    def __setattr__(self, name, value):
        raise AttributeError("VirtualCharacter is immutable")

    def __getitem__(self, w: Weight) -> int:
        return self._coeffs.get(tuple(w), 0)

    def __len__(self) -> int:
        return len(self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __iter__(self) -> Iterator[Weight]:
        return iter(self._coeffs)

    def items(self):
        return self._coeffs.items()

    def support(self):
        return self._coeffs.keys()

    def as_dict(self) -> dict[Weight, int]:
        return dict(self._coeffs)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, VirtualCharacter)
            and self.datum == other.datum
            and self._coeffs == other._coeffs
        )

    def __hash__(self):
        return hash((self.datum, frozenset(self._coeffs.items())))

    def _check_compatible(self, other: "VirtualCharacter"):
        if self.datum != other.datum:
            raise ValueError("virtual characters live on different root data")

    def __add__(self, other: "VirtualCharacter") -> "VirtualCharacter":
        self._check_compatible(other)
        out = dict(self._coeffs)
        K.sub_scaled(out, other._coeffs, -1)
        return VirtualCharacter(self.datum, out, _own=True)

    def __sub__(self, other: "VirtualCharacter") -> "VirtualCharacter":
        self._check_compatible(other)
        out = dict(self._coeffs)
        K.sub_scaled(out, other._coeffs, 1)
        return VirtualCharacter(self.datum, out, _own=True)

    def __mul__(self, other):
        c = int(other)
        if c == 0:
            return VirtualCharacter(self.datum, {}, _own=True)
        return VirtualCharacter(self.datum, {w: c * m for w, m in self._coeffs.items()}, _own=True)

    __rmul__ = __mul__

    def sorted_entries(self) -> list[tuple[Weight, int]]:
        hk = self.datum.height_key
        return sorted(self._coeffs.items(), key=lambda kv: (-hk(kv[0]), kv[0]))

    def to_json(self) -> dict:
        return {
            "datum": self.datum.to_json(),
            "coeffs": [
                {"weight": list(w), "mult": str(m)} for w, m in self.sorted_entries()
            ],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "VirtualCharacter":
        datum = RootDatum.from_json(obj["datum"])
        return cls(datum, {tuple(e["weight"]): int(e["mult"]) for e in obj["coeffs"]})

    def __repr__(self):
        return f"VirtualCharacter({dict(self.sorted_entries())})"


def _check_dominant(datum: RootDatum, w: Weight) -> Weight:
    w = tuple(int(x) for x in w)
    if len(w) != datum.rank:
        raise NotDominantError(f"weight {w} has wrong length for rank {datum.rank}")
    if min(w) < 0:
        raise NotDominantError(f"weight {w} is not dominant")
    return w


# memo tables; write-once per key, safe under the GIL
_DOMINANT_MEMO: dict[tuple[RootDatum, Weight], dict[Weight, int]] = {}
_FULL_MEMO: dict[tuple[RootDatum, Weight], dict[Weight, int]] = {}
_FULL_MEMO_TOTAL = 0
_FULL_MEMO_ENTRY_CAP = 50_000
_FULL_MEMO_TOTAL_CAP = 1_500_000


def clear_memo():
    """Drop all memoized characters (mainly for tests and benchmarks)."""
    global _FULL_MEMO_TOTAL
    _DOMINANT_MEMO.clear()
    _FULL_MEMO.clear()
    _PARTITION_MEMO.clear()
    _FULL_MEMO_TOTAL = 0


def dominant_multiplicities(datum: RootDatum, lam: Weight) -> dict[Weight, int]:
    """Multiplicities of the irreducible character on dominant weights.

    Returns a memoized dict; callers must not mutate it.
    """
    lam = _check_dominant(datum, lam)
    key = (datum, lam)
    got = _DOMINANT_MEMO.get(key)
    if got is None:
        roots = datum.positive_roots
        got = K.freudenthal(
            datum.simple_roots,
            datum.cartan.symmetrizers,
            tuple(r.weight for r in roots),
            tuple(r.coords for r in roots),
            lam,
        )
        _DOMINANT_MEMO[key] = got
    return got


def _full_char_dict(datum: RootDatum, lam: Weight) -> dict[Weight, int]:
    """Full orbit expansion of the irreducible character; memoized up to a
    size budget. Callers must not mutate the result."""
    global _FULL_MEMO_TOTAL
    key = (datum, tuple(lam))
    got = _FULL_MEMO.get(key)
    if got is None:
        got = K.orbit_expand(datum.simple_roots, dominant_multiplicities(datum, lam))
        if len(got) <= _FULL_MEMO_ENTRY_CAP and _FULL_MEMO_TOTAL + len(got) <= _FULL_MEMO_TOTAL_CAP:
            _FULL_MEMO[key] = got
            _FULL_MEMO_TOTAL += len(got)
    return got


def freudenthal_character(datum: RootDatum, lam: Weight) -> WeightFunction:
    """All weight multiplicities of the irreducible module of highest
    weight lam, by the Freudenthal recursion."""
    lam = _check_dominant(datum, lam)
    return WeightFunction(datum, dict(_full_char_dict(datum, lam)), _own=True)


_PARTITION_MEMO: dict[RootDatum, dict] = {}


def _partition_count(datum: RootDatum, beta: tuple[int, ...]) -> int:
    """Number of ways to write beta (root coordinates) as a nonnegative
    integer combination of positive roots; brute-force with memoization."""
    memo = _PARTITION_MEMO.setdefault(datum, {})
    roots = tuple(r.coords for r in datum.positive_roots)

    def count(b: tuple[int, ...], idx: int) -> int:
        if not any(b):
            return 1
        if idx == len(roots):
            return 0
        got = memo.get((b, idx))
        if got is not None:
            return got
        r = roots[idx]
        total = 0
        cur = b
        while True:
            total += count(cur, idx + 1)
            nxt = tuple(a - c for a, c in zip(cur, r))
            if min(nxt) < 0:
                break
            cur = nxt
        memo[(b, idx)] = total
        return total

    return count(tuple(beta), 0)


def kostant_multiplicity_oracle(datum: RootDatum, lam: Weight, mu: Weight) -> int:
    """Multiplicity of mu in the irreducible of highest weight lam, by the
    alternating Weyl-group sum over the Kostant partition function.

    Independent of the Freudenthal path: the group is enumerated as the
    orbit of the regular vector lam+rho with parities read off the
    breadth-first search depth.
    """
    lam = _check_dominant(datum, lam)
    mu = tuple(int(x) for x in mu)
    cols = datum.simple_roots
    lam_rho = tuple(x + 1 for x in lam)
    mu_rho = tuple(x + 1 for x in mu)
    total = 0
    for x, sign in K.orbit_parity(cols, lam_rho).items():
        diff = tuple(a - b for a, b in zip(x, mu_rho))
        rc = datum.int_root_coords(diff)
        if rc is None or min(rc) < 0:
            continue
        total += sign * _partition_count(datum, rc)
    return total


def weyl_dimension(datum: RootDatum, lam: Weight) -> int:
    """prod over positive roots of (lam+rho, alpha) / (rho, alpha), exactly."""
    lam = _check_dominant(datum, lam)
    sym = datum.cartan.symmetrizers
    lam_rho = tuple(x + 1 for x in lam)
    num = 1
    den = 1
    for root in datum.positive_roots:
        num *= sum(s * c * x for s, c, x in zip(sym, root.coords, lam_rho))
        den *= sum(s * c for s, c in zip(sym, root.coords))
    q, rem = divmod(num, den)
    if rem:
        raise InternalConsistencyError(f"Weyl dimension of {lam} is not integral")
    return q


def _require_w_invariant(xi: WeightFunction):
    if not xi.is_w_invariant():
        raise NotWInvariantError("weight function is not Weyl-invariant")


def _decompose_dominant(datum: RootDatum, dominant_entries: Mapping[Weight, int]) -> dict[Weight, int]:
    """Coefficients b_nu with sum(b_nu * char(nu)) matching the given
    dominant restriction; correct for the full function when it is
    W-invariant. Peels maximal weights with a lazy max-heap."""
    hk = datum.height_key
    work = dict(dominant_entries)
    out: dict[Weight, int] = {}
    heap: list = []
    for w in work:
        heapq.heappush(heap, (-hk(w), w))
    while heap:
        _, w = heapq.heappop(heap)
        c = work.get(w, 0)
        if c == 0:
            continue
        out[w] = c
        dchar = dominant_multiplicities(datum, w)
        K.sub_scaled(work, dchar, c)
        for x in dchar:
            if x in work:
                heapq.heappush(heap, (-hk(x), x))
    if work:
        raise InternalConsistencyError(
            "decomposition left a nonzero remainder; input was not in the "
            "span of Weyl characters"
        )
    return out


def decompose_into_weyl(xi: WeightFunction, *, assume_w_invariant: bool = False) -> VirtualCharacter:
    """The unique integer combination of Weyl characters equal to xi.

    Round-trips with evaluate_virtual. Raises NotWInvariantError when xi is
    not Weyl-invariant (the decomposition basis only spans invariants).
    """
    if not assume_w_invariant:
        _require_w_invariant(xi)
    out = _decompose_dominant(xi.datum, xi.restrict_dominant())
    return VirtualCharacter(xi.datum, out, _own=True)


def brauer_klimyk_product(
    xi: WeightFunction, nu: Weight, *, assume_w_invariant: bool = False
) -> VirtualCharacter:
    """Decomposition of xi * char(nu) without forming the product: each
    support weight w contributes its coefficient, with the sign of the
    rho-shifted regularization of w + nu, to the regularized weight;
    singular terms vanish."""
    datum = xi.datum
    nu = _check_dominant(datum, nu)
    if not assume_w_invariant:
        _require_w_invariant(xi)
    out = K.klimyk(datum.simple_roots, xi._entries, nu)
    return VirtualCharacter(datum, out, _own=True)


def tensor_decompose(datum: RootDatum, lam: Weight, mu: Weight) -> VirtualCharacter:
    """Multiplicities of the irreducible constituents of the tensor product
    of the irreducibles with highest weights lam and mu."""
    lam = _check_dominant(datum, lam)
    mu = _check_dominant(datum, mu)
    xi = WeightFunction(datum, _full_char_dict(datum, lam))
    return brauer_klimyk_product(xi, mu, assume_w_invariant=True)


def evaluate_virtual(vc: VirtualCharacter) -> WeightFunction:
    """Linear extension of the character map: sum of b_nu * char(nu)."""
    out: dict[Weight, int] = {}
    for nu, c in vc.items():
        K.sub_scaled(out, _full_char_dict(vc.datum, nu), -c)
    return WeightFunction(vc.datum, out, _own=True)
