"""Independent test oracles.

Everything here recomputes quantities from first principles with its own
code paths (plain loops, Fractions), so agreement with the library is a
real check and not a tautology.
"""

from fractions import Fraction


def reflect_row(matrix, w, i):
    """s_i from the raw Cartan matrix rows: w - w[i] * (column i)."""
    return tuple(x - w[i] * matrix[j][i] for j, x in enumerate(w))


def orbit_closure(matrix, start):
    """Weyl orbit by naive closure under all simple reflections."""
    seen = {tuple(start)}
    frontier = [tuple(start)]
    while frontier:
        nxt = []
        for w in frontier:
            for i in range(len(matrix)):
                y = reflect_row(matrix, w, i)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def positive_roots_closure(matrix):
    """Positive roots as weight vectors: close the simple-root columns under
    reflections, keeping vectors whose root coordinates stay nonnegative."""
    n = len(matrix)
    cols = [tuple(matrix[j][i] for j in range(n)) for i in range(n)]
    inv = invert(matrix)
    out = set()
    for full in [orbit_closure(matrix, c) for c in cols]:
        for w in full:
            rc = mat_vec(inv, w)
            if all(x >= 0 for x in rc):
                out.add(w)
    return out


def invert(matrix):
    n = len(matrix)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(matrix)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        f = a[col][col]
        a[col] = [x / f for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                g = a[r][col]
                a[r] = [x - g * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def mat_vec(m, v):
    return tuple(sum(r[j] * v[j] for j in range(len(v))) for r in m)


def convolve_dicts(f, g):
    """Plain-loop convolution product."""
    out = {}
    for w1, a in f.items():
        for w2, b in g.items():
            k = tuple(x + y for x, y in zip(w1, w2))
            out[k] = out.get(k, 0) + a * b
    return {k: v for k, v in out.items() if v}


def naive_decompose(datum, entries):
    """Greedy decomposition into Weyl characters on the full support,
    scanning for a maximal support weight each round (no heap, no dominant
    restriction). Character values come from the library, but the
    decomposition logic is an independent path."""
    from weylchar.characters import freudenthal_character

    inv = invert(datum.cartan.matrix)

    def hkey(w):
        return sum(mat_vec(inv, w))

    work = {k: v for k, v in entries.items() if v}
    out = {}
    while work:
        top = max(work, key=lambda w: (hkey(w), w))
        assert all(x >= 0 for x in top), f"maximal weight {top} not dominant"
        c = work[top]
        out[top] = c
        for w, m in freudenthal_character(datum, top).items():
            r = work.get(w, 0) - c * m
            if r:
                work[w] = r
            else:
                work.pop(w, None)
    return out


def minimal_symmetrizer_search(matrix, cap=8):
    """Brute-force search for the smallest positive vector satisfying the
    symmetrization equation (ranks <= 3 only)."""
    from itertools import product

    n = len(matrix)
    best = None
    for cand in product(range(1, cap + 1), repeat=n):
        if all(
            cand[i] * matrix[i][j] == cand[j] * matrix[j][i]
            for i in range(n)
            for j in range(n)
        ):
            if best is None or sum(cand) < sum(best):
                best = cand
    return best
