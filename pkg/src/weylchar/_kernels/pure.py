"""Pure-Python kernels for the reflection/character inner loops.

The compiled module weylchar._kernels._speedups implements the same
functions with the same semantics; weylchar._kernels selects one at import.

Conventions shared by every kernel:
  * a weight is a tuple of ints in fundamental-weight coordinates;
  * ``cols`` is the tuple of Cartan-matrix columns, so cols[i][j] = a_ji and
    the simple reflection s_i sends w to w - w[i]*cols[i];
  * sparse functions on the weight lattice are plain dicts weight -> int
    with no zero values stored.

All arithmetic is exact (Python ints).
"""

from __future__ import annotations


def reflect(cols, w, i):
    c = w[i]
    if c == 0:
        return w
    col = cols[i]
    return tuple(x - c * y for x, y in zip(w, col))


def dominant_rep(cols, w):
    """Walk w into the dominant chamber, reflecting at the lowest-index
    negative coordinate. Returns (representative, (-1)**steps, steps)."""
    n = len(cols)
    x = list(w)
    steps = 0
    i = 0
    while i < n:
        c = x[i]
        if c < 0:
            col = cols[i]
            for j in range(n):
                x[j] -= c * col[j]
            steps += 1
            i = 0
        else:
            i += 1
    return tuple(x), (1 if steps % 2 == 0 else -1), steps


def regularize_shifted(cols, w):
    """rho-shifted regularization of w: walk w+rho to the dominant chamber.

    Returns (v, sign) with v + rho the dominant representative of w + rho,
    or (None, 0) when w + rho lies on a reflection wall.
    """
    n = len(cols)
    x = [c + 1 for c in w]
    steps = 0
    i = 0
    while i < n:
        c = x[i]
        if c == 0:
            return None, 0
        if c < 0:
            col = cols[i]
            for j in range(n):
                x[j] -= c * col[j]
            steps += 1
            i = 0
        else:
            i += 1
    return tuple(c - 1 for c in x), (1 if steps % 2 == 0 else -1)


def weyl_orbit(cols, w):
    """Full Weyl-group orbit of w via breadth-first closure."""
    n = len(cols)
    seen = {tuple(w)}
    frontier = [tuple(w)]
    while frontier:
        nxt = []
        for x in frontier:
            for i in range(n):
                c = x[i]
                if c == 0:
                    continue
                col = cols[i]
                y = tuple(a - c * b for a, b in zip(x, col))
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def orbit_parity(cols, w):
    """Orbit of a regular vector with the parity of the group element
    carrying w to each point: dict point -> +1/-1. w must be regular
    (no zero coordinate anywhere in its orbit)."""
    n = len(cols)
    out = {tuple(w): 1}
    frontier = [tuple(w)]
    sign = 1
    while frontier:
        sign = -sign
        nxt = []
        for x in frontier:
            for i in range(n):
                c = x[i]
                col = cols[i]
                y = tuple(a - c * b for a, b in zip(x, col))
                if y not in out:
                    out[y] = sign
                    nxt.append(y)
        frontier = nxt
    return out


def dominant_below(cols, pos_w, pos_r, lam):
    """Dominant weights mu <= lam, each mapped to the root coordinates of
    lam - mu. Closure under subtracting positive roots while staying
    dominant reaches all of them (covers of the dominance order on dominant
    weights are positive roots)."""
    n = len(cols)
    zero = (0,) * n
    dom = {tuple(lam): zero}
    frontier = [tuple(lam)]
    while frontier:
        nxt = []
        for w in frontier:
            beta = dom[w]
            for rw, rr in zip(pos_w, pos_r):
                ok = True
                for a, b in zip(w, rw):
                    if a - b < 0:
                        ok = False
                        break
                if not ok:
                    continue
                v = tuple(a - b for a, b in zip(w, rw))
                if v not in dom:
                    dom[v] = tuple(a + b for a, b in zip(beta, rr))
                    nxt.append(v)
        frontier = nxt
    return dom


def freudenthal(cols, sym, pos_w, pos_r, lam):
    """Weight multiplicities of the irreducible highest-weight module,
    restricted to dominant weights: dict dominant weight -> multiplicity.

    sym is the symmetrizer vector d_i; pos_w / pos_r give the positive
    roots in weight and root coordinates. The recursion denominator
    |lam+rho|^2 - |mu+rho|^2 and the pairings (mu+k*alpha, alpha) are
    integers because mu+k*alpha has integer fundamental coordinates and
    alpha has integer root coordinates.
    """
    lam = tuple(lam)
    dom = dominant_below(cols, pos_w, pos_r, lam)
    order = sorted(dom.items(), key=lambda kv: (sum(kv[1]), kv[0]))
    mults = {lam: 1}
    for w, beta in order:
        if w == lam:
            continue
        total = 0
        for rw, rr in zip(pos_w, pos_r):
            k = 1
            while True:
                ok = True
                for b, r in zip(beta, rr):
                    if b - k * r < 0:
                        ok = False
                        break
                if not ok:
                    break
                v = tuple(a + k * b for a, b in zip(w, rw))
                rep, _, _ = dominant_rep(cols, v)
                m = mults.get(rep)
                if m is None:
                    break
                p = 0
                for s, r, x in zip(sym, rr, v):
                    p += s * r * x
                total += m * p
                k += 1
        den = 0
        for s, b, lw, ww in zip(sym, beta, lam, w):
            den += s * b * (lw + ww + 2)
        q, rem = divmod(2 * total, den)
        if rem or q <= 0:
            raise ArithmeticError(
                "Freudenthal recursion produced a non-positive or fractional "
                f"multiplicity at {w}"
            )
        mults[w] = q
    return mults


def orbit_expand(cols, dom):
    """Expand dict {dominant weight: mult} to the full Weyl-orbit support."""
    out = {}
    for w, m in dom.items():
        for x in weyl_orbit(cols, w):
            out[x] = m
    return out


def convolve(f, g):
    """Pointwise-convolution product of two sparse functions."""
    if len(f) > len(g):
        f, g = g, f
    out = {}
    for w1, a in f.items():
        for w2, b in g.items():
            key = tuple(x + y for x, y in zip(w1, w2))
            c = out.get(key, 0) + a * b
            if c:
                out[key] = c
            elif key in out:
                del out[key]
    return out


def klimyk(cols, xi, nu):
    """Accumulate the Brauer/Klimyk sum: for each (w, a) in xi, regularize
    w + nu under the rho-shifted action and add a*sign at the dominant
    representative. Singular terms contribute nothing."""
    n = len(cols)
    out = {}
    for w, a in xi.items():
        x = [p + q + 1 for p, q in zip(w, nu)]
        steps = 0
        i = 0
        singular = False
        while i < n:
            c = x[i]
            if c == 0:
                singular = True
                break
            if c < 0:
                col = cols[i]
                for j in range(n):
                    x[j] -= c * col[j]
                steps += 1
                i = 0
            else:
                i += 1
        if singular:
            continue
        key = tuple(c - 1 for c in x)
        c = out.get(key, 0) + (a if steps % 2 == 0 else -a)
        if c:
            out[key] = c
        elif key in out:
            del out[key]
    return out


def sub_scaled(f, g, c):
    """In-place f -= c*g, pruning zeros."""
    if c == 0:
        return
    for k, v in g.items():
        r = f.get(k, 0) - c * v
        if r:
            f[k] = r
        elif k in f:
            del f[k]
