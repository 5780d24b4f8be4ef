# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels: same API and semantics as weylchar._kernels.pure.

Weight coordinates are staged into C integer buffers; multiplicities stay
Python ints so they can be arbitrarily large. Inputs whose coordinates do
not fit comfortably in 64 bits (or whose rank exceeds the buffer size)
delegate to the pure implementation, which never overflows.
"""

from . import pure as _pure

cdef enum:
    MAXRANK = 32

cdef long COORD_BOUND = 1000000000


cdef inline bint _fits(object w, long bound):
    for v in w:
        if not (-bound <= v <= bound):
            return False
    return True


cdef inline int _load_cols(object cols, long* mat) except -1:
    cdef Py_ssize_t n = len(cols)
    cdef Py_ssize_t i, j
    for i in range(n):
        col = cols[i]
        for j in range(n):
            mat[i * n + j] = col[j]
    return 0


cdef inline tuple _tup(long* x, Py_ssize_t n):
    out = [0] * n
    cdef Py_ssize_t j
    for j in range(n):
        out[j] = x[j]
    return tuple(out)


cdef inline long _walk(long* mat, long* x, Py_ssize_t n) nogil:
    """Reflect at the lowest-index negative coordinate until dominant;
    returns the number of reflections."""
    cdef Py_ssize_t i, j
    cdef long c, steps = 0
    i = 0
    while i < n:
        c = x[i]
        if c < 0:
            for j in range(n):
                x[j] -= c * mat[i * n + j]
            steps += 1
            i = 0
        else:
            i += 1
    return steps


def reflect(cols, w, i):
    cdef long c = w[i]
    if c == 0:
        return tuple(w)
    col = cols[i]
    return tuple([a - c * b for a, b in zip(w, col)])


def dominant_rep(cols, w):
    cdef Py_ssize_t n = len(cols)
    cdef long mat[MAXRANK * MAXRANK]
    cdef long x[MAXRANK]
    cdef Py_ssize_t j
    cdef long steps
    if n > MAXRANK or not _fits(w, COORD_BOUND):
        return _pure.dominant_rep(cols, w)
    _load_cols(cols, mat)
    for j in range(n):
        x[j] = w[j]
    steps = _walk(mat, x, n)
    return _tup(x, n), (1 if steps % 2 == 0 else -1), steps


def regularize_shifted(cols, w):
    cdef Py_ssize_t n = len(cols)
    cdef long mat[MAXRANK * MAXRANK]
    cdef long x[MAXRANK]
    cdef Py_ssize_t i, j
    cdef long c, steps = 0
    if n > MAXRANK or not _fits(w, COORD_BOUND):
        return _pure.regularize_shifted(cols, w)
    _load_cols(cols, mat)
    for j in range(n):
        x[j] = w[j] + 1
    i = 0
    while i < n:
        c = x[i]
        if c == 0:
            return None, 0
        if c < 0:
            for j in range(n):
                x[j] -= c * mat[i * n + j]
            steps += 1
            i = 0
        else:
            i += 1
    out = [0] * n
    for j in range(n):
        out[j] = x[j] - 1
    return tuple(out), (1 if steps % 2 == 0 else -1)


def weyl_orbit(cols, w):
    cdef Py_ssize_t n = len(cols)
    cdef long mat[MAXRANK * MAXRANK]
    cdef long x[MAXRANK]
    cdef long y[MAXRANK]
    cdef Py_ssize_t i, j
    cdef long c
    if n > MAXRANK or not _fits(w, COORD_BOUND):
        return _pure.weyl_orbit(cols, w)
    _load_cols(cols, mat)
    start = tuple(w)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for t in frontier:
            for j in range(n):
                x[j] = t[j]
            for i in range(n):
                c = x[i]
                if c == 0:
                    continue
                for j in range(n):
                    y[j] = x[j] - c * mat[i * n + j]
                cand = _tup(y, n)
                if cand not in seen:
                    seen.add(cand)
                    nxt.append(cand)
        frontier = nxt
    return seen


def orbit_parity(cols, w):
    cdef Py_ssize_t n = len(cols)
    cdef long mat[MAXRANK * MAXRANK]
    cdef long x[MAXRANK]
    cdef long y[MAXRANK]
    cdef Py_ssize_t i, j
    cdef long c
    cdef long sign = 1
    if n > MAXRANK or not _fits(w, COORD_BOUND):
        return _pure.orbit_parity(cols, w)
    _load_cols(cols, mat)
    start = tuple(w)
    out = {start: 1}
    frontier = [start]
    while frontier:
        sign = -sign
        nxt = []
        for t in frontier:
            for j in range(n):
                x[j] = t[j]
            for i in range(n):
                c = x[i]
                for j in range(n):
                    y[j] = x[j] - c * mat[i * n + j]
                cand = _tup(y, n)
                if cand not in out:
                    out[cand] = sign
                    nxt.append(cand)
        frontier = nxt
    return out


def dominant_below(cols, pos_w, pos_r, lam):
    cdef Py_ssize_t n = len(cols)
    cdef Py_ssize_t nroots = len(pos_w)
    cdef long x[MAXRANK]
    cdef Py_ssize_t r, j
    cdef bint ok
    if n > MAXRANK or not _fits(lam, COORD_BOUND):
        return _pure.dominant_below(cols, pos_w, pos_r, lam)
    rw_flat = []
    rr_flat = []
    for r in range(nroots):
        rw_flat.extend(pos_w[r])
        rr_flat.extend(pos_r[r])
    import array as _array
    rw_arr = _array.array("l", rw_flat)
    rr_arr = _array.array("l", rr_flat)
    cdef long[:] rw_view = rw_arr
    cdef long[:] rr_view = rr_arr

    zero = (0,) * n
    start = tuple(lam)
    dom = {start: zero}
    frontier = [start]
    while frontier:
        nxt = []
        for t in frontier:
            beta = dom[t]
            for j in range(n):
                x[j] = t[j]
            for r in range(nroots):
                ok = True
                for j in range(n):
                    if x[j] - rw_view[r * n + j] < 0:
                        ok = False
                        break
                if not ok:
                    continue
                cand = [0] * n
                for j in range(n):
                    cand[j] = x[j] - rw_view[r * n + j]
                key = tuple(cand)
                if key not in dom:
                    bb = [0] * n
                    for j in range(n):
                        bb[j] = beta[j] + rr_view[r * n + j]
                    dom[key] = tuple(bb)
                    nxt.append(key)
        frontier = nxt
    return dom


def freudenthal(cols, sym, pos_w, pos_r, lam):
    cdef Py_ssize_t n = len(cols)
    cdef Py_ssize_t nroots = len(pos_w)
    cdef long mat[MAXRANK * MAXRANK]
    cdef long wbuf[MAXRANK]
    cdef long vbuf[MAXRANK]
    cdef long bbuf[MAXRANK]
    cdef long dvec[MAXRANK]
    cdef Py_ssize_t r, j
    cdef long k, p, den, steps
    cdef bint ok
    # lam and sym are staged into C ints and multiplied together with string
    # lengths; keep generous headroom below 2^63 or use the pure big-int path
    if n > MAXRANK or not _fits(lam, 1000000) or not _fits(sym, 10000):
        return _pure.freudenthal(cols, sym, pos_w, pos_r, lam)
    _load_cols(cols, mat)
    for j in range(n):
        dvec[j] = sym[j]

    import array as _array
    rw_arr = _array.array("l", [v for row in pos_w for v in row])
    rr_arr = _array.array("l", [v for row in pos_r for v in row])
    cdef long[:] rw = rw_arr
    cdef long[:] rr = rr_arr

    lam_t = tuple(lam)
    dom = dominant_below(cols, pos_w, pos_r, lam_t)
    order = sorted(dom.items(), key=_height_key)
    mults = {lam_t: 1}
    cdef long lam_c[MAXRANK]
    for j in range(n):
        lam_c[j] = lam_t[j]

    for wt, beta in order:
        if wt == lam_t:
            continue
        for j in range(n):
            wbuf[j] = wt[j]
            bbuf[j] = beta[j]
        total = 0
        for r in range(nroots):
            k = 1
            while True:
                ok = True
                for j in range(n):
                    if bbuf[j] - k * rr[r * n + j] < 0:
                        ok = False
                        break
                if not ok:
                    break
                for j in range(n):
                    vbuf[j] = wbuf[j] + k * rw[r * n + j]
                p = 0
                for j in range(n):
                    p += dvec[j] * rr[r * n + j] * vbuf[j]
                _walk(mat, vbuf, n)
                m = mults.get(_tup(vbuf, n))
                if m is None:
                    break
                total = total + m * p
                k += 1
        den = 0
        for j in range(n):
            den += dvec[j] * bbuf[j] * (lam_c[j] + wbuf[j] + 2)
        q, rem = divmod(2 * total, den)
        if rem or q <= 0:
            raise ArithmeticError(
                "Freudenthal recursion produced a non-positive or fractional "
                "multiplicity at %r" % (wt,)
            )
        mults[wt] = q
    return mults


def _height_key(kv):
    return (sum(kv[1]), kv[0])


def orbit_expand(cols, dom):
    out = {}
    for w, m in dom.items():
        for x in weyl_orbit(cols, w):
            out[x] = m
    return out


def convolve(f, g):
    cdef Py_ssize_t n
    if len(f) > len(g):
        f, g = g, f
    out = {}
    for w1, a in f.items():
        n = len(w1)
        for w2, b in g.items():
            key = tuple([w1[j] + w2[j] for j in range(n)])
            c = out.get(key, 0) + a * b
            if c:
                out[key] = c
            elif key in out:
                del out[key]
    return out


def klimyk(cols, xi, nu):
    cdef Py_ssize_t n = len(cols)
    cdef long mat[MAXRANK * MAXRANK]
    cdef long x[MAXRANK]
    cdef long nu_c[MAXRANK]
    cdef Py_ssize_t i, j
    cdef long c, steps
    cdef bint singular
    if n > MAXRANK or not _fits(nu, COORD_BOUND):
        return _pure.klimyk(cols, xi, nu)
    _load_cols(cols, mat)
    for j in range(n):
        nu_c[j] = nu[j]
    out = {}
    for w, a in xi.items():
        if not _fits(w, COORD_BOUND):
            return _pure.klimyk(cols, xi, nu)
        for j in range(n):
            x[j] = w[j] + nu_c[j] + 1
        steps = 0
        singular = False
        i = 0
        while i < n:
            c = x[i]
            if c == 0:
                singular = True
                break
            if c < 0:
                for j in range(n):
                    x[j] -= c * mat[i * n + j]
                steps += 1
                i = 0
            else:
                i += 1
        if singular:
            continue
        for j in range(n):
            x[j] -= 1
        key = _tup(x, n)
        v = out.get(key, 0) + (a if steps % 2 == 0 else -a)
        if v:
            out[key] = v
        elif key in out:
            del out[key]
    return out


def sub_scaled(f, g, c):
    if c == 0:
        return
    for k, v in g.items():
        r = f.get(k, 0) - c * v
        if r:
            f[k] = r
        elif k in f:
            del f[k]
