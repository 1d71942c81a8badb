# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled kernels.  Mirrors ``_pykernels`` function by function; the two
must return identical results.  Limits: 64 vertices, 63 edges per solve."""

from libc.stdint cimport uint64_t, int64_t
from posix.time cimport clock_gettime, timespec, CLOCK_MONOTONIC

cdef extern from *:
    int ctz64 "__builtin_ctzll"(unsigned long long) nogil
    int pop64 "__builtin_popcountll"(unsigned long long) nogil
    int clz64 "__builtin_clzll"(unsigned long long) nogil

MODE_ALL = 0
MODE_ISETS = 1
MODE_EXISTS = 2
KIND_ODD = 0
KIND_ISOLATED = 1
STATUS_OK = 0
STATUS_TIMEOUT = 1

cdef enum:
    MAXV = 64
    MAXE = 63
    C_MODE_ALL = 0
    C_MODE_ISETS = 1
    C_MODE_EXISTS = 2


cdef struct BB:
    int order
    int m
    int mode
    int lb
    int best
    int done
    int timeout
    int eu[MAXE]
    int ev[MAXE]
    int deg[MAXV]
    int rem[MAXV]
    int cur[MAXV]
    int gdeg[MAXV]
    int dev[MAXV][MAXV]
    uint64_t chosen
    uint64_t witness
    uint64_t count
    uint64_t isets[MAXV]
    int64_t nodes
    double deadline


cdef inline double now_s() noexcept nogil:
    cdef timespec ts
    clock_gettime(CLOCK_MONOTONIC, &ts)
    return ts.tv_sec + ts.tv_nsec * 1e-9


cdef inline int imin(BB* s, int v, int lo, int hi) noexcept nogil:
    cdef int b = s.dev[v][lo]
    cdef int d
    for d in range(lo + 1, hi + 1):
        if s.dev[v][d] < b:
            b = s.dev[v][d]
    return b


cdef inline void upd(BB* s, int v) noexcept nogil:
    cdef int nv = imin(s, v, s.deg[v], s.deg[v] + s.rem[v])
    s.lb += nv - s.cur[v]
    s.cur[v] = nv


cdef inline bint covered(BB* s) noexcept nogil:
    cdef int v
    cdef uint64_t span
    for v in range(s.order):
        if s.rem[v] >= 63:
            span = <uint64_t>0xFFFFFFFFFFFFFFFF
        else:
            span = ((<uint64_t>1 << (s.rem[v] + 1)) - 1)
        span = span << s.deg[v]
        if span & ~s.isets[v]:
            return False
    return True


cdef void dfs(BB* s, int i) noexcept nogil:
    cdef int u, w, v
    s.nodes += 1
    if s.deadline > 0 and (s.nodes & 1023) == 0 and now_s() > s.deadline:
        s.timeout = 1
    if s.timeout or s.done:
        return
    if s.mode == C_MODE_EXISTS:
        if s.lb > 0:
            return
    elif s.best >= 0:
        if s.lb > s.best:
            return
        if s.mode == C_MODE_ISETS and s.lb == s.best and covered(s):
            return
    if i == s.m:
        if s.best < 0 or s.lb < s.best:
            s.best = s.lb
            s.witness = s.chosen
            s.count = 1
            for v in range(s.order):
                s.isets[v] = <uint64_t>1 << s.deg[v]
            if s.mode == C_MODE_EXISTS:
                s.done = 1
        else:
            s.count += 1
            for v in range(s.order):
                s.isets[v] |= <uint64_t>1 << s.deg[v]
        return
    u = s.eu[i]
    w = s.ev[i]
    s.rem[u] -= 1
    s.rem[w] -= 1
    upd(s, u)
    upd(s, w)
    dfs(s, i + 1)
    s.deg[u] += 1
    s.deg[w] += 1
    upd(s, u)
    upd(s, w)
    s.chosen |= <uint64_t>1 << i
    dfs(s, i + 1)
    s.chosen &= ~(<uint64_t>1 << i)
    s.deg[u] -= 1
    s.deg[w] -= 1
    s.rem[u] += 1
    s.rem[w] += 1
    upd(s, u)
    upd(s, w)


cdef void bb_start(BB* s) noexcept nogil:
    cdef int v
    s.lb = 0
    for v in range(s.order):
        s.deg[v] = 0
        s.rem[v] = s.gdeg[v]
        s.cur[v] = imin(s, v, 0, s.rem[v])
        s.lb += s.cur[v]
        s.isets[v] = 0
    s.best = -1
    s.done = 0
    s.timeout = 0
    s.chosen = 0
    s.witness = 0
    s.count = 0
    s.nodes = 0


def solve(int order, eu, ev, devtab, int mode, max_millis):
    """See ``_pykernels.solve``."""
    cdef BB s
    cdef int i, v, d, m = len(eu)
    cdef int root_lb
    if order > MAXV or m > MAXE:
        raise ValueError("instance exceeds compiled kernel limits")
    s.order = order
    s.m = m
    s.mode = mode
    for v in range(order):
        s.gdeg[v] = 0
    for i in range(m):
        s.eu[i] = eu[i]
        s.ev[i] = ev[i]
        s.gdeg[s.eu[i]] += 1
        s.gdeg[s.ev[i]] += 1
    for v in range(order):
        row = devtab[v]
        for d in range(s.gdeg[v] + 1):
            s.dev[v][d] = row[d]
    bb_start(&s)
    root_lb = s.lb
    s.deadline = now_s() + max_millis / 1000.0 if max_millis else 0.0
    with nogil:
        dfs(&s, 0)
    isets = [s.isets[v] for v in range(order)]
    status = STATUS_TIMEOUT if s.timeout else STATUS_OK
    return (status, s.best, s.witness, isets, s.count, s.nodes, root_lb)


# --------------------------------------------------------------------------
# components and subset sweeps
# --------------------------------------------------------------------------

cdef inline uint64_t comp_of(const uint64_t* adj, uint64_t rest) noexcept nogil:
    cdef uint64_t comp = rest & (~rest + 1)
    cdef uint64_t frontier = comp
    cdef uint64_t new
    cdef int v
    while frontier:
        v = ctz64(frontier)
        frontier &= frontier - 1
        new = adj[v] & rest & ~comp
        comp |= new
        frontier |= new
    return comp


cdef int comps_c(const uint64_t* adj, uint64_t keep, uint64_t* out) noexcept nogil:
    cdef int k = 0
    cdef uint64_t c
    while keep:
        c = comp_of(adj, keep)
        keep &= ~c
        out[k] = c
        k += 1
    return k


cdef int count_odd(const uint64_t* adj, uint64_t keep) noexcept nogil:
    cdef int k = 0
    cdef uint64_t c
    while keep:
        c = comp_of(adj, keep)
        keep &= ~c
        k += pop64(c) & 1
    return k


cdef bint any_odd(const uint64_t* adj, uint64_t keep) noexcept nogil:
    cdef uint64_t c
    while keep:
        c = comp_of(adj, keep)
        keep &= ~c
        if pop64(c) & 1:
            return True
    return False


cdef int count_isolated(int order, const uint64_t* adj, uint64_t keep) noexcept nogil:
    cdef int k = 0
    cdef int v
    for v in range(order):
        if (keep >> v) & 1 and not (adj[v] & keep):
            k += 1
    return k


cdef int64_t violator_c(int order, const uint64_t* adj, int kind, int coef,
                        bint include_empty, int* lhs_out) noexcept nogil:
    cdef int idx[MAXV]
    cdef int size, j, t, lhs
    cdef uint64_t full = (<uint64_t>1 << order) - 1 if order < 64 else <uint64_t>0xFFFFFFFFFFFFFFFF
    cdef uint64_t S
    for size in range(0 if include_empty else 1, order + 1):
        for j in range(size):
            idx[j] = j
        while True:
            S = 0
            for j in range(size):
                S |= <uint64_t>1 << idx[j]
            if kind == 0:
                lhs = count_odd(adj, full & ~S)
            else:
                lhs = count_isolated(order, adj, full & ~S)
            if lhs > coef * size:
                lhs_out[0] = lhs
                return <int64_t>S
            j = size - 1
            while j >= 0 and idx[j] == order - size + j:
                j -= 1
            if j < 0:
                break
            idx[j] += 1
            for t in range(j + 1, size):
                idx[t] = idx[t - 1] + 1
    lhs_out[0] = 0
    return -1


cdef void load_adj(adj_py, uint64_t* adj, int order) except *:
    cdef int v
    for v in range(order):
        adj[v] = adj_py[v]


def components(int order, adj_py, keep):
    cdef uint64_t adj[MAXV]
    cdef uint64_t out[MAXV]
    cdef int k, i
    if order > MAXV:
        raise ValueError("order exceeds compiled kernel limits")
    load_adj(adj_py, adj, order)
    k = comps_c(adj, <uint64_t>keep, out)
    return [out[i] for i in range(k)]


def first_violator(int order, adj_py, int kind, int coef, bint include_empty):
    cdef uint64_t adj[MAXV]
    cdef int lhs = 0
    cdef int64_t S
    if order > 63:
        raise ValueError("order exceeds compiled kernel limits")
    load_adj(adj_py, adj, order)
    with nogil:
        S = violator_c(order, adj, kind, coef, include_empty, &lhs)
    return (S, lhs)


cdef bint p23_c(const uint64_t* adj, uint64_t uncovered) noexcept nogil:
    cdef int v, u, w
    cdef uint64_t U, U2, nb, x, y
    if not uncovered:
        return True
    v = ctz64(uncovered)
    U = uncovered & ~(<uint64_t>1 << v)
    nb = adj[v] & U
    x = nb
    while x:
        u = ctz64(x)
        x &= x - 1
        U2 = U & ~(<uint64_t>1 << u)
        if p23_c(adj, U2):
            return True
        y = adj[u] & U2
        while y:
            w = ctz64(y)
            y &= y - 1
            if p23_c(adj, U2 & ~(<uint64_t>1 << w)):
                return True
    x = nb
    while x:
        u = ctz64(x)
        x &= x - 1
        y = x
        while y:
            w = ctz64(y)
            y &= y - 1
            if p23_c(adj, U & ~(<uint64_t>1 << u) & ~(<uint64_t>1 << w)):
                return True
    return False


def p23(adj_py, uncovered):
    cdef uint64_t adj[MAXV]
    cdef int order = len(adj_py)
    if order > MAXV:
        raise ValueError("order exceeds compiled kernel limits")
    load_adj(adj_py, adj, order)
    return p23_c(adj, <uint64_t>uncovered)


# --------------------------------------------------------------------------
# helpers shared by the sweeps
# --------------------------------------------------------------------------

cdef void bb_uniform(BB* s, int order, const uint64_t* adj, uint64_t keep,
                     const int* vals, int nvals, int mode) nogil:
    cdef int u, w, v, d, j, best, dd
    cdef uint64_t x
    s.order = order
    s.mode = mode
    s.m = 0
    for u in range(order):
        s.gdeg[u] = 0
    for u in range(order):
        if (keep >> u) & 1:
            x = adj[u] & keep & ~((<uint64_t>2 << u) - 1)
            while x:
                w = ctz64(x)
                x &= x - 1
                s.eu[s.m] = u
                s.ev[s.m] = w
                s.m += 1
                s.gdeg[u] += 1
                s.gdeg[w] += 1
    for v in range(order):
        if (keep >> v) & 1:
            for d in range(s.gdeg[v] + 1):
                best = 1 << 30
                for j in range(nvals):
                    dd = d - vals[j] if d >= vals[j] else vals[j] - d
                    if dd < best:
                        best = dd
                s.dev[v][d] = best
        else:
            s.dev[v][0] = 0
    s.deadline = 0.0
    bb_start(s)


cdef int hn_vals(int n, int star, int* vals) noexcept nogil:
    cdef int k = 0
    cdef int h
    if star:
        vals[k] = -1
        k += 1
    h = 1
    while h < 2 * n:
        vals[k] = h
        k += 1
        h += 2
    vals[k] = 2 * n
    return k + 1


cdef bint bnb_factor_c(int order, const uint64_t* adj, uint64_t keep, int n) noexcept nogil:
    cdef BB s
    cdef int vals[MAXV]
    cdef int nv = hn_vals(n, 0, vals)
    bb_uniform(&s, order, adj, keep, vals, nv, C_MODE_EXISTS)
    dfs(&s, 0)
    return s.best == 0


cdef int hn_factor_c(int order, const uint64_t* adj, uint64_t keep, int n) noexcept nogil:
    """1 = factor, 0 = none, -1 = the two routes disagree."""
    if n == 1:
        if p23_c(adj, keep):
            return 1
        return -1 if bnb_factor_c(order, adj, keep, n) else 0
    return 1 if bnb_factor_c(order, adj, keep, n) else 0


cdef inline int classify_c(uint64_t iset, uint64_t hmask, int hmin, int hmax) noexcept nogil:
    cdef int lo, hi
    if not (iset & ~hmask):
        return 2
    lo = ctz64(iset)
    hi = 63 - clz64(iset)
    if lo >= hmax:
        return 0
    if hi <= hmin:
        return 1
    return 3


cdef void star_classes_c(int order, const uint64_t* adj, int n, uint64_t* masks) noexcept nogil:
    cdef BB s
    cdef int vals[MAXV]
    cdef int nv = hn_vals(n, 1, vals)
    cdef uint64_t full = (<uint64_t>1 << order) - 1
    cdef uint64_t hmask = 0
    cdef int j, v
    for j in range(1, nv):
        hmask |= <uint64_t>1 << vals[j]
    bb_uniform(&s, order, adj, full, vals, nv, C_MODE_ISETS)
    dfs(&s, 0)
    masks[0] = masks[1] = masks[2] = masks[3] = 0
    for v in range(order):
        masks[classify_c(s.isets[v], hmask, -1, 2 * n)] |= <uint64_t>1 << v


def hn_factor(int order, adj_py, keep, int n):
    cdef uint64_t adj[MAXV]
    cdef int r
    load_adj(adj_py, adj, order)
    r = hn_factor_c(order, adj, <uint64_t>keep, n)
    return (r == 1, r >= 0)


def star_isets(int order, adj_py, int n):
    cdef uint64_t adj[MAXV]
    cdef BB s
    cdef int vals[MAXV]
    cdef int nv = hn_vals(n, 1, vals)
    cdef int v
    load_adj(adj_py, adj, order)
    bb_uniform(&s, order, adj, (<uint64_t>1 << order) - 1, vals, nv, C_MODE_ISETS)
    dfs(&s, 0)
    return [s.isets[v] for v in range(order)]


cdef struct Pairs:
    int n
    int pu[32]
    int pv[32]


cdef void make_pairs(Pairs* p, int order) noexcept nogil:
    cdef int u, w
    p.n = 0
    for u in range(order):
        for w in range(u + 1, order):
            p.pu[p.n] = u
            p.pv[p.n] = w
            p.n += 1


cdef inline void graph_adj(const Pairs* p, int order, uint64_t gmask, uint64_t* adj) noexcept nogil:
    cdef int v, b
    for v in range(order):
        adj[v] = 0
    while gmask:
        b = ctz64(gmask)
        gmask &= gmask - 1
        adj[p.pu[b]] |= <uint64_t>1 << p.pv[b]
        adj[p.pv[b]] |= <uint64_t>1 << p.pu[b]


cdef void _check_sweep_order(int order) except *:
    if order < 0 or order > 8:
        raise ValueError("exhaustive sweeps support orders 0..8")


# --------------------------------------------------------------------------
# exhaustive sweeps over labelled graphs of one order
# --------------------------------------------------------------------------

cdef enum:
    F_ROUTES = 1
    F_CK_HOLDS = 2
    F_B_NONEMPTY = 3
    F_EMPTY_CERT = 4
    F_D_NOT_COMP = 5
    F_EVEN_D = 6
    F_D_FACTOR = 7
    F_TOO_FEW = 8
    F_NEITHER = 9
    F_NO_FACTOR = 10

_CODES = {
    F_ROUTES: "factor-routes-disagree",
    F_CK_HOLDS: "cui-kano-holds-without-factor",
    F_B_NONEMPTY: "b-nonempty",
    F_EMPTY_CERT: "empty-certificate",
    F_D_NOT_COMP: "d-component-not-a-component",
    F_EVEN_D: "even-d-component",
    F_D_FACTOR: "d-component-has-factor",
    F_TOO_FEW: "too-few-odd-components",
    F_NEITHER: "neither-factor-nor-critical",
    F_NO_FACTOR: "no-factor",
}


cdef int certificate_failure_c(int order, const uint64_t* adj, int n) noexcept nogil:
    cdef uint64_t masks[4]
    cdef uint64_t cs[MAXV]
    cdef uint64_t full = (<uint64_t>1 << order) - 1
    cdef uint64_t a, d, comp
    cdef int k, i, listed = 0, r
    star_classes_c(order, adj, n, masks)
    a = masks[0]
    d = masks[3]
    if masks[1]:
        return F_B_NONEMPTY
    if not a:
        return F_EMPTY_CERT
    k = comps_c(adj, full & ~a, cs)
    for i in range(k):
        comp = cs[i]
        if comp & d:
            if comp & ~d:
                return F_D_NOT_COMP
            if not (pop64(comp) & 1):
                return F_EVEN_D
            r = hn_factor_c(order, adj, comp, n)
            if r < 0:
                return F_ROUTES
            if r == 1:
                return F_D_FACTOR
            listed += 1
    if listed < 2 * n * pop64(a) + 1:
        return F_TOO_FEW
    return 0


def sweep_certificates(int order, int n):
    """See ``_pykernels.sweep_certificates``."""
    cdef Pairs p
    cdef uint64_t adj[MAXV]
    cdef uint64_t gmask, total
    cdef uint64_t full = (<uint64_t>1 << order) - 1
    cdef int64_t S
    cdef int lhs, r, code
    cdef bint eligible
    cdef int64_t graphs = 0, factorless = 0, ck = 0, elig = 0, elig_fl = 0, cert = 0
    _check_sweep_order(order)
    make_pairs(&p, order)
    total = <uint64_t>1 << p.n
    failures = []
    gmask = 0
    while gmask < total:
        with nogil:
            while gmask < total:
                graph_adj(&p, order, gmask, adj)
                graphs += 1
                eligible = not any_odd(adj, full)
                if eligible:
                    elig += 1
                r = hn_factor_c(order, adj, full, n)
                code = 0
                if r < 0:
                    code = F_ROUTES
                elif r == 0:
                    factorless += 1
                    S = violator_c(order, adj, 0, 2 * n, True, &lhs)
                    if S < 0:
                        code = F_CK_HOLDS
                    else:
                        ck += 1
                        if eligible:
                            elig_fl += 1
                            code = certificate_failure_c(order, adj, n)
                            if code == 0:
                                cert += 1
                gmask += 1
                if code:
                    break
        if code:
            failures.append((gmask - 1, _CODES[code]))
    stats = {"graphs": graphs, "factorless": factorless, "ck_violated": ck,
             "eligible": elig, "eligible_factorless": elig_fl, "certified": cert}
    return stats, failures


def sweep_odd_order(int order, int n):
    """See ``_pykernels.sweep_odd_order``."""
    cdef Pairs p
    cdef uint64_t adj[MAXV]
    cdef uint64_t masks[4]
    cdef uint64_t gmask, total
    cdef uint64_t full = (<uint64_t>1 << order) - 1
    cdef int lhs, r, code
    cdef int64_t graphs = 0, conn = 0, hyp = 0, fac = 0, crit = 0
    _check_sweep_order(order)
    make_pairs(&p, order)
    total = <uint64_t>1 << p.n
    failures = []
    if not order & 1:
        return ({"graphs": <int64_t>total, "connected": 0, "hypothesis": 0,
                 "factor": 0, "critical": 0}, failures)
    gmask = 0
    while gmask < total:
        with nogil:
            while gmask < total:
                graph_adj(&p, order, gmask, adj)
                graphs += 1
                gmask += 1
                code = 0
                if comp_of(adj, full) != full:
                    continue
                conn += 1
                if violator_c(order, adj, 0, 2 * n, False, &lhs) >= 0:
                    continue
                hyp += 1
                r = hn_factor_c(order, adj, full, n)
                if r < 0:
                    code = F_ROUTES
                elif r == 1:
                    fac += 1
                else:
                    star_classes_c(order, adj, n, masks)
                    if masks[3] == full:
                        crit += 1
                    else:
                        code = F_NEITHER
                if code:
                    break
        if code:
            failures.append((gmask - 1, _CODES[code]))
    stats = {"graphs": graphs, "connected": conn, "hypothesis": hyp,
             "factor": fac, "critical": crit}
    return stats, failures


cdef bint neighborhood_holds_c(int order, const uint64_t* adj, int64_t num, int64_t den) noexcept nogil:
    cdef int u, v
    for u in range(order):
        for v in range(u + 1, order):
            if not ((adj[u] >> v) & 1) and pop64(adj[u] | adj[v]) * den <= num:
                return False
    return True


def neighborhood_holds(int order, adj_py, int64_t num, int64_t den):
    cdef uint64_t adj[MAXV]
    load_adj(adj_py, adj, order)
    return neighborhood_holds_c(order, adj, num, den)


def sweep_neighborhood(int order, int n, int64_t num, int64_t den):
    """See ``_pykernels.sweep_neighborhood``."""
    cdef Pairs p
    cdef uint64_t adj[MAXV]
    cdef uint64_t gmask, total
    cdef uint64_t full = (<uint64_t>1 << order) - 1
    cdef int r, code
    cdef int64_t graphs = 0, no_odd = 0, hyp = 0
    _check_sweep_order(order)
    make_pairs(&p, order)
    total = <uint64_t>1 << p.n
    failures = []
    if order & 1:
        return {"graphs": <int64_t>total, "no_odd": 0, "hypothesis": 0}, failures
    gmask = 0
    while gmask < total:
        with nogil:
            while gmask < total:
                graph_adj(&p, order, gmask, adj)
                graphs += 1
                gmask += 1
                code = 0
                if any_odd(adj, full):
                    continue
                no_odd += 1
                if not neighborhood_holds_c(order, adj, num, den):
                    continue
                hyp += 1
                r = hn_factor_c(order, adj, full, n)
                if r < 0:
                    code = F_ROUTES
                elif r == 0:
                    code = F_NO_FACTOR
                if code:
                    break
        if code:
            failures.append((gmask - 1, _CODES[code]))
    return {"graphs": graphs, "no_odd": no_odd, "hypothesis": hyp}, failures


def sweep_g_minus_v(int order, int n):
    """See ``_pykernels.sweep_g_minus_v``."""
    cdef Pairs p
    cdef uint64_t adj[MAXV]
    cdef uint64_t gmask, total
    cdef uint64_t full = (<uint64_t>1 << order) - 1
    cdef int r, code, v
    cdef bint ok
    cdef int64_t graphs = 0, no_odd = 0, hyp = 0
    _check_sweep_order(order)
    make_pairs(&p, order)
    total = <uint64_t>1 << p.n
    failures = []
    if order & 1:
        return {"graphs": <int64_t>total, "no_odd": 0, "hypothesis": 0}, failures
    gmask = 0
    while gmask < total:
        with nogil:
            while gmask < total:
                graph_adj(&p, order, gmask, adj)
                graphs += 1
                gmask += 1
                code = 0
                if any_odd(adj, full):
                    continue
                no_odd += 1
                ok = True
                for v in range(order):
                    r = hn_factor_c(order, adj, full & ~(<uint64_t>1 << v), n)
                    if r < 0:
                        code = F_ROUTES
                    if r != 1:
                        ok = False
                        break
                if ok:
                    hyp += 1
                    r = hn_factor_c(order, adj, full, n)
                    if r < 0:
                        code = F_ROUTES
                    elif r == 0:
                        code = F_NO_FACTOR
                if code:
                    break
        if code:
            failures.append((gmask - 1, _CODES[code]))
    return {"graphs": graphs, "no_odd": no_odd, "hypothesis": hyp}, failures


def uniform_factor(int order, adj_py, keep, values):
    """See ``_pykernels.uniform_factor``."""
    cdef uint64_t adj[MAXV]
    cdef int vals[MAXV]
    cdef int nv = len(values), j
    cdef uint64_t kp = keep
    cdef BB s
    if order > MAXV or nv > MAXV:
        raise ValueError("order exceeds compiled kernel limits")
    load_adj(adj_py, adj, order)
    for j in range(nv):
        vals[j] = values[j]
    with nogil:
        bb_uniform(&s, order, adj, kp, vals, nv, C_MODE_EXISTS)
        dfs(&s, 0)
    return s.best == 0


def sweep_equivalence(int order, int kind, int coef, values):
    """See ``_pykernels.sweep_equivalence``."""
    cdef Pairs p
    cdef BB s
    cdef uint64_t adj[MAXV]
    cdef int vals[MAXV]
    cdef int nv = len(values), j, lhs, code = 0
    cdef uint64_t gmask, total
    cdef uint64_t full = (<uint64_t>1 << order) - 1
    cdef bint holds, has
    cdef int64_t graphs = 0, n_cond = 0, n_fac = 0
    _check_sweep_order(order)
    if nv > MAXV:
        raise ValueError("degree set too large")
    for j in range(nv):
        vals[j] = values[j]
    make_pairs(&p, order)
    total = <uint64_t>1 << p.n
    failures = []
    gmask = 0
    while gmask < total:
        code = 0
        with nogil:
            while gmask < total:
                graph_adj(&p, order, gmask, adj)
                graphs += 1
                gmask += 1
                holds = violator_c(order, adj, kind, coef, True, &lhs) < 0
                bb_uniform(&s, order, adj, full, vals, nv, C_MODE_EXISTS)
                dfs(&s, 0)
                has = s.best == 0
                n_cond += holds
                n_fac += has
                if holds != has:
                    code = 1 if holds else 2
                    break
        if code:
            failures.append((gmask - 1, "condition-holds-without-factor" if code == 1
                             else "factor-without-condition"))
    return {"graphs": graphs, "condition": n_cond, "factor": n_fac}, failures
