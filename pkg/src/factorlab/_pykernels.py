"""Pure-Python kernels.  ``_ckernels.pyx`` implements the same functions with
the same traversal order; results must be identical.

Graphs are passed as ``(order, adj)`` with ``adj[v]`` a neighbour bitset, or
as edge arrays ``eu``/``ev`` in sorted pair order.
"""

import time
from itertools import combinations

MODE_ALL = 0      # every optimum: delta, witness, degree sets, optimum count
MODE_ISETS = 1    # delta, witness, degree sets; ties that add nothing are pruned
MODE_EXISTS = 2   # stop at the first zero-deviation subgraph

KIND_ODD = 0
KIND_ISOLATED = 1

STATUS_OK = 0
STATUS_TIMEOUT = 1


def _popcount(x):
    return bin(x).count("1")


def _lowbit(x):
    return (x & -x).bit_length() - 1


def components(order, adj, keep):
    out = []
    rest = keep
    while rest:
        comp = rest & -rest
        frontier = comp
        while frontier:
            v = _lowbit(frontier)
            frontier &= frontier - 1
            new = adj[v] & rest & ~comp
            comp |= new
            frontier |= new
        rest &= ~comp
        out.append(comp)
    return out


def solve(order, eu, ev, devtab, mode, max_millis):
    """Depth-first branch and bound over the edge index.

    Edge ``i`` is decided at depth ``i``, exclusion before inclusion, so
    leaves are met in lexicographic order of the chosen-bit vector and the
    first optimum met is the lexicographically smallest one.

    Returns ``(status, best, witness, isets, count, nodes, root_lb)``.
    ``best`` is -1 when no leaf was reached (or, in MODE_EXISTS, when no
    factor exists).
    """
    m = len(eu)
    deg = [0] * order
    rem = [0] * order
    for i in range(m):
        rem[eu[i]] += 1
        rem[ev[i]] += 1

    def imin(v, lo, hi):
        row = devtab[v]
        best_v = row[lo]
        for d in range(lo + 1, hi + 1):
            if row[d] < best_v:
                best_v = row[d]
        return best_v

    cur = [imin(v, 0, rem[v]) for v in range(order)]
    st = {
        "lb": sum(cur), "best": -1, "witness": 0, "count": 0, "nodes": 0,
        "chosen": 0, "done": False, "timeout": False,
    }
    root_lb = st["lb"]
    isets = [0] * order
    deadline = time.monotonic() + max_millis / 1000.0 if max_millis else None

    def covered():
        for v in range(order):
            span = ((1 << (rem[v] + 1)) - 1) << deg[v]
            if span & ~isets[v]:
                return False
        return True

    def update(v):
        new = imin(v, deg[v], deg[v] + rem[v])
        st["lb"] += new - cur[v]
        cur[v] = new

    def dfs(i):
        st["nodes"] += 1
        if deadline is not None and not st["nodes"] & 1023 and time.monotonic() > deadline:
            st["timeout"] = True
        if st["timeout"] or st["done"]:
            return
        lb = st["lb"]
        best = st["best"]
        if mode == MODE_EXISTS:
            if lb > 0:
                return
        elif best >= 0:
            if lb > best:
                return
            if mode == MODE_ISETS and lb == best and covered():
                return
        if i == m:
            if best < 0 or lb < best:
                st["best"] = lb
                st["witness"] = st["chosen"]
                st["count"] = 1
                for v in range(order):
                    isets[v] = 1 << deg[v]
                if mode == MODE_EXISTS:
                    st["done"] = True
            else:
                st["count"] += 1
                for v in range(order):
                    isets[v] |= 1 << deg[v]
            return
        u, w = eu[i], ev[i]
        rem[u] -= 1
        rem[w] -= 1
        update(u)
        update(w)
        dfs(i + 1)
        deg[u] += 1
        deg[w] += 1
        update(u)
        update(w)
        st["chosen"] |= 1 << i
        dfs(i + 1)
        st["chosen"] &= ~(1 << i)
        deg[u] -= 1
        deg[w] -= 1
        rem[u] += 1
        rem[w] += 1
        update(u)
        update(w)

    dfs(0)
    status = STATUS_TIMEOUT if st["timeout"] else STATUS_OK
    return (status, st["best"], st["witness"], list(isets), st["count"], st["nodes"], root_lb)


def _combinations_lex(order, size):
    for combo in combinations(range(order), size):
        mask = 0
        for v in combo:
            mask |= 1 << v
        yield mask


def first_violator(order, adj, kind, coef, include_empty):
    """First ``S`` (by size, then lexicographically) with ``lhs(S) > coef*|S|``.

    ``lhs`` counts odd components (KIND_ODD) or isolated vertices
    (KIND_ISOLATED) of ``G - S``.  Returns ``(mask, lhs)`` or ``(-1, 0)``.
    """
    full = (1 << order) - 1
    for size in range(0 if include_empty else 1, order + 1):
        bound = coef * size
        for S in _combinations_lex(order, size):
            keep = full & ~S
            if kind == KIND_ODD:
                lhs = sum(1 for c in components(order, adj, keep) if _popcount(c) & 1)
            else:
                lhs = sum(1 for v in range(order) if keep >> v & 1 and not adj[v] & keep)
            if lhs > bound:
                return S, lhs
    return -1, 0


def p23(adj, uncovered):
    """Can ``uncovered`` be partitioned into paths on 2 or 3 vertices of the
    induced subgraph?  Equivalent to having a ``{1,2}``-factor there."""
    if not uncovered:
        return True
    v = _lowbit(uncovered)
    U = uncovered & ~(1 << v)
    nb = adj[v] & U
    x = nb
    while x:
        u = _lowbit(x)
        x &= x - 1
        U2 = U & ~(1 << u)
        if p23(adj, U2):
            return True
        y = adj[u] & U2
        while y:
            w = _lowbit(y)
            y &= y - 1
            if p23(adj, U2 & ~(1 << w)):
                return True
    x = nb
    while x:
        u = _lowbit(x)
        x &= x - 1
        y = x
        while y:
            w = _lowbit(y)
            y &= y - 1
            if p23(adj, U & ~(1 << u) & ~(1 << w)):
                return True
    return False


# --------------------------------------------------------------------------
# helpers shared by the sweeps
# --------------------------------------------------------------------------

def _hn_values(n):
    return list(range(1, 2 * n, 2)) + [2 * n]


def _dev(d, values):
    return min(abs(d - h) for h in values)


def _edges_within(order, adj, keep):
    eu, ev = [], []
    for u in range(order):
        if keep >> u & 1:
            x = adj[u] & keep & ~((1 << (u + 1)) - 1)
            while x:
                w = _lowbit(x)
                x &= x - 1
                eu.append(u)
                ev.append(w)
    return eu, ev


def _uniform_table(order, adj, keep, values):
    tab = []
    for v in range(order):
        if keep >> v & 1:
            tab.append([_dev(d, values) for d in range(_popcount(adj[v] & keep) + 1)])
        else:
            tab.append([0])
    return tab


def bnb_factor(order, adj, keep, n):
    eu, ev = _edges_within(order, adj, keep)
    res = solve(order, eu, ev, _uniform_table(order, adj, keep, _hn_values(n)), MODE_EXISTS, 0)
    return res[1] == 0


def hn_factor(order, adj, keep, n):
    """H_n-factor of ``G[keep]``: returns ``(exists, routes_agree)``.

    For n == 1 the path-partition search decides; a negative answer is
    re-derived by branch and bound.  Other n use branch and bound only.
    """
    if n == 1:
        if p23(adj, keep):
            return True, True
        return False, not bnb_factor(order, adj, keep, n)
    return bnb_factor(order, adj, keep, n), True


def star_isets(order, adj, n):
    """Optimal-degree bitsets under the uniform h_n_star(n) prescription."""
    full = (1 << order) - 1
    eu, ev = _edges_within(order, adj, full)
    tab = _uniform_table(order, adj, full, [-1] + _hn_values(n))
    return solve(order, eu, ev, tab, MODE_ISETS, 0)[3]


def classify(iset, hmask, hmin, hmax):
    """0=A, 1=B, 2=C, 3=D for one vertex (``hmask`` = nonnegative members)."""
    if not iset & ~hmask:
        return 2
    lo = _lowbit(iset)
    hi = iset.bit_length() - 1
    if lo >= hmax:
        return 0
    if hi <= hmin:
        return 1
    return 3


def _star_classes(order, adj, n):
    isets = star_isets(order, adj, n)
    values = _hn_values(n)
    hmask = 0
    for h in values:
        hmask |= 1 << h
    masks = [0, 0, 0, 0]
    for v in range(order):
        masks[classify(isets[v], hmask, -1, 2 * n)] |= 1 << v
    return masks


def _graph_adj(order, gmask):
    adj = [0] * order
    bit = 0
    for u in range(order):
        for w in range(u + 1, order):
            if gmask >> bit & 1:
                adj[u] |= 1 << w
                adj[w] |= 1 << u
            bit += 1
    return adj


# --------------------------------------------------------------------------
# exhaustive sweeps over labelled graphs of one order
# --------------------------------------------------------------------------

def sweep_certificates(order, n):
    """Factorless graphs without odd components must yield a certificate
    ``S = A`` from the h_n_star decomposition; every factorless graph must
    violate the Cui-Kano condition."""
    stats = {"graphs": 0, "factorless": 0, "ck_violated": 0, "eligible": 0,
             "eligible_factorless": 0, "certified": 0}
    failures = []
    full = (1 << order) - 1
    npairs = order * (order - 1) // 2
    for gmask in range(1 << npairs):
        adj = _graph_adj(order, gmask)
        stats["graphs"] += 1
        comps = components(order, adj, full)
        eligible = all(_popcount(c) % 2 == 0 for c in comps)
        if eligible:
            stats["eligible"] += 1
        has, agree = hn_factor(order, adj, full, n)
        if not agree:
            failures.append((gmask, "factor-routes-disagree"))
            continue
        if has:
            continue
        stats["factorless"] += 1
        S, _ = first_violator(order, adj, KIND_ODD, 2 * n, True)
        if S < 0:
            failures.append((gmask, "cui-kano-holds-without-factor"))
            continue
        stats["ck_violated"] += 1
        if not eligible:
            continue
        stats["eligible_factorless"] += 1
        code = _certificate_failure(order, adj, n)
        if code:
            failures.append((gmask, code))
        else:
            stats["certified"] += 1
    return stats, failures


def _certificate_failure(order, adj, n):
    a, b, c, d = _star_classes(order, adj, n)
    if b:
        return "b-nonempty"
    if not a:
        return "empty-certificate"
    full = (1 << order) - 1
    listed = 0
    for comp in components(order, adj, full & ~a):
        if comp & d:
            if comp & ~d:
                return "d-component-not-a-component"
            if not _popcount(comp) & 1:
                return "even-d-component"
            has, agree = hn_factor(order, adj, comp, n)
            if not agree:
                return "factor-routes-disagree"
            if has:
                return "d-component-has-factor"
            listed += 1
    if listed < 2 * n * _popcount(a) + 1:
        return "too-few-odd-components"
    return ""


def sweep_odd_order(order, n):
    """Connected odd-order graphs meeting o(G-S) <= 2n|S| for nonempty S
    must have an H_n-factor or be h_n_star-critical."""
    stats = {"graphs": 0, "connected": 0, "hypothesis": 0, "factor": 0, "critical": 0}
    failures = []
    full = (1 << order) - 1
    npairs = order * (order - 1) // 2
    for gmask in range(1 << npairs):
        stats["graphs"] += 1
        if not order & 1:
            continue
        adj = _graph_adj(order, gmask)
        if len(components(order, adj, full)) != 1:
            continue
        stats["connected"] += 1
        if first_violator(order, adj, KIND_ODD, 2 * n, False)[0] >= 0:
            continue
        stats["hypothesis"] += 1
        has, agree = hn_factor(order, adj, full, n)
        if not agree:
            failures.append((gmask, "factor-routes-disagree"))
        elif has:
            stats["factor"] += 1
        elif _star_classes(order, adj, n)[3] == full:
            stats["critical"] += 1
        else:
            failures.append((gmask, "neither-factor-nor-critical"))
    return stats, failures


def neighborhood_holds(order, adj, num, den):
    """Every non-adjacent pair has ``|N(u) | N(v)| * den > num``."""
    for u in range(order):
        for v in range(u + 1, order):
            if not adj[u] >> v & 1 and _popcount(adj[u] | adj[v]) * den <= num:
                return False
    return True


def sweep_neighborhood(order, n, num, den):
    """Graphs without odd components whose non-adjacent pairs all beat the
    threshold ``num/den`` must have an H_n-factor."""
    stats = {"graphs": 0, "no_odd": 0, "hypothesis": 0}
    failures = []
    full = (1 << order) - 1
    npairs = order * (order - 1) // 2
    for gmask in range(1 << npairs):
        stats["graphs"] += 1
        if order & 1:
            continue
        adj = _graph_adj(order, gmask)
        if any(_popcount(c) & 1 for c in components(order, adj, full)):
            continue
        stats["no_odd"] += 1
        if not neighborhood_holds(order, adj, num, den):
            continue
        stats["hypothesis"] += 1
        has, agree = hn_factor(order, adj, full, n)
        if not agree:
            failures.append((gmask, "factor-routes-disagree"))
        elif not has:
            failures.append((gmask, "no-factor"))
    return stats, failures


def sweep_g_minus_v(order, n):
    """Graphs without odd components all of whose vertex-deleted subgraphs
    have an H_n-factor must have one themselves."""
    stats = {"graphs": 0, "no_odd": 0, "hypothesis": 0}
    failures = []
    full = (1 << order) - 1
    npairs = order * (order - 1) // 2
    for gmask in range(1 << npairs):
        stats["graphs"] += 1
        if order & 1:
            continue
        adj = _graph_adj(order, gmask)
        if any(_popcount(c) & 1 for c in components(order, adj, full)):
            continue
        stats["no_odd"] += 1
        ok = True
        for v in range(order):
            has, agree = hn_factor(order, adj, full & ~(1 << v), n)
            if not agree:
                failures.append((gmask, "factor-routes-disagree"))
                ok = False
                break
            if not has:
                ok = False
                break
        if not ok:
            continue
        stats["hypothesis"] += 1
        has, agree = hn_factor(order, adj, full, n)
        if not agree:
            failures.append((gmask, "factor-routes-disagree"))
        elif not has:
            failures.append((gmask, "no-factor"))
    return stats, failures


def uniform_factor(order, adj, keep, values):
    """Branch-and-bound factor check of ``G[keep]`` for one degree set."""
    eu, ev = _edges_within(order, adj, keep)
    res = solve(order, eu, ev, _uniform_table(order, adj, keep, values), MODE_EXISTS, 0)
    return res[1] == 0


def sweep_equivalence(order, kind, coef, values):
    """Subset condition (``S`` empty included) against a ``values``-factor.

    The two must agree on every graph; a graph where they differ is
    recorded with the direction that broke.
    """
    stats = {"graphs": 0, "condition": 0, "factor": 0}
    failures = []
    full = (1 << order) - 1
    npairs = order * (order - 1) // 2
    for gmask in range(1 << npairs):
        stats["graphs"] += 1
        adj = _graph_adj(order, gmask)
        holds = first_violator(order, adj, kind, coef, True)[0] < 0
        has = uniform_factor(order, adj, full, values)
        stats["condition"] += holds
        stats["factor"] += has
        if holds and not has:
            failures.append((gmask, "condition-holds-without-factor"))
        elif has and not holds:
            failures.append((gmask, "factor-without-condition"))
    return stats, failures
