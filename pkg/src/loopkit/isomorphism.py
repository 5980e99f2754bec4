"""Loop isomorphism by invariant-filtered backtracking.

The same engine enumerates identity-fixing bijections subject to either the
homomorphism law f(xy) = f(x)f(y) or the semiautomorphism law
f(x(yx)) = f(x)(f(y)f(x)); the morphisms module reuses it for Aut and Semi
enumeration with both loops equal.
"""

from __future__ import annotations

from collections import Counter

import numpy as np

from .perms import Perm


def _cycle_type(img):
    """Sorted (descending) cycle lengths of a padded image tuple."""
    seen = [False] * len(img)
    seen[0] = True
    lengths = []
    for start in range(1, len(img)):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            length += 1
            x = img[x]
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def _profiles(loop, law):
    """Per-element invariants a structure map must preserve.

    hom: cycle types of L_x and R_x plus whether x*x = 1 (conjugating by an
    isomorphism carries L_x to L_{f(x)}).  semi: cycle type of the map
    y -> x(yx), which a semiautomorphism conjugates likewise.
    """
    T = loop._rows
    n = loop.n
    out = [None] * (n + 1)
    for x in range(1, n + 1):
        sq1 = T[x][x] == 1
        if law == "hom":
            col = tuple(T[y][x] for y in range(n + 1))
            out[x] = (_cycle_type(T[x]), _cycle_type(col), sq1)
        else:
            mid = tuple(T[x][T[y][x]] if y else 0 for y in range(n + 1))
            out[x] = (_cycle_type(mid), sq1)
    return out


def search_morphisms(a, b, law="hom", limit=None):
    """All identity-fixing bijections from a to b obeying the given law,
    found by backtracking with forced-image propagation.

    Candidate images are restricted to matching local-profile classes, rarest
    class assigned first; each new assignment forces the images of products
    (hom) or of x(yx) values (semi) over all assigned pairs.  Results are
    sorted by image tuple unless limit cuts the search short.
    """
    n = a.n
    if b.n != n:
        return []
    TA, TB = a._rows, b._rows
    pa, pb = _profiles(a, law), _profiles(b, law)
    if pa[1] != pb[1] or Counter(pa[1:]) != Counter(pb[1:]):
        return []
    by_profile = {}
    for x in range(2, n + 1):
        by_profile.setdefault(pb[x], []).append(x)
    cand = [None, None] + [by_profile[pa[x]] for x in range(2, n + 1)]
    order = sorted(range(2, n + 1), key=lambda x: (len(cand[x]), x))

    img = [0] * (n + 1)
    pre = [0] * (n + 1)
    img[1] = pre[1] = 1
    trail = [1]
    queue = []
    out = []
    hom = law == "hom"

    def assign(p, q):
        ip = img[p]
        if ip:
            return ip == q
        if pre[q] or pa[p] != pb[q]:
            return False
        img[p] = q
        pre[q] = p
        trail.append(p)
        queue.append(p)
        return True

    def propagate():
        while queue:
            x = queue.pop()
            w = img[x]
            tax, tbw = TA[x], TB[w]
            for i in range(len(trail)):
                y = trail[i]
                v = img[y]
                if hom:
                    if not assign(tax[y], tbw[v]):
                        return False
                    if not assign(TA[y][x], TB[v][w]):
                        return False
                else:
                    if not assign(tax[TA[y][x]], tbw[TB[v][w]]):
                        return False
                    if not assign(TA[y][tax[y]], TB[v][tbw[v]]):
                        return False
        return True

    stopped = False

    def dfs(pos):
        nonlocal stopped
        while pos < len(order) and img[order[pos]]:
            pos += 1
        if pos == len(order):
            out.append(Perm._raw(tuple(img)))
            if limit is not None and len(out) >= limit:
                stopped = True
            return
        x = order[pos]
        for w in cand[x]:
            if pre[w]:
                continue
            mark = len(trail)
            queue.clear()
            if assign(x, w) and propagate():
                dfs(pos + 1)
            while len(trail) > mark:
                p = trail.pop()
                q = img[p]
                img[p] = 0
                pre[q] = 0
            if stopped:
                return

    dfs(0)
    if limit is None:
        out.sort()
    return out


def fingerprint(loop):
    """Isomorphism-invariant summary: order, translation cycle-type multisets,
    sorted per-element local profiles, and the idempotent count."""
    T = loop._rows
    n = loop.n
    left, right, prof = [], [], []
    idem = 0
    for x in range(1, n + 1):
        lt = _cycle_type(T[x])
        rt = _cycle_type(tuple(T[y][x] for y in range(n + 1)))
        left.append(lt)
        right.append(rt)
        prof.append((lt, rt, T[x][x] == 1))
        if T[x][x] == x:
            idem += 1
    return (n, tuple(sorted(left)), tuple(sorted(right)), tuple(sorted(prof)), idem)


def _is_isomorphism(a, b, p):
    F = np.asarray(p.img)
    return bool((F[a._t[1:, 1:]] == b._t[np.ix_(F[1:], F[1:])]).all())


def are_isomorphic(a, b):
    """An identity-fixing isomorphism a -> b as a Perm, or None.

    Fingerprint inequality short-circuits; any map found by the backtracking
    search is re-verified on all pairs before being returned.
    """
    if a.n != b.n or fingerprint(a) != fingerprint(b):
        return None
    found = search_morphisms(a, b, "hom", limit=1)
    if not found:
        return None
    sigma = found[0]
    if not _is_isomorphism(a, b, sigma):
        raise AssertionError("search returned a non-isomorphism")  # engine bug
    return sigma
