"""Definition-level reference implementations used only by the tests.

These work from plain arc sets and Python sets, sharing no code with the
bitset implementations they check.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations


def arc_set(g) -> set[tuple[int, int]]:
    return set(g.arcs())


def sigma_oracle(n: int, arcs: set) -> float:
    outd = {v: sum(1 for a, _ in arcs if a == v) for v in range(n)}
    ind = {v: sum(1 for _, b in arcs if b == v) for v in range(n)}
    vals = [outd[x] + ind[y] for x in range(n) for y in range(n) if x != y and (x, y) not in arcs]
    return min(vals) if vals else float("inf")


def expander_oracle(n: int, arcs: set, nu: Fraction, tau: Fraction):
    """First S (by size, then lexicographic) with tau n < |S| < (1-tau) n and
    |RN_nu(S)| < |S| + nu n, or None when the graph is a robust outexpander."""
    ins = {v: {a for a, b in arcs if b == v} for v in range(n)}
    for k in range(n + 1):
        if not (tau * n < k < (1 - tau) * n):
            continue
        for s in combinations(range(n), k):
            ss = set(s)
            rn = [v for v in range(n) if len(ins[v] & ss) >= nu * n]
            if len(rn) < k + nu * n:
                return ss
    return None


def is_violation(n: int, arcs: set, s: set, nu: Fraction, tau: Fraction) -> bool:
    ins = {v: {a for a, b in arcs if b == v} for v in range(n)}
    rn = [v for v in range(n) if len(ins[v] & s) >= nu * n]
    return tau * n < len(s) < (1 - tau) * n and len(rn) < len(s) + nu * n


def has_adhc_by_edges(n: int, arcs: set) -> bool:
    """Try every cyclic order; a cycle is antidirected iff its arc orientations
    alternate, i.e. every vertex is a pure sink or pure source on it."""
    if n < 4 or n % 2:
        return False
    for rest in permutations(range(1, n)):
        cyc = (0,) + rest
        ok = True
        for i in range(n):
            prev, cur, nxt = cyc[i - 1], cyc[i], cyc[(i + 1) % n]
            out_both = (cur, prev) in arcs and (cur, nxt) in arcs
            in_both = (prev, cur) in arcs and (nxt, cur) in arcs
            if not (out_both or in_both):
                ok = False
                break
        if ok:
            return True
    return False
