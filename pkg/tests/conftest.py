"""Shared test helpers: independent oracles, stub functions, and the
acceptance summary printed at the end of a run."""

import math
from itertools import combinations, permutations

import numpy as np

from hypersens.hypergraphs import rank_subset, subset_table

# --- acceptance reporting -------------------------------------------------

ACCEPTANCE_RESULTS: dict[tuple, tuple[bool, str]] = {}


def record_criterion(order, name, ok, detail=""):
    ACCEPTANCE_RESULTS[(order, name)] = (bool(ok), detail)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for (order, name), (ok, detail) in sorted(ACCEPTANCE_RESULTS.items()):
        line = f"criterion {name}: {'PASS' if ok else 'FAIL'}"
        if detail:
            line += f"  [{detail}]"
        terminalreporter.write_line(line)


# --- stub Boolean functions ------------------------------------------------


class BitsProperty:
    """Arbitrary Boolean function given as a callable on bitmasks."""

    def __init__(self, n, fn, name="stub"):
        self.n = n
        self.fn = fn
        self.name = name

    def value(self, x):
        return int(self.fn(x if isinstance(x, int) else int(x)))


def or_property(n):
    return BitsProperty(n, lambda x: int(x != 0), "or")


def table_property(table, n):
    return BitsProperty(n, lambda x: int(table >> x & 1), "table")


# --- independent oracles ---------------------------------------------------


def naive_isolated_clique_value(v, k, i, h, bits):
    """Unpruned reference evaluator: try every h-subset, check the full
    clique condition and the isolation condition against every edge."""
    subs, ranks = subset_table(v, k)
    edges = [subs[e] for e in range(len(subs)) if bits >> e & 1]
    for S in combinations(range(v), h):
        inside = set(S)
        if not all(bits >> ranks[sub] & 1 for sub in combinations(S, k)):
            continue
        ok = True
        for e in edges:
            c = len(inside.intersection(e))
            if i <= c < k:
                ok = False
                break
        if ok:
            return 1
    return 0


def bs_brute(f, x):
    """Exact bs(f, x) by dynamic programming over all 2^n block subsets.

    best[mask] = best packing using only positions inside mask; transition
    tries every sensitive submask as the next block (3^n total steps)."""
    n = f.n
    fx = f.value(x)
    size = 1 << n
    sens = bytearray(size)
    for b in range(1, size):
        sens[b] = f.value(x ^ b) != fx
    best = [0] * size
    for mask in range(1, size):
        acc = 0
        s = mask
        while s:
            if sens[s]:
                cand = 1 + best[mask ^ s]
                if cand > acc:
                    acc = cand
            s = (s - 1) & mask
        best[mask] = acc
    return best[size - 1]


def milp_pack(blocks, n):
    """Maximum disjoint packing via an integer program (scipy/HiGHS)."""
    if not blocks:
        return 0
    from scipy.optimize import LinearConstraint, milp

    A = np.zeros((n, len(blocks)))
    for j, b in enumerate(blocks):
        for i in range(n):
            if b >> i & 1:
                A[i, j] = 1
    res = milp(
        c=-np.ones(len(blocks)),
        constraints=LinearConstraint(A, ub=np.ones(n)),
        integrality=np.ones(len(blocks)),
        bounds=(0, 1),
    )
    assert res.success
    return int(round(-res.fun))


def minimal_blocks_from_table(table, x, n):
    """All inclusion-minimal sensitive blocks (any size) at x, as bitmasks,
    straight off the truth table: B is minimal iff it is sensitive and no
    B-minus-one-bit subset is."""
    idx = np.arange(1 << n)
    sens = table[idx ^ x] != table[x]
    minimal = sens.copy()
    for i in range(n):
        has_i = (idx >> i & 1).astype(bool)
        minimal &= ~has_i | ~sens[idx ^ (1 << i)]
    minimal[0] = False
    return [int(b) for b in np.nonzero(minimal)[0]]


def graph_orbit_reps(v, k):
    """One representative bitmask per isomorphism class of v-vertex
    k-uniform hypergraphs (the orbit scan marks every image of each new
    representative)."""
    n = math.comb(v, k)
    subs, ranks = subset_table(v, k)
    edge_perms = []
    for sigma in permutations(range(v)):
        edge_perms.append(
            tuple(ranks[tuple(sorted(sigma[u] for u in subs[e]))] for e in range(n))
        )
    visited = bytearray(1 << n)
    reps = []
    for x in range(1 << n):
        if visited[x]:
            continue
        reps.append(x)
        for perm in edge_perms:
            y = 0
            rest = x
            while rest:
                low = rest & -rest
                y |= 1 << perm[low.bit_length() - 1]
                rest ^= low
            visited[y] = 1
    return reps


def removed_edge_of(member, k):
    """Edge id deleted by the near-clique construction: the lex-largest
    k-subset of the member."""
    inside = sorted(combinations(tuple(sorted(member)), k))
    return rank_subset(inside[-1], k)
