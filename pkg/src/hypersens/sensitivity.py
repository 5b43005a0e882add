"""Exact sensitivity and block-sensitivity computation.

Block sensitivity is computed by packing inclusion-minimal sensitive blocks:
every sensitive block contains a minimal one, and replacing the blocks of a
disjoint family by minimal sub-blocks keeps the family disjoint, so the
maximum over minimal blocks attains bs(f, x).  The packing itself is an
exact branch and bound over the minimal blocks (ordered by size then
position tuple) with the count of still-compatible blocks as the upper
bound.

A `max_block_size` below the input length caps the minimal-block scan; the
result is then flagged `capped` and is only guaranteed to be a lower bound.
"""

import hashlib
import math
import time
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .errors import (
    CellBudgetExceeded,
    NonSensitiveBlock,
    OverlappingBlocks,
    TooLarge,
    ValueIsOne,
)
from .hypergraphs import edges_of_bits, rank_lookup
from .properties import (
    IsolatedCliqueProperty,
    IsolatedTriangleProperty,
    as_bits,
)

GLOBAL_BUDGET_BITS = 24
MAX_PACKING_BLOCKS = 10_000


def input_digest(n: int, bits: int) -> str:
    return hashlib.sha256(f"{n}:{bits:x}".encode()).hexdigest()


def _check_deadline(deadline):
    if deadline is not None and time.monotonic() > deadline:
        raise CellBudgetExceeded("cell wall-clock budget exhausted")


@dataclass(frozen=True)
class SensitivityReport:
    digest: str
    f_value: int
    sensitive_bits: tuple[int, ...]
    s_at_x: int
    polarity: str  # "s1" iff f(x) = 1

    def to_json(self, input_json=None) -> dict:
        out = {
            "digest": self.digest,
            "f_value": self.f_value,
            "sensitive_bits": list(self.sensitive_bits),
            "s_at_x": self.s_at_x,
            "polarity": self.polarity,
        }
        if input_json is not None:
            out["input"] = input_json
        return out


@dataclass(frozen=True)
class GlobalSensitivity:
    value: int
    argmax: int
    s0: int
    s1: int


@dataclass(frozen=True)
class BlockCertificate:
    digest: str
    blocks: tuple[tuple[int, ...], ...]
    count: int

    def to_json(self, input_json=None) -> dict:
        out = {
            "digest": self.digest,
            "blocks": [list(b) for b in self.blocks],
            "count": self.count,
            "verified": True,
        }
        if input_json is not None:
            out["input"] = input_json
        return out


@dataclass(frozen=True)
class BlockSensitivity:
    value: int
    certificate: BlockCertificate
    capped: bool  # True when max_block_size < n: value is only a lower bound


@dataclass(frozen=True)
class SensitiveTuple:
    vertices: tuple[int, ...]
    edge: int
    direction: str  # "add" | "remove"


def sensitivity_at(f, x, deadline=None) -> SensitivityReport:
    """f at x and at every single-bit flip."""
    bits = as_bits(x, f.n)
    fx = f.value(bits)
    sensitive = []
    for i in range(f.n):
        if i % 512 == 0:
            _check_deadline(deadline)
        if f.value(bits ^ (1 << i)) != fx:
            sensitive.append(i)
    return SensitivityReport(
        digest=input_digest(f.n, bits),
        f_value=fx,
        sensitive_bits=tuple(sensitive),
        s_at_x=len(sensitive),
        polarity="s1" if fx else "s0",
    )


def truth_table(f, deadline=None) -> np.ndarray:
    """f on all 2^n inputs as a uint8 array indexed by the input bitmask."""
    n = f.n
    table = np.empty(1 << n, dtype=np.uint8)
    value = f.value
    for x in range(1 << n):
        if x % 4096 == 0:
            _check_deadline(deadline)
        table[x] = value(x)
    return table


def sensitivity_global(
    f, budget_bits: int = GLOBAL_BUDGET_BITS, deadline=None
) -> GlobalSensitivity:
    """Exact max of s(f, x) over all inputs; ties go to the smallest bitmask."""
    n = f.n
    if n > budget_bits:
        raise TooLarge(f"exhaustive sweep over 2^{n} inputs exceeds the budget")
    table = truth_table(f, deadline)
    s_at = np.zeros(1 << n, dtype=np.uint32)
    for i in range(n):
        _check_deadline(deadline)
        # viewing the table as (high bits, bit i, low bits), flipping bit i
        # is a swap along the middle axis
        flipped = table.reshape(-1, 2, 1 << i)[:, ::-1, :].reshape(-1)
        s_at += table != flipped
    argmax = int(np.argmax(s_at))  # first occurrence = smallest input
    zeros = s_at[table == 0]
    ones = s_at[table == 1]
    return GlobalSensitivity(
        value=int(s_at[argmax]),
        argmax=argmax,
        s0=int(zeros.max()) if zeros.size else 0,
        s1=int(ones.max()) if ones.size else 0,
    )


def minimal_sensitive_blocks(
    f, x, max_block_size: int, deadline=None
) -> list[tuple[int, ...]]:
    """All inclusion-minimal sensitive blocks of size <= max_block_size at x."""
    n = f.n
    if n > GLOBAL_BUDGET_BITS:
        raise TooLarge(f"block scan over an n={n} input is out of scope")
    if not 1 <= max_block_size <= n:
        raise TooLarge(f"need 1 <= max_block_size <= {n}")
    bits = as_bits(x, n)
    fx = f.value(bits)
    found_masks: list[int] = []
    found: list[tuple[int, ...]] = []
    scanned = 0
    for size in range(1, max_block_size + 1):
        for block in combinations(range(n), size):
            scanned += 1
            if scanned % 2048 == 0:
                _check_deadline(deadline)
            mask = 0
            for i in block:
                mask |= 1 << i
            # a sensitive proper subset would contain an already-found
            # minimal block, since sizes are scanned in ascending order
            if any(m & mask == m for m in found_masks):
                continue
            if f.value(bits ^ mask) != fx:
                found_masks.append(mask)
                found.append(block)
    found.sort()
    return found


def _pack_blocks(blocks: list[int], deadline=None) -> tuple[int, list[int]]:
    """Maximum disjoint subfamily of bitmask blocks, by branch and bound.

    Each recursion level picks the next block from a candidate list that is
    already compatible with everything chosen; the candidate count is the
    pruning bound.
    """
    best_count = 0
    best: list[int] = []

    def rec(cands: list[int], chosen: list[int]):
        nonlocal best_count, best
        _check_deadline(deadline)
        if len(chosen) > best_count:
            best_count, best = len(chosen), list(chosen)
        for idx, j in enumerate(cands):
            if len(chosen) + len(cands) - idx <= best_count:
                break
            chosen.append(j)
            rec(
                [m for m in cands[idx + 1 :] if not blocks[m] & blocks[j]],
                chosen,
            )
            chosen.pop()

    rec(list(range(len(blocks))), [])
    return best_count, sorted(best)


def block_sensitivity_exact(
    f, x, max_block_size: int, deadline=None
) -> BlockSensitivity:
    """bs(f, x) over blocks of size <= max_block_size, with a certificate."""
    bits = as_bits(x, f.n)
    blocks = minimal_sensitive_blocks(f, x, max_block_size, deadline)
    if len(blocks) > MAX_PACKING_BLOCKS:
        raise TooLarge(f"{len(blocks)} blocks exceeds the packing budget")
    blocks.sort(key=lambda b: (len(b), b))
    masks = []
    for b in blocks:
        m = 0
        for i in b:
            m |= 1 << i
        masks.append(m)
    count, picked = _pack_blocks(masks, deadline)
    cert = BlockCertificate(
        digest=input_digest(f.n, bits),
        blocks=tuple(blocks[j] for j in picked),
        count=count,
    )
    return BlockSensitivity(
        value=count, certificate=cert, capped=max_block_size < f.n
    )


def certify_blocks(f, x, blocks) -> BlockCertificate:
    """Verify that the given disjoint blocks all flip f at x."""
    bits = as_bits(x, f.n)
    fx = f.value(bits)
    used = 0
    norm = []
    for idx, b in enumerate(blocks):
        mask = 0
        for i in b:
            mask |= 1 << i
        if mask & used:
            raise OverlappingBlocks(f"block #{idx} overlaps an earlier block")
        used |= mask
        if f.value(bits ^ mask) == fx:
            raise NonSensitiveBlock(idx)
        norm.append(tuple(sorted(b)))
    return BlockCertificate(
        digest=input_digest(f.n, bits), blocks=tuple(norm), count=len(norm)
    )


def enumerate_sensitive_tuples(spec, G) -> list[SensitiveTuple]:
    """All h-vertex sets one edge-flip away from being a desired isolated clique.

    `spec` is an IsolatedCliqueProperty (or an IsolatedTriangleProperty,
    treated as its k=2, i=1, h=3 equivalent); f(G) must be 0.
    """
    if isinstance(spec, IsolatedTriangleProperty):
        spec = IsolatedCliqueProperty(spec.v, 2, 1, 3)
    v, k, i, h = spec.v, spec.k, spec.i, spec.h
    bits = as_bits(G, spec.n)
    if spec.value(bits):
        raise ValueIsOne("sensitive tuples are defined on inputs with f = 0")
    rank_of = rank_lookup(v, k)
    edges = edges_of_bits(v, k, bits)
    out = []
    for S in _tuple_candidates(v, k, h, edges):
        inside = frozenset(S)
        missing = [
            rank_of(sub)
            for sub in combinations(S, k)
            if not bits >> rank_of(sub) & 1
        ]
        if len(missing) > 1:
            continue
        violators = []
        for e in edges:
            c = sum(1 for u in e if u in inside)
            if i <= c < k:
                violators.append(rank_of(e))
                if len(missing) + len(violators) > 1:
                    break
        if len(missing) == 1 and not violators:
            out.append(SensitiveTuple(S, missing[0], "add"))
        elif not missing and len(violators) == 1:
            out.append(SensitiveTuple(S, violators[0], "remove"))
    out.sort(key=lambda t: t.vertices)
    return out


def _tuple_candidates(v, k, h, edges):
    """Vertex sets that could be one flip away from an h-clique.

    For h = k+1 a near-clique keeps at least k of its k+1 edges, and any two
    of those share k-1 vertices and union to the whole tuple, so unions of
    edge pairs with |e & e'| = k-1 cover every candidate.  Otherwise fall
    back to combinations of vertices with enough incident edges.
    """
    if h == k + 1:
        by_sub: dict = {}
        cands = set()
        for e in edges:
            for drop in range(k):
                sub = e[:drop] + e[drop + 1 :]
                for other in by_sub.setdefault(sub, []):
                    cands.add(tuple(sorted(set(e) | set(other))))
                by_sub[sub].append(e)
        return sorted(cands)
    deg = [0] * v
    for e in edges:
        for u in e:
            deg[u] += 1
    min_deg = math.comb(h - 1, k - 1) - 1
    cand = [u for u in range(v) if deg[u] >= min_deg]
    return combinations(cand, h)
