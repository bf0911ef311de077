"""Independent certification oracles.

Everything here depends only on the core graph representation, never on
the transform or group machinery, so it can serve as trusted evidence
against those modules.  The brute-force search is exact: a returned
witness is re-verified edge-by-edge, and a None is a definitive
refutation, not a timeout.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np

from .core import CirculantGraph, edge_set, symmetric_closure
from .errors import BudgetExceeded, OrderMismatch, VerificationFailure
from .theta import ThetaParams

BRUTE_FORCE_CAP = 24
SPECTRAL_DIGITS = 9


@dataclass(frozen=True)
class GcdSignature:
    """Multiset of gcd(n, jump) values as sorted (value, multiplicity) pairs."""

    n: int
    pairs: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class IsoWitness:
    """An explicit vertex bijection that was checked on every edge."""

    mapping: tuple[int, ...]
    verified: bool


def gcd_signature(g: CirculantGraph) -> GcdSignature:
    counts: dict[int, int] = {}
    for j in g.jumps:
        d = gcd(g.n, j)
        counts[d] = counts.get(d, 0) + 1
    return GcdSignature(g.n, tuple(sorted(counts.items())))


def gcd_signature_check(g: CirculantGraph, h: CirculantGraph) -> bool:
    """Necessary condition: isomorphic circulants share the gcd multiset."""
    if g.n != h.n:
        raise OrderMismatch(f"orders differ: {g.n} vs {h.n}")
    return gcd_signature(g) == gcd_signature(h)


def spectral_fingerprint(g: CirculantGraph, digits: int = SPECTRAL_DIGITS) -> tuple[float, ...]:
    """Sorted adjacency eigenvalues, rounded for stable comparison.

    Eigenvalue j is the sum of cos(2*pi*j*s/n) over the symmetric closure;
    isomorphic graphs agree, so a mismatch refutes isomorphism while a
    match proves nothing.
    """
    closure = np.array(sorted(symmetric_closure(g).values))
    j = np.arange(g.n).reshape(-1, 1)
    eigs = np.cos(2.0 * np.pi * j * closure / g.n).sum(axis=1)
    return tuple(sorted(round(float(v), digits) + 0.0 for v in eigs))


def brute_force_isomorphic(
    g: CirculantGraph, h: CirculantGraph, cap: int = BRUTE_FORCE_CAP
) -> IsoWitness | None:
    """Exhaustive isomorphism search with adjacency-consistency pruning.

    Returns the first witness in deterministic order (lowest image of
    vertex 0 wins) or None after exhausting the search space.  Orders
    above cap raise BudgetExceeded instead of answering slowly.
    """
    if g.n != h.n:
        raise OrderMismatch(f"orders differ: {g.n} vs {h.n}")
    n = g.n
    if n > cap:
        raise BudgetExceeded(f"order {n} above brute-force cap {cap}")

    def masks(graph: CirculantGraph) -> list[int]:
        adj = [0] * n
        for a, b in edge_set(graph):
            adj[a] |= 1 << b
            adj[b] |= 1 << a
        return adj

    adj_g, adj_h = masks(g), masks(h)
    if sorted(m.bit_count() for m in adj_g) != sorted(m.bit_count() for m in adj_h):
        return None

    # visit g's vertices most-constrained first: each next vertex is the one
    # with the most already-placed neighbors (ties to the lowest index)
    order: list[int] = [0]
    placed = 1 << 0
    while len(order) < n:
        best, best_links = -1, -1
        for v in range(n):
            if placed >> v & 1:
                continue
            links = (adj_g[v] & placed).bit_count()
            if links > best_links:
                best, best_links = v, links
        order.append(best)
        placed |= 1 << best

    mapping = [-1] * n
    used = 0

    def extend(depth: int) -> bool:
        nonlocal used
        if depth == n:
            return True
        v = order[depth]
        required = 0
        forbidden = 0
        mask = adj_g[v]
        for u in order[:depth]:
            if mask >> u & 1:
                required |= 1 << mapping[u]
            else:
                forbidden |= 1 << mapping[u]
        deg = mask.bit_count()
        for w in range(n):
            if used >> w & 1:
                continue
            aw = adj_h[w]
            if aw.bit_count() != deg:
                continue
            if aw & required != required or aw & forbidden:
                continue
            mapping[v] = w
            used |= 1 << w
            if extend(depth + 1):
                return True
            used &= ~(1 << w)
            mapping[v] = -1
        return False

    if not extend(0):
        return None
    assert _maps_edges(n, mapping, edge_set(g), edge_set(h))
    return IsoWitness(tuple(mapping), True)


def verify_theta_witness(
    p: ThetaParams, g: CirculantGraph, h: CirculantGraph
) -> IsoWitness:
    """Check the rotation map as an explicit isomorphism g -> h.

    The permutation is rebuilt from the definition here (x gains
    (x mod m)*t*m) and confirmed edge-by-edge at any order; failure raises
    VerificationFailure rather than returning a wrong witness.
    """
    if g.n != h.n or g.n != p.n:
        raise OrderMismatch(f"orders differ: {g.n}, {h.n}, params {p.n}")
    n = p.n
    mapping = [(x + (x % p.m) * p.t * p.m) % n for x in range(n)]
    if sorted(mapping) != list(range(n)):
        raise VerificationFailure(f"rotation map is not a bijection for {p}")
    if not _maps_edges(n, mapping, edge_set(g), edge_set(h)):
        raise VerificationFailure(f"{p} does not map {g} onto {h}")
    return IsoWitness(tuple(mapping), True)


def _maps_edges(n, mapping, edges_g, edges_h) -> bool:
    if len(edges_g) != len(edges_h):
        return False
    for a, b in edges_g:
        u, v = mapping[a], mapping[b]
        if ((u, v) if u < v else (v, u)) not in edges_h:
            return False
    return True
