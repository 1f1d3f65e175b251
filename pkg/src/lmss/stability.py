"""Exact stable-set computations.

A set S is a local maximum stable set when it is a maximum stable set of
G[N[S]].  Ψ(G) collects those sets and Ω(G) the maximum stable sets of G;
Ω(G) ⊆ Ψ(G) always.  A *proper* local maximum stable set is a member of
Ψ(G) − Ω(G).  The empty set is never reported as a member of Ψ(G).

All solvers work on vertex bitmasks and are exact.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from .errors import GraphError, HypothesisViolated
from .graph import Graph, VertexSet, check_vertices, from_mask, to_mask


def _lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def _clique_cover_bound(nbr: tuple[int, ...], R: int) -> int:
    """Number of cliques in a greedy clique cover of R (bounds α from above)."""
    count = 0
    while R:
        v = _lowest(R)
        clique = 1 << v
        cand = R & nbr[v]
        while cand:
            w = _lowest(cand)
            clique |= 1 << w
            cand &= nbr[w]
        R &= ~clique
        count += 1
    return count


def max_stable_mask(nbr: tuple[int, ...], R: int) -> int:
    """A maximum stable subset of the vertex mask ``R`` (branch and bound)."""
    best = [0, 0]  # mask, size

    def expand(cur: int, size: int, R: int) -> None:
        # vertices of degree <= 1 inside R belong to some maximum stable set
        changed = True
        while changed and R:
            changed = False
            rest = R
            while rest:
                v = _lowest(rest)
                rest &= rest - 1
                if (nbr[v] & R).bit_count() <= 1:
                    cur |= 1 << v
                    size += 1
                    R &= ~(nbr[v] | (1 << v))
                    rest &= R
                    changed = True
        if not R:
            if size > best[1]:
                best[0], best[1] = cur, size
            return
        if size + _clique_cover_bound(nbr, R) <= best[1]:
            return
        pivot, top = -1, -1
        rest = R
        while rest:
            v = _lowest(rest)
            rest &= rest - 1
            d = (nbr[v] & R).bit_count()
            if d > top:
                pivot, top = v, d
        expand(cur | (1 << pivot), size + 1, R & ~(nbr[pivot] | (1 << pivot)))
        expand(cur, size, R & ~(1 << pivot))

    expand(0, 0, R)
    return best[0]


def alpha_mask(nbr: tuple[int, ...], R: int) -> int:
    return max_stable_mask(nbr, R).bit_count()


def is_stable(G: Graph, S: Iterable[int]) -> bool:
    S = check_vertices(G, S)
    mask = to_mask(S)
    return all(not (G.nbr[v] & mask) for v in S)


def stability_number(G: Graph) -> tuple[int, VertexSet]:
    """α(G) together with one maximum stable set."""
    witness = max_stable_mask(G.nbr, (1 << G.n) - 1)
    return witness.bit_count(), from_mask(witness)


def _closed_nbhd_mask(G: Graph, mask: int) -> int:
    out = mask
    rest = mask
    while rest:
        v = _lowest(rest)
        rest &= rest - 1
        out |= G.nbr[v]
    return out


def iter_stable_masks(G: Graph, max_size: int | None = None) -> Iterator[int]:
    """Every non-empty stable set as a mask, depth-first in index order."""
    n = G.n
    limit = n if max_size is None else max_size

    def walk(cur: int, size: int, allowed: int) -> Iterator[int]:
        rest = allowed
        while rest:
            v = _lowest(rest)
            rest &= rest - 1
            nxt = cur | (1 << v)
            yield nxt
            if size + 1 < limit:
                yield from walk(nxt, size + 1, rest & ~G.nbr[v])

    if limit > 0:
        yield from walk(0, 0, (1 << n) - 1)


@dataclass(frozen=True)
class StableSetFamily:
    kind: str  # "omega" or "psi"
    family: tuple[VertexSet, ...]

    def __iter__(self):
        return iter(self.family)

    def __len__(self) -> int:
        return len(self.family)

    def __contains__(self, S) -> bool:
        return tuple(sorted(set(S))) in self.family


def enumerate_maximum_stable_sets(G: Graph) -> StableSetFamily:
    alpha, _ = stability_number(G)
    found = []

    def walk(cur: int, size: int, allowed: int) -> None:
        if size == alpha:
            found.append(cur)
            return
        if size + _clique_cover_bound(G.nbr, allowed) < alpha:
            return
        rest = allowed
        while rest:
            v = _lowest(rest)
            rest &= rest - 1
            if size + 1 + rest.bit_count() < alpha:
                # not enough vertices left after v either
                break
            walk(cur | (1 << v), size + 1, rest & ~G.nbr[v])

    walk(0, 0, (1 << G.n) - 1)
    return StableSetFamily("omega", tuple(sorted(from_mask(m) for m in found)))


class _LocalChecker:
    """Memoised α(G[N[S]]) == |S| tests for one graph."""

    def __init__(self, G: Graph):
        self.G = G
        self._alpha: dict[int, int] = {}

    def alpha_of(self, region: int) -> int:
        a = self._alpha.get(region)
        if a is None:
            a = self._alpha[region] = alpha_mask(self.G.nbr, region)
        return a

    def is_local(self, mask: int) -> bool:
        return self.alpha_of(_closed_nbhd_mask(self.G, mask)) == mask.bit_count()


def is_local_maximum_stable(G: Graph, S: Iterable[int]) -> bool:
    """True iff S is a non-empty stable set and a maximum stable set of G[N[S]]."""
    S = check_vertices(G, S)
    if not S:
        raise GraphError("local maximality is only tested for non-empty sets")
    if not is_stable(G, S):
        return False
    return _LocalChecker(G).is_local(to_mask(S))


def enumerate_psi(G: Graph, max_size: int | None = None) -> StableSetFamily:
    """All non-empty local maximum stable sets (of size <= ``max_size``)."""
    check = _LocalChecker(G)
    members = [m for m in iter_stable_masks(G, max_size) if check.is_local(m)]
    return StableSetFamily("psi", tuple(sorted(from_mask(m) for m in members)))


def extend_to_maximum_stable(G: Graph, S: Iterable[int]) -> VertexSet:
    """The lexicographically least maximum stable set containing S.

    Requires S to be a local maximum stable set; a superset in Ω(G) then
    always exists.
    """
    S = check_vertices(G, S)
    if not S or not is_local_maximum_stable(G, S):
        raise HypothesisViolated("extension requires a local maximum stable set")
    alpha, _ = stability_number(G)
    smask = to_mask(S)
    R = ((1 << G.n) - 1) & ~_closed_nbhd_mask(G, smask)
    return from_mask(_least_completion(G, smask, R, alpha - len(S)))


def least_maximum_stable_set(G: Graph) -> VertexSet:
    """The lexicographically least member of Ω(G)."""
    alpha, _ = stability_number(G)
    return from_mask(_least_completion(G, 0, (1 << G.n) - 1, alpha))


def _least_completion(G: Graph, chosen: int, R: int, need: int) -> int:
    # smallest-first greedy; a vertex is kept when the rest of R can still
    # supply the remaining count
    while need > 0:
        if not R:
            raise AssertionError("no stable completion; solver inconsistency")
        v = _lowest(R)
        without_v = R & ~(G.nbr[v] | (1 << v))
        if 1 + alpha_mask(G.nbr, without_v) >= need:
            chosen |= 1 << v
            R = without_v
            need -= 1
        else:
            R &= ~(1 << v)
    return chosen


def has_proper_lmss(G: Graph) -> VertexSet | None:
    """First (depth-first order) member of Ψ(G) − Ω(G), or None."""
    alpha, _ = stability_number(G)
    check = _LocalChecker(G)
    for m in iter_stable_masks(G, alpha - 1):
        if check.is_local(m):
            return from_mask(m)
    return None
