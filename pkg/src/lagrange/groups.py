"""Permutation groups given by generators, backed by a stabilizer chain.

The chain (base + strong generators + orbit transversals) is built by a
deterministic Schreier-Sims procedure with base points taken in ascending
order after an optional caller-supplied prefix.  It is built lazily and
cached; construction is guarded by a lock so a group may be shared between
threads.
"""

from __future__ import annotations

import random
import threading
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product as _cartesian
from math import prod

from .errors import DomainError, ResourceError, ValidationError
from .perm import Permutation, compose, identity, inverse

__all__ = [
    "PermGroup",
    "StabChain",
    "group_from_generators",
    "order",
    "contains",
]


def _orbit_transversal(gens, point, degree):
    """Map each point of the orbit to ``(u, u^-1)`` with ``u[point] == x``."""
    e = identity(degree)
    table = {point: (e, e)}
    queue = [point]
    for x in queue:
        u = table[x][0]
        for s in gens:
            y = s[x]
            if y not in table:
                v = compose(u, s)
                table[y] = (v, inverse(v))
                queue.append(y)
    return table


@dataclass
class StabChain:
    """Base, strong generators and per-level orbit transversals."""

    degree: int
    base: list[int] = field(default_factory=list)
    # level i holds the strong generators fixing base[:i]
    gens: list[list[Permutation]] = field(default_factory=list)
    transversals: list[dict] = field(default_factory=list)

    @property
    def order(self) -> int:
        return prod(len(t) for t in self.transversals)

    @property
    def strong_generators(self) -> list[Permutation]:
        return list(self.gens[0]) if self.gens else []

    def strip(self, g: Permutation, start: int = 0):
        """Sift ``g`` from level ``start``; return (residue, level reached)."""
        for i in range(start, len(self.base)):
            entry = self.transversals[i].get(g[self.base[i]])
            if entry is None:
                return g, i
            g = compose(g, entry[1])
        return g, len(self.base)

    def contains(self, g: Permutation) -> bool:
        h, j = self.strip(g)
        return j == len(self.base) and h.is_identity()

    def stabilizer_generators(self, k: int) -> list[Permutation]:
        """Strong generators of the pointwise stabilizer of ``base[:k]``."""
        if k < len(self.gens):
            return list(self.gens[k])
        return []

    def random_element(self, rng: random.Random) -> Permutation:
        g = identity(self.degree)
        for t in self.transversals:
            u = t[rng.choice(sorted(t))][0]
            g = compose(u, g)
        return g

    def elements(self):
        """Every group element exactly once (factored form, deepest level first)."""
        levels = [[t[x][0] for x in sorted(t)] for t in self.transversals]
        e = identity(self.degree)
        for choice in _cartesian(*reversed(levels)):
            g = e
            for u in choice:
                g = compose(g, u)
            yield g


def schreier_sims(gens, degree: int, base_prefix=None) -> StabChain:
    """Deterministic Schreier-Sims.

    ``base_prefix`` points come first in the base (in the given order), and
    further points are the smallest point moved by a generator (or sifted
    residue) fixing the base so far.  Without a prefix the base is made
    ascending by rebuilding with the sorted base as prefix until stable.
    """
    if base_prefix is not None:
        return _schreier_sims(gens, degree, tuple(base_prefix))
    chain = _schreier_sims(gens, degree, ())
    while chain.base != sorted(chain.base):
        chain = _schreier_sims(gens, degree, tuple(sorted(chain.base)))
    return chain


def _schreier_sims(gens, degree: int, base_prefix) -> StabChain:
    gens = [g for g in gens if not g.is_identity()]
    base = list(base_prefix)
    while True:
        free = [g for g in gens if all(g[b] == b for b in base)]
        if not free:
            break
        base.append(min(g.moved_points()[0] for g in free))
    chain = StabChain(degree, base)
    for i in range(len(base)):
        level_gens = [g for g in gens if all(g[b] == b for b in base[:i])]
        chain.gens.append(level_gens)
        chain.transversals.append(_orbit_transversal(level_gens, base[i], degree))

    i = len(base) - 1
    while i >= 0:
        restart = False
        table = chain.transversals[i]
        for beta in sorted(table):
            u = table[beta][0]
            for s in chain.gens[i]:
                g1 = compose(compose(u, s), table[s[beta]][1])
                if g1.is_identity():
                    continue
                h, j = chain.strip(g1, i + 1)
                if j == len(chain.base) and h.is_identity():
                    continue
                if j == len(chain.base):
                    chain.base.append(h.moved_points()[0])
                    chain.gens.append([])
                    chain.transversals.append({})
                for level in range(i + 1, j + 1):
                    chain.gens[level].append(h)
                    chain.transversals[level] = _orbit_transversal(
                        chain.gens[level], chain.base[level], degree
                    )
                i = j
                restart = True
                break
            if restart:
                break
        if not restart:
            i -= 1

    # drop trailing levels whose orbit is trivial (prefix points fixed by the group)
    while chain.transversals and len(chain.transversals[-1]) == 1:
        chain.base.pop()
        chain.gens.pop()
        chain.transversals.pop()
    return chain


class PermGroup:
    """A permutation group presented by generators on ``degree`` points."""

    def __init__(self, generators, degree: int):
        if degree is None or degree < 1:
            raise DomainError("group degree must be a positive integer")
        gens = []
        seen = set()
        for g in generators:
            if not isinstance(g, Permutation):
                g = Permutation(g)
            if len(g) != degree:
                raise DomainError(
                    f"generator {g} has degree {len(g)}, group degree is {degree}"
                )
            if g.is_identity() or g in seen:
                continue
            seen.add(g)
            gens.append(g)
        self.degree = degree
        self.generators: tuple[Permutation, ...] = tuple(gens)
        self._lock = threading.Lock()
        self._chains: dict[tuple, StabChain] = {}

    @classmethod
    def trivial(cls, degree: int) -> "PermGroup":
        return cls((), degree)

    def __repr__(self) -> str:
        gens = ", ".join(str(g) for g in self.generators) or "()"
        return f"PermGroup(<{gens}>, degree={self.degree})"

    def stab_chain(self, base_prefix=()) -> StabChain:
        key = tuple(base_prefix)
        chain = self._chains.get(key)
        if chain is None:
            with self._lock:
                chain = self._chains.get(key)
                if chain is None:
                    chain = schreier_sims(self.generators, self.degree, key or None)
                    self._chains[key] = chain
        return chain

    @cached_property
    def identity(self) -> Permutation:
        return identity(self.degree)

    def order(self) -> int:
        return self.stab_chain().order

    def is_trivial(self) -> bool:
        return not self.generators

    def contains(self, p: Permutation) -> bool:
        if len(p) != self.degree:
            raise DomainError(f"degree mismatch: element {len(p)}, group {self.degree}")
        return self.stab_chain().contains(p)

    __contains__ = contains

    def elements(self):
        return self.stab_chain().elements()

    def random_element(self, rng: random.Random) -> Permutation:
        return self.stab_chain().random_element(rng)

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        return all(other.contains(g) for g in self.generators)

    def is_normal_in(self, other: "PermGroup") -> bool:
        """True if ``self`` is normalised by every generator of ``other``."""
        for s in other.generators:
            s_inv = inverse(s)
            for h in self.generators:
                if not self.contains(compose(compose(s_inv, h), s)):
                    return False
        return True

    def orbit(self, point: int) -> list[int]:
        seen = {point}
        queue = [point]
        for x in queue:
            for s in self.generators:
                y = s[x]
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return sorted(seen)

    def orbits(self) -> list[list[int]]:
        out = []
        done = set()
        for x in range(self.degree):
            if x not in done:
                orb = self.orbit(x)
                done.update(orb)
                out.append(orb)
        return out

    def stabilizer(self, points) -> "PermGroup":
        """Pointwise stabilizer of ``points``."""
        points = tuple(points)
        for p in points:
            if not 0 <= p < self.degree:
                raise DomainError(f"point {p} outside 0..{self.degree - 1}")
        if len(set(points)) != len(points):
            raise DomainError(f"repeated point in {points}")
        chain = self.stab_chain(points)
        k = len(points)
        # trailing prefix points with trivial orbits were trimmed off the chain
        gens = chain.stabilizer_generators(k) if k <= len(chain.base) else []
        gens = [g for g in gens if all(g[p] == p for p in points)]
        return PermGroup(gens, self.degree)

    def witness(self, base_point: int, target: int) -> Permutation:
        """Canonical element mapping ``base_point`` to ``target``."""
        chain = self.stab_chain((base_point,))
        if not chain.base or chain.base[0] != base_point:
            if target == base_point:
                return self.identity
            raise DomainError(f"point {target + 1} not in the orbit of {base_point + 1}")
        entry = chain.transversals[0].get(target)
        if entry is None:
            raise DomainError(f"point {target + 1} not in the orbit of {base_point + 1}")
        return entry[0]


def group_from_generators(gens, degree: int) -> PermGroup:
    return PermGroup(gens, degree)


def order(G: PermGroup) -> int:
    return G.order()


def contains(G: PermGroup, p: Permutation) -> bool:
    return G.contains(p)


def require_subgroup(G: PermGroup, H: PermGroup) -> None:
    if H.degree != G.degree:
        raise ValidationError(f"degree mismatch: {H.degree} vs {G.degree}")
    for h in H.generators:
        if not G.contains(h):
            raise ValidationError(f"subgroup generator {h} is not in the supergroup")


def check_index(G: PermGroup, H: PermGroup, max_index: int) -> int:
    idx, rem = divmod(G.order(), H.order())
    if rem:
        raise ValidationError("subgroup order does not divide group order")
    if idx > max_index:
        raise ResourceError(f"index {idx} exceeds the configured bound {max_index}")
    return idx


def action_stabilizer(G: PermGroup, action: dict, points) -> PermGroup:
    """Elements of ``G`` fixing ``points`` in a second action of ``G``.

    ``action`` maps each generator of ``G`` to its image permutation in the
    second action (a homomorphism, supplied by the caller).  The stabilizer
    is read off the diagonal action on ``degree + m`` points.
    """
    n = G.degree
    m = None
    combined = []
    for g in G.generators:
        img = action[g]
        if m is None:
            m = len(img)
        combined.append(Permutation._trusted(tuple(g) + tuple(n + x for x in img)))
    if m is None:
        return PermGroup.trivial(n)
    big = PermGroup(combined, n + m)
    stab = big.stabilizer([n + p for p in points])
    return PermGroup((Permutation._trusted(k[:n]) for k in stab.generators), n)
