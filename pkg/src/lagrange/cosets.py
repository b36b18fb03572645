"""Right-coset transversals, the action on coset representatives, and cores."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from operator import itemgetter

from .errors import DomainError, ResourceError
from .groups import PermGroup, action_stabilizer, check_index, require_subgroup
from .perm import Permutation, compose, inverse

__all__ = [
    "DEFAULT_MAX_INDEX",
    "Transversal",
    "FaithfulComponent",
    "right_transversal",
    "coset_rep",
    "rep_action",
    "action_on_cosets",
    "core",
]

DEFAULT_MAX_INDEX = 100_000
# beyond this many cosets the core of a non-normal subgroup is not attempted
CORE_COMBINED_LIMIT = 20_000


def _coset_key_function(H: PermGroup):
    """A function constant on right cosets ``Hg``.

    For ``h`` in ``H`` each ``H``-orbit ``O`` satisfies ``O^(hg) = O^g``, so the
    images of the orbits (points for fixed points, sets otherwise) only depend
    on the coset.  It separates cosets completely when ``H`` is the full
    stabilizer of its orbits; otherwise a bucket holds several cosets and
    membership tests decide.
    """
    orbits = H.orbits()
    fixed = [o[0] for o in orbits if len(o) == 1]
    moved = [o for o in orbits if len(o) > 1]
    if not moved:
        return lambda g: g
    get_fixed = itemgetter(*fixed) if fixed else None
    getters = [itemgetter(*o) for o in moved]

    def key(g):
        head = get_fixed(g) if get_fixed is not None else ()
        return (head, tuple(frozenset(get(g)) for get in getters))

    return key


@dataclass(eq=False)
class Transversal:
    """One representative per right coset ``Hg`` of ``subgroup`` in ``supergroup``.

    ``reps[0]`` is the identity (it represents ``H`` itself).
    """

    supergroup: PermGroup
    subgroup: PermGroup
    reps: list[Permutation]
    _key: object = field(repr=False, default=None)
    _buckets: dict = field(repr=False, default_factory=dict)
    _position: dict = field(repr=False, default_factory=dict)

    def __post_init__(self):
        if self._key is None:
            self._key = _coset_key_function(self.subgroup)
        self._position = {r: i for i, r in enumerate(self.reps)}
        self._buckets = {}
        for i, r in enumerate(self.reps):
            self._buckets.setdefault(self._key(r), []).append(i)

    def __len__(self) -> int:
        return len(self.reps)

    @cached_property
    def inverse_reps(self) -> list[Permutation]:
        return [inverse(r) for r in self.reps]

    @property
    def width(self) -> int:
        return len(self.reps)

    def position(self, r: Permutation) -> int:
        """Index of a listed representative."""
        try:
            return self._position[r]
        except KeyError:
            raise DomainError(f"{r} is not a listed coset representative") from None

    def index_of(self, g: Permutation, check: bool = True) -> int:
        """Index of the representative of ``Hg``.

        With ``check=False`` the caller guarantees ``g`` lies in the supergroup.
        """
        if check and not self.supergroup.contains(g):
            raise DomainError(f"{g} is not in the supergroup")
        bucket = self._buckets.get(self._key(g))
        if bucket is not None:
            if len(bucket) == 1:
                return bucket[0]
            H = self.subgroup
            inv = self.inverse_reps
            for i in bucket:
                if H.contains(compose(g, inv[i])):
                    return i
        raise DomainError(f"no representative found for the coset of {g}")

    def rep(self, g: Permutation, check: bool = True) -> Permutation:
        return self.reps[self.index_of(g, check)]


def _enumerate_by_key(G: PermGroup, key, index: int):
    """Orbit of the coset key under ``G``; complete iff it has ``index`` values."""
    reps = [G.identity]
    seen = {key(G.identity): 0}
    for r in reps:
        if len(reps) == index:
            break
        for s in G.generators:
            c = compose(r, s)
            k = key(c)
            if k not in seen:
                seen[k] = len(reps)
                reps.append(c)
    if len(reps) != index:
        return None
    return reps, lambda c: seen[key(c)]


def _enumerate_by_membership(G: PermGroup, H: PermGroup, key, index: int):
    reps = [G.identity]
    buckets = {key(G.identity): [0]}

    def locate(c):
        for i in buckets.get(key(c), ()):
            if H.contains(compose(c, inverse(reps[i]))):
                return i
        return None

    queue = 0
    while queue < len(reps) and len(reps) < index:
        r = reps[queue]
        queue += 1
        for s in G.generators:
            c = compose(r, s)
            if locate(c) is None:
                buckets.setdefault(key(c), []).append(len(reps))
                reps.append(c)
    if len(reps) != index:
        raise DomainError(f"coset enumeration found {len(reps)} cosets, expected {index}")
    return reps, locate


def _enumerate_cosets(G: PermGroup, H: PermGroup, index: int):
    """Breadth-first coset enumeration over the generators of ``G``.

    Each coset is then represented by the lexicographically least element
    among all products ``rep * generator`` landing in it; the identity keeps
    index 0 and the rest are sorted.
    """
    key = _coset_key_function(H)
    found = _enumerate_by_key(G, key, index)
    if found is None:
        found = _enumerate_by_membership(G, H, key, index)
    reps, locate = found
    best = list(reps)
    for r in reps:
        for s in G.generators:
            c = compose(r, s)
            i = locate(c)
            if c < best[i]:
                best[i] = c
    best[0] = G.identity
    return [best[0]] + sorted(best[1:]), key


def right_transversal(G: PermGroup, H: PermGroup, max_index: int = DEFAULT_MAX_INDEX) -> Transversal:
    require_subgroup(G, H)
    index = check_index(G, H, max_index)
    reps, key = _enumerate_cosets(G, H, index)
    return Transversal(G, H, reps, key)


def coset_rep(T: Transversal, g: Permutation) -> Permutation:
    return T.rep(g)


def rep_action(T: Transversal, r: Permutation, k: Permutation) -> Permutation:
    """The representative of ``H r k``."""
    T.position(r)
    if not T.supergroup.contains(k):
        raise DomainError(f"{k} is not in the supergroup")
    return T.reps[T.index_of(compose(r, k), check=False)]


def coset_image(T: Transversal, k: Permutation) -> Permutation:
    """Permutation of coset indices induced by ``k`` (``k`` assumed in ``G``)."""
    return Permutation._trusted(
        T.index_of(compose(r, k), check=False) for r in T.reps
    )


@dataclass(eq=False)
class FaithfulComponent:
    """The faithful image of ``G`` acting on the right cosets of ``H``."""

    transversal: Transversal
    generator_map: dict
    image_group: PermGroup

    @property
    def point_count(self) -> int:
        return len(self.transversal)

    def image(self, k: Permutation) -> Permutation:
        return coset_image(self.transversal, k)

    def order(self) -> int:
        """``|G| / |Core_G(H)|``, without building a chain for the image group."""
        T = self.transversal
        return T.supergroup.order() // core(T.supergroup, T.subgroup).order()


def action_on_cosets(G: PermGroup, H: PermGroup, max_index: int = DEFAULT_MAX_INDEX,
                     transversal: Transversal | None = None) -> FaithfulComponent:
    T = transversal if transversal is not None else right_transversal(G, H, max_index)
    gmap = {g: coset_image(T, g) for g in G.generators}
    image_group = PermGroup(gmap.values(), len(T))
    return FaithfulComponent(T, gmap, image_group)


def core(G: PermGroup, H: PermGroup, max_index: int = DEFAULT_MAX_INDEX) -> PermGroup:
    """Kernel of the action of ``G`` on the right cosets of ``H``.

    For non-normal ``H`` the kernel is read off a chain for ``G`` acting on
    ``points + cosets`` with the coset points placed first in the base.
    """
    cache = G.__dict__.setdefault("_cores", {})
    hit = cache.get(id(H))
    if hit is not None and hit[0] is H:
        return hit[1]
    require_subgroup(G, H)
    if H.is_normal_in(G):
        result = H
    else:
        index = check_index(G, H, max_index)
        if index > CORE_COMBINED_LIMIT:
            raise ResourceError(
                f"core of a non-normal subgroup of index {index} exceeds {CORE_COMBINED_LIMIT}"
            )
        T = right_transversal(G, H, max_index)
        action = {g: coset_image(T, g) for g in G.generators}
        result = action_stabilizer(G, action, range(index))
    cache[id(H)] = (H, result)
    return result
