"""Lagrange coordinates: raising, flattening and cascaded actions.

A decomposition along ``G_1 > ... > G_n`` has one level per consecutive pair.
Level ``i`` acts on the right cosets ``G_{i+1} \\ G_i``, which are addressed by
integer indices into that level's transversal.  A state is a tuple of such
indices; a group element ``h`` acts on states through the component actions
``h_i``, each of which depends only on the coordinates above level ``i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import NamedTuple

from .chains import SubgroupChain, make_chain, stabilizer_descent
from .cosets import (
    DEFAULT_MAX_INDEX,
    FaithfulComponent,
    Transversal,
    action_on_cosets,
    coset_image,
    right_transversal,
)
from .errors import DomainError, ResourceError, ValidationError
from .groups import PermGroup
from .perm import Permutation, compose

__all__ = [
    "DEFAULT_MAX_TABLE",
    "CascadedState",
    "ComponentAction",
    "CascadedPermutation",
    "DependencyTable",
    "LagrangeDecomposition",
    "TransitiveDecomposition",
    "build_decomposition",
    "raise_state",
    "flatten_state",
    "locate",
    "component_actions",
    "act",
    "materialize_dependencies",
    "decompose_transitive",
    "faithful_component_of",
]

DEFAULT_MAX_TABLE = 100_000


@dataclass(frozen=True)
class CascadedState:
    coords: tuple[int, ...]

    def __iter__(self):
        return iter(self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __str__(self) -> str:
        return " ".join(map(str, self.coords))


class ComponentAction(NamedTuple):
    raw: Permutation  # element of G_i, used by the recursion
    image: Permutation  # its action on the level's coset indices


@dataclass(eq=False)
class LagrangeDecomposition:
    chain: SubgroupChain
    transversals: list[Transversal]
    components: list[FaithfulComponent]

    @property
    def length(self) -> int:
        return len(self.transversals)

    @property
    def widths(self) -> list[int]:
        return [len(t) for t in self.transversals]

    @property
    def top(self) -> PermGroup:
        return self.chain[0]

    @property
    def state_count(self) -> int:
        return prod(self.widths)

    @property
    def subnormal_flags(self) -> list[bool]:
        return list(self.chain.report.subnormal_flags)

    def component_orders(self) -> list[int]:
        return [c.order() for c in self.components]

    def state(self, coords) -> CascadedState:
        """Validate a coordinate tuple."""
        coords = tuple(int(x) for x in coords)
        if len(coords) != self.length:
            raise DomainError(f"state needs {self.length} coordinates, got {len(coords)}")
        for i, (x, w) in enumerate(zip(coords, self.widths)):
            if not 0 <= x < w:
                raise DomainError(f"coordinate {x} at level {i + 1} outside 0..{w - 1}")
        return CascadedState(coords)

    def identity_state(self) -> CascadedState:
        return CascadedState((0,) * self.length)

    def states(self):
        """All states in lexicographic order."""
        coords = [()]
        for w in self.widths:
            coords = [c + (x,) for c in coords for x in range(w)]
        return (CascadedState(c) for c in coords)

    def _require_member(self, g: Permutation) -> None:
        if len(g) != self.top.degree:
            raise DomainError(f"element degree {len(g)} does not match {self.top.degree}")
        if not self.top.contains(g):
            raise DomainError(f"{g} is not in the top group of the chain")

    # -- raising and flattening -------------------------------------------

    def locate(self, g: Permutation) -> list[Permutation]:
        """The located elements ``g_1 = g``, ``g_{i+1} = g_i * rep(g_i)^-1``."""
        self._require_member(g)
        located = []
        for T in self.transversals:
            located.append(g)
            g = compose(g, T.inverse_reps[T.index_of(g, check=False)])
        return located

    def raise_state(self, g: Permutation) -> CascadedState:
        self._require_member(g)
        coords = []
        for T in self.transversals:
            j = T.index_of(g, check=False)
            coords.append(j)
            g = compose(g, T.inverse_reps[j])
        return CascadedState(tuple(coords))

    def flatten_state(self, s) -> Permutation:
        """Product of the representatives, bottom level first."""
        s = self.state(s)
        g = self.top.identity
        for T, x in zip(reversed(self.transversals), reversed(s.coords)):
            g = compose(g, T.reps[x])
        return g

    # -- actions ------------------------------------------------------------

    def raw_actions(self, h: Permutation, s) -> list[Permutation]:
        """Component actions ``h_i`` as elements of ``G_i``."""
        self._require_member(h)
        s = self.state(s)
        out = []
        for T, x in zip(self.transversals, s.coords):
            out.append(h)
            t = compose(T.reps[x], h)
            h = compose(t, T.inverse_reps[T.index_of(t, check=False)])
        return out

    def component_actions(self, h: Permutation, s) -> list[ComponentAction]:
        raws = self.raw_actions(h, s)
        return [
            ComponentAction(raw, coset_image(T, raw))
            for raw, T in zip(raws, self.transversals)
        ]

    def act(self, s, h: Permutation) -> CascadedState:
        self._require_member(h)
        s = self.state(s)
        coords = []
        for T, x in zip(self.transversals, s.coords):
            t = compose(T.reps[x], h)
            j = T.index_of(t, check=False)
            coords.append(j)
            h = compose(t, T.inverse_reps[j])
        return CascadedState(tuple(coords))

    def cascaded(self, h: Permutation) -> "CascadedPermutation":
        self._require_member(h)
        return CascadedPermutation(self, h)

    # -- dependency tables --------------------------------------------------

    def prefix_count(self) -> int:
        """Number of coordinate prefixes feeding the deepest level."""
        return prod(self.widths[:-1])

    def materialize(self, h: Permutation, max_table: int = DEFAULT_MAX_TABLE) -> "DependencyTable":
        self._require_member(h)
        if self.prefix_count() > max_table:
            raise ResourceError(
                f"{self.prefix_count()} prefix states exceed the table threshold {max_table}; "
                "use component_actions for lazy evaluation"
            )
        levels: list[dict] = [{} for _ in self.transversals]
        if not levels:
            return DependencyTable([], [], h)

        def walk(level, prefix, hi):
            T = self.transversals[level]
            levels[level][prefix] = coset_image(T, hi)
            if level + 1 == self.length:
                return
            for x in range(len(T)):
                t = compose(T.reps[x], hi)
                nxt = compose(t, T.inverse_reps[T.index_of(t, check=False)])
                walk(level + 1, prefix + (x,), nxt)

        walk(0, (), h)
        return DependencyTable(self.widths, levels, h)

    def faithful_component(self, level: int) -> FaithfulComponent:
        if not 0 <= level < self.length:
            raise DomainError(f"level {level} outside 0..{self.length - 1}")
        return self.components[level]


@dataclass(eq=False)
class CascadedPermutation:
    """Element-backed cascaded permutation; component actions on demand.

    Equality is extensional: two are equal when they act identically on
    every state (checked exhaustively up to ``DEFAULT_MAX_TABLE`` states),
    otherwise when their source elements agree.
    """

    decomposition: LagrangeDecomposition
    source: Permutation

    def __call__(self, s) -> CascadedState:
        return self.decomposition.act(s, self.source)

    def dependency(self, prefix) -> Permutation:
        """Value of the level-``len(prefix)+1`` dependency function."""
        D = self.decomposition
        prefix = tuple(prefix)
        full = prefix + (0,) * (D.length - len(prefix))
        return D.component_actions(self.source, full)[len(prefix)].image

    def __eq__(self, other):
        if not isinstance(other, CascadedPermutation):
            return NotImplemented
        D = self.decomposition
        if other.decomposition is not D:
            return False
        if self.source == other.source:
            return True
        if D.state_count > DEFAULT_MAX_TABLE:
            return False
        return all(self(s) == other(s) for s in D.states())

    __hash__ = None


@dataclass(eq=False)
class DependencyTable:
    """Level ``i`` maps every coordinate prefix of length ``i`` to the image
    of the component action on that level's coset indices."""

    widths: list[int]
    levels: list[dict]
    source: Permutation | None = None

    def entry(self, level: int, prefix) -> Permutation:
        return self.levels[level][tuple(prefix)]

    def evaluate(self, s) -> CascadedState:
        coords = tuple(s)
        out = []
        for i, x in enumerate(coords):
            out.append(self.levels[i][coords[:i]][x])
        return CascadedState(tuple(out))

    def rows(self):
        """``(level, prefix, image)`` with prefixes in lexicographic order."""
        for i, table in enumerate(self.levels):
            for prefix in sorted(table):
                yield i, prefix, table[prefix]

    def __len__(self) -> int:
        return sum(len(t) for t in self.levels)


def build_decomposition(chain, max_index: int = DEFAULT_MAX_INDEX) -> LagrangeDecomposition:
    if not isinstance(chain, SubgroupChain):
        chain = make_chain(chain)
    elif not chain.report.valid:
        raise ValidationError(chain.report.problem, level=chain.report.level)
    transversals = []
    components = []
    for G, H in zip(chain.groups, chain.groups[1:]):
        T = right_transversal(G, H, max_index)
        transversals.append(T)
        components.append(action_on_cosets(G, H, max_index, transversal=T))
    return LagrangeDecomposition(chain, transversals, components)


def raise_state(D: LagrangeDecomposition, g: Permutation) -> CascadedState:
    return D.raise_state(g)


def flatten_state(D: LagrangeDecomposition, s) -> Permutation:
    return D.flatten_state(s)


def locate(D: LagrangeDecomposition, g: Permutation) -> list[Permutation]:
    return D.locate(g)


def component_actions(D: LagrangeDecomposition, h: Permutation, s) -> list[ComponentAction]:
    return D.component_actions(h, s)


def act(D: LagrangeDecomposition, s, h: Permutation) -> CascadedState:
    return D.act(s, h)


def materialize_dependencies(D: LagrangeDecomposition, h: Permutation,
                             max_table: int = DEFAULT_MAX_TABLE) -> DependencyTable:
    return D.materialize(h, max_table)


def faithful_component_of(D: LagrangeDecomposition, level: int) -> FaithfulComponent:
    return D.faithful_component(level)


@dataclass(eq=False)
class TransitiveDecomposition:
    """Coordinates for ``G`` acting transitively on ``points``.

    The chain ends at the stabilizer of ``base``; a state flattens to the
    image of ``base`` under the flattened representative product.
    """

    decomposition: LagrangeDecomposition
    base: int
    points: tuple[int, ...]

    @property
    def group(self) -> PermGroup:
        return self.decomposition.top

    def flatten_point(self, s) -> int:
        return self.decomposition.flatten_state(s)[self.base]

    def raise_point(self, x: int) -> CascadedState:
        if x not in self.points:
            raise DomainError(f"point {x + 1} is not in the acted-on set")
        return self.decomposition.raise_state(self.group.witness(self.base, x))

    def act(self, s, h: Permutation) -> CascadedState:
        return self.decomposition.act(s, h)


def decompose_transitive(G: PermGroup, points=None, base: int = 0, chain=None,
                         max_index: int = DEFAULT_MAX_INDEX) -> TransitiveDecomposition:
    points = tuple(sorted(range(G.degree) if points is None else set(points)))
    if base not in points:
        raise DomainError(f"base point {base + 1} is not in the acted-on set")
    orbit = G.orbit(base)
    if tuple(orbit) != points:
        orbits = [o for o in G.orbits() if set(o) & set(points)]
        shown = "; ".join("{" + ",".join(str(x + 1) for x in o) + "}" for o in orbits)
        raise DomainError(f"group is not transitive on the given points; orbits: {shown}")
    stab = G.stabilizer([base])
    if chain is None:
        chain = stabilizer_descent(G, [base])
    else:
        if not isinstance(chain, SubgroupChain):
            chain = make_chain(chain)
        last = chain.groups[-1]
        if chain.groups[0].order() != G.order() or not G.is_subgroup_of(chain.groups[0]):
            raise ValidationError("chain does not start at the acting group", level=0)
        if last.order() != stab.order() or not last.is_subgroup_of(stab):
            raise ValidationError(
                f"chain does not end at the stabilizer of point {base + 1}",
                level=len(chain.groups) - 1,
            )
    D = build_decomposition(chain, max_index)
    return TransitiveDecomposition(D, base, points)
