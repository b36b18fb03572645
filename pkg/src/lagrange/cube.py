"""The 2x2x2 Pocket Cube as a permutation group on 24 stickers.

Corner ``k`` carries stickers ``3k, 3k+1, 3k+2`` (x-, y-, z-facing) in the
solved state.  Corners are listed in lexicographic order of their position
vectors in ``{-1, 1}^3``.
"""

from __future__ import annotations

from itertools import product

from .groups import PermGroup, action_stabilizer
from .perm import Permutation

CORNERS = list(product((-1, 1), repeat=3))
STICKERS = [(c, axis) for c in CORNERS for axis in range(3)]
BLOCKS = [tuple(range(3 * k, 3 * k + 3)) for k in range(8)]

FACES = {
    # name: (axis, side)
    "R": (0, 1),
    "L": (0, -1),
    "U": (1, 1),
    "D": (1, -1),
    "F": (2, 1),
    "B": (2, -1),
}


def _quarter_turn(axis: int):
    a, b = [i for i in range(3) if i != axis]

    def rotate(v):
        w = list(v)
        w[a], w[b] = -v[b], v[a]
        return tuple(w)

    def rotate_axis(i):
        return {a: b, b: a}.get(i, i)

    return rotate, rotate_axis


def face_turn(name: str) -> Permutation:
    """Quarter turn of one face, as a permutation of sticker indices."""
    axis, side = FACES[name]
    rotate, rotate_axis = _quarter_turn(axis)
    index = {s: i for i, s in enumerate(STICKERS)}
    images = []
    for corner, normal in STICKERS:
        if corner[axis] == side:
            images.append(index[(rotate(corner), rotate_axis(normal))])
        else:
            images.append(index[(corner, normal)])
    return Permutation(images)


def pocket_cube_group() -> PermGroup:
    return PermGroup([face_turn(f) for f in "RLUDFB"], 24)


def corner_action(g: Permutation) -> Permutation:
    """Permutation of the 8 corner slots induced by a sticker permutation."""
    return Permutation([g[3 * k] // 3 for k in range(8)])


def _corner_stabilizer(G: PermGroup, corners) -> PermGroup:
    action = {g: corner_action(g) for g in G.generators}
    return action_stabilizer(G, action, corners)


def two_level_chain(G: PermGroup | None = None) -> list[PermGroup]:
    """Corner positions on top, the orientation subgroup below."""
    G = G or pocket_cube_group()
    twists = _corner_stabilizer(G, range(8))
    return [G, twists, PermGroup.trivial(24)]


def step_by_step_chain(G: PermGroup | None = None) -> list[PermGroup]:
    """Place corner 1, orient it, place corner 2, orient it, ..."""
    G = G or pocket_cube_group()
    chain = [G]
    for k in range(8):
        placed = _corner_stabilizer(chain[-1], [k])
        if placed.order() < chain[-1].order():
            chain.append(placed)
        oriented = placed.stabilizer(BLOCKS[k])
        if oriented.order() < chain[-1].order():
            chain.append(oriented)
    return chain
