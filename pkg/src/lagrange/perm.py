"""Permutations on ``{0, ..., n-1}`` stored as image tuples.

Products are read left to right: ``p * q`` means "apply p, then q", so
``(p * q)[x] == q[p[x]]``.  Textual I/O (cycle notation) is 1-based.
"""

from __future__ import annotations

import re
from operator import itemgetter

from .errors import DomainError, ParseError

__all__ = [
    "Permutation",
    "identity",
    "compose",
    "inverse",
    "from_cycles",
    "parse_cycles",
    "format_cycles",
]


class Permutation(tuple):
    """A bijection of ``range(len(self))``, given by its images.

    Tuple ordering is the lexicographic order of the one-line image
    sequence, which is what transversal canonicalisation relies on.
    """

    __slots__ = ()

    def __new__(cls, images=()):
        p = tuple.__new__(cls, images)
        n = len(p)
        if n < 1:
            raise DomainError("permutation degree must be at least 1")
        if sorted(p) != list(range(n)):
            raise DomainError(f"not a bijection on {n} points: {tuple(p)}")
        return p

    @classmethod
    def _trusted(cls, images):
        return tuple.__new__(cls, images)

    @property
    def degree(self) -> int:
        return len(self)

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self))

    def __mul__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return compose(self, other)

    def __rmul__(self, other):
        return NotImplemented

    def __invert__(self):
        return inverse(self)

    def __pow__(self, k: int):
        if k < 0:
            return inverse(self) ** (-k)
        result = identity(len(self))
        base = self
        while k:
            if k & 1:
                result = compose(result, base)
            base = compose(base, base)
            k >>= 1
        return result

    def __call__(self, x: int) -> int:
        return self[x]

    def moved_points(self) -> list[int]:
        return [i for i, x in enumerate(self) if i != x]

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest point, sorted."""
        seen = set()
        out = []
        for start in range(len(self)):
            if start in seen or self[start] == start:
                continue
            cycle = [start]
            seen.add(start)
            x = self[start]
            while x != start:
                cycle.append(x)
                seen.add(x)
                x = self[x]
            out.append(tuple(cycle))
        return out

    def __repr__(self) -> str:
        return f"Permutation({format_cycles(self)}, degree={len(self)})"

    def __str__(self) -> str:
        return format_cycles(self)


def identity(degree: int) -> Permutation:
    if degree < 1:
        raise DomainError("permutation degree must be at least 1")
    return Permutation._trusted(range(degree))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """``p`` then ``q``."""
    if len(p) != len(q):
        raise DomainError(f"degree mismatch: {len(p)} vs {len(q)}")
    if len(p) == 1:
        return p
    return Permutation._trusted(itemgetter(*p)(q))


def inverse(p: Permutation) -> Permutation:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return Permutation._trusted(inv)


def from_cycles(cycles, degree: int) -> Permutation:
    """Build a permutation from 0-based cycles."""
    images = list(range(degree))
    seen = set()
    for cycle in cycles:
        for x in cycle:
            if not 0 <= x < degree:
                raise DomainError(f"point {x} outside 0..{degree - 1}")
            if x in seen:
                raise DomainError(f"point {x} repeated")
            seen.add(x)
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            images[a] = b
    return Permutation._trusted(images)


_TOKEN = re.compile(r"\s*(?:(\d+)|([(),])|(\S))")


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse 1-based cycle notation such as ``"(1,2,3)(4,5)"``.

    ``"()"`` is the identity; points not mentioned are fixed.
    """
    if degree < 1:
        raise ParseError("degree must be positive")
    cycles: list[list[int]] = []
    current: list[int] | None = None
    expect_point = False
    seen: set[int] = set()
    pos = 0
    text = text.strip()
    if not text:
        raise ParseError("empty permutation text; use '()' for the identity")
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        pos = m.end()
        number, punct, junk = m.groups()
        if junk is not None:
            raise ParseError(f"unexpected token {junk!r} in {text!r}")
        if number is not None:
            if current is None:
                raise ParseError(f"point {number!r} outside parentheses in {text!r}")
            point = int(number)
            if not 1 <= point <= degree:
                raise ParseError(f"point {number!r} exceeds degree {degree} in {text!r}")
            if point in seen:
                raise ParseError(f"point {number!r} repeated in {text!r}")
            seen.add(point)
            current.append(point - 1)
            expect_point = False
        elif punct == "(":
            if current is not None:
                raise ParseError(f"nested '(' in {text!r}")
            current = []
        elif punct == ",":
            if current is None or not current or expect_point:
                raise ParseError(f"misplaced ',' in {text!r}")
            expect_point = True
        else:
            if current is None:
                raise ParseError(f"unmatched ')' in {text!r}")
            if expect_point:
                raise ParseError(f"dangling ',' before ')' in {text!r}")
            cycles.append(current)
            current = None
    if current is not None:
        raise ParseError(f"unclosed '(' in {text!r}")
    return from_cycles(cycles, degree)


def format_cycles(p, one_based: bool = True) -> str:
    """Canonical cycle notation: cycles sorted by smallest point, each
    rotated to start there, fixed points omitted, identity as ``()``."""
    shift = 1 if one_based else 0
    cycles = Permutation.cycles(p)
    if not cycles:
        return "()"
    return "".join("(" + ",".join(str(x + shift) for x in c) + ")" for c in cycles)
