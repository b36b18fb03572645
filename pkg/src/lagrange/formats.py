"""Group and chain text files.

A group file is a ``degree: N`` header followed by one generator per line in
1-based cycle notation; ``#`` starts a comment.  A chain file is a sequence
of group blocks separated by ``---`` lines, top group first.  Later blocks
may omit the degree header, and may use ``stabilizer: p q ...`` to mean the
pointwise stabilizer of those points in the previous group.  An optional
``kind: total`` or ``kind: stabilizer`` line may appear anywhere.
"""

from __future__ import annotations

from pathlib import Path

from .errors import ParseError
from .groups import PermGroup
from .perm import format_cycles, parse_cycles

__all__ = [
    "parse_group_text",
    "read_group",
    "format_group",
    "parse_chain_text",
    "read_chain",
    "format_chain",
]

KINDS = ("total", "stabilizer")


def _clean(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _parse_block(lines, degree, previous, where):
    gens = []
    stabilize = None
    for lineno, line in lines:
        head, sep, rest = line.partition(":")
        head = head.strip().lower()
        if sep and head == "degree":
            try:
                d = int(rest)
            except ValueError:
                raise ParseError(f"{where}:{lineno}: bad degree {rest.strip()!r}") from None
            if d < 1:
                raise ParseError(f"{where}:{lineno}: degree must be positive")
            if degree is not None and d != degree:
                raise ParseError(f"{where}:{lineno}: degree {d} differs from {degree}")
            if gens:
                raise ParseError(f"{where}:{lineno}: degree header after generators")
            degree = d
        elif sep and head == "stabilizer":
            try:
                stabilize = [int(x) - 1 for x in rest.replace(",", " ").split()]
            except ValueError:
                raise ParseError(f"{where}:{lineno}: bad point list {rest.strip()!r}") from None
        elif sep and head == "kind":
            continue
        else:
            if degree is None:
                raise ParseError(f"{where}:{lineno}: generator before 'degree:' header")
            try:
                gens.append(parse_cycles(line, degree))
            except ParseError as exc:
                raise ParseError(f"{where}:{lineno}: {exc}") from None
    if degree is None:
        raise ParseError(f"{where}: missing 'degree:' header")
    if stabilize is not None:
        if gens:
            raise ParseError(f"{where}: 'stabilizer:' block cannot also list generators")
        if previous is None:
            raise ParseError(f"{where}: 'stabilizer:' needs a preceding group")
        for p in stabilize:
            if not 0 <= p < degree:
                raise ParseError(f"{where}: stabilizer point {p + 1} exceeds degree {degree}")
        return previous.stabilizer(stabilize), degree
    return PermGroup(gens, degree), degree


def _kind(text: str, where: str):
    kind = None
    for lineno, line in _clean(text):
        head, sep, rest = line.partition(":")
        if sep and head.strip().lower() == "kind":
            value = rest.strip().lower()
            if value not in KINDS:
                raise ParseError(f"{where}:{lineno}: unknown chain kind {value!r}")
            kind = value
    return kind


def parse_group_text(text: str, where: str = "<group>") -> PermGroup:
    if any(line == "---" for _, line in _clean(text)):
        raise ParseError(f"{where}: '---' separator in a group file")
    group, _ = _parse_block(list(_clean(text)), None, None, where)
    return group


def read_group(path) -> PermGroup:
    path = Path(path)
    return parse_group_text(path.read_text(encoding="utf-8"), str(path))


def parse_chain_text(text: str, where: str = "<chain>"):
    """Return ``(groups, kind)``; ``kind`` is ``None`` when not declared."""
    blocks: list[list] = [[]]
    for lineno, line in _clean(text):
        if line == "---":
            blocks.append([])
        else:
            blocks[-1].append((lineno, line))
    groups: list[PermGroup] = []
    degree = None
    for k, block in enumerate(blocks):
        label = f"{where} (block {k + 1})"
        if not block and degree is not None:
            groups.append(PermGroup.trivial(degree))
            continue
        group, degree = _parse_block(block, degree, groups[-1] if groups else None, label)
        groups.append(group)
    return groups, _kind(text, where)


def read_chain(path):
    path = Path(path)
    return parse_chain_text(path.read_text(encoding="utf-8"), str(path))


def format_group(G: PermGroup, comment: str | None = None) -> str:
    lines = [f"# {c}" for c in (comment.splitlines() if comment else [])]
    lines.append(f"degree: {G.degree}")
    lines.extend(format_cycles(g) for g in G.generators)
    return "\n".join(lines) + "\n"


def format_chain(groups, kind: str | None = None, comment: str | None = None) -> str:
    parts = []
    if comment:
        parts.append("".join(f"# {c}\n" for c in comment.splitlines()))
    if kind:
        parts.append(f"kind: {kind}\n")
    blocks = []
    for i, G in enumerate(groups):
        lines = [f"degree: {G.degree}"] if i == 0 else []
        lines.extend(format_cycles(g) for g in G.generators)
        blocks.append("\n".join(lines) + ("\n" if lines else ""))
    parts.append("---\n".join(blocks))
    return "".join(parts)
