"""Subgroup chains ``G_1 > G_2 > ... > G_n`` and their attributes."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import prod

from .errors import DomainError, ValidationError
from .groups import PermGroup

__all__ = [
    "SubgroupChain",
    "ChainReport",
    "validate_chain",
    "make_chain",
    "stabilizer_descent",
    "index_product",
]

TOTAL = "total"
STABILIZER = "stabilizer"


@dataclass(frozen=True)
class ChainReport:
    valid: bool
    length: int
    widths: list[int]
    subnormal_flags: list[bool]
    total: bool
    problem: str | None = None
    level: int | None = None  # 0-based index of the offending subgroup

    @property
    def kind(self) -> str:
        return TOTAL if self.total else STABILIZER


@dataclass(frozen=True, eq=False)
class SubgroupChain:
    groups: tuple[PermGroup, ...]
    kind: str
    report: ChainReport = field(repr=False, default=None)

    def __len__(self) -> int:
        return len(self.groups)

    def __getitem__(self, i) -> PermGroup:
        return self.groups[i]

    def __iter__(self):
        return iter(self.groups)

    @property
    def degree(self) -> int:
        return self.groups[0].degree

    @property
    def length(self) -> int:
        return len(self.groups) - 1

    @property
    def widths(self) -> list[int]:
        return list(self.report.widths)

    @property
    def is_total(self) -> bool:
        return self.kind == TOTAL


def validate_chain(groups, require_total: bool = False) -> ChainReport:
    """Check containment, strict descent and (optionally) totality.

    Subnormality is reported per level but never required.
    """
    groups = list(groups)
    if not groups:
        raise ValidationError("a chain needs at least one group")
    degree = groups[0].degree
    for i, H in enumerate(groups):
        if H.degree != degree:
            raise ValidationError(
                f"group {i + 1} has degree {H.degree}, expected {degree}", level=i
            )
    orders = [H.order() for H in groups]
    widths: list[int] = []
    subnormal: list[bool] = []
    total = orders[-1] == 1
    problem = None
    level = None
    for i in range(len(groups) - 1):
        G, H = groups[i], groups[i + 1]
        if not H.is_subgroup_of(G):
            problem, level = f"group {i + 2} is not contained in group {i + 1}", i + 1
            break
        if orders[i + 1] >= orders[i]:
            problem, level = f"group {i + 2} is not a proper subgroup of group {i + 1}", i + 1
            break
        widths.append(orders[i] // orders[i + 1])
        subnormal.append(H.is_normal_in(G))
    if problem is None and require_total and not total:
        problem, level = "chain is not total (last group is not trivial)", len(groups) - 1
    return ChainReport(
        valid=problem is None,
        length=len(groups) - 1,
        widths=widths,
        subnormal_flags=subnormal,
        total=total,
        problem=problem,
        level=level,
    )


def make_chain(groups, require_total: bool = False, kind: str | None = None) -> SubgroupChain:
    """Validate and wrap; raises ``ValidationError`` on an invalid chain."""
    groups = tuple(groups)
    report = validate_chain(groups, require_total)
    if not report.valid:
        raise ValidationError(report.problem, level=report.level)
    if kind is not None and kind != report.kind:
        raise ValidationError(
            f"chain declared {kind!r} but is {report.kind!r}", level=len(groups) - 1
        )
    return SubgroupChain(groups, report.kind, report)


def stabilizer_descent(G: PermGroup, points) -> SubgroupChain:
    """``G >= Stab(p1) >= Stab(p1, p2) >= ...`` with non-strict steps dropped."""
    points = list(points)
    for p in points:
        if not 0 <= p < G.degree:
            raise DomainError(f"point {p + 1} outside 1..{G.degree}")
    if len(set(points)) != len(points):
        raise DomainError("stabilizer descent points must be distinct")
    groups = [G]
    for k in range(1, len(points) + 1):
        S = G.stabilizer(points[:k])
        if S.order() < groups[-1].order():
            groups.append(S)
    return make_chain(groups)


def index_product(chain: SubgroupChain) -> int:
    return prod(chain.widths)
