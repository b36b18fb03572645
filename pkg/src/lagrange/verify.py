"""Brute-force checks of the decomposition engine.

Ground truth here comes from plain set arithmetic on image tuples: group
closure by breadth-first search, cosets as frozensets, and the core as an
intersection of conjugates.  None of it goes through stabilizer chains or
the transversal lookup used by the engine, so agreement means something.
"""

from __future__ import annotations

import json
import random
from dataclasses import asdict, dataclass, field

from .cascade import DependencyTable, LagrangeDecomposition, TransitiveDecomposition
from .errors import LagrangeError
from .perm import Permutation, format_cycles

__all__ = [
    "DEFAULT_SEED",
    "CheckResult",
    "VerificationReport",
    "closure",
    "right_cosets",
    "core_by_conjugates",
    "check_bijection",
    "check_homomorphism",
    "check_core_factoring",
    "check_independence",
    "check_transitive",
    "check_dependency_table",
    "verify_decomposition",
]

DEFAULT_SEED = 20100415
MAX_CLOSURE = 5000
MAX_PAIRS = 200_000
DEFAULT_SAMPLES = 10_000

PASS, FAIL, SKIP = "pass", "fail", "skip"


# -- oracle arithmetic on plain tuples ---------------------------------------

def _mul(p, q):
    return tuple(q[x] for x in p)


def _inv(p):
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def closure(gens, degree: int, limit: int | None = None) -> set[tuple]:
    """All products of ``gens`` (breadth-first); ``None`` if over ``limit``."""
    e = tuple(range(degree))
    seen = {e}
    frontier = [e]
    gens = [tuple(g) for g in gens]
    while frontier:
        nxt = []
        for x in frontier:
            for s in gens:
                y = _mul(x, s)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
                    if limit is not None and len(seen) > limit:
                        return None
        frontier = nxt
    return seen


def right_cosets(G: set, H: set) -> list[frozenset]:
    """Partition of ``G`` into cosets ``H g``, in order of least element."""
    left = set(G)
    out = []
    for g in sorted(G):
        if g in left:
            coset = frozenset(_mul(h, g) for h in H)
            left -= coset
            out.append(coset)
    return out


def core_by_conjugates(G: set, H: set) -> set:
    core = set(H)
    for g in G:
        gi = _inv(g)
        core &= {_mul(_mul(gi, h), g) for h in H}
    return core


def _fmt(p) -> str:
    return format_cycles(p)


# -- reports -----------------------------------------------------------------

@dataclass
class CheckResult:
    name: str
    instance: str
    status: str
    detail: str = ""
    counterexample: dict | None = None

    @property
    def passed(self) -> bool:
        return self.status == PASS


@dataclass
class VerificationReport:
    checks: list[CheckResult] = field(default_factory=list)

    def add(self, result: CheckResult) -> CheckResult:
        self.checks.append(result)
        return result

    def totals(self) -> dict:
        out = {PASS: 0, FAIL: 0, SKIP: 0}
        for c in self.checks:
            out[c.status] += 1
        return out

    @property
    def passed(self) -> bool:
        return all(c.status != FAIL for c in self.checks)

    def to_text(self) -> str:
        lines = []
        for c in self.checks:
            line = f"{c.status.upper():4} {c.name} [{c.instance}]"
            if c.detail:
                line += f" {c.detail}"
            lines.append(line)
            if c.counterexample:
                ce = ", ".join(f"{k}={v}" for k, v in c.counterexample.items())
                lines.append(f"     counterexample: {ce}")
        t = self.totals()
        lines.append(f"total: {t[PASS]} passed, {t[FAIL]} failed, {t[SKIP]} skipped")
        return "\n".join(lines) + "\n"

    def to_jsonl(self) -> str:
        return "".join(json.dumps(asdict(c), sort_keys=True) + "\n" for c in self.checks)


def _describe(D: LagrangeDecomposition) -> str:
    return f"order {D.top.order()}, widths {' '.join(map(str, D.widths)) or '-'}"


# -- checks ------------------------------------------------------------------

def check_bijection(D: LagrangeDecomposition, max_order: int = MAX_CLOSURE) -> CheckResult:
    """Raising is injective, flattening inverts it, and states number |G|."""
    name, inst = "bijection", _describe(D)
    elements = closure(D.top.generators, D.top.degree, max_order)
    if elements is None:
        return CheckResult(name, inst, SKIP, f"group order exceeds {max_order}")
    flat_seen: dict = {}
    for s in D.states():
        g = tuple(D.flatten_state(s))
        if g in flat_seen:
            return CheckResult(name, inst, FAIL, "two states flatten to one element",
                               {"first": str(flat_seen[g]), "second": str(s), "element": _fmt(g)})
        flat_seen[g] = s
    seen: dict = {}
    for g in sorted(elements):
        try:
            s = D.raise_state(Permutation._trusted(g))
            back = D.flatten_state(s)
        except LagrangeError as exc:
            return CheckResult(name, inst, FAIL, f"raising failed: {exc}",
                               {"element": _fmt(g)})
        if tuple(back) != g:
            return CheckResult(name, inst, FAIL, "flatten(raise(g)) != g",
                               {"element": _fmt(g), "state": str(s), "flattened": _fmt(back)})
        if s in seen:
            return CheckResult(name, inst, FAIL, "two elements raise to one state",
                               {"first": _fmt(seen[s]), "second": _fmt(g), "state": str(s)})
        seen[s] = g
    if D.state_count != len(elements):
        return CheckResult(name, inst, FAIL,
                           f"state count {D.state_count} != group order {len(elements)}",
                           {"widths": " ".join(map(str, D.widths))})
    return CheckResult(name, inst, PASS, f"{len(elements)} states")


def check_homomorphism(D: LagrangeDecomposition, max_pairs: int = MAX_PAIRS,
                       samples: int = DEFAULT_SAMPLES, seed: int = DEFAULT_SEED) -> CheckResult:
    """``act(raise(g), h) == raise(g h)``, exhaustively or on sampled pairs."""
    name, inst = "homomorphism", _describe(D)
    limit = int(max_pairs ** 0.5)
    elements = closure(D.top.generators, D.top.degree, limit)
    if elements is not None:
        ordered = [Permutation._trusted(x) for x in sorted(elements)]
        pairs = ((g, h) for g in ordered for h in ordered)
        mode, count = "exhaustive", len(ordered) ** 2
    else:
        rng = random.Random(seed)
        G = D.top
        pairs = ((G.random_element(rng), G.random_element(rng)) for _ in range(samples))
        mode, count = f"sampled seed={seed}", samples
    for g, h in pairs:
        gh = _mul(g, h)
        try:
            left = D.act(D.raise_state(g), h)
            right = D.raise_state(Permutation._trusted(gh))
        except LagrangeError as exc:
            return CheckResult(name, inst, FAIL, f"engine error: {exc}",
                               {"g": _fmt(g), "h": _fmt(h)})
        if left != right:
            return CheckResult(name, inst, FAIL, "act(raise(g), h) != raise(gh)",
                               {"g": _fmt(g), "h": _fmt(h), "acted": str(left), "raised": str(right)})
    return CheckResult(name, inst, PASS, f"{count} pairs ({mode})")


def check_core_factoring(D: LagrangeDecomposition, max_order: int = MAX_CLOSURE) -> CheckResult:
    """Per level: image order = |G_i| / |core|, and equal coset action
    coincides with lying in the same coset of the core."""
    name, inst = "core_factoring", _describe(D)
    details = []
    for i, (G, H) in enumerate(zip(D.chain.groups, D.chain.groups[1:])):
        Gi = closure(G.generators, G.degree, max_order)
        if Gi is None:
            return CheckResult(name, inst, SKIP, f"level {i + 1} group order exceeds {max_order}")
        Hi = closure(H.generators, H.degree)
        cosets = right_cosets(Gi, Hi)
        where = {x: k for k, c in enumerate(cosets) for x in c}
        samples = [next(iter(c)) for c in cosets]
        core = core_by_conjugates(Gi, Hi)
        image_order = D.components[i].image_group.order()
        if image_order * len(core) != len(Gi):
            return CheckResult(name, inst, FAIL,
                               f"level {i + 1}: image order {image_order} x core {len(core)} != {len(Gi)}",
                               {"level": i + 1})
        engine_core = D.components[i].order()
        if engine_core != len(Gi) // len(core):
            return CheckResult(name, inst, FAIL,
                               f"level {i + 1}: component order {engine_core} disagrees with oracle",
                               {"level": i + 1})
        by_action: dict = {}
        by_core: dict = {}
        for x in Gi:
            by_action.setdefault(tuple(where[_mul(c, x)] for c in samples), set()).add(x)
            by_core.setdefault(frozenset(_mul(k, x) for k in core), set()).add(x)
        action_classes = sorted(map(sorted, by_action.values()))
        core_classes = sorted(map(sorted, by_core.values()))
        if action_classes != core_classes:
            for cls in action_classes:
                if cls not in core_classes:
                    return CheckResult(name, inst, FAIL,
                                       f"level {i + 1}: equal coset action but different core cosets",
                                       {"level": i + 1, "x": _fmt(cls[0]), "y": _fmt(cls[-1])})
        by_engine: dict = {}
        for x in Gi:
            try:
                img = D.components[i].image(Permutation._trusted(x))
            except LagrangeError as exc:
                return CheckResult(name, inst, FAIL, f"level {i + 1}: engine error: {exc}",
                                   {"level": i + 1, "x": _fmt(x)})
            by_engine.setdefault(img, set()).add(x)
        if sorted(map(sorted, by_engine.values())) != action_classes:
            return CheckResult(name, inst, FAIL,
                               f"level {i + 1}: engine coset action disagrees with oracle",
                               {"level": i + 1})
        details.append(f"{len(Gi)}/{len(core)}={len(Gi) // len(core)}")
    return CheckResult(name, inst, PASS, "levels " + " ".join(details))


def check_independence(D: LagrangeDecomposition, upper: int, lower: int,
                       max_order: int = MAX_CLOSURE, max_table: int = 100_000) -> CheckResult:
    """Does the level-``lower`` dependency ignore the level-``upper`` coordinate?

    Levels are 0-based.  Passing means independent; a dependent pair is
    reported as a failure carrying the witnessing element and prefixes.
    """
    name = "independence"
    inst = f"{_describe(D)}; levels {upper + 1},{lower + 1}"
    if not 0 <= upper < lower < max(D.length, 1):
        if D.length <= 1:
            return CheckResult(name, inst, PASS, "vacuous (single level)")
        raise ValueError(f"need 0 <= upper < lower < {D.length}")
    if D.prefix_count() > max_table:
        return CheckResult(name, inst, SKIP, f"table exceeds {max_table} prefixes")
    elements = closure(D.top.generators, D.top.degree, max_order)
    if elements is None:
        return CheckResult(name, inst, SKIP, f"group order exceeds {max_order}")
    for h in sorted(elements):
        table = D.materialize(Permutation._trusted(h), max_table)
        groups: dict = {}
        for prefix, image in sorted(table.levels[lower].items()):
            rest = prefix[:upper] + prefix[upper + 1:]
            if rest in groups and groups[rest][1] != image:
                return CheckResult(name, inst, FAIL, "dependent",
                                   {"h": _fmt(h), "prefix_a": str(groups[rest][0]), "prefix_b": str(prefix)})
            groups.setdefault(rest, (prefix, image))
    return CheckResult(name, inst, PASS, f"independent over {len(elements)} elements")


def check_transitive(TD: TransitiveDecomposition) -> CheckResult:
    """States correspond bijectively to points, compatibly with generators."""
    D = TD.decomposition
    name = "transitive"
    inst = f"{len(TD.points)} points, base {TD.base + 1}, widths {' '.join(map(str, D.widths))}"
    try:
        return _check_transitive(TD, name, inst)
    except LagrangeError as exc:
        return CheckResult(name, inst, FAIL, f"engine error: {exc}", {"base": TD.base + 1})


def _check_transitive(TD, name, inst) -> CheckResult:
    D = TD.decomposition
    point_of = {}
    for s in D.states():
        x = TD.flatten_point(s)
        if x in point_of.values():
            other = next(k for k, v in point_of.items() if v == x)
            return CheckResult(name, inst, FAIL, "two states give one point",
                               {"first": str(other), "second": str(s), "point": x + 1})
        point_of[s] = x
    if sorted(point_of.values()) != sorted(TD.points):
        return CheckResult(name, inst, FAIL, "states do not cover the point set",
                           {"states": len(point_of), "points": len(TD.points)})
    for s, x in point_of.items():
        if TD.raise_point(x) != s:
            return CheckResult(name, inst, FAIL, "raise_point(flatten_point(s)) != s",
                               {"state": str(s), "point": x + 1})
    for gen in TD.group.generators:
        for s, x in point_of.items():
            y = point_of[TD.act(s, gen)]
            if y != gen[x]:
                return CheckResult(name, inst, FAIL, "not equivariant",
                                   {"generator": _fmt(gen), "state": str(s), "expected": gen[x] + 1,
                                    "got": y + 1})
    return CheckResult(name, inst, PASS,
                       f"{len(point_of)} states, {len(TD.group.generators)} generators")


def check_dependency_table(D: LagrangeDecomposition, table: DependencyTable) -> CheckResult:
    """Evaluating the table on each state matches ``raise(flatten(s) h)``."""
    h = table.source
    name, inst = "dependency_table", f"{_describe(D)}; h={_fmt(h)}"
    for s in D.states():
        try:
            expected = D.raise_state(Permutation._trusted(_mul(D.flatten_state(s), h)))
        except LagrangeError as exc:
            return CheckResult(name, inst, FAIL, f"engine error: {exc}", {"state": str(s)})
        try:
            got = table.evaluate(s)
        except (KeyError, IndexError):
            got = None
        if got != expected:
            return CheckResult(name, inst, FAIL, "table action disagrees with the group",
                               {"state": str(s), "expected": str(expected), "table": str(got)})
    return CheckResult(name, inst, PASS, f"{D.state_count} states")


def verify_decomposition(D: LagrangeDecomposition, *, seed: int = DEFAULT_SEED,
                         samples: int = DEFAULT_SAMPLES, max_order: int = MAX_CLOSURE,
                         max_pairs: int = MAX_PAIRS, max_table: int = 100_000,
                         transitive: TransitiveDecomposition | None = None) -> VerificationReport:
    report = VerificationReport()
    if D.chain.is_total:
        report.add(check_bijection(D, max_order))
    report.add(check_homomorphism(D, max_pairs, samples, seed))
    report.add(check_core_factoring(D, max_order))
    if D.length and D.prefix_count() <= max_table and D.state_count <= max_table:
        for gen in D.top.generators:
            try:
                table = D.materialize(gen, max_table)
            except LagrangeError as exc:
                report.add(CheckResult("dependency_table", _describe(D), FAIL,
                                       f"engine error: {exc}", {"h": _fmt(gen)}))
                continue
            report.add(check_dependency_table(D, table))
    if transitive is not None:
        report.add(check_transitive(transitive))
    return report


# -- fault injection -----------------------------------------------------------

def duplicate_representative(D: LagrangeDecomposition, level: int | None = None) -> LagrangeDecomposition:
    """Copy of ``D`` whose level transversal lists one representative twice."""
    from .cosets import Transversal

    if level is None:
        level = max(range(D.length), key=lambda i: D.widths[i])
    T = D.transversals[level]
    if len(T) < 2:
        raise ValueError(f"level {level + 1} has a single coset")
    reps = list(T.reps)
    reps[-1] = reps[1] if len(reps) > 2 else reps[0]
    transversals = list(D.transversals)
    transversals[level] = Transversal(T.supergroup, T.subgroup, reps)
    return LagrangeDecomposition(D.chain, transversals, list(D.components))


def corrupt_table(table: DependencyTable) -> DependencyTable:
    """Copy of ``table`` with one entry on the deepest nontrivial level reversed."""
    levels = [dict(t) for t in table.levels]
    level = max(i for i, w in enumerate(table.widths) if w > 1)
    prefix = sorted(levels[level])[0]
    levels[level][prefix] = Permutation(reversed(levels[level][prefix]))
    return DependencyTable(list(table.widths), levels, table.source)
