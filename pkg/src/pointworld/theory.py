"""Assumption-digging diagrams.

A theory is a set of typed statements plus justification hyperedges
(``claim <- premise, premise, ...``). Definitions may name the terms they are
built from (``uses``), which lets definitional circularity show up as a cycle.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field

from .errors import (
    CyclicDependency,
    DuplicateId,
    JustifiedNonClaim,
    TheorySyntaxError,
    UnknownId,
)

ID = r"[A-Za-z0-9_][A-Za-z0-9_\-]*"
_STATEMENT_RE = re.compile(rf"(axiom|def|given|claim)\s+({ID})\s*:\s*(.*)\Z")
_USES_RE = re.compile(rf"(.*?)\s*\buses\s+({ID}(?:\s*,\s*{ID})*)\s*\Z")
_JUSTIFY_RE = re.compile(rf"justify\s+({ID})\s*<-\s*({ID}(?:\s*,\s*{ID})*)\s*\Z")


class Kind(str, enum.Enum):
    AXIOM = "Axiom"
    DEFINITION = "Definition"
    GIVEN = "Given"
    CLAIM = "Claim"


_KEYWORDS = {"axiom": Kind.AXIOM, "def": Kind.DEFINITION, "given": Kind.GIVEN, "claim": Kind.CLAIM}


@dataclass(frozen=True)
class Statement:
    id: str
    text: str
    kind: Kind
    uses: tuple[str, ...] = ()  # only meaningful for definitions


@dataclass(frozen=True)
class Justification:
    target: str
    premises: tuple[str, ...]


@dataclass(frozen=True)
class TheoryGraph:
    statements: dict[str, Statement]
    justifications: tuple[Justification, ...] = ()
    _deps: dict[str, tuple[str, ...]] = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self) -> None:
        for j in self.justifications:
            _check_justification(self.statements, j)
        for s in self.statements.values():
            for u in s.uses:
                if u not in self.statements:
                    raise UnknownId(f"unknown id {u}")
        deps: dict[str, set[str]] = {sid: set(s.uses) for sid, s in self.statements.items()}
        for j in self.justifications:
            deps[j.target].update(j.premises)
        self._deps.update({k: tuple(sorted(v)) for k, v in deps.items()})

    def depends_on(self, sid: str) -> tuple[str, ...]:
        """Direct dependencies of a statement, sorted, all justifications merged."""
        return self._deps[sid]

    def kind(self, sid: str) -> Kind:
        return self.statements[sid].kind


def _check_justification(statements: dict[str, Statement], j: Justification) -> None:
    if j.target not in statements:
        raise UnknownId(f"unknown id {j.target}")
    if statements[j.target].kind is not Kind.CLAIM:
        raise JustifiedNonClaim(f"{j.target} is a {statements[j.target].kind.value}, not a Claim")
    if not j.premises:
        raise TheorySyntaxError(f"justification of {j.target} has no premises")
    for p in j.premises:
        if p not in statements:
            raise UnknownId(f"unknown id {p}")


def parse_theory(text: str, source: str | None = None) -> TheoryGraph:
    statements: dict[str, Statement] = {}
    pending: list[tuple[int, Justification]] = []
    uses_lines: dict[str, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("justify"):
            m = _JUSTIFY_RE.match(line)
            if not m:
                raise TheorySyntaxError("expected 'justify <claim> <- <id>,<id>,...'").at(lineno, source)
            premises = tuple(p.strip() for p in m.group(2).split(","))
            pending.append((lineno, Justification(m.group(1), premises)))
            continue
        m = _STATEMENT_RE.match(line)
        if not m:
            raise TheorySyntaxError(f"cannot parse {line!r}").at(lineno, source)
        keyword, sid, body = m.groups()
        if sid in statements:
            raise DuplicateId(f"duplicate id {sid}").at(lineno, source)
        uses: tuple[str, ...] = ()
        if keyword == "def":
            um = _USES_RE.match(body)
            if um:
                body = um.group(1)
                uses = tuple(u.strip() for u in um.group(2).split(","))
                uses_lines[sid] = lineno
        statements[sid] = Statement(sid, body.strip(), _KEYWORDS[keyword], uses)

    for sid, lineno in uses_lines.items():
        for u in statements[sid].uses:
            if u not in statements:
                raise UnknownId(f"unknown id {u}").at(lineno, source)
    for lineno, j in pending:
        try:
            _check_justification(statements, j)
        except (UnknownId, JustifiedNonClaim, TheorySyntaxError) as exc:
            raise exc.at(lineno, source)
    return TheoryGraph(statements, tuple(j for _, j in pending))


def unjustified_claims(graph: TheoryGraph) -> list[str]:
    justified = {j.target for j in graph.justifications}
    return sorted(
        sid for sid, s in graph.statements.items() if s.kind is Kind.CLAIM and sid not in justified
    )


def detect_cycles(graph: TheoryGraph) -> list[tuple[str, ...]]:
    """All elementary cycles, each rotated to start at its smallest id, sorted."""
    order = sorted(graph.statements)
    cycles: list[tuple[str, ...]] = []
    for i, start in enumerate(order):
        allowed = set(order[i:])
        path = [start]
        on_path = {start}

        def walk(node: str) -> None:
            for nxt in graph.depends_on(node):
                if nxt == start:
                    cycles.append(tuple(path))
                elif nxt in allowed and nxt not in on_path:
                    path.append(nxt)
                    on_path.add(nxt)
                    walk(nxt)
                    on_path.discard(nxt)
                    path.pop()

        walk(start)
    return sorted(cycles)


def _reachable(graph: TheoryGraph, root: str) -> set[str]:
    seen = {root}
    stack = [root]
    while stack:
        for nxt in graph.depends_on(stack.pop()):
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return seen


def _require_acyclic_from(graph: TheoryGraph, root: str) -> set[str]:
    if root not in graph.statements:
        raise UnknownId(f"unknown id {root}")
    reach = _reachable(graph, root)
    for cycle in detect_cycles(graph):
        if reach.intersection(cycle):
            raise CyclicDependency(cycle)
    return reach


def foundation(graph: TheoryGraph, claim: str) -> set[str]:
    """Axioms, definitions and givens the statement ultimately rests on."""
    reach = _require_acyclic_from(graph, claim)
    return {sid for sid in reach if graph.kind(sid) is not Kind.CLAIM}


def render_tree(graph: TheoryGraph, claim: str) -> str:
    _require_acyclic_from(graph, claim)
    lines: list[str] = []

    def emit(sid: str, depth: int) -> None:
        s = graph.statements[sid]
        text = f": {s.text}" if s.text else ""
        lines.append(f"{'  ' * depth}{sid} [{s.kind.value}]{text}")
        for child in graph.depends_on(sid):
            emit(child, depth + 1)

    emit(claim, 0)
    return "\n".join(lines) + "\n"
