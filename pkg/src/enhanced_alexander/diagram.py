"""Oriented virtual link diagrams as signed Gauss codes and crossing tables.

Virtual crossings are never stored. A diagram is built from one passage
sequence per component; arcs are obtained by cutting each component at its
under-passages. The side convention for the two under-arcs of a crossing is

    w = +1  =>  b1 = incoming under-arc, b2 = outgoing under-arc
    w = -1  =>  b1 = outgoing under-arc, b2 = incoming under-arc

which is the unique rule compatible with all four arc-end configurations of
the torsion argument. Everything else in the package reads b1/b2 from here.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import Iterable

OVER = "O"
UNDER = "U"


class DiagramError(ValueError):
    pass


class GaussCodeSyntaxError(DiagramError):
    pass


class ConsistencyError(DiagramError):
    pass


class SchemaError(DiagramError):
    pass


@dataclass(frozen=True, order=True)
class Token:
    role: str
    label: int
    sign: int

    def __str__(self) -> str:
        return f"{self.role}{self.label}{'+' if self.sign > 0 else '-'}"


@dataclass(frozen=True)
class GaussCode:
    """One passage sequence per component."""

    components: tuple[tuple[Token, ...], ...]

    def __post_init__(self):
        if not self.components:
            raise ConsistencyError("a Gauss code needs at least one component")
        seen: dict[tuple[int, str], int] = {}
        signs: dict[int, int] = {}
        for comp in self.components:
            for tok in comp:
                if tok.role not in (OVER, UNDER) or tok.sign not in (1, -1) or tok.label < 1:
                    raise ConsistencyError(f"bad token {tok!r}")
                key = (tok.label, tok.role)
                if key in seen:
                    raise ConsistencyError(f"crossing {tok.label} has a duplicated {tok.role} passage")
                seen[key] = 1
                if signs.setdefault(tok.label, tok.sign) != tok.sign:
                    raise ConsistencyError(f"crossing {tok.label} has mismatched signs")
        for label in signs:
            for role in (OVER, UNDER):
                if (label, role) not in seen:
                    raise ConsistencyError(f"crossing {label} is missing its {role} passage")

    @property
    def labels(self) -> list[int]:
        return sorted({tok.label for comp in self.components for tok in comp})

    def sign(self, label: int) -> int:
        for comp in self.components:
            for tok in comp:
                if tok.label == label:
                    return tok.sign
        raise KeyError(label)

    def find(self, role: str, label: int) -> tuple[int, int]:
        """(component index 0-based, position) of a passage."""
        for ci, comp in enumerate(self.components):
            for pos, tok in enumerate(comp):
                if tok.role == role and tok.label == label:
                    return ci, pos
        raise KeyError((role, label))

    def __str__(self) -> str:
        return "\n".join(" ".join(str(t) for t in comp) for comp in self.components)


_TOKEN_RE = re.compile(r"([OU])(\d+)([+-])")


def parse_gauss_code(text: str) -> GaussCode:
    """Parse newline-separated component lines of ``O<id><sign>``/``U<id><sign>`` tokens.

    Tokens may be separated by whitespace or written back to back. A blank
    line is a component without classical crossings; trailing blank lines
    are ignored.
    """
    lines = text.split("\n")
    while len(lines) > 1 and not lines[-1].strip():
        lines.pop()
    return GaussCode(tuple(_parse_line(line, k) for k, line in enumerate(lines, 1)))


def _parse_line(line: str, lineno: int) -> tuple[Token, ...]:
    body = line.strip()
    toks = []
    pos = 0
    while pos < len(body):
        if body[pos].isspace():
            pos += 1
            continue
        m = _TOKEN_RE.match(body, pos)
        if not m:
            raise GaussCodeSyntaxError(f"line {lineno}: malformed token at {body[pos:]!r}")
        label = int(m.group(2))
        if label < 1:
            raise GaussCodeSyntaxError(f"line {lineno}: crossing ids must be positive")
        toks.append(Token(m.group(1), label, 1 if m.group(3) == "+" else -1))
        pos = m.end()
    return tuple(toks)


@dataclass(frozen=True)
class Crossing:
    over: int
    b1: int
    b2: int
    w: int


@dataclass(frozen=True)
class Diagram:
    """Crossing-table form of a link diagram.

    Components are numbered 1..mu; arcs and crossings are dense 0-based
    indices. ``labels`` holds the external crossing ids. When the diagram was
    built from passages, ``code`` and ``arc_keys`` are set; ``arc_keys[a]`` is
    ``("c", label)`` for an arc starting at that under-passage or
    ``("k", component)`` for a closed component.
    """

    mu: int
    arc_component: tuple[int, ...]
    crossings: tuple[Crossing, ...]
    labels: tuple[int, ...]
    code: GaussCode | None = field(default=None, compare=True)
    arc_keys: tuple | None = field(default=None, compare=False)

    def __post_init__(self):
        self.validate()

    @property
    def n_arcs(self) -> int:
        return len(self.arc_component)

    @property
    def n_crossings(self) -> int:
        return len(self.crossings)

    def arcs_of(self, i: int) -> list[int]:
        return [a for a, k in enumerate(self.arc_component) if k == i]

    def kappa(self, arc: int) -> int:
        return self.arc_component[arc]

    def crossing_index(self, label: int) -> int:
        return self.labels.index(label)

    def has_passages(self) -> bool:
        return self.code is not None

    def validate(self) -> None:
        if self.mu < 1:
            raise SchemaError("mu must be at least 1")
        if len(self.labels) != len(self.crossings) or len(set(self.labels)) != len(self.labels):
            raise SchemaError("crossing ids must be distinct")
        for k in self.arc_component:
            if not 1 <= k <= self.mu:
                raise SchemaError(f"arc component {k} outside 1..{self.mu}")
        n = self.n_arcs
        under_count = [0] * n
        for c in self.crossings:
            for a in (c.over, c.b1, c.b2):
                if not 0 <= a < n:
                    raise SchemaError(f"crossing references unknown arc {a}")
            if c.w not in (1, -1):
                raise SchemaError("writhe must be +1 or -1")
            if self.arc_component[c.b1] != self.arc_component[c.b2]:
                raise ConsistencyError("under-arcs of a crossing lie on different components")
            under_count[c.b1] += 1
            under_count[c.b2] += 1
        for a, cnt in enumerate(under_count):
            if cnt not in (0, 2):
                raise ConsistencyError(f"arc {a} appears {cnt} times as an under-arc")
        for i in range(1, self.mu + 1):
            arcs = self.arcs_of(i)
            unders = sum(1 for c in self.crossings if self.arc_component[c.b1] == i)
            if len(arcs) != max(1, unders):
                raise ConsistencyError(
                    f"component {i} has {len(arcs)} arcs but {unders} under-passages"
                )
            if unders == 0 and any(under_count[a] for a in arcs):
                raise ConsistencyError(f"component {i} is inconsistent")

    def __str__(self) -> str:
        return table_text(self)


def build_diagram(code: GaussCode) -> Diagram:
    labels = code.labels
    arc_component: list[int] = []
    arc_keys: list = []
    over: dict[int, int] = {}
    incoming: dict[int, int] = {}
    outgoing: dict[int, int] = {}
    for ci, comp in enumerate(code.components, 1):
        unders = [p for p, tok in enumerate(comp) if tok.role == UNDER]
        if not unders:
            arc = len(arc_component)
            arc_component.append(ci)
            arc_keys.append(("k", ci))
            for tok in comp:
                over[tok.label] = arc
            continue
        first = len(arc_component)
        for k, p in enumerate(unders):
            arc_component.append(ci)
            arc_keys.append(("c", comp[p].label))
        m = len(unders)
        # each token belongs to the arc started by the most recent under-passage
        n = len(comp)
        start = unders[0]
        current = first + m - 1
        for step in range(n):
            p = (start + step) % n
            tok = comp[p]
            if tok.role == UNDER:
                incoming[tok.label] = current
                current = first + unders.index(p)
                outgoing[tok.label] = current
            else:
                over[tok.label] = current
    crossings = []
    for lab in labels:
        w = code.sign(lab)
        inc, out = incoming[lab], outgoing[lab]
        b1, b2 = (inc, out) if w == 1 else (out, inc)
        crossings.append(Crossing(over[lab], b1, b2, w))
    return Diagram(
        mu=len(code.components),
        arc_component=tuple(arc_component),
        crossings=tuple(crossings),
        labels=tuple(labels),
        code=code,
        arc_keys=tuple(arc_keys),
    )


def diagram_from_gauss(text: str) -> Diagram:
    return build_diagram(parse_gauss_code(text))


def mirror(d: Diagram) -> Diagram:
    """Reflect the diagram: every writhe flips and b1, b2 trade places."""
    if d.code is not None:
        comps = tuple(
            tuple(Token(t.role, t.label, -t.sign) for t in comp) for comp in d.code.components
        )
        return build_diagram(GaussCode(comps))
    crossings = tuple(Crossing(c.over, c.b2, c.b1, -c.w) for c in d.crossings)
    return Diagram(d.mu, d.arc_component, crossings, d.labels)


def reverse_component(d: Diagram, i: int) -> Diagram:
    """Reverse the orientation of component ``i`` (1-based)."""
    if not 1 <= i <= d.mu:
        raise IndexError(f"component {i} outside 1..{d.mu}")
    if d.code is None:
        raise DiagramError("reversing a component needs passage sequences")
    comps = d.code.components
    roles: dict[int, set] = {}
    for tok in comps[i - 1]:
        roles.setdefault(tok.label, set()).add(tok.role)
    # a crossing changes sign iff exactly one of its two strands is reversed
    flip = {lab for lab, r in roles.items() if len(r) == 1}
    new = []
    for ci, comp in enumerate(comps, 1):
        seq = list(reversed(comp)) if ci == i else list(comp)
        new.append(tuple(Token(t.role, t.label, -t.sign if t.label in flip else t.sign) for t in seq))
    return build_diagram(GaussCode(tuple(new)))


# serialization


def to_dict(d: Diagram) -> dict:
    out = {
        "mu": d.mu,
        "arcs": [{"id": a, "component": k} for a, k in enumerate(d.arc_component)],
        "crossings": [
            {"id": lab, "over": c.over, "b1": c.b1, "b2": c.b2, "w": c.w}
            for lab, c in zip(d.labels, d.crossings)
        ],
    }
    if d.code is not None:
        out["passages"] = [" ".join(str(t) for t in comp) for comp in d.code.components]
    return out


def serialize(d: Diagram) -> str:
    return json.dumps(to_dict(d), indent=2)


def from_dict(obj) -> Diagram:
    if not isinstance(obj, dict):
        raise SchemaError("crossing table must be a JSON object")
    try:
        if obj.get("passages") is not None:
            passages = obj["passages"]
            if not isinstance(passages, list) or not all(isinstance(p, str) for p in passages):
                raise SchemaError("passages must be a list of strings")
            comps = tuple(_parse_line(p, k) for k, p in enumerate(passages, 1))
            d = build_diagram(GaussCode(comps))
            if "mu" in obj and obj["mu"] != d.mu:
                raise SchemaError("mu disagrees with passages")
            if "crossings" in obj:
                table = from_dict({k: v for k, v in obj.items() if k != "passages"})
                if _table_signature(table) != _table_signature(d):
                    raise ConsistencyError("crossing table disagrees with passages")
            return d
        mu = obj["mu"]
        arcs = obj["arcs"]
        crossings = obj["crossings"]
        if not isinstance(mu, int) or not isinstance(arcs, list) or not isinstance(crossings, list):
            raise SchemaError("mu must be an int, arcs and crossings lists")
        ids = [a["id"] for a in arcs]
        if len(set(ids)) != len(ids):
            raise SchemaError("arc ids must be distinct")
        order = sorted(ids)
        arc_index = {aid: k for k, aid in enumerate(order)}
        comp_of = {a["id"]: a["component"] for a in arcs}
        arc_component = tuple(comp_of[aid] for aid in order)
        rows = sorted(crossings, key=lambda c: c["id"])
        table = []
        for c in rows:
            if c["w"] not in (1, -1):
                raise SchemaError("w must be +1 or -1")
            table.append(Crossing(arc_index[c["over"]], arc_index[c["b1"]], arc_index[c["b2"]], c["w"]))
        labels = tuple(c["id"] for c in rows)
        if any(not isinstance(x, int) for x in labels + tuple(ids)) or any(
            not isinstance(k, int) for k in arc_component
        ):
            raise SchemaError("ids and components must be integers")
        return Diagram(mu, arc_component, tuple(table), labels)
    except (KeyError, TypeError) as exc:
        raise SchemaError(f"malformed crossing table: {exc}") from exc


def _table_signature(d: Diagram):
    return (d.mu, d.arc_component, d.crossings, d.labels)


def deserialize(text: str) -> Diagram:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from exc
    return from_dict(obj)


def load_diagram(text: str) -> Diagram:
    """Accept either a crossing-table JSON document or a Gauss code."""
    if text.lstrip().startswith("{"):
        return deserialize(text)
    return diagram_from_gauss(text)


def table_text(d: Diagram) -> str:
    lines = [f"mu = {d.mu}", "arcs: " + ", ".join(f"{a}:K{k}" for a, k in enumerate(d.arc_component))]
    lines.append("crossing  over  b1  b2   w")
    for lab, c in zip(d.labels, d.crossings):
        lines.append(f"{lab:>8}  {c.over:>4}  {c.b1:>2}  {c.b2:>2}  {c.w:+d}")
    return "\n".join(lines)


def relabel_canonical(code: GaussCode) -> GaussCode:
    """Rename crossing ids 1, 2, ... in order of first appearance."""
    mapping: dict[int, int] = {}
    for comp in code.components:
        for tok in comp:
            mapping.setdefault(tok.label, len(mapping) + 1)
    return GaussCode(
        tuple(tuple(Token(t.role, mapping[t.label], t.sign) for t in comp) for comp in code.components)
    )


def gauss_from_tokens(components: Iterable[Iterable[Token]]) -> GaussCode:
    return GaussCode(tuple(tuple(c) for c in components))
