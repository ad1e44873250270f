"""Reidemeister and welded moves on passage sequences, with explicit transports.

Every move is a rewrite of the Gauss code. Crossing ids survive a move;
new crossings take fresh ids above the current maximum. Arcs are matched
across a move by their key (the under-passage that starts them, or the
component for a closed loop).

Kinds and their local patterns:

* ``R1a``: a kink ``U c+ O c+`` on one strand.
* ``R1b``: a kink ``O c+ U c+`` on one strand.
* ``R2``: an over strand with adjacent ``O X O Y`` and an under strand whose
  adjacent passages ``U P+ U N-`` hit the same pair, the middle arc being
  ``b2`` at both crossings.
* ``R3``: left configuration ``O c2 O c1`` / ``U c1 O c3`` / ``U c3+ U c2-``
  (or ``U c2+ U c3-``) with ``c1`` positive; the right configuration swaps
  each of the three token pairs.
* ``Welded``: swap two adjacent over-passages.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .diagram import OVER, UNDER, Diagram, GaussCode, Token, build_diagram
from .laurent import ONE, ONE_MINUS_T, T, T_INV, ZERO, LaurentPoly
from .modalg import MembershipCertificate, PresentedModule
from .peripheral import longitude
from .presentation import FreeElement, combine_relators, phi, relator

KINDS = ("R1a", "R1b", "R2", "R3", "Welded")
DIRECTIONS = ("insert", "delete")


class InvalidSite(ValueError):
    pass


@dataclass(frozen=True)
class MoveSite:
    """A move kind, a direction and the location data that pins it down.

    ``data`` layouts:
    R1 insert ``(component, gap)``; R1 delete ``(label,)``;
    R2 insert ``(over component, over gap, under component, under gap, reversed, overs_first)``;
    R2 delete ``(positive label, negative label)``;
    R3 either direction ``(c1, c2, c3)``; Welded ``(component, position)``.
    Components are 1-based; gaps index the slot before a token.
    """

    kind: str
    direction: str
    data: tuple

    def to_json(self) -> dict:
        return {"kind": self.kind, "direction": self.direction, "data": list(self.data)}

    @classmethod
    def from_json(cls, obj: Mapping) -> "MoveSite":
        return cls(obj["kind"], obj["direction"], tuple(obj["data"]))


@dataclass
class MoveTransport:
    site: MoveSite
    domain: Diagram
    codomain: Diagram
    arc_map: dict  # domain arc -> FreeElement over codomain arcs
    relator_table: dict  # domain crossing -> {codomain crossing: LaurentPoly}

    def table_json(self) -> dict:
        out = {}
        for c, combo in sorted(self.relator_table.items()):
            out[str(self.domain.labels[c])] = {
                str(self.codomain.labels[k]): str(v) for k, v in sorted(combo.items())
            }
        return out


def transport_element(tr: MoveTransport, x: FreeElement) -> FreeElement:
    out = FreeElement()
    for arc, lam in x.coeffs.items():
        out = out + tr.arc_map[arc].scale(lam)
    return out


# ------------------------------------------------------------------ helpers


def _comps(d: Diagram) -> list[list[Token]]:
    if d.code is None:
        raise InvalidSite("moves need passage sequences")
    return [list(c) for c in d.code.components]


def _rebuild(comps: Sequence[Sequence[Token]]) -> Diagram:
    return build_diagram(GaussCode(tuple(tuple(c) for c in comps)))


def _positions(comps) -> dict[tuple[str, int], tuple[int, int]]:
    return {(tok.role, tok.label): (ci, p) for ci, comp in enumerate(comps) for p, tok in enumerate(comp)}


def _next(comps, ci: int, p: int) -> Token:
    comp = comps[ci]
    return comp[(p + 1) % len(comp)]


def _key_index(d: Diagram) -> dict:
    return {k: a for a, k in enumerate(d.arc_keys)}


def _gen(a: int) -> FreeElement:
    return FreeElement.generator(a)


def _signs(d: Diagram) -> dict[int, int]:
    return {lab: x.w for lab, x in zip(d.labels, d.crossings)}


def _fresh(d: Diagram) -> int:
    return max(d.labels, default=0) + 1


def _combo_add(dst: dict, f: LaurentPoly, src: Mapping) -> None:
    for k, v in src.items():
        nv = dst.get(k, ZERO) + f * v
        if nv:
            dst[k] = nv
        else:
            dst.pop(k, None)


def _origin_key(big: Diagram, arc: int, new: set[int]):
    """Key of the arc of the smaller diagram that contains big arc ``arc``."""
    key = big.arc_keys[arc]
    if key[0] == "k" or key[1] not in new:
        return key
    comps = big.code.components
    ci, p = _positions(comps)[(UNDER, key[1])]
    comp = comps[ci]
    for step in range(1, len(comp)):
        tok = comp[(p - step) % len(comp)]
        if tok.role == UNDER and tok.label not in new:
            return ("c", tok.label)
    return ("k", ci + 1)


def _r2_middle(big: Diagram, pos_label: int, neg_label: int) -> int:
    xp = big.crossings[big.crossing_index(pos_label)]
    xn = big.crossings[big.crossing_index(neg_label)]
    if xp.b2 != xn.b2:
        raise InvalidSite("R2 pair does not share its middle arc as b2")
    return xp.b2


def _shrink(site: MoveSite, big: Diagram, small: Diagram, new: set[int], r2: tuple[int, int] | None) -> MoveTransport:
    """Transport from a diagram to the one with crossings ``new`` removed."""
    sidx = _key_index(small)
    origin = {a: sidx[_origin_key(big, a, new)] for a in range(big.n_arcs)}
    arc_map = {a: _gen(origin[a]) for a in range(big.n_arcs)}
    if r2 is not None:
        p_lab, _ = r2
        xp = big.crossings[big.crossing_index(p_lab)]
        mid = _r2_middle(big, *r2)
        arc_map[mid] = _gen(origin[xp.over]).scale(ONE_MINUS_T) + _gen(origin[xp.b1]).scale(T)
    table = {}
    for c, lab in enumerate(big.labels):
        table[c] = {} if lab in new else {small.crossing_index(lab): ONE}
    return MoveTransport(site, big, small, arc_map, table)


def _grow(site: MoveSite, small: Diagram, big: Diagram, new: set[int], r2: tuple[int, int] | None) -> MoveTransport:
    """Transport from a diagram to one with the crossings ``new`` inserted.

    Each small arc goes to its first piece in the big diagram. The other
    pieces differ from it by explicit multiples of the new relators, which
    yields the relator table.
    """
    bidx = _key_index(big)
    comps = big.code.components
    pos = _positions(comps)
    middles = set()
    if r2 is not None:
        middles.add(_r2_middle(big, *r2))
    rel_idx = {lab: big.crossing_index(lab) for lab in new}

    canon: dict[int, int] = {}
    for a, key in enumerate(small.arc_keys):
        if key in bidx:
            canon[a] = bidx[key]
        else:
            ci = key[1]
            canon[a] = next(b for b in big.arcs_of(ci) if b not in middles)

    diff: dict[int, dict] = {}
    for a, b in canon.items():
        diff[b] = {}
        key = big.arc_keys[b]
        if key[0] == "k":
            continue
        ci, p = pos[(UNDER, key[1])]
        comp = comps[ci]
        current = b
        pending = None
        for step in range(1, len(comp)):
            tok = comp[(p + step) % len(comp)]
            if tok.role != UNDER:
                continue
            if tok.label not in new:
                break
            nxt = bidx[("c", tok.label)]
            x = big.crossings[rel_idx[tok.label]]
            if r2 is None:
                # kink: b1 - b2 = u * relator with u = 1/t or 1
                u = T_INV if x.over == x.b2 else ONE
                d = dict(diff[current])
                _combo_add(d, -u if x.w == 1 else u, {rel_idx[tok.label]: ONE})
                diff[nxt] = d
            elif pending is None:
                pending = (current, tok.label)
            else:
                prev, plab = pending
                d = dict(diff[prev])
                _combo_add(d, T_INV, {rel_idx[tok.label]: ONE})
                _combo_add(d, -T_INV, {rel_idx[plab]: ONE})
                diff[nxt] = d
                pending = None
            current = nxt

    arc_map = {a: _gen(b) for a, b in canon.items()}
    table = {}
    for c, lab in enumerate(small.labels):
        cb = big.crossing_index(lab)
        xb = big.crossings[cb]
        combo = {cb: ONE}
        _combo_add(combo, -ONE_MINUS_T, diff[xb.over])
        _combo_add(combo, -T, diff[xb.b1])
        _combo_add(combo, ONE, diff[xb.b2])
        table[c] = combo
    return MoveTransport(site, small, big, arc_map, table)


def _identity_by_key(site: MoveSite, d: Diagram, d2: Diagram) -> MoveTransport:
    idx = _key_index(d2)
    arc_map = {a: _gen(idx[k]) for a, k in enumerate(d.arc_keys)}
    table = {c: {d2.crossing_index(lab): ONE} for c, lab in enumerate(d.labels)}
    return MoveTransport(site, d, d2, arc_map, table)


# ------------------------------------------------------------------ R3 patterns


def _r3_match(comps, signs, c1: int, c2: int, c3: int, forward: bool) -> bool:
    pos = _positions(comps)
    try:
        pc2 = pos[(OVER, c2)]
        pc1 = pos[(OVER, c1)]
        qu = pos[(UNDER, c1)]
        qo = pos[(OVER, c3)]
        r3 = pos[(UNDER, c3)]
        r2 = pos[(UNDER, c2)]
    except KeyError:
        return False
    if len({c1, c2, c3}) < 3 or signs[c1] != 1:
        return False

    def adj(a, b):
        return a[0] == b[0] and (a[1] + 1) % len(comps[a[0]]) == b[1]

    if forward:
        ok_p = adj(pc2, pc1)
        ok_q = adj(qu, qo)
        ok_r = (adj(r3, r2) and signs[c3] == 1 and signs[c2] == -1) or (
            adj(r2, r3) and signs[c2] == 1 and signs[c3] == -1
        )
    else:
        ok_p = adj(pc1, pc2)
        ok_q = adj(qo, qu)
        ok_r = (adj(r2, r3) and signs[c2] == -1 and signs[c3] == 1) or (
            adj(r3, r2) and signs[c3] == -1 and signs[c2] == 1
        )
    return ok_p and ok_q and ok_r


def _r3_sites(d: Diagram, forward: bool) -> list[MoveSite]:
    comps = _comps(d)
    signs = _signs(d)
    sites = []
    for comp in comps:
        n = len(comp)
        for p in range(n):
            a, b = comp[p], comp[(p + 1) % n]
            if n < 2 or a.role != OVER or b.role != OVER or a.label == b.label:
                continue
            c2, c1 = (a.label, b.label) if forward else (b.label, a.label)
            ci, qp = _positions(comps)[(UNDER, c1)]
            qcomp = comps[ci]
            nb = qcomp[(qp + (1 if forward else -1)) % len(qcomp)]
            if nb.role != OVER:
                continue
            c3 = nb.label
            if _r3_match(comps, signs, c1, c2, c3, forward):
                sites.append(MoveSite("R3", "insert" if forward else "delete", (c1, c2, c3)))
    return sorted(set(sites), key=lambda s: s.data)


def _apply_r3(d: Diagram, site: MoveSite) -> MoveTransport:
    forward = site.direction == "insert"
    c1, c2, c3 = site.data
    comps = _comps(d)
    signs = _signs(d)
    if not _r3_match(comps, signs, c1, c2, c3, forward):
        raise InvalidSite(f"no R3 pattern at {site.data}")
    pos = _positions(comps)
    w = signs[c3]
    # R strand: which under comes first along the strand
    if forward:
        first, second = (c3, c2) if w == 1 else (c2, c3)
    else:
        first, second = (c2, c3) if w == 1 else (c3, c2)
    new = [list(c) for c in comps]
    for lab_a, role_a, lab_b, role_b in (
        (c1, OVER, c2, OVER),
        (c1, UNDER, c3, OVER),
        (c2, UNDER, c3, UNDER),
    ):
        (ca, pa), (cb, pb) = pos[(role_a, lab_a)], pos[(role_b, lab_b)]
        new[ca][pa], new[cb][pb] = new[cb][pb], new[ca][pa]
    d2 = _rebuild(new)
    first2, second2 = second, first
    idx2 = _key_index(d2)
    mid2 = idx2[("c", first2)]
    out2 = idx2[("c", second2)]
    x_first2 = d2.crossings[d2.crossing_index(first2)]
    in2 = x_first2.b1 if x_first2.w == 1 else x_first2.b2
    arc_map = {}
    special = None
    for a, key in enumerate(d.arc_keys):
        if key == ("c", first):
            special = a
        elif key == ("c", second):
            arc_map[a] = _gen(out2)
        else:
            arc_map[a] = _gen(idx2[key])
    g_in, g_out, g_mid = _gen(in2), _gen(out2), _gen(mid2)
    if forward:
        a4, a6 = (g_in, g_out) if w == 1 else (g_out, g_in)
        arc_map[special] = a4 + (a6 - g_mid).scale(T)
    else:
        a4, a6 = (g_in, g_out) if w == 1 else (g_out, g_in)
        arc_map[special] = a4.scale(T_INV) - g_mid.scale(T_INV) + a6
    i1, i2, i3 = (d2.crossing_index(c) for c in (c1, c2, c3))
    table = {}
    for c, lab in enumerate(d.labels):
        table[c] = {d2.crossing_index(lab): ONE}
    if forward:
        table[d.crossing_index(c3)] = {i1: T - ONE, i2: ONE_MINUS_T, i3: T}
    else:
        table[d.crossing_index(c3)] = {i1: T_INV - ONE, i2: ONE - T_INV, i3: T_INV}
    return MoveTransport(site, d, d2, arc_map, table)


# ------------------------------------------------------------------ site enumeration


def _gaps(comp) -> int:
    return max(len(comp), 1)


def enumerate_sites(d: Diagram, kind: str, direction: str) -> list[MoveSite]:
    if kind not in KINDS or direction not in DIRECTIONS:
        raise InvalidSite(f"unknown move {kind}/{direction}")
    comps = _comps(d)
    sites: list[MoveSite] = []
    if kind in ("R1a", "R1b"):
        if direction == "insert":
            for ci, comp in enumerate(comps, 1):
                sites += [MoveSite(kind, direction, (ci, g)) for g in range(_gaps(comp))]
        else:
            first, then = (UNDER, OVER) if kind == "R1a" else (OVER, UNDER)
            for ci, comp in enumerate(comps):
                for p, tok in enumerate(comp):
                    nxt = _next(comps, ci, p)
                    if tok.role == first and nxt.role == then and nxt.label == tok.label and tok.sign == 1:
                        sites.append(MoveSite(kind, direction, (tok.label,)))
    elif kind == "R2":
        if direction == "insert":
            for oc, ocomp in enumerate(comps, 1):
                for og in range(_gaps(ocomp)):
                    for uc, ucomp in enumerate(comps, 1):
                        for ug in range(_gaps(ucomp)):
                            for rev in (False, True):
                                orders = (True, False) if (oc, og) == (uc, ug) else (True,)
                                for of in orders:
                                    sites.append(MoveSite(kind, direction, (oc, og, uc, ug, rev, of)))
        else:
            for ci, comp in enumerate(comps):
                for p, tok in enumerate(comp):
                    nxt = _next(comps, ci, p)
                    if tok.role == UNDER and nxt.role == UNDER and tok.sign == 1 and nxt.sign == -1:
                        if _r2_overs_adjacent(comps, tok.label, nxt.label):
                            sites.append(MoveSite(kind, direction, (tok.label, nxt.label)))
    elif kind == "R3":
        sites = _r3_sites(d, direction == "insert")
    else:
        for ci, comp in enumerate(comps, 1):
            n = len(comp)
            for p in range(n):
                a, b = comp[p], comp[(p + 1) % n]
                if n >= 2 and a.role == OVER and b.role == OVER and a.label != b.label:
                    sites.append(MoveSite(kind, direction, (ci, p)))
    return sorted(set(sites), key=lambda s: s.data)


def _r2_overs_adjacent(comps, x: int, y: int) -> bool:
    pos = _positions(comps)
    (cx, px), (cy, py) = pos[(OVER, x)], pos[(OVER, y)]
    if cx != cy:
        return False
    n = len(comps[cx])
    return (px + 1) % n == py or (py + 1) % n == px


def _r2_under_ok(comps, signs, p_lab: int, n_lab: int) -> bool:
    pos = _positions(comps)
    cp, pp = pos[(UNDER, p_lab)]
    cn, pn = pos[(UNDER, n_lab)]
    return (
        cp == cn
        and (pp + 1) % len(comps[cp]) == pn
        and signs[p_lab] == 1
        and signs[n_lab] == -1
        and _r2_overs_adjacent(comps, p_lab, n_lab)
    )


# ------------------------------------------------------------------ application


def apply_move(d: Diagram, site: MoveSite) -> tuple[Diagram, MoveTransport]:
    kind, direction, data = site.kind, site.direction, site.data
    comps = _comps(d)
    signs = _signs(d)
    if kind in ("R1a", "R1b"):
        if direction == "insert":
            ci, g = data
            if not (1 <= ci <= len(comps) and 0 <= g < _gaps(comps[ci - 1])):
                raise InvalidSite(f"bad gap {data}")
            lab = _fresh(d)
            pair = [Token(UNDER, lab, 1), Token(OVER, lab, 1)]
            if kind == "R1b":
                pair.reverse()
            comps[ci - 1][g:g] = pair
            big = _rebuild(comps)
            tr = _grow(site, d, big, {lab}, None)
        else:
            (lab,) = data
            if site not in enumerate_sites(d, kind, direction):
                raise InvalidSite(f"no {kind} kink at crossing {lab}")
            small = _rebuild([[t for t in c if t.label != lab] for c in comps])
            tr = _shrink(site, d, small, {lab}, None)
    elif kind == "R2":
        if direction == "insert":
            oc, og, uc, ug, rev, overs_first = data
            for c, g in ((oc, og), (uc, ug)):
                if not (1 <= c <= len(comps) and 0 <= g < _gaps(comps[c - 1])):
                    raise InvalidSite(f"bad gap {data}")
            x, y = _fresh(d), _fresh(d) + 1
            sx, sy = (-1, 1) if rev else (1, -1)
            overs = [Token(OVER, x, sx), Token(OVER, y, sy)]
            unders = [Token(UNDER, y, sy), Token(UNDER, x, sx)] if rev else [Token(UNDER, x, sx), Token(UNDER, y, sy)]
            if (oc, og) == (uc, ug):
                block = overs + unders if overs_first else unders + overs
                comps[oc - 1][og:og] = block
            else:
                edits = sorted([(oc, og, overs), (uc, ug, unders)], key=lambda e: (e[0], e[1]), reverse=True)
                for c, g, toks in edits:
                    comps[c - 1][g:g] = toks
            big = _rebuild(comps)
            pn = (y, x) if rev else (x, y)
            tr = _grow(site, d, big, {x, y}, pn)
        else:
            p_lab, n_lab = data
            if p_lab not in signs or n_lab not in signs or not _r2_under_ok(comps, signs, p_lab, n_lab):
                raise InvalidSite(f"no R2 bigon at {data}")
            small = _rebuild([[t for t in c if t.label not in (p_lab, n_lab)] for c in comps])
            tr = _shrink(site, d, small, {p_lab, n_lab}, (p_lab, n_lab))
    elif kind == "R3":
        tr = _apply_r3(d, site)
    elif kind == "Welded":
        ci, p = data
        if not 1 <= ci <= len(comps):
            raise InvalidSite(f"bad component {ci}")
        comp = comps[ci - 1]
        n = len(comp)
        if not (0 <= p < n and n >= 2 and comp[p].role == OVER and comp[(p + 1) % n].role == OVER):
            raise InvalidSite(f"no adjacent over-passages at {data}")
        q = (p + 1) % n
        comp[p], comp[q] = comp[q], comp[p]
        tr = _identity_by_key(site, d, _rebuild(comps))
    else:
        raise InvalidSite(f"unknown move kind {kind}")
    return tr.codomain, tr


# ------------------------------------------------------------------ verification


@dataclass
class VerificationReport:
    relators_ok: bool
    phi_ok: bool
    longitudes_ok: bool
    failures: list = field(default_factory=list)
    certificates: dict = field(default_factory=dict)  # component -> MembershipCertificate

    @property
    def ok(self) -> bool:
        return self.relators_ok and self.phi_ok and self.longitudes_ok


def verify_transport(d: Diagram, d2: Diagram, tr: MoveTransport, degree_bound: int | None = None,
                     module: PresentedModule | None = None) -> VerificationReport:
    """Check the relator table, phi compatibility and longitude transport."""
    failures = []
    for c in range(d.n_crossings):
        image = transport_element(tr, relator(d, c))
        if image != combine_relators(d2, tr.relator_table[c]):
            failures.append(f"relator {d.labels[c]} does not match its table entry")
    relators_ok = not failures
    for a in range(d.n_arcs):
        if phi(d2, tr.arc_map[a]) != phi(d, _gen(a)):
            failures.append(f"phi does not commute on arc {a}")
    phi_ok = not any("phi" in f for f in failures)
    m2 = module if module is not None else PresentedModule(d2)
    certs = {}
    lon_ok = True
    for i in range(1, d.mu + 1):
        moved = transport_element(tr, longitude(d, i).lift)
        res = m2.element_equal(moved, longitude(d2, i).lift, degree_bound)
        if isinstance(res, MembershipCertificate):
            certs[i] = res
        else:
            lon_ok = False
            failures.append(f"longitude {i} not matched within bound {res.bound}")
    return VerificationReport(relators_ok, phi_ok, lon_ok, failures, certs)


# ------------------------------------------------------------------ random walks


@dataclass(frozen=True)
class MoveWeights:
    """Relative frequencies; inserts outweigh deletions 4:1 by default."""

    r1a_insert: float = 1.0
    r1b_insert: float = 1.0
    r2_insert: float = 2.0
    r1_delete: float = 0.3
    r2_delete: float = 0.3
    r3: float = 0.4
    welded: float = 0.0

    @classmethod
    def welded_mode(cls) -> "MoveWeights":
        return cls(r1a_insert=0.0, r1b_insert=0.0, r2_insert=1.0, r1_delete=0.0, r2_delete=0.25, r3=0.0, welded=3.0)


def _random_site(d: Diagram, rng: random.Random, weights: MoveWeights, max_crossings: int) -> MoveSite | None:
    comps = _comps(d)
    menu = [
        ("R1a+", weights.r1a_insert),
        ("R1b+", weights.r1b_insert),
        ("R2+", weights.r2_insert),
        ("R1-", weights.r1_delete),
        ("R2-", weights.r2_delete),
        ("R3", weights.r3),
        ("W", weights.welded),
    ]
    growth = {"R1a+": 1, "R1b+": 1, "R2+": 2}
    menu = [(k, w) for k, w in menu if w > 0 and d.n_crossings + growth.get(k, 0) <= max_crossings]
    while menu:
        names = [k for k, _ in menu]
        pick = rng.choices(names, weights=[w for _, w in menu])[0]
        if pick in ("R1a+", "R1b+"):
            ci = rng.randrange(len(comps)) + 1
            return MoveSite(pick[:3], "insert", (ci, rng.randrange(_gaps(comps[ci - 1]))))
        if pick == "R2+":
            oc = rng.randrange(len(comps)) + 1
            uc = rng.randrange(len(comps)) + 1
            og = rng.randrange(_gaps(comps[oc - 1]))
            ug = rng.randrange(_gaps(comps[uc - 1]))
            return MoveSite("R2", "insert", (oc, og, uc, ug, rng.random() < 0.5, rng.random() < 0.5))
        if pick == "R1-":
            cands = enumerate_sites(d, "R1a", "delete") + enumerate_sites(d, "R1b", "delete")
        elif pick == "R2-":
            cands = enumerate_sites(d, "R2", "delete")
        elif pick == "R3":
            cands = enumerate_sites(d, "R3", "insert") + enumerate_sites(d, "R3", "delete")
        else:
            cands = enumerate_sites(d, "Welded", "insert")
        if cands:
            return rng.choice(cands)
        menu = [(k, w) for k, w in menu if k != pick]
    return None


def random_equivalent(
    d: Diagram,
    n_moves: int,
    seed: int,
    weights: MoveWeights | None = None,
    max_crossings: int = 30,
) -> tuple[Diagram, list[MoveTransport]]:
    """Apply ``n_moves`` random moves; deterministic in ``seed``."""
    rng = random.Random(seed)
    weights = weights or MoveWeights()
    trail = []
    cur = d
    for _ in range(n_moves):
        site = _random_site(cur, rng, weights, max_crossings)
        if site is None:
            break
        cur, tr = apply_move(cur, site)
        trail.append(tr)
    return cur, trail


def replay(d: Diagram, sites: Sequence[MoveSite]) -> Diagram:
    for site in sites:
        d, _ = apply_move(d, site)
    return d
