"""Named example diagrams and random diagram generators."""
from __future__ import annotations

import random

from .diagram import Diagram, Token, build_diagram, diagram_from_gauss, from_dict, gauss_from_tokens

GAUSS = {
    "unknot": "",
    "kink": "O1+ U1+",
    "trefoil": "O1+ U2+ O3+ U1+ O2+ U3+",
    "hopf": "O1+ U2+\nU1+ O2+",
    "virtual_hopf": "U1+\nO1+",
    # Borromean rings, all components counterclockwise; arcs u v | w x | y z
    "borromean": "U4- O2+ U1+ O5-\nU5- O3+ U2+ O6-\nU6- O1+ U3+ O4-",
    # the same rings with every component clockwise
    "borromean_prime": "U1- O2- U4+ O5+\nU2- O3- U5+ O6+\nU3- O1- U6+ O4+",
    # three strands in the left R3 configuration
    "r3_left": "O2- O1+\nU1+ O3+\nU3+ U2-",
}

CLASSICAL = ("unknot", "kink", "trefoil", "hopf", "borromean", "borromean_prime")


def fixture(name: str) -> Diagram:
    return diagram_from_gauss(GAUSS[name])


def borromean_table() -> dict:
    """Crossing table of the Borromean rings with arcs u, v, w, x, y, z = 0..5."""
    u, v, w, x, y, z = range(6)
    rows = [
        (1, y, u, v, 1),
        (2, u, w, x, 1),
        (3, w, y, z, 1),
        (4, z, u, v, -1),
        (5, v, w, x, -1),
        (6, x, y, z, -1),
    ]
    return {
        "mu": 3,
        "arcs": [{"id": a, "component": 1 + a // 2} for a in range(6)],
        "crossings": [{"id": c, "over": o, "b1": b1, "b2": b2, "w": s} for c, o, b1, b2, s in rows],
    }


def borromean_from_table() -> Diagram:
    return from_dict(borromean_table())


def random_gauss_diagram(rng: random.Random, n_crossings: int, n_components: int = 1) -> Diagram:
    """Uniformly shuffled passages: a random (generally virtual) diagram.

    Every component gets at least one passage when there are enough
    crossings; signs are independent fair coins.
    """
    tokens = []
    for lab in range(1, n_crossings + 1):
        s = rng.choice((1, -1))
        tokens += [Token("O", lab, s), Token("U", lab, s)]
    rng.shuffle(tokens)
    comps: list[list[Token]] = [[] for _ in range(n_components)]
    for k, tok in enumerate(tokens):
        if k < n_components:
            comps[k].append(tok)
        else:
            comps[rng.randrange(n_components)].append(tok)
    return build_diagram(gauss_from_tokens(comps))
