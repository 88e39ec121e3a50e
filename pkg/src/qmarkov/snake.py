"""Weighted snake graphs, perfect-matching enumeration and the transfer-matrix count.

Coordinates are in box units: box ``(x, y)`` is the unit square with lower
left corner ``(x, y)``.  An edge is the pair of its endpoints in
lexicographic order, and its weight is stored as an exponent of q in
{-1, 0, 1}.
"""
from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

from .cohn import cohn_a, cohn_b
from .errors import MalformedInputError, OracleBoundExceededError, UnsupportedLabelError
from .farey import ONE_LABEL, ZERO_LABEL, FareyRational, christoffel_word, recode_ab
from .laurent import Q, LaurentPoly
from .mutation import TWO_Q, markov_number

DEFAULT_ORACLE_BOUND = 10**6

Point = tuple[int, int]
Edge = tuple[Point, Point]


def oracle_bound() -> int:
    raw = os.environ.get("QMARKOV_ORACLE_BOUND")
    if raw is None:
        return DEFAULT_ORACLE_BOUND
    value = int(raw)
    if value < 1:
        raise MalformedInputError("QMARKOV_ORACLE_BOUND must be >= 1")
    return value


def _edge(a: Point, b: Point) -> Edge:
    return (a, b) if a <= b else (b, a)


def box_edges(x: int, y: int) -> dict[str, Edge]:
    return {
        "S": _edge((x, y), (x + 1, y)),
        "N": _edge((x, y + 1), (x + 1, y + 1)),
        "W": _edge((x, y), (x, y + 1)),
        "E": _edge((x + 1, y), (x + 1, y + 1)),
    }


@dataclass(frozen=True)
class Box:
    x: int
    y: int
    step: str | None  # "R" or "U" from the previous box; None for the first


@dataclass(frozen=True)
class Matching:
    edges: frozenset


@dataclass(frozen=True)
class SnakeGraph:
    label: FareyRational
    word: str  # the A/B word the graph was built from
    boxes: tuple[Box, ...]
    weights: dict = field(hash=False)  # Edge -> exponent, every edge present
    tilde: bool = False

    def edges(self) -> list[Edge]:
        return sorted(self.weights)

    def vertices(self) -> list[Point]:
        return sorted({v for e in self.weights for v in e})

    def weight(self, e: Edge) -> int:
        return self.weights[e]

    def vertex_order(self) -> list[Point]:
        """Vertices in order of first appearance along the snake."""
        seen: dict[Point, None] = {}
        for b in self.boxes:
            for v in ((b.x, b.y), (b.x, b.y + 1), (b.x + 1, b.y), (b.x + 1, b.y + 1)):
                seen.setdefault(v, None)
        return list(seen)

    def prefix(self, k: int) -> "SnakeGraph":
        """The partial snake made of the first k boxes."""
        if not 1 <= k <= len(self.boxes):
            raise MalformedInputError(f"prefix length {k} out of range")
        boxes = self.boxes[:k]
        keep = {e for b in boxes for e in box_edges(b.x, b.y).values()}
        weights = {e: w for e, w in self.weights.items() if e in keep}
        return SnakeGraph(self.label, self.word, boxes, weights, self.tilde)

    def nonunit_edges(self) -> dict[Edge, int]:
        return {e: w for e, w in self.weights.items() if w}

    def to_json(self) -> dict:
        return {
            "label": str(self.label),
            "word": self.word,
            "tilde": self.tilde,
            "boxes": [[b.x, b.y, b.step] for b in self.boxes],
            "edges": [
                {"from": list(a), "to": list(b), "weight_exp": self.weights[(a, b)]}
                for a, b in self.edges()
            ],
        }


class _Builder:
    def __init__(self):
        self.boxes: list[Box] = []
        self.weights: dict[Edge, int] = {}

    def add(self, step: str | None) -> Box:
        if step is None:
            x, y = 0, 0
        else:
            last = self.boxes[-1]
            x, y = (last.x + 1, last.y) if step == "R" else (last.x, last.y + 1)
        box = Box(x, y, step)
        self.boxes.append(box)
        for e in box_edges(x, y).values():
            self.weights.setdefault(e, 0)
        return box

    def mark(self, box: Box, side: str, exp: int):
        self.weights[box_edges(box.x, box.y)[side]] = exp


def build_snake(t: FareyRational) -> SnakeGraph:
    """The weighted snake graph G_t(q), assembled piece by piece from the A/B word."""
    if t == ZERO_LABEL:
        raise UnsupportedLabelError("label 0/1 has no snake graph (m = 1)")
    word = recode_ab(christoffel_word(t))
    g = _Builder()
    if t == ONE_LABEL:
        b = g.add(None)
        g.mark(b, "W", -1)
        g.mark(b, "S", 1)
        return SnakeGraph(t, word, tuple(g.boxes), g.weights)

    assert word[0] == "A" and word[-1] == "B", word
    # initial A
    b1 = g.add(None)
    b2 = g.add("R")
    g.mark(b1, "W", -1)
    g.mark(b1, "S", 1)
    g.mark(b2, "S", -1)
    for letter in word[1:-1]:
        if letter == "A":
            b1, b2 = g.add("R"), g.add("R")
            g.mark(b1, "S", 1)
            g.mark(b2, "S", -1)
        else:
            b1, b2, b3, b4 = g.add("R"), g.add("U"), g.add("U"), g.add("R")
            g.mark(b1, "S", 1)
            g.mark(b2, "W", 1)
            g.mark(b3, "W", -1)
            g.mark(b4, "S", -1)
    # final B
    g.mark(g.add("R"), "S", 1)
    return SnakeGraph(t, word, tuple(g.boxes), g.weights)


def build_tilde_snake(t: FareyRational) -> SnakeGraph:
    """G_t(q) with the weight of the first horizontal (south) edge set to 1."""
    g = build_snake(t)
    first = g.boxes[0]
    weights = dict(g.weights)
    weights[box_edges(first.x, first.y)["S"]] = 0
    return SnakeGraph(g.label, g.word, g.boxes, weights, tilde=True)


def alternating_boundary_weights(boxes: tuple[Box, ...]) -> dict[Edge, int]:
    """Weights from the boundary rule alone, independent of the piece grammar.

    Western boundary edges alternate q^-1, q, ... bottom to top; southern
    boundary edges alternate q, q^-1, ... left to right; everything else is 1.
    """
    weights: dict[Edge, int] = {}
    for b in boxes:
        for e in box_edges(b.x, b.y).values():
            weights.setdefault(e, 0)
    west_exp, south_exp = -1, 1
    for b in boxes:
        sides = box_edges(b.x, b.y)
        if b.step != "R":
            weights[sides["W"]] = west_exp
            west_exp = -west_exp
        if b.step != "U":
            weights[sides["S"]] = south_exp
            south_exp = -south_exp
    return weights


def lower_boundary_word(g: SnakeGraph) -> str:
    """Read the lower boundary as an X/Y word.

    Horizontal unit steps of the boxes are half letters, except that the first
    horizontal step and the last vertical step count as whole letters.
    """
    steps = []
    n = len(g.boxes)
    for i, b in enumerate(g.boxes):
        if b.step != "U":
            steps.append("X")
        nxt = g.boxes[i + 1].step if i + 1 < n else None
        if nxt != "R":
            steps.append("Y")
    if steps[0] != "X" or steps[-1] != "Y":
        raise MalformedInputError("boundary does not start east and end north")
    middle = steps[1:-1]
    if len(middle) % 2:
        raise MalformedInputError("odd interior boundary length")
    letters = ["X"]
    for i in range(0, len(middle), 2):
        if middle[i] != middle[i + 1]:
            raise MalformedInputError("boundary steps do not pair up")
        letters.append(middle[i])
    letters.append("Y")
    return "".join(letters)


# -- brute force ----------------------------------------------------------


def _adjacency(g: SnakeGraph):
    order = g.vertex_order()
    index = {v: i for i, v in enumerate(order)}
    forward: list[list[tuple[int, Edge]]] = [[] for _ in order]
    for e in g.edges():
        i, j = index[e[0]], index[e[1]]
        if i > j:
            i, j = j, i
        forward[i].append((j, e))
    return order, forward


def _check_bound(g: SnakeGraph, bound: int | None):
    bound = oracle_bound() if bound is None else bound
    m = markov_number(g.label)
    if m > bound:
        raise OracleBoundExceededError(
            f"m^{g.label} = {m} matchings exceeds the oracle bound {bound}"
        )


def enumerate_matchings(g: SnakeGraph, bound: int | None = None) -> Iterator[Matching]:
    """Yield every perfect matching of g.

    Always matches the earliest uncovered vertex (in snake order) to a later
    neighbor, so each matching is produced exactly once.
    """
    _check_bound(g, bound)
    order, forward = _adjacency(g)
    n = len(order)
    used = [False] * n
    chosen: list[Edge] = []

    def rec(i: int) -> Iterator[Matching]:
        while i < n and used[i]:
            i += 1
        if i == n:
            yield Matching(frozenset(chosen))
            return
        used[i] = True
        for j, e in forward[i]:
            if not used[j]:
                used[j] = True
                chosen.append(e)
                yield from rec(i + 1)
                chosen.pop()
                used[j] = False
        used[i] = False

    yield from rec(0)


def matching_weight(g: SnakeGraph, m: Matching) -> int:
    return sum(g.weights[e] for e in m.edges)


def matching_exponents(g: SnakeGraph, bound: int | None = None) -> np.ndarray:
    """Weight exponent of every perfect matching, one array entry per matching.

    Same enumeration as :func:`enumerate_matchings`, run breadth-first over
    numpy arrays of vertex bitmasks so that ~10^6 matchings stay cheap.
    """
    _check_bound(g, bound)
    order, forward = _adjacency(g)
    n = len(order)
    if n > 64:
        return np.array([matching_weight(g, m) for m in enumerate_matchings(g, bound)], dtype=np.int64)
    masks = np.zeros(1, dtype=np.uint64)
    exps = np.zeros(1, dtype=np.int64)
    for i in range(n):
        bit = np.uint64(1 << i)
        free = (masks & bit) == 0
        parts_m, parts_e = [masks[~free]], [exps[~free]]
        fm, fe = masks[free], exps[free]
        for j, e in forward[i]:
            jbit = np.uint64(1 << j)
            ok = (fm & jbit) == 0
            parts_m.append(fm[ok] | (bit | jbit))
            parts_e.append(fe[ok] + g.weights[e])
        masks = np.concatenate(parts_m)
        exps = np.concatenate(parts_e)
    return exps


def weighted_match_count_bruteforce(g: SnakeGraph, bound: int | None = None) -> LaurentPoly:
    """Sum of q^(weight) over all perfect matchings, by enumeration."""
    exps = matching_exponents(g, bound)
    if exps.size == 0:
        return LaurentPoly()
    lo = int(exps.min())
    counts = np.bincount(exps - lo)
    return LaurentPoly({lo + k: int(c) for k, c in enumerate(counts) if c})


def weighted_match_count_listing(g: SnakeGraph, bound: int | None = None) -> LaurentPoly:
    """Same as the brute-force count, from the explicit Matching objects."""
    tally = Counter(matching_weight(g, m) for m in enumerate_matchings(g, bound))
    return LaurentPoly(tally)


# -- transfer matrices ------------------------------------------------------


def _initial_mu(g: SnakeGraph) -> tuple[LaurentPoly, LaurentPoly]:
    """mu_1, mu_2 of the first two boxes (a horizontal domino) from the graph's weights."""
    w = lambda e: LaurentPoly.monomial(g.weights[e])  # noqa: E731
    b1, b2 = g.boxes[0], g.boxes[1]
    s1, s2 = box_edges(b1.x, b1.y), box_edges(b2.x, b2.y)
    mu1 = w(s1["W"]) * w(s1["E"]) + w(s1["S"]) * w(s1["N"])
    mu2 = (w(s1["W"]) * w(s1["E"]) + w(s1["S"]) * w(s1["N"])) * w(s2["E"]) + w(s1["W"]) * w(s2["S"]) * w(s2["N"])
    return mu1, mu2


def mu_labels(g: SnakeGraph) -> list[LaurentPoly]:
    """mu_i for every prefix of the snake, by the piece attachment recurrences."""
    if len(g.boxes) == 1:
        s = box_edges(g.boxes[0].x, g.boxes[0].y)
        w = lambda e: LaurentPoly.monomial(g.weights[e])  # noqa: E731
        return [w(s["W"]) * w(s["E"]) + w(s["S"]) * w(s["N"])]
    q = Q
    qi = LaurentPoly.monomial(-1)
    q2, qi2 = LaurentPoly.monomial(2), LaurentPoly.monomial(-2)
    a1, a2 = _initial_mu(g)
    out = [a1, a2]
    for letter in g.word[1:-1]:
        if letter == "A":
            b1 = a2 + q * a1
            b2 = b1 + qi * a2
            out += [b1, b2]
        else:
            c1 = a2 + q * a1
            c2 = c1 + q2 * a1
            b1 = c2 + qi * c1
            b2 = b1 + qi2 * c1
            out += [c1, c2, b1, b2]
        a1, a2 = b1, b2
    out.append(q * a1 + a2)
    return out


def weighted_match_count_transfer(t: FareyRational, tilde: bool = False) -> LaurentPoly:
    """(q 1) M_s ... M_1 (mu_1, mu_2)^T with M_k = A(1)_q or B(1)_q per letter.

    The middle letters w_1..w_s of the word A w_1..w_s B are applied to the
    vector first to last.  t = 1/1 has no such decomposition and is returned
    directly.
    """
    if t == ZERO_LABEL:
        raise UnsupportedLabelError("label 0/1 has no snake graph (m = 1)")
    qi, qi2 = LaurentPoly.monomial(-1), LaurentPoly.monomial(-2)
    if t == ONE_LABEL:
        return (1 + qi) if tilde else TWO_Q
    word = recode_ab(christoffel_word(t))
    if tilde:
        mu1, mu2 = 1 + qi, 1 + qi + qi2
    else:
        mu1, mu2 = Q + qi, Q + qi + qi2
    mats = {"A": cohn_a(1), "B": cohn_b(1)}
    for letter in word[1:-1]:
        m = mats[letter]
        mu1, mu2 = m.e11 * mu1 + m.e12 * mu2, m.e21 * mu1 + m.e22 * mu2
    return Q * mu1 + mu2


# -- export ---------------------------------------------------------------


def _weight_label(exp: int) -> str | None:
    return {1: "q", -1: "1/q"}.get(exp)


def export_dot(g: SnakeGraph) -> str:
    """Graphviz text with nodes pinned to the grid; only nonunit edges are labelled."""
    name = lambda v: f"v{v[0]}_{v[1]}"  # noqa: E731
    lines = [f'graph "snake_{g.label.numerator}_{g.label.denominator}" {{']
    lines.append("  node [shape=point];")
    for v in g.vertices():
        lines.append(f'  {name(v)} [pos="{v[0]},{v[1]}!"];')
    for a, b in g.edges():
        label = _weight_label(g.weights[(a, b)])
        attrs = f' [label="{label}", color={"red" if label == "q" else "blue"}, penwidth=2]' if label else ""
        lines.append(f"  {name(a)} -- {name(b)}{attrs};")
    lines.append("}")
    return "\n".join(lines) + "\n"
