"""Colored Jones polynomials of twist knots, and a Kauffman state-sum oracle.

The cyclotomic formula gives J'_{K_p}(N) for every color N.  The state sum
works on explicit PD codes and only reaches N = 2 (the diagram itself,
cabled by e_1 = z), which is enough to cross-check the formula.

PD convention: each crossing is (a, b, c, d), listed counterclockwise
starting from the incoming under-strand; arcs are numbered 1..2c along the
orientation.  The under strand runs a -> c and the over strand joins b, d.
A crossing is positive when the over strand leaves through b.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import product as iproduct
from pathlib import Path
from typing import Sequence

from .habiro import c_prime
from .laurent import ONE, ZERO, LaurentPoly, a_pow, pochhammer, qbrace

__all__ = [
    "PlanarDiagram",
    "TwistKnotInvariant",
    "MalformedDiagram",
    "TooManyCrossings",
    "BadColor",
    "f_coeff",
    "colored_jones",
    "colored_jones_qform",
    "kauffman_oracle",
    "normalized_bracket_invariant",
    "plat_diagram",
    "twist_knot_diagram",
    "load_fixture",
    "MAX_CROSSINGS",
]

MAX_CROSSINGS = 24

LOOP = LaurentPoly({2: -1, -2: -1})  # -A^2 - A^-2


class MalformedDiagram(ValueError):
    pass


class TooManyCrossings(ValueError):
    pass


class BadColor(ValueError):
    pass


@dataclass(frozen=True)
class PlanarDiagram:
    crossings: tuple[tuple[int, int, int, int], ...]
    signs: tuple[int, ...]
    free_loops: int = 0  # crossingless unknotted components

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(tuple(int(v) for v in x) for x in self.crossings))
        object.__setattr__(self, "signs", tuple(int(s) for s in self.signs))

    @property
    def writhe(self) -> int:
        return sum(self.signs)

    def __len__(self) -> int:
        return len(self.crossings)

    def mirror(self) -> "PlanarDiagram":
        """Swap over and under at every crossing.

        Rotating (a, b, c, d) to (d, a, b, c) keeps the counterclockwise
        order and puts the old over-strand (incoming at d or b) underneath.
        """
        out = []
        for (a, b, c, d), s in zip(self.crossings, self.signs):
            # new under strand is the old over strand, entering at b (s<0) or d (s>0)
            out.append((d, a, b, c) if s > 0 else (b, c, d, a))
        return PlanarDiagram(tuple(out), tuple(-s for s in self.signs), self.free_loops)

    def validate(self) -> None:
        """Check arc multiplicities, orientation, signs and connectivity."""
        if len(self.signs) != len(self.crossings):
            raise MalformedDiagram("one sign per crossing is required")
        if any(len(x) != 4 for x in self.crossings):
            raise MalformedDiagram("crossings must be 4-tuples")
        if any(s not in (1, -1) for s in self.signs):
            raise MalformedDiagram("signs must be +1 or -1")
        if not self.crossings:
            return
        count: dict[int, int] = {}
        for x in self.crossings:
            for v in x:
                count[v] = count.get(v, 0) + 1
        bad = sorted(v for v, k in count.items() if k != 2)
        if bad:
            raise MalformedDiagram(f"arcs {bad} do not occur exactly twice")
        m = len(count)
        labels = sorted(count)
        if labels != list(range(1, m + 1)):
            raise MalformedDiagram("arcs must be labelled 1..2c")

        def nxt(v):
            return v % m + 1

        for (a, b, c, d), s in zip(self.crossings, self.signs):
            if c != nxt(a):
                raise MalformedDiagram(f"under strand {a}->{c} does not follow the orientation")
            pos, negv = b == nxt(d), d == nxt(b)
            if not (pos or negv):
                raise MalformedDiagram(f"over strand {b},{d} is not a consecutive pair")
            if pos != negv and (s > 0) != pos:
                raise MalformedDiagram(f"sign {s} inconsistent with crossing {(a, b, c, d)}")
        if self.components() != 1 + self.free_loops:
            raise MalformedDiagram("diagram is not a single knot")

    def components(self) -> int:
        # arcs are joined straight through each crossing: a-c and b-d
        parent = {v: v for x in self.crossings for v in x}

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for a, b, c, d in self.crossings:
            parent[find(a)] = find(c)
            parent[find(b)] = find(d)
        return len({find(v) for v in parent}) + self.free_loops

    def to_json(self) -> dict:
        out = {"crossings": [list(x) for x in self.crossings], "signs": list(self.signs)}
        if self.free_loops:
            out["loops"] = self.free_loops
        return out

    @classmethod
    def from_json(cls, obj) -> "PlanarDiagram":
        try:
            return cls(tuple(tuple(x) for x in obj["crossings"]), tuple(obj["signs"]),
                       int(obj.get("loops", 0)))
        except (KeyError, TypeError, ValueError) as exc:
            raise MalformedDiagram(f"bad PD json: {exc}") from exc


# -- the state sum --------------------------------------------------------------

def kauffman_oracle(d: PlanarDiagram) -> LaurentPoly:
    """Kauffman bracket by brute-force enumeration of all 2^c smoothings.

    A-smoothing at (a, b, c, d) joins a-b and c-d; B-smoothing joins a-d and
    b-c.  Each state contributes A^(#A - #B) (-A^2 - A^-2)^loops, and the
    empty diagram has bracket 1.
    """
    n = len(d.crossings)
    if n > MAX_CROSSINGS:
        raise TooManyCrossings(f"{n} crossings > {MAX_CROSSINGS}")
    if len(d.signs) != n:
        raise MalformedDiagram("one sign per crossing is required")
    base = LOOP ** d.free_loops
    if n == 0:
        return base
    labels = sorted({v for x in d.crossings for v in x})
    index = {v: i for i, v in enumerate(labels)}
    xs = [tuple(index[v] for v in x) for x in d.crossings]
    loop_counts: dict[tuple[int, int], int] = {}  # (#A - #B, loops) -> multiplicity
    for state in iproduct((0, 1), repeat=n):
        parent = list(range(len(labels)))

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        def union(u, v):
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
                return 1
            return 0

        merged = 0
        for (a, b, c, dd), s in zip(xs, state):
            if s == 0:
                merged += union(a, b) + union(c, dd)
            else:
                merged += union(a, dd) + union(b, c)
        loops = len(labels) - merged
        key = (n - 2 * sum(state), loops)
        loop_counts[key] = loop_counts.get(key, 0) + 1
    total = ZERO
    for (e, loops), mult in sorted(loop_counts.items()):
        total = total + (LOOP ** loops).shift(e) * mult
    return total * base


def normalized_bracket_invariant(d: PlanarDiagram) -> LaurentPoly:
    """J'_K(2): writhe-corrected bracket divided by the bracket of the unknot."""
    if d.components() != 1:
        raise MalformedDiagram("normalized invariant needs a single-component diagram")
    raw = kauffman_oracle(d)
    framing = LaurentPoly.monomial(-3 * d.writhe, -1 if d.writhe % 2 else 1)
    return (raw * framing).exact_div(LOOP)


# -- building diagrams ----------------------------------------------------------

def plat_diagram(width: int, caps: Sequence[tuple[int, int]],
                 word: Sequence[tuple[int, int]],
                 cups: Sequence[tuple[int, int]]) -> PlanarDiagram:
    """PD code of a braid-like word closed off by caps on top and cups below.

    Positions are 1..width, left to right; ``word`` lists (i, sign) crossings
    between positions i and i+1 read top to bottom.  For sign +1 the strand
    from top-left to bottom-right passes over.  Caps and cups must pair up
    all positions without crossing each other.
    """
    # ports of crossing x, counterclockwise: 0=TL, 1=BL, 2=BR, 3=TR
    # external graph: node -> neighbour, nodes are ("x", x, port) or cap/cup
    # ends; the two ends of a cap or cup are implicitly joined to each other
    link: dict = {}

    def join(u, v):
        link[u] = v
        link[v] = u

    open_end = {}
    for j, (i, k) in enumerate(caps):
        open_end[i] = ("cap", j, 0)
        open_end[k] = ("cap", j, 1)
    if sorted(open_end) != list(range(1, width + 1)):
        raise MalformedDiagram("caps must pair every position")
    overs = []
    for x, (i, s) in enumerate(word):
        if not 1 <= i < width:
            raise MalformedDiagram(f"generator {i} out of range")
        join(open_end[i], ("x", x, 0))
        join(open_end[i + 1], ("x", x, 3))
        open_end[i] = ("x", x, 1)
        open_end[i + 1] = ("x", x, 2)
        overs.append((0, 2) if s > 0 else (1, 3))
    seen = set()
    for j, (i, k) in enumerate(cups):
        join(open_end[i], ("cup", j, 0))
        join(open_end[k], ("cup", j, 1))
        seen.update((i, k))
    if sorted(seen) != list(range(1, width + 1)):
        raise MalformedDiagram("cups must pair every position")

    def next_port(node):
        # follow external connections through caps/cups to the next crossing port
        cur = link[node]
        while cur[0] != "x":
            cur = link[(cur[0], cur[1], 1 - cur[2])]
        return cur

    n = len(word)
    if n == 0:
        loops = len(caps)  # each cap closes with a cup; only valid when they match
        return PlanarDiagram((), (), loops)
    labels: dict[tuple[int, int], int] = {}
    incoming: dict[tuple[int, int], bool] = {}
    components = 0
    for start in range(n):
        if (start, 0) in labels or (start, 1) in labels:
            continue
        components += 1
        node = ("x", start, 0)
        for _ in range(4 * n + 1):
            x, port = node[1], node[2]
            incoming[(x, port)] = True
            out_port = (port + 2) % 4
            incoming[(x, out_port)] = False
            nxt = next_port(("x", x, out_port))
            if nxt[0] != "x":
                raise MalformedDiagram("closed loop without crossings")
            label = len(labels) // 2 + 1
            labels[(x, out_port)] = label
            labels[(nxt[1], nxt[2])] = label
            node = nxt
            if node == ("x", start, 0):
                break
        else:
            raise MalformedDiagram("failed to close a component")
    if components != 1 or len(labels) != 4 * n:
        raise MalformedDiagram(f"closure has {components} components, expected a knot")
    crossings, signs = [], []
    for x in range(n):
        under = [q for q in range(4) if q not in overs[x]]
        a_port = next(q for q in under if incoming[(x, q)])
        ports = [(a_port + r) % 4 for r in range(4)]
        crossings.append(tuple(labels[(x, q)] for q in ports))
        signs.append(-1 if incoming[(x, ports[1])] else 1)
    return PlanarDiagram(tuple(crossings), tuple(signs))


# clasp and twist handedness, pinned against the cyclotomic formula at N = 2
_TWIST_SIGN = -1
_CLASP_SIGN = 1


def twist_knot_diagram(p: int) -> PlanarDiagram:
    """Diagram of the twist knot K_p: a clasp plus 2|p| half twists.

    Built as the pretzel closure of three twisted columns (2p, 1, 1): the
    first column is the twist region, the two single crossings form the
    clasp.  p = 0 gives the crossingless unknot.
    """
    if p == 0:
        return PlanarDiagram((), (), 1)
    if abs(p) > 10:
        raise ValueError("twist_knot_diagram supports |p| <= 10")
    m = 2 * abs(p)
    ts = _TWIST_SIGN * (1 if p > 0 else -1)
    word = [(1, ts)] * m + [(3, _CLASP_SIGN), (5, _CLASP_SIGN)]
    caps = [(1, 6), (2, 3), (4, 5)]
    return plat_diagram(6, caps, word, caps)


_FIXTURES = Path(__file__).with_name("data")


def load_fixture(name: str) -> PlanarDiagram:
    """Shipped PD codes: 'trefoil_left', 'figure_eight', 'unknot'."""
    with open(_FIXTURES / f"{name}.json") as fh:
        return PlanarDiagram.from_json(json.load(fh))


# -- cyclotomic formula ----------------------------------------------------------

def f_coeff(p: int, n: int) -> LaurentPoly:
    """f_{K_p, n} = a^{n(n+3)/2} c'_{n,p}."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return LaurentPoly.monomial(n * (n + 3)) * c_prime(n, p)


def _brace_window(N: int, n: int) -> LaurentPoly:
    """{N-n}{N-n+1}...{N+n} / {N}, by exact division."""
    out = ONE
    for j in range(N - n, N + n + 1):
        out = out * qbrace(j)
    return out.exact_div(qbrace(N))


@dataclass(frozen=True)
class TwistKnotInvariant:
    p: int
    N: int
    value: LaurentPoly
    f_coeffs: tuple[LaurentPoly, ...] = field(default=())

    def to_json(self) -> dict:
        return {"p": self.p, "N": self.N, "value": self.value.to_json(),
                "f": [f.to_json() for f in self.f_coeffs]}


def colored_jones(p: int, N: int) -> TwistKnotInvariant:
    """Normalized colored Jones polynomial J'_{K_p}(N), cyclotomic form."""
    if N < 1:
        raise BadColor(f"color must be >= 1, got {N}")
    fs = tuple(f_coeff(p, n) for n in range(N))
    total = ZERO
    for n, f in enumerate(fs):
        total = total + f * _brace_window(N, n)
    return TwistKnotInvariant(p, N, total, fs)


def qform_coeff(p: int, n: int) -> LaurentPoly:
    """(-1)^n q^{-n(n+1)/2} f_{K_p,n}, with q = a^2."""
    v = a_pow(-n * (n + 1)) * f_coeff(p, n)
    return -v if n % 2 else v


def colored_jones_qform(p: int, N: int) -> LaurentPoly:
    """J'_{K_p}(N) as a sum of products of two q-Pochhammer symbols."""
    if N < 1:
        raise BadColor(f"color must be >= 1, got {N}")
    total = ZERO
    for n in range(N):
        total = total + qform_coeff(p, n) * pochhammer(1 - N, n) * pochhammer(1 + N, n)
    return total
