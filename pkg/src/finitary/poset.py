"""Finite partially ordered sets.

A :class:`Poset` keeps its elements in input order and stores the order
relation as a dense boolean table, so ``leq`` is a constant-time lookup.
"""

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import (
    CycleDetected, DuplicateElement, InvalidWitness, NotComparable,
    SizeTooLarge, UnknownElement,
)

__all__ = [
    "Poset", "Segment", "IsoWitness", "build_poset", "chain", "antichain",
    "point", "diamond", "boolean_lattice", "disjoint_union", "order_sum",
    "order_product", "poset_isomorphism", "enumerate_posets",
]

MAX_ENUMERATION_SIZE = 5


class Segment(NamedTuple):
    """The interval ``[lo, hi]``; only meaningful inside its poset."""

    lo: str
    hi: str


def _closure(n, edges):
    leq = np.eye(n, dtype=bool)
    for i, j in edges:
        leq[i, j] = True
    # Warshall
    for k in range(n):
        leq |= np.outer(leq[:, k], leq[k, :])
    return leq


class Poset:
    """A finite poset built from covering (or any generating) pairs.

    >>> p = Poset(["a", "b", "c"], [("a", "b"), ("b", "c")])
    >>> p.leq("a", "c"), p.interval("a", "c")
    (True, ['a', 'b', 'c'])
    """

    def __init__(self, elements, hasse_edges=()):
        elements = tuple(str(e) for e in elements)
        index = {}
        for i, e in enumerate(elements):
            if "\x00" in e:
                raise ValueError("element ids may not contain NUL")
            if e in index:
                raise DuplicateElement(f"duplicate element {e!r}")
            index[e] = i
        pairs = []
        for a, b in hasse_edges:
            a, b = str(a), str(b)
            for e in (a, b):
                if e not in index:
                    raise UnknownElement(f"edge ({a!r}, {b!r}) mentions unknown element {e!r}")
            if a != b:
                pairs.append((index[a], index[b]))
        n = len(elements)
        leq = _closure(n, pairs)
        both = leq & leq.T & ~np.eye(n, dtype=bool)
        if both.any():
            i, j = map(int, np.argwhere(both)[0])
            raise CycleDetected(
                f"elements {elements[i]!r} and {elements[j]!r} lie on a cycle")
        leq.setflags(write=False)
        self.elements = elements
        self._index = index
        self._leq = leq
        lt = leq & ~np.eye(n, dtype=bool)
        # x covers-below y iff x < y with nothing strictly between
        between = (lt.astype(np.int64) @ lt.astype(np.int64)) > 0
        cover = lt & ~between
        self.hasse = tuple((elements[i], elements[j]) for i, j in zip(*np.nonzero(cover)))
        self._segments = None
        self._hash = None

    # -- basic queries -------------------------------------------------

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x):
        return x in self._index

    def __repr__(self):
        return f"Poset({list(self.elements)!r}, {list(self.hasse)!r})"

    def __eq__(self, other):
        if not isinstance(other, Poset):
            return NotImplemented
        return self.elements == other.elements and np.array_equal(self._leq, other._leq)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.elements, self._leq.tobytes()))
        return self._hash

    def index(self, x):
        try:
            return self._index[x]
        except KeyError:
            raise UnknownElement(f"unknown element {x!r}") from None

    @property
    def leq_table(self):
        """Read-only boolean matrix, ``table[i, j]`` iff element i <= element j."""
        return self._leq

    def leq(self, x, y):
        return bool(self._leq[self.index(x), self.index(y)])

    def lt(self, x, y):
        return x != y and self.leq(x, y)

    def comparable(self, x, y):
        return self.leq(x, y) or self.leq(y, x)

    def up_set(self, x):
        row = self._leq[self.index(x)]
        return [self.elements[j] for j in np.flatnonzero(row)]

    def down_set(self, x):
        col = self._leq[:, self.index(x)]
        return [self.elements[i] for i in np.flatnonzero(col)]

    def interval(self, x, y):
        """All z with x <= z <= y, in element order."""
        i, j = self.index(x), self.index(y)
        if not self._leq[i, j]:
            raise NotComparable(f"{x!r} <= {y!r} does not hold")
        mask = self._leq[i] & self._leq[:, j]
        return [self.elements[k] for k in np.flatnonzero(mask)]

    def segments(self):
        """All segments ``(x, y)`` with x <= y, ordered by (index x, index y)."""
        if self._segments is None:
            self._segments = tuple(
                Segment(self.elements[i], self.elements[j])
                for i, j in zip(*np.nonzero(self._leq)))
        return self._segments

    def segment_key(self, seg):
        lo, hi = seg
        return (self._index[lo], self._index[hi])

    def linear_extension(self):
        """A topological order of the elements, ties broken by input order."""
        n = len(self)
        indeg = self._leq.sum(axis=0) - 1
        done = np.zeros(n, dtype=bool)
        order = []
        for _ in range(n):
            i = next(k for k in range(n) if not done[k] and indeg[k] == 0)
            done[i] = True
            order.append(self.elements[i])
            indeg = indeg - self._leq[i]
            indeg[i] = -1
        return order

    def minimal_elements(self):
        return [e for i, e in enumerate(self.elements) if self._leq[:, i].sum() == 1]

    def maximal_elements(self):
        return [e for i, e in enumerate(self.elements) if self._leq[i].sum() == 1]

    def height(self):
        """Number of elements in a longest chain (0 for the empty poset)."""
        best = {}
        for x in self.linear_extension():
            below = [best[z] for z in self.down_set(x) if z != x]
            best[x] = 1 + max(below, default=0)
        return max(best.values(), default=0)

    def connected_components(self):
        """Components of the comparability graph, each in element order.

        Components are listed by their first element.
        """
        n = len(self)
        comp = [-1] * n
        sym = self._leq | self._leq.T
        out = []
        for s in range(n):
            if comp[s] >= 0:
                continue
            comp[s] = len(out)
            stack, members = [s], [s]
            while stack:
                i = stack.pop()
                for j in np.flatnonzero(sym[i]):
                    if comp[j] < 0:
                        comp[j] = comp[s]
                        stack.append(j)
                        members.append(j)
            out.append([self.elements[i] for i in sorted(members)])
        return out

    def is_connected(self):
        return len(self.connected_components()) <= 1

    def subposet(self, elements):
        """The induced subposet on ``elements`` (kept in this poset's order)."""
        keep = set(elements)
        for e in keep:
            self.index(e)
        els = [e for e in self.elements if e in keep]
        edges = [(a, b) for a in els for b in els if a != b and self.leq(a, b)]
        return Poset(els, edges)

    def relabel(self, mapping):
        """A copy with every element x renamed to ``mapping[x]``."""
        return Poset([mapping[e] for e in self.elements],
                     [(mapping[a], mapping[b]) for a, b in self.hasse])

    def to_dict(self):
        return {"elements": list(self.elements), "hasse": [list(e) for e in self.hasse]}


def build_poset(elements, hasse_edges=()):
    return Poset(elements, hasse_edges)


# -- constructors ------------------------------------------------------

def chain(n, prefix=""):
    els = [f"{prefix}{i}" for i in range(n)]
    return Poset(els, list(zip(els, els[1:])))


def antichain(n, prefix=""):
    return Poset([f"{prefix}{i}" for i in range(n)])


def point(name="0"):
    return Poset([name])


def diamond():
    return Poset("abcd", [("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")])


def boolean_lattice(n):
    """Subsets of {0..n-1} ordered by inclusion; ids are bit strings."""
    els = [format(m, f"0{n}b") if n else "" for m in range(2 ** n)]
    edges = [(els[m], els[m | (1 << k)]) for m in range(2 ** n)
             for k in range(n) if not m & (1 << k)]
    return Poset(els, edges)


def _namespaced(p, q):
    if set(p.elements).isdisjoint(q.elements):
        return (lambda x: x), (lambda x: x)
    return (lambda x: f"0.{x}"), (lambda x: f"1.{x}")


def disjoint_union(p, q):
    """Side-by-side union.  Ids are kept if disjoint, else prefixed ``0.``/``1.``."""
    f, g = _namespaced(p, q)
    return Poset([f(x) for x in p] + [g(y) for y in q],
                 [(f(a), f(b)) for a, b in p.hasse] + [(g(a), g(b)) for a, b in q.hasse])


def order_sum(p, q):
    """Every element of ``p`` placed below every element of ``q``.

    Ids are namespaced as in :func:`disjoint_union`.
    """
    f, g = _namespaced(p, q)
    edges = [(f(a), f(b)) for a, b in p.hasse] + [(g(a), g(b)) for a, b in q.hasse]
    edges += [(f(a), g(b)) for a in p.maximal_elements() for b in q.minimal_elements()]
    return Poset([f(x) for x in p] + [g(y) for y in q], edges)


def order_product(p, q):
    """Componentwise order on pairs; the pair (a, b) gets id ``"(a,b)"``."""
    name = lambda a, b: f"({a},{b})"
    els = [name(a, b) for a in p for b in q]
    edges = [(name(a, b), name(c, b)) for a, c in p.hasse for b in q]
    edges += [(name(a, b), name(a, d)) for a in p for b, d in q.hasse]
    return Poset(els, edges)


# -- isomorphism -------------------------------------------------------

@dataclass(frozen=True)
class IsoWitness:
    """An order isomorphism ``source -> target`` given by ``mapping``."""

    source: Poset
    target: Poset
    mapping: dict

    def __call__(self, x):
        return self.mapping[x]

    def is_valid(self):
        p, q, m = self.source, self.target, self.mapping
        if set(m) != set(p.elements) or sorted(m.values()) != sorted(q.elements):
            return False
        if len(set(m.values())) != len(m):
            return False
        return all(p.leq(x, y) == q.leq(m[x], m[y]) for x in p for y in p)

    def verify(self):
        if not self.is_valid():
            raise InvalidWitness("mapping is not an order isomorphism")
        return self

    def inverse(self):
        return IsoWitness(self.target, self.source, {v: k for k, v in self.mapping.items()})


def _signature(p):
    up = p.leq_table.sum(axis=1)
    down = p.leq_table.sum(axis=0)
    return [(int(u), int(d)) for u, d in zip(up, down)]


def invariants(p):
    """Cheap isomorphism invariant: size plus sorted (up-set, down-set) sizes."""
    return (len(p), int(p.leq_table.sum()), tuple(sorted(_signature(p))))


def poset_isomorphism(p, q):
    """Find an order isomorphism ``p -> q`` by pruned backtracking, or None."""
    if invariants(p) != invariants(q):
        return None
    n = len(p)
    sp, sq = _signature(p), _signature(q)
    P, Q = p.leq_table, q.leq_table
    # most constrained first: rare signatures
    freq = {}
    for s in sq:
        freq[s] = freq.get(s, 0) + 1
    order = sorted(range(n), key=lambda i: (freq[sp[i]], i))
    cands = [[j for j in range(n) if sq[j] == sp[i]] for i in range(n)]
    image = [-1] * n
    used = [False] * n

    def extend(k):
        if k == n:
            return True
        i = order[k]
        for j in cands[i]:
            if used[j]:
                continue
            ok = True
            for kk in range(k):
                a = order[kk]
                b = image[a]
                if P[i, a] != Q[j, b] or P[a, i] != Q[b, j]:
                    ok = False
                    break
            if ok:
                image[i], used[j] = j, True
                if extend(k + 1):
                    return True
                image[i], used[j] = -1, False
        return False

    if not extend(0):
        return None
    mapping = {p.elements[i]: q.elements[image[i]] for i in range(n)}
    return IsoWitness(p, q, mapping)


def _down_closed_sets(p):
    """All order ideals of ``p`` as index bitmasks."""
    n = len(p)
    L = p.leq_table
    below = [sum(1 << i for i in range(n) if L[i, j]) for j in range(n)]
    out = []
    for m in range(2 ** n):
        if all(below[j] & m == below[j] for j in range(n) if m >> j & 1):
            out.append(m)
    return out


def enumerate_posets(n):
    """One representative per isomorphism class of ``n``-element posets.

    Grows posets by adjoining a new maximal element above each order
    ideal of a smaller representative, then deduplicates.  Element ids
    are ``"0".."n-1"``.
    """
    if n > MAX_ENUMERATION_SIZE:
        raise SizeTooLarge(f"enumeration supports n <= {MAX_ENUMERATION_SIZE}, got {n}")
    if n < 0:
        raise ValueError("n must be non-negative")
    reps = [Poset([])]
    for k in range(n):
        buckets = {}
        grown = []
        for p in reps:
            for ideal in _down_closed_sets(p):
                new = str(k)
                below = [p.elements[i] for i in range(k) if ideal >> i & 1]
                cand = Poset(list(p.elements) + [new],
                             list(p.hasse) + [(b, new) for b in below])
                bucket = buckets.setdefault(invariants(cand), [])
                if any(poset_isomorphism(cand, r) is not None for r in bucket):
                    continue
                bucket.append(cand)
                grown.append(cand)
        reps = grown
    return reps
