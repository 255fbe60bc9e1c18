# -*- coding: utf-8 -*-

"""
(c) 2026 kcut authors
All rights reserved.

This code is distributed under a 3-clause BSD license. Please see
LICENSE.txt for more information.

Created on 02 March 2026 10:12 CET (+0100)

Weighted graphs, vertex sets, partitions and forests.  Vertex ids are
always the ids of the ORIGINAL graph; induced subgraphs keep the full
universe and track which vertices are still present.
"""

from kcut.errors import (
    GraphError,
    EdgeNotFound,
    NegativeWeight,
    SelfLoop,
    WeightOverflow,
    FullDeletion,
    OverlappingParts,
    IncompleteCover,
    EmptyPart,
)

MAX_TOTAL_WEIGHT = 2 ** 63 - 1


def _popcount(bits):
    return bin(bits).count("1")


class VertexSet(object):
    """An immutable bit-vector over the vertex ids [0, n)."""

    __slots__ = ("bits", "n")

    def __init__(self, bits, n):
        if bits < 0 or bits >> n:
            raise ValueError("bits {} exceed a universe of size {}".format(bits, n))
        self.bits = bits
        self.n = n

    @classmethod
    def from_iterable(cls, vertices, n):
        bits = 0
        for v in vertices:
            bits |= 1 << v
        return cls(bits, n)

    @classmethod
    def from_bitstring(cls, text):
        text = text.strip()
        bits = 0
        for pos, char in enumerate(text):
            if char == "1":
                bits |= 1 << pos
            elif char != "0":
                raise ValueError("{!r} is not a bitstring".format(text))
        return cls(bits, len(text))

    @classmethod
    def full(cls, n):
        return cls((1 << n) - 1, n)

    @classmethod
    def empty(cls, n):
        return cls(0, n)

    def __iter__(self):
        bits = self.bits
        while bits:
            low = bits & -bits
            yield low.bit_length() - 1
            bits ^= low

    def __len__(self):
        return _popcount(self.bits)

    def __bool__(self):
        return self.bits != 0

    def __contains__(self, v):
        return (self.bits >> v) & 1 == 1

    def __or__(self, other):
        return VertexSet(self.bits | other.bits, self.n)

    def __and__(self, other):
        return VertexSet(self.bits & other.bits, self.n)

    def __sub__(self, other):
        return VertexSet(self.bits & ~other.bits, self.n)

    def complement(self, within=None):
        if within is None:
            return VertexSet(((1 << self.n) - 1) & ~self.bits, self.n)
        return VertexSet(within.bits & ~self.bits, self.n)

    def issubset(self, other):
        return self.bits & ~other.bits == 0

    def isdisjoint(self, other):
        return self.bits & other.bits == 0

    def min(self):
        if not self.bits:
            raise ValueError("empty vertex set has no minimum")
        return (self.bits & -self.bits).bit_length() - 1

    def sort_key(self):
        return tuple(self)

    def to_bitstring(self):
        return "".join("1" if (self.bits >> i) & 1 else "0" for i in range(self.n))

    def __eq__(self, other):
        return isinstance(other, VertexSet) and self.bits == other.bits and self.n == other.n

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.bits, self.n))

    def __repr__(self):
        return "VertexSet({{{}}})".format(", ".join(str(v) for v in self))


class WeightedGraph(object):
    """An undirected graph with nonnegative integer weights in merged form.

    Parallel edges are summed, zero-weight edges are dropped and edges are
    stored as ``(u, v, w)`` with ``u < v`` in ascending order; the position
    of an edge in ``edges`` is its edge id.
    """

    def __init__(self, n, edges, vertices=None):
        if vertices is None:
            vertices = VertexSet.full(n)
        merged = {}
        for u, v, w in edges:
            if u == v:
                raise SelfLoop("self-loop on vertex {}".format(u))
            if w < 0:
                raise NegativeWeight("edge ({}, {}) has weight {}".format(u, v, w))
            if u not in vertices or v not in vertices:
                raise GraphError("edge ({}, {}) leaves the vertex set".format(u, v))
            key = (u, v) if u < v else (v, u)
            merged[key] = merged.get(key, 0) + w
        total = sum(merged.values())
        if total > MAX_TOTAL_WEIGHT:
            raise WeightOverflow("total weight {} does not fit in 64 bits".format(total))
        self._setup(n, tuple((u, v, w) for (u, v), w in sorted(merged.items()) if w > 0), vertices)

    @classmethod
    def _merged(cls, n, edges, vertices):
        g = cls.__new__(cls)
        g._setup(n, edges, vertices)
        return g

    def _setup(self, n, edges, vertices):
        self.n = n
        self.edges = edges
        self.vertices = vertices
        self.total_weight = sum(w for _, _, w in edges)
        self._components = None

    @property
    def m(self):
        return len(self.edges)

    @property
    def vertex_count(self):
        return len(self.vertices)

    def components(self):
        """Connected components as VertexSets sorted by minimum vertex"""
        if self._components is None:
            parent = {v: v for v in self.vertices}
            for u, v, _ in self.edges:
                ru, rv = _find(parent, u), _find(parent, v)
                if ru != rv:
                    parent[max(ru, rv)] = min(ru, rv)
            groups = {}
            for v in self.vertices:
                root = _find(parent, v)
                groups[root] = groups.get(root, 0) | (1 << v)
            self._components = tuple(VertexSet(groups[r], self.n) for r in sorted(groups))
        return self._components

    @property
    def component_count(self):
        return len(self.components())

    def is_connected(self):
        return self.component_count == 1

    def scaled(self, factor):
        return WeightedGraph._merged(
            self.n, tuple((u, v, w * factor) for u, v, w in self.edges), self.vertices
        )

    def __eq__(self, other):
        return (
            isinstance(other, WeightedGraph)
            and self.n == other.n
            and self.vertices == other.vertices
            and self.edges == other.edges
        )

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.n, self.vertices.bits, self.edges))

    def __repr__(self):
        return "WeightedGraph(n={}, active={}, m={}, weight={})".format(
            self.n, self.vertex_count, self.m, self.total_weight
        )


def _find(parent, v):
    root = v
    while parent[root] != root:
        root = parent[root]
    while parent[v] != root:
        parent[v], v = root, parent[v]
    return root


class Partition(object):
    """Disjoint nonempty parts in canonical order (ascending minimum vertex)."""

    __slots__ = ("parts",)

    def __init__(self, parts):
        seen = 0
        parts = list(parts)
        for part in parts:
            if not part:
                raise EmptyPart("partition contains an empty part")
            if seen & part.bits:
                raise OverlappingParts("parts overlap on {}".format(
                    VertexSet(seen & part.bits, part.n)))
            seen |= part.bits
        self.parts = tuple(sorted(parts, key=VertexSet.min))

    @classmethod
    def from_lists(cls, lists, n):
        return cls(VertexSet.from_iterable(part, n) for part in lists)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def union(self):
        bits = 0
        for part in self.parts:
            bits |= part.bits
        return VertexSet(bits, self.parts[0].n)

    def with_part(self, part):
        return Partition(self.parts + (part,))

    def to_lists(self):
        return [list(part) for part in self.parts]

    def __eq__(self, other):
        return isinstance(other, Partition) and self.parts == other.parts

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(tuple(part.bits for part in self.parts))

    def __repr__(self):
        return "Partition({})".format(" | ".join(
            ",".join(str(v) for v in part) for part in self.parts))


class Forest(object):
    """An acyclic edge set over the active vertices of a graph."""

    def __init__(self, vertices, edges):
        self.vertices = vertices
        self.edges = tuple(sorted((u, v) if u < v else (v, u) for u, v in edges))
        parent = {v: v for v in vertices}
        for u, v in self.edges:
            if u not in parent or v not in parent:
                raise GraphError("forest edge ({}, {}) leaves the vertex set".format(u, v))
            ru, rv = _find(parent, u), _find(parent, v)
            if ru == rv:
                raise GraphError("forest edges contain a cycle through ({}, {})".format(u, v))
            parent[max(ru, rv)] = min(ru, rv)
        self._parent = parent
        self.component_count = len(vertices) - len(self.edges)

    def components(self):
        groups = {}
        for v in self.vertices:
            root = _find(self._parent, v)
            groups[root] = groups.get(root, 0) | (1 << v)
        return [VertexSet(groups[r], self.vertices.n) for r in sorted(groups)]

    def split_at(self, edge):
        """The two sides of the component containing ``edge`` once it is removed"""
        u, v = edge
        adjacency = {}
        for a, b in self.edges:
            if (a, b) == (u, v):
                continue
            adjacency.setdefault(a, []).append(b)
            adjacency.setdefault(b, []).append(a)
        seen = {u}
        stack = [u]
        while stack:
            x = stack.pop()
            for y in adjacency.get(x, ()):
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        n = self.vertices.n
        side_u = VertexSet.from_iterable(seen, n)
        component = next(c for c in self.components() if u in c)
        return side_u, component - side_u

    def __eq__(self, other):
        return isinstance(other, Forest) and self.vertices == other.vertices and self.edges == other.edges

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.vertices.bits, self.edges))

    def __repr__(self):
        return "Forest(active={}, edges={}, components={})".format(
            len(self.vertices), len(self.edges), self.component_count)


def boundary_weight(g, s):
    bits = s.bits
    return sum(w for u, v, w in g.edges if ((bits >> u) ^ (bits >> v)) & 1)


def partition_labels(p, n):
    labels = [-1] * n
    for idx, part in enumerate(p.parts):
        for v in part:
            labels[v] = idx
    return labels


def partition_weight(g, p):
    if p.union() != g.vertices:
        raise IncompleteCover("partition covers {} but the graph has {}".format(
            p.union(), g.vertices))
    labels = partition_labels(p, g.n)
    return sum(w for u, v, w in g.edges if labels[u] != labels[v])


def identity_mapping(g):
    return {v: VertexSet(1 << v, g.n) for v in g.vertices}


def compact(g, labels, mapping):
    """Merge vertices sharing a label into supernodes 0..r-1.

    Supernodes are numbered by the minimum original vertex they absorb;
    parallel edges are summed and self-loops dropped.
    """
    blocks = {}
    for v in g.vertices:
        label = labels[v]
        blocks[label] = blocks.get(label, 0) | mapping[v].bits
    order = sorted(blocks, key=lambda label: blocks[label] & -blocks[label])
    new_id = {label: idx for idx, label in enumerate(order)}
    merged = {}
    for u, v, w in g.edges:
        a, b = new_id[labels[u]], new_id[labels[v]]
        if a == b:
            continue
        key = (a, b) if a < b else (b, a)
        merged[key] = merged.get(key, 0) + w
    universe = next(iter(mapping.values())).n
    contracted = WeightedGraph._merged(
        len(order),
        tuple((a, b, w) for (a, b), w in sorted(merged.items())),
        VertexSet.full(len(order)),
    )
    return contracted, tuple(VertexSet(blocks[label], universe) for label in order)


def contract_edge(g, e, mapping=None):
    if not 0 <= e < g.m:
        raise EdgeNotFound("graph has no edge id {}".format(e))
    if mapping is None:
        mapping = identity_mapping(g)
    elif not isinstance(mapping, dict):
        mapping = dict(enumerate(mapping))
    u, v, _ = g.edges[e]
    labels = {x: x for x in g.vertices}
    labels[v] = u
    return compact(g, labels, mapping)


def delete_vertices(g, a):
    if g.vertices.issubset(a):
        raise FullDeletion("cannot delete every vertex")
    keep = g.vertices - a
    bits = keep.bits
    edges = tuple((u, v, w) for u, v, w in g.edges if (bits >> u) & 1 and (bits >> v) & 1)
    return WeightedGraph._merged(g.n, edges, keep)


def forest_restrict(f, a):
    if f.vertices.issubset(a):
        raise FullDeletion("cannot delete every forest vertex")
    keep = f.vertices - a
    bits = keep.bits
    return Forest(keep, [(u, v) for u, v in f.edges if (bits >> u) & 1 and (bits >> v) & 1])


def forest_crossing(f, a):
    bits = a.bits
    return sum(1 for u, v in f.edges if ((bits >> u) ^ (bits >> v)) & 1)


def merge_blocks(blocks, k):
    """Yield every grouping of ``blocks`` into exactly k nonempty parts.

    Groupings are restricted-growth assignments, so each unordered
    grouping is produced once.
    """
    blocks = list(blocks)
    count = len(blocks)
    if not 1 <= k <= count:
        return
    n = blocks[0].n
    groups = []

    def assign(i):
        if i == count:
            yield Partition(VertexSet(bits, n) for bits in groups)
            return
        left = count - i - 1
        if left >= k - len(groups):
            for j in range(len(groups)):
                groups[j] |= blocks[i].bits
                for p in assign(i + 1):
                    yield p
                groups[j] ^= blocks[i].bits
        if len(groups) < k:
            groups.append(blocks[i].bits)
            for p in assign(i + 1):
                yield p
            groups.pop()

    for p in assign(0):
        yield p


def component_groupings(g, k):
    return merge_blocks(g.components(), k)
