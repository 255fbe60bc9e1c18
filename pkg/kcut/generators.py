# -*- coding: utf-8 -*-

"""
(c) 2026 kcut authors
All rights reserved.

This code is distributed under a 3-clause BSD license. Please see
LICENSE.txt for more information.

Created on 05 March 2026 17:20 CET (+0100)
"""

from kcut.graph import WeightedGraph
from kcut.contraction import get_rng


def cycle(n, weight=1):
    return WeightedGraph(n, [(i, (i + 1) % n, weight) for i in range(n)])


def path(n, weights=None):
    if weights is None:
        weights = [1] * (n - 1)
    return WeightedGraph(n, [(i, i + 1, weights[i]) for i in range(n - 1)])


def complete(n, weight=1):
    return WeightedGraph(n, [(u, v, weight) for u in range(n) for v in range(u + 1, n)])


def star(leaves, weight=1):
    return WeightedGraph(leaves + 1, [(0, v, weight) for v in range(1, leaves + 1)])


def two_triangles():
    """Unit triangles {0,1,2} and {3,4,5} joined by the bridge (2, 3)"""
    return WeightedGraph(6, [
        (0, 1, 1), (1, 2, 1), (0, 2, 1),
        (3, 4, 1), (4, 5, 1), (3, 5, 1),
        (2, 3, 1),
    ])


def cluster_cycle(clusters, size, inner=5):
    """Complete clusters of ``size`` vertices (edge weight ``inner``) joined in
    a ring by unit bridges from the last vertex of a cluster to the first of
    the next"""
    edges = []
    for c in range(clusters):
        base = c * size
        for u in range(size):
            for v in range(u + 1, size):
                edges.append((base + u, base + v, inner))
        following = ((c + 1) % clusters) * size
        if clusters > 1:
            edges.append((base + size - 1, following, 1))
    return WeightedGraph(clusters * size, edges)


def clusters_of(clusters, size):
    return [list(range(c * size, (c + 1) * size)) for c in range(clusters)]


def random_connected(n, rng=None, p=0.5, max_weight=5):
    """A random spanning tree plus each other pair with probability p;
    weights uniform in 1..max_weight"""
    rng = get_rng(rng)
    order = [int(v) for v in rng.permutation(n)]
    edges = {}
    for i in range(1, n):
        u = order[i]
        v = order[int(rng.integers(0, i))]
        edges[(min(u, v), max(u, v))] = int(rng.integers(1, max_weight + 1))
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) in edges:
                continue
            if rng.random() < p:
                edges[(u, v)] = int(rng.integers(1, max_weight + 1))
    return WeightedGraph(n, [(u, v, w) for (u, v), w in sorted(edges.items())])


def planted(n, k, rng=None, heavy=(4, 6), light=1, p_between=0.2):
    """k dense random clusters with light edges between them"""
    rng = get_rng(rng)
    labels = [v % k for v in range(n)]
    edges = {}
    for u in range(n):
        for v in range(u + 1, n):
            if labels[u] == labels[v]:
                edges[(u, v)] = int(rng.integers(heavy[0], heavy[1] + 1))
            elif rng.random() < p_between:
                edges[(u, v)] = light
    for c in range(k):
        # a light ring keeps the clusters connected
        nxt = (c + 1) % k
        key = (min(c, nxt), max(c, nxt))
        if c != nxt and key not in edges:
            edges[key] = light
    return WeightedGraph(n, [(u, v, w) for (u, v), w in sorted(edges.items())])


def scaled(g, factor):
    if factor < 1:
        raise ValueError("scale factor must be a positive integer, got {}".format(factor))
    return g.scaled(int(factor))
