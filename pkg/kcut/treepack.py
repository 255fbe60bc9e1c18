# -*- coding: utf-8 -*-

"""
(c) 2026 kcut authors
All rights reserved.

This code is distributed under a 3-clause BSD license. Please see
LICENSE.txt for more information.

Created on 04 March 2026 16:02 CET (+0100)

Greedy spanning-tree packing: each tree is a minimum spanning tree under
the key load/weight, after which the loads of its edges go up by one.
"""

import math
from fractions import Fraction

from kcut.errors import Disconnected
from kcut.graph import Forest, forest_crossing, _find


def _key(load, weight, eid):
    if weight == 0:
        return (1, Fraction(load), eid)
    return (0, Fraction(load, weight), eid)


def greedy_tree_pack(g, tree_count):
    """Pack ``tree_count`` spanning trees of a connected graph.

    Kruskal over edges sorted by (load/weight, edge id); ties therefore
    resolve to the lowest edge id and the packing is deterministic.
    """
    if not g.is_connected():
        raise Disconnected("tree packing needs a connected graph ({} components)".format(
            g.component_count))
    loads = [0] * g.m
    trees = []
    for _ in range(tree_count):
        order = sorted(range(g.m), key=lambda e: _key(loads[e], g.edges[e][2], e))
        parent = {v: v for v in g.vertices}
        chosen = []
        for e in order:
            u, v, _ = g.edges[e]
            ru, rv = _find(parent, u), _find(parent, v)
            if ru == rv:
                continue
            parent[max(ru, rv)] = min(ru, rv)
            chosen.append(e)
            if len(chosen) == g.vertex_count - 1:
                break
        for e in chosen:
            loads[e] += 1
        trees.append(Forest(g.vertices, [g.edges[e][:2] for e in chosen]))
    return trees


def distinct_trees(trees):
    """Drop repeated trees, keeping first occurrences in order"""
    seen = set()
    unique = []
    for tree in trees:
        if tree.edges not in seen:
            seen.add(tree.edges)
            unique.append(tree)
    return unique


def pack_size_for(k, m, cfg):
    return int(math.ceil(cfg.c_pack * k ** 3 * m))


def tree_crossing(tree, p):
    return sum(forest_crossing(tree, part) for part in p) // 2


def best_tree_crossing(trees, p):
    """(index, crossings) of the first tree crossing ``p`` the fewest times"""
    best = None
    for idx, tree in enumerate(trees):
        count = tree_crossing(tree, p)
        if best is None or count < best[1]:
            best = (idx, count)
    return best
