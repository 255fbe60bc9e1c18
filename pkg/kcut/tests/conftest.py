# -*- coding: utf-8 -*-

"""
(c) 2026 kcut authors
All rights reserved.

This code is distributed under a 3-clause BSD license. Please see
LICENSE.txt for more information.

Created on 12 March 2026 09:00 CET (+0100)

Shared fixtures and hypothesis strategies.
"""

import os
import logging
import importlib.util
import importlib.machinery
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from kcut.graph import WeightedGraph, VertexSet, Forest
from kcut.setsys import RangeSpace
from kcut.schedule import ScheduleConfig

PROPERTY_SETTINGS = settings(
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)

SLOW_PROPERTY_SETTINGS = settings(
    max_examples=20,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)

BIN = os.path.abspath(os.path.join(os.path.dirname(__file__), "..", "..", "bin"))

# branches at k=2, s=4 and k=3, s=6
BRANCHING_CONFIG = ScheduleConfig(gamma=Fraction(1, 100), base_k=2)


def load_script(name):
    path = os.path.join(BIN, name)
    loader = importlib.machinery.SourceFileLoader(name, path)
    spec = importlib.util.spec_from_loader(name, loader)
    module = importlib.util.module_from_spec(spec)
    loader.exec_module(module)
    return module


@st.composite
def connected_graphs(draw, min_n=2, max_n=7, max_weight=5):
    """A random spanning tree plus random extra edges, weights 1..max_weight"""
    n = draw(st.integers(min_n, max_n))
    edges = {}
    for v in range(1, n):
        u = draw(st.integers(0, v - 1))
        edges[(u, v)] = draw(st.integers(1, max_weight))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges]
    if pairs:
        for pair in draw(st.lists(st.sampled_from(pairs), unique=True)):
            edges[pair] = draw(st.integers(1, max_weight))
    return WeightedGraph(n, [(u, v, w) for (u, v), w in sorted(edges.items())])


@st.composite
def graphs_with_sets(draw, min_n=2, max_n=7):
    g = draw(connected_graphs(min_n=min_n, max_n=max_n))
    bits = draw(st.integers(0, (1 << g.n) - 1))
    return g, VertexSet(bits, g.n)


@st.composite
def forests(draw, min_n=1, max_n=6):
    """A random forest on [n]: every vertex v > 0 either starts a new tree or
    hangs below some u < v"""
    n = draw(st.integers(min_n, max_n))
    edges = []
    for v in range(1, n):
        if draw(st.booleans()):
            edges.append((draw(st.integers(0, v - 1)), v))
    return Forest(VertexSet.full(n), edges)


@st.composite
def range_spaces(draw, min_n=1, max_n=6, max_ranges=10):
    n = draw(st.integers(min_n, max_n))
    masks = draw(st.lists(st.integers(0, (1 << n) - 1), unique=True, min_size=1,
                          max_size=max_ranges))
    return RangeSpace.from_masks(n, masks)


@pytest.fixture
def log():
    logger = logging.getLogger("kcut.tests")
    logger.setLevel(logging.INFO)
    return logger


@pytest.fixture
def write_graph(tmp_path):
    """Write edge-list text to a file and return its path"""
    def _write(text, name="graph.txt"):
        path = tmp_path / name
        path.write_text(text)
        return str(path)
    return _write
