# -*- coding: utf-8 -*-

"""
(c) 2026 kcut authors
All rights reserved.

This code is distributed under a 3-clause BSD license. Please see
LICENSE.txt for more information.

Created on 08 March 2026 10:10 CET (+0100)

Graph files and result reports.

Two graph formats are read:

* edge list -- ``u v w`` per line, 0-based ids, ``#`` comments; a comment
  ``# n <count>`` fixes the vertex count (otherwise max id + 1).
* DIMACS -- ``p <n> <m>`` (or ``p edge <n> <m>``) then ``e u v [w]`` with
  1-based ids, ``c`` comments; a missing weight is 1.
"""

import re
import sys
from collections import namedtuple

from kcut.errors import ParseError, SelfLoop, NegativeWeight
from kcut.graph import WeightedGraph

Edge = namedtuple("Edge", "lineno,u,v,w")

_VERTEX_PRAGMA = re.compile(r"^#\s*n\s+(\d+)\s*$")

# vertices touching no edge
ISOLATED_VERTEX_LIMIT = 1024


def _int(token, what, lineno):
    try:
        return int(token)
    except ValueError:
        raise ParseError("{} {!r} is not an integer".format(what, token), lineno)


class Reader(object):
    """read an edge-list or DIMACS graph and return an iterator over its edges"""

    def __init__(self, source, fmt="auto"):
        if fmt not in ("auto", "edgelist", "dimacs"):
            raise ValueError("unknown graph format {!r}".format(fmt))
        if hasattr(source, "read"):
            self.file, self._owned = source, False
        elif source == "-":
            self.file, self._owned = sys.stdin, False
        else:
            self.file, self._owned = open(source, encoding="utf-8"), True
        self.fmt = fmt
        self.n = None
        self.declared_m = None
        self.lineno = 0

    def close(self):
        if self._owned and not self.file.closed:
            self.file.close()

    def __del__(self):
        """close files"""
        if hasattr(self, "file"):
            self.close()

    def __iter__(self):
        return self

    def __next__(self):
        """read the next edge and return it as a named tuple"""
        for line in self.file:
            self.lineno += 1
            text = line.strip()
            if not text:
                continue
            if self.fmt == "auto":
                self.fmt = "dimacs" if text.split()[0] in ("p", "c") else "edgelist"
            edge = self._dimacs(text) if self.fmt == "dimacs" else self._edgelist(text)
            if edge is not None:
                return edge
        raise StopIteration

    next = __next__

    def _check(self, u, v, w):
        if u == v:
            raise SelfLoop("line {}: self-loop on vertex {}".format(self.lineno, u))
        if w < 0:
            raise NegativeWeight("line {}: edge ({}, {}) has weight {}".format(
                self.lineno, u, v, w))
        return Edge(self.lineno, u, v, w)

    def _edgelist(self, text):
        if text.startswith("#"):
            pragma = _VERTEX_PRAGMA.match(text)
            if pragma:
                self.n = int(pragma.group(1))
            return None
        fields = text.split("#", 1)[0].split()
        if len(fields) != 3:
            raise ParseError("expected 'u v w', got {!r}".format(text), self.lineno)
        u, v, w = (_int(token, name, self.lineno) for token, name in zip(fields, ("u", "v", "w")))
        if u < 0 or v < 0:
            raise ParseError("vertex ids must be nonnegative", self.lineno)
        if self.n is not None and max(u, v) >= self.n:
            raise ParseError("vertex {} outside 0..{}".format(max(u, v), self.n - 1), self.lineno)
        return self._check(u, v, w)

    def _dimacs(self, text):
        fields = text.split()
        tag = fields[0]
        if tag == "c":
            return None
        if tag == "p":
            numbers = fields[1:]
            if numbers and not numbers[0].isdigit():
                numbers = numbers[1:]
            if len(numbers) != 2 or self.n is not None:
                raise ParseError("bad problem line {!r}".format(text), self.lineno)
            self.n = _int(numbers[0], "n", self.lineno)
            self.declared_m = _int(numbers[1], "m", self.lineno)
            return None
        if tag != "e":
            raise ParseError("unknown line type {!r}".format(tag), self.lineno)
        if self.n is None:
            raise ParseError("edge before the problem line", self.lineno)
        if len(fields) not in (3, 4):
            raise ParseError("expected 'e u v [w]', got {!r}".format(text), self.lineno)
        u = _int(fields[1], "u", self.lineno)
        v = _int(fields[2], "v", self.lineno)
        w = _int(fields[3], "w", self.lineno) if len(fields) == 4 else 1
        for x in (u, v):
            if not 1 <= x <= self.n:
                raise ParseError("vertex {} outside 1..{}".format(x, self.n), self.lineno)
        return self._check(u - 1, v - 1, w)


def parse_graph(source, fmt="auto"):
    try:
        reader = Reader(source, fmt)
    except OSError as e:
        raise ParseError("cannot open {}: {}".format(source, e.strerror or e))
    try:
        edges = list(reader)
    except UnicodeDecodeError as e:
        raise ParseError("not UTF-8 text ({})".format(e.reason), reader.lineno + 1)
    except OSError as e:
        raise ParseError("read failed: {}".format(e.strerror or e), reader.lineno + 1)
    finally:
        reader.close()
    n = reader.n
    if n is None:
        n = max([max(e.u, e.v) for e in edges] or [-1]) + 1
    if n == 0:
        raise ParseError("graph has no vertices")
    if n > 2 * len(edges) + ISOLATED_VERTEX_LIMIT:
        raise ParseError("{} vertices for {} edges; at most {} may be isolated".format(
            n, len(edges), ISOLATED_VERTEX_LIMIT))
    if reader.declared_m is not None and reader.declared_m != len(edges):
        raise ParseError("problem line declares {} edges but {} were read".format(
            reader.declared_m, len(edges)))
    return WeightedGraph(n, [(e.u, e.v, e.w) for e in edges])


def write_edgelist(g, handle):
    handle.write("# n {}\n".format(g.n))
    for u, v, w in g.edges:
        handle.write("{} {} {}\n".format(u, v, w))


def write_dimacs(g, handle):
    handle.write("p {} {}\n".format(g.n, g.m))
    for u, v, w in g.edges:
        handle.write("e {} {} {}\n".format(u + 1, v + 1, w))


def result_to_dict(g, k, weight, partitions, telemetry=None):
    """Structured enumeration result; partitions as sorted lists of vertex lists"""
    result = {
        "n": g.n,
        "k": k,
        "weight": weight,
        "count": len(partitions),
        "partitions": sorted(p.to_lists() for p in partitions),
    }
    if telemetry is not None:
        result["telemetry"] = telemetry.as_dict()
    return result


def format_result_table(result):
    lines = [
        "n\t{}".format(result["n"]),
        "k\t{}".format(result["k"]),
        "weight\t{}".format(result["weight"]),
        "count\t{}".format(result["count"]),
    ]
    for idx, parts in enumerate(result["partitions"], 1):
        lines.append("cut\t{}\t{}".format(idx, " | ".join(
            ",".join(str(v) for v in part) for part in parts)))
    return "\n".join(lines) + "\n"


def parse_result_table(text):
    result = {"partitions": []}
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        fields = line.split("\t")
        if fields[0] in ("n", "k", "weight", "count") and len(fields) == 2:
            result[fields[0]] = _int(fields[1], fields[0], lineno)
        elif fields[0] == "cut" and len(fields) == 3:
            parts = [[_int(v, "vertex", lineno) for v in part.split(",")]
                     for part in fields[2].split(" | ")]
            result["partitions"].append(parts)
        else:
            raise ParseError("unrecognized result line {!r}".format(line), lineno)
    return result
