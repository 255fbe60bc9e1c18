# -*- coding: utf-8 -*-

"""
(c) 2026 kcut authors
All rights reserved.

This code is distributed under a 3-clause BSD license. Please see
LICENSE.txt for more information.

Created on 11 March 2026 10:30 CET (+0100)
"""

import io
import json

import pytest

from kcut import generators
from kcut.errors import ParseError, SelfLoop, NegativeWeight
from kcut.graph import Partition
from kcut.formats import (
    Reader,
    parse_graph,
    write_edgelist,
    write_dimacs,
    result_to_dict,
    format_result_table,
    parse_result_table,
)
from kcut.minkcut import Telemetry


class TestEdgeList:
    def test_parse(self):
        g = parse_graph(io.StringIO("0 1 3\n1 2 1  # light\n\n2 0 2\n"))
        assert g.n == 3
        assert g.edges == ((0, 1, 3), (0, 2, 2), (1, 2, 1))

    def test_vertex_pragma(self):
        g = parse_graph(io.StringIO("# n 5\n0 1 1\n"))
        assert g.n == 5
        assert g.component_count == 4

    def test_parallel_edges_merge(self):
        g = parse_graph(io.StringIO("0 1 1\n1 0 4\n"))
        assert g.edges == ((0, 1, 5),)

    def test_reader_keeps_line_numbers(self):
        edges = list(Reader(io.StringIO("# header\n0 1 2\n\n1 2 3\n"), "edgelist"))
        assert [e.lineno for e in edges] == [2, 4]

    def test_file_path(self, write_graph):
        path = write_graph("0 1 1\n1 2 1\n")
        assert parse_graph(path).m == 2

    @pytest.mark.parametrize("text,lineno", [
        ("0 1 1\n0 1\n", 2),
        ("0 x 1\n", 1),
        ("0 1 1\n-1 2 1\n", 2),
        ("# n 2\n0 2 1\n", 2),
    ])
    def test_errors_carry_line_numbers(self, text, lineno):
        with pytest.raises(ParseError) as e:
            parse_graph(io.StringIO(text))
        assert e.value.lineno == lineno
        assert str(e.value).startswith("line {}:".format(lineno))

    def test_self_loop(self):
        with pytest.raises(SelfLoop):
            parse_graph(io.StringIO("0 1 1\n2 2 1\n"))

    def test_negative_weight(self):
        with pytest.raises(NegativeWeight):
            parse_graph(io.StringIO("0 1 -3\n"))

    def test_empty(self):
        with pytest.raises(ParseError):
            parse_graph(io.StringIO("# nothing here\n"))

    def test_unknown_format(self):
        with pytest.raises(ValueError):
            parse_graph(io.StringIO("0 1 1\n"), "gml")

    def test_binary_file(self, tmp_path):
        path = tmp_path / "graph.bin"
        path.write_bytes(b"0 1 1\n\xff\xfe 2 1\n")
        with pytest.raises(ParseError):
            parse_graph(str(path))

    def test_unreadable_path(self, tmp_path):
        with pytest.raises(ParseError):
            parse_graph(str(tmp_path))
        with pytest.raises(ParseError):
            parse_graph(str(tmp_path / "missing.txt"))

    @pytest.mark.parametrize("text", [
        "0 1 1\n5000000000 2 1\n",
        "# n 100000000\n0 1 1\n",
    ])
    def test_vertex_count_far_above_edges(self, text):
        with pytest.raises(ParseError):
            parse_graph(io.StringIO(text))

    def test_isolated_vertices_within_limit(self):
        g = parse_graph(io.StringIO("# n 1000\n0 1 1\n"))
        assert g.n == 1000


class TestDimacs:
    def test_parse(self):
        text = "c a triangle\np edge 3 3\ne 1 2 4\ne 2 3\ne 1 3 2\n"
        g = parse_graph(io.StringIO(text))
        assert g.n == 3
        assert g.edges == ((0, 1, 4), (0, 2, 2), (1, 2, 1))

    def test_huge_problem_line(self):
        with pytest.raises(ParseError):
            parse_graph(io.StringIO("p 100000000 1\ne 1 2 1\n"), "dimacs")

    def test_short_problem_line(self):
        g = parse_graph(io.StringIO("p 4 1\ne 1 4 1\n"), "dimacs")
        assert g.n == 4

    def test_edge_count_mismatch(self):
        with pytest.raises(ParseError):
            parse_graph(io.StringIO("p 3 2\ne 1 2 1\n"))

    def test_edge_before_problem(self):
        with pytest.raises(ParseError) as e:
            parse_graph(io.StringIO("e 1 2 1\n"), "dimacs")
        assert e.value.lineno == 1

    def test_vertex_out_of_range(self):
        with pytest.raises(ParseError) as e:
            parse_graph(io.StringIO("p 3 1\ne 0 2 1\n"))
        assert e.value.lineno == 2

    def test_unknown_line(self):
        with pytest.raises(ParseError):
            parse_graph(io.StringIO("p 3 1\nx 1 2\n"))


class TestWriters:
    def test_edgelist_keeps_isolated_vertices(self):
        g = parse_graph(io.StringIO("# n 6\n0 1 2\n3 4 1\n"))
        handle = io.StringIO()
        write_edgelist(g, handle)
        handle.seek(0)
        again = parse_graph(handle)
        assert again.n == 6
        assert again.edges == g.edges

    def test_dimacs(self):
        g = generators.path(3, [2, 5])
        handle = io.StringIO()
        write_dimacs(g, handle)
        assert handle.getvalue() == "p 3 2\ne 1 2 2\ne 2 3 5\n"
        handle.seek(0)
        assert parse_graph(handle).edges == g.edges


class TestResults:
    def result(self, telemetry=None):
        g = generators.cycle(4)
        found = frozenset([
            Partition.from_lists([[0, 1], [2, 3]], 4),
            Partition.from_lists([[0, 3], [1, 2]], 4),
        ])
        return result_to_dict(g, 2, 2, found, telemetry)

    def test_dict(self):
        result = self.result()
        assert result["count"] == 2
        assert result["partitions"] == [[[0, 1], [2, 3]], [[0, 3], [1, 2]]]
        assert "telemetry" not in result

    def test_telemetry_is_serializable(self):
        result = self.result(Telemetry())
        assert json.loads(json.dumps(result))["telemetry"]["trees"] == 0

    def test_table_matches_json(self):
        result = self.result()
        parsed = parse_result_table(format_result_table(result))
        assert parsed == json.loads(json.dumps(result))

    def test_table_lines(self):
        lines = format_result_table(self.result()).splitlines()
        assert lines[:4] == ["n\t4", "k\t2", "weight\t2", "count\t2"]
        assert lines[4] == "cut\t1\t0,1 | 2,3"

    def test_bad_table(self):
        with pytest.raises(ParseError) as e:
            parse_result_table("n\t4\nbogus\n")
        assert e.value.lineno == 2
