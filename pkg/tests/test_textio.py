import pytest

import spherig as sp
from spherig.graphs import Graph
from spherig.textio import format_facets, format_graph, parse_facets, parse_graph


class TestFacetText:
    def test_round_trip(self):
        delta = sp.cross_polytope(4)
        assert parse_facets(format_facets(delta)) == delta

    def test_comments_and_blanks_ignored(self):
        text = "# a square\n\n1 2\n2 3\n\n3 4\n# done\n1 4\n"
        assert parse_facets(text) == sp.cycle_complex([1, 2, 3, 4])

    def test_output_is_sorted_with_trailing_newline(self):
        text = format_facets(sp.boundary_simplex(2))
        assert text == "1 2\n1 3\n2 3\n"

    def test_bad_token_reports_line_number(self):
        with pytest.raises(ValueError, match="line 2"):
            parse_facets("1 2\n2 x\n")

    def test_empty_input_rejected(self):
        with pytest.raises(ValueError, match="no facets"):
            parse_facets("# nothing here\n")


class TestGraphText:
    def test_round_trip_with_isolated_vertex(self):
        g = Graph({1, 2, 3, 9}, [(1, 2), (2, 3)])
        assert parse_graph(format_graph(g)) == g

    def test_single_label_is_isolated_vertex(self):
        g = parse_graph("1 2\n7\n")
        assert g.vertices == frozenset({1, 2, 7})
        assert g.degree(7) == 0

    def test_format_lists_edges_then_isolated(self):
        g = Graph({1, 2, 5}, [(1, 2)])
        assert format_graph(g) == "1 2\n5\n"

    def test_three_labels_rejected(self):
        with pytest.raises(ValueError, match="1 or 2"):
            parse_graph("1 2 3\n")

    def test_empty_rejected(self):
        with pytest.raises(ValueError, match="no vertices"):
            parse_graph("")
