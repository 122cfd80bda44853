"""Unit tests for hypergraph parsing and serialization."""

import io

import pytest

from hypereuler.core.exceptions import (
    EmptyEdgeError,
    EmptyVertexSetError,
    ParseError,
    UnknownVertexError,
)
from hypereuler.models.enums import FileFormat
from hypereuler.models.hypergraph import Hypergraph
from hypereuler.repositories.hypergraph_repository import HypergraphRepository


@pytest.fixture
def repository() -> HypergraphRepository:
    return HypergraphRepository()


class TestParseJson:
    """Test the JSON format."""

    def test_order_form(self, repository):
        """Test vertices given as an order."""
        hypergraph = repository.parse('{"vertices": 4, "edges": [[0, 1, 2], [0, 1, 3]]}')
        assert hypergraph.order == 4
        assert [edge.sorted for edge in hypergraph.edges] == [(0, 1, 2), (0, 1, 3)]
        assert hypergraph.labels is None

    def test_label_form(self, repository):
        """Test vertices given as labels are sorted into dense ids."""
        hypergraph = repository.parse('{"vertices": ["b", "a", "c"], "edges": [["c", "a"]]}')
        assert hypergraph.edge(0).sorted == (0, 2)
        assert hypergraph.label(0) == "a"

    def test_zero_vertices(self, repository):
        """Test an empty vertex set is rejected."""
        with pytest.raises(EmptyVertexSetError):
            repository.parse('{"vertices": 0, "edges": []}')

    def test_unknown_vertex(self, repository):
        """Test out-of-range references are rejected."""
        with pytest.raises(UnknownVertexError):
            repository.parse('{"vertices": 3, "edges": [[0, 3]]}')

    def test_empty_edge(self, repository):
        """Test empty edges are rejected."""
        with pytest.raises(EmptyEdgeError):
            repository.parse('{"vertices": 3, "edges": [[0, 1], []]}')

    def test_invalid_json(self, repository):
        """Test malformed JSON is a parse error."""
        with pytest.raises(ParseError) as exc_info:
            repository.parse('{"vertices": 3, "edges": [')
        assert exc_info.value.code == "MALFORMED"
        assert exc_info.value.exit_code == 4

    def test_negative_order(self, repository):
        """Test negative orders fail validation."""
        with pytest.raises(ParseError):
            repository.parse('{"vertices": -1, "edges": []}')

    def test_repeated_vertex_in_edge(self, repository):
        """Test an edge cannot list a vertex twice."""
        with pytest.raises(ParseError):
            repository.parse('{"vertices": 3, "edges": [[0, 0, 1]]}')


class TestParseText:
    """Test the plain-text format."""

    def test_labels(self, repository):
        """Test one edge per line with label vertices."""
        hypergraph = repository.parse("a b c\na b d\n")
        assert hypergraph.order == 4
        assert [edge.sorted for edge in hypergraph.edges] == [(0, 1, 2), (0, 1, 3)]
        assert [hypergraph.label(v) for v in hypergraph.vertices] == ["a", "b", "c", "d"]

    def test_numeric_labels_sort_numerically(self, repository):
        """Test integer labels keep their numeric order and become dense ids."""
        hypergraph = repository.parse("10 2\n2 1\n")
        assert [hypergraph.label(v) for v in hypergraph.vertices] == ["1", "2", "10"]

    def test_dense_numeric_labels_dropped(self, repository):
        """Test labels spelling 0..n-1 are not stored."""
        assert repository.parse("0 1 2\n1 2 3\n").labels is None

    def test_comments_and_blank_lines(self, repository):
        """Test comments and blank lines are skipped."""
        hypergraph = repository.parse("# triples\n\na b c\n")
        assert hypergraph.size == 1

    def test_vertices_header(self, repository):
        """Test the header fixes the vertex set, keeping isolated vertices."""
        hypergraph = repository.parse("!vertices 5\n0 1 2\n")
        assert hypergraph.order == 5
        assert hypergraph.degree(4) == 0

    def test_header_unknown_vertex(self, repository):
        """Test edges outside the declared range carry their line."""
        with pytest.raises(UnknownVertexError) as exc_info:
            repository.parse("!vertices 3\n0 1\n1 5\n")
        assert exc_info.value.line == 3

    def test_unknown_directive(self, repository):
        """Test other directives are rejected."""
        with pytest.raises(ParseError):
            repository.parse("!edges 3\n0 1\n")

    def test_repeated_header(self, repository):
        """Test the header may appear once."""
        with pytest.raises(ParseError):
            repository.parse("!vertices 3\n!vertices 3\n0 1\n")

    def test_empty_input(self, repository):
        """Test input without vertices is an empty vertex set."""
        with pytest.raises(EmptyVertexSetError):
            repository.parse("# nothing here\n")


class TestSerialize:
    """Test canonical serialization."""

    def test_json_order_form(self, repository):
        """Test dense unlabeled hypergraphs use the order form."""
        hypergraph = Hypergraph.from_edges(4, [[2, 0, 1], [3, 1, 0]])
        assert repository.serialize(hypergraph) == '{"vertices":4,"edges":[[0,1,2],[0,1,3]]}\n'

    def test_json_label_form(self, repository):
        """Test labeled hypergraphs keep their labels."""
        hypergraph = repository.parse("a b c\n")
        assert repository.serialize(hypergraph) == (
            '{"vertices":["a","b","c"],"edges":[["a","b","c"]]}\n'
        )

    def test_text_with_labels(self, repository):
        """Test text output uses labels when every vertex is covered."""
        hypergraph = repository.parse("b a c\na b d\n")
        assert repository.serialize(hypergraph, FileFormat.TEXT) == "a b c\na b d\n"

    def test_text_with_header(self, repository):
        """Test isolated vertices force the header form."""
        hypergraph = Hypergraph.from_edges(4, [[0, 1]])
        assert repository.serialize(hypergraph, FileFormat.TEXT) == "!vertices 4\n0 1\n"

    def test_text_reparses_to_same_edges(self, repository):
        """Test text output parses back to the same edge sets."""
        original = repository.parse("!vertices 6\n0 1 2 3\n0 1 4 5\n2 3 4 5\n")
        again = repository.parse(repository.serialize(original, FileFormat.TEXT))
        assert again.order == original.order
        assert [e.members for e in again.edges] == [e.members for e in original.edges]


class TestFileAccess:
    """Test reading and writing files."""

    def test_write_then_read(self, repository, tmp_path, k4_3):
        """Test a written file reads back."""
        path = tmp_path / "k4.json"
        repository.write(k4_3, path)
        assert repository.read(path).size == 4

    def test_missing_file(self, repository, tmp_path):
        """Test missing files are IO parse errors."""
        with pytest.raises(ParseError) as exc_info:
            repository.read(tmp_path / "missing.json")
        assert exc_info.value.code == "IO_ERROR"

    def test_undecodable_file(self, repository, tmp_path):
        """Test invalid UTF-8 is malformed input, not an I/O failure."""
        path = tmp_path / "binary.txt"
        path.write_bytes(b"0 1\n\xff\xfe 2\n")
        with pytest.raises(ParseError) as exc_info:
            repository.read(path)
        assert exc_info.value.code == "MALFORMED"
        assert exc_info.value.exit_code == 4

    def test_dash_reads_stdin(self, repository, monkeypatch):
        """Test ``-`` reads the hypergraph from stdin."""
        monkeypatch.setattr("sys.stdin", io.StringIO("0 1 2\n0 1 3\n"))
        assert repository.read("-").size == 2
