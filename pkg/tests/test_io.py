import pytest
from hypothesis import given, settings, strategies as st

from toric_ugb.binomial import Binomial, walk_to_binomial
from toric_ugb.corpus import TRIFORCE_WALK, complete, random_corpus
from toric_ugb.errors import DimensionMismatch, InvalidBinomial, ParseError
from toric_ugb.graver import graver_basis
from toric_ugb.io import format_basis, format_binomial, format_graph, parse_basis, parse_binomial, parse_graph


def test_parse_c4():
    g = parse_graph("4 4\n1 2\n2 3\n3 4\n4 1")
    assert g.n == 4 and g.edges == ((0, 1), (1, 2), (2, 3), (3, 0))


def test_duplicate_edge_reported_at_file_line():
    with pytest.raises(ParseError) as exc:
        parse_graph("3 3\n1 2\n2 3\n1 2")
    assert exc.value.line == 4


def test_comments_shift_line_numbers():
    with pytest.raises(ParseError) as exc:
        parse_graph("# header next\n3 2\n\n1 2\n1 1\n")
    assert exc.value.line == 5


@pytest.mark.parametrize("text", ["", "4\n", "4 2\n1 2\n", "3 1\n1 x\n", "3 1\n1 4\n", "0 0\n"])
def test_malformed_graphs(text):
    with pytest.raises(ParseError):
        parse_graph(text)


def test_triforce_file(data_dir, tri):
    g = parse_graph((data_dir / "triforce.txt").read_text())
    assert g == tri


def test_format_binomial_styles(c4, tri):
    b = walk_to_binomial(c4, (0, 1, 2, 3))
    assert format_binomial(b) == "e1*e3 - e2*e4"
    assert format_binomial(b, "vector") == "1 -1 1 -1"
    t = walk_to_binomial(tri, TRIFORCE_WALK)
    assert format_binomial(t) == "e1*e3*e5*e7*e9*e11 - e2*e4*e6*e8*e10*e12"
    with pytest.raises(ValueError):
        format_binomial(b, "latex")


def test_squared_factor(bridged):
    b = walk_to_binomial(bridged, (2, 0, 1, 3, 4, 5, 6, 3))
    assert format_binomial(b) == "e2*e3*e5*e7 - e1*e4^2*e6"
    assert parse_binomial(format_binomial(b), bridged.m) == b


def test_parse_binomial_forms(c4):
    expected = Binomial((1, 0, 1, 0), (0, 1, 0, 1))
    assert parse_binomial("e1*e3 - e2*e4", 4) == expected
    assert parse_binomial("1 -1 1 -1", 4) == expected
    with pytest.raises(ParseError):
        parse_binomial("e1*e9 - e2", 4)
    with pytest.raises(DimensionMismatch):
        parse_binomial("1 -1 1", 4)


def test_parse_basis_c4(c4, data_dir):
    basis = parse_basis((data_dir / "c4_basis.txt").read_text(), c4)
    assert len(basis) == 1 and basis.source == "imported"
    assert basis == graver_basis(c4)


def test_parse_basis_errors(c4):
    with pytest.raises(InvalidBinomial) as exc:
        parse_basis("1 4\n3 0 0 -1\n", c4)
    assert exc.value.row == 1
    with pytest.raises(InvalidBinomial) as exc:
        parse_basis("2 4\n1 -1 1 -1\n1 1 -1 -1\n", c4)
    assert exc.value.row == 2
    with pytest.raises(DimensionMismatch):
        parse_basis("1 5\n1 -1 1 -1 0\n", c4)
    with pytest.raises(ParseError):
        parse_basis("2 4\n1 -1 1 -1\n", c4)


def test_imported_rows_are_canonicalized(c4):
    assert parse_basis("1 4\n-1 1 -1 1\n", c4) == graver_basis(c4)


def test_basis_file_is_byte_deterministic():
    g = complete(5)
    text = format_basis(graver_basis(g), g.m)
    assert text.endswith("\n") and "  " not in text
    assert text.splitlines()[0] == "30 10"
    assert format_basis(parse_basis(text, g), g.m) == text
    assert format_basis(graver_basis(g, workers=2), g.m) == text


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(random_corpus()[:25]))
def test_round_trips(g):
    assert parse_graph(format_graph(g)) == g
    basis = graver_basis(g)
    assert parse_basis(format_basis(basis, g.m), g) == basis
    for b in basis:
        for style in ("monomial", "vector"):
            assert parse_binomial(format_binomial(b, style), g.m) == b
