import xml.etree.ElementTree as ET
from functools import cmp_to_key

import pytest

from topoarith.errors import PreconditionError, UnsupportedFormatError
from topoarith.orders import OrderKind, compare
from topoarith.render import RenderSpec, figure_position, layout, leaf_sequence, render_order


def _sorted(kind, values):
    return sorted(values, key=cmp_to_key(lambda a, b: int(compare(kind, a, b))))


@pytest.mark.parametrize("kind", [OrderKind.FINAL_DIGITS, OrderKind.VARIANT])
def test_leaf_order_matches_comparator(kind):
    assert leaf_sequence(kind, 5) == _sorted(kind, range(32))


def test_signed_leaf_order():
    seq = leaf_sequence(OrderKind.SIGNED, 4)
    assert seq == _sorted(OrderKind.SIGNED, range(-15, 16))


def test_fd_figure_shape():
    seq = leaf_sequence(OrderKind.FINAL_DIGITS, 5)
    assert seq[:2] == [16, 8]  # highly even numbers drift left
    nodes = layout(OrderKind.FINAL_DIGITS, 5)
    assert len(nodes) == 2**6 - 1
    assert nodes[len(nodes) // 2].label == 0


def test_figure_positions_sort_like_fd():
    assert sorted(range(32), key=figure_position) == leaf_sequence(OrderKind.FINAL_DIGITS, 5)
    with pytest.raises(PreconditionError):
        figure_position(32)


def test_variant_zero_leftmost():
    assert leaf_sequence(OrderKind.VARIANT, 5)[0] == 0


def test_depth_two_text():
    text = render_order(RenderSpec(OrderKind.FINAL_DIGITS, 2, "text"))
    rows = [line.split() for line in text.splitlines() if not line.startswith("#")]
    assert [r[0] for r in rows] == ["00", "0", "10", "ε", "01", "1", "11"]
    labels = {r[0]: int(r[1]) for r in rows if len(r) == 2}
    assert labels == {"10": 2, "ε": 0, "1": 1, "11": 3}
    assert text.rstrip().endswith("# sequence: 2 0 1 3")


@pytest.mark.parametrize("kind", list(OrderKind))
def test_svg_parses(kind):
    root = ET.fromstring(render_order(RenderSpec(kind, 3, "svg")))
    assert root.tag.endswith("svg")
    labels = [t.text for t in root.iter("{http://www.w3.org/2000/svg}text")]
    assert "0" in labels


@pytest.mark.parametrize("kind", list(OrderKind))
def test_dot_is_well_formed(kind):
    dot = render_order(RenderSpec(kind, 3, "dot"))
    assert dot.startswith("digraph order_tree {") and dot.rstrip().endswith("}")
    assert dot.count("{") == dot.count("}")
    assert dot.count('"') % 2 == 0


def test_node_count_per_block():
    nodes = layout(OrderKind.SIGNED, 3)
    assert sum(n.block == "+" for n in nodes) == 2**4 - 1
    assert sum(n.block == "-" for n in nodes) == 2**4 - 1


def test_render_spec_validation():
    with pytest.raises(PreconditionError):
        RenderSpec(OrderKind.FINAL_DIGITS, 0)
    with pytest.raises(UnsupportedFormatError):
        RenderSpec(OrderKind.FINAL_DIGITS, 2, "png")


def test_render_is_deterministic():
    spec = RenderSpec(OrderKind.SIGNED, 4, "svg")
    assert render_order(spec) == render_order(spec)


@pytest.mark.parametrize("kind", list(OrderKind))
def test_dot_parses_with_a_graphviz_parser(kind):
    pydot = pytest.importorskip("pydot")
    graphs = pydot.graph_from_dot_data(render_order(RenderSpec(kind, 3, "dot")))
    assert graphs and len(graphs) == 1
    names = {n.get_name().strip('"') for n in graphs[0].get_nodes()}
    assert "ε" in names or "+ε" in names
