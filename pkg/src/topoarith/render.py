"""Suffix-class trees for the three orders, as text, Graphviz DOT or SVG.

Node ``s`` of the tree is the class of numbers ending in ``s``; its children
prepend a 0 or a 1.  A number is drawn at the node of its own canonical
binary string.  The horizontal order is in-order for the final-digits order,
pre-order for the variant order (so 0 is leftmost), and for the signed order
a mirrored negative tree, then 0, then the positive tree.
"""

from __future__ import annotations

import html
from dataclasses import dataclass
from typing import Iterator, Optional

from .errors import PreconditionError, UnsupportedFormatError
from .orders import OrderKind

__all__ = ["RenderSpec", "TreeNode", "layout", "leaf_sequence", "render_order", "figure_position", "FORMATS"]

FORMATS = ("text", "dot", "svg")


@dataclass(frozen=True)
class RenderSpec:
    order: OrderKind
    depth: int = 5
    format: str = "text"

    def __post_init__(self) -> None:
        if self.depth < 1:
            raise PreconditionError("tree depth must be at least 1")
        if self.format not in FORMATS:
            raise UnsupportedFormatError(f"unknown format {self.format!r}; expected one of {FORMATS}")


@dataclass(frozen=True)
class TreeNode:
    block: str  # "" for the unsigned trees, "+" or "-" for signed blocks, "0" for zero
    bits: tuple[int, ...]  # least significant first
    label: Optional[int]

    @property
    def depth(self) -> int:
        return len(self.bits)

    @property
    def name(self) -> str:
        if self.block == "0":
            return "0"
        return self.block + ("".join(str(b) for b in reversed(self.bits)) or "ε")

    @property
    def parent(self) -> Optional["TreeNode"]:
        if not self.bits or self.block == "0":
            return None
        return _node(self.block, self.bits[:-1])


def _label(block: str, bits: tuple[int, ...]) -> Optional[int]:
    if bits and bits[-1] == 0:
        return None  # leading zero: no number is written this way
    value = sum(b << i for i, b in enumerate(bits))
    if block and not value:
        return None  # the sign blocks hold no zero
    return -value if block == "-" else value


def _node(block: str, bits: tuple[int, ...]) -> TreeNode:
    return TreeNode(block, bits, _label(block, bits))


def _inorder(block: str, bits: tuple[int, ...], depth: int, mirror: bool) -> Iterator[TreeNode]:
    if len(bits) > depth:
        return
    first, second = (1, 0) if mirror else (0, 1)
    yield from _inorder(block, bits + (first,), depth, mirror)
    yield _node(block, bits)
    yield from _inorder(block, bits + (second,), depth, mirror)


def _preorder(bits: tuple[int, ...], depth: int) -> Iterator[TreeNode]:
    if len(bits) > depth:
        return
    yield _node("", bits)
    yield from _preorder(bits + (0,), depth)
    yield from _preorder(bits + (1,), depth)


def layout(order: OrderKind, depth: int) -> list[TreeNode]:
    """All tree nodes in left-to-right display order."""
    if order is OrderKind.FINAL_DIGITS:
        return list(_inorder("", (), depth, False))
    if order is OrderKind.VARIANT:
        return list(_preorder((), depth))
    neg = list(_inorder("-", (), depth, True))
    pos = list(_inorder("+", (), depth, False))
    return neg + [TreeNode("0", (), 0)] + pos


def leaf_sequence(order: OrderKind, depth: int) -> list[int]:
    """Number labels in left-to-right order."""
    return [n.label for n in layout(order, depth) if n.label is not None]


def figure_position(n: int) -> int:
    """Horizontal position of ``n < 32`` in the depth-5 final-digits figure:
    ``sum(d_i * 2**(5-i)) + 2**(4-len)``, doubled to stay integral."""
    k = n.bit_length()
    if k > 5:
        raise PreconditionError("the figure only shows numbers below 32")
    return sum(((n >> (i - 1)) & 1) << (6 - i) for i in range(1, k + 1)) + (1 << (5 - k))


_TITLES = {
    OrderKind.FINAL_DIGITS: "final-digits order",
    OrderKind.VARIANT: "variant order",
    OrderKind.SIGNED: "signed final-digits order",
}


def _text(order: OrderKind, nodes: list[TreeNode]) -> str:
    lines = [f"# {_TITLES[order]}, depth {max(n.depth for n in nodes)}; read top to bottom as left to right"]
    width = max(len(n.name) + 2 * n.depth for n in nodes) + 2
    for n in nodes:
        cell = "  " * n.depth + n.name
        lines.append(cell if n.label is None else f"{cell:<{width}}{n.label}")
    lines.append("# sequence: " + " ".join(str(n.label) for n in nodes if n.label is not None))
    return "\n".join(lines) + "\n"


def _dot_id(n: TreeNode) -> str:
    return '"' + n.name + '"'


def _dot(order: OrderKind, nodes: list[TreeNode]) -> str:
    out = [
        "digraph order_tree {",
        f'  label="{_TITLES[order]}";',
        "  ordering=out;",
        '  node [shape=box, fontname="Helvetica", fontsize=10];',
    ]
    for n in nodes:
        text = n.name if n.label is None else f"{n.name}\\n{n.label}"
        style = "" if n.label is not None else ", style=dashed"
        out.append(f'  {_dot_id(n)} [label="{text}"{style}];')
    for n in nodes:
        p = n.parent
        if p is not None:
            out.append(f"  {_dot_id(p)} -> {_dot_id(n)};")
    # invisible chain pins the left-to-right order within each rank
    by_depth: dict[int, list[TreeNode]] = {}
    for n in nodes:
        by_depth.setdefault(n.depth, []).append(n)
    for d, row in sorted(by_depth.items()):
        out.append("  { rank=same; " + " ".join(_dot_id(n) for n in row) + "; }")
        for a, b in zip(row, row[1:]):
            out.append(f"  {_dot_id(a)} -> {_dot_id(b)} [style=invis];")
    out.append("}")
    return "\n".join(out) + "\n"


def _svg(order: OrderKind, nodes: list[TreeNode]) -> str:
    dx, dy, pad = 28, 56, 24
    pos = {n: (pad + i * dx, pad + n.depth * dy) for i, n in enumerate(nodes)}
    width = pad * 2 + dx * (len(nodes) - 1)
    height = pad * 2 + dy * max(n.depth for n in nodes) + 16
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}" font-family="Helvetica, Arial, sans-serif" font-size="10">',
        f"  <title>{html.escape(_TITLES[order])}</title>",
    ]
    for n in nodes:
        p = n.parent
        if p is not None and p in pos:
            (x1, y1), (x2, y2) = pos[p], pos[n]
            out.append(f'  <line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="#999" />')
    for n in nodes:
        x, y = pos[n]
        fill = "#fff" if n.label is None else "#dde8f6"
        out.append(f'  <circle cx="{x}" cy="{y}" r="9" fill="{fill}" stroke="#336" />')
        if n.label is not None:
            out.append(f'  <text x="{x}" y="{y + 3}" text-anchor="middle">{n.label}</text>')
        out.append(
            f'  <text x="{x}" y="{y + 20}" text-anchor="middle" fill="#666" font-size="7">'
            f"{html.escape(n.name)}</text>"
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_order(spec: RenderSpec) -> str:
    nodes = layout(spec.order, spec.depth)
    if spec.format == "text":
        return _text(spec.order, nodes)
    if spec.format == "dot":
        return _dot(spec.order, nodes)
    return _svg(spec.order, nodes)
