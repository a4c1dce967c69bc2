"""ASCII pictures of zigzags and templates.

A word renders as its ribbon: row i holds the i-th part of the
composition, each row starting under the last box of the previous one.
A template renders the same way with every infinite cluster drawn as a
two-box strip of '*' (the strip keeps going) and finite clusters as
'#' boxes.
"""

from __future__ import annotations

from .templates import Template
from .words import ROOT, BinaryWord, Vertex, composition_of_word


def _ribbon(parts: tuple[int, ...], tags: list[str]) -> str:
    lines = []
    offset = 0
    pos = 0
    for i, p in enumerate(parts):
        row = "".join(tags[pos:pos + p])
        lines.append(" " * offset + row)
        pos += p
        offset += p - 1
    return "\n".join(lines)


def render_vertex(v: Vertex) -> str:
    if v is ROOT:
        return "(empty diagram)"
    parts = composition_of_word(v)
    return _ribbon(parts, ["#"] * (len(v) + 1))


def render_template(t: Template) -> str:
    """Ribbon of the template with infinite strips drawn as '*' pairs."""
    symbols: list[str] = []
    tags: list[str] = []
    for c in t.clusters:
        width = 2 if c.is_infinite else c.mult
        symbols.append(c.sign * width)
        tags.extend(("*" if c.is_infinite else "#") * width)
    word = BinaryWord.from_str("".join(symbols))
    # first box belongs to the first cluster; box i > 0 to symbol i - 1
    box_tags = [tags[0]] + tags
    parts = composition_of_word(word)
    return _ribbon(parts, box_tags[:len(word) + 1])
