"""
Text formats.

Map documents are constructor traces, innermost first, after a ``hmap 1``
header::

    hmap 1
    i 1
    i 2
    l 0 1 2

Ring documents hold one ``<dart> <t|f>`` item per line, in break order. In
both formats ``#`` starts a comment and blank lines are ignored.
"""
from .errors import ParseError
from .fmap import V, FreeMap, Insert, Link, Dim
from .index import index_of
from .rings import RingItem

HEADER = "hmap 1"


def _content_lines(text):
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line, raw


def _natural(token, no, raw):
    if not (token.isascii() and token.isdigit()):
        raise ParseError(no, raw, f"expected a natural number, got {token!r}")
    return int(token)


def parse_map(text) -> FreeMap:
    trace = []
    header_seen = False
    for no, line, raw in _content_lines(text):
        tokens = line.split()
        if not header_seen:
            if tokens[0] != "hmap":
                raise ParseError(no, raw, "missing 'hmap 1' header")
            if tokens[1:] != ["1"]:
                raise ParseError(no, raw, "unsupported format version")
            header_seen = True
            continue
        op = tokens[0]
        if op == "i":
            if len(tokens) != 2:
                raise ParseError(no, raw, "'i' takes one dart")
            trace.append(Insert(_natural(tokens[1], no, raw)))
        elif op == "l":
            if len(tokens) != 4:
                raise ParseError(no, raw, "'l' takes a dimension and two darts")
            if tokens[1] not in ("0", "1"):
                raise ParseError(no, raw, "dimension must be 0 or 1")
            x, y = _natural(tokens[2], no, raw), _natural(tokens[3], no, raw)
            trace.append(Link(Dim(int(tokens[1])), x, y))
        else:
            raise ParseError(no, raw, f"unknown constructor {op!r}")
    if not header_seen:
        raise ParseError(1, text.splitlines()[0] if text else "", "missing 'hmap 1' header")
    return FreeMap(tuple(trace)) if trace else V


def serialize_map(m) -> str:
    lines = [HEADER]
    for c in m.trace:
        if isinstance(c, Insert):
            lines.append(f"i {c.x}")
        else:
            lines.append(f"l {int(c.k)} {c.x} {c.y}")
    return "\n".join(lines) + "\n"


def parse_ring(text):
    items = []
    for no, line, raw in _content_lines(text):
        tokens = line.split()
        if len(tokens) != 2 or tokens[1] not in ("t", "f"):
            raise ParseError(no, raw, "expected '<dart> <t|f>'")
        items.append(RingItem(_natural(tokens[0], no, raw), tokens[1] == "t"))
    return tuple(items)


def serialize_ring(l) -> str:
    return "".join(f"{x} {'t' if b else 'f'}\n" for x, b in l)


def to_dot(m) -> str:
    """Graphviz source: one cluster per component, 0-links solid, 1-links dashed."""
    idx = index_of(m)
    components = {}
    for z in idx.darts:
        components.setdefault(idx.comp_id[z], []).append(z)
    lines = ["digraph hmap {", "  node [shape=circle];"]
    for label, members in sorted(components.items()):
        lines.append(f"  subgraph cluster_{label} {{")
        lines.append(f'    label="component {label}";')
        lines.extend(f"    {z};" for z in members)
        lines.append("  }")
    for k, style in ((Dim.ZERO, "solid"), (Dim.ONE, "dashed")):
        for x, y in sorted(idx.succ[k].items()):
            lines.append(f'  {x} -> {y} [style={style}, label="{int(k)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
