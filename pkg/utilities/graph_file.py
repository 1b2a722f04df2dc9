"""Edge-list files: one pair of 1-indexed vertex labels per line, '#' comments."""
from errors.exceptions import GraphFormatError


def parse_edge_list(text, vertices=None):
    """Return (vertex_count, edges); vertex_count is the largest label unless given."""
    edges = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"expected two vertex labels, got {len(parts)}", line=number)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"vertex labels must be integers: {line!r}", line=number)
        if u < 1 or v < 1:
            raise GraphFormatError(f"vertex labels start at 1: {line!r}", line=number)
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", line=number)
        if vertices is not None and max(u, v) > vertices:
            raise GraphFormatError(f"vertex {max(u, v)} exceeds --vertices {vertices}", line=number)
        edges.append((u, v))

    if not edges:
        raise GraphFormatError("edge list is empty")
    vertex_count = vertices if vertices is not None else max(max(e) for e in edges)
    return vertex_count, edges


def read_edge_list(path, vertices=None):
    try:
        with open(path, "r", encoding="utf-8") as f:
            text = f.read()
    except OSError as e:
        raise GraphFormatError(f"cannot read {path}: {e.strerror}")
    return parse_edge_list(text, vertices)
