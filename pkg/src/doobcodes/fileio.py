"""Text formats: "doobset v1", "doobcol v1", and 2-partition files.

doobset v1:  line 1 is `doob <m> <n>`, then one decimal vertex index per
line, strictly ascending, LF-terminated.

doobcol v1:  line 1 is `doob <m> <n>`, then one line per vertex in ascending
index order with the color written as a K4 element "cd" (c,d in {0,1}).

partition:   two doobset v1 payloads joined by a line containing `---`.
"""

from __future__ import annotations

from doobcodes.graphs import DoobParams, FormatError, VertexSet


def _parse_header(line: str) -> DoobParams:
    parts = line.split()
    if len(parts) != 3 or parts[0] != "doob":
        raise FormatError(f"bad header {line!r}, expected 'doob <m> <n>'")
    try:
        m, n = int(parts[1]), int(parts[2])
    except ValueError:
        raise FormatError(f"bad header {line!r}: m and n must be integers") from None
    try:
        return DoobParams(m, n)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def format_doobset(s: VertexSet) -> str:
    lines = [f"doob {s.params.m} {s.params.n}"]
    lines.extend(str(i) for i in s.indices())
    return "\n".join(lines) + "\n"


def parse_doobset(text: str) -> VertexSet:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise FormatError("empty doobset payload")
    params = _parse_header(lines[0])
    mask = 0
    previous = -1
    for ln in lines[1:]:
        try:
            idx = int(ln.strip())
        except ValueError:
            raise FormatError(f"bad vertex index line {ln!r}") from None
        if idx <= previous:
            raise FormatError("vertex indices must be strictly ascending")
        if not 0 <= idx < params.num_vertices:
            raise FormatError(f"vertex index {idx} out of range for D({params.m},{params.n})")
        mask |= 1 << idx
        previous = idx
    return VertexSet(params, mask)


def format_doobcol(params: DoobParams, colors) -> str:
    colors = list(colors)
    if len(colors) != params.num_vertices:
        raise FormatError("coloring must cover every vertex")
    lines = [f"doob {params.m} {params.n}"]
    for c in colors:
        lines.append(f"{c >> 1}{c & 1}")
    return "\n".join(lines) + "\n"


def parse_doobcol(text: str) -> tuple[DoobParams, tuple[int, ...]]:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise FormatError("empty doobcol payload")
    params = _parse_header(lines[0])
    body = lines[1:]
    if len(body) != params.num_vertices:
        raise FormatError(
            f"expected {params.num_vertices} color lines, got {len(body)}"
        )
    colors = []
    for ln in body:
        if len(ln) != 2 or ln[0] not in "01" or ln[1] not in "01":
            raise FormatError(f"bad color {ln!r}, expected two binary digits")
        colors.append(2 * int(ln[0]) + int(ln[1]))
    return params, tuple(colors)


def format_partition(cell_a: VertexSet, cell_b: VertexSet) -> str:
    return format_doobset(cell_a) + "---\n" + format_doobset(cell_b)


def parse_partition(text: str) -> tuple[VertexSet, VertexSet]:
    parts = text.split("\n---")
    if len(parts) != 2:
        raise FormatError("partition file must contain exactly one '---' separator")
    a = parse_doobset(parts[0])
    b = parse_doobset(parts[1])
    if a.params != b.params:
        raise FormatError("partition cells have different parameters")
    return a, b


def load_doobset(path) -> VertexSet:
    with open(path, "r", encoding="ascii") as fh:
        return parse_doobset(fh.read())


def save_doobset(path, s: VertexSet) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(format_doobset(s))


def load_doobcol(path) -> tuple[DoobParams, tuple[int, ...]]:
    with open(path, "r", encoding="ascii") as fh:
        return parse_doobcol(fh.read())


def save_doobcol(path, params: DoobParams, colors) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(format_doobcol(params, colors))


def load_partition(path) -> tuple[VertexSet, VertexSet]:
    with open(path, "r", encoding="ascii") as fh:
        return parse_partition(fh.read())


def save_partition(path, cell_a: VertexSet, cell_b: VertexSet) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(format_partition(cell_a, cell_b))
