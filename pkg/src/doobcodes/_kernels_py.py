"""Pure-Python search kernels (fallback backend).

The compiled extension doobcodes._kernels implements the same five functions
with identical semantics and results; doobcodes.kernels selects between them
at import time.  Everything here works on plain int bitmasks.

Kernel contracts:
  * graphs passed as sequences of per-vertex neighbor bitmasks;
  * catalogs passed as sequences of factor-value bitmasks (at most 64 entries
    so candidate sets fit machine words in the compiled backend);
  * scan results ordered by ascending subset mask;
  * assignment searches use most-constrained-row-first ordering with forward
    checking; the returned assignment tuples are indexed by row and sorted.

`first_choices` restricts the catalog entries allowed for row 0, which
partitions the solution space for thread fan-out regardless of the internal
assignment order.
"""

from __future__ import annotations

from typing import Sequence


def independent_sets(nbrs: Sequence[int], size: int) -> list[int]:
    """All independent subsets of exactly `size` vertices, as bitmasks."""
    n = len(nbrs)
    out: list[int] = []

    def grow(mask: int, start: int, left: int) -> None:
        if left == 0:
            out.append(mask)
            return
        for v in range(start, n - left + 1):
            if not nbrs[v] & mask:
                grow(mask | (1 << v), v + 1, left - 1)

    grow(0, 0, size)
    out.sort()
    return out


def max_boundary_sets(nbrs: Sequence[int]) -> tuple[int, list[int]]:
    """Full 2^n subset scan for the maximum edge boundary; returns maximizers."""
    n = len(nbrs)
    full = (1 << n) - 1
    best = -1
    winners: list[int] = []
    for mask in range(1 << n):
        cut = 0
        t = mask
        while t:
            low = t & -t
            cut += (nbrs[low.bit_length() - 1] & ~mask & full).bit_count()
            t ^= low
        if cut > best:
            best = cut
            winners = [mask]
        elif cut == best:
            winners.append(mask)
    return best, winners


def equitable_splits(nbrs: Sequence[int]) -> list[tuple[int, int, int, int, int]]:
    """All proper nonempty subsets whose 2-partition against the complement is
    equitable, as (mask, s11, s12, s21, s22) with ascending mask."""
    n = len(nbrs)
    degs = [x.bit_count() for x in nbrs]
    out: list[tuple[int, int, int, int, int]] = []
    for mask in range(1, (1 << n) - 1):
        s11 = s21 = -1
        s12 = s22 = -1
        ok = True
        for u in range(n):
            k = (nbrs[u] & mask).bit_count()
            if (mask >> u) & 1:
                if s11 < 0:
                    s11, s12 = k, degs[u] - k
                elif s11 != k or s12 != degs[u] - k:
                    ok = False
                    break
            else:
                if s21 < 0:
                    s21, s22 = k, degs[u] - k
                elif s21 != k or s22 != degs[u] - k:
                    ok = False
                    break
        if ok:
            out.append((mask, s11, s12, s21, s22))
    return out


def assign_rows_disjoint(
    w_nbrs: Sequence[int],
    catalog: Sequence[int],
    first_choices: Sequence[int] | None = None,
    count_only: bool = False,
):
    """Assign one catalog entry per row so adjacent rows get disjoint entries.

    Rows are the vertices of the graph given by w_nbrs; rows are picked
    most-constrained-first.  Returns all complete assignments as tuples of
    catalog indices, sorted; with count_only, just their number.
    """
    nrows = len(w_nbrs)
    ncat = len(catalog)
    full = (1 << ncat) - 1
    disjoint = [
        sum(1 << j for j in range(ncat) if not catalog[i] & catalog[j])
        for i in range(ncat)
    ]
    cands = [full] * nrows
    if first_choices is not None:
        cands[0] = sum(1 << i for i in first_choices)
    done = [False] * nrows
    assigned = [0] * nrows
    out: list[tuple[int, ...]] = []
    found = [0]

    def rec(depth: int) -> None:
        if depth == nrows:
            if count_only:
                found[0] += 1
            else:
                out.append(tuple(assigned))
            return
        w = -1
        best = ncat + 1
        for i in range(nrows):
            if not done[i]:
                k = cands[i].bit_count()
                if k < best:
                    best = k
                    w = i
        done[w] = True
        c = cands[w]
        while c:
            low = c & -c
            ci = low.bit_length() - 1
            c ^= low
            assigned[w] = ci
            saved = []
            ok = True
            t = w_nbrs[w]
            while t:
                lb = t & -t
                w2 = lb.bit_length() - 1
                t ^= lb
                if not done[w2]:
                    saved.append((w2, cands[w2]))
                    cands[w2] &= disjoint[ci]
                    if not cands[w2]:
                        ok = False
            if ok:
                rec(depth + 1)
            for w2, old in saved:
                cands[w2] = old
        done[w] = False

    rec(0)
    if count_only:
        return found[0]
    out.sort()
    return out


def assign_rows_lines(
    nrows: int,
    ncols: int,
    row_catalog: Sequence[int],
    lines: Sequence[tuple[Sequence[int], Sequence[int]]],
    first_choices: Sequence[int] | None = None,
    count_only: bool = False,
):
    """Assign one row-catalog entry per row under per-line column constraints.

    Each line is (positions, column_catalog): `positions` lists the rows of
    the line in slot order, and for every column c < ncols the slot-mask
    { s : column c of row positions[s] is set } must equal some column-catalog
    entry.  Rows are picked most-constrained-first with forward checking:
    whenever a line column becomes single-valued on some slot, the viable-entry
    sets of the affected rows shrink.  Returns all complete assignments as
    tuples of row-catalog indices, sorted; with count_only, just their number.
    """
    ncat = len(row_catalog)
    full_rows = (1 << ncat) - 1
    # row-catalog entries by bit value at each column
    rowbit = [[0, 0] for _ in range(ncols)]
    for ei, e in enumerate(row_catalog):
        for c in range(ncols):
            rowbit[c][(e >> c) & 1] |= 1 << ei
    # per (line, slot, bit): column-catalog entries with that slot bit
    filters = []
    members = []  # line -> list of (row, slot)
    col_full = []
    slot_of = [[] for _ in range(nrows)]
    for li, (positions, colcat) in enumerate(lines):
        nslots = len(positions)
        f = [[0, 0] for _ in range(nslots)]
        for ei, e in enumerate(colcat):
            for s in range(nslots):
                f[s][(e >> s) & 1] |= 1 << ei
        filters.append(f)
        col_full.append((1 << len(colcat)) - 1)
        members.append([(w, s) for s, w in enumerate(positions)])
        for s, w in enumerate(positions):
            slot_of[w].append((li, s))

    colcands = [[col_full[li]] * ncols for li in range(len(lines))]
    viable = [full_rows] * nrows
    if first_choices is not None:
        viable[0] = sum(1 << i for i in first_choices)
    done = [False] * nrows
    assigned = [0] * nrows
    out: list[tuple[int, ...]] = []
    found = [0]

    def rec(depth: int) -> None:
        if depth == nrows:
            if count_only:
                found[0] += 1
            else:
                out.append(tuple(assigned))
            return
        w = -1
        best = ncat + 1
        for i in range(nrows):
            if not done[i]:
                k = viable[i].bit_count()
                if k < best:
                    best = k
                    w = i
        if best == 0:
            return
        done[w] = True
        v = viable[w]
        while v:
            low = v & -v
            ci = low.bit_length() - 1
            v ^= low
            entry = row_catalog[ci]
            assigned[w] = ci
            col_trail = []
            row_trail = []
            ok = True
            for li, s in slot_of[w]:
                flt = filters[li][s]
                cc = colcands[li]
                for c in range(ncols):
                    old = cc[c]
                    new = old & flt[(entry >> c) & 1]
                    if new == old:
                        continue
                    col_trail.append((li, c, old))
                    cc[c] = new
                    if not new:
                        ok = False
                        break
                    # forward checking on the other rows of this line
                    for w2, s2 in members[li]:
                        if done[w2] or w2 == w:
                            continue
                        f2 = filters[li][s2]
                        allow0 = f2[0] & new
                        allow1 = f2[1] & new
                        if allow0 and allow1:
                            continue
                        if not allow0 and not allow1:
                            ok = False
                            break
                        keep = rowbit[c][1 if allow1 else 0]
                        oldv = viable[w2]
                        newv = oldv & keep
                        if newv != oldv:
                            row_trail.append((w2, oldv))
                            viable[w2] = newv
                            if not newv:
                                ok = False
                                break
                    if not ok:
                        break
                if not ok:
                    break
            if ok:
                rec(depth + 1)
            for li, c, old in reversed(col_trail):
                colcands[li][c] = old
            for w2, old in reversed(row_trail):
                viable[w2] = old
        done[w] = False

    rec(0)
    if count_only:
        return found[0]
    out.sort()
    return out


def scan_two_mds_structure(
    nrows: int,
    ncols: int,
    row_catalog: Sequence[int],
    lines: Sequence[tuple[Sequence[int], Sequence[int]]],
    w_nbrs: Sequence[int],
    col_nbrs: Sequence[int],
    first_choices: Sequence[int] | None = None,
) -> tuple[int, int, int, int, int]:
    """Enumerate like assign_rows_lines but only tally structural facts.

    For two-coordinate products (rows indexed by one factor, columns by the
    other), classifies every solution without materializing it:

      * separable: the characteristic function splits between the two
        coordinates, i.e. every row equals the first row or its complement;
      * rectangle-free: no 2x2 parity rectangle across the two coordinates
        (the interaction-graph route; must agree with separable);
      * connected: the induced subgraph is connected (BFS over members).

    Returns (total, separable, connected, prop1_violations, disagreements)
    where prop1_violations counts solutions with separable == connected and
    disagreements counts separable != rectangle-free.
    """
    colmask = (1 << ncols) - 1
    total = separable_n = connected_n = violations = disagree = 0

    for assigned in assign_rows_lines(
        nrows, ncols, row_catalog, lines, first_choices=first_choices
    ):
        rows = [row_catalog[ci] for ci in assigned]
        total += 1
        t0 = rows[0]
        sep = all(t == t0 or t == t0 ^ colmask for t in rows)
        rect_free = True
        for i in range(nrows):
            for j in range(i + 1, nrows):
                d = rows[i] ^ rows[j]
                if d and d != colmask:
                    rect_free = False
                    break
            if not rect_free:
                break
        if sep != rect_free:
            disagree += 1
        if sep:
            separable_n += 1
        # connectivity over members (w, x0)
        visited = [0] * nrows
        members = sum(t.bit_count() for t in rows)
        start_x = (rows[0] & -rows[0]).bit_length() - 1
        stack = [(0, start_x)]
        visited[0] = 1 << start_x
        seen = 1
        while stack:
            w, x = stack.pop()
            grow = col_nbrs[x] & rows[w] & ~visited[w]
            while grow:
                low = grow & -grow
                x2 = low.bit_length() - 1
                grow ^= low
                visited[w] |= low
                seen += 1
                stack.append((w, x2))
            t = w_nbrs[w]
            while t:
                low = t & -t
                w2 = low.bit_length() - 1
                t ^= low
                if (rows[w2] >> x) & 1 and not (visited[w2] >> x) & 1:
                    visited[w2] |= 1 << x
                    seen += 1
                    stack.append((w2, x))
        connected = seen == members
        if connected:
            connected_n += 1
        if sep == connected:
            violations += 1
    return total, separable_n, connected_n, violations, disagree
