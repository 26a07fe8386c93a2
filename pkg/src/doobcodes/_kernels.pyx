# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels (hot loops).

Mirrors doobcodes._kernels_py exactly: same functions, same semantics, same
result order.  Catalogs are limited to 64 entries so candidate sets fit in
one machine word; rows are limited to 64, columns to 32, lines to 64.
"""

from libc.stdlib cimport free, malloc, realloc
from libc.stdint cimport int32_t, uint32_t, uint64_t

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

DEF MAX_ROWS = 64
DEF MAX_COLS = 32
DEF MAX_LINES = 64
DEF MAX_SLOTS = 16
DEF MAX_MEMB = 8
# column trail: depth * memberships * columns
DEF MAX_COL_TRAIL = MAX_ROWS * MAX_MEMB * MAX_COLS
# row trail: each column change can filter every slot of its line
DEF MAX_ROW_TRAIL = MAX_ROWS * MAX_MEMB * MAX_COLS * MAX_SLOTS


cdef struct U64Buf:
    uint64_t* data
    size_t n
    size_t cap


cdef int u64_push(U64Buf* b, uint64_t v) nogil:
    cdef uint64_t* p
    if b.n == b.cap:
        b.cap = b.cap * 2 if b.cap else 1024
        p = <uint64_t*> realloc(b.data, b.cap * sizeof(uint64_t))
        if p == NULL:
            return -1
        b.data = p
    b.data[b.n] = v
    b.n += 1
    return 0


# --- independent subset enumeration ---------------------------------------------

cdef int _indep_rec(uint64_t* nbrs, int n, int size, uint64_t mask, int start,
                    int left, U64Buf* out) nogil:
    cdef int v
    if left == 0:
        return u64_push(out, mask)
    for v in range(start, n - left + 1):
        if not (nbrs[v] & mask):
            if _indep_rec(nbrs, n, size, mask | (<uint64_t>1 << v), v + 1,
                          left - 1, out) < 0:
                return -1
    return 0


def independent_sets(nbrs, int size):
    """All independent subsets of exactly `size` vertices, as bitmasks."""
    cdef int n = len(nbrs)
    if n > MAX_ROWS:
        raise ValueError("at most 64 vertices")
    cdef uint64_t cnb[MAX_ROWS]
    cdef int i
    for i in range(n):
        cnb[i] = nbrs[i]
    cdef U64Buf out
    out.data = NULL
    out.n = 0
    out.cap = 0
    cdef int rc
    with nogil:
        rc = _indep_rec(cnb, n, size, 0, 0, size, &out)
    if rc < 0:
        free(out.data)
        raise MemoryError()
    result = [out.data[i] for i in range(<int> out.n)]
    free(out.data)
    result.sort()
    return result


# --- full subset scans ------------------------------------------------------------

def max_boundary_sets(nbrs):
    """Full 2^n subset scan for the maximum edge boundary; returns maximizers."""
    cdef int n = len(nbrs)
    if n > 20:
        raise ValueError("at most 20 vertices for a full subset scan")
    cdef uint64_t cnb[20]
    cdef int i
    for i in range(n):
        cnb[i] = nbrs[i]
    cdef uint64_t full = (<uint64_t>1 << n) - 1
    cdef U64Buf out
    out.data = NULL
    out.n = 0
    out.cap = 0
    cdef uint64_t mask, t
    cdef int cut, best = -1, rc = 0
    with nogil:
        for mask in range(<uint64_t>1 << n):
            cut = 0
            t = mask
            while t:
                cut += __builtin_popcountll(cnb[__builtin_ctzll(t)] & ~mask & full)
                t &= t - 1
            if cut > best:
                best = cut
                out.n = 0
                rc = u64_push(&out, mask)
            elif cut == best:
                rc = u64_push(&out, mask)
            if rc < 0:
                break
    if rc < 0:
        free(out.data)
        raise MemoryError()
    winners = [out.data[i] for i in range(<int> out.n)]
    free(out.data)
    return best, winners


def equitable_splits(nbrs):
    """All proper nonempty subsets with an equitable 2-partition, as
    (mask, s11, s12, s21, s22) tuples with ascending mask."""
    cdef int n = len(nbrs)
    if n > 20:
        raise ValueError("at most 20 vertices for a full subset scan")
    cdef uint64_t cnb[20]
    cdef int degs[20]
    cdef int i
    for i in range(n):
        cnb[i] = nbrs[i]
        degs[i] = __builtin_popcountll(cnb[i])
    cdef U64Buf out
    out.data = NULL
    out.n = 0
    out.cap = 0
    cdef uint64_t mask
    cdef int u, k, s11, s12, s21, s22, ok, rc = 0
    with nogil:
        for mask in range(1, (<uint64_t>1 << n) - 1):
            s11 = s21 = -1
            s12 = s22 = -1
            ok = 1
            for u in range(n):
                k = __builtin_popcountll(cnb[u] & mask)
                if (mask >> u) & 1:
                    if s11 < 0:
                        s11 = k
                        s12 = degs[u] - k
                    elif s11 != k or s12 != degs[u] - k:
                        ok = 0
                        break
                else:
                    if s21 < 0:
                        s21 = k
                        s22 = degs[u] - k
                    elif s21 != k or s22 != degs[u] - k:
                        ok = 0
                        break
            if ok:
                # pack the quotient entries beside the mask
                rc = u64_push(&out, (mask << 28)
                              | (<uint64_t>s11 << 21) | (<uint64_t>s12 << 14)
                              | (<uint64_t>s21 << 7) | <uint64_t>s22)
                if rc < 0:
                    break
    if rc < 0:
        free(out.data)
        raise MemoryError()
    result = []
    cdef uint64_t rec
    for i in range(<int> out.n):
        rec = out.data[i]
        result.append((rec >> 28, (rec >> 21) & 0x7F, (rec >> 14) & 0x7F,
                       (rec >> 7) & 0x7F, rec & 0x7F))
    free(out.data)
    return result


# --- row assignment with pairwise disjointness --------------------------------------

cdef struct DisjCtx:
    int nrows
    int ncat
    int count_only
    uint64_t n_found
    uint64_t w_nbrs[MAX_ROWS]
    uint64_t disjoint[MAX_ROWS]
    uint64_t cands[MAX_ROWS]
    int done[MAX_ROWS]
    int32_t assigned[MAX_ROWS]
    U64Buf* out  # solutions appended row by row


cdef int _disj_emit(DisjCtx* ctx) nogil:
    cdef int i
    if ctx.count_only:
        ctx.n_found += 1
        return 0
    for i in range(ctx.nrows):
        if u64_push(ctx.out, <uint64_t> ctx.assigned[i]) < 0:
            return -1
    return 0


cdef int _disj_rec(DisjCtx* ctx, int depth) nogil:
    cdef int w = -1, best = ctx.ncat + 1, i, k, ci, w2, ok, rc
    cdef uint64_t c, low, t, lb
    cdef uint64_t saved[MAX_ROWS]
    cdef int saved_rows[MAX_ROWS]
    cdef int nsaved
    if depth == ctx.nrows:
        return _disj_emit(ctx)
    for i in range(ctx.nrows):
        if not ctx.done[i]:
            k = __builtin_popcountll(ctx.cands[i])
            if k < best:
                best = k
                w = i
    ctx.done[w] = 1
    c = ctx.cands[w]
    while c:
        low = c & (~c + 1)
        ci = __builtin_ctzll(low)
        c ^= low
        ctx.assigned[w] = ci
        nsaved = 0
        ok = 1
        t = ctx.w_nbrs[w]
        while t:
            lb = t & (~t + 1)
            w2 = __builtin_ctzll(lb)
            t ^= lb
            if not ctx.done[w2]:
                saved_rows[nsaved] = w2
                saved[nsaved] = ctx.cands[w2]
                nsaved += 1
                ctx.cands[w2] &= ctx.disjoint[ci]
                if ctx.cands[w2] == 0:
                    ok = 0
        if ok:
            rc = _disj_rec(ctx, depth + 1)
            if rc < 0:
                return rc
        for i in range(nsaved):
            ctx.cands[saved_rows[i]] = saved[i]
    ctx.done[w] = 0
    return 0


def assign_rows_disjoint(w_nbrs, catalog, first_choices=None, count_only=False):
    """Assign one catalog entry per row so adjacent rows get disjoint entries;
    most-constrained-row-first search, sorted assignment tuples (or the count)."""
    cdef int nrows = len(w_nbrs)
    cdef int ncat = len(catalog)
    if nrows > MAX_ROWS or ncat > MAX_ROWS:
        raise ValueError("at most 64 rows and 64 catalog entries")
    cdef DisjCtx ctx
    cdef int i, j
    ctx.nrows = nrows
    ctx.ncat = ncat
    ctx.count_only = 1 if count_only else 0
    ctx.n_found = 0
    cdef uint64_t cat[MAX_ROWS]
    for i in range(ncat):
        cat[i] = catalog[i]
    for i in range(nrows):
        ctx.w_nbrs[i] = w_nbrs[i]
        ctx.cands[i] = (<uint64_t>1 << ncat) - 1
        ctx.done[i] = 0
    for i in range(ncat):
        ctx.disjoint[i] = 0
        for j in range(ncat):
            if not (cat[i] & cat[j]):
                ctx.disjoint[i] |= <uint64_t>1 << j
    if first_choices is not None:
        ctx.cands[0] = 0
        for i in first_choices:
            ctx.cands[0] |= <uint64_t>1 << <int> i
    cdef U64Buf out
    out.data = NULL
    out.n = 0
    out.cap = 0
    ctx.out = &out
    cdef int rc
    with nogil:
        rc = _disj_rec(&ctx, 0)
    if rc < 0:
        free(out.data)
        raise MemoryError()
    if count_only:
        free(out.data)
        return ctx.n_found
    result = []
    cdef size_t pos = 0
    while pos < out.n:
        result.append(tuple(out.data[pos + i] for i in range(nrows)))
        pos += nrows
    free(out.data)
    result.sort()
    return result


# --- row assignment with per-line column constraints ---------------------------------

cdef struct LinesCtx:
    int nrows
    int ncols
    int ncat
    int nlines
    uint32_t row_catalog[MAX_ROWS]
    uint64_t rowbit[MAX_COLS][2]
    # line data
    int line_nslots[MAX_LINES]
    int line_rows[MAX_LINES][MAX_SLOTS]        # slot -> row
    uint64_t filt[MAX_LINES][MAX_SLOTS][2]     # slot, bit -> column entries
    uint64_t colcands[MAX_LINES][MAX_COLS]
    # row membership
    int memb_n[MAX_ROWS]
    int memb_line[MAX_ROWS][MAX_MEMB]
    int memb_slot[MAX_ROWS][MAX_MEMB]
    uint64_t viable[MAX_ROWS]
    int done[MAX_ROWS]
    int32_t assigned[MAX_ROWS]
    # undo trails
    int col_li[MAX_COL_TRAIL]
    int col_c[MAX_COL_TRAIL]
    uint64_t col_old[MAX_COL_TRAIL]
    int nct
    int row_w[MAX_ROW_TRAIL]
    uint64_t row_old[MAX_ROW_TRAIL]
    int nrt
    U64Buf* out
    # structural scan mode (two-coordinate products)
    int scan_mode
    uint32_t w_adj[MAX_ROWS]
    uint32_t col_nbrs[MAX_COLS]
    uint64_t stat_total
    uint64_t stat_separable
    uint64_t stat_connected
    uint64_t stat_violations
    uint64_t stat_disagree


cdef int _lines_emit(LinesCtx* ctx) nogil:
    cdef int i
    if ctx.scan_mode == 2:
        ctx.stat_total += 1
        return 0
    if ctx.scan_mode == 1:
        _scan_solution(ctx)
        return 0
    for i in range(ctx.nrows):
        if u64_push(ctx.out, <uint64_t> ctx.assigned[i]) < 0:
            return -1
    return 0


cdef void _scan_solution(LinesCtx* ctx) nogil:
    cdef uint32_t rows[MAX_ROWS]
    cdef uint32_t visited[MAX_ROWS]
    cdef int stack_w[MAX_ROWS * MAX_COLS]
    cdef int stack_x[MAX_ROWS * MAX_COLS]
    cdef int nrows = ctx.nrows
    cdef uint32_t colmask = <uint32_t>(((<uint64_t>1) << ctx.ncols) - 1)
    cdef int i, j, w, x, w2, x2, top, members, seen
    cdef int sep, rect_free, connected
    cdef uint32_t d, grow, t, low
    for i in range(nrows):
        rows[i] = ctx.row_catalog[ctx.assigned[i]]
        visited[i] = 0
    ctx.stat_total += 1
    sep = 1
    for i in range(1, nrows):
        d = rows[i] ^ rows[0]
        if d != 0 and d != colmask:
            sep = 0
            break
    rect_free = 1
    for i in range(nrows):
        for j in range(i + 1, nrows):
            d = rows[i] ^ rows[j]
            if d != 0 and d != colmask:
                rect_free = 0
                break
        if not rect_free:
            break
    if sep != rect_free:
        ctx.stat_disagree += 1
    if sep:
        ctx.stat_separable += 1
    members = 0
    for i in range(nrows):
        members += __builtin_popcountll(rows[i])
    x = __builtin_ctzll(rows[0])
    visited[0] = <uint32_t>1 << x
    stack_w[0] = 0
    stack_x[0] = x
    top = 1
    seen = 1
    while top:
        top -= 1
        w = stack_w[top]
        x = stack_x[top]
        grow = ctx.col_nbrs[x] & rows[w] & ~visited[w]
        while grow:
            low = grow & (~grow + 1)
            x2 = __builtin_ctzll(low)
            grow ^= low
            visited[w] |= low
            seen += 1
            stack_w[top] = w
            stack_x[top] = x2
            top += 1
        t = ctx.w_adj[w]
        while t:
            low = t & (~t + 1)
            w2 = __builtin_ctzll(low)
            t ^= low
            if ((rows[w2] >> x) & 1) and not ((visited[w2] >> x) & 1):
                visited[w2] |= <uint32_t>1 << x
                seen += 1
                stack_w[top] = w2
                stack_x[top] = x
                top += 1
    connected = 1 if seen == members else 0
    if connected:
        ctx.stat_connected += 1
    if sep == connected:
        ctx.stat_violations += 1


cdef int _lines_rec(LinesCtx* ctx, int depth) nogil:
    cdef int w = -1, best = ctx.ncat + 1, i, k, ci, ok, rc
    cdef int li, s, c, mi, w2, s2
    cdef uint64_t v, low, old, newv, allow0, allow1, keep, oldv, nv
    cdef uint32_t entry
    cdef int col_mark, row_mark
    if depth == ctx.nrows:
        return _lines_emit(ctx)
    for i in range(ctx.nrows):
        if not ctx.done[i]:
            k = __builtin_popcountll(ctx.viable[i])
            if k < best:
                best = k
                w = i
    if best == 0:
        return 0
    ctx.done[w] = 1
    v = ctx.viable[w]
    while v:
        low = v & (~v + 1)
        ci = __builtin_ctzll(low)
        v ^= low
        entry = ctx.row_catalog[ci]
        ctx.assigned[w] = ci
        col_mark = ctx.nct
        row_mark = ctx.nrt
        ok = 1
        for mi in range(ctx.memb_n[w]):
            li = ctx.memb_line[w][mi]
            s = ctx.memb_slot[w][mi]
            for c in range(ctx.ncols):
                old = ctx.colcands[li][c]
                newv = old & ctx.filt[li][s][(entry >> c) & 1]
                if newv == old:
                    continue
                ctx.col_li[ctx.nct] = li
                ctx.col_c[ctx.nct] = c
                ctx.col_old[ctx.nct] = old
                ctx.nct += 1
                ctx.colcands[li][c] = newv
                if newv == 0:
                    ok = 0
                    break
                for s2 in range(ctx.line_nslots[li]):
                    w2 = ctx.line_rows[li][s2]
                    if ctx.done[w2] or w2 == w:
                        continue
                    allow0 = ctx.filt[li][s2][0] & newv
                    allow1 = ctx.filt[li][s2][1] & newv
                    if allow0 != 0 and allow1 != 0:
                        continue
                    if allow0 == 0 and allow1 == 0:
                        ok = 0
                        break
                    keep = ctx.rowbit[c][1] if allow1 != 0 else ctx.rowbit[c][0]
                    oldv = ctx.viable[w2]
                    nv = oldv & keep
                    if nv != oldv:
                        ctx.row_w[ctx.nrt] = w2
                        ctx.row_old[ctx.nrt] = oldv
                        ctx.nrt += 1
                        ctx.viable[w2] = nv
                        if nv == 0:
                            ok = 0
                            break
                if not ok:
                    break
            if not ok:
                break
        if ok:
            rc = _lines_rec(ctx, depth + 1)
            if rc < 0:
                return rc
        while ctx.nct > col_mark:
            ctx.nct -= 1
            ctx.colcands[ctx.col_li[ctx.nct]][ctx.col_c[ctx.nct]] = ctx.col_old[ctx.nct]
        while ctx.nrt > row_mark:
            ctx.nrt -= 1
            ctx.viable[ctx.row_w[ctx.nrt]] = ctx.row_old[ctx.nrt]
    ctx.done[w] = 0
    return 0


cdef _init_lines_ctx(LinesCtx* ctx, int nrows, int ncols, row_catalog, lines,
                     first_choices):
    cdef int ncat = len(row_catalog)
    cdef int nlines = len(lines)
    if nrows > MAX_ROWS or ncat > MAX_ROWS:
        raise ValueError("at most 64 rows and 64 row-catalog entries")
    if ncols > MAX_COLS:
        raise ValueError("at most 32 columns")
    if nlines > MAX_LINES:
        raise ValueError("at most 64 lines")
    cdef int i, c, li, s, ei, nslots
    cdef uint32_t e
    ctx.nrows = nrows
    ctx.ncols = ncols
    ctx.ncat = ncat
    ctx.nlines = nlines
    ctx.scan_mode = 0
    for i in range(ncat):
        ctx.row_catalog[i] = row_catalog[i]
    for c in range(ncols):
        ctx.rowbit[c][0] = 0
        ctx.rowbit[c][1] = 0
    for i in range(ncat):
        e = ctx.row_catalog[i]
        for c in range(ncols):
            ctx.rowbit[c][(e >> c) & 1] |= <uint64_t>1 << i
    for i in range(nrows):
        ctx.memb_n[i] = 0
        ctx.done[i] = 0
        ctx.viable[i] = (<uint64_t>1 << ncat) - 1
    for li in range(nlines):
        positions, colcat = lines[li]
        nslots = len(positions)
        if nslots > MAX_SLOTS or len(colcat) > MAX_ROWS:
            raise ValueError("at most 16 slots and 64 column-catalog entries")
        ctx.line_nslots[li] = nslots
        for s in range(nslots):
            ctx.filt[li][s][0] = 0
            ctx.filt[li][s][1] = 0
        for ei in range(len(colcat)):
            e = colcat[ei]
            for s in range(nslots):
                ctx.filt[li][s][(e >> s) & 1] |= <uint64_t>1 << ei
        for c in range(ncols):
            ctx.colcands[li][c] = (<uint64_t>1 << len(colcat)) - 1
        for s in range(nslots):
            i = positions[s]
            ctx.line_rows[li][s] = i
            if ctx.memb_n[i] >= MAX_MEMB:
                raise ValueError("a row may belong to at most 8 lines")
            ctx.memb_line[i][ctx.memb_n[i]] = li
            ctx.memb_slot[i][ctx.memb_n[i]] = s
            ctx.memb_n[i] += 1
    if first_choices is not None:
        ctx.viable[0] = 0
        for i in first_choices:
            ctx.viable[0] |= <uint64_t>1 << <int> i
    ctx.nct = 0
    ctx.nrt = 0


def assign_rows_lines(int nrows, int ncols, row_catalog, lines, first_choices=None,
                      count_only=False):
    """Assign one row-catalog entry per row under per-line column constraints;
    most-constrained-row-first with forward checking, sorted assignment tuples
    (or the count)."""
    cdef LinesCtx* ctx = <LinesCtx*> malloc(sizeof(LinesCtx))
    if ctx == NULL:
        raise MemoryError()
    cdef int rc
    try:
        _init_lines_ctx(ctx, nrows, ncols, row_catalog, lines, first_choices)
        if count_only:
            ctx.scan_mode = 2
            ctx.stat_total = 0
            ctx.out = NULL
            with nogil:
                rc = _lines_rec(ctx, 0)
            out = ctx.stat_total
        else:
            out = _run_lines(ctx, nrows)
    finally:
        free(ctx)
    return out


def scan_two_mds_structure(int nrows, int ncols, row_catalog, lines, w_nbrs,
                           col_nbrs, first_choices=None):
    """Enumerate like assign_rows_lines but only tally structural facts of each
    solution (two-coordinate products): separability between the coordinates,
    the rectangle-free cross-check, and connectivity of the induced subgraph.

    Returns (total, separable, connected, prop1_violations, disagreements)."""
    cdef LinesCtx* ctx = <LinesCtx*> malloc(sizeof(LinesCtx))
    if ctx == NULL:
        raise MemoryError()
    cdef int i, rc
    try:
        _init_lines_ctx(ctx, nrows, ncols, row_catalog, lines, first_choices)
        if len(w_nbrs) != nrows or len(col_nbrs) != ncols:
            raise ValueError("adjacency arrays must match the row/column counts")
        if nrows > 32:
            raise ValueError("structural scan supports at most 32 rows")
        ctx.scan_mode = 1
        for i in range(nrows):
            ctx.w_adj[i] = w_nbrs[i]
        for i in range(ncols):
            ctx.col_nbrs[i] = col_nbrs[i]
        ctx.stat_total = 0
        ctx.stat_separable = 0
        ctx.stat_connected = 0
        ctx.stat_violations = 0
        ctx.stat_disagree = 0
        ctx.out = NULL
        with nogil:
            rc = _lines_rec(ctx, 0)
        result = (ctx.stat_total, ctx.stat_separable, ctx.stat_connected,
                  ctx.stat_violations, ctx.stat_disagree)
    finally:
        free(ctx)
    return result


cdef _run_lines(LinesCtx* ctx, int nrows):
    cdef U64Buf buf
    buf.data = NULL
    buf.n = 0
    buf.cap = 0
    ctx.out = &buf
    cdef int rc
    with nogil:
        rc = _lines_rec(ctx, 0)
    if rc < 0:
        free(buf.data)
        raise MemoryError()
    result = []
    cdef size_t pos = 0
    cdef int i
    while pos < buf.n:
        result.append(tuple(buf.data[pos + i] for i in range(nrows)))
        pos += nrows
    free(buf.data)
    result.sort()
    return result
