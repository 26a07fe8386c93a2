"""Shared test-construction helpers."""

from doobcodes import DoobParams, VertexSet
from doobcodes.graphs import decode_index

SH = DoobParams(1, 0)


def sh_set(*labels) -> VertexSet:
    """Vertices of Sh by their Z4xZ4 labels, e.g. sh_set("00", "02")."""
    return VertexSet.from_indices(SH, [4 * int(t[0]) + int(t[1]) for t in labels])


def build_product_code(params: DoobParams, factor_masks, sigma=0) -> VertexSet:
    """chi(v) = sigma xor XOR of per-coordinate factor characteristic bits."""
    mask = 0
    for idx in range(params.num_vertices):
        digits = decode_index(params, idx)
        chi = sigma
        for d, fm in zip(digits, factor_masks):
            chi ^= (fm >> d) & 1
        if chi:
            mask |= 1 << idx
    return VertexSet(params, mask)
