"""Filtered-bundle calculus on the minus side of the flop.

The minus model carries a rank-3 bundle that is not pulled back from the base:
it is an extension of the dual tautological subbundle by O(-2).  Schur powers
of it are handled through the induced filtration, whose graded pieces are
pulled back from Gr(2,5).  Euler characteristics are additive along
filtrations, so the graded Euler characteristic of Ext between such bundles is
computed exactly from the pieces.

Each piece carries a fiber-degree offset: the extension's sub-line-bundle sits
one fiber degree below its quotient (the inclusion is built from the fiber
coordinate), so a piece with a copies of the sub-line-bundle is offset by a.
A source piece with offset p paired against a target piece with offset q
contributes to graded level l through the pushforward term of degree l - p + q.
Dropping the offsets already breaks the cross-side comparison for the
endomorphisms of the extension itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .homog import (BundleSum, GR25, GR35, HomogeneousBundle, as_sum,
                    line_bundle, schur_sub_dual, structure_sheaf)
from .partitions import Weight, as_weight
from .total_space import XMINUS, TotalSpaceModel


def _is_per_block_constant(b: HomogeneousBundle) -> bool:
    return all(len(set(blk)) <= 1 for blk in b.blocks)


def _line_combo(space, parts: Sequence[tuple[HomogeneousBundle, int]]) -> HomogeneousBundle:
    """Integer combination of line bundles, each constant on every block."""
    sizes = space.block_sizes()
    totals = [0] * len(sizes)
    for bundle, coeff in parts:
        if not _is_per_block_constant(bundle):
            raise ValueError("line-bundle combination needs per-block-constant weights")
        for i, blk in enumerate(bundle.blocks):
            totals[i] += coeff * (blk[0] if blk else 0)
    blocks = tuple((t,) * s for t, s in zip(totals, sizes))
    return HomogeneousBundle(space, blocks)


@dataclass(frozen=True)
class FilteredBundle:
    """Ordered graded pieces (sub to quotient) of a filtered bundle on Gr(2,5).

    ``offsets[i]`` is the fiber degree of ``pieces[i]`` relative to the
    pullback normalization.
    """

    pieces: tuple[BundleSum, ...]
    offsets: tuple[int, ...]
    label: str = ""

    def __post_init__(self):
        if not self.pieces:
            raise ValueError("a filtered bundle needs at least one piece")
        if len(self.offsets) != len(self.pieces):
            raise ValueError("one offset per piece required")
        if len({p.space for p in self.pieces}) != 1:
            raise ValueError("all pieces must live on one space")

    @property
    def space(self):
        return self.pieces[0].space

    def rank(self) -> int:
        return sum(p.rank() for p in self.pieces)

    def dual(self) -> "FilteredBundle":
        """Dualize each graded piece, negate offsets, reverse the order."""
        return FilteredBundle(
            tuple(p.dual() for p in reversed(self.pieces)),
            tuple(-o for o in reversed(self.offsets)),
            f"dual({self.label})" if self.label else "",
        )

    def refined(self) -> "FilteredBundle":
        """Split every piece into its irreducible terms (offsets preserved)."""
        pieces: list[BundleSum] = []
        offsets: list[int] = []
        for p, o in zip(self.pieces, self.offsets):
            for t in p:
                pieces.append(BundleSum.of(p.space, [t]))
                offsets.append(o)
        return FilteredBundle(tuple(pieces), tuple(offsets), self.label)


def core_extension() -> FilteredBundle:
    """The rank-3 extension of the dual tautological subbundle by O(-2)."""
    sub = BundleSum.of(GR25, [line_bundle(GR25, -2)])
    quot = BundleSum.of(GR25, [schur_sub_dual(GR25, (1, 0))])
    return FilteredBundle((sub, quot), (1, 0), "ext")


def _split_line_rank2(fb: FilteredBundle) -> tuple[HomogeneousBundle, HomogeneousBundle]:
    """The [line, rank-2] pieces, checking the shape the Schur rule supports."""
    if len(fb.pieces) != 2 or len(fb.pieces[0]) != 1 or len(fb.pieces[1]) != 1:
        raise ValueError("expected a two-step filtration with irreducible pieces")
    if tuple(fb.offsets) != (1, 0):
        raise ValueError("expected offsets (1, 0) for the [line, rank-2] shape")
    line = fb.pieces[0].terms[0]
    rk2 = fb.pieces[1].terms[0]
    if line.rank() != 1 or rk2.rank() != 2 or line.mult != 1 or rk2.mult != 1:
        raise ValueError("expected multiplicity-one pieces of ranks 1 and 2")
    first = rk2.blocks[0]
    if first[0] - first[1] != 1 or not _is_per_block_constant(line):
        raise ValueError("rank-2 piece must be a line twist of the dual subbundle")
    if any(len(set(blk)) > 1 for blk in rk2.blocks[1:]):
        raise ValueError("rank-2 piece must be a line twist of the dual subbundle")
    return line, rk2


def _schur_rank2(rk2: HomogeneousBundle, beta: Weight) -> HomogeneousBundle:
    """S^beta of a rank-2 bundle of the form (dual subbundle) (x) line."""
    first = rk2.blocks[0]
    c = first[1]
    size = beta[0] + beta[1]
    blocks = ((beta[0] + size * c, beta[1] + size * c),) + tuple(
        tuple(size * x for x in blk) for blk in rk2.blocks[1:])
    return HomogeneousBundle(rk2.space, blocks)


def _line_power(line: HomogeneousBundle, a: int) -> HomogeneousBundle:
    return _line_combo(line.space, [(line, a)])


def schur_filtered(chi: Iterable[int], fb: FilteredBundle | None = None) -> FilteredBundle:
    """Graded pieces of the Schur power S^chi of a [rank-1, rank-2] filtered bundle.

    The associated graded of S^chi of an extension 0 -> L -> E -> B -> 0 is
    the sum of S^a L (x) S^beta B over pairs with chi/beta a horizontal strip
    of size a; beta has at most two rows for rank reasons, so beta interlaces
    chi.  Pieces are ordered by descending a (sub to quotient) and carry fiber
    offset a.  A weight with negative entries is routed through the
    determinant line det E = L (x) det B, which shifts all offsets equally.
    """
    chi = as_weight(chi)
    if len(chi) != 3:
        raise ValueError("chi must have length 3")
    if fb is None:
        fb = core_extension()
    line, rk2 = _split_line_rank2(fb)
    t = max(0, -chi[2])
    chi_p = tuple(x + t for x in chi)
    det_inv = _line_combo(line.space, [(line, -1), (_schur_rank2(rk2, (1, 1)), -1)])

    graded: list[tuple[int, Weight]] = []
    for b1 in range(chi_p[1], chi_p[0] + 1):
        for b2 in range(chi_p[2], chi_p[1] + 1):
            a = sum(chi_p) - b1 - b2
            graded.append((a, (b1, b2)))
    graded.sort(key=lambda ab: (-ab[0], tuple(-x for x in ab[1])))

    pieces: list[BundleSum] = []
    offsets: list[int] = []
    for a, beta in graded:
        piece = _line_power(line, a).tensor(_schur_rank2(rk2, beta))
        if t:
            piece = piece.tensor(_line_power(det_inv, t))
        term = piece.terms
        if len(term) != 1 or term[0].mult != 1:
            raise AssertionError("graded piece should be irreducible")
        pieces.append(BundleSum.of(term[0].space, [term[0]]))
        offsets.append(a - t)
    label = f"S^{list(chi)}[{fb.label}]" if fb.label else f"S^{list(chi)}"
    return FilteredBundle(tuple(pieces), tuple(offsets), label)


def window_bundle(side: str, star: str):
    """Materialize a window bundle from its ten generating weights.

    The plus side returns a sum of Schur powers of the dual tautological
    subbundle on Gr(3,5); the minus side returns the corresponding Schur
    powers of the core extension as filtered bundles.
    """
    from . import data
    if star not in data.WINDOW_WEIGHTS:
        raise ValueError(f"unknown window {star!r}; valid: {', '.join(data.WINDOW_WEIGHTS)}")
    if side == "plus":
        return data.window_sum_plus(star)
    if side == "minus":
        return tuple(schur_filtered(chi) for chi in data.WINDOW_WEIGHTS[star])
    raise ValueError("side must be 'plus' or 'minus'")


def _as_pieces(x) -> list[tuple[BundleSum, int]]:
    """Flatten bundles, sums, filtered bundles or sequences thereof into
    (piece, offset) pairs."""
    if isinstance(x, FilteredBundle):
        return list(zip(x.pieces, x.offsets))
    if isinstance(x, (BundleSum, HomogeneousBundle)):
        return [(as_sum(x), 0)]
    if isinstance(x, Sequence):
        out: list[tuple[BundleSum, int]] = []
        for item in x:
            out.extend(_as_pieces(item))
        return out
    raise TypeError(f"cannot interpret {type(x).__name__} as filtered pieces")


@dataclass(frozen=True)
class GradedEuler:
    """Graded Euler characteristics chi_l, exact integers, for l in [0, max_l]."""

    values: tuple[int, ...]

    def __getitem__(self, l: int) -> int:
        return self.values[l]

    def as_json(self) -> dict:
        return {"values": list(self.values)}


def graded_euler(left, right, max_l: int = 8,
                 model: TotalSpaceModel = XMINUS) -> GradedEuler:
    """Filtration-additive graded Euler characteristic of Ext(left, right).

    chi_l sums, over source pieces p (offset op) and target pieces q (offset
    oq), the signed Bott dimensions of dual(p) (x) q (x) term(l - op + oq).
    """
    lhs = _as_pieces(left)
    rhs = _as_pieces(right)
    for p, _ in lhs + rhs:
        if p.space != model.base:
            raise ValueError(f"pieces must live on {model.base}")
    values = []
    products = [(op, oq, p.dual().tensor(q)) for p, op in lhs for q, oq in rhs]
    for l in range(max_l + 1):
        total = 0
        for op, oq, prod in products:
            t = l - op + oq
            if t < 0:
                continue
            total += prod.tensor(model.term(t)).signed_euler()
        values.append(total)
    return GradedEuler(tuple(values))


@dataclass(frozen=True)
class SuiteItem:
    check_id: str
    description: str
    passed: bool
    details: dict

    def as_json(self) -> dict:
        return {"id": self.check_id, "description": self.description,
                "status": "pass" if self.passed else "fail", "details": self.details}


def vanishing_suite() -> tuple[SuiteItem, ...]:
    """The fixed battery of minus-side vanishing checks.

    Four blocks of higher-cohomology vanishing on the minus total space, plus
    the complete-orthogonality endpoints on Gr(3,5) that the harder minus-side
    arguments reduce to.
    """
    from . import data
    from .total_space import XMINUS, ext_table
    items: list[SuiteItem] = []
    O = structure_sheaf(GR25)
    sub_dual = schur_sub_dual(GR25, (1, 0))
    sym2 = schur_sub_dual(GR25, (2, 0))

    for k in range(5):
        table = ext_table(XMINUS, O, line_bundle(GR25, -k), cutoff="auto")
        items.append(SuiteItem(
            f"xminus-line-bundle-minus-{k}",
            f"no higher cohomology of O(-{k}) on the minus total space",
            not table.any_higher_cohomology,
            {"l0": table.cutoff}))
    for k in range(3):
        table = ext_table(XMINUS, O, schur_sub_dual(GR25, (1, 0), -k), cutoff="auto")
        items.append(SuiteItem(
            f"xminus-dual-sub-minus-{k}",
            f"no higher cohomology of the dual subbundle twisted by -{k}",
            not table.any_higher_cohomology,
            {"l0": table.cutoff}))
    for a in range(3):
        table = ext_table(XMINUS, sub_dual, schur_sub_dual(GR25, (2, 0), a), cutoff="auto")
        items.append(SuiteItem(
            f"xminus-sub-vs-sym2-{a}",
            f"no higher Ext from the dual subbundle to its symmetric square twisted by {a}",
            not table.any_higher_cohomology,
            {"l0": table.cutoff}))
    table = ext_table(XMINUS, sym2, sym2, cutoff="auto")
    items.append(SuiteItem(
        "xminus-sym2-endo",
        "no higher self-Ext of the symmetric square of the dual subbundle",
        not table.any_higher_cohomology,
        {"l0": table.cutoff}))

    for i, (src, tgt, label) in enumerate(data.GR35_ORTHOGONAL_PAIRS, start=1):
        source = schur_sub_dual(GR35, src)
        target = schur_sub_dual(GR35, tgt)
        groups: dict[int, int] = {}
        for t, c in source.dual().tensor(target).cohomology():
            if not c.is_acyclic:
                groups[c.degree] = groups.get(c.degree, 0) + t.mult * c.dim
        items.append(SuiteItem(
            f"gr35-orthogonal-{i}",
            f"complete Ext vanishing on Gr(3,5): {label}",
            not groups,
            {"source": source.literal(), "target": target.literal(),
             "nonzero": {str(d): n for d, n in sorted(groups.items())}}))
    return tuple(items)


def euler_cross_check(star: str, max_l: int = 8) -> dict:
    """Compare minus-side graded Euler characteristics of a window bundle's
    endomorphisms against the plus side's graded Hom dimensions.

    The plus side has no higher self-Ext, so its alternating sums equal the
    graded Hom dimensions level by level; the minus-side filtration-additive
    Euler characteristics must match them exactly.
    """
    from . import data
    from .total_space import XPLUS, ext_table
    minus = window_bundle("minus", star)
    chi = graded_euler(list(minus), list(minus), max_l)
    table = ext_table(XPLUS, data.window_sum_plus(star),
                      data.window_sum_plus(star), cutoff=max_l)
    plus_values = tuple(table.signed_dim(l) for l in range(max_l + 1))
    return {
        "star": star,
        "max_l": max_l,
        "minus": list(chi.values),
        "plus": list(plus_values),
        "equal": tuple(chi.values) == plus_values,
        "plus_has_higher": table.any_higher_cohomology,
    }
