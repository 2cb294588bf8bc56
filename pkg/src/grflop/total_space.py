"""Ext computations on the two total spaces of the flop, via pushforward expansion.

The plus model lives over Gr(3,5) and the minus model over Gr(2,5); pushing the
structure sheaf down to the base turns Ext groups upstairs into an infinite
direct sum of base cohomologies, one summand per fiber degree l.  The sum is
truncated with a certified bound: past the bound every irreducible summand has
a dominant concatenated weight, hence cohomology in degree 0 only.
"""

from __future__ import annotations

from dataclasses import dataclass

from .homog import (Cohomology, FlagVariety, GR25, GR35,
                    HomogeneousBundle, as_sum)


@dataclass(frozen=True)
class TotalSpaceModel:
    """A vector-bundle total space over a Grassmannian, given by its pushforward rule.

    ``term(l)`` is the l-th summand of the pushforward of the structure sheaf.
    The built-in models are ``xplus`` (over Gr(3,5), fiber dual-tautological
    twisted by -2) and ``xminus`` (over Gr(2,5), fiber quotient twisted by -2).
    A custom model may be built from a finite table of terms; certified
    cutoffs are only available for the built-ins.
    """

    name: str
    base: FlagVariety
    table: tuple[HomogeneousBundle, ...] | None = None

    def term(self, l: int) -> HomogeneousBundle:
        if l < 0:
            raise ValueError("fiber degree must be nonnegative")
        if self.table is not None:
            if l >= len(self.table):
                raise ValueError(f"model {self.name!r} has terms up to {len(self.table) - 1}")
            return self.table[l]
        if self.name == "xplus":
            return HomogeneousBundle(self.base, ((2 * l, 2 * l, l), (0, 0)))
        if self.name == "xminus":
            return HomogeneousBundle(self.base, ((2 * l, 2 * l), (l, 0, 0)))
        raise ValueError(f"model {self.name!r} has no term rule")

    def dominance_gap(self, bundle: HomogeneousBundle) -> int:
        """Least l making every summand of bundle (x) term(l') dominant for l' >= l.

        For xplus, term(l) raises the last first-block entry by at least l and
        fixes the second block; for xminus, the first block rises by exactly 2l
        while the second block's head rises by at most l.
        """
        lam, mu = bundle.blocks
        if self.name == "xplus":
            return mu[0] - lam[-1]
        if self.name == "xminus":
            return mu[0] - lam[-1]
        raise ValueError(f"no certified cutoff rule for model {self.name!r}")

    def __str__(self) -> str:
        return self.name


XPLUS = TotalSpaceModel("xplus", GR35)
XMINUS = TotalSpaceModel("xminus", GR25)
MODELS = {"xplus": XPLUS, "xminus": XMINUS}


def pushforward_term(model: TotalSpaceModel, l: int) -> HomogeneousBundle:
    return model.term(l)


@dataclass(frozen=True)
class CutoffCertificate:
    """A certified truncation level with the summand that forces it."""

    l0: int
    binding: HomogeneousBundle | None

    def as_json(self) -> dict:
        out = {"l0": self.l0}
        out["binding_summand"] = None if self.binding is None else self.binding.literal()
        return out


def stable_cutoff(model: TotalSpaceModel, left, right) -> CutoffCertificate:
    """Certified l0 such that rows l >= l0 of the Ext table carry no higher cohomology.

    Every irreducible summand of dual(left) (x) right (x) term(l) then has a
    dominant concatenated weight, hence a section and cohomology in degree 0
    only.
    """
    left = as_sum(left)
    right = as_sum(right)
    if left.space != model.base or right.space != model.base:
        raise ValueError(f"bundles must live on {model.base}")
    product = left.dual().tensor(right)
    l0 = 0
    binding = None
    for t in product:
        gap = model.dominance_gap(t)
        if gap > l0:
            l0 = gap
            binding = t
    return CutoffCertificate(l0, binding)


@dataclass(frozen=True)
class ExtTable:
    """Per-fiber-degree cohomology of dual(left) (x) right on a total space."""

    model: TotalSpaceModel
    rows: tuple[tuple[int, tuple[tuple[HomogeneousBundle, Cohomology], ...]], ...]
    cutoff: int
    certificate: CutoffCertificate | None

    @property
    def any_higher_cohomology(self) -> bool:
        return any(not c.is_acyclic and c.degree > 0
                   for _, entries in self.rows for _, c in entries)

    def degree_totals(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for _, entries in self.rows:
            for t, c in entries:
                if not c.is_acyclic:
                    out[c.degree] = out.get(c.degree, 0) + t.mult * c.dim
        return dict(sorted(out.items()))

    def level_degree_dims(self) -> list[tuple[int, int, int]]:
        """(level, degree, total dim) triples, sorted."""
        acc: dict[tuple[int, int], int] = {}
        for l, entries in self.rows:
            for t, c in entries:
                if not c.is_acyclic:
                    key = (l, c.degree)
                    acc[key] = acc.get(key, 0) + t.mult * c.dim
        return [(l, d, n) for (l, d), n in sorted(acc.items())]

    def hom_dim(self, l: int) -> int:
        """Total degree-0 dimension in row l."""
        for lv, entries in self.rows:
            if lv == l:
                return sum(t.mult * c.dim for t, c in entries
                           if not c.is_acyclic and c.degree == 0)
        raise KeyError(f"row {l} not computed")

    def signed_dim(self, l: int) -> int:
        """Alternating sum of dimensions in row l."""
        for lv, entries in self.rows:
            if lv == l:
                return sum(t.mult * c.signed_dim() for t, c in entries)
        raise KeyError(f"row {l} not computed")

    def violations(self) -> tuple[tuple[int, HomogeneousBundle, int, int], ...]:
        """(level, summand, degree, dim) for every positive-degree entry."""
        out = []
        for l, entries in self.rows:
            for t, c in entries:
                if not c.is_acyclic and c.degree > 0:
                    out.append((l, t, c.degree, t.mult * c.dim))
        return tuple(out)

    def as_json(self) -> dict:
        rows = []
        for l, entries in self.rows:
            terms = []
            for t, c in entries:
                coh = {"acyclic": True} if c.is_acyclic else \
                    {"acyclic": False, "degree": c.degree,
                     "weight": list(c.weight), "dim": c.dim}
                terms.append({"bundle": t.literal(), "cohomology": coh})
            rows.append({"level": l, "terms": terms})
        return {
            "model": self.model.name,
            "cutoff": self.cutoff,
            "certificate": None if self.certificate is None else self.certificate.as_json(),
            "rows": rows,
            "by_level_degree": [list(x) for x in self.level_degree_dims()],
            "by_degree": {str(d): n for d, n in self.degree_totals().items()},
            "any_higher_cohomology": self.any_higher_cohomology,
        }


def ext_table(model: TotalSpaceModel, left, right, cutoff="auto") -> ExtTable:
    """Ext of left against right on the total space, row by fiber degree.

    Row l holds the base cohomology of dual(left) (x) right (x) term(l).  With
    ``cutoff="auto"`` rows run to the certified bound (inclusive, as a spot
    check) and the certificate is attached.
    """
    left = as_sum(left)
    right = as_sum(right)
    if left.space != model.base or right.space != model.base:
        raise ValueError(f"bundles must live on {model.base}")
    certificate = None
    if cutoff == "auto":
        certificate = stable_cutoff(model, left, right)
        top = certificate.l0
    else:
        top = int(cutoff)
        if top < 0:
            raise ValueError("cutoff must be nonnegative")
    product = left.dual().tensor(right)
    rows = []
    for l in range(top + 1):
        level_sum = product.tensor(model.term(l))
        rows.append((l, level_sum.cohomology()))
    return ExtTable(model, tuple(rows), top, certificate)


@dataclass(frozen=True)
class PretiltingReport:
    """Outcome of a self-Ext vanishing check."""

    ok: bool
    witnesses: tuple[tuple[int, HomogeneousBundle, int, int], ...]
    table: ExtTable

    def as_json(self) -> dict:
        return {
            "ok": self.ok,
            "witnesses": [{"level": l, "bundle": t.literal(), "degree": d, "dim": n}
                          for l, t, d, n in self.witnesses],
            "cutoff": self.table.certificate.as_json()
            if self.table.certificate else {"l0": self.table.cutoff},
        }


def is_pretilting(model: TotalSpaceModel, bundle) -> PretiltingReport:
    """True when Ext^i(bundle, bundle) vanishes upstairs for every i > 0.

    Rows beyond the certified cutoff cannot contribute, so the check is exact.
    """
    table = ext_table(model, bundle, bundle, cutoff="auto")
    witnesses = table.violations()
    return PretiltingReport(not witnesses, witnesses, table)
