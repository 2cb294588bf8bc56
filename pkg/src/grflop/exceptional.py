"""Exceptional-collection checks and K-theory witnesses for resolution complexes."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import data
from .homog import (BundleSum, FlagVariety, GR35, HomogeneousBundle,
                    schur_sub_dual)


@dataclass(frozen=True)
class ExceptionalCollection:
    name: str
    space: FlagVariety
    objects: tuple[HomogeneousBundle, ...]

    def __post_init__(self):
        if not self.objects:
            raise ValueError("empty collection")
        if any(o.space != self.space for o in self.objects):
            raise ValueError("all objects must live on the collection's space")


def builtin_collection(name: str) -> ExceptionalCollection:
    objects = data.collection_objects(name)
    return ExceptionalCollection(name, objects[0].space, objects)


@dataclass(frozen=True)
class Violation:
    kind: str  # "exceptional" | "semiorthogonality" | "strongness"
    source: int
    target: int
    degree: int
    dim: int

    def as_json(self) -> dict:
        return {"kind": self.kind, "source": self.source, "target": self.target,
                "degree": self.degree, "dim": self.dim}


@dataclass(frozen=True)
class CollectionReport:
    collection: ExceptionalCollection
    violations: tuple[Violation, ...]

    @property
    def passed(self) -> bool:
        return not self.violations

    def as_json(self) -> dict:
        return {
            "name": self.collection.name,
            "objects": [o.literal() for o in self.collection.objects],
            "passed": self.passed,
            "violations": [v.as_json() for v in self.violations],
        }


def ext_groups(source: HomogeneousBundle, target: HomogeneousBundle
               ) -> dict[int, int]:
    """Nonzero Ext dimensions between two bundles, by degree."""
    out: dict[int, int] = {}
    for t, c in source.dual().tensor(target).cohomology():
        if not c.is_acyclic:
            out[c.degree] = out.get(c.degree, 0) + t.mult * c.dim
    return dict(sorted(out.items()))


def check_collection(coll: ExceptionalCollection) -> CollectionReport:
    """Exceptionality, semiorthogonality and strongness for all ordered pairs.

    Hom and Ext are computed through the cohomology of dual(source) (x) target.
    Every violated (source, target, degree) triple is reported.
    """
    violations: list[Violation] = []
    n = len(coll.objects)
    for a in range(n):
        exts = ext_groups(coll.objects[a], coll.objects[a])
        if exts.get(0, 0) != 1:
            violations.append(Violation("exceptional", a, a, 0, exts.get(0, 0)))
        for d, m in exts.items():
            if d > 0:
                violations.append(Violation("exceptional", a, a, d, m))
    for b in range(n):
        for a in range(n):
            if a == b:
                continue
            exts = ext_groups(coll.objects[b], coll.objects[a])
            for d, m in exts.items():
                if b > a:
                    violations.append(Violation("semiorthogonality", b, a, d, m))
                elif d != 0:
                    violations.append(Violation("strongness", b, a, d, m))
    violations.sort(key=lambda v: (v.source, v.target, v.degree))
    return CollectionReport(coll, tuple(violations))


@dataclass(frozen=True)
class ResolutionSequence:
    """A four-term complex shape with alternating signs, first term positive."""

    name: str
    terms: tuple[BundleSum, ...]

    def __post_init__(self):
        if len(self.terms) < 2:
            raise ValueError("a resolution needs at least two terms")

    def signs(self) -> tuple[int, ...]:
        return tuple(1 if i % 2 == 0 else -1 for i in range(len(self.terms)))


def builtin_resolution(name: str) -> ResolutionSequence:
    rows = data.RESOLUTIONS[name]
    terms = []
    for sign, weight, mult in rows:
        terms.append(BundleSum.of(GR35, [schur_sub_dual(GR35, weight).with_mult(mult)]))
    signs = tuple(sign for sign, _, _ in rows)
    expected = tuple(1 if i % 2 == 0 else -1 for i in range(len(rows)))
    if signs != expected:
        raise ValueError("resolution data must alternate signs starting positive")
    return ResolutionSequence(name, tuple(terms))


@dataclass(frozen=True)
class ResolutionReport:
    sequence: ResolutionSequence
    rank_sum: int
    twists: tuple[int, ...]
    euler_sums: tuple[tuple[int, int], ...]  # (twist, alternating signed-dim sum)
    degree_table: tuple[tuple[int, int, int, int], ...]  # (twist, term, degree, dim)

    @property
    def passed(self) -> bool:
        return self.rank_sum == 0 and all(s == 0 for _, s in self.euler_sums)

    def as_json(self) -> dict:
        return {
            "name": self.sequence.name,
            "rank_sum": self.rank_sum,
            "twists": list(self.twists),
            "euler_sums": [[t, s] for t, s in self.euler_sums],
            "degree_table": [list(row) for row in self.degree_table],
            "passed": self.passed,
        }


def check_resolution(seq: ResolutionSequence,
                     twists: Sequence[int] = range(-3, 4)) -> ResolutionReport:
    """K-theoretic exactness witness for a resolution complex.

    Checks the alternating rank sum and, for every twist in the range, that
    the terms' degree-signed cohomology dimensions cancel under the complex's
    alternating signs.  A per-(twist, term, degree) table of the raw
    dimensions is reported alongside; exactness itself is not proved, only
    its K-theoretic shadow.  Note that raw dimensions need not cancel degree
    by degree: connecting maps legitimately shift cohomology between degrees,
    and only the signed sums are an invariant of the class of the complex.
    """
    signs = seq.signs()
    rank_sum = sum(s * t.rank() for s, t in zip(signs, seq.terms))
    euler: dict[int, int] = {}
    table: list[tuple[int, int, int, int]] = []
    for tw in twists:
        euler.setdefault(tw, 0)
        for i, (s, term) in enumerate(zip(signs, seq.terms)):
            for bundle, coh in term.twist(tw).cohomology():
                if not coh.is_acyclic:
                    euler[tw] += s * bundle.mult * coh.signed_dim()
                    table.append((tw, i, coh.degree, bundle.mult * coh.dim))
    euler_sums = tuple(sorted(euler.items()))
    return ResolutionReport(seq, rank_sum, tuple(twists), euler_sums, tuple(table))
