"""Weight-level GIT machinery: graded-restriction windows and the Kempf-Ness solver.

The torus weights come from the 18-dimensional representation underlying the
flop: fifteen matrix coordinates carrying the weights -e_1, -e_2, -e_3 (five
each) and three covector coordinates carrying (1,2,2), (2,1,2), (2,2,1).  The
two GIT characters are (1,1,1) and (-1,-1,-1) up to scale.

The destabilizing value M = inf (r . k)/|k| over the cone of allowed
one-parameter subgroups is a quadratic irrational; it is carried exactly as
(sign, M^2) and the minimizer as a primitive integer ray.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from math import gcd, lcm
from typing import Iterable, Sequence

from .partitions import Weight, as_weight

TORUS_WEIGHTS: dict[str, tuple[int, int, int]] = {
    "u1": (-1, 0, 0),
    "u2": (0, -1, 0),
    "u3": (0, 0, -1),
    "q1": (1, 2, 2),
    "q2": (2, 1, 2),
    "q3": (2, 2, 1),
}

CHARACTERS: dict[str, tuple[int, int, int]] = {
    "plus": (-1, -1, -1),
    "minus": (1, 1, 1),
}

_PAIRS = tuple(combinations(range(3), 2))
_ORDERED = tuple(permutations(range(3), 2))


@dataclass(frozen=True)
class Membership:
    member: bool
    failed: tuple[str, ...]


def hl_membership(chi: Iterable[int], w: Sequence[int], side: str) -> Membership:
    """Test the graded-restriction window conditions for a dominant weight.

    Each Kempf-Ness stratum contributes one family of inequalities; the plus
    side constrains coordinate sums and entries, the minus side the skewed
    combinations matched to its destabilizing one-parameter subgroups.
    """
    chi = as_weight(chi)
    if len(chi) != 3:
        raise ValueError("chi must have length 3")
    w0, w1, w2 = (int(x) for x in w)
    failed: list[str] = []
    if side == "plus":
        s = sum(chi)
        if not w0 <= s < w0 + 15:
            failed.append(f"a: sum {s} not in [{w0},{w0 + 15})")
        for i, j in _PAIRS:
            v = chi[i] + chi[j]
            if not w1 <= v < w1 + 8:
                failed.append(f"b: pair({i + 1},{j + 1}) {v} not in [{w1},{w1 + 8})")
        for i in range(3):
            if not w2 <= chi[i] < w2 + 3:
                failed.append(f"c: entry({i + 1}) {chi[i]} not in [{w2},{w2 + 3})")
    elif side == "minus":
        s = -sum(chi)
        if not w0 <= s < w0 + 15:
            failed.append(f"a': -sum {s} not in [{w0},{w0 + 15})")
        for i, j in _PAIRS:
            k = 3 - i - j
            v = chi[i] + chi[j] - 4 * chi[k]
            if not w1 <= v < w1 + 10:
                failed.append(f"b': pair({i + 1},{j + 1}) {v} not in [{w1},{w1 + 10})")
        for i, k in _ORDERED:
            v = chi[i] - 2 * chi[k]
            if not w2 <= v < w2 + 4:
                failed.append(f"c': ({i + 1},{k + 1}) {v} not in [{w2},{w2 + 4})")
    else:
        raise ValueError("side must be 'plus' or 'minus'")
    return Membership(not failed, tuple(failed))


def hl_enumerate(w: Sequence[int], side: str) -> tuple[Weight, ...]:
    """All dominant weights in the window, by brute force over a finite box.

    On the plus side each entry is pinned to three consecutive integers.  On
    the minus side the entry conditions force chi_1 + chi_3 into a window of
    width six and chi_1 - chi_3 <= 3; the box is scanned and filtered through
    hl_membership, so the structural bound is checked rather than assumed.
    """
    w0, w1, w2 = (int(x) for x in w)
    out = []
    if side == "plus":
        lo, hi = w2, w2 + 2
        for a in range(lo, hi + 1):
            for b in range(lo, a + 1):
                for c in range(lo, b + 1):
                    chi = (a, b, c)
                    if hl_membership(chi, w, side).member:
                        out.append(chi)
    elif side == "minus":
        for s in range(-2 * w2 - 6, -2 * w2 + 1):
            for d in range(0, 4):
                if (s + d) % 2:
                    continue
                a = (s + d) // 2
                c = (s - d) // 2
                for b in range(c, a + 1):
                    chi = (a, b, c)
                    if hl_membership(chi, w, side).member:
                        out.append(chi)
    else:
        raise ValueError("side must be 'plus' or 'minus'")
    return tuple(sorted(set(out)))


@dataclass(frozen=True)
class ConeProblem:
    """Constraint weights (by name) and a character, defining one strip of the
    unstable locus."""

    supports: tuple[str, ...]
    character: str

    def __post_init__(self):
        bad = [s for s in self.supports if s not in TORUS_WEIGHTS]
        if bad:
            raise ValueError(f"unknown constraint weights: {bad}")
        if self.character not in CHARACTERS:
            raise ValueError(f"unknown character {self.character!r}")
        object.__setattr__(self, "supports", tuple(sorted(set(self.supports))))

    @property
    def constraint_vectors(self) -> tuple[tuple[int, int, int], ...]:
        return tuple(TORUS_WEIGHTS[s] for s in self.supports)

    @property
    def character_vector(self) -> tuple[int, int, int]:
        return CHARACTERS[self.character]


@dataclass(frozen=True)
class KNSolution:
    """Exact destabilizing datum: M = -sqrt(value_sq) on the primitive ray, or
    no destabilizing direction at all (value_sq is None)."""

    value_sq: Fraction | None
    minimizer: tuple[int, int, int] | None

    @property
    def destabilizing(self) -> bool:
        return self.value_sq is not None

    def as_json(self) -> dict:
        if not self.destabilizing:
            return {"status": "nonnegative", "value_sq": None, "minimizer": None}
        return {
            "status": "destabilizing",
            "value_sq": {"num": self.value_sq.numerator, "den": self.value_sq.denominator},
            "minimizer": list(self.minimizer),
        }


def _dot(a, b) -> Fraction:
    return sum(Fraction(x) * Fraction(y) for x, y in zip(a, b))


def _project_off(r, vectors):
    """Orthogonal projection of r onto the common kernel of the given functionals."""
    basis: list[list[Fraction]] = []
    for v in vectors:
        u = [Fraction(x) for x in v]
        for b in basis:
            coef = _dot(u, b) / _dot(b, b)
            u = [x - coef * y for x, y in zip(u, b)]
        if any(u):
            basis.append(u)
    p = [Fraction(x) for x in r]
    for b in basis:
        coef = _dot(p, b) / _dot(b, b)
        p = [x - coef * y for x, y in zip(p, b)]
    return p


def _primitive(p) -> tuple[int, int, int]:
    denom = 1
    for x in p:
        denom = lcm(denom, Fraction(x).denominator)
    ints = [int(Fraction(x) * denom) for x in p]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    return tuple(x // g for x in ints)


def kn_adapted(problem: ConeProblem) -> KNSolution:
    """Minimize (r . k)/|k| over the cone {k != 0 : w . k >= 0 for all constraints}.

    For every subset of constraints, project the character onto the subset's
    kernel; the negated projection is a candidate ray, kept if it satisfies
    every constraint.  The optimum over the cone is attained at one of these
    candidates, and the best candidate maximizes the squared projection
    length.  All arithmetic is exact.
    """
    r = problem.character_vector
    constraints = problem.constraint_vectors
    names = problem.supports
    best_sq: Fraction | None = None
    best_ray: tuple[int, int, int] | None = None
    indices = list(range(len(names)))
    subsets = [()] + [s for size in range(1, len(indices) + 1)
                      for s in combinations(indices, size)]
    for subset in subsets:
        p = _project_off(r, [constraints[i] for i in subset])
        if not any(p):
            continue
        k = [-x for x in p]
        if any(_dot(wv, k) < 0 for wv in constraints):
            continue
        value_sq = _dot(p, p)
        if best_sq is None or value_sq > best_sq:
            best_sq = value_sq
            best_ray = _primitive(k)
    return KNSolution(best_sq, best_ray)


@dataclass(frozen=True)
class Stratum:
    """One Kempf-Ness stratum at the group level, with its defining cone problem."""

    side: str
    description: str
    problem: ConeProblem
    value_sq: Fraction
    weight: tuple[int, int, int]

    def as_json(self) -> dict:
        return {
            "side": self.side,
            "description": self.description,
            "supports": list(self.problem.supports),
            "character": self.problem.character,
            "value_sq": {"num": self.value_sq.numerator, "den": self.value_sq.denominator},
            "weight": list(self.weight),
        }


def kn_stratification(side: str) -> tuple[Stratum, ...]:
    """The curated group-level strata, each revalidated through kn_adapted.

    The torus-level stratum with ray (3,-2,-2) on the minus side is absorbed
    into the (1,0,-2) group stratum and is deliberately not listed.
    """
    from . import data
    if side not in ("plus", "minus"):
        raise ValueError("side must be 'plus' or 'minus'")
    out = []
    for record in data.KN_STRATA[side]:
        problem = ConeProblem(record["supports"], record["character"])
        expected_sq = Fraction(*record["value_sq"])
        expected_ray = tuple(record["weight"])
        solved = kn_adapted(problem)
        if solved.value_sq != expected_sq or solved.minimizer != expected_ray:
            raise AssertionError(
                f"stratum {record['description']!r} failed validation: "
                f"solver gave ({solved.value_sq}, {solved.minimizer}), "
                f"expected ({expected_sq}, {expected_ray})")
        out.append(Stratum(side, record["description"], problem,
                           expected_sq, expected_ray))
    return tuple(out)
