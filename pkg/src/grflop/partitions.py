"""Exact integer-weight combinatorics: Littlewood-Richardson products and Weyl dimensions.

Weights are tuples of integers that must be weakly decreasing.  Trailing zeros
are significant: ``(1, 0)`` and ``(1,)`` are different weights of different
lengths.  All arithmetic is exact.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping

Weight = tuple[int, ...]


def as_weight(entries: Iterable[int]) -> Weight:
    """Coerce to a weakly decreasing tuple of ints, or raise ValueError."""
    w = tuple(int(x) for x in entries)
    if any(w[i] < w[i + 1] for i in range(len(w) - 1)):
        raise ValueError(f"not weakly decreasing: {w}")
    return w


def as_partition(entries: Iterable[int]) -> Weight:
    """Coerce to a partition (weakly decreasing, nonnegative)."""
    w = as_weight(entries)
    if w and w[-1] < 0:
        raise ValueError(f"negative entry in partition: {w}")
    return w


def shift(w: Iterable[int], t: int) -> Weight:
    """Add t to every entry; length is preserved."""
    return tuple(x + t for x in as_weight(w))


def pad(w: Iterable[int], m: int) -> Weight:
    """Zero-pad a weight to length m."""
    w = as_weight(w)
    if len(w) > m:
        raise ValueError(f"weight {w} longer than {m}")
    if w and w[-1] < 0 and len(w) < m:
        raise ValueError(f"cannot zero-pad {w}: last entry negative")
    return w + (0,) * (m - len(w))


def strip_zeros(w: Iterable[int]) -> Weight:
    """Drop trailing zeros."""
    w = tuple(w)
    n = len(w)
    while n > 0 and w[n - 1] == 0:
        n -= 1
    return w[:n]


def weyl_dim(w: Iterable[int], m: int) -> int:
    """Dimension of the GL(m) irreducible with highest weight w (zero-padded to m).

    Computed as prod over i<j of (w_i - w_j + j - i) / (j - i); the product
    is an exact integer for any weakly decreasing input.
    """
    lam = as_weight(w)
    lam = lam + (0,) * (m - len(lam))
    if len(lam) > m:
        raise ValueError(f"weight {lam} longer than m={m}")
    num = 1
    den = 1
    for i in range(m):
        for j in range(i + 1, m):
            num *= lam[i] - lam[j] + j - i
            den *= j - i
    q, r = divmod(num, den)
    if r:
        raise AssertionError(f"Weyl product not integral for {lam}, m={m}")
    return q


def _fit(w: Weight, m: int) -> Weight:
    """Normalize w to length m, treating trailing zeros as padding."""
    if len(w) == m:
        return w
    if len(w) < m:
        if w and w[-1] < 0:
            raise ValueError(f"cannot pad {w} to length {m}")
        return w + (0,) * (m - len(w))
    if any(w[m:]):
        raise ValueError(f"weight {w} does not fit length {m}")
    return w[:m]


class WeightedSum:
    """Finite formal sum of equal-length integer weights with positive multiplicities.

    Keys are stored zero-padded to a declared length and in lexicographic
    order, so equal sums compare equal structurally.
    """

    __slots__ = ("length", "_terms")

    def __init__(self, terms: Mapping[Weight, int] | Iterable[tuple[Weight, int]],
                 length: int | None = None):
        pairs = terms.items() if isinstance(terms, Mapping) else terms
        raw: dict[Weight, int] = {}
        for w, c in pairs:
            w = as_weight(w)
            c = int(c)
            if c < 0:
                raise ValueError(f"negative multiplicity {c} for {w}")
            if c:
                raw[w] = raw.get(w, 0) + c
        if length is None:
            length = max((len(w) for w in raw), default=0)
        self.length = int(length)
        merged: dict[Weight, int] = {}
        for w, c in raw.items():
            key = _fit(w, self.length)
            merged[key] = merged.get(key, 0) + c
        self._terms = dict(sorted(merged.items()))

    def items(self) -> Iterator[tuple[Weight, int]]:
        return iter(self._terms.items())

    def weights(self) -> tuple[Weight, ...]:
        return tuple(self._terms)

    def coefficient(self, w: Iterable[int]) -> int:
        try:
            key = _fit(as_weight(w), self.length)
        except ValueError:
            return 0
        return self._terms.get(key, 0)

    def total(self) -> int:
        return sum(self._terms.values())

    def __iter__(self) -> Iterator[tuple[Weight, int]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightedSum):
            return NotImplemented
        m = max(self.length, other.length)
        try:
            a = {_fit(w, m): c for w, c in self._terms.items()}
            b = {_fit(w, m): c for w, c in other._terms.items()}
        except ValueError:
            return False
        return a == b

    def __repr__(self) -> str:
        body = " + ".join(f"{c}*{w}" if c != 1 else f"{w}"
                          for w, c in self._terms.items())
        return f"WeightedSum({body or '0'})"


def _strip_additions(shape: tuple[int, ...], count: int,
                     caps: tuple[int, ...] | None) -> Iterator[tuple[int, ...]]:
    """Yield per-row increment vectors adding `count` boxes as a horizontal strip.

    The incremented shape stays a partition and satisfies new[r] <= shape[r-1]
    (no two new boxes share a column).  When caps is given, the running total
    of boxes placed in rows 0..r may not exceed caps[r]; this is the ballot
    restriction against the previous letter's row distribution.
    """
    rows = len(shape)
    acc: list[int] = []

    def rec(r: int, placed: int) -> Iterator[tuple[int, ...]]:
        if r == rows:
            if placed == count:
                yield tuple(acc)
            return
        remaining = count - placed
        hi = remaining if r == 0 else min(remaining, shape[r - 1] - shape[r])
        if caps is not None:
            hi = min(hi, caps[r] - placed)
        for s in range(hi, -1, -1):
            acc.append(s)
            yield from rec(r + 1, placed + s)
            acc.pop()

    yield from rec(0, 0)


def _lr_products(lam: Weight, mu: Weight, max_rows: int) -> dict[Weight, int]:
    """LR expansion of s_lam * s_mu, keeping only shapes with <= max_rows rows.

    Shapes are returned zero-padded to max_rows.  Fillings are grown letter by
    letter; a state records the shape and the previous letter's row counts,
    which is all the ballot condition needs.
    """
    base = lam + (0,) * (max_rows - len(lam))
    letters = list(strip_zeros(mu))
    states: dict[tuple[Weight, tuple[int, ...] | None], int] = {(base, None): 1}
    for idx, m in enumerate(letters):
        nxt: dict[tuple[Weight, tuple[int, ...] | None], int] = {}
        for (shape, prev), c in states.items():
            if idx == 0:
                caps = None
            else:
                assert prev is not None
                caps = []
                run = 0
                for r in range(max_rows):
                    caps.append(run)
                    run += prev[r]
                caps = tuple(caps)
            for inc in _strip_additions(shape, m, caps):
                ns = tuple(shape[r] + inc[r] for r in range(max_rows))
                key = (ns, inc)
                nxt[key] = nxt.get(key, 0) + c
        states = nxt
    out: dict[Weight, int] = {}
    for (shape, _), c in states.items():
        out[shape] = out.get(shape, 0) + c
    return out


def lr_mult(lam: Iterable[int], mu: Iterable[int]) -> WeightedSum:
    """Littlewood-Richardson product of two partitions.

    Returns sum of c^nu_{lam,mu} * nu over partitions nu with
    |nu| = |lam| + |mu|; coefficients count lattice-word skew tableaux.
    """
    lam = as_partition(lam)
    mu = as_partition(mu)
    lam_s = strip_zeros(lam)
    mu_s = strip_zeros(mu)
    max_rows = len(lam_s) + len(mu_s)
    table = _lr_products(lam_s, mu_s, max_rows)
    return WeightedSum(table, length=max_rows)


def lr_coefficient(nu: Iterable[int], lam: Iterable[int], mu: Iterable[int]) -> int:
    """The LR coefficient c^nu_{lam,mu}."""
    nu = as_partition(nu)
    lam = as_partition(lam)
    mu = as_partition(mu)
    if sum(nu) != sum(lam) + sum(mu):
        return 0
    return lr_mult(lam, mu).coefficient(nu)


def gl_tensor(lam: Iterable[int], mu: Iterable[int], m: int) -> WeightedSum:
    """Decompose the GL(m) tensor product of irreducibles with highest weights lam, mu.

    Both weights are shifted to partitions, multiplied by the LR rule with
    shapes truncated to m rows, and shifted back.  Output weights have length m.
    """
    lam_p = pad(as_weight(lam), m)
    mu_p = pad(as_weight(mu), m)
    a = max(0, -lam_p[-1]) if m else 0
    b = max(0, -mu_p[-1]) if m else 0
    lam_sh = tuple(x + a for x in lam_p)
    mu_sh = tuple(x + b for x in mu_p)
    table = _lr_products(lam_sh, mu_sh, m)
    total = a + b
    out = {tuple(x - total for x in nu): c for nu, c in table.items()}
    return WeightedSum(out, length=m)
