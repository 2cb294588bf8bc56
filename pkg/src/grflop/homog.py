"""Homogeneous irreducible vector bundles on Grassmannians and partial flag varieties.

A bundle is encoded by one weakly decreasing weight per Levi block.  On
Gr(k, n) with blocks (lam | mu) the bundle is S^lam(U_k^dual) (x) S^mu(Q^dual),
where U_k is the tautological subbundle and Q the quotient; on Fl(2,3;5) the
three blocks act on U_2^dual, (U_3/U_2)^dual and (V/U_3)^dual.  Under this
convention O(1) on Gr(k, n) has blocks ((1,...,1) | 0).

Cohomology is computed by the Bott recipe: concatenate the blocks, add
rho = (n-1, ..., 0), return acyclic on a repeat, otherwise sort and count
inversions.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import ClassVar

from .partitions import Weight, as_weight, gl_tensor, pad, weyl_dim


@dataclass(frozen=True)
class FlagVariety:
    """A partial flag variety Fl(d_1, ..., d_r; n); a Grassmannian when r = 1."""

    n: int
    dims: tuple[int, ...]

    def __post_init__(self):
        if self.n <= 0:
            raise ValueError("ambient dimension must be positive")
        d = self.dims
        if not d or any(d[i] >= d[i + 1] for i in range(len(d) - 1)) \
                or d[0] <= 0 or d[-1] >= self.n:
            raise ValueError(f"invalid subspace dimensions {d} for n={self.n}")

    @classmethod
    def grassmannian(cls, k: int, n: int) -> "FlagVariety":
        return cls(n, (k,))

    def block_sizes(self) -> tuple[int, ...]:
        d = (0,) + self.dims + (self.n,)
        return tuple(d[i + 1] - d[i] for i in range(len(d) - 1))

    @property
    def is_grassmannian(self) -> bool:
        return len(self.dims) == 1

    @property
    def dimension(self) -> int:
        b = self.block_sizes()
        return sum(b[i] * b[j] for i in range(len(b)) for j in range(i + 1, len(b)))

    def twist_generators(self) -> tuple[str, ...]:
        if self.is_grassmannian:
            return ("O",)
        return tuple(f"H{d}" for d in self.dims)

    def __str__(self) -> str:
        if self.is_grassmannian:
            return f"gr({self.dims[0]},{self.n})"
        return f"fl({','.join(map(str, self.dims))};{self.n})"


GR25 = FlagVariety.grassmannian(2, 5)
GR35 = FlagVariety.grassmannian(3, 5)
FL235 = FlagVariety(5, (2, 3))


@dataclass(frozen=True)
class Cohomology:
    """Bott cohomology of one irreducible bundle: acyclic, or one nonzero degree."""

    degree: int | None
    weight: Weight | None
    dim: int

    ACYCLIC: ClassVar["Cohomology"]

    @property
    def is_acyclic(self) -> bool:
        return self.degree is None

    def signed_dim(self) -> int:
        if self.is_acyclic:
            return 0
        return self.dim if self.degree % 2 == 0 else -self.dim

    def __repr__(self) -> str:
        if self.is_acyclic:
            return "Cohomology(acyclic)"
        return f"Cohomology(degree={self.degree}, weight={self.weight}, dim={self.dim})"


Cohomology.ACYCLIC = Cohomology(None, None, 0)


def bott(space: FlagVariety, concatenated: Weight) -> Cohomology:
    """Apply the Bott algorithm to a length-n concatenated weight."""
    n = space.n
    if len(concatenated) != n:
        raise ValueError(f"expected weight of length {n}, got {concatenated}")
    alpha = [concatenated[i] + (n - 1 - i) for i in range(n)]
    if len(set(alpha)) != n:
        return Cohomology.ACYCLIC
    inversions = sum(1 for i in range(n) for j in range(i + 1, n)
                     if alpha[i] < alpha[j])
    dominant = sorted(alpha, reverse=True)
    weight = tuple(dominant[i] - (n - 1 - i) for i in range(n))
    return Cohomology(inversions, weight, weyl_dim(weight, n))


@dataclass(frozen=True)
class HomogeneousBundle:
    """An irreducible homogeneous bundle with an integer multiplicity."""

    space: FlagVariety
    blocks: tuple[Weight, ...]
    mult: int = 1

    def __post_init__(self):
        sizes = self.space.block_sizes()
        blocks = tuple(as_weight(b) for b in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        if len(blocks) != len(sizes):
            raise ValueError(f"expected {len(sizes)} blocks, got {len(blocks)}")
        for b, s in zip(blocks, sizes):
            if len(b) != s:
                raise ValueError(f"block {b} should have length {s}")
        if self.mult <= 0:
            raise ValueError("multiplicity must be positive")

    def rank(self) -> int:
        r = self.mult
        for b in self.blocks:
            r *= weyl_dim(b, len(b))
        return r

    def dual(self) -> "HomogeneousBundle":
        blocks = tuple(tuple(-x for x in reversed(b)) for b in self.blocks)
        return HomogeneousBundle(self.space, blocks, self.mult)

    def with_mult(self, mult: int) -> "HomogeneousBundle":
        return HomogeneousBundle(self.space, self.blocks, mult)

    def twist(self, a: int, generator: str = "O") -> "HomogeneousBundle":
        """Tensor with the a-th power of a determinant line bundle.

        On Gr(k, n) the generator "O" (det of U_k^dual) raises block 1; on a
        flag variety "H<d>" (det of U_d^dual) raises every block inside U_d.
        """
        gens = self.space.twist_generators()
        if generator not in gens:
            raise ValueError(f"unknown generator {generator!r} for {self.space}; "
                             f"valid: {', '.join(gens)}")
        upto = 1 if generator == "O" else self.space.dims.index(int(generator[1:])) + 1
        blocks = tuple(tuple(x + a for x in b) if i < upto else b
                       for i, b in enumerate(self.blocks))
        return HomogeneousBundle(self.space, blocks, self.mult)

    def tensor(self, other) -> "BundleSum":
        if isinstance(other, BundleSum):
            return BundleSum.of(self.space, [self]).tensor(other)
        if self.space != other.space:
            raise ValueError("cannot tensor bundles on different spaces")
        sizes = self.space.block_sizes()
        per_block = [gl_tensor(a, b, s)
                     for a, b, s in zip(self.blocks, other.blocks, sizes)]
        out = []
        for combo in product(*(list(ws.items()) for ws in per_block)):
            blocks = tuple(w for w, _ in combo)
            mult = self.mult * other.mult
            for _, c in combo:
                mult *= c
            out.append(HomogeneousBundle(self.space, blocks, mult))
        return BundleSum.of(self.space, out)

    def cohomology(self) -> Cohomology:
        """Bott cohomology of the underlying irreducible (multiplicity not folded in)."""
        concatenated = tuple(x for b in self.blocks for x in b)
        return bott(self.space, concatenated)

    def key(self) -> tuple[Weight, ...]:
        return self.blocks

    def literal(self) -> str:
        """Canonical one-line text form, e.g. ``gr(3,5) u=[2,2,1] q=[0,0] mult=1``."""
        if self.space.is_grassmannian:
            names = ("u", "q")
        else:
            names = tuple(f"b{i + 1}" for i in range(len(self.blocks)))
        body = " ".join(f"{nm}=[{','.join(map(str, b))}]"
                        for nm, b in zip(names, self.blocks))
        return f"{self.space} {body} mult={self.mult}"

    def __repr__(self) -> str:
        return f"<{self.literal()}>"


@dataclass(frozen=True)
class BundleSum:
    """Canonical finite direct sum of homogeneous bundles on one flag variety."""

    space: FlagVariety
    terms: tuple[HomogeneousBundle, ...]

    @classmethod
    def of(cls, space: FlagVariety, terms) -> "BundleSum":
        merged: dict[tuple[Weight, ...], int] = {}
        for t in terms:
            if t.space != space:
                raise ValueError("all terms must live on the same space")
            merged[t.key()] = merged.get(t.key(), 0) + t.mult
        canon = tuple(HomogeneousBundle(space, blocks, mult)
                      for blocks, mult in sorted(merged.items()))
        return cls(space, canon)

    def __iter__(self):
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __add__(self, other: "BundleSum") -> "BundleSum":
        if self.space != other.space:
            raise ValueError("cannot add sums on different spaces")
        return BundleSum.of(self.space, self.terms + other.terms)

    def rank(self) -> int:
        return sum(t.rank() for t in self.terms)

    def dual(self) -> "BundleSum":
        return BundleSum.of(self.space, [t.dual() for t in self.terms])

    def twist(self, a: int, generator: str = "O") -> "BundleSum":
        return BundleSum.of(self.space, [t.twist(a, generator) for t in self.terms])

    def tensor(self, other) -> "BundleSum":
        if isinstance(other, HomogeneousBundle):
            other = BundleSum.of(other.space, [other])
        if self.space != other.space:
            raise ValueError("cannot tensor sums on different spaces")
        out: list[HomogeneousBundle] = []
        for a in self.terms:
            for b in other.terms:
                out.extend(a.tensor(b).terms)
        return BundleSum.of(self.space, out)

    def cohomology(self) -> tuple[tuple[HomogeneousBundle, Cohomology], ...]:
        """Bott cohomology per term, in canonical term order."""
        return tuple((t, t.cohomology()) for t in self.terms)

    def signed_euler(self) -> int:
        """Alternating sum of cohomology dimensions, multiplicities included."""
        return sum(t.mult * c.signed_dim() for t, c in self.cohomology())


def as_sum(x) -> BundleSum:
    if isinstance(x, BundleSum):
        return x
    if isinstance(x, HomogeneousBundle):
        return BundleSum.of(x.space, [x])
    raise TypeError(f"expected a bundle or sum, got {type(x).__name__}")


def structure_sheaf(space: FlagVariety) -> HomogeneousBundle:
    blocks = tuple((0,) * s for s in space.block_sizes())
    return HomogeneousBundle(space, blocks)


def line_bundle(space: FlagVariety, a: int) -> HomogeneousBundle:
    """O(a) on a Grassmannian."""
    if not space.is_grassmannian:
        raise ValueError("line_bundle(space, a) is for Grassmannians; use twist")
    return structure_sheaf(space).twist(a)


def schur_sub_dual(space: FlagVariety, lam, a: int = 0) -> HomogeneousBundle:
    """S^lam(U_k^dual)(a) on a Grassmannian."""
    if not space.is_grassmannian:
        raise ValueError("schur_sub_dual is for Grassmannians")
    k = space.dims[0]
    first = tuple(x + a for x in pad(lam, k))
    return HomogeneousBundle(space, (first, (0,) * (space.n - k)))
