"""Bundle algebra and Bott cohomology tests."""

import pytest
from hypothesis import given, settings, strategies as st

from grflop.homog import (FL235, GR25, GR35, BundleSum, FlagVariety,
                          HomogeneousBundle, line_bundle, schur_sub_dual,
                          structure_sheaf)
from grflop.partitions import weyl_dim


def decreasing_tuple(length, lo=-4, hi=4):
    return st.builds(
        lambda xs: tuple(sorted(xs, reverse=True)),
        st.lists(st.integers(min_value=lo, max_value=hi),
                 min_size=length, max_size=length))


def bundles_on(space):
    sizes = space.block_sizes()
    return st.builds(
        lambda *blocks: HomogeneousBundle(space, tuple(blocks)),
        *[decreasing_tuple(s) for s in sizes])


class TestFlagVariety:
    def test_block_sizes(self):
        assert GR25.block_sizes() == (2, 3)
        assert GR35.block_sizes() == (3, 2)
        assert FL235.block_sizes() == (2, 1, 2)

    def test_dimension(self):
        assert GR25.dimension == 6
        assert GR35.dimension == 6
        assert FL235.dimension == 8

    def test_invalid(self):
        with pytest.raises(ValueError):
            FlagVariety(5, (3, 2))
        with pytest.raises(ValueError):
            FlagVariety(5, (0,))
        with pytest.raises(ValueError):
            FlagVariety(5, (5,))


class TestBundleBasics:
    def test_rank(self):
        assert structure_sheaf(GR35).rank() == 1
        assert schur_sub_dual(GR35, (1, 0, 0)).rank() == 3
        assert schur_sub_dual(GR35, (2, 2, 1)).rank() == 3

    def test_dual_examples(self):
        u = schur_sub_dual(GR35, (1, 0, 0))
        assert u.dual().blocks == ((0, 0, -1), (0, 0))
        o1 = line_bundle(GR35, 1)
        assert o1.dual().blocks == ((-1, -1, -1), (0, 0))

    @given(bundles_on(GR25))
    @settings(max_examples=200, deadline=None)
    def test_dual_involution(self, e):
        assert e.dual().dual() == e

    def test_twist_examples(self):
        assert line_bundle(GR35, 1).blocks == ((1, 1, 1), (0, 0))
        u = schur_sub_dual(GR35, (1, 0, 0))
        assert u.twist(-1).blocks == ((0, -1, -1), (0, 0))
        t = structure_sheaf(FL235).twist(1, "H3").twist(1, "H2")
        assert t.blocks == ((2, 2), (1,), (0, 0))

    def test_twist_unknown_generator(self):
        with pytest.raises(ValueError):
            structure_sheaf(GR35).twist(1, "H2")
        with pytest.raises(ValueError):
            structure_sheaf(FL235).twist(1, "O")

    def test_tensor_examples(self):
        line = schur_sub_dual(GR35, (1, 1, 1))
        u = schur_sub_dual(GR35, (1, 0, 0))
        assert [t.blocks for t in u.tensor(line)] == [((2, 1, 1), (0, 0))]
        u2 = schur_sub_dual(GR25, (1, 0))
        got = {t.blocks[0] for t in u2.tensor(u2)}
        assert got == {(2, 0), (1, 1)}
        q = HomogeneousBundle(GR25, ((0, 0), (1, 0, 0)))
        assert [t.blocks for t in u2.tensor(q)] == [((1, 0), (1, 0, 0))]

    def test_tensor_space_mismatch(self):
        with pytest.raises(ValueError):
            structure_sheaf(GR25).tensor(structure_sheaf(GR35))

    @given(bundles_on(GR25), bundles_on(GR25))
    @settings(max_examples=100, deadline=None)
    def test_rank_multiplicativity(self, e, f):
        assert e.tensor(f).rank() == e.rank() * f.rank()

    @given(bundles_on(GR35), bundles_on(GR35))
    @settings(max_examples=50, deadline=None)
    def test_tensor_commutes(self, e, f):
        assert e.tensor(f) == f.tensor(e)


class TestBott:
    def test_structure_sheaf(self):
        c = structure_sheaf(GR35).cohomology()
        assert (c.degree, c.dim) == (0, 1)
        assert c.weight == (0, 0, 0, 0, 0)

    def test_negative_line_bundles_acyclic(self):
        for k in range(1, 5):
            encoded = HomogeneousBundle(GR25, ((0, 0), (k, k, k)))
            assert encoded.cohomology().is_acyclic
            assert line_bundle(GR25, -k).cohomology().is_acyclic

    def test_canonical_twist_top_degree(self):
        c = line_bundle(GR25, -5).cohomology()
        assert (c.degree, c.dim) == (6, 1)

    def test_positive_line_bundle(self):
        c = line_bundle(GR35, 1).cohomology()
        assert (c.degree, c.dim) == (0, 10)

    def test_dual_sub(self):
        c = schur_sub_dual(GR35, (1, 0, 0)).cohomology()
        assert (c.degree, c.dim) == (0, 5)

    def test_sum_cohomology(self):
        s = BundleSum.of(GR25, [structure_sheaf(GR25), line_bundle(GR25, -1)])
        results = {t.blocks[0]: c for t, c in s.cohomology()}
        assert results[(0, 0)].dim == 1
        assert results[(-1, -1)].is_acyclic

    def test_flag_vs_grassmannian_line_bundles(self):
        """O(a H3) on the flag variety and O(a) on Gr(3,5) agree under Bott."""
        for a in range(-5, 6):
            on_flag = structure_sheaf(FL235).twist(a, "H3").cohomology()
            on_gr = line_bundle(GR35, a).cohomology()
            assert on_flag == on_gr

    @given(bundles_on(GR25))
    @settings(max_examples=300, deadline=None)
    def test_degree_bounded_by_dimension(self, e):
        c = e.cohomology()
        if not c.is_acyclic:
            assert 0 <= c.degree <= GR25.dimension
            assert c.dim == weyl_dim(c.weight, 5)


def _all_bundles(space):
    """Every bundle on the space with block entries in [-4, 4]."""
    def tuples(length):
        if length == 0:
            return [()]
        out = []
        def rec(prefix, lo):
            if len(prefix) == length:
                out.append(tuple(prefix))
                return
            for v in range(min(lo, 4), -5, -1):
                rec(prefix + [v], v)
        rec([], 4)
        return out

    sizes = space.block_sizes()
    blocks_options = [tuples(s) for s in sizes]
    result = []
    def build(i, acc):
        if i == len(blocks_options):
            result.append(HomogeneousBundle(space, tuple(acc)))
            return
        for b in blocks_options[i]:
            build(i + 1, acc + [b])
    build(0, [])
    return result


class TestSerreDualityExhaustive:
    """Serre duality and shift invariance, exhaustive over entries in [-4, 4]."""

    @pytest.mark.parametrize("space,k", [(GR25, 2), (GR35, 3)])
    def test_serre_duality(self, space, k):
        n = space.n
        top = k * (n - k)
        bundles = _all_bundles(space)
        assert len(bundles) > 1000
        for e in bundles:
            c = e.cohomology()
            c_dual = e.dual().twist(-n).cohomology()
            if c.is_acyclic:
                assert c_dual.is_acyclic
            else:
                assert c_dual.degree == top - c.degree
                assert c_dual.dim == c.dim

    @pytest.mark.parametrize("space", [GR25, GR35])
    def test_shift_invariance(self, space):
        for e in _all_bundles(space)[::7]:
            base = e.cohomology()
            for t in (-2, 1, 3):
                shifted = HomogeneousBundle(
                    space, tuple(tuple(x + t for x in b) for b in e.blocks))
                c = shifted.cohomology()
                if base.is_acyclic:
                    assert c.is_acyclic
                else:
                    assert (c.degree, c.dim) == (base.degree, base.dim)
                    assert c.weight == tuple(x + t for x in base.weight)


class TestBundleSumCanonical:
    def test_merges_multiplicities(self):
        u = schur_sub_dual(GR25, (1, 0))
        s = BundleSum.of(GR25, [u, u, u.with_mult(2)])
        assert len(s) == 1
        assert s.terms[0].mult == 4

    def test_order_independent(self):
        a = structure_sheaf(GR25)
        b = line_bundle(GR25, 1)
        assert BundleSum.of(GR25, [a, b]) == BundleSum.of(GR25, [b, a])

    def test_empty_sum(self):
        empty = BundleSum.of(GR25, [])
        assert empty.cohomology() == ()
        assert empty.rank() == 0
