"""Family constructors: explicit matrix entries, labels, validation."""

import pytest

from wqosc.families import (
    CaoSet,
    FamilyId,
    FamilyParams,
    build,
    build_ospB,
    build_ospD1,
    build_ospD2,
    build_sl3,
    build_sl5a,
    build_sl5b,
    label_sign,
    parabose_ops,
    validate_params,
)
from wqosc.radicals import RadBasis, RadElement
from wqosc.supermatrix import GradedDim, Parity, unit_matrix


class TestLabelSign:
    def test_values(self):
        assert label_sign(3) == 1
        assert label_sign(0) == 0
        assert label_sign(-2) == -1


class TestSl3:
    def test_explicit_two_one(self):
        caos = build_sl3(2, 1)
        dim = caos.dim
        assert dim == GradedDim(2, 1)
        assert caos.labels == ((1, 1), (1, 2))
        pairs = caos.pair_map()
        assert pairs[(1, 1)].plus == unit_matrix(3, 1, dim)
        assert pairs[(1, 2)].plus == unit_matrix(3, 2, dim)
        assert pairs[(1, 1)].minus == unit_matrix(1, 3, dim)
        assert pairs[(1, 2)].minus == unit_matrix(2, 3, dim)

    def test_counts_and_parity(self):
        for m, n in [(1, 1), (2, 3), (3, 1)]:
            caos = build_sl3(m, n)
            assert len(caos) == m * n
            assert all(p.plus.parity is Parity.ODD and p.minus.parity is Parity.ODD for p in caos)

    def test_row_major_label_order(self):
        caos = build_sl3(2, 3)
        assert caos.labels == tuple((r, k) for r in (1, 2, 3) for k in (1, 2))

    def test_no_radicals(self):
        assert build_sl3(3, 2).rad_basis() == RadBasis(())


class TestSl5a:
    def test_explicit_three_one_one(self):
        caos = build_sl5a(3, 1, 1)
        dim = caos.dim
        root3 = RadElement.sqrt(3)
        pairs = caos.pair_map()
        # k = 1 <= l: scaled sqrt|2m-n-2l| = sqrt(3) on the sl3 shapes
        assert pairs[(1, 1)].plus == root3 * unit_matrix(4, 1, dim)
        assert pairs[(1, 1)].minus == root3 * unit_matrix(1, 4, dim)
        # k = 2, 3 > l: scale sqrt|n-2l| = 1, transposed shape, eps = -1 on minus
        assert pairs[(1, 2)].plus == unit_matrix(2, 4, dim)
        assert pairs[(1, 2)].minus == -1 * unit_matrix(4, 2, dim)
        assert pairs[(1, 3)].plus == unit_matrix(3, 4, dim)
        assert pairs[(1, 3)].minus == -1 * unit_matrix(4, 3, dim)
        assert caos.rad_basis() == RadBasis((3,))

    def test_positive_eps_case(self):
        # (m,n,l) = (4,1,1): factors 2m-n-2l = 5, n-2l = -1, eps = sgn(-5) = -1
        # (m,n,l) = (5,4,2): factors 2m-n-2l = 2, n-2l = 0 -> invalid; use (5,1,2): 7, -3, eps=-1
        # a genuinely positive eps needs n > 2l: (3,5,1) -> factors 0 invalid; (4,5,1): 2m-n-2l=1, n-2l=3, eps=+1
        caos = build_sl5a(4, 5, 1)
        pairs = caos.pair_map()
        assert pairs[(1, 2)].minus == RadElement.sqrt(3) * unit_matrix(5, 2, caos.dim)

    def test_all_odd_and_counted(self):
        caos = build_sl5a(2, 3, 1)
        assert len(caos) == 6
        assert all(p.plus.parity is Parity.ODD for p in caos)


class TestSl5b:
    def test_explicit_one_three_one(self):
        caos = build_sl5b(1, 3, 1)
        dim = caos.dim
        root3 = RadElement.sqrt(3)
        pairs = caos.pair_map()
        # r = 1 <= l: scale sqrt|2n-m-2l| = sqrt(3)
        assert pairs[(1, 1)].plus == root3 * unit_matrix(1, 2, dim)
        assert pairs[(1, 1)].minus == root3 * unit_matrix(2, 1, dim)
        # r = 2, 3 > l: scale sqrt|m-2l| = 1, eps = sgn((-1)*3) = -1 on plus
        assert pairs[(2, 1)].plus == -1 * unit_matrix(3, 1, dim)
        assert pairs[(2, 1)].minus == unit_matrix(1, 3, dim)
        assert pairs[(3, 1)].plus == -1 * unit_matrix(4, 1, dim)
        assert pairs[(3, 1)].minus == unit_matrix(1, 4, dim)

    def test_label_ranges(self):
        caos = build_sl5b(3, 2, 1)
        assert caos.labels == tuple((r, k) for r in (1, 2) for k in (1, 2, 3))
        assert len(caos) == 6


class TestOspB:
    def test_explicit_one_one(self):
        caos = build_ospB(1, 1)
        dim = caos.dim
        assert dim == GradedDim(3, 2)
        assert caos.labels == ((1, -1), (1, 0), (1, 1))
        pairs = caos.pair_map()
        assert pairs[(1, 1)].plus == unit_matrix(2, 4, dim) - unit_matrix(5, 1, dim)
        assert pairs[(1, 1)].minus == unit_matrix(1, 5, dim) + unit_matrix(4, 2, dim)
        assert pairs[(1, -1)].plus == unit_matrix(1, 4, dim) - unit_matrix(5, 2, dim)
        assert pairs[(1, -1)].minus == unit_matrix(2, 5, dim) + unit_matrix(4, 1, dim)
        assert pairs[(1, 0)].plus == unit_matrix(3, 4, dim) - unit_matrix(5, 3, dim)
        assert pairs[(1, 0)].minus == unit_matrix(3, 5, dim) + unit_matrix(4, 3, dim)

    def test_m_zero_single_column(self):
        caos = build_ospB(0, 1)
        assert caos.dim == GradedDim(1, 2)
        assert caos.labels == ((1, 0),)
        pair = caos.pairs[0]
        assert pair.plus == unit_matrix(1, 2, caos.dim) - unit_matrix(3, 1, caos.dim)
        assert pair.minus == unit_matrix(1, 3, caos.dim) + unit_matrix(2, 1, caos.dim)

    def test_counts(self):
        assert len(build_ospB(1, 2)) == 6
        assert build_ospB(1, 2).dim == GradedDim(3, 4)

    def test_two_entries_each(self):
        for pair in build_ospB(2, 2):
            assert len(pair.plus.entries) == 2
            assert len(pair.minus.entries) == 2


class TestOspD:
    def test_d1_explicit(self):
        caos = build_ospD1(1, 1)
        dim = caos.dim
        assert dim == GradedDim(2, 2)
        assert caos.labels == ((1, -1), (1, 1))
        pairs = caos.pair_map()
        assert pairs[(1, 1)].plus == unit_matrix(2, 3, dim) - unit_matrix(4, 1, dim)
        assert pairs[(1, 1)].minus == unit_matrix(1, 4, dim) + unit_matrix(3, 2, dim)

    def test_d2_explicit(self):
        caos = build_ospD2(1, 1)
        dim = caos.dim
        pairs = caos.pair_map()
        assert pairs[(1, 1)].plus == unit_matrix(4, 1, dim) - unit_matrix(2, 3, dim)
        assert pairs[(1, 1)].minus == unit_matrix(1, 4, dim) + unit_matrix(3, 2, dim)

    def test_d1_vs_d2_label_ranges(self):
        d1 = build_ospD1(2, 3)
        d2 = build_ospD2(2, 3)
        assert len(d1) == len(d2) == 12
        assert d1.labels == tuple((r, k) for r in (1, 2, 3) for k in (-2, -1, 1, 2))
        assert d2.labels == tuple((r, k) for r in (1, 2) for k in (-3, -2, -1, 1, 2, 3))

    def test_all_odd(self):
        for caos in (build_ospD1(2, 1), build_ospD2(1, 2)):
            assert all(p.plus.parity is Parity.ODD and p.minus.parity is Parity.ODD for p in caos)


class TestValidation:
    def test_sl3_rejects_l(self):
        with pytest.raises(ValueError, match="no split parameter"):
            build(FamilyId.SL3, FamilyParams(2, 1, 1))

    def test_sl3_rejects_bad_ranks(self):
        with pytest.raises(ValueError):
            build_sl3(0, 1)
        with pytest.raises(ValueError):
            build_sl3(1, 0)

    def test_sl5a_requires_l(self):
        with pytest.raises(ValueError, match="requires the split parameter"):
            validate_params(FamilyId.SL5A, FamilyParams(3, 1))

    def test_sl5a_l_range(self):
        with pytest.raises(ValueError, match="1 <= l <= m-1"):
            build_sl5a(3, 1, 3)
        with pytest.raises(ValueError, match="1 <= l <= m-1"):
            build_sl5a(3, 1, 0)

    def test_sl5a_vanishing_factors(self):
        with pytest.raises(ValueError, match=r"factor \(n-2l\) vanishes"):
            build_sl5a(2, 2, 1)
        with pytest.raises(ValueError, match=r"factor \(2m-n-2l\) vanishes"):
            build_sl5a(3, 2, 2)

    def test_sl5b_vanishing_factors(self):
        with pytest.raises(ValueError, match=r"factor \(m-2l\) vanishes"):
            build_sl5b(2, 3, 1)
        with pytest.raises(ValueError, match=r"factor \(2n-m-2l\) vanishes"):
            build_sl5b(2, 3, 2)

    def test_osp_ranges(self):
        with pytest.raises(ValueError):
            build_ospB(-1, 1)
        with pytest.raises(ValueError):
            build_ospB(0, 0)
        with pytest.raises(ValueError):
            build_ospD1(0, 1)
        with pytest.raises(ValueError):
            build_ospD2(1, 0)

    def test_osp_rejects_l(self):
        with pytest.raises(ValueError, match="no split parameter"):
            validate_params(FamilyId.OSPB, FamilyParams(1, 1, 1))

    def test_ospb_m_zero_allowed(self):
        validate_params(FamilyId.OSPB, FamilyParams(0, 4))


class TestCaoSetApi:
    def test_build_dispatch_matches_direct(self):
        assert build(FamilyId.SL3, FamilyParams(2, 1)) == build_sl3(2, 1)
        assert build(FamilyId.SL5A, FamilyParams(3, 1, 1)) == build_sl5a(3, 1, 1)
        assert build(FamilyId.OSPB, FamilyParams(1, 1)) == build_ospB(1, 1)

    def test_deterministic_rebuilds(self):
        assert build_ospD2(2, 2) == build_ospD2(2, 2)

    def test_algebra_names(self):
        assert build_sl3(2, 1).algebra_name == "sl(2|1)"
        assert build_sl5b(1, 3, 1).algebra_name == "sl(1|3)"
        assert build_ospB(1, 1).algebra_name == "osp(3|2)"
        assert build_ospB(0, 1).algebra_name == "osp(1|2)"
        assert build_ospD1(2, 1).algebra_name == "osp(4|2)"
        assert build_ospD1(1, 2).algebra_name == "C(3)"
        assert build_ospD2(1, 2).algebra_name == "C(3)"

    def test_permuted(self):
        caos = build_ospB(1, 1)
        swapped = caos.permuted([2, 0, 1])
        assert set(swapped.labels) == set(caos.labels)
        assert swapped.labels == ((1, 1), (1, -1), (1, 0))
        with pytest.raises(ValueError):
            caos.permuted([0, 0, 1])

    def test_json_shape(self):
        obj = build_sl3(1, 1).to_json_obj()
        assert obj["family"] == "sl3"
        assert obj["params"] == {"m": 1, "n": 1, "l": None}
        assert obj["dim"] == [1, 1]
        assert obj["pairs"][0]["label"] == [1, 1]
        assert obj["pairs"][0]["plus"]["entries"] == [[2, 1, "1"]]


class TestParabose:
    def test_scaling(self):
        caos = build_ospB(0, 2)
        bops = parabose_ops(caos)
        root2 = RadElement.sqrt(2)
        assert len(bops) == 2
        for (b_plus, b_minus), pair in zip(bops, caos.pairs):
            assert b_plus == root2 * pair.plus
            assert b_minus == -1 * (root2 * pair.minus)
        assert caos.rad_basis() == RadBasis(())
        assert RadBasis.from_values(
            v for b in bops for mat in b for v in [r for e in mat.entries.values() for r in e.radicands()]
        ) == RadBasis((2,))

    def test_rejects_wrong_family(self):
        with pytest.raises(ValueError, match="m = 0"):
            parabose_ops(build_ospB(1, 1))
        with pytest.raises(ValueError, match="ospB"):
            parabose_ops(build_sl3(2, 1))
