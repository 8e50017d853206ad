"""Alpha-tuple combinatorics, limit-curve descent, finite-field pencil searches."""

import random
from fractions import Fraction

import pytest

from pencillab import (
    AlphaTuple,
    ChainMismatch,
    ChainSpec,
    LimitCurveModel,
    Pencil,
    PointCollision,
    ResourceLimit,
    SearchConstraint,
    ZeroCount,
    bezoutian_curve,
    build_limit_curve,
    descends,
    diagonal_conic,
    dimension_estimate,
    enumerate_alpha,
    exists_alpha,
    grassmannian_pencil_count,
    intersect_with_conic,
    linear_form,
    search_pencils_ffield,
    severi_nonempty,
    sym_point,
    total_ramification_pencil,
)
from pencillab.pencil_geometry import PlaneCurve
from pencillab.fields import QQ, Field

from conftest import form, point, projective_points


def alphas_as_dict(tup):
    return {j + 1: a for j, a in enumerate(tup.alphas) if a}


class TestAlphaTuples:
    def test_enumerate_5_2_2(self):
        found = [alphas_as_dict(t) for t in enumerate_alpha(5, 2, 2)]
        assert found == [{1: 1, 2: 2}, {1: 2, 3: 1}]

    def test_enumerate_5_1_2_empty(self):
        # the only candidate (alpha_1=3, alpha_2=1) breaks the 2(k-1) cap
        assert enumerate_alpha(5, 1, 2) == []

    def test_delta_zero_forces_all_ones(self):
        for k in (2, 3, 4):
            for p in range(2, 12):
                tuples = enumerate_alpha(p, 0, k)
                if p <= 2 * (k - 1):
                    assert [alphas_as_dict(t) for t in tuples] == [{1: p}]
                else:
                    assert tuples == []

    def test_invariants_hold_on_sweep(self):
        for p in range(2, 12):
            for delta in range(0, p):
                for k in (2, 3):
                    for t in enumerate_alpha(p, delta, k):
                        assert sum((j + 1) * a for j, a in enumerate(t.alphas)) == p
                        assert t.delta == delta
                        assert t.genus == p - delta
                        assert all(a <= 2 * (k - 1) for a in t.alphas)

    def test_lexicographic_order_and_determinism(self):
        a = enumerate_alpha(9, 3, 3)
        assert a == enumerate_alpha(9, 3, 3)
        keys = [t.alphas for t in a]
        assert keys == sorted(keys)

    def test_alpha_tuple_validates_weight(self):
        with pytest.raises(ValueError):
            AlphaTuple(4, (1, 0, 0, 0))  # weighted sum 1 != 4

    def test_exists_examples(self):
        assert exists_alpha(5, 2, 2)
        assert exists_alpha(3, 1, 2)
        assert not exists_alpha(4, 0, 2)

    def test_exists_matches_enumeration(self):
        for p in range(2, 14):
            for delta in range(0, p):
                for k in (2, 3, 4):
                    assert exists_alpha(p, delta, k) == bool(enumerate_alpha(p, delta, k))

    def test_exists_matches_closed_form(self):
        # small slice of the cross-module law; the full sweep is in acceptance
        for p in range(2, 12):
            for delta in range(0, p):
                for k in (2, 3):
                    assert exists_alpha(p, delta, k) == severi_nonempty(p, delta, k)


class TestLimitCurves:
    def test_two_short_chains(self):
        alpha = AlphaTuple(2, (2, 0))
        chains = [
            ChainSpec(1, (point(QQ, 1, 1), point(QQ, 1, -1))),
            ChainSpec(1, (point(QQ, 1, 2), point(QQ, 1, 3))),
        ]
        model = build_limit_curve(alpha, chains, [])
        assert len(model.node_pairs) == 2
        assert alpha.delta == 0

    def test_mixed_chain_lengths(self):
        alpha = AlphaTuple(3, (1, 1, 0))
        chains = [
            ChainSpec(2, (point(QQ, 1, 0), point(QQ, 1, 1))),
            ChainSpec(1, (point(QQ, 1, 2), point(QQ, 1, 3))),
        ]
        model = build_limit_curve(alpha, chains, [])
        assert len(model.node_pairs) == 2
        assert alpha.delta == 1
        assert alpha.genus == 2

    def test_chain_mismatch(self):
        alpha = AlphaTuple(2, (2, 0))
        chains = [ChainSpec(2, (point(QQ, 1, 0), point(QQ, 1, 1)))]
        with pytest.raises(ChainMismatch):
            build_limit_curve(alpha, chains, [])

    def test_point_collision(self):
        with pytest.raises(PointCollision):
            ChainSpec(1, (point(QQ, 1, 1), point(QQ, 2, 2)))
        alpha = AlphaTuple(2, (2, 0))
        chains = [
            ChainSpec(1, (point(QQ, 1, 1), point(QQ, 1, 2))),
            ChainSpec(1, (point(QQ, 1, 2), point(QQ, 1, 3))),
        ]
        with pytest.raises(PointCollision):
            build_limit_curve(alpha, chains, [])


class TestDescent:
    def test_symmetric_pair_descends(self):
        model = LimitCurveModel(((point(QQ, 1, 1), point(QQ, 1, -1)),), (), ())
        pen = Pencil(form(QQ, [1, 0, 0]), form(QQ, [0, 0, 1]))
        assert descends(model, pen).descends

    def test_generic_pair_does_not(self):
        model = LimitCurveModel(((point(QQ, 1, 1), point(QQ, 1, 2)),), (), ())
        pen = Pencil(form(QQ, [1, 0, 0]), form(QQ, [0, 0, 1]))
        rep = descends(model, pen)
        assert not rep.descends
        assert rep.pair_in_fiber == (False,)

    def test_pairs_and_marked_ramification(self):
        model = LimitCurveModel(
            ((point(QQ, 1, 2), point(QQ, 1, Fraction(2, 3))),),
            (point(QQ, 1, 0), point(QQ, 1, 1)),
            (2, 2),
        )
        pen = Pencil(form(QQ, [0, 0, 1]), form(QQ, [1, -2, 1]))
        rep = descends(model, pen)
        assert rep.descends
        assert rep.pair_in_fiber == (True,)
        assert rep.ramification_ok == (True, True)

    def test_second_pencil_neutrality(self):
        model = LimitCurveModel(((point(QQ, 1, 1), point(QQ, 1, -1)),), (), ())
        pen = Pencil(form(QQ, [1, 0, 0]), form(QQ, [0, 0, 1]))
        crossing = Pencil(form(QQ, [1, 1, 0]), form(QQ, [0, 0, 1]))
        rep = descends(model, pen, second=crossing)
        assert rep.non_neutral == (not crossing.f.evaluate(point(QQ, 1, 1))
                                   * crossing.g.evaluate(point(QQ, 1, -1))
                                   == crossing.f.evaluate(point(QQ, 1, -1))
                                   * crossing.g.evaluate(point(QQ, 1, 1)),)

    def test_total_ramification_descent_identity(self):
        # descent through a node pair must match the product identity
        # la(y)^k lb(z)^k = la(z)^k lb(y)^k for the two-point pencil
        F = Field(7)
        rng = random.Random(3)
        pts = projective_points(F)
        for _ in range(30):
            a, b, y, z = rng.sample(pts, 4)
            k = rng.choice([2, 3])
            pen = total_ramification_pencil(a, b, k)
            la, lb = linear_form(a), linear_form(b)
            lhs = F.mul(F.pow(la.evaluate(y), k), F.pow(lb.evaluate(z), k))
            rhs = F.mul(F.pow(la.evaluate(z), k), F.pow(lb.evaluate(y), k))
            model = LimitCurveModel(((y, z),), (), ())
            assert descends(model, pen).pair_in_fiber[0] == (lhs == rhs)
            curve = bezoutian_curve(pen)
            assert curve.contains(sym_point(y, z)) == (lhs == rhs)


class TestGrassmannianCount:
    def test_small_values(self):
        assert grassmannian_pencil_count(2, 5) == 31
        assert grassmannian_pencil_count(3, 5) == 806
        assert grassmannian_pencil_count(3, 7) == 2850

    def test_matches_closed_form(self):
        for k in (2, 3, 4):
            for q in (3, 5, 7, 11):
                expected = ((q ** (k + 1) - 1) * (q ** (k + 1) - q)) // (
                    (q * q - 1) * (q * q - q)
                )
                assert grassmannian_pencil_count(k, q) == expected


class TestSearch:
    def test_empty_constraint_equals_closed_form(self):
        for k, q in [(2, 5), (2, 7), (3, 5), (3, 7), (3, 11), (4, 5), (4, 11)]:
            res = search_pencils_ffield(k, q, SearchConstraint(), use_cache=False)
            assert res.count == grassmannian_pencil_count(k, q)

    def test_unique_total_ramification_pencil(self):
        F = Field(5)
        constraint = SearchConstraint(
            ramifications=((point(F, 1, 0), 2), (point(F, 0, 1), 2))
        )
        res = search_pencils_ffield(2, 5, constraint, use_cache=False)
        assert res.count == 1
        found = res.samples[0]
        assert found.f.coeffs == (1, 0, 0)
        assert found.g.coeffs == (0, 0, 1)

    def test_one_incidence_regression(self):
        F = Field(5)
        xi = sym_point(point(F, 1, 0), point(F, 1, 1))
        res = search_pencils_ffield(2, 5, SearchConstraint(incidences=(xi,)),
                                    use_cache=False)
        assert res.count == 6  # lines through a point of the dual plane

    def test_constraints_never_increase_count(self):
        F = Field(7)
        xi1 = sym_point(point(F, 1, 0), point(F, 1, 1))
        xi2 = sym_point(point(F, 1, 2), point(F, 1, 3))
        counts = [
            search_pencils_ffield(2, 7, c, use_cache=False).count
            for c in (
                SearchConstraint(),
                SearchConstraint(incidences=(xi1,)),
                SearchConstraint(incidences=(xi1, xi2)),
            )
        ]
        assert counts[0] >= counts[1] >= counts[2]

    def test_samples_satisfy_constraint(self):
        F = Field(7)
        xi = sym_point(point(F, 1, 2), point(F, 1, 3))
        res = search_pencils_ffield(3, 7, SearchConstraint(incidences=(xi,)),
                                    use_cache=False)
        assert 0 < len(res.samples) <= 20
        for pen in res.samples:
            assert bezoutian_curve(pen).contains(xi)

    def test_strata_partition_the_count(self):
        res = search_pencils_ffield(2, 5, SearchConstraint(), report_strata=True,
                                    use_cache=False)
        assert res.strata == {"base_point_free": 25, "simple_base_divisor": 6}
        assert sum(res.strata.values()) == res.count

    def test_parallel_matches_serial(self):
        F = Field(7)
        xi = sym_point(point(F, 1, 1), point(F, 1, 5))
        constraint = SearchConstraint(incidences=(xi,))
        serial = search_pencils_ffield(2, 7, constraint, use_cache=False)
        parallel = search_pencils_ffield(2, 7, constraint, jobs=3, use_cache=False)
        assert serial.count == parallel.count
        assert serial.samples == parallel.samples

    def test_budget_guard(self):
        with pytest.raises(ResourceLimit):
            search_pencils_ffield(3, 11,
                                  SearchConstraint(incidences=(
                                      sym_point(point(Field(11), 1, 1),
                                                point(Field(11), 1, 2)),)),
                                  budget=10, use_cache=False)

    def test_field_guards(self):
        with pytest.raises(ValueError):
            search_pencils_ffield(3, 3, SearchConstraint())  # needs q > k
        with pytest.raises(ValueError):
            search_pencils_ffield(2, 4, SearchConstraint())  # composite

    def test_cache_round_trip(self, tmp_path):
        F = Field(5)
        xi = sym_point(point(F, 1, 0), point(F, 1, 2))
        constraint = SearchConstraint(incidences=(xi,))
        first = search_pencils_ffield(2, 5, constraint, cache_dir=str(tmp_path))
        cached_files = list(tmp_path.glob("search-*.json"))
        assert len(cached_files) == 1
        second = search_pencils_ffield(2, 5, constraint, cache_dir=str(tmp_path))
        assert first.count == second.count
        assert first.samples == second.samples


class TestDimensionEstimate:
    def test_two_prime_example(self):
        est = dimension_estimate([(5, 806), (7, 2850)])
        assert est.nearest == 4
        assert abs(est.raw - 3.7536) < 1e-3
        assert est.residual == est.raw - 4

    def test_exact_cubic_counts(self):
        est = dimension_estimate([(5, 125), (7, 343), (11, 1331)])
        assert est.nearest == 3
        assert abs(est.raw - 3.0) < 1e-12

    def test_rational_report(self):
        est = dimension_estimate([(5, 806), (7, 2850)])
        assert float(est.rational) == pytest.approx(est.raw, abs=1e-5)

    def test_same_prime_rejected(self):
        with pytest.raises(ValueError):
            dimension_estimate([(5, 10), (5, 20)])

    def test_zero_count(self):
        with pytest.raises(ZeroCount):
            dimension_estimate([(5, 806), (7, 0)])


class TestConicSections:
    def test_tangent_intersection_with_diagonal(self):
        # the rational normal curve picture: v^2 = uw meets the diagonal
        # conic v^2 = 4uw non-transversally
        curve = bezoutian_curve(
            Pencil(form(QQ, [0, 0, 0, 1]), form(QQ, [1, 0, 0, 0]))
        )
        rep = intersect_with_conic(curve, diagonal_conic(QQ))
        assert not rep.transversal
        assert not rep.squarefree

    def test_transversal_conic(self):
        curve = bezoutian_curve(
            Pencil(form(QQ, [0, 0, 0, 1]), form(QQ, [1, 0, 0, 0]))
        )
        conic = PlaneCurve.from_monomial_dict(
            QQ, 2, {(2, 0, 0): 1, (0, 2, 0): 1, (0, 0, 2): 1}
        )
        rep = intersect_with_conic(curve, conic)
        assert rep.expected_degree == 4
        assert rep.degree == 4
        assert rep.homogeneous and rep.squarefree and rep.transversal
        assert rep.resultant.coeffs == tuple(QQ.coerce(c) for c in (1, 0, 1, 0, 1))

    def test_degree_validation(self):
        curve = bezoutian_curve(
            Pencil(form(QQ, [0, 0, 0, 1]), form(QQ, [1, 0, 0, 0]))
        )
        line = PlaneCurve.from_monomial_dict(QQ, 1, {(1, 0, 0): 1})
        with pytest.raises(ValueError):
            intersect_with_conic(curve, line)
