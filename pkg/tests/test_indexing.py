from __future__ import annotations

import math

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from grbl_rotary.indexing import (
    DEFAULT_OVERLAP,
    IndexingParams,
    angle_per_pass,
    faceting_error_full_angle,
    make_plan,
    pass_width,
    passes_from_overlap,
    passes_from_tolerance,
    sagitta_error,
    sagitta_error_approx,
)

# chord-midpoint deviations computed once by the brute-force mesh
# sampler in test_geometry and frozen here for cheap regression checks
SAGITTA_11_22 = 0.11196413930974047
SAGITTA_11_40 = 0.0339093289355924
SAGITTA_11_80 = 0.00848060135204809

radii = st.floats(min_value=0.5, max_value=500.0, allow_nan=False)
tools = st.floats(min_value=0.1, max_value=30.0, allow_nan=False)
overlaps = st.floats(min_value=0.05, max_value=1.0, allow_nan=False)


class TestPassWidth:
    def test_reference_tool(self):
        assert pass_width(3.175, 0.8) == pytest.approx(2.54, abs=1e-12)

    def test_half_overlap(self):
        assert pass_width(6.35, 0.5) == pytest.approx(3.175, abs=1e-12)

    @given(tools)
    def test_no_overlap_identity(self, d):
        assert pass_width(d, 1.0) == d

    def test_rejects_bad_inputs(self):
        with pytest.raises(ValueError):
            pass_width(0.0, 0.8)
        with pytest.raises(ValueError):
            pass_width(3.175, 0.0)
        with pytest.raises(ValueError):
            pass_width(3.175, 1.2)


class TestPassesFromOverlap:
    def test_stock_basis_reference(self):
        params = IndexingParams(22.0, 3.175, diameter_basis="stock")
        assert passes_from_overlap(params) == 28

    def test_toolpath_basis_reference(self):
        params = IndexingParams(22.0, 3.175, diameter_basis="toolpath")
        assert passes_from_overlap(params) == 20

    def test_tool_too_large_for_stock(self):
        with pytest.raises(ValueError, match="Tool diameter is too large"):
            IndexingParams(22.0, 11.1, diameter_basis="toolpath")

    def test_floor_is_one(self):
        params = IndexingParams(1.0, 10.0, overlap=1.0, diameter_basis="stock")
        assert passes_from_overlap(params) == 1

    @given(radii, tools, overlaps, st.sampled_from(["stock", "toolpath"]))
    def test_coverage_and_minimality(self, stock, tool, overlap, basis):
        assume(stock > 2.0 * tool + 1e-6)
        params = IndexingParams(stock, tool, overlap=overlap, diameter_basis=basis)
        n = passes_from_overlap(params)
        w = pass_width(tool, overlap)
        assert n >= 1
        assert n * w >= math.pi * params.basis_diameter * (1.0 - 1e-12)
        if n > 1:
            assert (n - 1) * w < math.pi * params.basis_diameter


class TestAnglePerPass:
    def test_reference_values(self):
        assert round(angle_per_pass(33), 2) == 10.91
        assert angle_per_pass(80) == pytest.approx(4.5, abs=0.005)
        assert angle_per_pass(360) == 1.0

    def test_rejects_non_positive(self):
        with pytest.raises(ValueError):
            angle_per_pass(0)

    @given(st.integers(1, 100000))
    def test_closure(self, n):
        assert abs(angle_per_pass(n) * n - 360.0) <= 360.0 * 1e-9


class TestFullAngleError:
    def test_reference_angle(self):
        expected = 11.0 * (1.0 - math.cos(math.radians(4.5)))
        assert faceting_error_full_angle(11.0, 4.5) == pytest.approx(expected, rel=1e-12)
        assert faceting_error_full_angle(11.0, 4.5) == pytest.approx(0.0339, abs=5e-5)

    def test_zero_angle(self):
        assert faceting_error_full_angle(5.0, 0.0) == 0.0

    def test_right_angle(self):
        assert faceting_error_full_angle(11.0, 90.0) == pytest.approx(11.0, rel=1e-12)

    def test_rejects_bad_radius(self):
        with pytest.raises(ValueError):
            faceting_error_full_angle(0.0, 10.0)

    @given(radii, st.floats(min_value=0.5, max_value=179.0), st.floats(min_value=0.1, max_value=1.0))
    def test_strictly_increasing_in_angle(self, r, angle, step):
        assert faceting_error_full_angle(r, angle + step) > faceting_error_full_angle(r, angle)


class TestSagittaError:
    def test_frozen_values(self):
        assert sagitta_error(11, 22) == pytest.approx(SAGITTA_11_22, abs=1e-12)
        assert sagitta_error(11, 40) == pytest.approx(SAGITTA_11_40, abs=1e-12)
        assert sagitta_error(11, 80) == pytest.approx(SAGITTA_11_80, abs=1e-12)

    def test_limit_to_zero(self):
        assert sagitta_error(11, 10**6) < 1e-9

    def test_taylor_agreement_at_80(self):
        exact = sagitta_error(11, 80)
        taylor = 11 * math.pi**2 / (2 * 80**2)
        assert abs(exact - taylor) / exact < 1e-3
        assert taylor == pytest.approx(0.008482, abs=5e-7)

    def test_rejects_degenerate(self):
        with pytest.raises(ValueError):
            sagitta_error(11, 2)
        with pytest.raises(ValueError):
            sagitta_error(-1, 40)

    @given(radii, st.integers(3, 5000))
    def test_strictly_decreasing_in_passes(self, r, n):
        assert sagitta_error(r, n + 1) < sagitta_error(r, n)

    @given(radii, st.integers(20, 5000))
    def test_taylor_within_one_percent(self, r, n):
        exact = sagitta_error(r, n)
        assert abs(exact - sagitta_error_approx(r, n)) / exact < 0.01


class TestPassesFromTolerance:
    def test_reference_inversions(self):
        assert passes_from_tolerance(11, 0.034) == 40
        assert passes_from_tolerance(11, 0.008482) == 80

    def test_floor_at_coarse_tolerance(self):
        assert passes_from_tolerance(11, 10.99) == 3

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            passes_from_tolerance(11, 0.0)
        with pytest.raises(ValueError):
            passes_from_tolerance(11, 11.0)
        with pytest.raises(ValueError):
            passes_from_tolerance(11, 15.0)
        with pytest.raises(ValueError):
            passes_from_tolerance(0.0, 0.1)

    @given(radii, st.floats(min_value=1e-6, max_value=0.5))
    def test_non_increasing_in_tolerance(self, r, e):
        e = min(e, r / 2)
        tighter = passes_from_tolerance(r, e / 2)
        looser = passes_from_tolerance(r, e)
        assert tighter >= looser >= 3

    @settings(max_examples=300)
    @given(radii, st.floats(min_value=100.0, max_value=1e6))
    def test_result_meets_tolerance(self, r, divisor):
        e = r / divisor
        n = passes_from_tolerance(r, e)
        assert sagitta_error(r, n) <= e * (1.0 + 1e-12)


class TestMakePlan:
    def test_explicit_passes_reference(self):
        plan = make_plan(IndexingParams(22.0, 3.175, explicit_passes=33))
        assert plan.num_passes == 33
        assert round(plan.angle_per_pass, 2) == 10.91
        assert plan.source == "explicit"
        assert plan.describe() == "passes: 33, angle: 10.91°"

    def test_coarse_vs_fine_sagitta(self):
        coarse = make_plan(IndexingParams(22.0, 3.175, explicit_passes=22))
        fine = make_plan(IndexingParams(22.0, 3.175, explicit_passes=80))
        assert coarse.predicted_sagitta == pytest.approx(SAGITTA_11_22, abs=1e-12)
        assert fine.predicted_sagitta == pytest.approx(SAGITTA_11_80, abs=1e-12)
        assert coarse.predicted_sagitta > fine.predicted_sagitta

    def test_overlap_path_reference(self):
        plan = make_plan(IndexingParams(22.0, 3.175))
        assert (plan.num_passes, plan.source) == (20, "overlap")
        assert plan.angle_per_pass == pytest.approx(18.0, abs=1e-12)
        assert plan.pass_width == pytest.approx(2.54, abs=1e-12)
        assert plan.basis_diameter == pytest.approx(15.65, abs=1e-12)

    def test_tolerance_path(self):
        plan = make_plan(IndexingParams(22.0, 3.175, error_tolerance=0.034))
        assert (plan.num_passes, plan.source) == (40, "tolerance")
        assert plan.predicted_sagitta <= 0.034

    def test_source_priority_explicit_over_tolerance(self):
        with pytest.raises(ValueError):
            IndexingParams(22.0, 3.175, error_tolerance=0.03, explicit_passes=40)

    def test_single_pass_plan_allowed(self):
        plan = make_plan(IndexingParams(22.0, 3.175, explicit_passes=1))
        assert plan.num_passes == 1
        assert plan.angle_per_pass == 360.0

    def test_parameter_validation(self):
        with pytest.raises(ValueError):
            IndexingParams(0.0, 3.175)
        with pytest.raises(ValueError):
            IndexingParams(22.0, -1.0)
        with pytest.raises(ValueError):
            IndexingParams(22.0, 3.175, overlap=1.5)
        with pytest.raises(ValueError):
            IndexingParams(22.0, 3.175, error_tolerance=-0.1)
        with pytest.raises(ValueError):
            IndexingParams(22.0, 3.175, explicit_passes=0)
        with pytest.raises(ValueError):
            IndexingParams(22.0, 3.175, diameter_basis="midway")

    @given(radii, tools, overlaps)
    def test_closure_and_sagitta_fields(self, stock, tool, overlap):
        assume(stock > 2.0 * tool + 1e-6)
        plan = make_plan(IndexingParams(stock, tool, overlap=overlap))
        assert abs(plan.angle_per_pass * plan.num_passes - 360.0) <= 360.0 * 1e-9
        expected = (stock / 2.0) * (1.0 - math.cos(math.pi / plan.num_passes))
        assert plan.predicted_sagitta == pytest.approx(expected, rel=1e-12)

    def test_default_overlap_constant(self):
        assert DEFAULT_OVERLAP == 0.8
        assert IndexingParams(22.0, 3.175).overlap == 0.8
