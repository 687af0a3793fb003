"""Identity verifiers and the sweep driver."""

from fractions import Fraction

import pytest

from qgen.genocchi import WeightParams
from qgen.identities import (
    SweepConfig,
    sweep,
    unresolved_failures,
    verify_bernstein_double,
    verify_bernstein_multi,
    verify_bernstein_single,
    verify_integral_reflect,
    verify_integral_shift,
    verify_shift2,
    verify_symmetry,
)
from qgen.qcore import ONE, PoleError, q_power, qbracket
from qgen.records import AS_STATED, CORRECTED, VerificationRecord

W = WeightParams

SPOT_POINTS = (Fraction(2), Fraction(3), Fraction(5, 2))


def spot_check(record: VerificationRecord) -> None:
    """Structural verdicts must match plain evaluation at non-pole points."""
    for q0 in SPOT_POINTS:
        try:
            lv = record.lhs.eval_at(q0)
            rv = record.rhs.eval_at(q0)
        except PoleError:
            continue
        structural = record.lhs == record.rhs
        if structural:
            assert lv == rv
        elif lv != rv:
            return  # disagreement confirms FAIL
    # all sampled points agreed; only acceptable when sides are equal
    assert record.lhs == record.rhs or record.status.endswith("FAIL")


class TestSymmetry:
    @pytest.mark.parametrize("alpha", [1, 2, 3])
    @pytest.mark.parametrize("h", [1, 2, 3])
    def test_index_zero_closed_value(self, alpha, h):
        record = verify_symmetry(0, W(alpha, h), x=2)
        assert record.status == "PASS"
        assert record.lhs == q_power(h - 1) * qbracket(2, 1) / (ONE + q_power(h))

    def test_small_case(self):
        assert verify_symmetry(1, W(1, 1), 0).status == "PASS"

    @pytest.mark.parametrize("n", range(6))
    @pytest.mark.parametrize("x", [-2, 0, 3])
    def test_grid_sample(self, n, x):
        record = verify_symmetry(n, W(2, 3), x)
        assert record.status == "PASS"
        spot_check(record)


class TestShift2:
    @pytest.mark.parametrize("alpha", [1, 2, 3])
    @pytest.mark.parametrize("h", [1, 2, 3])
    def test_n_two_value(self, alpha, h):
        record = verify_shift2(2, W(alpha, h))
        assert record.status == "PASS"
        expected = (
            2 * qbracket(2, 1) * (ONE + q_power(alpha) + q_power(alpha + h))
            / ((ONE + q_power(h)) * (ONE + q_power(alpha + h)))
        )
        assert record.lhs == expected

    def test_boundary_probes(self):
        # the identity is stated for n > 1; n = 1 genuinely fails,
        # n = 0 degenerates to 0 = 0
        r1 = verify_shift2(1, W(1, 1))
        assert r1.status == "BOUNDARY-FAIL"
        r0 = verify_shift2(0, W(1, 1))
        assert r0.status == "BOUNDARY-PASS"

    @pytest.mark.parametrize("n", range(2, 11))
    def test_asserted_domain(self, n):
        record = verify_shift2(n, W(3, 2))
        assert record.status == "PASS"
        spot_check(record)


class TestIntegralShift:
    @pytest.mark.parametrize("n", range(7))
    @pytest.mark.parametrize("alpha,h", [(1, 1), (2, 1), (1, 3), (3, 2)])
    def test_grid(self, n, alpha, h):
        record = verify_integral_shift(n, W(alpha, h))
        assert record.status == "PASS"

    def test_index_zero_value(self):
        # both sides reduce to q^(h-1) [2]_q / (1 + q^h)
        record = verify_integral_shift(0, W(2, 3))
        assert record.lhs == q_power(2) * qbracket(2, 1) / (ONE + q_power(3))


class TestIntegralReflect:
    @pytest.mark.parametrize("alpha", [1, 2, 3])
    @pytest.mark.parametrize("h", [1, 2, 3])
    def test_n_one_value(self, alpha, h):
        record = verify_integral_reflect(1, W(alpha, h))
        assert record.status == "PASS"
        expected = (
            qbracket(2, 1) * (ONE + q_power(h) + q_power(alpha + h))
            / ((ONE + q_power(h)) * (ONE + q_power(alpha + h)))
        )
        assert record.lhs == expected

    def test_boundary_failure_at_zero(self):
        # recorded (not asserted): fixes the implicit domain n >= 1
        record = verify_integral_reflect(0, W(1, 1))
        assert record.status == "BOUNDARY-FAIL"
        h = 1
        assert record.lhs == qbracket(2, 1) / (ONE + q_power(h))
        assert record.rhs == qbracket(2, 1) * (ONE + q_power(h) + q_power(2 * h)) / (
            ONE + q_power(h)
        )

    @pytest.mark.parametrize("n", range(1, 11))
    def test_asserted_domain(self, n):
        record = verify_integral_reflect(n, W(2, 2))
        assert record.status == "PASS"
        spot_check(record)


class TestBernsteinSingle:
    @pytest.mark.parametrize("alpha", [1, 2])
    @pytest.mark.parametrize("h", [1, 2])
    def test_first_case_value(self, alpha, h):
        record = verify_bernstein_single(1, 0, W(alpha, h))
        assert record.status == "PASS"
        expected = (
            qbracket(2, 1) * (ONE + q_power(h) + q_power(alpha + h))
            / ((ONE + q_power(h)) * (ONE + q_power(alpha + h)))
        )
        assert record.lhs == expected

    def test_nonzero_k(self):
        record = verify_bernstein_single(2, 1, W(1, 1))
        assert record.status == "PASS"

    @pytest.mark.parametrize("n", range(1, 9))
    def test_grid(self, n):
        for k in range(n):
            record = verify_bernstein_single(n, k, W(2, 2))
            assert record.status == "PASS", (n, k)

    def test_precondition(self):
        with pytest.raises(ValueError):
            verify_bernstein_single(2, 2, W(1, 1))
        with pytest.raises(ValueError):
            verify_bernstein_single(2, -1, W(1, 1))


class TestBernsteinDoubleMulti:
    def test_s2_consistency(self):
        a = verify_bernstein_double(1, 1, 0, W(1, 1))
        b = verify_bernstein_multi([1, 1], 0, W(1, 1))
        assert (a.lhs, a.rhs, a.status, a.variant) == (b.lhs, b.rhs, b.status, b.variant)

    def test_double_reduces_to_single_shape(self):
        # the (1,1,0) double case carries the same sides as single (2,0)
        a = verify_bernstein_double(1, 1, 0, W(2, 1))
        b = verify_bernstein_single(2, 0, W(2, 1))
        assert (a.lhs, a.rhs) == (b.lhs, b.rhs)

    @pytest.mark.parametrize("n1", range(1, 5))
    @pytest.mark.parametrize("n2", range(1, 5))
    def test_double_grid(self, n1, n2):
        for k in range((n1 + n2 - 1) // 2 + 1):
            record = verify_bernstein_double(n1, n2, k, W(1, 2))
            assert record.status == "PASS", (n1, n2, k)

    def test_multi_sample_points(self):
        assert verify_bernstein_multi([2, 1, 1], 0, W(1, 1)).status == "PASS"
        assert verify_bernstein_multi([2, 2, 1], 1, W(2, 1)).status == "PASS"

    def test_corrected_variant_is_prefactored(self):
        # corrected = as-stated scaled by prod C(n_i, k); with k <= min(n_i)
        # both pass, and the corrected sides carry the binomial product
        rec = verify_bernstein_multi([3, 2], 1, W(1, 1))
        cor = verify_bernstein_multi([3, 2], 1, W(1, 1), variant=CORRECTED)
        assert rec.status == "PASS" and cor.status == "PASS"
        assert cor.variant == CORRECTED
        assert cor.lhs == 6 * rec.lhs  # C(3,1) C(2,1) = 6

    def test_corrected_variant_degenerate_prefactor(self):
        # k exceeding one of the degrees zeroes the binomial product, so
        # the prefactored (integral-level) equality degenerates to 0 = 0
        cor = verify_bernstein_multi([4, 1], 2, W(1, 1), variant=CORRECTED)
        assert cor.status == "PASS"
        assert cor.lhs.is_zero and cor.rhs.is_zero

    def test_preconditions(self):
        with pytest.raises(ValueError):
            verify_bernstein_multi([2], 0, W(1, 1))
        with pytest.raises(ValueError):
            verify_bernstein_multi([1, 1], 1, W(1, 1))
        with pytest.raises(ValueError):
            verify_bernstein_multi([1, 1], 0, W(1, 1), variant="patched")


SMALL_CONFIG = SweepConfig(
    n_max=3, scalar_n_max=3, alpha_max=2, h_max=2, x_min=0, x_max=1,
    single_n_max=3, pair_n_max=2, multi_n_max=2, s_max=2,
    product_alpha_max=1, product_h_max=1,
)


@pytest.fixture(scope="module")
def small_report():
    return sweep(SMALL_CONFIG)


class TestSweep:
    def test_deterministic(self, small_report):
        again = sweep(SMALL_CONFIG)
        assert again.records == small_report.records
        assert again.summary == small_report.summary
        assert again.boundaries == small_report.boundaries

    def test_no_unresolved_failures(self, small_report):
        assert unresolved_failures(small_report) == []

    def test_summary_counts_match_records(self, small_report):
        total = sum(counts["total"] for counts in small_report.summary.values())
        assert total == len(small_report.records)

    def test_boundary_detection(self, small_report):
        flips = {(b["theorem"], b["flip"]) for b in small_report.boundaries}
        assert ("integral-reflect", "FAIL->PASS") in flips
        assert ("shift2", "FAIL->PASS") in flips

    def test_empty_config(self):
        report = sweep(SweepConfig.empty())
        assert report.records == ()
        assert report.summary == {}

    def test_single_point_config(self):
        config = SweepConfig(
            n_min=1, n_max=1, scalar_n_min=1, scalar_n_max=1,
            alpha_min=1, alpha_max=1, h_min=1, h_max=1,
            x_min=0, x_max=0, single_n_max=1,
            pair_n_min=1, pair_n_max=1, multi_n_min=1, multi_n_max=1,
            s_min=2, s_max=2, product_alpha_max=1, product_h_max=1,
        )
        report = sweep(config)
        per_theorem = {}
        for rec in report.records:
            per_theorem[rec.theorem] = per_theorem.get(rec.theorem, 0) + 1
        assert per_theorem == {
            "symmetry": 1,
            "shift2": 1,
            "integral-shift": 1,
            "integral-reflect": 1,
            "bernstein-single": 1,
            "bernstein-double": 1,
            "bernstein-multi": 1,
        }

    def test_only_filter(self):
        config = SweepConfig(
            n_max=2, scalar_n_max=2, alpha_max=1, h_max=1, x_min=0, x_max=0,
            single_n_max=2, pair_n_max=1, multi_n_max=1, s_max=2,
            product_alpha_max=1, product_h_max=1,
        )
        report = sweep(config, only=("shift2",))
        assert {r.theorem for r in report.records} == {"shift2"}
        with pytest.raises(ValueError):
            sweep(config, only=("no-such-theorem",))

    def test_parallel_matches_serial(self, monkeypatch):
        config = SweepConfig(
            n_max=2, scalar_n_max=2, alpha_max=1, h_max=1, x_min=0, x_max=1,
            single_n_max=2, pair_n_max=1, multi_n_max=1, s_max=2,
            product_alpha_max=1, product_h_max=1,
        )
        serial = sweep(config, workers=1)
        parallel = sweep(config, workers=2)
        assert serial.records == parallel.records
        # worker count may also come from the environment
        monkeypatch.setenv("QGEN_WORKERS", "2")
        from_env = sweep(config)
        assert from_env.records == serial.records

    def test_spot_check_consistency(self, small_report):
        for record in small_report.records[::7]:
            spot_check(record)


class TestUnresolvedFailures:
    def test_synthetic_gating(self):
        from qgen.identities import SweepReport
        from qgen.records import compare

        w_params = (("n", 1), ("alpha", 1), ("h", 1))
        failing = compare("demo", w_params, ONE, ONE + q_power(1))
        assert failing.status == "FAIL"
        boundary = compare("demo", (("n", 0),), ONE, q_power(1), boundary=True)
        rescue = compare("demo", w_params, ONE, ONE, variant=CORRECTED)

        # a bare failure gates
        report = SweepReport(records=(failing, boundary))
        assert unresolved_failures(report) == [failing]
        # a passing variant at the same point resolves it
        report = SweepReport(records=(failing, rescue, boundary))
        assert unresolved_failures(report) == []
