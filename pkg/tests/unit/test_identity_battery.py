import pytest

from um2witt.errors import (
    BudgetExceededError,
    ConfigurationError,
    DimensionMismatchError,
    IdentityFailedError,
    IrregularValueError,
)
from um2witt.QuotientRing import sphere_ring
from um2witt.verification.identity_battery import (
    IDENTITIES,
    check_basepoint_witness,
    check_certificate_change,
    check_f_membership,
    check_composite_formula,
    results_frame,
    run_identity,
    run_identity_battery,
)


def test_battery_passes():
    results = run_identity_battery()
    assert [result.name for result in results] == list(IDENTITIES)
    failed = [(result.name, result.detail) for result in results if not result.passed]
    assert failed == []


def test_battery_subset_keeps_the_requested_order():
    results = run_identity_battery(["hopf_norm", "f_membership"])
    assert [result.name for result in results] == ["hopf_norm", "f_membership"]


def test_battery_rejects_unknown_names():
    with pytest.raises(ConfigurationError, match="hopf_degree"):
        run_identity_battery(["hopf_degree"])


def test_f_membership_cofactor():
    assert check_f_membership() == (
        "x1y1 + x2y2 - z(1 - z) = (a1*b1 + a2*b2) * (sum a_i b_i - 1)"
    )


def test_composite_formula_detail():
    detail = check_composite_formula()
    assert detail.startswith("2*x1*x3 - 2*x2*x4, 2*x2*x3 + 2*x1*x4, ")


def test_basepoint_witness_over_the_sphere():
    assert check_basepoint_witness(sphere_ring(4)) == "E^T V(e1) E = psi2 + psi2"


def test_certificate_change():
    assert check_certificate_change().startswith("E first row (1, ")


def test_run_identity_reports_failures():
    def broken():
        raise IdentityFailedError("1 does not reduce to 0")

    result = run_identity("broken", broken)
    assert not result.passed
    assert result.detail == "1 does not reduce to 0"
    assert result.seconds >= 0


@pytest.mark.parametrize(
    "error",
    [BudgetExceededError(10), IrregularValueError("Value (0, 0, -1) is not attained")],
)
def test_run_identity_records_budget_and_realization_errors(error):
    def interrupted():
        raise error

    result = run_identity("interrupted", interrupted)
    assert not result.passed
    assert result.detail == str(error)


def test_run_identity_lets_input_errors_through():
    def misuse():
        raise DimensionMismatchError("wrong size")

    with pytest.raises(DimensionMismatchError):
        run_identity("misuse", misuse)


def test_results_frame():
    frame = results_frame([run_identity("hopf_norm", IDENTITIES["hopf_norm"])])
    assert list(frame.columns) == ["name", "passed", "detail", "seconds"]
    assert bool(frame.loc[0, "passed"])
