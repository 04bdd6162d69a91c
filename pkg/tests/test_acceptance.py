"""Acceptance gate: every criterion at its stated case count, exact equality.

Each test prints one PASS line (visible with pytest -s); the pytest -v
test names serve as the per-criterion report otherwise. Arithmetic is
rational throughout, so every comparison is ==, tolerance zero.
"""

from fractions import Fraction

import pytest

from finmeas import Dist, GenConfig, Step, convolve, expectation, interval, run_law, total
from finmeas.line import convolution_power

ACC_SEED = 42


def _run(names, cases):
    cfg = GenConfig(seed=ACC_SEED, cases=cases)
    reports = []
    for name in names:
        report = run_law(name, cfg)
        assert report.passed, f"{name} failed: {report.counterexample}"
        assert report.cases_run == cases
        reports.append(report)
    return reports


def _announce(number, title):
    print(f"ACCEPTANCE {number:>3} {title}: PASS")


def test_c01_fubini_exact_on_1000_pairs():
    _run(["fubini"], 1000)
    _announce("1", "tensor = tensor_iterated on 1000 random pairs")


def test_c02_pairing_laws_500_cases_each():
    _run(
        ["pairing_unit", "pairing_extranatural", "total_as_pairing",
         "pairing_bilinear"],
        500,
    )
    _announce("2", "pairing unit/extranaturality/total/bilinearity")


def test_c03_reweighting_calculus_500_cases_each():
    _run(["switch", "action_total", "action_monoid", "frobenius"], 500)
    _announce("3", "switch identity, action total, monoid action, Frobenius")


def test_c04_enough_test_functions_500_cases():
    _run(["semantics_monic"], 500)
    _announce("4", "semantics followed by evaluation at the unit is identity")


def test_c05_moments_500_cases_each():
    _run(
        ["expectation_unit", "expectation_convolution", "affine_expectation",
         "cg_affine"],
        500,
    )
    _announce("5", "expectation units, convolution rule, affine equivariance")


def test_c06_two_dice_oracle():
    from itertools import product

    d6 = Dist({Fraction(i): Fraction(1, 6) for i in range(1, 7)})
    counts = {}
    for i, j in product(range(1, 7), repeat=2):
        counts[i + j] = counts.get(i + j, 0) + 1
    oracle = Dist({Fraction(s): Fraction(n, 36) for s, n in counts.items()})
    two = convolve(d6, d6)
    assert two == oracle
    assert two[Fraction(7)] == Fraction(6, 36)
    _announce("6", "two-dice convolution matches 36-pair enumeration")


def test_c07_difference_calculus_500_cases_each():
    _run(
        ["derivative_total", "derivative_expectation", "derivative_switch",
         "derivative_convolution", "derivative_translation"],
        500,
    )
    _announce("7", "derivative total/expectation/switch/convolution/translation")


def test_c08_integration_round_trips_and_intervals():
    _run(["integration", "interval_laws"], 500)
    step = Step(Fraction(1, 4))
    comb = interval(Fraction(-1, 2), Fraction(1, 2), step)
    for k in range(6):
        assert total(convolution_power(comb, k)) == 1
    _announce("8", "primitive/derivative inverses, interval laws, power totals")


@pytest.mark.xfail(
    strict=True,
    reason="unattainable as stated: the interval is forced to be the "
    "left-closed comb by its defining equation, so E([-1/2,1/2]) at "
    "step 1/4 is -1/8 (derived via <P',x^2> = <P,2x+d>), and power k has "
    "expectation -k/8, not 0; only the totals are power-invariant",
)
def test_c08b_interval_power_expectations_zero_as_stated():
    step = Step(Fraction(1, 4))
    comb = interval(Fraction(-1, 2), Fraction(1, 2), step)
    for k in range(6):
        assert expectation(convolution_power(comb, k)) == 0


def test_c08c_interval_power_expectations_derived_value():
    # the mathematically forced expectations, asserted so regressions in
    # the calculus cannot hide behind the xfail above
    step = Step(Fraction(1, 4))
    comb = interval(Fraction(-1, 2), Fraction(1, 2), step)
    assert expectation(comb) == Fraction(-1, 8)
    for k in range(6):
        assert expectation(convolution_power(comb, k)) == Fraction(-k, 8)
    _announce("8c", "interval power expectations equal the derived -k/8")


def test_c09_probability_500_cases_each():
    _run(["conditioning", "marginals_tensor", "rv_sum"], 500)
    _announce("9", "conditioning identity, marginals of tensors, E(X+Y)")


def test_c10_structure_500_cases_each():
    _run(
        ["biproduct", "additivity", "linearity_closure", "scale_equivariance"],
        500,
    )
    _announce("10", "biproducts, additivity, linearity closure, equivariance")


def test_c11_leibniz_residual_500_cases():
    (report,) = _run(["leibniz_residual"], 500)
    # the report output must document that the residual replaces the
    # nilpotent-step product rule
    assert "nilpotent" in report.statement
    _announce("11", "residual closed form on point masses (product rule "
              "replacement documented in the report)")


def test_c12_boolean_rig_genericity_200_cases():
    _run(["bool_monad_functor", "bool_fubini"], 200)
    _announce("12", "monad/functor laws and Fubini over the boolean rig")
