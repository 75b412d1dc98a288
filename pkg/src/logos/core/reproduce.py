"""End-to-end run of the Stern-Gerlach spin-1/2 worked example.

Prepares |up x>, valuates it over the x, y and z contexts, expands it in the
y context, samples actualizations and classifies the (up y, down y) pair.
Each step adds pass/fail rows to an ExampleReport; mismatches never raise.
"""

from __future__ import annotations

from collections.abc import Sequence

import numpy as np

from logos.core.hilbert import TOL_NORM, StateVector, density_from_vector
from logos.core.opposition import OppositionKind, classify, is_potential_contradiction, proposition
from logos.core.psa import (
    QuantumSituation,
    context_totals,
    evaluate_psa,
    psa_from_superposition,
    rebase,
    superposition_from,
)
from logos.core.sampler import immanence_check, run_trials
from logos.io.fixtures import load_fixture, load_state
from logos.models import ExampleReport
from logos.utils.config import settings
from logos.utils.logging import get_logger

logger = get_logger(__name__)

FIXTURE = "stern-gerlach"
STATE = "up-x"

# Node ids of the stern-gerlach fixture.
UP_X, DOWN_X, UP_Y, DOWN_Y = 0, 1, 2, 3

# Width of the binomial acceptance band, in standard deviations.
BAND_SIGMAS = 3.0


def _fmt(x: float) -> str:
    return f"{x:.6f}"


def reproduce_examples(
    coefficients: Sequence[complex] | None = None,
    seed: int | None = None,
    trials: int | None = None,
) -> ExampleReport:
    """Run the worked example and report every check against its stated value.

    ``coefficients`` replaces the prepared state by sum_i c_i |y_i>, which is
    how a faulty preparation is injected.
    """
    seed = settings.seed if seed is None else seed
    trials = settings.trials if trials is None else trials
    fixture = load_fixture(FIXTURE)
    g = fixture.graph
    x_ctx, y_ctx, _ = fixture.contexts

    if coefficients is None:
        rho, _ = load_state(STATE)
    else:
        y_vectors = [g.nodes[i].vector().entries for i in y_ctx.sorted_ids()]
        v = sum(c * a for c, a in zip(coefficients, y_vectors))
        rho = density_from_vector(StateVector(np.asarray(v)))

    report = ExampleReport(title=f"{fixture.name}: {fixture.source}", seed=seed, trials=trials)

    # Intensive valuation
    psa = evaluate_psa(rho, g)
    for name, node, expected in (
        ("potentia up x", UP_X, 1.0),
        ("potentia down x", DOWN_X, 0.0),
        ("potentia up y", UP_Y, 0.5),
        ("potentia down y", DOWN_Y, 0.5),
    ):
        observed = psa.values[node]
        report.add(name, _fmt(expected), _fmt(observed), abs(observed - expected) <= TOL_NORM)

    worst = max(abs(total - 1.0) for total in context_totals(psa, g).values())
    report.add(
        "context normalization",
        "1 per context",
        f"max deviation {worst:.2e}",
        worst <= g.dim * TOL_NORM,
    )

    # Superposition over the y context
    qs = superposition_from(rho, y_ctx, g)
    for name, node in (("|c| up y", UP_Y), ("|c| down y", DOWN_Y)):
        modulus = abs(qs.coefficients[node])
        target = 1 / np.sqrt(2)
        report.add(name, _fmt(target), _fmt(modulus), abs(modulus - target) <= TOL_NORM)

    rebuilt = psa_from_superposition(qs, g)
    agrees = rebuilt.agrees_with(psa)
    report.add("PSA from superposition", "agrees", "agrees" if agrees else "differs", agrees)

    in_x = rebase(qs, x_ctx, g)
    up_x = abs(in_x.coefficients[UP_X]) ** 2
    report.add("rebase to x context", _fmt(1.0), _fmt(up_x), abs(up_x - 1.0) <= TOL_NORM)

    # Actualizations
    _report_sampling(report, qs, trials, seed)

    # Opposition of the y outcomes
    a, b = proposition(UP_Y, g, psa), proposition(DOWN_Y, g, psa)
    kind = classify(a, b, g).kind
    expected_kind = OppositionKind.CONTRADICTORY
    report.add("up y / down y", expected_kind.value, kind.value, kind is expected_kind)
    if kind is expected_kind:
        potential = is_potential_contradiction(a, b, psa, g)
        report.add("potential contradiction", "True", str(potential), potential)

    if report.passed:
        logger.info("worked example: %d checks passed", len(report.rows))
    else:
        logger.warning(
            "worked example: %d of %d checks failed", len(report.failures), len(report.rows)
        )
    return report


def _report_sampling(
    report: ExampleReport, qs: QuantumSituation, trials: int, seed: int
) -> None:
    """Frequency band, exclusivity and immanence rows for a two-outcome situation."""
    log = run_trials(qs, trials, seed)
    sigma = np.sqrt(0.25 / trials)
    freq = log.frequencies()[UP_Y]
    report.add(
        "frequency up y",
        f"0.5 +/- {BAND_SIGMAS * sigma:.5f}",
        f"{freq:.5f}",
        abs(freq - 0.5) <= BAND_SIGMAS * sigma,
    )

    violations = sum(1 for o in log.outcomes if o not in (UP_Y, DOWN_Y))
    violations += abs(sum(log.counts.values()) - log.trials)
    report.add(
        "one actualization per trial", "0 violations", f"{violations} violations", violations == 0
    )

    intact = immanence_check(qs, log)
    report.add("sampling leaves the situation intact", "True", str(intact), intact)
