"""Acceptance gate: the fourteen criteria at desk scale, one line each.

Runs every verification suite once (session-scoped) at the default
configuration and asserts each criterion at its pinned tolerance.  Run
with ``pytest -s tests/test_acceptance.py`` to see one pass/fail line per
criterion.
"""

import pytest

from axbkit.config import RunConfig
from axbkit.suites import SUITES

#: criterion id -> (suite, check-id prefix, description)
CRITERIA = {
    "AC1": ("group", "AC1", "group algebra defects < 1e-12"),
    "AC2": ("partition", "AC2", "partition telescoping < 1e-12"),
    "AC3": ("partition", "AC3", "energy identity < 1e-10 (matrix backend)"),
    "AC4": ("spectral", "AC4", "kernel eigenrelation residual < 1e-4 at n=1024"),
    "AC5": ("spectral", "AC5", "heat multiplier two-oracle agreement < 1e-3"),
    "AC6": ("paleywiener", "AC6", "Bernstein ratio <= 1 + 1e-8"),
    "AC7": ("paleywiener", "AC7", "Riesz-Boas errors decreasing, err(128) < 1e-2"),
    "AC8": ("smoothing", "AC8", "commutation residual < 1e-8 for m in {1,2,3}"),
    "AC9": ("smoothing", "AC9", "Steklov closed forms < 1e-10; H_r(s) order >= 1"),
    "AC10": ("kfunctional", "AC10", "K sandwich: C < 10, C' < 100, spectral in band"),
    "AC11": ("besov", "AC11", "Besov realizations ratio < 50, drift < 20%"),
    "AC12": ("jackson", "AC12", "Jackson constant < 100; slope <= -r + 0.25"),
    "AC13": ("halfplane", "AC13", "isometries < 1e-10; Laplacians >= -1e-8; ratios finite"),
    "AC14": ("determinism", "AC14", "fixed seed gives byte-identical reports"),
}


@pytest.fixture(scope="session")
def suite_results(tmp_path_factory):
    out = str(tmp_path_factory.mktemp("acceptance_reports"))
    cfg = RunConfig(out_dir=out)
    needed = sorted({suite for suite, _, _ in CRITERIA.values()})
    return {name: SUITES[name](cfg) for name in needed}


@pytest.mark.parametrize("cid", sorted(CRITERIA, key=lambda c: int(c[2:])))
def test_criterion(cid, suite_results):
    suite, prefix, description = CRITERIA[cid]
    checks = [c for c in suite_results[suite]["checks"] if c["id"].startswith(prefix)]
    assert checks, f"no checks found for {cid}"
    passed = all(c["passed"] for c in checks)
    detail = "; ".join(
        f"{c['id']}={c['value']:.3g} (tol {c['threshold']:.3g})" for c in checks
    )
    print(f"{cid} {'PASS' if passed else 'FAIL'}: {description} [{detail}]")
    for c in checks:
        assert c["passed"], f"{cid}/{c['id']}: value {c['value']} vs threshold {c['threshold']}"


def test_full_suite_summary(suite_results):
    bad = [name for name, payload in suite_results.items() if not payload["all_passed"]]
    print(f"suites run: {sorted(suite_results)}; failing: {bad or 'none'}")
    assert not bad
