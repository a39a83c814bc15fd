"""Two-sample significance testing for the confound audit.

Thin wrapper over scipy's unequal-variance t-test that pins down the
degenerate cases the audit can hit on small or constant samples, so the
caller always gets a defined answer.
"""

from __future__ import annotations

import math
import statistics

from scipy import stats as _scipy_stats


def welch_t_test(
    a: list[float], b: list[float]
) -> tuple[float | None, float | None]:
    """Welch's t statistic and two-sided p-value for independent samples.

    Conventions: fewer than two observations on either side yields
    (None, None); two zero-variance samples yield (0.0, 1.0) when their
    means agree and (inf, 0.0) when they differ.
    """
    if len(a) < 2 or len(b) < 2:
        return None, None
    var_a = statistics.variance(a)
    var_b = statistics.variance(b)
    if var_a == 0.0 and var_b == 0.0:
        if statistics.fmean(a) == statistics.fmean(b):
            return 0.0, 1.0
        return math.inf, 0.0
    t, p = _scipy_stats.ttest_ind(a, b, equal_var=False)
    return float(t), float(p)
