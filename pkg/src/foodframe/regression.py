"""OLS with categorical dummy coding, inference, and study runners.

The estimator is plain least squares via QR factorization with
conventional standard errors; two-sided p-values come from the
Student-t distribution (regularized incomplete beta) with n - k degrees
of freedom. Continuous covariates are z-standardized by default so
coefficient magnitudes are comparable across outcomes; pass
``standardize=False`` for raw scale. Clustered (by-group) standard
errors are available as an option and off by default.

``run_study`` wires the canned model specifications used throughout the
analyses: othering and status frames regressed on cuisine region with
length/price/stars/neighborhood controls, the outsider (hi/lo
neighborhood share) variants, the upscale-only subset, and the
synthetic-review specification with cuisine and sentiment only.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np
import pandas as pd
from scipy import stats

from .census import code_hi_lo
from .lexicons import FRAMES, SUBSETS

log = logging.getLogger(__name__)

OTHERING_FRAMES = ("exoticism", "prototypicality", "authenticity")
STATUS_OUTCOMES = ("luxury", "cost", "hygiene", "hygiene_clean", "hygiene_dirty")
REGIONS = ("US", "EUR", "LAT", "AS")
PRICE_LEVELS = (1, 2, 3, 4)
SENTIMENTS = ("very positive", "positive", "neutral", "negative", "very negative")

STAR_THRESHOLDS = ((0.001, "***"), (0.01, "**"), (0.05, "*"))


def significance_stars(p: float) -> str:
    for cut, stars in STAR_THRESHOLDS:
        if p < cut:
            return stars
    return "ns"


@dataclass(frozen=True)
class Categorical:
    name: str
    levels: tuple
    reference: object

    def __post_init__(self):
        if self.reference not in self.levels:
            raise ValueError(f"reference {self.reference!r} not in levels of {self.name!r}")


@dataclass(frozen=True)
class Continuous:
    name: str


@dataclass
class RegressionSpec:
    outcome: str
    covariates: Sequence[Categorical | Continuous]
    sample_filter: Mapping[str, Sequence] | None = None
    standardize: bool = True


@dataclass
class RegressionResult:
    names: list[str]
    beta: np.ndarray
    se: np.ndarray
    t_stats: np.ndarray
    p_values: np.ndarray
    ci95: np.ndarray          # (k, 2) lower/upper
    covariance: np.ndarray    # (k, k)
    n: int
    dof: int
    r_squared: float

    def coef(self, name: str) -> float:
        return float(self.beta[self.names.index(name)])

    def p_value(self, name: str) -> float:
        return float(self.p_values[self.names.index(name)])

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            {
                "term": self.names,
                "estimate": self.beta,
                "se": self.se,
                "t": self.t_stats,
                "p": self.p_values,
                "ci_low": self.ci95[:, 0],
                "ci_high": self.ci95[:, 1],
                "stars": [significance_stars(p) for p in self.p_values],
            }
        )


class RankDeficientError(ValueError):
    def __init__(self, columns: list[str]):
        self.columns = columns
        super().__init__(f"design matrix is rank deficient; collinear columns: {columns}")


def apply_sample_filter(df: pd.DataFrame, sample_filter) -> pd.DataFrame:
    if not sample_filter:
        return df
    mask = pd.Series(True, index=df.index)
    for column, allowed in sample_filter.items():
        mask &= df[column].isin(list(allowed))
    return df[mask]


def build_design_matrix(
    rows: pd.DataFrame, spec: RegressionSpec
) -> tuple[np.ndarray, np.ndarray, list[str]]:
    """Expand the spec into (X, y, column names).

    The intercept column comes first; categorical terms contribute one
    indicator column per non-reference level in declared order. Levels
    absent from the sample are dropped with a warning.
    """
    df = apply_sample_filter(rows, spec.sample_filter)
    if len(df) == 0:
        raise ValueError("empty sample after filtering")

    columns = [np.ones(len(df))]
    names = ["intercept"]
    for term in spec.covariates:
        if isinstance(term, Continuous):
            x = df[term.name].to_numpy(dtype=float)
            if spec.standardize:
                sd = x.std(ddof=0)
                x = (x - x.mean()) / sd if sd > 0 else x - x.mean()
            columns.append(x)
            names.append(term.name)
        else:
            values = df[term.name]
            present = set(values.unique())
            for level in term.levels:
                if level == term.reference:
                    continue
                if level not in present:
                    log.warning(
                        "%s: level %r absent from sample, column dropped", term.name, level
                    )
                    continue
                columns.append((values == level).to_numpy(dtype=float))
                names.append(f"{term.name}[{level}]")
    X = np.column_stack(columns)
    y = df[spec.outcome].to_numpy(dtype=float)
    return X, y, names


def fit_ols(
    X: np.ndarray,
    y: np.ndarray,
    names: list[str] | None = None,
    cluster: np.ndarray | None = None,
) -> RegressionResult:
    """Least squares fit with conventional (or clustered) inference.

    Solves via QR; raises RankDeficientError naming the dependent
    columns when X is not full column rank, and requires n > k.
    """
    n, k = X.shape
    if names is None:
        names = [f"x{i}" for i in range(k)]
    if n <= k:
        raise ValueError(f"n={n} rows cannot identify {k} parameters")

    Q, R = np.linalg.qr(X)
    diag = np.abs(np.diag(R))
    scale = max(diag.max(), 1.0)
    bad = [names[i] for i in range(k) if diag[i] < 1e-10 * scale]
    if bad:
        raise RankDeficientError(bad)

    beta = np.linalg.solve(R, Q.T @ y)
    resid = y - X @ beta
    rss = float(resid @ resid)
    dof = n - k
    sigma2 = rss / dof

    r_inv = np.linalg.solve(R, np.eye(k))
    xtx_inv = r_inv @ r_inv.T
    if cluster is None:
        cov = sigma2 * xtx_inv
    else:
        # CR1 sandwich: clusters of rows share one score contribution
        meat = np.zeros((k, k))
        groups = pd.Series(cluster)
        for _, idx in groups.groupby(groups).groups.items():
            xg = X[idx]
            eg = resid[idx]
            s = xg.T @ eg
            meat += np.outer(s, s)
        g = groups.nunique()
        adjust = (g / (g - 1)) * ((n - 1) / dof) if g > 1 else 1.0
        cov = adjust * xtx_inv @ meat @ xtx_inv

    se = np.sqrt(np.diag(cov))
    with np.errstate(divide="ignore", invalid="ignore"):
        t_stats = np.where(se > 0, beta / se, np.inf * np.sign(beta))
    p_values = 2.0 * stats.t.sf(np.abs(t_stats), dof)
    t_crit = stats.t.ppf(0.975, dof)
    ci95 = np.column_stack([beta - t_crit * se, beta + t_crit * se])

    tss = float(((y - y.mean()) ** 2).sum())
    r_squared = 1.0 - rss / tss if tss > 0 else 0.0
    return RegressionResult(
        names=list(names),
        beta=beta,
        se=se,
        t_stats=t_stats,
        p_values=p_values,
        ci95=ci95,
        covariance=cov,
        n=n,
        dof=dof,
        r_squared=r_squared,
    )


def wald_compare(result: RegressionResult, i: int, j: int) -> tuple[float, float]:
    """Normal-approximation Wald test of beta_i == beta_j within one model."""
    if i == j:
        raise ValueError("cannot compare a coefficient with itself")
    k = len(result.beta)
    if not (0 <= i < k and 0 <= j < k):
        raise IndexError("coefficient index out of range")
    var = (
        result.covariance[i, i]
        + result.covariance[j, j]
        - 2.0 * result.covariance[i, j]
    )
    if var <= 0:
        raise ValueError("nonpositive variance of the coefficient difference")
    z = float((result.beta[i] - result.beta[j]) / math.sqrt(var))
    p = 2.0 * float(stats.norm.sf(abs(z)))
    return z, p


def vif(X: np.ndarray) -> np.ndarray:
    """Variance inflation factors for the non-intercept columns of X.

    Column 0 is taken to be the intercept. Each VIF_k = 1/(1 - R_k^2)
    from regressing column k on all other columns; perfect collinearity
    reports +inf.
    """
    n, k = X.shape
    if k < 3:
        raise ValueError("VIF needs at least 2 non-intercept columns")
    out = np.empty(k - 1)
    for idx, col in enumerate(range(1, k)):
        target = X[:, col]
        others = np.delete(X, col, axis=1)
        coef, _, _, _ = np.linalg.lstsq(others, target, rcond=None)
        resid = target - others @ coef
        tss = float(((target - target.mean()) ** 2).sum())
        if tss <= 0:
            out[idx] = math.inf
            continue
        r2 = 1.0 - float(resid @ resid) / tss
        out[idx] = math.inf if r2 >= 1.0 - 1e-12 else 1.0 / (1.0 - r2)
    return out


def demean_within(df: pd.DataFrame, group: str, columns: Sequence[str]) -> pd.DataFrame:
    """Subtract group means from the given columns (an approximation to
    per-group random effects, provided as plumbing only)."""
    out = df.copy()
    for col in columns:
        out[col] = df[col] - df.groupby(group)[col].transform("mean")
    return out


# ---------------------------------------------------------------------------
# Canned study specifications
# ---------------------------------------------------------------------------

STUDIES = ("study1a", "study1b", "study2", "glass_ceiling", "study3")


@dataclass
class StudyConfig:
    min_n: int = 30
    standardize: bool = True
    cluster_by: str | None = None
    vif_limit: float = 2.0
    strict_vif: bool = False


@dataclass
class StudyModel:
    study: str
    outcome: str
    subsample: str
    result: RegressionResult | None
    max_vif: float | None = None
    skip_reason: str | None = None


def _controls(price: bool = True) -> list[Categorical | Continuous]:
    terms: list[Categorical | Continuous] = [Continuous("length")]
    if price:
        terms.append(Categorical("price_tier", PRICE_LEVELS, 2))
    terms += [Continuous("stars"), Continuous("income"), Continuous("diversity")]
    return terms


def _region_term(reference: str) -> Categorical:
    return Categorical("region", REGIONS, reference)


def _fit_spec(
    df: pd.DataFrame,
    spec: RegressionSpec,
    study: str,
    subsample: str,
    config: StudyConfig,
) -> StudyModel:
    rows = apply_sample_filter(df, spec.sample_filter)
    if len(rows) < config.min_n:
        log.warning(
            "%s/%s (%s): n=%d below minimum %d, model skipped",
            study, spec.outcome, subsample, len(rows), config.min_n,
        )
        return StudyModel(study, spec.outcome, subsample, None,
                          skip_reason=f"n={len(rows)} < min_n={config.min_n}")
    X, y, names = build_design_matrix(rows, spec)
    cluster = rows[config.cluster_by].to_numpy() if config.cluster_by else None
    try:
        result = fit_ols(X, y, names, cluster=cluster)
    except RankDeficientError as exc:
        # degenerate subsample (too few distinct profiles); skip, don't abort
        log.warning("%s/%s (%s): %s, model skipped", study, spec.outcome, subsample, exc)
        return StudyModel(study, spec.outcome, subsample, None, skip_reason=str(exc))
    max_vif = None
    if X.shape[1] >= 3:
        vifs = vif(X)
        max_vif = float(np.max(vifs))
        if max_vif >= config.vif_limit:
            msg = f"{study}/{spec.outcome} ({subsample}): max VIF {max_vif:.2f} >= {config.vif_limit}"
            if config.strict_vif:
                raise ValueError(msg)
            log.warning(msg)
    return StudyModel(study, spec.outcome, subsample, result, max_vif=max_vif)


def run_study(
    spec_name: str,
    corpus: pd.DataFrame,
    config: StudyConfig | None = None,
) -> list[StudyModel]:
    """Execute one canned study over the scored, merged review table.

    Expected columns: one per frame/subset score, plus region,
    price_tier, stars, length, income, diversity; pct_asian and
    pct_hispanic for study1b; sentiment for study3.
    """
    config = config or StudyConfig()
    std = config.standardize
    models: list[StudyModel] = []

    if spec_name == "study1a":
        for frame in OTHERING_FRAMES:
            spec = RegressionSpec(frame, [_region_term("US")] + _controls(), standardize=std)
            models.append(_fit_spec(corpus, spec, spec_name, "all", config))

    elif spec_name == "study1b":
        for region, pct_col in (("AS", "pct_asian"), ("LAT", "pct_hispanic")):
            sub = corpus[corpus["region"] == region].copy()
            label = f"{region}/{pct_col}"
            if len(sub) == 0:
                models.extend(
                    StudyModel(spec_name, frame, label, None, skip_reason="empty subsample")
                    for frame in OTHERING_FRAMES
                )
                continue
            codes = code_hi_lo(dict(zip(sub.index, sub[pct_col])))
            sub["pop_share"] = [codes[i].value for i in sub.index]
            for frame in OTHERING_FRAMES:
                spec = RegressionSpec(
                    frame,
                    [Categorical("pop_share", ("hi", "lo"), "hi")] + _controls(),
                    standardize=std,
                )
                models.append(_fit_spec(sub, spec, spec_name, label, config))

    elif spec_name == "study2":
        for outcome in STATUS_OUTCOMES:
            spec = RegressionSpec(outcome, [_region_term("EUR")] + _controls(), standardize=std)
            models.append(_fit_spec(corpus, spec, spec_name, "all", config))

    elif spec_name == "glass_ceiling":
        for outcome in STATUS_OUTCOMES:
            spec = RegressionSpec(
                outcome,
                [_region_term("EUR")] + _controls(price=False),
                sample_filter={"price_tier": (3, 4)},
                standardize=std,
            )
            models.append(_fit_spec(corpus, spec, spec_name, "price 3-4", config))

    elif spec_name == "study3":
        outcomes = list(FRAMES) + list(SUBSETS)
        for outcome in outcomes:
            spec = RegressionSpec(
                outcome,
                [_region_term("US"), Categorical("sentiment", SENTIMENTS, "neutral")],
                standardize=std,
            )
            models.append(_fit_spec(corpus, spec, spec_name, "synthetic", config))

    else:
        raise ValueError(f"unknown study {spec_name!r}; expected one of {STUDIES}")
    return models
