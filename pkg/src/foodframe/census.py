"""Neighborhood covariates: census join, diversity index, hi/lo coding.

The census extract is a flat CSV keyed by zipcode with a median income
column and one population-count column per race group:

    zipcode,median_income,count_white,count_black,count_asian,
    count_hispanic,count_native,count_pacific,count_other

Column names are part of the file contract. Businesses with no census
match are flagged and excluded from regression samples rather than
failing the run.
"""

from __future__ import annotations

import csv
from pathlib import Path
from typing import Mapping, NamedTuple

RACE_PREFIX = "count_"


def simpson_diversity(counts: Mapping[str, float]) -> float:
    """1 - sum(p_i^2) over group shares; 0 for a single group, approaching
    1 for maximally diverse populations."""
    total = float(sum(counts.values()))
    if total <= 0:
        raise ValueError("simpson_diversity needs at least one positive count")
    if any(c < 0 for c in counts.values()):
        raise ValueError("negative group count")
    return 1.0 - sum((c / total) ** 2 for c in counts.values())


class NeighborhoodMeta(NamedTuple):
    zipcode: str
    median_income: float
    race_counts: dict[str, float]
    diversity: float
    pct_asian: float
    pct_hispanic: float


class HiLoCode(NamedTuple):
    value: str        # "hi" or "lo"
    threshold: float  # sample median


class CensusTable:
    def __init__(self, rows: dict[str, NeighborhoodMeta]):
        self._rows = rows

    def __len__(self) -> int:
        return len(self._rows)

    def __contains__(self, zipcode: str) -> bool:
        return zipcode in self._rows

    def get(self, zipcode: str) -> NeighborhoodMeta | None:
        return self._rows.get(zipcode)

    @classmethod
    def read_csv(cls, path: str | Path) -> "CensusTable":
        rows: dict[str, NeighborhoodMeta] = {}
        with open(path, newline="", encoding="utf-8") as fh:
            reader = csv.DictReader(fh)
            fields = reader.fieldnames or []
            if "zipcode" not in fields or "median_income" not in fields:
                raise ValueError("census CSV must have zipcode and median_income columns")
            race_cols = [c for c in fields if c.startswith(RACE_PREFIX)]
            if not race_cols:
                raise ValueError(f"census CSV has no {RACE_PREFIX}* race columns")
            for rec in reader:
                counts = {c[len(RACE_PREFIX):]: float(rec[c]) for c in race_cols}
                total = sum(counts.values())
                rows[rec["zipcode"]] = NeighborhoodMeta(
                    zipcode=rec["zipcode"],
                    median_income=float(rec["median_income"]),
                    race_counts=counts,
                    diversity=simpson_diversity(counts),
                    pct_asian=100.0 * counts.get("asian", 0.0) / total if total else 0.0,
                    pct_hispanic=100.0 * counts.get("hispanic", 0.0) / total if total else 0.0,
                )
        return cls(rows)


def link_neighborhood(business, census: CensusTable) -> NeighborhoodMeta | None:
    """Join a business to its neighborhood record by zipcode.

    Returns None for businesses with no census match; callers flag these
    and drop them from regression samples.
    """
    return census.get(business.zipcode)


def code_hi_lo(pcts: Mapping[str, float]) -> dict[str, HiLoCode]:
    """Median split of per-business percentages over the analysis sample.

    The median is computed over the given sample only; ties at the
    median code as hi, so |hi| >= |lo|.
    """
    if not pcts:
        raise ValueError("code_hi_lo needs a nonempty sample")
    values = sorted(pcts.values())
    n = len(values)
    if n % 2:
        median = float(values[n // 2])
    else:
        median = (values[n // 2 - 1] + values[n // 2]) / 2.0
    return {
        key: HiLoCode("hi" if pct >= median else "lo", median)
        for key, pct in pcts.items()
    }
