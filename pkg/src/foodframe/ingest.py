"""Corpus ingestion: load, validate, and filter businesses and reviews.

Input is the open-dataset NDJSON schema (one JSON object per line).
Businesses keep only single-region restaurants: category tags are
matched against the shipped cuisine->region map, multi-region and
tag-less businesses are dropped, and chains (same name appearing under
at least ``chain_threshold`` distinct business ids), cafes, and fast
food are excluded. Every drop is counted by reason so that
input = retained + sum(drops).
"""

from __future__ import annotations

import json
import logging
import pickle
import re
from collections import Counter
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Iterator, Sequence

import pandas as pd

log = logging.getLogger(__name__)

REGIONS = ("US", "EUR", "LAT", "AS")
IMMIGRANT_REGIONS = ("EUR", "LAT", "AS")


@dataclass(frozen=True)
class Business:
    business_id: str
    name: str
    state: str
    zipcode: str
    latitude: float
    longitude: float
    cuisine_tags: tuple[str, ...]
    region: str
    price_tier: int
    mean_stars: float
    review_count: int


@dataclass(frozen=True)
class Review:
    review_id: str
    business_id: str
    user_id: str
    stars: int
    text: str
    token_count: int


@dataclass(frozen=True)
class CuisineRegionMap:
    entries: dict[str, str]
    excluded_tags: frozenset[str]

    @classmethod
    def load(cls, path: str | Path | None = None) -> "CuisineRegionMap":
        if path is None:
            path = resources.files("foodframe.data") / "cuisine_regions.json"
        obj = json.loads(Path(path).read_text(encoding="utf-8"))
        return cls(
            entries={k.lower(): v for k, v in obj["entries"].items()},
            excluded_tags=frozenset(t.lower() for t in obj["excluded_tags"]),
        )


@dataclass
class FilterConfig:
    chain_threshold: int = 5
    excluded_category_tags: frozenset[str] = frozenset({"cafes", "fast food", "coffee & tea"})
    required_tag: str = "restaurants"
    drop_cajun_creole: bool = False


class BusinessTable:
    def __init__(self, businesses: Sequence[Business], drop_report: dict[str, int]):
        self.businesses = list(businesses)
        self.by_id = {b.business_id: b for b in self.businesses}
        self.drop_report = dict(drop_report)

    def __len__(self) -> int:
        return len(self.businesses)

    def __iter__(self) -> Iterator[Business]:
        return iter(self.businesses)

    def region_counts(self) -> Counter:
        return Counter(b.region for b in self.businesses)

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            {
                "business_id": [b.business_id for b in self.businesses],
                "name": [b.name for b in self.businesses],
                "state": [b.state for b in self.businesses],
                "zipcode": [b.zipcode for b in self.businesses],
                "latitude": [b.latitude for b in self.businesses],
                "longitude": [b.longitude for b in self.businesses],
                "cuisine_tags": [";".join(b.cuisine_tags) for b in self.businesses],
                "region": [b.region for b in self.businesses],
                "price_tier": [b.price_tier for b in self.businesses],
                "mean_stars": [b.mean_stars for b in self.businesses],
                "review_count": [b.review_count for b in self.businesses],
            }
        )

    @classmethod
    def from_frame(cls, df: pd.DataFrame) -> "BusinessTable":
        businesses = [
            Business(
                business_id=str(r.business_id),
                name=str(r.name),
                state=str(r.state),
                zipcode=str(r.zipcode).zfill(5),
                latitude=float(r.latitude),
                longitude=float(r.longitude),
                cuisine_tags=tuple(t for t in str(r.cuisine_tags).split(";") if t),
                region=str(r.region),
                price_tier=int(r.price_tier),
                mean_stars=float(r.mean_stars),
                review_count=int(r.review_count),
            )
            for r in df.itertuples(index=False)
        ]
        return cls(businesses, {})


class ReviewTable:
    def __init__(self, reviews: Sequence[Review], drop_report: dict[str, int]):
        self.reviews = list(reviews)
        self.by_id = {r.review_id: r for r in self.reviews}
        self.drop_report = dict(drop_report)

    def __len__(self) -> int:
        return len(self.reviews)

    def __iter__(self) -> Iterator[Review]:
        return iter(self.reviews)

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            {
                "review_id": [r.review_id for r in self.reviews],
                "business_id": [r.business_id for r in self.reviews],
                "user_id": [r.user_id for r in self.reviews],
                "stars": [r.stars for r in self.reviews],
                "text": [r.text for r in self.reviews],
                "token_count": [r.token_count for r in self.reviews],
            }
        )

    @classmethod
    def from_frame(cls, df: pd.DataFrame) -> "ReviewTable":
        reviews = [
            Review(
                review_id=str(r.review_id),
                business_id=str(r.business_id),
                user_id=str(r.user_id),
                stars=int(r.stars),
                text=str(r.text),
                token_count=int(r.token_count),
            )
            for r in df.itertuples(index=False)
        ]
        return cls(reviews, {})


def _iter_ndjson(path: str | Path) -> Iterator[tuple[int, dict | None, str | None]]:
    """Yield (line number, record, error) triples, decoding defensively."""
    with open(path, "rb") as fh:
        for lineno, raw in enumerate(fh, start=1):
            if not raw.strip():
                continue
            try:
                text = raw.decode("utf-8")
            except UnicodeDecodeError:
                yield lineno, None, "not valid UTF-8"
                continue
            try:
                yield lineno, json.loads(text), None
            except json.JSONDecodeError as exc:
                yield lineno, None, f"malformed JSON ({exc.msg})"


def _categories(record: dict) -> list[str]:
    raw = record.get("categories") or ""
    if isinstance(raw, list):
        tags = raw
    else:
        tags = raw.split(",")
    return [t.strip().lower() for t in tags if t.strip()]


def resolve_region(tags: Sequence[str], cmap: CuisineRegionMap) -> tuple[str | None, str]:
    """Map cuisine tags to a single region.

    Tags on the exclusion list disqualify the business; unknown tags are
    ignored unless they are all there is. Returns (region, reason) where
    region is None when the business must be dropped.
    """
    if any(t in cmap.excluded_tags for t in tags):
        return None, "excluded_cuisine_tag"
    regions = {cmap.entries[t] for t in tags if t in cmap.entries}
    if not regions:
        return None, "no_cuisine_tag"
    if len(regions) > 1:
        return None, "multi_region"
    return regions.pop(), ""


def load_businesses(
    path: str | Path,
    cmap: CuisineRegionMap | None = None,
    filters: FilterConfig | None = None,
) -> BusinessTable:
    cmap = cmap or CuisineRegionMap.load()
    filters = filters or FilterConfig()
    drops: Counter = Counter()

    # first pass: chain detection by name across the raw file
    name_ids: dict[str, set[str]] = {}
    for lineno, record, err in _iter_ndjson(path):
        if err or not record:
            continue
        name = record.get("name")
        bid = record.get("business_id")
        if name and bid:
            name_ids.setdefault(name, set()).add(bid)
    chains = {n for n, ids in name_ids.items() if len(ids) >= filters.chain_threshold}

    retained: list[Business] = []
    for lineno, record, err in _iter_ndjson(path):
        if err:
            log.warning("businesses line %d skipped: %s", lineno, err)
            drops["malformed_line"] += 1
            continue
        tags = _categories(record)
        if filters.required_tag and filters.required_tag not in tags:
            drops["not_a_restaurant"] += 1
            continue
        if any(t in filters.excluded_category_tags for t in tags):
            drops["cafe_or_fast_food"] += 1
            continue
        if record.get("name") in chains:
            drops["chain"] += 1
            continue
        cuisine_tags = [
            t for t in tags
            if t in cmap.entries or t in cmap.excluded_tags
        ]
        if filters.drop_cajun_creole:
            cuisine_tags = [t for t in cuisine_tags if t != "cajun/creole"]
        region, reason = resolve_region(cuisine_tags, cmap)
        if region is None:
            drops[reason] += 1
            continue
        try:
            attrs = record.get("attributes") or {}
            price = int(attrs.get("RestaurantsPriceRange2"))
            stars = float(record["stars"])
            business = Business(
                business_id=record["business_id"],
                name=record["name"],
                state=record["state"],
                zipcode=str(record["postal_code"]).strip(),
                latitude=float(record["latitude"]),
                longitude=float(record["longitude"]),
                cuisine_tags=tuple(t for t in cuisine_tags if t in cmap.entries),
                region=region,
                price_tier=price,
                mean_stars=stars,
                review_count=int(record.get("review_count", 0)),
            )
        except (KeyError, TypeError, ValueError) as exc:
            log.warning("businesses line %d skipped: missing/invalid field (%s)", lineno, exc)
            drops["missing_field"] += 1
            continue
        if business.price_tier not in (1, 2, 3, 4):
            drops["bad_price_tier"] += 1
            continue
        if not (1.0 <= business.mean_stars <= 5.0):
            drops["bad_stars"] += 1
            continue
        retained.append(business)

    drops["retained"] = len(retained)
    log.info("businesses: %d retained, drops: %s", len(retained), dict(drops))
    return BusinessTable(retained, dict(drops))


def load_reviews(path: str | Path, businesses: BusinessTable) -> ReviewTable:
    drops: Counter = Counter()
    retained: list[Review] = []
    for lineno, record, err in _iter_ndjson(path):
        if err:
            log.warning("reviews line %d skipped: %s", lineno, err)
            drops["malformed_line"] += 1
            continue
        bid = record.get("business_id")
        if bid not in businesses.by_id:
            drops["orphan_business"] += 1
            continue
        try:
            text = record["text"]
            review = Review(
                review_id=record["review_id"],
                business_id=bid,
                user_id=record.get("user_id", ""),
                stars=int(record["stars"]),
                text=text,
                token_count=len(text.split()),
            )
        except (KeyError, TypeError, ValueError) as exc:
            log.warning("reviews line %d skipped: missing/invalid field (%s)", lineno, exc)
            drops["missing_field"] += 1
            continue
        retained.append(review)
    drops["retained"] = len(retained)
    log.info("reviews: %d retained, drops: %s", len(retained), dict(drops))
    return ReviewTable(retained, dict(drops))


def load_nonlocal_patterns(path: str | Path | None = None) -> list[str]:
    if path is None:
        path = resources.files("foodframe.data") / "nonlocal_patterns.txt"
    return [
        line.strip()
        for line in Path(path).read_text(encoding="utf-8").splitlines()
        if line.strip() and not line.strip().startswith("#")
    ]


def exclude_nonlocal(reviews: ReviewTable, patterns: Sequence[str]) -> ReviewTable:
    """Drop reviews whose text matches any self-identified-outsider regex.

    Patterns must compile before any review is touched; matching is
    case-insensitive over the raw text.
    """
    compiled = []
    for pat in patterns:
        try:
            compiled.append(re.compile(pat, re.IGNORECASE))
        except re.error as exc:
            raise ValueError(f"invalid non-local pattern {pat!r}: {exc}") from exc
    kept, removed = [], 0
    for review in reviews:
        if any(rx.search(review.text) for rx in compiled):
            removed += 1
        else:
            kept.append(review)
    report = dict(reviews.drop_report)
    report["nonlocal_removed"] = removed
    report["retained"] = len(kept)
    log.info("non-local filter removed %d of %d reviews", removed, len(reviews))
    return ReviewTable(kept, report)


def save_cache(obj, path: str | Path) -> None:
    with open(path, "wb") as fh:
        pickle.dump(obj, fh)


def load_cache(path: str | Path):
    with open(path, "rb") as fh:
        return pickle.load(fh)
