"""Glue between stages: corpus-level extraction, scoring, and merging."""

from __future__ import annotations

from typing import Iterable, Sequence

import pandas as pd

from .extract import AnchorSet, FramingFeature, extract_review
from .lexicons import FrameLexicon, score_review
from .parses import ParsedReview


def extract_corpus(
    reviews: Iterable[ParsedReview],
    anchors: Sequence[AnchorSet],
    dish_names: frozenset[tuple[str, str]] = frozenset(),
) -> list[FramingFeature]:
    features: list[FramingFeature] = []
    for review in reviews:
        features.extend(extract_review(review, anchors, dish_names))
    return features


def features_frame(features: Sequence[FramingFeature]) -> pd.DataFrame:
    return pd.DataFrame(
        {
            "review_id": [f.review_id for f in features],
            "lemma": [f.adjective_lemma for f in features],
            "category": [f.anchor_category for f in features],
            "sentence": [f.sentence for f in features],
            "path": [f.path for f in features],
            "token": [f.token for f in features],
            "anchor": [f.anchor for f in features],
        }
    )


def score_corpus(
    reviews: Iterable[ParsedReview],
    features: Sequence[FramingFeature],
    lexicons: Sequence[FrameLexicon],
) -> pd.DataFrame:
    """Per-review framing scores; reviews with no features score zero.

    ``reviews`` may be a one-shot stream; each review's parse is only
    needed while its own features are scored.
    """
    by_review: dict[str, list[FramingFeature]] = {}
    for feat in features:
        by_review.setdefault(feat.review_id, []).append(feat)
    rows = []
    for review in reviews:
        score = score_review(
            by_review.get(review.review_id, []),
            lexicons,
            review.sentences,
            review_id=review.review_id,
        )
        rows.append(score.as_row())
    return pd.DataFrame(rows)


def merge_tables(
    scores: pd.DataFrame,
    covariates: pd.DataFrame,
) -> pd.DataFrame:
    """Join per-review scores with per-review covariates on review_id."""
    merged = scores.merge(covariates, on="review_id", how="inner", validate="1:1")
    return merged
