"""End-to-end check on a generated corpus with a known planted effect."""

import numpy as np
import pytest

from foodframe.pipeline import extract_corpus, merge_tables, score_corpus
from foodframe.regression import run_study
from foodframe.synth import SynthConfig, make_corpus

REGION_TERMS = ("region[EUR]", "region[LAT]", "region[AS]")


def run_study1a(seed, n_reviews, anchors, dish_names, lexicons):
    reviews, covariates = make_corpus(seed, SynthConfig(n_reviews=n_reviews))
    features = extract_corpus(reviews, anchors, dish_names)
    scores = score_corpus(reviews, features, lexicons)
    merged = merge_tables(scores, covariates)
    return run_study("study1a", merged)


def test_injected_disparity_detected_single_seed(anchors, dish_names, lexicons):
    models = {m.outcome: m.result for m in run_study1a(99, 4000, anchors, dish_names, lexicons)}
    auth = models["authenticity"]
    for term in REGION_TERMS:
        assert auth.coef(term) > 0
        assert auth.p_value(term) < 1e-3
    for outcome in ("exoticism", "prototypicality"):
        for term in REGION_TERMS:
            assert models[outcome].p_value(term) > 0.05


def test_generator_plants_expected_rates(anchors, dish_names, lexicons):
    reviews, covariates = make_corpus(7, SynthConfig(n_reviews=3000))
    feats = extract_corpus(reviews, anchors, dish_names)
    scores = score_corpus(reviews, feats, lexicons)
    merged = merge_tables(scores, covariates)
    imm = merged[merged["region"] != "US"]
    us = merged[merged["region"] == "US"]
    # authenticity attaches ~3x more often per review for immigrant labels
    ratio = imm["authenticity"].mean() / us["authenticity"].mean()
    assert 2.2 < ratio < 4.0
    # non-injected frames stay balanced across regions
    for frame in ("exoticism", "prototypicality", "luxury", "cost", "hygiene"):
        assert abs(imm[frame].mean() - us[frame].mean()) < 0.05


def test_generator_deterministic_per_seed():
    a_reviews, a_cov = make_corpus(5, SynthConfig(n_reviews=200))
    b_reviews, b_cov = make_corpus(5, SynthConfig(n_reviews=200))
    assert a_reviews == b_reviews
    assert a_cov.equals(b_cov)
    c_reviews, _ = make_corpus(6, SynthConfig(n_reviews=200))
    assert a_reviews != c_reviews
