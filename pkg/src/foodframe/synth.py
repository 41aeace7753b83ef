"""Seeded synthetic pre-parsed corpora with planted framing disparities.

Every sentence carries exactly one anchor slot. The injected frame's
adjectives attach to slots with a higher Bernoulli rate for
immigrant-region reviews than for non-immigrant ones; every other frame
attaches at exactly equal realized rates per region (stratified
assignment), so the pipeline must find the planted disparity and
nothing else. Covariates are drawn independently of region.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import pandas as pd

from .parses import ParsedReview, Token

REGIONS = ("US", "EUR", "LAT", "AS")

FRAME_WORDS = {
    "authenticity": ("authentic", "traditional", "legit", "rustic"),
    "exoticism": ("exotic", "unusual", "foreign"),
    "prototypicality": ("typical", "standard", "usual"),
    "luxury": ("elegant", "lavish", "classy"),
    "cost": ("cheap", "pricey", "affordable"),
    "hygiene": ("clean", "spotless", "grimy"),
}

NEUTRAL_ADJECTIVES = ("great", "tasty", "friendly", "good", "nice", "decent")

# anchors picked to avoid any dish-name bigram with the frame words
ANCHOR_NOUNS = (
    "noodle", "taco", "soup", "salad", "burger", "chicken",
    "waiter", "server", "chef", "bartender",
    "place", "atmosphere", "decor", "patio",
)


@dataclass
class SynthConfig:
    n_reviews: int = 10_000
    injected_frame: str = "authenticity"
    immigrant_rate: float = 0.30
    base_rate: float = 0.10
    other_rate: float = 0.08
    neutral_rate: float = 0.25


def _predicative(noun: str, adj: str) -> tuple[Token, ...]:
    return (
        Token(1, "The", "the", "DET", 2, "det"),
        Token(2, noun, noun, "NOUN", 4, "nsubj"),
        Token(3, "was", "be", "AUX", 4, "cop"),
        Token(4, adj, adj, "ADJ", 0, "root"),
        Token(5, ".", ".", "PUNCT", 4, "punct"),
    )


def _attributive(noun: str, adj: str) -> tuple[Token, ...]:
    return (
        Token(1, "The", "the", "DET", 3, "det"),
        Token(2, adj, adj, "ADJ", 3, "amod"),
        Token(3, noun, noun, "NOUN", 4, "nsubj"),
        Token(4, "impressed", "impress", "VERB", 0, "root"),
        Token(5, "us", "we", "PRON", 4, "obj"),
        Token(6, ".", ".", "PUNCT", 4, "punct"),
    )


def _filler(noun: str) -> tuple[Token, ...]:
    return (
        Token(1, "We", "we", "PRON", 2, "nsubj"),
        Token(2, "enjoyed", "enjoy", "VERB", 0, "root"),
        Token(3, "the", "the", "DET", 4, "det"),
        Token(4, noun, noun, "NOUN", 2, "obj"),
        Token(5, ".", ".", "PUNCT", 2, "punct"),
    )


def make_corpus(
    seed: int, config: SynthConfig | None = None
) -> tuple[list[ParsedReview], pd.DataFrame]:
    """Build (parsed reviews, covariate table) with the planted effect."""
    config = config or SynthConfig()
    rng = np.random.default_rng(seed)
    n = config.n_reviews

    regions = rng.choice(REGIONS, size=n)
    n_sentences = rng.integers(2, 5, size=n)

    # slot bookkeeping: one anchor slot per sentence
    slot_review: list[int] = []
    for i in range(n):
        slot_review.extend([i] * n_sentences[i])
    slot_review_arr = np.array(slot_review)
    slot_region = regions[slot_review_arr]
    n_slots = len(slot_review)

    assigned = np.full(n_slots, "", dtype=object)

    # injected frame: Bernoulli per slot, rate by immigrant status
    immigrant_slot = slot_region != "US"
    p = np.where(immigrant_slot, config.immigrant_rate, config.base_rate)
    hit = rng.random(n_slots) < p
    assigned[hit] = config.injected_frame

    # remaining frames: exactly-equal realized rates within each region
    other_frames = [f for f in FRAME_WORDS if f != config.injected_frame]
    for frame in other_frames:
        for region in REGIONS:
            region_slots = np.flatnonzero(slot_region == region)
            k = int(round(config.other_rate * len(region_slots)))
            free = region_slots[assigned[region_slots] == ""]
            chosen = rng.choice(free, size=min(k, len(free)), replace=False)
            assigned[chosen] = frame

    # leftover slots: mostly bare, sometimes a neutral adjective
    free = np.flatnonzero(assigned == "")
    neutral = free[rng.random(len(free)) < config.neutral_rate]
    assigned[neutral] = "neutral"

    reviews: list[ParsedReview] = []
    slot_idx = 0
    for i in range(n):
        sentences = []
        for _ in range(n_sentences[i]):
            noun = ANCHOR_NOUNS[rng.integers(len(ANCHOR_NOUNS))]
            tag = assigned[slot_idx]
            slot_idx += 1
            if tag == "":
                sentences.append(_filler(noun))
                continue
            if tag == "neutral":
                words = NEUTRAL_ADJECTIVES
            else:
                words = FRAME_WORDS[tag]
            adj = words[rng.integers(len(words))]
            if rng.random() < 0.5:
                sentences.append(_predicative(noun, adj))
            else:
                sentences.append(_attributive(noun, adj))
        reviews.append(ParsedReview(f"synth-{i:05d}", tuple(sentences), ()))

    covariates = pd.DataFrame(
        {
            "review_id": [r.review_id for r in reviews],
            "region": regions,
            "length": [r.n_tokens for r in reviews],
            "price_tier": rng.integers(1, 5, size=n),
            "stars": rng.uniform(1.5, 5.0, size=n),
            "income": rng.normal(60_000, 15_000, size=n),
            "diversity": rng.uniform(0.1, 0.8, size=n),
            "pct_asian": rng.uniform(0.0, 30.0, size=n),
            "pct_hispanic": rng.uniform(0.0, 30.0, size=n),
        }
    )
    return reviews, covariates
