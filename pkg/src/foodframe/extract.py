"""Adjectival framing-feature extraction.

Adjectives are collected when they modify an anchor noun (food, staff,
or venue vocabulary) through one of three dependency routes:

* attributive -- the adjective is an ``amod`` dependent of the anchor
  ("the authentic tacos");
* predicative -- the anchor is the ``nsubj`` of an adjectival
  predicate, i.e. the adjective heads the clause with the copula as its
  dependent ("the restaurant was stinky");
* conjoined -- the adjective is ``conj``-linked to an adjective already
  emitted for the same anchor ("clean and cheap").

Anchor mentions are extended through coreference chains: every token of
a chain that contains a direct anchor match inherits that category, and
features reached through such mentions carry the ``coref`` path label.
Adjectives under negation scope are never emitted, and an adjective
``amod``-attached to a food anchor is suppressed when the (adjective,
noun) pair is a known dish name ("stinky tofu" names a dish; it is not
an evaluation).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Iterable, NamedTuple, Sequence

from .parses import ParsedReview, Token, child_map

log = logging.getLogger(__name__)

FOOD = "food"
STAFF = "staff"
VENUE = "venue"
CATEGORIES = (FOOD, STAFF, VENUE)

ATTRIBUTIVE = "attributive"
PREDICATIVE = "predicative"
CONJOINED = "conjoined"
COREF = "coref"

NOMINAL_UPOS = frozenset({"NOUN", "PROPN"})
ADJ_UPOS = "ADJ"

# Negation cues; `not/n't/never/hardly/without` attach as advmod, `no`
# as det. A bare `neg` relation (non-UD schemes) always counts.
NEGATION_CUES = frozenset({"not", "n't", "never", "no", "nothing", "hardly", "without"})
NEGATION_HOPS = 2


@dataclass(frozen=True)
class AnchorSet:
    category: str
    lemmas: frozenset[str]


class AnchorMention(NamedTuple):
    sent: int
    token: int
    category: str
    via_coref: bool


class FramingFeature(NamedTuple):
    review_id: str
    adjective_lemma: str
    anchor_category: str
    sentence: int
    path: str
    token: int   # adjective token index within the sentence
    anchor: int  # anchor token index within the sentence


def _read_lemma_file(path) -> frozenset[str]:
    lemmas = set()
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            lemmas.add(line.lower())
    return frozenset(lemmas)


def load_anchor_sets(paths: dict[str, str | Path] | None = None) -> list[AnchorSet]:
    """Load the three anchor sets; shipped data files by default.

    ``paths`` maps category name to a file with one lemma per line
    (``#`` comments allowed). Sets must be nonempty and pairwise
    disjoint.
    """
    if paths is None:
        data = resources.files("foodframe.data")
        paths = {
            FOOD: data / "anchors_food.txt",
            STAFF: data / "anchors_staff.txt",
            VENUE: data / "anchors_venue.txt",
        }
    sets = [AnchorSet(cat, _read_lemma_file(paths[cat])) for cat in CATEGORIES if cat in paths]
    for a in sets:
        if not a.lemmas:
            raise ValueError(f"anchor set {a.category!r} is empty")
    for i, a in enumerate(sets):
        for b in sets[i + 1:]:
            shared = a.lemmas & b.lemmas
            if shared:
                raise ValueError(
                    f"anchor sets {a.category!r} and {b.category!r} share lemmas: {sorted(shared)}"
                )
    return sets


def load_dish_names(path: str | Path | None = None) -> frozenset[tuple[str, str]]:
    """(adjective, noun) lemma bigrams naming dishes, from the data file."""
    if path is None:
        path = resources.files("foodframe.data") / "dish_names.txt"
    pairs = set()
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        line = line.strip().lower()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"dish name entries are bigrams, got {line!r}")
        pairs.add((parts[0], parts[1]))
    return frozenset(pairs)


def resolve_anchor_mentions(
    review: ParsedReview, anchors: Sequence[AnchorSet]
) -> set[AnchorMention]:
    """Anchor tokens of a review: direct lemma matches plus coreferent tokens.

    A coref chain contributes only when all its direct matches agree on
    one category; mixed chains are logged and skipped.
    """
    by_lemma = {}
    for aset in anchors:
        for lemma in aset.lemmas:
            by_lemma[lemma] = aset.category

    mentions: set[AnchorMention] = set()
    direct: dict[tuple[int, int], str] = {}
    for s_idx, sent in enumerate(review.sentences):
        for tok in sent:
            if tok.upos in NOMINAL_UPOS and tok.lemma in by_lemma:
                cat = by_lemma[tok.lemma]
                direct[(s_idx, tok.index)] = cat
                mentions.add(AnchorMention(s_idx, tok.index, cat, False))

    for chain in review.coref_chains:
        span_tokens = [
            (m.sent, idx) for m in chain for idx in range(m.start, m.end + 1)
        ]
        cats = {direct[pos] for pos in span_tokens if pos in direct}
        if not cats:
            continue
        if len(cats) > 1:
            log.info(
                "review %s: coref chain mixes anchor categories %s, skipped",
                review.review_id, sorted(cats),
            )
            continue
        cat = cats.pop()
        for s_idx, t_idx in span_tokens:
            if (s_idx, t_idx) not in direct:
                mentions.add(AnchorMention(s_idx, t_idx, cat, True))
    return mentions


def in_negation_scope(adjective: int, sentence: Sequence[Token]) -> bool:
    """True when the adjective, an ancestor within 2 hops, or a copula or
    auxiliary under one of those carries a negation cue."""
    sent = sentence
    kids = child_map(sent)

    def is_cue(tok):
        if tok.deprel == "neg":
            return True
        return tok.lemma in NEGATION_CUES and tok.deprel in ("advmod", "det")

    nodes = [adjective]
    cur = adjective
    for _ in range(NEGATION_HOPS):
        head = sent[cur - 1].head
        if head == 0:
            break
        nodes.append(head)
        cur = head

    for node in nodes:
        for c in kids[node]:
            ctok = sent[c - 1]
            if is_cue(ctok):
                return True
            if ctok.deprel in ("cop", "aux", "auxpass"):
                if any(is_cue(sent[g - 1]) for g in kids[c]):
                    return True
    return False


def extract_adjectives(
    review: ParsedReview,
    mentions: Iterable[AnchorMention],
    dish_names: frozenset[tuple[str, str]] = frozenset(),
) -> list[FramingFeature]:
    """Emit framing features for a review given its anchor mentions.

    Output is deterministic: sorted by (sentence, anchor, adjective).
    Duplicate (anchor token, adjective token) pairs collapse to one
    feature.
    """
    by_sentence: dict[int, list[AnchorMention]] = {}
    for m in mentions:
        by_sentence.setdefault(m.sent, []).append(m)

    features: list[FramingFeature] = []
    for s_idx, sent_mentions in sorted(by_sentence.items()):
        sent = review.sentences[s_idx]
        kids = child_map(sent)
        seen_pairs: set[tuple[int, int]] = set()
        emitted: list[tuple[int, AnchorMention]] = []

        def emit(adj_idx: int, mention: AnchorMention, path: str):
            if (mention.token, adj_idx) in seen_pairs:
                return
            seen_pairs.add((mention.token, adj_idx))
            features.append(
                FramingFeature(
                    review_id=review.review_id,
                    adjective_lemma=sent[adj_idx - 1].lemma,
                    anchor_category=mention.category,
                    sentence=s_idx,
                    path=COREF if mention.via_coref else path,
                    token=adj_idx,
                    anchor=mention.token,
                )
            )
            emitted.append((adj_idx, mention))

        for mention in sorted(sent_mentions, key=lambda m: m.token):
            anchor_tok = sent[mention.token - 1]
            # attributive: adjective amod-attached to the anchor
            for c in kids[mention.token]:
                ctok = sent[c - 1]
                if ctok.deprel != "amod" or ctok.upos != ADJ_UPOS:
                    continue
                if mention.category == FOOD and (ctok.lemma, anchor_tok.lemma) in dish_names:
                    continue
                if in_negation_scope(c, sent):
                    continue
                emit(c, mention, ATTRIBUTIVE)
            # predicative: anchor is nsubj of an adjectival predicate
            if anchor_tok.deprel == "nsubj" and anchor_tok.head != 0:
                head_tok = sent[anchor_tok.head - 1]
                if head_tok.upos == ADJ_UPOS and not in_negation_scope(head_tok.index, sent):
                    emit(head_tok.index, mention, PREDICATIVE)

        # conjoined: adjectives conj-linked to an already-emitted one;
        # a conjunct with its own subject is a separate clause, not a
        # shared-anchor modifier
        queue = list(emitted)
        while queue:
            adj_idx, mention = queue.pop(0)
            for c in kids[adj_idx]:
                ctok = sent[c - 1]
                if ctok.deprel != "conj" or ctok.upos != ADJ_UPOS:
                    continue
                if any(sent[g - 1].deprel == "nsubj" for g in kids[c]):
                    continue
                if in_negation_scope(c, sent):
                    continue
                before = len(emitted)
                emit(c, mention, CONJOINED)
                if len(emitted) > before:
                    queue.append(emitted[-1])

    features.sort(key=lambda f: (f.sentence, f.anchor, f.token))
    return features


def extract_review(
    review: ParsedReview,
    anchors: Sequence[AnchorSet],
    dish_names: frozenset[tuple[str, str]] = frozenset(),
) -> list[FramingFeature]:
    """resolve_anchor_mentions + extract_adjectives in one step."""
    return extract_adjectives(review, resolve_anchor_mentions(review, anchors), dish_names)
