"""Weighted log-odds association scores with an informative prior.

For a word w and group C against the complement C', with prior counts
taken from the whole corpus:

    L_C  = (n_wC + n_wP) / (N_C - n_wC + N_P - n_wP)
    L_C' = (n_wC' + n_wP) / (N_C' - n_wC' + N_P - n_wP)
    delta = log(L_C / L_C') / sqrt(1/(n_wC + n_wP) + 1/(n_wC' + n_wP))

where N_* are the group/prior totals. delta is a z-score: the prior
shrinks estimates for rare words and the variance term downweights
low-count comparisons. Words with an undefined variance term (zero
count plus zero prior on either side) are excluded.
"""

from __future__ import annotations

import math
from collections import Counter
from typing import Iterable, Mapping, NamedTuple

from .extract import FramingFeature
from .lexicons import FrameLexicon, normalize_entry


class LogOddsEntry(NamedTuple):
    word: str
    delta: float
    n_c: int
    n_notc: int
    n_prior: int


class CountTable:
    """Per-group word counts plus prior counts over the whole corpus.

    The prior must cover every word that appears in any group.
    """

    def __init__(
        self,
        group_counts: Mapping[tuple[str, str], int],
        prior_counts: Mapping[str, int],
        groups: Iterable[str] = (),
    ):
        self._by_group: dict[str, Counter] = {g: Counter() for g in groups}
        for (group, word), count in group_counts.items():
            if count < 0:
                raise ValueError("negative count")
            self._by_group.setdefault(group, Counter())[word] += count
        self._prior = Counter()
        for word, count in prior_counts.items():
            if count < 0:
                raise ValueError("negative count")
            self._prior[word] += count
        uncovered = {
            w for g in self._by_group.values() for w in g if w not in self._prior
        }
        if uncovered:
            raise ValueError(f"prior does not cover words: {sorted(uncovered)[:5]}")
        self._group_totals = {g: sum(c.values()) for g, c in self._by_group.items()}
        self._prior_total = sum(self._prior.values())

    @classmethod
    def from_group_counters(
        cls,
        by_group: Mapping[str, Mapping[str, int]],
        prior_counts: Mapping[str, int] | None = None,
    ) -> "CountTable":
        flat = {
            (g, w): c for g, counter in by_group.items() for w, c in counter.items()
        }
        if prior_counts is None:
            prior = Counter()
            for counter in by_group.values():
                prior.update(counter)
            prior_counts = prior
        return cls(flat, prior_counts, groups=by_group.keys())

    @property
    def groups(self) -> list[str]:
        return sorted(self._by_group)

    def group_counter(self, group: str) -> Counter:
        return self._by_group.get(group, Counter())

    def prior_counter(self) -> Counter:
        return self._prior


def weighted_log_odds(table: CountTable, group: str) -> list[LogOddsEntry]:
    """Association z-scores of every word with ``group`` versus the
    complement (all other groups), sorted by delta descending."""
    if group not in table._by_group:
        raise KeyError(f"unknown group {group!r}")
    focal = table.group_counter(group)
    comp = Counter()
    for g, counter in table._by_group.items():
        if g != group:
            comp.update(counter)
    prior = table.prior_counter()
    total_c = table._group_totals[group]
    total_notc = sum(t for g, t in table._group_totals.items() if g != group)
    total_p = table._prior_total

    entries = []
    for word in prior:
        n_c = focal.get(word, 0)
        n_notc = comp.get(word, 0)
        n_p = prior[word]
        if n_c + n_p == 0 or n_notc + n_p == 0:
            continue  # variance term undefined
        denom_c = total_c - n_c + total_p - n_p
        denom_notc = total_notc - n_notc + total_p - n_p
        if denom_c <= 0 or denom_notc <= 0:
            continue  # word carries the entire mass; odds undefined
        l_c = (n_c + n_p) / denom_c
        l_notc = (n_notc + n_p) / denom_notc
        variance = 1.0 / (n_c + n_p) + 1.0 / (n_notc + n_p)
        delta = math.log(l_c / l_notc) / math.sqrt(variance)
        entries.append(LogOddsEntry(word, delta, n_c, n_notc, n_p))
    entries.sort(key=lambda e: (-e.delta, e.word))
    return entries


def top_associated(
    entries: list[LogOddsEntry], k: int, z_min: float = 2.0
) -> list[LogOddsEntry]:
    """At most k entries with delta >= z_min, preserving rank order."""
    return [e for e in entries if e.delta >= z_min][:k]


def frame_filtered_log_odds(
    features: Iterable[FramingFeature],
    lexicon: FrameLexicon,
    regions: Mapping[str, str],
    group: str,
) -> list[LogOddsEntry]:
    """Weighted log-odds over extracted features restricted to one frame
    lexicon, comparing reviews of ``group`` against all other regions.

    ``regions`` maps review_id to its region; the prior is the feature
    counts over all reviews, the focal group's included.
    """
    focal: Counter = Counter()
    rest: Counter = Counter()
    for feat in features:
        if normalize_entry(feat.adjective_lemma) not in lexicon.entries:
            continue
        region = regions.get(feat.review_id)
        if region is None:
            continue
        if region == group:
            focal[feat.adjective_lemma] += 1
        else:
            rest[feat.adjective_lemma] += 1
    if not focal and not rest:
        return []
    table = CountTable.from_group_counters({group: focal, f"non-{group}": rest})
    return weighted_log_odds(table, group)
