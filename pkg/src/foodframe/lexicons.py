"""Framing lexicons and per-review framing scores.

Six frames grouped under three constructs: exoticism, prototypicality,
and authenticity operationalize othering; luxury marks high perceived
status; cost and hygiene mark low perceived status. Hygiene splits into
clean/dirty and cost into cheap/expensive polarity subsets.

Entries are uni-gram or bi-gram lemmas. Hyphen/space variants collapse
to one canonical form ("hand-made", "hand made", and "handmade" are the
same entry), so matching is done on canonical keys with hyphens and
spaces removed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .extract import FramingFeature
from .parses import Token, child_map

EXOTICISM = "exoticism"
PROTOTYPICALITY = "prototypicality"
AUTHENTICITY = "authenticity"
LUXURY = "luxury"
COST = "cost"
HYGIENE = "hygiene"
FRAMES = (EXOTICISM, PROTOTYPICALITY, AUTHENTICITY, LUXURY, COST, HYGIENE)

OTHERING = "othering"
STATUS_HIGH = "status_high"
STATUS_LOW = "status_low"
CONSTRUCTS = {
    EXOTICISM: OTHERING,
    PROTOTYPICALITY: OTHERING,
    AUTHENTICITY: OTHERING,
    LUXURY: STATUS_HIGH,
    COST: STATUS_LOW,
    HYGIENE: STATUS_LOW,
}

# subset column id -> (frame, subset name)
SUBSETS = {
    "hygiene_clean": (HYGIENE, "clean"),
    "hygiene_dirty": (HYGIENE, "dirty"),
    "cost_cheap": (COST, "cheap"),
    "cost_expensive": (COST, "expensive"),
}


def normalize_entry(entry: str) -> str:
    """Canonical key for an entry: lowercase, hyphens and spaces removed."""
    return entry.lower().replace("-", "").replace(" ", "")


@dataclass(frozen=True)
class FrameLexicon:
    name: str
    construct: str
    entries: frozenset[str]                     # canonical keys
    subsets: Mapping[str, frozenset[str]] = field(default_factory=dict)

    def subset_of(self, key: str) -> str | None:
        for subset, members in self.subsets.items():
            if key in members:
                return subset
        return None


def _read_sections(path) -> dict[str, list[str]]:
    sections: dict[str, list[str]] = {}
    current: list[str] | None = None
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("[") and line.endswith("]"):
            current = sections.setdefault(line[1:-1].strip().lower(), [])
            continue
        if current is None:
            raise ValueError(f"{path}: entry {line!r} before any [section] header")
        current.append(line)
    return sections


def shared_entries(lexicons: Sequence[FrameLexicon]) -> dict[str, list[str]]:
    """Canonical entries appearing in more than one lexicon."""
    owners: dict[str, list[str]] = {}
    for lex in lexicons:
        for key in lex.entries:
            owners.setdefault(key, []).append(lex.name)
    return {k: v for k, v in sorted(owners.items()) if len(v) > 1}


def load_lexicons(
    path: str | Path | None = None,
    subsets_path: str | Path | None = None,
) -> list[FrameLexicon]:
    """Load the six framing lexicons (shipped data files by default).

    Entries shared across lexicons are reported via ValueError so
    regressions in the data files cannot pass silently; the shipped
    lists are disjoint by construction.
    """
    data = resources.files("foodframe.data")
    sections = _read_sections(path if path is not None else data / "lexicons.txt")
    subset_sections = _read_sections(
        subsets_path if subsets_path is not None else data / "lexicon_subsets.txt"
    )

    missing = [f for f in FRAMES if f not in sections]
    if missing:
        raise ValueError(f"lexicon file is missing frames: {missing}")

    subsets_by_frame: dict[str, dict[str, frozenset[str]]] = {}
    for header, entries in subset_sections.items():
        frame, _, subset = header.partition(".")
        if not subset:
            raise ValueError(f"subset section {header!r} must be <frame>.<subset>")
        subsets_by_frame.setdefault(frame, {})[subset] = frozenset(
            normalize_entry(e) for e in entries
        )

    lexicons = []
    for frame in FRAMES:
        keys = frozenset(normalize_entry(e) for e in sections[frame])
        subsets = subsets_by_frame.get(frame, {})
        claimed: set[str] = set()
        for subset, members in subsets.items():
            extra = members - keys
            if extra:
                raise ValueError(f"{frame}.{subset} has entries outside the frame: {sorted(extra)}")
            overlap = members & claimed
            if overlap:
                raise ValueError(f"{frame}: entries in two subsets: {sorted(overlap)}")
            claimed |= members
        lexicons.append(FrameLexicon(frame, CONSTRUCTS[frame], keys, subsets))

    shared = shared_entries(lexicons)
    if shared:
        raise ValueError(f"entries shared across lexicons: {shared}")
    return lexicons


def _candidate_keys(feature: FramingFeature, context: Sequence[Token]) -> list[str]:
    """Canonical keys the feature can match: its lemma, plus the bigram
    formed with a surface-adjacent head or dependent token."""
    tok = context[feature.token - 1]
    keys = [normalize_entry(tok.lemma)]
    neighbors = []
    if tok.head != 0 and abs(tok.head - tok.index) == 1:
        neighbors.append(tok.head)
    kids = child_map(context)
    for c in kids[tok.index]:
        if abs(c - tok.index) == 1:
            neighbors.append(c)
    for n in neighbors:
        lo, hi = min(n, tok.index), max(n, tok.index)
        keys.append(normalize_entry(context[lo - 1].lemma + context[hi - 1].lemma))
    return keys


def matching_entry(
    feature: FramingFeature, context: Sequence[Token], lexicon: FrameLexicon
) -> str | None:
    for key in _candidate_keys(feature, context):
        if key in lexicon.entries:
            return key
    return None


def match_entry(
    feature: FramingFeature, context: Sequence[Token], lexicon: FrameLexicon
) -> bool:
    return matching_entry(feature, context, lexicon) is not None


@dataclass
class FramingScore:
    review_id: str
    counts: dict[str, int]
    subset_counts: dict[str, int]

    def as_row(self) -> dict[str, int | str]:
        row: dict[str, int | str] = {"review_id": self.review_id}
        row.update(self.counts)
        row.update(self.subset_counts)
        return row


def score_review(
    features: Iterable[FramingFeature],
    lexicons: Sequence[FrameLexicon],
    sentences: Sequence[Sequence[Token]],
    review_id: str | None = None,
) -> FramingScore:
    """Raw feature counts per frame and polarity subset for one review.

    Counts are not length-normalized; review length enters the analyses
    as a regression covariate instead.
    """
    counts = {lex.name: 0 for lex in lexicons}
    subset_counts = {col: 0 for col in SUBSETS}
    rid = review_id
    for feat in features:
        if rid is None:
            rid = feat.review_id
        context = sentences[feat.sentence]
        for lex in lexicons:
            key = matching_entry(feat, context, lex)
            if key is None:
                continue
            counts[lex.name] += 1
            subset = lex.subset_of(key)
            if subset is not None:
                col = f"{lex.name}_{subset}"
                if col in subset_counts:
                    subset_counts[col] += 1
    return FramingScore(rid or "", counts, subset_counts)
