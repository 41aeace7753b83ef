"""Synthetic review generation over a controlled prompt grid.

Three prompt templates are expanded over sentiment x price point x
cuisine (templates 1 and 2 also vary a review focus). Generated text is
persisted raw before any cleaning, disclosure sentences are stripped in
a separate pass, and the kept reviews are stratified to equal per-region
counts with a seeded sampler so the audit dataset is reproducible from
the persisted responses.

The chat client is an interface: HttpChatClient talks to a
chat-completion endpoint (URL configurable, key from an environment
variable) with bounded retry/backoff; MockChatClient is deterministic
and used by every test.
"""

from __future__ import annotations

import json
import logging
import os
import random
import re
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime, timezone
from importlib import resources
from pathlib import Path
from typing import Callable, Mapping, NamedTuple, Sequence

import requests

log = logging.getLogger(__name__)

SENTIMENTS = ("very positive", "positive", "neutral", "negative", "very negative")

PRICE_POINTS = {
    1: "$ ($10 and under)",
    2: "$$ ($10-$25)",
    3: "$$$ ($25-$45)",
    4: "$$$$ ($50 and up)",
}

FOCI = (
    "staff", "waitstaff", "employees", "waiter", "waitress",
    "food", "drinks", "main courses", "appetizers", "desserts",
    "place", "spot", "atmosphere", "experience", "ambiance",
)

TEMPLATES = {
    1: (
        "A customer posted the following restaurant review to an online "
        "restaurant review website:<span class='headline' "
        'title="{sentiment} review about a {price_point} {cuisine} '
        'restaurant, focused on the {focus},">'
    ),
    2: (
        "Write a {sentiment} review of a {price_point} {cuisine} "
        "restaurant, focusing on the {focus}"
    ),
    3: "Give an example of a {sentiment} review of a {price_point} {cuisine} restaurant",
}
TEMPLATES_WITH_FOCUS = (1, 2)

DEFAULT_REQUEST_PARAMS = {
    "temperature": 1,
    "max_tokens": 256,
    "top_p": 1,
    "frequency_penalty": 0,
    "presence_penalty": 0,
}


class PromptJob(NamedTuple):
    template_id: int
    sentiment: str
    price_tier: int
    cuisine: str
    focus: str | None

    @property
    def price_point(self) -> str:
        return PRICE_POINTS[self.price_tier]


@dataclass
class GeneratedReview:
    job: PromptJob
    model_id: str
    raw_text: str
    clean_text: str
    created_at: str
    discarded: bool = False

    def to_record(self) -> dict:
        return {
            "job": self.job._asdict(),
            "model_id": self.model_id,
            "raw_text": self.raw_text,
            "clean_text": self.clean_text,
            "status": "discarded" if self.discarded else "ok",
            "created_at": self.created_at,
        }

    @classmethod
    def from_record(cls, rec: dict) -> "GeneratedReview":
        return cls(
            job=PromptJob(**rec["job"]),
            model_id=rec["model_id"],
            raw_text=rec["raw_text"],
            clean_text=rec["clean_text"],
            created_at=rec["created_at"],
            discarded=rec.get("status") == "discarded",
        )


@dataclass
class GridConfig:
    templates: Sequence[int] = (1, 2, 3)
    cuisines: Sequence[str] = ()
    price_tiers: Sequence[int] = (1, 2, 3, 4)
    sentiments: Sequence[str] = SENTIMENTS
    foci: Sequence[str] = FOCI


def expand_prompts(config: GridConfig) -> list[PromptJob]:
    """Full Cartesian product per template, in deterministic order.

    Templates 1 and 2 include the focus dimension; template 3 does not.
    """
    for name in ("templates", "cuisines", "price_tiers", "sentiments"):
        if not getattr(config, name):
            raise ValueError(f"empty grid dimension: {name}")
    jobs: list[PromptJob] = []
    for template_id in config.templates:
        if template_id in TEMPLATES_WITH_FOCUS:
            if not config.foci:
                raise ValueError("empty grid dimension: foci")
            foci: Sequence[str | None] = config.foci
        else:
            foci = (None,)
        for cuisine in config.cuisines:
            for tier in config.price_tiers:
                for sentiment in config.sentiments:
                    for focus in foci:
                        jobs.append(PromptJob(template_id, sentiment, tier, cuisine, focus))
    return jobs


def render_prompt(job: PromptJob, template: str | None = None) -> str:
    """Substitute job fields into the template verbatim."""
    if template is None:
        template = TEMPLATES[job.template_id]
    fields = {
        "sentiment": job.sentiment,
        "price_point": job.price_point,
        "cuisine": job.cuisine,
        "focus": job.focus,
    }
    try:
        return template.format(**fields)
    except (KeyError, IndexError) as exc:
        raise ValueError(f"unknown placeholder in template: {exc}") from exc


def load_disclaimer_patterns(path: str | Path | None = None) -> list[str]:
    if path is None:
        path = resources.files("foodframe.data") / "disclaimer_patterns.txt"
    return [
        line.strip()
        for line in Path(path).read_text(encoding="utf-8").splitlines()
        if line.strip() and not line.strip().startswith("#")
    ]


_SENTENCE_SPLIT = re.compile(r"(?<=[.!?])\s+")


def strip_disclaimers(raw_text: str, patterns: Sequence[str]) -> tuple[str, bool]:
    """Remove whole sentences matching any disclosure pattern.

    Returns (clean_text, discarded); discarded is True when nothing
    survives. The remainder is whitespace-normalized.
    """
    compiled = [re.compile(p, re.IGNORECASE) for p in patterns]
    kept = []
    for sentence in _SENTENCE_SPLIT.split(raw_text.strip()):
        if not sentence:
            continue
        if any(rx.search(sentence) for rx in compiled):
            continue
        kept.append(sentence)
    clean = " ".join(" ".join(kept).split())
    return clean, not clean


REGIONS = ("US", "EUR", "LAT", "AS")


def stratify(
    reviews: Sequence[GeneratedReview],
    region_of: Mapping[str, str] | Callable[[str], str],
    seed: int = 0,
    expected_regions: Sequence[str] = REGIONS,
) -> list[GeneratedReview]:
    """Subsample to exactly equal per-region counts (the minimum across
    regions), deterministically for a given seed.

    Every expected region must be represented; an empty region makes the
    even split meaningless and raises with the missing names.
    """
    lookup = region_of if callable(region_of) else region_of.__getitem__
    by_region: dict[str, list[GeneratedReview]] = {r: [] for r in expected_regions}
    for review in reviews:
        by_region.setdefault(lookup(review.job.cuisine), []).append(review)
    empty = [r for r, items in by_region.items() if not items]
    if empty:
        raise ValueError(f"regions with zero reviews: {sorted(empty)}")
    target = min(len(items) for items in by_region.values())
    rng = random.Random(seed)
    out: list[GeneratedReview] = []
    for region in sorted(by_region):
        items = by_region[region]
        out.extend(rng.sample(items, target))
    return out


def match_sentiment_distribution(
    jobs: Sequence[PromptJob], target: Mapping[str, float]
) -> tuple[list[PromptJob], dict[str, dict[str, float]]]:
    """Replicate jobs so the sentiment mix tracks a target distribution.

    Per-sentiment totals follow the largest-remainder apportionment of
    len(jobs) slots, so |realized - target| <= 1/total for every
    sentiment. Returns the weighted job list plus a realized-vs-target
    report.
    """
    total_weight = sum(target.values())
    if abs(total_weight - 1.0) > 1e-9:
        raise ValueError(f"target distribution sums to {total_weight}, expected 1")
    by_sentiment: dict[str, list[PromptJob]] = {}
    for job in jobs:
        by_sentiment.setdefault(job.sentiment, []).append(job)
    unmatched = [s for s, w in target.items() if w > 0 and s not in by_sentiment]
    if unmatched:
        raise ValueError(f"target assigns weight to sentiments with no jobs: {unmatched}")

    total = len(jobs)
    quotas = {s: target.get(s, 0.0) * total for s in by_sentiment}
    counts = {s: int(q) for s, q in quotas.items()}
    leftover = total - sum(counts.values())
    for s in sorted(quotas, key=lambda s: (quotas[s] - counts[s], s), reverse=True):
        if leftover <= 0:
            break
        counts[s] += 1
        leftover -= 1

    weighted: list[PromptJob] = []
    report: dict[str, dict[str, float]] = {}
    for sentiment in sorted(by_sentiment):
        pool = by_sentiment[sentiment]
        want = counts.get(sentiment, 0)
        base, extra = divmod(want, len(pool))
        for i, job in enumerate(pool):
            weighted.extend([job] * (base + (1 if i < extra else 0)))
        report[sentiment] = {
            "target": target.get(sentiment, 0.0),
            "realized": want / total if total else 0.0,
        }
    return weighted, report


# ---------------------------------------------------------------------------
# Generation clients
# ---------------------------------------------------------------------------


@dataclass
class ClientConfig:
    model_id: str = "gpt-3.5-turbo-0613"
    endpoint: str = "https://api.openai.com/v1/chat/completions"
    api_key_env: str = "OPENAI_API_KEY"
    request_params: dict = field(default_factory=lambda: dict(DEFAULT_REQUEST_PARAMS))
    max_retries: int = 5
    backoff_base: float = 1.0
    max_in_flight: int = 4


class MockChatClient:
    """Deterministic offline client: echoes a canned function of the prompt."""

    def __init__(self, responder: Callable[[PromptJob], str] | None = None,
                 model_id: str = "mock-model"):
        self.responder = responder or (
            lambda job: f"The food was tasty. A {job.sentiment} {job.cuisine} experience."
        )
        self.model_id = model_id
        self.calls = 0

    def complete(self, job: PromptJob, prompt: str) -> str:
        self.calls += 1
        return self.responder(job)


class HttpChatClient:
    """Chat-completion client with bounded exponential backoff."""

    def __init__(self, config: ClientConfig, session: requests.Session | None = None):
        self.config = config
        self.session = session or requests.Session()
        key = os.environ.get(config.api_key_env)
        if not key:
            raise RuntimeError(f"API key environment variable {config.api_key_env} is not set")
        self._headers = {"Authorization": f"Bearer {key}"}
        self.model_id = config.model_id

    def complete(self, job: PromptJob, prompt: str) -> str:
        payload = {
            "model": self.config.model_id,
            "messages": [{"role": "user", "content": prompt}],
            **self.config.request_params,
        }
        delay = self.config.backoff_base
        last_error: Exception | None = None
        for attempt in range(self.config.max_retries):
            try:
                resp = self.session.post(
                    self.config.endpoint, json=payload, headers=self._headers, timeout=60
                )
                if resp.status_code == 429 or resp.status_code >= 500:
                    raise RuntimeError(f"retryable status {resp.status_code}")
                resp.raise_for_status()
                return resp.json()["choices"][0]["message"]["content"]
            except Exception as exc:  # noqa: BLE001 - every failure is retried
                last_error = exc
                log.warning("generation attempt %d failed: %s", attempt + 1, exc)
                if attempt + 1 < self.config.max_retries:
                    time.sleep(delay)
                    delay = min(delay * 2, 60.0)
        raise RuntimeError(f"job failed after {self.config.max_retries} attempts: {last_error}")


def generate(
    jobs: Sequence[PromptJob],
    client,
    raw_path: str | Path,
    patterns: Sequence[str] | None = None,
    max_in_flight: int = 4,
) -> tuple[list[GeneratedReview], list[dict]]:
    """Run the prompt grid through a client, persisting raw responses
    before sanitization.

    Requests are issued with a bounded in-flight cap; the append-only
    raw JSONL is written by a single lock-guarded writer. Failed jobs
    are recorded and the run continues.
    """
    patterns = patterns if patterns is not None else load_disclaimer_patterns()
    write_lock = threading.Lock()
    reviews: list[GeneratedReview | None] = [None] * len(jobs)
    failures: list[dict] = []

    def run_one(idx: int, job: PromptJob):
        prompt = render_prompt(job)
        raw = client.complete(job, prompt)
        created = datetime.now(timezone.utc).isoformat()
        record = {
            "job": job._asdict(),
            "prompt": prompt,
            "model_id": client.model_id,
            "raw_text": raw,
            "request_params": getattr(getattr(client, "config", None), "request_params",
                                      dict(DEFAULT_REQUEST_PARAMS)),
            "created_at": created,
        }
        with write_lock:
            with open(raw_path, "a", encoding="utf-8") as fh:
                fh.write(json.dumps(record) + "\n")
        clean, discarded = strip_disclaimers(raw, patterns)
        reviews[idx] = GeneratedReview(job, client.model_id, raw, clean, created, discarded)

    with ThreadPoolExecutor(max_workers=max_in_flight) as pool:
        futures = {pool.submit(run_one, i, job): (i, job) for i, job in enumerate(jobs)}
        for future, (i, job) in futures.items():
            try:
                future.result()
            except Exception as exc:  # noqa: BLE001
                log.error("job %d failed permanently: %s", i, exc)
                failures.append({"job": job._asdict(), "error": str(exc)})
    return [r for r in reviews if r is not None], failures


def sanitize_raw_responses(
    raw_path: str | Path, patterns: Sequence[str] | None = None
) -> list[GeneratedReview]:
    """Rebuild the sanitized dataset from persisted raw responses."""
    patterns = patterns if patterns is not None else load_disclaimer_patterns()
    out = []
    with open(raw_path, encoding="utf-8") as fh:
        for line in fh:
            if not line.strip():
                continue
            rec = json.loads(line)
            clean, discarded = strip_disclaimers(rec["raw_text"], patterns)
            out.append(
                GeneratedReview(
                    job=PromptJob(**rec["job"]),
                    model_id=rec["model_id"],
                    raw_text=rec["raw_text"],
                    clean_text=clean,
                    created_at=rec["created_at"],
                    discarded=discarded,
                )
            )
    return out
