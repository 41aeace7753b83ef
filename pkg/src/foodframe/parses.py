"""In-memory token-graph representation of pre-parsed reviews.

Reviews arrive as CoNLL-U (10 tab-separated columns, ``#`` comments),
with review boundaries marked by ``# review_id = <id>`` comment lines
and coreference chains in a JSONL sidecar keyed by review_id:

    {"review_id": "r001", "chains": [[{"sent": 0, "start": 2, "end": 2},
                                      {"sent": 1, "start": 1, "end": 1}], ...]}

``sent`` is a 0-based sentence index; ``start``/``end`` are 1-based
inclusive token indices within the sentence, matching Token.index.
Lemmas are lowercased at read time; all downstream matching is
lemma-based.
"""

from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Iterable, Iterator, NamedTuple, Sequence

log = logging.getLogger(__name__)


class Token(NamedTuple):
    index: int        # 1-based position within the sentence
    form: str
    lemma: str        # lowercased
    upos: str
    head: int         # 0 = sentence root
    deprel: str


class Mention(NamedTuple):
    sent: int
    start: int
    end: int


Sentence = tuple[Token, ...]


class ParsedReview(NamedTuple):
    review_id: str
    sentences: tuple[Sentence, ...]
    coref_chains: tuple[tuple[Mention, ...], ...]

    @property
    def n_tokens(self) -> int:
        return sum(len(s) for s in self.sentences)


class MalformedParseError(ValueError):
    """A review's token graph violates the tree contract."""


def children(sentence: Sequence[Token], index: int) -> list[int]:
    """Indices of tokens governed by ``index``, in surface order.

    ``index`` 0 addresses the virtual root; its children are the
    sentence's root tokens.
    """
    if index < 0 or index > len(sentence):
        raise IndexError(f"token index {index} out of range 1..{len(sentence)}")
    return [tok.index for tok in sentence if tok.head == index]


def child_map(sentence: Sequence[Token]) -> list[list[int]]:
    """children() for every index at once; slot 0 holds the root(s)."""
    kids: list[list[int]] = [[] for _ in range(len(sentence) + 1)]
    for tok in sentence:
        kids[tok.head].append(tok.index)
    return kids


def _check_tree(sentence: Sequence[Token]) -> None:
    n = len(sentence)
    roots = 0
    for tok in sentence:
        if not (0 <= tok.head <= n):
            raise MalformedParseError(f"head {tok.head} out of range at token {tok.index}")
        if tok.head == tok.index:
            raise MalformedParseError(f"token {tok.index} is its own head")
        if tok.head == 0:
            roots += 1
    if roots != 1:
        raise MalformedParseError(f"expected a single root, found {roots}")
    # Walking up from every token must reach 0 without revisiting a node.
    for tok in sentence:
        seen = set()
        cur = tok.index
        while cur != 0:
            if cur in seen:
                raise MalformedParseError(f"head cycle through token {cur}")
            seen.add(cur)
            cur = sentence[cur - 1].head


def _parse_token_line(line: str) -> Token | None:
    cols = line.split("\t")
    if len(cols) != 10:
        raise MalformedParseError(f"expected 10 columns, got {len(cols)}")
    tok_id = cols[0]
    if "-" in tok_id or "." in tok_id:
        return None  # multiword-token range or empty node: use the word lines
    return Token(
        index=int(tok_id),
        form=cols[1],
        lemma=cols[2].lower(),
        upos=cols[3],
        head=int(cols[6]),
        deprel=cols[7],
    )


def read_coref_sidecar(path: str | Path) -> dict[str, list[list[Mention]]]:
    chains_by_review: dict[str, list[list[Mention]]] = {}
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            obj = json.loads(line)
            chains = [
                [Mention(m["sent"], m["start"], m["end"]) for m in chain]
                for chain in obj["chains"]
            ]
            chains_by_review[obj["review_id"]] = chains
    return chains_by_review


def _validate_chains(
    review_id: str,
    sentences: tuple[Sentence, ...],
    chains: list[list[Mention]],
) -> tuple[tuple[Mention, ...], ...]:
    kept = []
    for chain in chains:
        ok = True
        for m in chain:
            if not (0 <= m.sent < len(sentences)):
                ok = False
                break
            n = len(sentences[m.sent])
            if not (1 <= m.start <= m.end <= n):
                ok = False
                break
        if not ok:
            log.warning("review %s: dropping coref chain with dangling span", review_id)
            continue
        if len(chain) < 2:
            log.warning("review %s: dropping coref chain with < 2 mentions", review_id)
            continue
        kept.append(tuple(chain))
    return tuple(kept)


def read_conllu(
    path: str | Path,
    coref_path: str | Path | None = None,
) -> Iterator[ParsedReview]:
    """Stream ParsedReviews from a CoNLL-U file, preserving document order.

    Reviews whose head graph is not a tree are rejected with a logged
    diagnostic naming the review_id; the stream continues.
    """
    coref = read_coref_sidecar(coref_path) if coref_path else {}

    def finish(review_id, sentences, bad_reason):
        if review_id is None:
            return None
        if bad_reason is not None:
            log.error("review %s rejected: %s", review_id, bad_reason)
            return None
        chains = _validate_chains(review_id, tuple(sentences), coref.get(review_id, []))
        return ParsedReview(review_id, tuple(sentences), chains)

    review_id: str | None = None
    sentences: list[Sentence] = []
    tokens: list[Token] = []
    bad: str | None = None

    def close_sentence():
        nonlocal tokens, bad
        if not tokens:
            return
        try:
            _check_tree(tokens)
            sentences.append(tuple(tokens))
        except MalformedParseError as exc:
            bad = bad or str(exc)
        tokens = []

    with open(path, encoding="utf-8") as fh:
        for raw in fh:
            line = raw.rstrip("\n")
            if line.startswith("#"):
                body = line[1:].strip()
                if body.startswith("review_id"):
                    _, _, value = body.partition("=")
                    close_sentence()
                    review = finish(review_id, sentences, bad)
                    if review is not None:
                        yield review
                    review_id, sentences, bad = value.strip(), [], None
                continue
            if not line.strip():
                close_sentence()
                continue
            if review_id is None:
                raise MalformedParseError("token line before any '# review_id =' comment")
            if bad is not None:
                continue
            try:
                tok = _parse_token_line(line)
            except (MalformedParseError, ValueError) as exc:
                bad = str(exc)
                continue
            if tok is not None:
                tokens.append(tok)
    close_sentence()
    review = finish(review_id, sentences, bad)
    if review is not None:
        yield review


def to_conllu(review: ParsedReview) -> str:
    """Serialize back to CoNLL-U; unused columns are written as '_'."""
    lines = [f"# review_id = {review.review_id}"]
    for sent in review.sentences:
        for t in sent:
            lines.append(
                "\t".join(
                    [str(t.index), t.form, t.lemma, t.upos, "_", "_",
                     str(t.head), t.deprel, "_", "_"]
                )
            )
        lines.append("")
    return "\n".join(lines) + "\n"


def write_conllu(reviews: Iterable[ParsedReview], path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for review in reviews:
            fh.write(to_conllu(review))


def write_coref_sidecar(reviews: Iterable[ParsedReview], path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for review in reviews:
            obj = {
                "review_id": review.review_id,
                "chains": [
                    [{"sent": m.sent, "start": m.start, "end": m.end} for m in chain]
                    for chain in review.coref_chains
                ],
            }
            fh.write(json.dumps(obj) + "\n")
