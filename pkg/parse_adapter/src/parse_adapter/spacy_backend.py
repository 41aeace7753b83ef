"""spaCy + Coreferee backend (optional, production parses).

Requires the ``spacy`` extra and an installed English model
(``en_core_web_lg`` recommended; Coreferee needs the lg vectors).
Copular clauses are re-rooted so the adjectival predicate heads the
clause with the copula as its ``cop`` dependent, matching the UD-style
analysis the analysis package extracts from; spaCy's ``neg`` relation
is mapped to ``advmod`` (the cue lemma carries the signal downstream).
"""

from __future__ import annotations

from .builtin import Chain, ParseFailure, Word

BACKEND_NAME = "spacy"

try:
    import spacy
except ImportError as _exc:  # pragma: no cover - exercised only without the extra
    spacy = None
    _IMPORT_ERROR = _exc

_NLP = None
_MODEL = "en_core_web_lg"


def _load():
    global _NLP, BACKEND_VERSION
    if spacy is None:
        raise RuntimeError(
            "spacy backend requested but spacy is not installed; "
            f"pip install 'parse-adapter[spacy]' ({_IMPORT_ERROR})"
        )
    if _NLP is None:
        nlp = spacy.load(_MODEL)
        try:
            nlp.add_pipe("coreferee")
        except Exception:  # pragma: no cover - coreferee optional at runtime
            pass
        _NLP = nlp
    return _NLP


BACKEND_VERSION = "unpinned"
if spacy is not None:  # pragma: no cover
    BACKEND_VERSION = f"spacy-{spacy.__version__}/{_MODEL}"

_COPULAS = {"be"}
_PROMOTED_CHILD_DEPS = {"nsubj", "nsubjpass", "advmod", "neg", "punct", "cc",
                        "conj", "mark", "prep", "npadvmod"}


def _reroot_copula(sent_tokens):
    """Map (head, deprel) pairs so adjectival predicates head the clause."""
    mapping = {}
    for tok in sent_tokens:
        if tok.dep_ == "acomp" and tok.head.lemma_ in _COPULAS:
            cop = tok.head
            mapping[tok.i] = (cop.head.i if cop.head.i != cop.i else tok.i,
                              "root" if cop.dep_ == "ROOT" else cop.dep_)
            mapping[cop.i] = (tok.i, "cop")
            for child in cop.children:
                if child.i != tok.i and child.dep_ in _PROMOTED_CHILD_DEPS:
                    mapping[child.i] = (tok.i, child.dep_)
    return mapping


def parse_review(text: str) -> tuple[list[list[Word]], list[Chain]]:  # pragma: no cover
    nlp = _load()
    doc = nlp(text)
    sentences: list[list[Word]] = []
    sent_starts: list[int] = []
    tok_sent: dict[int, tuple[int, int]] = {}
    for s_idx, sent in enumerate(doc.sents):
        sent_starts.append(sent.start)
        remap = _reroot_copula(list(sent))
        words = []
        for offset, tok in enumerate(sent, start=1):
            tok_sent[tok.i] = (s_idx, offset)
            head_i, dep = remap.get(tok.i, (tok.head.i, tok.dep_))
            if dep in ("ROOT", "root") or head_i == tok.i:
                head, rel = 0, "root"
            else:
                head, rel = head_i - sent.start + 1, dep
            rel = "advmod" if rel == "neg" else rel
            words.append(Word(offset, tok.text, tok.lemma_.lower(), tok.pos_, head, rel))
        if words:
            sentences.append(words)
    if not sentences:
        raise ParseFailure("no sentences")

    chains: list[Chain] = []
    if doc.has_extension("coref_chains") and doc._.coref_chains:
        for chain in doc._.coref_chains:
            mentions = []
            for mention in chain:
                for tok_i in mention.token_indexes:
                    if tok_i in tok_sent:
                        mentions.append(tok_sent[tok_i])
            if len(mentions) >= 2:
                chains.append(Chain(tuple(mentions)))
    return sentences, chains
