"""Batch conversion of raw review text to CoNLL-U plus coref sidecar.

Input is newline-delimited JSON: either review records carrying
``review_id`` and ``text``, or generated-review records carrying
``clean_text`` (ids are synthesized as gen-NNNNN when absent). Output
follows the contract of the analysis package's parse reader: one
CoNLL-U document per review opened by a ``# review_id = <id>`` comment,
and a JSONL sidecar of coreference chains with 0-based sentence indices
and 1-based inclusive token spans. The manifest records the input hash,
backend identity/version, review count, per-review token counts, and
failures, so regenerated outputs are auditable.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from pathlib import Path

from . import builtin

BACKENDS = {"builtin": builtin}


def get_backend(name: str):
    if name == "spacy":
        from . import spacy_backend  # deferred: heavy optional dependency
        return spacy_backend
    if name not in BACKENDS:
        raise ValueError(f"unknown backend {name!r}; expected builtin or spacy")
    return BACKENDS[name]


@dataclass
class AdapterManifest:
    input_path: str
    input_sha256: str
    backend: str
    backend_version: str
    review_count: int = 0
    token_counts: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)

    def to_json(self) -> str:
        return json.dumps(
            {
                "input": {"path": self.input_path, "sha256": self.input_sha256},
                "backend": {"name": self.backend, "version": self.backend_version},
                "review_count": self.review_count,
                "token_counts": self.token_counts,
                "failures": self.failures,
            },
            indent=2,
            sort_keys=True,
        ) + "\n"


def read_input(path: str | Path) -> list[tuple[str, str]]:
    """(review_id, text) pairs from review NDJSON or generated JSONL."""
    out: list[tuple[str, str]] = []
    with open(path, encoding="utf-8") as fh:
        for i, line in enumerate(fh):
            if not line.strip():
                continue
            rec = json.loads(line)
            if "clean_text" in rec:
                out.append((rec.get("review_id", f"gen-{i:05d}"), rec["clean_text"]))
            else:
                out.append((rec["review_id"], rec.get("text", "")))
    return out


def conllu_lines(review_id: str, sentences) -> list[str]:
    lines = [f"# review_id = {review_id}"]
    for sent in sentences:
        for w in sent:
            lines.append(
                "\t".join(
                    [str(w.index), w.form, w.lemma, w.upos, "_", "_",
                     str(w.head), w.deprel, "_", "_"]
                )
            )
        lines.append("")
    return lines


def adapt(
    input_path: str | Path,
    output_dir: str | Path,
    backend_name: str = "builtin",
) -> AdapterManifest:
    backend = get_backend(backend_name)
    input_path = Path(input_path)
    out = Path(output_dir)
    out.mkdir(parents=True, exist_ok=True)

    manifest = AdapterManifest(
        input_path=str(input_path),
        input_sha256=hashlib.sha256(input_path.read_bytes()).hexdigest(),
        backend=backend.BACKEND_NAME,
        backend_version=backend.BACKEND_VERSION,
    )

    conllu: list[str] = []
    coref_lines: list[str] = []
    for review_id, text in read_input(input_path):
        manifest.review_count += 1
        try:
            if not text.strip():
                raise builtin.ParseFailure("empty text")
            sentences, chains = backend.parse_review(text)
        except builtin.ParseFailure as exc:
            manifest.failures.append({"review_id": review_id, "reason": str(exc)})
            sentences, chains = [], []
        conllu.extend(conllu_lines(review_id, sentences))
        manifest.token_counts[review_id] = sum(len(s) for s in sentences)
        if chains:
            coref_lines.append(
                json.dumps(
                    {
                        "review_id": review_id,
                        "chains": [
                            [{"sent": s, "start": i, "end": i} for s, i in chain.mentions]
                            for chain in chains
                        ],
                    }
                )
            )

    (out / "reviews.conllu").write_text("\n".join(conllu) + "\n", encoding="utf-8")
    (out / "reviews_coref.jsonl").write_text(
        "\n".join(coref_lines) + ("\n" if coref_lines else ""), encoding="utf-8"
    )
    (out / "manifest.json").write_text(manifest.to_json(), encoding="utf-8")
    return manifest
