import json
from pathlib import Path

import pytest

from parse_adapter.adapter import adapt, read_input

FIXTURES = Path(__file__).parent / "fixtures"
GOLDEN = FIXTURES / "golden"

foodframe_parses = pytest.importorskip(
    "foodframe.parses", reason="round-trip checks need the analysis package"
)


@pytest.fixture(scope="module")
def run(tmp_path_factory):
    out = tmp_path_factory.mktemp("adapted")
    manifest = adapt(FIXTURES / "raw_reviews.ndjson", out, "builtin")
    return out, manifest


def test_reproduces_committed_goldens_byte_identically(run):
    out, _ = run
    assert (out / "reviews.conllu").read_bytes() == (GOLDEN / "reviews.conllu").read_bytes()
    assert (out / "reviews_coref.jsonl").read_bytes() == \
        (GOLDEN / "reviews_coref.jsonl").read_bytes()


def test_deterministic_across_runs(run, tmp_path):
    out, _ = run
    again = tmp_path / "again"
    adapt(FIXTURES / "raw_reviews.ndjson", again, "builtin")
    assert (again / "reviews.conllu").read_bytes() == (out / "reviews.conllu").read_bytes()


def test_output_validates_as_conllu(run):
    out, _ = run
    for line in (out / "reviews.conllu").read_text().splitlines():
        if not line or line.startswith("#"):
            continue
        cols = line.split("\t")
        assert len(cols) == 10
        assert cols[0].isdigit() and cols[6].isdigit()


def test_round_trips_through_parse_reader(run):
    out, manifest = run
    reviews = list(
        foodframe_parses.read_conllu(out / "reviews.conllu", out / "reviews_coref.jsonl")
    )
    # nothing rejected: every document is a valid single-rooted tree
    assert [r.review_id for r in reviews] == list(manifest.token_counts)
    for review in reviews:
        assert review.n_tokens == manifest.token_counts[review.review_id]
    # serialize back out and re-read: identical structures
    tmp = out / "roundtrip.conllu"
    foodframe_parses.write_conllu(reviews, tmp)
    coref_tmp = out / "roundtrip_coref.jsonl"
    foodframe_parses.write_coref_sidecar(reviews, coref_tmp)
    again = list(foodframe_parses.read_conllu(tmp, coref_tmp))
    assert again == reviews


def test_review_ids_match_input_exactly(run):
    out, manifest = run
    input_ids = [rid for rid, _ in read_input(FIXTURES / "raw_reviews.ndjson")]
    assert list(manifest.token_counts) == input_ids
    parsed_ids = [
        r.review_id for r in foodframe_parses.read_conllu(out / "reviews.conllu")
    ]
    assert parsed_ids == input_ids


def test_empty_text_gives_empty_document_and_failure(run):
    out, manifest = run
    failed = {f["review_id"] for f in manifest.failures}
    assert failed == {"r049", "r050"}
    by_id = {
        r.review_id: r for r in foodframe_parses.read_conllu(out / "reviews.conllu")
    }
    assert by_id["r049"].sentences == ()
    assert manifest.token_counts["r049"] == 0


def test_adjectival_predicate_example(run):
    out, _ = run
    by_id = {
        r.review_id: r for r in foodframe_parses.read_conllu(out / "reviews.conllu")
    }
    sent = by_id["r001"].sentences[0]  # "The restaurant was stinky."
    root = next(t for t in sent if t.head == 0)
    assert root.lemma == "stinky" and root.upos == "ADJ"
    subject = next(t for t in sent if t.deprel == "nsubj")
    assert subject.lemma == "restaurant" and subject.head == root.index


def test_generated_review_jsonl_input(tmp_path):
    path = tmp_path / "generated.jsonl"
    records = [
        {"job": {"cuisine": "thai"}, "clean_text": "The curry was spicy.", "model_id": "m"},
        {"job": {"cuisine": "greek"}, "clean_text": "A quaint spot.", "model_id": "m"},
    ]
    path.write_text("\n".join(json.dumps(r) for r in records), encoding="utf-8")
    manifest = adapt(path, tmp_path / "out", "builtin")
    assert manifest.review_count == 2
    ids = [r.review_id for r in foodframe_parses.read_conllu(tmp_path / "out" / "reviews.conllu")]
    assert ids == ["gen-00000", "gen-00001"]


def test_manifest_records_backend_and_input_hash(run):
    out, manifest = run
    assert manifest.backend == "builtin"
    assert manifest.backend_version == "0.1.0"
    assert len(manifest.input_sha256) == 64
    on_disk = json.loads((out / "manifest.json").read_text())
    assert on_disk["backend"] == {"name": "builtin", "version": "0.1.0"}
    assert on_disk["review_count"] == 50


def test_spacy_backend_if_available(tmp_path):
    spacy = pytest.importorskip("spacy")
    try:
        spacy.load("en_core_web_lg")
    except OSError:
        pytest.skip("en_core_web_lg model not installed")
    manifest = adapt(FIXTURES / "raw_reviews.ndjson", tmp_path / "out", "spacy")
    assert manifest.review_count == 50
    reviews = list(foodframe_parses.read_conllu(tmp_path / "out" / "reviews.conllu"))
    assert len(reviews) == 50
