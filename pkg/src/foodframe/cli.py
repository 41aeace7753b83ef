"""Command-line pipeline: ingest -> extract -> score -> logodds/regress -> report.

Each stage reads the previous stage's artifacts from the output
directory, writes its own as flat columnar files, and records a
manifest (config echo, input/output content hashes, row counts) so runs
are auditable and byte-reproducible. A missing upstream artifact is a
hard error naming the file.

Config is a JSON file (TOML works on Python 3.11+); see README for the
schema. API credentials are only ever read from the environment.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import logging
import re
import sys
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
import pandas as pd

from . import audit as audit_mod
from . import ingest as ingest_mod
from .census import CensusTable
from .extract import FramingFeature, load_anchor_sets, load_dish_names
from .lexicons import load_lexicons
from .logodds import frame_filtered_log_odds
from .parses import read_conllu
from .pipeline import extract_corpus, features_frame, merge_tables, score_corpus
from .regression import STUDIES, StudyConfig, run_study, significance_stars

log = logging.getLogger(__name__)

CSV_FLOAT_FORMAT = "%.12g"


@dataclass
class PipelineConfig:
    businesses: str = ""
    reviews: str = ""
    parses: str = ""
    coref: str = ""
    census: str = ""
    out_dir: str = "out"
    seed: int = 0
    sample: int | None = None
    studies: list[str] = field(default_factory=lambda: ["study1a", "study1b", "study2", "glass_ceiling"])
    chain_threshold: int = 5
    drop_cajun_creole: bool = False
    exclude_nonlocal_for_outsider: bool = True
    min_n: int = 30
    z_min: float = 2.0
    top_k: int = 10
    audit: dict = field(default_factory=dict)

    @classmethod
    def load(cls, path: str | Path) -> "PipelineConfig":
        path = Path(path)
        if path.suffix == ".toml":
            try:
                import tomllib  # Python 3.11+
            except ImportError as exc:
                raise SystemExit(
                    "TOML config needs Python 3.11+; use a JSON config instead"
                ) from exc
            obj = tomllib.loads(path.read_text(encoding="utf-8"))
        else:
            obj = json.loads(path.read_text(encoding="utf-8"))
        known = {f for f in cls.__dataclass_fields__}
        unknown = set(obj) - known
        if unknown:
            raise SystemExit(f"unknown config keys: {sorted(unknown)}")
        return cls(**obj)


def _sha256(path: Path) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(1 << 20), b""):
            h.update(chunk)
    return h.hexdigest()


def _require(path: Path, hint: str) -> Path:
    if not path.exists():
        raise SystemExit(f"missing input artifact: {path} (run `foodframe {hint}` first)")
    return path


def _write_csv(df: pd.DataFrame, path: Path) -> None:
    df.to_csv(path, index=False, float_format=CSV_FLOAT_FORMAT)


def _write_manifest(stage: str, config: PipelineConfig, inputs, outputs, rows) -> Path:
    out_dir = Path(config.out_dir)
    manifest = {
        "stage": stage,
        "config": {k: getattr(config, k) for k in config.__dataclass_fields__},
        "inputs": {str(p): _sha256(Path(p)) for p in inputs},
        "outputs": {str(p): _sha256(Path(p)) for p in outputs},
        "rows": rows,
    }
    path = out_dir / f"manifest_{stage}.json"
    path.write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    return path


def cmd_ingest(config: PipelineConfig) -> int:
    out_dir = Path(config.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    businesses_path = _require(Path(config.businesses), "ingest")
    reviews_path = _require(Path(config.reviews), "ingest")

    filters = ingest_mod.FilterConfig(
        chain_threshold=config.chain_threshold,
        drop_cajun_creole=config.drop_cajun_creole,
    )
    businesses = ingest_mod.load_businesses(businesses_path, filters=filters)
    reviews = ingest_mod.load_reviews(reviews_path, businesses)

    reviews_df = reviews.to_frame()
    if config.sample is not None and config.sample < len(reviews_df):
        reviews_df = reviews_df.sample(
            n=config.sample, random_state=config.seed
        ).sort_index()

    patterns = ingest_mod.load_nonlocal_patterns()
    compiled = [re.compile(p, re.IGNORECASE) for p in patterns]
    reviews_df["nonlocal"] = [
        bool(any(rx.search(t) for rx in compiled)) for t in reviews_df["text"]
    ]

    b_csv = out_dir / "businesses.csv"
    r_csv = out_dir / "reviews.csv"
    cache = out_dir / "tables.pkl"
    drop_json = out_dir / "drop_report.json"
    businesses_df = businesses.to_frame().sort_values("business_id")
    reviews_df = reviews_df.sort_values("review_id")
    _write_csv(businesses_df, b_csv)
    _write_csv(reviews_df, r_csv)
    ingest_mod.save_cache({"businesses": businesses_df, "reviews": reviews_df}, cache)
    drop_json.write_text(
        json.dumps(
            {"businesses": businesses.drop_report, "reviews": reviews.drop_report},
            indent=2, sort_keys=True,
        ) + "\n",
        encoding="utf-8",
    )
    _write_manifest(
        "ingest", config, [businesses_path, reviews_path],
        [b_csv, r_csv, cache, drop_json],
        {"businesses": len(businesses), "reviews": int(len(reviews_df))},
    )
    print(f"ingest: {len(businesses)} businesses, {len(reviews_df)} reviews -> {out_dir}")
    return 0


def _stream_parses(config: PipelineConfig, keep: set[str], token_counts: dict | None = None):
    for review in read_conllu(Path(config.parses), config.coref or None):
        if review.review_id not in keep:
            continue
        if token_counts is not None:
            token_counts[review.review_id] = review.n_tokens
        yield review


def cmd_extract(config: PipelineConfig) -> int:
    out_dir = Path(config.out_dir)
    parses_path = _require(Path(config.parses), "extract")
    reviews_csv = _require(out_dir / "reviews.csv", "ingest")

    keep = set(pd.read_csv(reviews_csv)["review_id"].astype(str))
    anchors = load_anchor_sets()
    dishes = load_dish_names()
    token_counts: dict[str, int] = {}
    features = extract_corpus(_stream_parses(config, keep, token_counts), anchors, dishes)
    f_csv = out_dir / "features.csv"
    _write_csv(features_frame(features).sort_values(["review_id", "sentence", "anchor", "token"]), f_csv)

    parsed_ids = out_dir / "parsed_reviews.json"
    parsed_ids.write_text(
        json.dumps(token_counts, indent=0, sort_keys=True) + "\n", encoding="utf-8"
    )
    inputs = [parses_path, reviews_csv] + ([Path(config.coref)] if config.coref else [])
    _write_manifest("extract", config, inputs, [f_csv, parsed_ids],
                    {"reviews_parsed": len(token_counts), "features": len(features)})
    print(f"extract: {len(features)} features from {len(token_counts)} parsed reviews")
    return 0


def _read_features_csv(path: Path) -> list[FramingFeature]:
    # keep_default_na: lemmas like "null" must stay strings
    df = pd.read_csv(path, dtype={"review_id": str}, keep_default_na=False)
    return [
        FramingFeature(r.review_id, r.lemma, r.category, int(r.sentence),
                       r.path, int(r.token), int(r.anchor))
        for r in df.itertuples(index=False)
    ]


def cmd_score(config: PipelineConfig) -> int:
    out_dir = Path(config.out_dir)
    parses_path = _require(Path(config.parses), "extract")
    features_csv = _require(out_dir / "features.csv", "extract")
    reviews_csv = _require(out_dir / "reviews.csv", "ingest")

    keep = set(pd.read_csv(reviews_csv)["review_id"].astype(str))
    lexicons = load_lexicons()
    features = _read_features_csv(features_csv)
    scores = score_corpus(_stream_parses(config, keep), features, lexicons)
    s_csv = out_dir / "scores.csv"
    _write_csv(scores.sort_values("review_id"), s_csv)
    _write_manifest("score", config, [parses_path, features_csv], [s_csv],
                    {"reviews_scored": len(scores)})
    print(f"score: {len(scores)} reviews scored")
    return 0


def _merged_table(config: PipelineConfig) -> pd.DataFrame:
    out_dir = Path(config.out_dir)
    scores = pd.read_csv(_require(out_dir / "scores.csv", "score"))
    reviews = pd.read_csv(_require(out_dir / "reviews.csv", "ingest"))
    businesses = pd.read_csv(
        _require(out_dir / "businesses.csv", "ingest"),
        dtype={"zipcode": str},
    )
    census = CensusTable.read_csv(_require(Path(config.census), "ingest"))

    meta_rows = []
    for b in businesses.itertuples(index=False):
        meta = census.get(str(b.zipcode))
        if meta is None:
            log.warning("business %s: zipcode %s not in census, flagged", b.business_id, b.zipcode)
            continue
        meta_rows.append(
            {
                "business_id": b.business_id,
                "region": b.region,
                "price_tier": int(b.price_tier),
                "stars": float(b.mean_stars),
                "income": meta.median_income,
                "diversity": meta.diversity,
                "pct_asian": meta.pct_asian,
                "pct_hispanic": meta.pct_hispanic,
            }
        )
    biz = pd.DataFrame(meta_rows)
    scores["review_id"] = scores["review_id"].astype(str)
    reviews["review_id"] = reviews["review_id"].astype(str)
    cov = reviews[["review_id", "business_id", "user_id", "token_count", "nonlocal"]].rename(
        columns={"token_count": "length"}
    )
    merged = merge_tables(scores, cov).merge(biz, on="business_id", how="inner")
    return merged


def cmd_logodds(config: PipelineConfig) -> int:
    out_dir = Path(config.out_dir)
    features_csv = _require(out_dir / "features.csv", "extract")
    reviews_csv = _require(out_dir / "reviews.csv", "ingest")
    businesses_csv = _require(out_dir / "businesses.csv", "ingest")

    reviews = pd.read_csv(reviews_csv, dtype={"review_id": str})
    businesses = pd.read_csv(businesses_csv)
    region_of_business = dict(zip(businesses["business_id"], businesses["region"]))
    regions = {
        str(r.review_id): region_of_business.get(r.business_id)
        for r in reviews.itertuples(index=False)
    }

    features = _read_features_csv(features_csv)
    lexicons = load_lexicons()
    outputs = []
    rows = {}
    all_regions = sorted({v for v in regions.values() if v})
    records = []
    for lexicon in lexicons:
        for region in all_regions:
            entries = frame_filtered_log_odds(features, lexicon, regions, region)
            for e in entries:
                records.append(
                    {"frame": lexicon.name, "group": region, "word": e.word,
                     "delta": e.delta, "n_c": e.n_c, "n_notc": e.n_notc,
                     "n_prior": e.n_prior}
                )
    lo_csv = out_dir / "logodds.csv"
    df = pd.DataFrame(records, columns=["frame", "group", "word", "delta", "n_c", "n_notc", "n_prior"])
    _write_csv(df.sort_values(["frame", "group", "delta", "word"],
                              ascending=[True, True, False, True]), lo_csv)
    outputs.append(lo_csv)
    rows["logodds_entries"] = len(df)
    _write_manifest("logodds", config, [features_csv, reviews_csv, businesses_csv], outputs, rows)
    print(f"logodds: {len(df)} entries across {len(all_regions)} regions")
    return 0


def cmd_regress(config: PipelineConfig) -> int:
    out_dir = Path(config.out_dir)
    merged = _merged_table(config)
    study_config = StudyConfig(min_n=config.min_n)

    records = []
    skipped = []
    for study in config.studies:
        if study not in STUDIES:
            raise SystemExit(f"unknown study {study!r}; expected one of {STUDIES}")
        table = merged
        if study == "study1b" and config.exclude_nonlocal_for_outsider:
            table = merged[~merged["nonlocal"]]
        for model in run_study(study, table, study_config):
            if model.result is None:
                skipped.append(
                    {"study": model.study, "outcome": model.outcome,
                     "subsample": model.subsample, "reason": model.skip_reason}
                )
                continue
            frame = model.result.to_frame()
            frame.insert(0, "study", model.study)
            frame.insert(1, "outcome", model.outcome)
            frame.insert(2, "subsample", model.subsample)
            frame["n"] = model.result.n
            frame["r_squared"] = model.result.r_squared
            frame["max_vif"] = model.max_vif
            records.append(frame)

    out_csv = out_dir / "regressions.csv"
    if records:
        _write_csv(pd.concat(records, ignore_index=True), out_csv)
    else:
        _write_csv(pd.DataFrame(
            columns=["study", "outcome", "subsample", "term", "estimate", "se",
                     "t", "p", "ci_low", "ci_high", "stars", "n", "r_squared", "max_vif"]
        ), out_csv)
    skipped_json = out_dir / "regressions_skipped.json"
    skipped_json.write_text(json.dumps(skipped, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    _write_manifest(
        "regress", config,
        [out_dir / "scores.csv", out_dir / "reviews.csv", out_dir / "businesses.csv", Path(config.census)],
        [out_csv, skipped_json],
        {"models": len(records), "skipped": len(skipped)},
    )
    print(f"regress: wrote {out_csv} ({len(skipped)} models skipped)")
    return 0


def cmd_audit(config: PipelineConfig) -> int:
    out_dir = Path(config.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    settings = dict(config.audit)
    cmap = ingest_mod.CuisineRegionMap.load()
    grid = audit_mod.GridConfig(
        templates=tuple(settings.get("templates", (1,))),
        cuisines=tuple(settings.get("cuisines", sorted(cmap.entries))),
        price_tiers=tuple(settings.get("price_tiers", (1, 2, 3, 4))),
        sentiments=tuple(settings.get("sentiments", audit_mod.SENTIMENTS)),
        foci=tuple(settings.get("foci", audit_mod.FOCI)),
    )
    jobs = audit_mod.expand_prompts(grid)
    target = settings.get("sentiment_target")
    if target:
        jobs, report = audit_mod.match_sentiment_distribution(jobs, target)
        log.info("sentiment distribution: %s", report)

    client_kind = settings.get("client", "mock")
    if client_kind == "mock":
        client = audit_mod.MockChatClient()
    elif client_kind == "http":
        client = audit_mod.HttpChatClient(
            audit_mod.ClientConfig(
                model_id=settings.get("model_id", "gpt-3.5-turbo-0613"),
                endpoint=settings.get("endpoint", audit_mod.ClientConfig.endpoint),
            )
        )
    else:
        raise SystemExit(f"unknown audit client {client_kind!r}")

    raw_path = out_dir / "audit_raw.jsonl"
    reviews, failures = audit_mod.generate(jobs, client, raw_path)
    kept = [r for r in reviews if not r.discarded]
    stratified = audit_mod.stratify(kept, cmap.entries.__getitem__, seed=config.seed)

    reviews_path = out_dir / "audit_reviews.jsonl"
    with open(reviews_path, "w", encoding="utf-8") as fh:
        for review in stratified:
            fh.write(json.dumps(review.to_record(), sort_keys=True) + "\n")
    failures_path = out_dir / "audit_failures.json"
    failures_path.write_text(json.dumps(failures, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    _write_manifest("audit", config, [], [raw_path, reviews_path, failures_path],
                    {"jobs": len(jobs), "generated": len(reviews),
                     "stratified": len(stratified), "failures": len(failures)})
    print(f"audit: {len(jobs)} jobs -> {len(stratified)} stratified reviews")
    return 0


def cmd_report(config: PipelineConfig) -> int:
    out_dir = Path(config.out_dir)
    regress_csv = _require(out_dir / "regressions.csv", "regress")
    logodds_csv = _require(out_dir / "logodds.csv", "logodds")
    report_dir = out_dir / "report"
    report_dir.mkdir(parents=True, exist_ok=True)
    outputs = []

    coef = pd.read_csv(regress_csv)
    coef["stars"] = [significance_stars(p) for p in coef["p"]]
    for study in sorted(coef["study"].unique()):
        sub = coef[coef["study"] == study]
        path = report_dir / f"coefficients_{study}.csv"
        _write_csv(sub, path)
        outputs.append(path)
        (report_dir / f"coefficients_{study}.json").write_text(
            sub.to_json(orient="records", indent=2) + "\n", encoding="utf-8"
        )
        outputs.append(report_dir / f"coefficients_{study}.json")

    lo = pd.read_csv(logodds_csv)
    top_rows = []
    for (frame, group), sub in lo.groupby(["frame", "group"]):
        sub = sub.sort_values("delta", ascending=False)
        keep = sub[sub["delta"] >= config.z_min].head(config.top_k)
        top_rows.append(keep)
    top = pd.concat(top_rows, ignore_index=True) if top_rows else lo.head(0)
    top_path = report_dir / "top_features.csv"
    _write_csv(top, top_path)
    outputs.append(top_path)

    merged = _merged_table(config)
    distributions = {}
    for col in ("price_tier", "stars", "income", "diversity"):
        series = merged.drop_duplicates("business_id")[col]
        if col == "price_tier":
            counts = series.value_counts().sort_index()
            distributions[col] = {"values": counts.index.tolist(),
                                  "counts": counts.tolist()}
        else:
            counts, edges = np.histogram(series.to_numpy(dtype=float), bins=10)
            distributions[col] = {"bin_edges": edges.tolist(), "counts": counts.tolist()}
    dist_path = report_dir / "covariate_distributions.json"
    dist_path.write_text(json.dumps(distributions, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    outputs.append(dist_path)

    _write_manifest("report", config, [regress_csv, logodds_csv], outputs,
                    {"coefficient_rows": len(coef), "top_features": len(top)})
    print(f"report: wrote {len(outputs)} files under {report_dir}")
    return 0


STAGES = {
    "ingest": cmd_ingest,
    "extract": cmd_extract,
    "score": cmd_score,
    "logodds": cmd_logodds,
    "regress": cmd_regress,
    "audit": cmd_audit,
    "report": cmd_report,
}


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(prog="foodframe",
                                     description="Review framing analysis pipeline")
    parser.add_argument("stage", choices=list(STAGES) + ["run"],
                        help="pipeline stage to execute ('run' = all except audit)")
    parser.add_argument("--config", required=True, help="pipeline config (JSON; TOML on 3.11+)")
    parser.add_argument("--sample", type=int, default=None, help="desk-scale subset of reviews")
    parser.add_argument("--seed", type=int, default=None, help="override config seed")
    parser.add_argument("-v", "--verbose", action="store_true")
    args = parser.parse_args(argv)

    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    config = PipelineConfig.load(args.config)
    if args.sample is not None:
        config.sample = args.sample
    if args.seed is not None:
        config.seed = args.seed

    try:
        if args.stage == "run":
            for name in ("ingest", "extract", "score", "logodds", "regress", "report"):
                rc = STAGES[name](config)
                if rc != 0:
                    return rc
            return 0
        return STAGES[args.stage](config)
    except SystemExit as exc:
        if isinstance(exc.code, int):
            return exc.code
        print(f"error: {exc.code}", file=sys.stderr)
        return 2
    except Exception as exc:  # surface a clean message, nonzero exit
        log.error("%s failed: %s", args.stage, exc)
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
