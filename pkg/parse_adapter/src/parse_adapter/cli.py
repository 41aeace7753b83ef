import argparse
import sys

from .adapter import adapt


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="parse-adapter",
        description="Parse raw review text into CoNLL-U + coreference sidecar",
    )
    parser.add_argument("--input", required=True, help="review NDJSON or generated-review JSONL")
    parser.add_argument("--output-dir", required=True)
    parser.add_argument("--backend", default="builtin", choices=["builtin", "spacy"])
    args = parser.parse_args(argv)

    manifest = adapt(args.input, args.output_dir, args.backend)
    print(
        f"{manifest.review_count} reviews parsed with {manifest.backend} "
        f"{manifest.backend_version}; {len(manifest.failures)} failures"
    )
    return 0


if __name__ == "__main__":
    sys.exit(main())
