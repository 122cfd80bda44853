#!/usr/bin/env python3
"""Write the default corpus spec (and optionally its instances) for inspection."""

import argparse
from collections import Counter
from pathlib import Path

from hypereuler.models.enums import FileFormat
from hypereuler.repositories.hypergraph_repository import HypergraphRepository
from hypereuler.schemas.corpus import CorpusSpec
from hypereuler.services.corpus_service import default_corpus
from hypereuler.services.generator_service import GeneratorService


def write_instances(directory: Path, spec: CorpusSpec) -> int:
    """Write every generated instance as a canonical JSON file named by its key."""
    generator = GeneratorService()
    repository = HypergraphRepository(default_format=FileFormat.JSON)
    directory.mkdir(parents=True, exist_ok=True)
    for item in spec.instances:
        path = directory / (item.key.replace(":", "_") + ".json")
        repository.write(generator.generate(item), path)
    return len(spec.instances)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("output", help="path of the corpus spec JSON file")
    parser.add_argument("--instances", metavar="DIR", default=None, help="also write instance files")
    args = parser.parse_args()

    spec = default_corpus()
    Path(args.output).write_text(spec.to_json() + "\n", encoding="utf-8")

    kinds = Counter(str(item.kind) for item in spec.instances)
    print(f"Wrote {len(spec.instances)} instances to {args.output}")
    for kind, count in sorted(kinds.items()):
        print(f"  {kind:<14} {count}")

    if args.instances:
        written = write_instances(Path(args.instances), spec)
        print(f"Wrote {written} instance files to {args.instances}")


if __name__ == "__main__":
    main()
