"""Offline reconstruction of the OEIS fixture files.

Established entries are rebuilt from their published rational generating
functions with a standalone power-series expansion, so the comparison does
not route through this package's own recurrences. Recently contributed
entries with no independent offline source are written from the library and
marked as such.

    python -m schreier.oeis_sources [--out DIR] [--terms N]
"""
from __future__ import annotations

import argparse
from pathlib import Path
from typing import Dict, List, Sequence, Tuple

from .core import SequenceId
from .oeis_io import (RECONSTRUCTED, SELF_REFERENTIAL, default_fixtures_dir,
                      fixture_path, format_bfile, save_manifest)
from .recurrence import sequence_terms

DEFAULT_TERMS = 150

# identifier -> (numerator, denominator) of the g.f., ascending coefficients, offset 0
GENERATING_FUNCTIONS: Dict[str, Tuple[Sequence[int], Sequence[int]]] = {
    "A000045": ([0, 1], [1, -1, -1]),
    "A005314": ([0, 1], [1, -2, 1, -1]),
    "A212804": ([1, -1], [1, -1, -1]),
    "A005251": ([0, 1, -1], [1, -2, 1, -1]),
    "A000931": ([1, 0, -1], [1, 0, -1, -1]),
    "A079398": ([0, 1, 1, 1], [1, 0, 0, -1, -1]),
    "A103372": ([0, 1, 1, 1, 1], [1, 0, 0, 0, -1, -1]),
    "A017817": ([1], [1, 0, 0, -1, -1]),
    "A017827": ([1], [1, 0, 0, 0, -1, -1]),
}

# identifier -> (kind, k, first index)
SELF_GENERATED: Dict[str, Tuple[str, int, int]] = {
    "A385106": ("s", 3, 1),
    "A385107": ("s", 4, 1),
    "A375169": ("sm", 3, 1),
    "A385142": ("sm", 4, 1),
}


def expand_series(num: Sequence[int], den: Sequence[int], terms: int) -> List[int]:
    """First ``terms`` coefficients of num(x)/den(x); den(0) must be +-1."""
    if den[0] not in (1, -1):
        raise ValueError("constant term of the denominator must be a unit")
    out: List[int] = []
    for n in range(terms):
        acc = num[n] if n < len(num) else 0
        for j in range(1, min(n, len(den) - 1) + 1):
            acc -= den[j] * out[n - j]
        out.append(acc * den[0])
    return out


def build_fixtures(out_dir: Path, terms: int = DEFAULT_TERMS) -> Dict[str, dict]:
    out_dir.mkdir(parents=True, exist_ok=True)
    manifest: Dict[str, dict] = {}
    for ident, (num, den) in GENERATING_FUNCTIONS.items():
        values = expand_series(num, den, terms)
        fixture_path(ident, out_dir).write_text(format_bfile(enumerate(values)) + "\n")
        manifest[ident] = {
            "provenance": RECONSTRUCTED,
            "source": f"series expansion of ({num})/({den}), offset 0",
        }
    for ident, (kind, k, first) in SELF_GENERATED.items():
        values = sequence_terms(SequenceId.parse(kind, k), first, terms)
        fixture_path(ident, out_dir).write_text(
            format_bfile(zip(range(first, first + terms), values)) + "\n")
        manifest[ident] = {
            "provenance": SELF_REFERENTIAL,
            "source": f"schreier recurrence backend, {kind} k={k}, offset {first}",
        }
    save_manifest(manifest, out_dir)
    return manifest


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=None)
    ap.add_argument("--terms", type=int, default=DEFAULT_TERMS)
    args = ap.parse_args(argv)
    out = args.out or default_fixtures_dir()
    manifest = build_fixtures(out, args.terms)
    print(f"wrote {len(manifest)} fixtures to {out}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
