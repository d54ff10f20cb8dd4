"""OEIS b-files: parsing, writing, fixtures and cross-checks.

A b-file is plain text, one ``index value`` pair per line; ``#`` lines are
comments. Fixtures live in a directory of ``bNNNNNN.txt`` files next to a
``manifest.json`` recording where each file came from.
"""
from __future__ import annotations

import json
import os
import re
import urllib.error
import urllib.request
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from .core import Family, SequenceId
from .recurrence import sequence_terms

ID_PATTERN = re.compile(r"A\d{6}")
BFILE_URL = "https://oeis.org/{id}/b{digits}.txt"
FIXTURES_ENV = "SCHREIER_FIXTURES"
MANIFEST = "manifest.json"

SELF_REFERENTIAL = "self-referential"
RECONSTRUCTED = "reconstructed"
FETCHED = "fetched"


class BFileParseError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class NonContiguousIndex(BFileParseError):
    pass


class InvalidIdentifier(ValueError):
    pass


class NetworkError(OSError):
    pass


class HttpStatusError(NetworkError):
    def __init__(self, status: int, url: str):
        self.status = status
        super().__init__(f"HTTP {status} for {url}")


class WindowOutOfRange(ValueError):
    pass


def check_identifier(identifier: str) -> str:
    if not isinstance(identifier, str) or not ID_PATTERN.fullmatch(identifier):
        raise InvalidIdentifier(f"not an OEIS identifier: {identifier!r}")
    return identifier


@dataclass(frozen=True)
class BFile:
    sequence_id: Optional[str]
    entries: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        if self.sequence_id is not None:
            check_identifier(self.sequence_id)
        entries = tuple((int(i), int(v)) for i, v in self.entries)
        object.__setattr__(self, "entries", entries)
        for (a, _), (b, _) in zip(entries, entries[1:]):
            if b != a + 1:
                raise NonContiguousIndex(f"index {b} follows {a}")

    @property
    def first_index(self) -> int:
        return self.entries[0][0]

    @property
    def last_index(self) -> int:
        return self.entries[-1][0]

    @property
    def values(self) -> List[int]:
        return [v for _, v in self.entries]

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, index: int) -> bool:
        return bool(self.entries) and self.first_index <= index <= self.last_index

    def value_at(self, index: int) -> int:
        if index not in self:
            raise KeyError(index)
        return self.entries[index - self.first_index][1]


def parse_bfile(text: str, sequence_id: Optional[str] = None) -> BFile:
    entries = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise BFileParseError(f"expected 'index value', got {raw!r}", lineno)
        try:
            idx, val = int(parts[0]), int(parts[1])
        except ValueError:
            raise BFileParseError(f"non-integer field in {raw!r}", lineno) from None
        if entries and idx != entries[-1][0] + 1:
            raise NonContiguousIndex(f"index {idx} follows {entries[-1][0]}", lineno)
        entries.append((idx, val))
    return BFile(sequence_id, tuple(entries))


def format_bfile(entries) -> str:
    """``index value`` lines joined by newlines, no trailing newline."""
    return "\n".join(f"{i} {v}" for i, v in entries)


def write_bfile(seq: SequenceId, offset: int, count: int) -> str:
    if count < 1:
        raise ValueError("count must be at least 1")
    values = sequence_terms(seq, offset, count)
    return format_bfile(zip(range(offset, offset + count), values))


# ---------------------------------------------------------------------------
# Fixture directory
# ---------------------------------------------------------------------------

def default_fixtures_dir() -> Path:
    env = os.environ.get(FIXTURES_ENV)
    if env:
        return Path(env)
    return Path(str(resources.files("schreier") / "fixtures"))


def fixture_path(identifier: str, fixtures_dir: Union[str, Path, None] = None) -> Path:
    check_identifier(identifier)
    base = Path(fixtures_dir) if fixtures_dir is not None else default_fixtures_dir()
    return base / f"b{identifier[1:]}.txt"


def load_manifest(fixtures_dir: Union[str, Path, None] = None) -> Dict[str, dict]:
    base = Path(fixtures_dir) if fixtures_dir is not None else default_fixtures_dir()
    path = base / MANIFEST
    if not path.exists():
        return {}
    return json.loads(path.read_text())


def save_manifest(manifest: Dict[str, dict], fixtures_dir: Union[str, Path]) -> None:
    path = Path(fixtures_dir) / MANIFEST
    path.write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n")


def load_fixture(identifier: str, fixtures_dir: Union[str, Path, None] = None) -> BFile:
    return parse_bfile(fixture_path(identifier, fixtures_dir).read_text(), identifier)


def fetch_bfile(
    identifier: str,
    *,
    fixtures_dir: Union[str, Path, None] = None,
    allow_network: bool = False,
    refresh: bool = False,
    timeout: float = 30.0,
) -> BFile:
    """Fixture from disk if present, otherwise (when allowed) download and cache it."""
    check_identifier(identifier)
    path = fixture_path(identifier, fixtures_dir)
    if path.exists() and not refresh:
        return parse_bfile(path.read_text(), identifier)
    if not allow_network:
        raise NetworkError(f"no fixture for {identifier} at {path} and network fetch is disabled")
    url = BFILE_URL.format(id=identifier, digits=identifier[1:])
    try:
        with urllib.request.urlopen(url, timeout=timeout) as resp:
            text = resp.read().decode("utf-8")
    except urllib.error.HTTPError as exc:
        raise HttpStatusError(exc.code, url) from exc
    except (urllib.error.URLError, TimeoutError) as exc:
        raise NetworkError(f"fetching {url}: {exc}") from exc
    bfile = parse_bfile(text, identifier)
    if fixtures_dir is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(format_bfile(bfile.entries) + "\n")
        manifest = load_manifest(fixtures_dir)
        manifest[identifier] = {"provenance": FETCHED, "source": url}
        save_manifest(manifest, fixtures_dir)
    return bfile


# ---------------------------------------------------------------------------
# Cross-checks
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CrossCheckRule:
    """local value at n equals remote value at n + shift, over ``window``.

    ``window`` is an inclusive range of local indices; ``None`` means every
    local index whose shifted image the remote file covers.
    """

    name: str
    local: SequenceId
    remote_id: str
    shift: int = 0
    window: Optional[Tuple[int, int]] = None

    def __post_init__(self):
        check_identifier(self.remote_id)


def _rule(local: str, k: Optional[int], remote: str, shift: int) -> CrossCheckRule:
    seq = SequenceId(Family(local), k)
    return CrossCheckRule(f"{seq}_vs_{remote}", seq, remote, shift)


RULES: Dict[str, CrossCheckRule] = {
    r.name: r
    for r in [
        _rule("s", 1, "A000045", 0),
        _rule("s", 2, "A005314", 0),
        _rule("s", 3, "A385106", 0),
        _rule("s", 4, "A385107", 0),
        _rule("sm", 1, "A212804", -1),
        _rule("sm", 2, "A005251", -1),
        _rule("sm", 3, "A375169", 0),
        _rule("sm", 4, "A385142", 0),
        _rule("a", 1, "A000045", 1),
        _rule("a", 2, "A000931", 6),
        _rule("a", 3, "A079398", 3),
        _rule("a", 4, "A103372", 4),
        _rule("am", 1, "A212804", 0),
        _rule("am", 2, "A000931", 1),
        _rule("am", 3, "A017817", -2),
        _rule("am", 4, "A017827", -2),
    ]
}


@dataclass
class CrossCheckReport:
    rule: str
    remote_id: str
    provenance: str
    rows: List[Tuple[int, int, int, int]] = field(default_factory=list)

    @property
    def mismatches(self) -> List[Tuple[int, int, int, int]]:
        return [r for r in self.rows if r[2] != r[3]]

    @property
    def passed(self) -> bool:
        return bool(self.rows) and not self.mismatches

    @property
    def self_referential(self) -> bool:
        return self.provenance == SELF_REFERENTIAL

    def summary(self) -> str:
        lo, hi = self.rows[0][0], self.rows[-1][0]
        status = "PASS" if self.passed else "FAIL"
        line = (f"{status} {self.rule}: n={lo}..{hi} ({len(self.rows)} terms) "
                f"against {self.remote_id} [{self.provenance}]")
        if self.self_referential:
            line += " (fixture generated by this library; not independent)"
        return line

    def to_dict(self) -> dict:
        return {
            "rule": self.rule,
            "remote_id": self.remote_id,
            "provenance": self.provenance,
            "self_referential": self.self_referential,
            "passed": self.passed,
            "rows": [
                {"n": n, "remote_index": m, "local": a, "remote": b}
                for n, m, a, b in self.rows
            ],
        }


def cross_check(rule: CrossCheckRule, remote: BFile, provenance: str = "unknown") -> CrossCheckReport:
    first_local = rule.local.family.first_index
    if rule.window is None:
        if not remote.entries:
            raise WindowOutOfRange(f"{remote.sequence_id} has no entries")
        lo = max(first_local, remote.first_index - rule.shift)
        hi = remote.last_index - rule.shift
    else:
        lo, hi = rule.window
        if lo < first_local:
            raise WindowOutOfRange(f"{rule.local} starts at index {first_local}, window starts at {lo}")
        if lo + rule.shift not in remote or hi + rule.shift not in remote:
            raise WindowOutOfRange(
                f"window {lo}..{hi} shifted by {rule.shift} leaves "
                f"{remote.sequence_id} range {remote.first_index}..{remote.last_index}"
            )
    if hi < lo:
        raise WindowOutOfRange(f"empty window {lo}..{hi}")
    local = sequence_terms(rule.local, lo, hi - lo + 1)
    rows = [
        (n, n + rule.shift, a, remote.value_at(n + rule.shift))
        for n, a in zip(range(lo, hi + 1), local)
    ]
    return CrossCheckReport(rule.name, rule.remote_id, provenance, rows)


def check_rule(name: str, fixtures_dir: Union[str, Path, None] = None,
               allow_network: bool = False) -> CrossCheckReport:
    rule = RULES[name]
    remote = fetch_bfile(rule.remote_id, fixtures_dir=fixtures_dir, allow_network=allow_network)
    provenance = load_manifest(fixtures_dir).get(rule.remote_id, {}).get("provenance", "unknown")
    return cross_check(rule, remote, provenance)
