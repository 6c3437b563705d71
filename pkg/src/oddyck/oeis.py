"""Load OEIS b-files (bundled or downloaded) and compare them with computed series."""
from __future__ import annotations

import os
import re
import urllib.error
import urllib.request
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Optional

from .series import Series

FIXTURE_ENV = "ODDYCK_FIXTURES"
BFILE_URL = "https://oeis.org/{id}/b{digits}.txt"
NETWORK_TIMEOUT = 10.0

_ID = re.compile(r"A(\d{6})")


class OEISError(Exception):
    pass


class NotFound(OEISError):
    pass


class ParseError(OEISError):
    pass


class NetworkError(OEISError):
    pass


class InsufficientPrecision(OEISError):
    pass


class InsufficientTerms(OEISError):
    pass


@dataclass(frozen=True)
class SequenceRecord:
    id: str
    offset: int
    terms: tuple[int, ...]

    def __post_init__(self):
        if not _ID.fullmatch(self.id):
            raise ValueError(f"{self.id!r} is not an A-number")
        if not self.terms:
            raise ValueError(f"{self.id} has no terms")


def _check_id(id: str) -> str:
    if not _ID.fullmatch(id):
        raise NotFound(f"{id!r} is not an OEIS A-number")
    return id


def parse_bfile(id: str, text: str) -> SequenceRecord:
    """Parse ``index value`` lines; ``#`` comments and blank lines are skipped.

    Indices must be consecutive.
    """
    indices, terms = [], []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise ParseError(f"{id} line {lineno}: expected 'index value', got {line!r}")
        try:
            i, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise ParseError(f"{id} line {lineno}: non-integer field in {line!r}") from None
        if indices and i != indices[-1] + 1:
            raise ParseError(f"{id} line {lineno}: index {i} does not follow {indices[-1]}")
        indices.append(i)
        terms.append(v)
    if not terms:
        raise ParseError(f"{id}: no terms")
    return SequenceRecord(id, indices[0], tuple(terms))


def fixture_dir() -> Path:
    override = os.environ.get(FIXTURE_ENV)
    if override:
        return Path(override)
    return Path(str(resources.files("oddyck") / "fixtures"))


def load(id: str, source: str = "fixture", timeout: float = NETWORK_TIMEOUT) -> SequenceRecord:
    """Read a b-file from the fixture directory or, with ``source="network"``, from oeis.org.

    A network failure raises :class:`NetworkError`; there is no fallback to fixtures.
    """
    digits = _check_id(id)[1:]
    if source == "fixture":
        path = fixture_dir() / f"b{digits}.txt"
        if not path.is_file():
            raise NotFound(f"no fixture for {id} in {path.parent}")
        return parse_bfile(id, path.read_text())
    if source == "network":
        url = BFILE_URL.format(id=id, digits=digits)
        try:
            with urllib.request.urlopen(url, timeout=timeout) as resp:
                text = resp.read().decode("utf-8")
        except urllib.error.HTTPError as e:
            if e.code == 404:
                raise NotFound(f"{id}: {url} returned 404") from e
            raise NetworkError(f"{id}: HTTP {e.code} from {url}") from e
        except (urllib.error.URLError, OSError) as e:
            raise NetworkError(f"{id}: cannot fetch {url}: {e}") from e
        return parse_bfile(id, text)
    raise ValueError(f"unknown source {source!r}")


@dataclass(frozen=True)
class ComparisonReport:
    id: str
    start_power: int
    offset: int
    computed: tuple[int, ...]
    expected: tuple[int, ...]
    first_mismatch: Optional[int]  # position k, 0-based

    @property
    def ok(self) -> bool:
        return self.first_mismatch is None

    @property
    def alignment(self) -> list[tuple[int, int]]:
        """(series power, sequence index) pairs that were compared."""
        return [(self.start_power + k, self.offset + k) for k in range(len(self.computed))]

    def summary(self) -> str:
        head = (f"{self.id}: Z^{self.start_power}.. vs a({self.offset}).., "
                f"{len(self.computed)} terms")
        if self.ok:
            return head + ": all equal"
        k = self.first_mismatch
        power, index = self.alignment[k]
        return (head + f": first mismatch at position {k} "
                f"(Z^{power} = {self.computed[k]}, a({index}) = {self.expected[k]})")


def compare(s: Series, rec: SequenceRecord, start_power: int, count: int) -> ComparisonReport:
    """Compare coefficients of ``Z**start_power ..`` with ``rec.terms[0 ..]``; the alignment is never guessed."""
    if count < 1:
        raise ValueError("count must be positive")
    if start_power + count > s.precision:
        raise InsufficientPrecision(
            f"need Z^{start_power + count - 1}, series known below Z^{s.precision}"
        )
    if count > len(rec.terms):
        raise InsufficientTerms(f"{rec.id} has {len(rec.terms)} terms, {count} requested")
    computed = tuple(s.integer_coefficients(start_power, start_power + count))
    expected = rec.terms[:count]
    mismatch = next((k for k, (a, b) in enumerate(zip(computed, expected)) if a != b), None)
    return ComparisonReport(rec.id, start_power, rec.offset, computed, expected, mismatch)
