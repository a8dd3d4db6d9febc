"""Loading, validation and serialization of the stemmer's rule tables.

A rules directory holds four UTF-8 files with one entry per line::

    type1_suffixes.txt   postpositions and other agglutinative suffixes
    type2_suffixes.txt   case markers and bound suffixes
    exceptions.txt       words that are never stripped
    prefixes.txt         prefixes stripped once from the front (default: न)

Lines starting with ``#`` are comments and blank lines are ignored.  Every
entry is normalized on load so matching can be done on normalized words with
plain string comparison.
"""

import hashlib
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from pathlib import Path
from types import MappingProxyType
from typing import Iterable, Mapping

from .errors import MalformedEntry, MissingFile, RuleSetError
from .normalize import is_letter, letter_length, normalize_text

RULE_FILES = {
    "type1_suffixes": "type1_suffixes.txt",
    "type2_suffixes": "type2_suffixes.txt",
    "exceptions": "exceptions.txt",
    "prefixes": "prefixes.txt",
}

# First-vowel rewrites applied to words ending in इक/िक (सामाजिक -> समाजिक).
# Both the dependent sign and the independent vowel forms are covered.
DEFAULT_IK_TRANSFORM = {
    "ा": "",
    "ौ": "ु",
    "ै": "ि",
    "आ": "अ",
    "औ": "उ",
    "ऐ": "इ",
}

MAX_SUFFIX_LETTERS = 6


@dataclass(frozen=True)
class RuleSet:
    type1_suffixes: frozenset = frozenset()
    type2_suffixes: frozenset = frozenset()
    exceptions: frozenset = frozenset()
    prefixes: frozenset = frozenset({"न"})
    ik_transform: Mapping[str, str] = field(
        default_factory=lambda: MappingProxyType(dict(DEFAULT_IK_TRANSFORM))
    )
    min_stem_letters: int = 2

    def __post_init__(self):
        for name in RULE_FILES:
            object.__setattr__(self, name, frozenset(getattr(self, name)))
        object.__setattr__(self, "ik_transform", MappingProxyType(dict(self.ik_transform)))

        if self.min_stem_letters < 1:
            raise RuleSetError("min_stem_letters must be at least 1")
        for name in RULE_FILES:
            for entry in getattr(self, name):
                if not entry:
                    raise RuleSetError(f"{name}: empty entry")
                if normalize_text(entry) != entry:
                    raise RuleSetError(f"{name}: {entry!r} is not normalized")
        clash = (self.type1_suffixes | self.type2_suffixes) & self.exceptions
        if clash:
            raise RuleSetError(f"suffixes equal to exception words: {sorted(clash)}")
        # a rewritten vowel must not be rewritable again, or stemming could cycle
        chained = set(self.ik_transform.values()) & set(self.ik_transform)
        if chained:
            raise RuleSetError(f"ik_transform targets are also sources: {sorted(chained)}")

    @classmethod
    def from_entries(cls, type1=(), type2=(), exceptions=(), prefixes=("न",), **kwargs):
        """Build a RuleSet from raw (possibly unnormalized) entries."""
        return cls(
            type1_suffixes=_normalize_entries(type1, "type1_suffixes"),
            type2_suffixes=_normalize_entries(type2, "type2_suffixes"),
            exceptions=_normalize_entries(exceptions, "exceptions"),
            prefixes=_normalize_entries(prefixes, "prefixes"),
            **kwargs,
        )

    def fingerprint(self) -> str:
        """SHA-256 over a canonical dump; independent of file order and comments."""
        h = hashlib.sha256()
        for name in RULE_FILES:
            h.update(name.encode())
            for entry in sorted(getattr(self, name)):
                h.update(b"\x00" + entry.encode("utf-8"))
            h.update(b"\x01")
        for src, dst in sorted(self.ik_transform.items()):
            h.update(f"{src}>{dst}\x00".encode("utf-8"))
        h.update(str(self.min_stem_letters).encode())
        return h.hexdigest()


def _normalize_entries(entries: Iterable[str], name: str, where: str = "") -> frozenset:
    out = set()
    for raw in entries:
        entry = raw.strip()
        if not entry:
            continue
        if any(ch.isspace() for ch in entry):
            raise MalformedEntry(f"{where or name}: entry {entry!r} contains whitespace")
        normalized = normalize_text(entry)
        if not normalized:
            raise MalformedEntry(f"{where or name}: entry {entry!r} is empty after normalization")
        out.add(normalized)
    return frozenset(out)


def read_rule_file(path: Path) -> list:
    """Return the raw entries of one rule file, comments and blanks removed."""
    entries = []
    with open(path, encoding="utf-8", newline="") as fh:
        for lineno, line in enumerate(fh.read().splitlines(), 1):
            line = line.strip().lstrip("\ufeff")
            if not line or line.startswith("#"):
                continue
            if any(ch.isspace() for ch in line):
                raise MalformedEntry(f"{path}:{lineno}: entry {line!r} contains whitespace")
            entries.append(line)
    return entries


def load_rule_set(rules_directory, min_stem_letters: int = 2) -> RuleSet:
    directory = Path(rules_directory)
    tables = {}
    for name, filename in RULE_FILES.items():
        path = directory / filename
        if not path.is_file():
            raise MissingFile(f"missing rule file: {path}")
        tables[name] = _normalize_entries(read_rule_file(path), name, str(path))
    return RuleSet(min_stem_letters=min_stem_letters, **tables)


def write_rule_set(rs: RuleSet, rules_directory) -> None:
    """Write ``rs`` as a rules directory that :func:`load_rule_set` reads back."""
    directory = Path(rules_directory)
    directory.mkdir(parents=True, exist_ok=True)
    for name, filename in RULE_FILES.items():
        lines = sorted(getattr(rs, name))
        (directory / filename).write_text("".join(f"{e}\n" for e in lines), encoding="utf-8")


def rule_file_checksums(rules_directory) -> dict:
    directory = Path(rules_directory)
    sums = {}
    for filename in RULE_FILES.values():
        path = directory / filename
        if path.is_file():
            sums[filename] = hashlib.sha256(path.read_bytes()).hexdigest()
    return sums


def default_rules_dir() -> Path:
    return Path(str(resources.files("nepstem") / "rules"))


@lru_cache(maxsize=1)
def default_rules() -> RuleSet:
    """The seed rule set shipped with the package."""
    return load_rule_set(default_rules_dir())


@dataclass(frozen=True)
class Diagnostic:
    kind: str
    entry: str
    message: str

    def __str__(self):
        return f"{self.kind}\t{self.entry}\t{self.message}"


def validate_rule_set(rs: RuleSet) -> list:
    """Report suspicious entries.  Never raises; an empty list means clean."""
    diagnostics = []
    for name in ("type1_suffixes", "type2_suffixes"):
        for suffix in sorted(getattr(rs, name)):
            n = letter_length(suffix)
            if n > MAX_SUFFIX_LETTERS:
                diagnostics.append(
                    Diagnostic("long-suffix", suffix, f"{name} entry has {n} letters")
                )
    suffixes = rs.type1_suffixes | rs.type2_suffixes
    for word in sorted(rs.exceptions):
        if not any(word.endswith(s) and word != s for s in suffixes):
            diagnostics.append(
                Diagnostic("dead-exception", word, "ends in no known suffix")
            )
    for prefix in sorted(rs.prefixes):
        if len(prefix) != 1 or not is_letter(prefix):
            diagnostics.append(Diagnostic("prefix-shape", prefix, "prefix is not a single letter"))
    return diagnostics
