"""Paice's under-/over-stemming indices.

Words are partitioned into concept groups (inflections of one word-concept)
and, by the stemmer, into stem groups.  Counting word pairs:

* GDMT: pairs inside a concept group (should merge)
* GUMT: of those, pairs the stemmer left with different stems
* GDNT: pairs from different concept groups (should stay apart)
* GWMT: of those, pairs the stemmer gave the same stem

UI = GUMT / GDMT and OI = GWMT / GDNT.  :func:`evaluate_stems` computes the
totals from group sizes in linear time; :func:`pairwise_oracle` enumerates
every pair and exists to check it.
"""

import re
from collections import Counter, defaultdict
from dataclasses import dataclass
from itertools import combinations
from typing import List

from .errors import DuplicateWord, EmptyAfterNormalization
from .normalize import normalize_word
from .stemmer import stem


@dataclass(frozen=True)
class ConceptGroups:
    groups: tuple

    def __post_init__(self):
        groups = tuple(tuple(dict.fromkeys(g)) for g in self.groups if g)
        seen = {}
        for i, group in enumerate(groups):
            for word in group:
                if word in seen and seen[word] != i:
                    raise DuplicateWord(f"{word!r} appears in groups {seen[word] + 1} and {i + 1}")
                seen[word] = i
        object.__setattr__(self, "groups", groups)

    @property
    def words(self) -> List[str]:
        return [w for g in self.groups for w in g]


@dataclass(frozen=True)
class PaiceReport:
    gdmt: int
    gumt: int
    gdnt: int
    gwmt: int

    @property
    def ui(self) -> float:
        return self.gumt / self.gdmt if self.gdmt else 0.0

    @property
    def oi(self) -> float:
        return self.gwmt / self.gdnt if self.gdnt else 0.0

    def rows(self):
        """(name, value) pairs in report order."""
        return [
            ("GDMT", self.gdmt),
            ("GUMT", self.gumt),
            ("GDNT", self.gdnt),
            ("GWMT", self.gwmt),
            ("UI", self.ui),
            ("OI", self.oi),
        ]


def load_concept_groups(path) -> ConceptGroups:
    """One group per line, words separated by whitespace or commas.

    Words are normalized on load.  A word repeated within its own line is
    merged; a word shared by two lines raises :class:`DuplicateWord`.
    """
    groups = []
    first_line = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            group = []
            for raw in re.split(r"[\s,]+", line):
                if not raw:
                    continue
                try:
                    word = normalize_word(raw)
                except EmptyAfterNormalization:
                    continue
                if word in first_line and first_line[word] != lineno:
                    raise DuplicateWord(
                        f"{path}: {word!r} on line {lineno} already appears on line {first_line[word]}"
                    )
                if word not in first_line:
                    first_line[word] = lineno
                    group.append(word)
            if group:
                groups.append(group)
    return ConceptGroups(groups)


def _half_cross(counts, total):
    # sum over parts of c * (total - c), halved: pairs split across parts
    return sum(c * (total - c) for c in counts) // 2


def evaluate_stems(cg: ConceptGroups, stem_map) -> PaiceReport:
    """Paice totals for a precomputed word -> stem mapping."""
    n_words = sum(len(g) for g in cg.groups)
    gdmt = gumt = gdnt = 0
    by_stem = defaultdict(Counter)
    for gi, group in enumerate(cg.groups):
        n = len(group)
        gdmt += n * (n - 1) // 2
        gdnt += n * (n_words - n)
        stems = Counter(stem_map[w] for w in group)
        gumt += _half_cross(stems.values(), n)
        for s, c in stems.items():
            by_stem[s][gi] += c
    gwmt = sum(_half_cross(parts.values(), sum(parts.values())) for parts in by_stem.values())
    return PaiceReport(gdmt, gumt, gdnt // 2, gwmt)


def evaluate(cg: ConceptGroups, rs=None) -> PaiceReport:
    """Stem every word of ``cg`` with ``rs`` and compute the Paice totals."""
    stem_map = {w: stem(w, rs).stem for w in cg.words}
    return evaluate_stems(cg, stem_map)


def pairwise_oracle(cg: ConceptGroups, stem_map) -> PaiceReport:
    """Brute-force Paice totals by enumerating all unordered word pairs."""
    labelled = [(gi, w) for gi, g in enumerate(cg.groups) for w in g]
    gdmt = gumt = gdnt = gwmt = 0
    for (ga, a), (gb, b) in combinations(labelled, 2):
        same_stem = stem_map[a] == stem_map[b]
        if ga == gb:
            gdmt += 1
            gumt += not same_stem
        else:
            gdnt += 1
            gwmt += same_stem
    return PaiceReport(gdmt, gumt, gdnt, gwmt)


def format_percent(ratio: float) -> str:
    """Percentage to four significant digits: 0.0526952 -> '5.270%'."""
    return f"{ratio * 100:#.4g}%"
