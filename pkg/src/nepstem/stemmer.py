"""The stemming pipeline.

One pass over a normalized word runs, in order:

1. exception gate (exception words are returned untouched),
2. Type I stripping: postpositions, chained, checked against the
   exception list after every strip,
3. negativity prefix stripping (न, at most once per pass),
4. the इक transformation of the first vowel (सामाजिक -> समाजिक),
5. Type II stripping: bound suffixes, longest first.

Every strip must leave at least ``rs.min_stem_letters`` base letters,
otherwise the rule is rejected and the next-longest candidate is tried.

Passes repeat until the word stops changing.  Stripping a Type II suffix can
expose a Type I suffix or an इक ending (नैतिकता -> नैतिक -> नितिक -> नित),
and iterating to the fixed point is what makes ``stem`` idempotent.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .normalize import NUKTA, is_independent_vowel, is_letter, letter_length, normalize_text, normalize_word
from .rules import RuleSet, default_rules

NORMALIZE = "normalize"
EXCEPTION_STOP = "exception-stop"
STRIP_TYPE1 = "strip-type1"
STRIP_PREFIX = "strip-prefix"
IK_TRANSFORM = "ik-transform"
STRIP_TYPE2 = "strip-type2"
THRESHOLD_REJECT = "threshold-reject"

IK_ENDINGS = ("इक", "िक")


@dataclass(frozen=True)
class StemStep:
    kind: str
    rule: str
    before: str
    after: str

    def to_tsv(self) -> str:
        return f"{self.kind}\t{self.rule}\t{self.before}\t{self.after}"


@dataclass(frozen=True)
class StemResult:
    original: str
    normalized: str
    stem: str
    trace: tuple = ()


@lru_cache(maxsize=64)
def _lengths(suffixes: frozenset) -> tuple:
    return tuple(sorted({len(s) for s in suffixes}, reverse=True))


def _strip_loop(w, suffixes, rs, kind, gate_exceptions, pause=None):
    steps = []
    while True:
        if gate_exceptions and w in rs.exceptions:
            steps.append(StemStep(EXCEPTION_STOP, w, w, w))
            return w, steps
        if pause is not None and steps and pause(w, rs):
            return w, steps
        for n in _lengths(suffixes):
            if n > len(w) or w[-n:] not in suffixes:
                continue
            suffix = w[-n:]
            rest = w[:-n]
            if letter_length(rest) < rs.min_stem_letters:
                steps.append(StemStep(THRESHOLD_REJECT, suffix, w, w))
                continue
            steps.append(StemStep(kind, suffix, w, rest))
            w = rest
            break
        else:
            return w, steps


def strip_type1(w: str, rs: RuleSet):
    """Strip chained postpositions, longest first, until none applies.

    Stops as soon as the current word is an exception (कालेले -> काले).
    """
    return _strip_loop(w, rs.type1_suffixes, rs, STRIP_TYPE1, gate_exceptions=True)


def _awaits_ik_transform(w, rs):
    return w.endswith(IK_ENDINGS) and rewrite_first_vowel(w, rs.ik_transform)[1] is not None


def strip_type2(w: str, rs: RuleSet):
    """Strip bound suffixes, longest first, until none applies.

    If a strip exposes an इक ending whose first vowel still needs rewriting
    (मौलिकता -> मौलिक), the loop stops so the next pass transforms it first.
    """
    return _strip_loop(
        w, rs.type2_suffixes, rs, STRIP_TYPE2, gate_exceptions=False, pause=_awaits_ik_transform
    )


def strip_prefix(w: str, rs: RuleSet):
    """Strip one prefix written as a bare letter: नजानु -> जानु, but not नेपाल.

    The character after the prefix must be a base letter, so a न carrying a
    vowel sign, virama, nukta or anusvara is never taken for the prefix.
    """
    if w in rs.exceptions:
        return w, []
    for prefix in sorted(rs.prefixes, key=lambda p: (-len(p), p)):
        n = len(prefix)
        if len(w) <= n or not w.startswith(prefix) or not is_letter(w[n]):
            continue
        rest = w[n:]
        if letter_length(rest) < rs.min_stem_letters:
            return w, [StemStep(THRESHOLD_REJECT, prefix, w, w)]
        return rest, [StemStep(STRIP_PREFIX, prefix, w, rest)]
    return w, []


def _first_vowel_site(w: str) -> Optional[int]:
    """Index of the vowel attached to the first letter (the letter itself for
    an independent vowel, else the sign following the consonant)."""
    for i, ch in enumerate(w):
        if not is_letter(ch):
            continue
        if is_independent_vowel(ch):
            return i
        j = i + 1
        if j < len(w) and w[j] == NUKTA:
            j += 1
        return j if j < len(w) else None
    return None


def rewrite_first_vowel(w: str, mapping) -> tuple:
    """Apply ``mapping`` to the first letter's vowel; returns (word, "src→dst")."""
    i = _first_vowel_site(w)
    if i is None or w[i] not in mapping:
        return w, None
    src, dst = w[i], mapping[w[i]]
    return w[:i] + dst + w[i + 1:], f"{src}→{dst}"


def apply_ik_transform(w: str, rs: RuleSet):
    """For words ending in इक/िक, undo the first-syllable vowel strengthening.

    नैतिक -> नितिक, साङ्गितिक -> सङ्गितिक.  The output is an intermediate form
    and need not be a real word.
    """
    if not w.endswith(IK_ENDINGS):
        return w, []
    out, rule = rewrite_first_vowel(w, rs.ik_transform)
    if rule is None:
        return w, []
    return out, [StemStep(IK_TRANSFORM, rule, w, out)]


def _single_pass(w, rs):
    """Returns (word, steps, halted); halted means an exception word was hit."""
    if w in rs.exceptions:
        return w, [StemStep(EXCEPTION_STOP, w, w, w)], True
    steps = []
    w, s = strip_type1(w, rs)
    steps += s
    if s and s[-1].kind == EXCEPTION_STOP:
        return w, steps, True
    for stage in (strip_prefix, apply_ik_transform, strip_type2):
        w, s = stage(w, rs)
        steps += s
    return w, steps, False


def stem(word: str, rs: Optional[RuleSet] = None) -> StemResult:
    """Stem a single word.

    >>> stem("कालेले").stem
    'काले'
    """
    if rs is None:
        rs = default_rules()
    original = word
    surface = word.strip()
    normalized = normalize_word(word)
    trace = []
    if normalized != surface:
        trace.append(StemStep(NORMALIZE, "", surface, normalized))

    if letter_length(normalized) < rs.min_stem_letters:
        return StemResult(original, normalized, normalized, tuple(trace))

    w = normalized
    first = True
    while True:
        new, steps, halted = _single_pass(w, rs)
        # a pass that changes nothing only contributes to the trace when it is
        # the first one, so rejections on an already-minimal word stay visible
        if first or new != w:
            trace += steps
        changed, w, first = new != w, new, False
        if halted or not changed:
            break
    return StemResult(original, normalized, w, tuple(trace))


def replay_trace(trace, word: str) -> str:
    """Re-apply ``trace`` to ``word`` (raw or normalized) and return the result.

    Each step is recomputed from its kind and rule rather than copied, and
    must agree with the recorded ``after`` state.
    """
    current = word.strip()
    for step in trace:
        if step.kind == NORMALIZE:
            current = normalize_text(current)
        elif current != step.before:
            raise ValueError(f"trace out of sync at {step}: have {current!r}")
        elif step.kind in (STRIP_TYPE1, STRIP_TYPE2):
            if not current.endswith(step.rule):
                raise ValueError(f"{step.rule!r} is not a suffix of {current!r}")
            current = current[: -len(step.rule)]
        elif step.kind == STRIP_PREFIX:
            if not current.startswith(step.rule):
                raise ValueError(f"{step.rule!r} is not a prefix of {current!r}")
            current = current[len(step.rule):]
        elif step.kind == IK_TRANSFORM:
            src, dst = step.rule.split("→")
            current, _ = rewrite_first_vowel(current, {src: dst})
        elif step.kind not in (EXCEPTION_STOP, THRESHOLD_REJECT):
            raise ValueError(f"unknown step kind {step.kind!r}")
        if current != step.after:
            raise ValueError(f"replay of {step} produced {current!r}")
    return current
