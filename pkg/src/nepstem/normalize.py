"""Character-level normalization of Devanagari words.

Nepali writers routinely confuse a handful of vowel and consonant pairs
(ई/इ, ऊ/उ, व/ब, श/ष/स) and use the candrabindu inconsistently.  Every word
is folded onto one representative of each pair before any rule is matched,
so the rule tables only need to list a single spelling.
"""

from .errors import EmptyAfterNormalization

CANDRABINDU = "ँ"
NUKTA = "़"
VIRAMA = "्"

# (source, replacement); "" means the source is deleted.
NORMALIZATION_TABLE = (
    ("ई", "इ"),
    ("ी", "ि"),
    ("ऊ", "उ"),
    ("ू", "ु"),
    ("व", "ब"),
    ("श", "स"),
    ("ष", "स"),
    (CANDRABINDU, ""),
)

_TRANSLATION = str.maketrans({src: (dst or None) for src, dst in NORMALIZATION_TABLE})

SOURCE_CHARACTERS = frozenset(src for src, _ in NORMALIZATION_TABLE)


def is_consonant(ch: str) -> bool:
    """क..ह and the precomposed nukta consonants क़..य़."""
    cp = ord(ch)
    return 0x0915 <= cp <= 0x0939 or 0x0958 <= cp <= 0x095F


def is_independent_vowel(ch: str) -> bool:
    return 0x0905 <= ord(ch) <= 0x0914


def is_letter(ch: str) -> bool:
    return is_consonant(ch) or is_independent_vowel(ch)


def is_vowel_sign(ch: str) -> bool:
    """Dependent vowel signs (matras), ा through ौ plus the rarer extensions."""
    cp = ord(ch)
    return (
        0x093E <= cp <= 0x094C
        or cp in (0x093A, 0x093B, 0x094E, 0x094F)
        or 0x0955 <= cp <= 0x0957
        or 0x0962 <= cp <= 0x0963
    )


def normalize_text(text: str) -> str:
    """Apply the normalization table to every code point of ``text``.

    Total over arbitrary strings: code points outside the table, including
    non-Devanagari ones, pass through unchanged.
    """
    return text.translate(_TRANSLATION)


def normalize_word(raw: str) -> str:
    """Normalize a single word.

    Surrounding whitespace is stripped first.  Raises
    :class:`EmptyAfterNormalization` when nothing is left, which callers
    treat as a discarded token.
    """
    word = raw.strip()
    if not word:
        raise ValueError("cannot normalize an empty word")
    normalized = normalize_text(word)
    if not normalized:
        raise EmptyAfterNormalization(f"{raw!r} is empty after normalization")
    return normalized


def letter_length(word: str) -> int:
    """Number of base letters (consonants and independent vowels) in ``word``.

    Vowel signs, virama, anusvara, candrabindu and anything non-Devanagari
    are not counted, so ``letter_length("काले") == 2``.
    """
    return sum(1 for ch in word if is_letter(ch))
