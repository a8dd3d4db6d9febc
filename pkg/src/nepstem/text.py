"""Tokenization and corpus ingestion shared by the evaluation harnesses.

Corpus files are JSON Lines, one flat object per line::

    {"id": "d1", "text": "नेपालमा ...", "label": "politics"}

``label`` is optional; blank lines are skipped.
"""

import json
import re
from dataclasses import dataclass, field
from typing import Iterable, List, Optional

from .errors import DuplicateId, EmptyAfterNormalization, MalformedRecord
from .stemmer import stem

# Devanagari block minus danda, double danda, digits and the abbreviation sign.
_TOKEN_RE = re.compile("[\u0900-\u0963\u0971-\u097f]+")
# Joiners occur inside real words (र्‍य); they are removed, not treated as breaks.
_JOINERS = str.maketrans("", "", "\u200c\u200d")


def tokenize(text: str) -> List[str]:
    return _TOKEN_RE.findall(text.translate(_JOINERS))


def stem_tokens(tokens: Iterable[str], rs) -> List[str]:
    out = []
    for token in tokens:
        try:
            out.append(stem(token, rs).stem)
        except EmptyAfterNormalization:
            continue
    return out


def analyze(text: str, rs=None) -> List[str]:
    """Tokens of ``text``, stemmed when a rule set is given."""
    tokens = tokenize(text)
    return stem_tokens(tokens, rs) if rs is not None else tokens


@dataclass(frozen=True)
class Document:
    id: str
    text: str
    label: Optional[str] = None


@dataclass
class Corpus:
    documents: List[Document] = field(default_factory=list)

    def __post_init__(self):
        seen = set()
        for doc in self.documents:
            if not doc.id:
                raise MalformedRecord("document id must be non-empty")
            if doc.id in seen:
                raise DuplicateId(f"duplicate document id {doc.id!r}")
            seen.add(doc.id)

    def __len__(self):
        return len(self.documents)

    def __iter__(self):
        return iter(self.documents)

    @property
    def labels(self):
        return sorted({d.label for d in self.documents if d.label is not None})


def load_corpus(path) -> Corpus:
    documents = []
    seen = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            if not line.strip():
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as exc:
                raise MalformedRecord(f"{path}:{lineno}: invalid JSON ({exc.msg})") from None
            if not isinstance(record, dict):
                raise MalformedRecord(f"{path}:{lineno}: record is not an object")
            for key in ("id", "text"):
                if not isinstance(record.get(key), str):
                    raise MalformedRecord(f"{path}:{lineno}: field {key!r} missing or not a string")
            label = record.get("label")
            if label is not None and not isinstance(label, str):
                raise MalformedRecord(f"{path}:{lineno}: field 'label' is not a string")
            if not record["id"]:
                raise MalformedRecord(f"{path}:{lineno}: empty id")
            if record["id"] in seen:
                raise DuplicateId(
                    f"{path}:{lineno}: id {record['id']!r} already used on line {seen[record['id']]}"
                )
            seen[record["id"]] = lineno
            documents.append(Document(record["id"], record["text"], label))
    return Corpus(documents)


def write_corpus(corpus: Corpus, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for doc in corpus:
            record = {"id": doc.id, "text": doc.text}
            if doc.label is not None:
                record["label"] = doc.label
            fh.write(json.dumps(record, ensure_ascii=False) + "\n")
