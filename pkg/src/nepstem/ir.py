"""Bag-of-words tf-idf retrieval, with or without stemming.

score(q, d) = sum over query tokens t of tf(t, d) * ln(N / df(t))

tf is the raw count, there is no query-side weighting and no length
normalization.  Terms present in every document get idf 0.

Index files are plain UTF-8 text, tab separated::

    #nepstem-index	1
    n_docs	<N>
    stemmed	<0|1>
    rules	<rule-set fingerprint or ->
    doc	<doc_id>            one per document, corpus order
    df	<term>	<df>          sorted by term
    tf	<doc_id>	<term>	<tf>  corpus order, then term
"""

import math
from collections import Counter
from dataclasses import dataclass
from typing import Dict, List, Optional

from .errors import EmptyCorpus, MalformedRecord, ModeMismatch
from .text import Corpus, analyze

INDEX_MAGIC = "#nepstem-index"


@dataclass
class TfIdfIndex:
    doc_ids: List[str]
    df: Dict[str, int]
    tf: Dict[str, Dict[str, int]]
    stemmed: bool = False
    rules_fingerprint: Optional[str] = None

    @property
    def n_docs(self) -> int:
        return len(self.doc_ids)

    def idf(self, term: str) -> float:
        df = self.df.get(term)
        return math.log(self.n_docs / df) if df else 0.0


@dataclass(frozen=True)
class RankedResult:
    doc_id: str
    score: float
    rank: int


def build_index(corpus: Corpus, rs=None) -> TfIdfIndex:
    if not len(corpus):
        raise EmptyCorpus("cannot index an empty corpus")
    doc_ids, tf, df = [], {}, Counter()
    for doc in corpus:
        counts = Counter(analyze(doc.text, rs))
        doc_ids.append(doc.id)
        tf[doc.id] = dict(counts)
        df.update(counts.keys())
    return TfIdfIndex(
        doc_ids,
        dict(df),
        tf,
        stemmed=rs is not None,
        rules_fingerprint=rs.fingerprint() if rs is not None else None,
    )


def check_mode(ix: TfIdfIndex, rs) -> None:
    if (rs is not None) != ix.stemmed:
        have = "stemmed" if ix.stemmed else "unstemmed"
        want = "with" if rs is not None else "without"
        raise ModeMismatch(f"{have} index queried {want} a rule set")
    if rs is not None and ix.rules_fingerprint and rs.fingerprint() != ix.rules_fingerprint:
        raise ModeMismatch("index was built with a different rule set")


def score(ix: TfIdfIndex, terms, doc_id: str) -> float:
    doc_tf = ix.tf[doc_id]
    return sum(doc_tf.get(t, 0) * ix.idf(t) for t in terms)


def query(ix: TfIdfIndex, q: str, rs=None, k: int = 10) -> List[RankedResult]:
    """Top ``k`` documents with a positive score; possibly fewer, possibly none."""
    check_mode(ix, rs)
    terms = analyze(q, rs)
    scored = []
    for doc_id in ix.doc_ids:
        s = score(ix, terms, doc_id)
        if s > 0:
            scored.append((doc_id, s))
    scored.sort(key=lambda item: (-item[1], item[0]))
    return [RankedResult(doc_id, s, rank) for rank, (doc_id, s) in enumerate(scored[:k], 1)]


def save_index(ix: TfIdfIndex, path) -> None:
    for doc_id in ix.doc_ids:
        if "\t" in doc_id or "\n" in doc_id:
            raise MalformedRecord(f"document id {doc_id!r} cannot be stored in an index file")
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(f"{INDEX_MAGIC}\t1\n")
        fh.write(f"n_docs\t{ix.n_docs}\n")
        fh.write(f"stemmed\t{int(ix.stemmed)}\n")
        fh.write(f"rules\t{ix.rules_fingerprint or '-'}\n")
        for doc_id in ix.doc_ids:
            fh.write(f"doc\t{doc_id}\n")
        for term in sorted(ix.df):
            fh.write(f"df\t{term}\t{ix.df[term]}\n")
        for doc_id in ix.doc_ids:
            for term, count in sorted(ix.tf[doc_id].items()):
                fh.write(f"tf\t{doc_id}\t{term}\t{count}\n")


def load_index(path) -> TfIdfIndex:
    header = {}
    doc_ids, df, tf = [], {}, {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            fields = line.rstrip("\n").split("\t")
            if lineno == 1:
                if fields[0] != INDEX_MAGIC:
                    raise MalformedRecord(f"{path}: not an index file")
                continue
            kind = fields[0]
            try:
                if kind in ("n_docs", "stemmed", "rules"):
                    header[kind] = fields[1]
                elif kind == "doc":
                    doc_ids.append(fields[1])
                    tf[fields[1]] = {}
                elif kind == "df":
                    df[fields[1]] = int(fields[2])
                elif kind == "tf":
                    tf[fields[1]][fields[2]] = int(fields[3])
                else:
                    raise ValueError(kind)
            except (IndexError, KeyError, ValueError):
                raise MalformedRecord(f"{path}:{lineno}: bad index line") from None
    if header.get("n_docs") != str(len(doc_ids)):
        raise MalformedRecord(f"{path}: n_docs does not match the document list")
    fingerprint = header.get("rules", "-")
    return TfIdfIndex(
        doc_ids,
        df,
        tf,
        stemmed=header.get("stemmed") == "1",
        rules_fingerprint=None if fingerprint == "-" else fingerprint,
    )
