"""News-topic classification with Multinomial Naive Bayes.

Features are tf-idf masses computed on the training split after dropping
terms that occur in more than half of the training documents.  The masses
are used directly as fractional counts in the class statistics:

    P(t | c) = (alpha + S(t, c)) / (alpha * V + sum_t' S(t', c))

where S(t, c) sums the feature values of t over the training documents of
class c.  ``raw_counts=True`` swaps in plain term counts.
"""

import json
import math
import random
from collections import Counter, defaultdict
from dataclasses import asdict, dataclass, field
from typing import Dict, List, Optional

from .errors import (
    ClassTooSmall,
    EmptyCorpus,
    EmptyVocabulary,
    MalformedRecord,
    ModeMismatch,
    NonPositiveAlpha,
    UnlabeledDocument,
)
from .text import Corpus, analyze

MODEL_FORMAT = "nepstem-nb/1"


def split_corpus(corpus: Corpus, train_fraction: float = 0.7, seed: int = 0):
    """Stratified train/test split.  Both halves keep corpus order."""
    if not 0 < train_fraction < 1:
        raise ValueError("train_fraction must lie strictly between 0 and 1")
    by_label = defaultdict(list)
    for i, doc in enumerate(corpus):
        if doc.label is None:
            raise UnlabeledDocument(f"document {doc.id!r} has no label")
        by_label[doc.label].append(i)

    rng = random.Random(seed)
    train_idx = set()
    for label in sorted(by_label):
        idx = by_label[label]
        if len(idx) < 2:
            raise ClassTooSmall(f"class {label!r} has {len(idx)} document(s); need 2")
        idx = idx[:]
        rng.shuffle(idx)
        n_train = min(max(round(train_fraction * len(idx)), 1), len(idx) - 1)
        train_idx.update(idx[:n_train])

    docs = corpus.documents
    train = [d for i, d in enumerate(docs) if i in train_idx]
    test = [d for i, d in enumerate(docs) if i not in train_idx]
    return Corpus(train), Corpus(test)


@dataclass
class Features:
    vocabulary: List[str]
    vectors: List[Dict[str, float]]
    idf: Dict[str, float]
    stemmed: bool = False
    raw_counts: bool = False
    rules_fingerprint: Optional[str] = None


def _weigh(counts, idf, raw_counts):
    if raw_counts:
        return {t: float(c) for t, c in counts.items() if t in idf}
    return {t: c * idf[t] for t, c in counts.items() if t in idf}


def build_features(train: Corpus, rs=None, raw_counts: bool = False) -> Features:
    n = len(train)
    if not n:
        raise EmptyCorpus("training corpus is empty")
    counts = [Counter(analyze(doc.text, rs)) for doc in train]
    df = Counter()
    for c in counts:
        df.update(c.keys())
    # stopwords: terms in more than half of the training documents
    vocabulary = sorted(t for t, d in df.items() if 2 * d <= n)
    if not vocabulary:
        raise EmptyVocabulary("every term occurs in more than half of the documents")
    idf = {t: math.log(n / df[t]) for t in vocabulary}
    return Features(
        vocabulary=vocabulary,
        vectors=[_weigh(c, idf, raw_counts) for c in counts],
        idf=idf,
        stemmed=rs is not None,
        raw_counts=raw_counts,
        rules_fingerprint=rs.fingerprint() if rs is not None else None,
    )


@dataclass
class NbModel:
    classes: List[str]
    log_priors: Dict[str, float]
    vocabulary: List[str]
    log_likelihood: Dict[str, Dict[str, float]]
    alpha: float = 1.0
    stemmed: bool = False
    idf: Dict[str, float] = field(default_factory=dict)
    raw_counts: bool = False
    rules_fingerprint: Optional[str] = None
    train_ids: List[str] = field(default_factory=list)

    def featurize(self, text: str, rs=None) -> Dict[str, float]:
        """Feature vector for a new document, using the training idf."""
        return _weigh(Counter(analyze(text, rs)), self.idf, self.raw_counts)

    def check_mode(self, rs) -> None:
        if (rs is not None) != self.stemmed:
            have = "stemmed" if self.stemmed else "unstemmed"
            want = "with" if rs is not None else "without"
            raise ModeMismatch(f"{have} model used {want} a rule set")
        if rs is not None and self.rules_fingerprint and rs.fingerprint() != self.rules_fingerprint:
            raise ModeMismatch("model was trained with a different rule set")


def train(features: Features, labels, alpha: float = 1.0) -> NbModel:
    if not alpha > 0:
        raise NonPositiveAlpha(f"alpha must be positive, got {alpha}")
    labels = list(labels)
    if len(labels) != len(features.vectors):
        raise ValueError("one label per feature vector required")
    if not labels:
        raise EmptyCorpus("no training documents")

    classes = sorted(set(labels))
    doc_counts = Counter(labels)
    mass = {c: defaultdict(float) for c in classes}
    for vec, label in zip(features.vectors, labels):
        for t in sorted(vec):
            mass[label][t] += vec[t]

    v = len(features.vocabulary)
    log_priors = {c: math.log(doc_counts[c] / len(labels)) for c in classes}
    log_likelihood = {}
    for c in classes:
        total = math.fsum(mass[c].values())
        log_denominator = math.log(alpha * v + total)
        log_likelihood[c] = {
            t: math.log(alpha + mass[c].get(t, 0.0)) - log_denominator
            for t in features.vocabulary
        }
    return NbModel(
        classes=classes,
        log_priors=log_priors,
        vocabulary=list(features.vocabulary),
        log_likelihood=log_likelihood,
        alpha=alpha,
        stemmed=features.stemmed,
        idf=dict(features.idf),
        raw_counts=features.raw_counts,
        rules_fingerprint=features.rules_fingerprint,
    )


def class_scores(m: NbModel, doc_features) -> Dict[str, float]:
    scores = {}
    for c in m.classes:
        ll = m.log_likelihood[c]
        scores[c] = m.log_priors[c] + math.fsum(
            x * ll[t] for t, x in doc_features.items() if t in ll
        )
    return scores


def predict(m: NbModel, doc_features) -> str:
    """Most probable class; ties go to the lexicographically first class."""
    scores = class_scores(m, doc_features)
    best = None
    for c in m.classes:
        if best is None or scores[c] > scores[best]:
            best = c
    return best


@dataclass
class EvalMetrics:
    micro_f1: float
    accuracy: float
    vocabulary_size: int
    classes: List[str]
    confusion: List[List[int]]  # rows: true class, columns: predicted class

    @property
    def n_documents(self) -> int:
        return sum(map(sum, self.confusion))


def micro_f1(confusion) -> float:
    """Micro-averaged F1 from pooled TP/FP/FN of a square confusion matrix."""
    k = len(confusion)
    tp = sum(confusion[i][i] for i in range(k))
    fp = sum(confusion[i][j] for i in range(k) for j in range(k) if i != j)
    fn = fp  # every off-diagonal cell is one FP (predicted class) and one FN (true class)
    if tp == 0:
        return 0.0
    precision = tp / (tp + fp)
    recall = tp / (tp + fn)
    return 2 * precision * recall / (precision + recall)


def accuracy(confusion) -> float:
    total = sum(map(sum, confusion))
    return sum(confusion[i][i] for i in range(len(confusion))) / total if total else 0.0


def evaluate_model(m: NbModel, test: Corpus, rs=None) -> EvalMetrics:
    m.check_mode(rs)
    labels = []
    for doc in test:
        if doc.label is None:
            raise UnlabeledDocument(f"document {doc.id!r} has no label")
        labels.append(doc.label)
    classes = sorted(set(m.classes) | set(labels))
    pos = {c: i for i, c in enumerate(classes)}
    confusion = [[0] * len(classes) for _ in classes]
    for doc in test:
        predicted = predict(m, m.featurize(doc.text, rs))
        confusion[pos[doc.label]][pos[predicted]] += 1
    return EvalMetrics(
        micro_f1=micro_f1(confusion),
        accuracy=accuracy(confusion),
        vocabulary_size=len(m.vocabulary),
        classes=classes,
        confusion=confusion,
    )


def save_model(m: NbModel, path) -> None:
    payload = {"format": MODEL_FORMAT, **asdict(m)}
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        json.dump(payload, fh, ensure_ascii=False, sort_keys=True, indent=1)
        fh.write("\n")


def load_model(path) -> NbModel:
    with open(path, encoding="utf-8") as fh:
        try:
            payload = json.load(fh)
        except json.JSONDecodeError as exc:
            raise MalformedRecord(f"{path}: invalid model file ({exc.msg})") from None
    if not isinstance(payload, dict) or payload.pop("format", None) != MODEL_FORMAT:
        raise MalformedRecord(f"{path}: not a {MODEL_FORMAT} model")
    try:
        return NbModel(**payload)
    except TypeError as exc:
        raise MalformedRecord(f"{path}: {exc}") from None
