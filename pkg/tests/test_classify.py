import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from nepstem import RuleSet, default_rules
from nepstem.classify import (
    Features,
    accuracy,
    build_features,
    class_scores,
    evaluate_model,
    load_model,
    micro_f1,
    predict,
    save_model,
    split_corpus,
    train,
)
from nepstem.errors import ClassTooSmall, EmptyVocabulary, ModeMismatch, NonPositiveAlpha, UnlabeledDocument
from nepstem.text import Corpus, Document

from synthetic import topic_corpus

RS = default_rules()


def labeled(counts):
    return Corpus([Document(f"{c}{i}", "घर", c) for c, n in counts.items() for i in range(n)])


def test_split_is_stratified():
    train_set, test_set = split_corpus(labeled({"a": 200, "b": 200}), 0.7, seed=1)
    for c in "ab":
        assert sum(d.label == c for d in train_set) == 140
        assert sum(d.label == c for d in test_set) == 60


def test_split_two_doc_class():
    train_set, test_set = split_corpus(labeled({"a": 2}), 0.9, seed=0)
    assert (len(train_set), len(test_set)) == (1, 1)


def test_split_deterministic():
    corpus = labeled({"a": 30, "b": 17})
    first = split_corpus(corpus, 0.7, 5)
    assert [d.id for d in first[0]] == [d.id for d in split_corpus(corpus, 0.7, 5)[0]]
    assert {d.id for d in first[0]} | {d.id for d in first[1]} == {d.id for d in corpus}
    assert not {d.id for d in first[0]} & {d.id for d in first[1]}


def test_split_errors():
    with pytest.raises(UnlabeledDocument):
        split_corpus(Corpus([Document("x", "घर"), Document("y", "घर", "a")]))
    with pytest.raises(ClassTooSmall):
        split_corpus(labeled({"a": 5, "b": 1}))


def test_document_frequency_filter():
    train_set = Corpus([Document("1", "क ख"), Document("2", "क ख"), Document("3", "क ग"), Document("4", "ग")])
    f = build_features(train_set)
    assert f.vocabulary == ["ख", "ग"]  # क is in 3 of 4 documents
    assert f.idf["ख"] == pytest.approx(math.log(2))
    assert f.vectors[0] == {"ख": pytest.approx(math.log(2))}


def test_empty_vocabulary():
    with pytest.raises(EmptyVocabulary):
        build_features(Corpus([Document("1", "क"), Document("2", "क")]))


def small_model(alpha=1.0, raw_counts=False):
    docs = Corpus(
        [Document("1", "घर बस", "a"), Document("2", "घर", "a"), Document("3", "कलम", "b"), Document("4", "किताब", "b")]
    )
    f = build_features(docs, raw_counts=raw_counts)
    return f, train(f, [d.label for d in docs], alpha)


@pytest.mark.parametrize("alpha", [0.01, 1.0, 7.5])
def test_likelihoods_and_priors_normalized(alpha):
    _, m = small_model(alpha)
    assert math.fsum(math.exp(p) for p in m.log_priors.values()) == pytest.approx(1, abs=1e-12)
    for c in m.classes:
        assert abs(math.fsum(math.exp(x) for x in m.log_likelihood[c].values()) - 1) < 1e-9


def test_unseen_term_likelihood():
    f, m = small_model(alpha=0.5, raw_counts=True)
    mass_b = 2.0  # कलम + किताब
    assert math.exp(m.log_likelihood["b"]["घर"]) == pytest.approx(0.5 / (0.5 * len(f.vocabulary) + mass_b))


def test_single_class_prior():
    f = build_features(Corpus([Document("1", "क", "x"), Document("2", "ख", "x")]))
    m = train(f, ["x", "x"])
    assert m.log_priors == {"x": 0.0}


@pytest.mark.parametrize("alpha", [0, -1, float("nan")])
def test_non_positive_alpha(alpha):
    f, _ = small_model()
    with pytest.raises(NonPositiveAlpha):
        train(f, ["a", "a", "b", "b"], alpha)


def test_zero_mass_document_uses_priors():
    f = build_features(Corpus([Document(str(i), "क" if i < 2 else "ख", "b" if i < 3 else "a") for i in range(4)]))
    m = train(f, ["b", "b", "b", "a"])
    assert class_scores(m, {}) == m.log_priors
    assert predict(m, {}) == "b"


def test_ties_go_to_first_class():
    f = Features(vocabulary=["क"], vectors=[{"क": 1.0}, {"क": 1.0}], idf={"क": 1.0})
    m = train(f, ["z", "a"])
    assert predict(m, {"क": 3.0}) == "a"


def test_confusion_trace_example():
    confusion = [[30, 10, 0], [5, 30, 5], [0, 10, 30]]
    assert micro_f1(confusion) == pytest.approx(0.75)
    assert accuracy(confusion) == pytest.approx(0.75)


@given(st.integers(1, 6).flatmap(lambda k: st.lists(st.lists(st.integers(0, 50), min_size=k, max_size=k), min_size=k, max_size=k)))
def test_micro_f1_equals_accuracy(confusion):
    assert micro_f1(confusion) == pytest.approx(accuracy(confusion), abs=1e-12)


@given(st.floats(0.1, 100))
def test_scaling_invariance_with_uniform_priors(factor):
    docs = Corpus([Document("1", "घर बस", "a"), Document("2", "कलम", "b"), Document("3", "किताब", "b"), Document("4", "बस", "a")])
    f = build_features(docs)
    m = train(f, [d.label for d in docs])
    rng = random.Random(0)
    for _ in range(10):
        x = {t: rng.random() for t in f.vocabulary}
        assert predict(m, x) == predict(m, {t: v * factor for t, v in x.items()})


def test_mode_mismatch():
    corpus = topic_corpus(per_class=4)
    train_set, test_set = split_corpus(corpus, 0.5, 0)
    f = build_features(train_set, RS)
    m = train(f, [d.label for d in train_set])
    with pytest.raises(ModeMismatch):
        evaluate_model(m, test_set)
    with pytest.raises(ModeMismatch):
        evaluate_model(m, test_set, RuleSet.from_entries(type1=["को"]))


def test_save_load_round_trip(tmp_path):
    _, m = small_model()
    m.train_ids = ["1", "2"]
    save_model(m, tmp_path / "m.json")
    assert load_model(tmp_path / "m.json") == m


def test_synthetic_corpus_end_to_end():
    corpus = topic_corpus()
    train_set, test_set = split_corpus(corpus, 0.7, 0)
    f = build_features(train_set, RS)
    m = train(f, [d.label for d in train_set])
    metrics = evaluate_model(m, test_set, RS)
    assert metrics.micro_f1 == 1.0
    assert metrics.n_documents == len(test_set)
