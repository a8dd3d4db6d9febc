import pytest

from nepstem.errors import MalformedEntry, MissingFile, RuleSetError
from nepstem.rules import (
    RULE_FILES,
    RuleSet,
    default_rules,
    load_rule_set,
    validate_rule_set,
    write_rule_set,
)


def make_dir(tmp_path, **tables):
    for name, filename in RULE_FILES.items():
        (tmp_path / filename).write_text("\n".join(tables.get(name, [])) + "\n", encoding="utf-8")
    return tmp_path


def test_load_basic(tmp_path):
    d = make_dir(tmp_path, type1_suffixes=["# postpositions", "", "हरु", "को", "लाई"])
    rs = load_rule_set(d)
    assert rs.type1_suffixes == {"हरु", "को", "लाइ"}
    assert rs.exceptions == frozenset()
    assert rs.min_stem_letters == 2


def test_entries_normalized_and_merged(tmp_path):
    d = make_dir(tmp_path, type2_suffixes=["िक", "ीक"])
    assert load_rule_set(d).type2_suffixes == {"िक"}


def test_crlf_and_bom_accepted(tmp_path):
    d = make_dir(tmp_path)
    (d / "type1_suffixes.txt").write_bytes("﻿मा\r\nको \r\n".encode("utf-8"))
    assert load_rule_set(d).type1_suffixes == {"मा", "को"}


def test_missing_file(tmp_path):
    d = make_dir(tmp_path)
    (d / "prefixes.txt").unlink()
    with pytest.raises(MissingFile):
        load_rule_set(d)


def test_entry_with_whitespace(tmp_path):
    d = make_dir(tmp_path, exceptions=["काले नेहरु"])
    with pytest.raises(MalformedEntry):
        load_rule_set(d)


def test_order_independent(tmp_path):
    (tmp_path / "a").mkdir()
    (tmp_path / "b").mkdir()
    a = load_rule_set(make_dir(tmp_path / "a", type1_suffixes=["मा", "को", "ले"]))
    b = load_rule_set(make_dir(tmp_path / "b", type1_suffixes=["ले", "मा", "को", "मा"]))
    assert a == b
    assert a.fingerprint() == b.fingerprint()


def test_round_trip(tmp_path):
    rs = default_rules()
    write_rule_set(rs, tmp_path / "out")
    assert load_rule_set(tmp_path / "out") == rs


def test_invariants():
    with pytest.raises(RuleSetError):
        RuleSet(type1_suffixes={"ई"})  # not normalized
    with pytest.raises(RuleSetError):
        RuleSet(type1_suffixes={"काले"}, exceptions={"काले"})
    with pytest.raises(RuleSetError):
        RuleSet(min_stem_letters=0)
    with pytest.raises(RuleSetError):
        RuleSet(ik_transform={"ा": "ौ", "ौ": "ु"})


def test_seed_rules_contain_quoted_entries():
    rs = default_rules()
    for s in ["मा", "बाट", "ले", "लाइ", "द्बारा", "लागि", "निम्ति", "हरु", "को"]:
        assert s in rs.type1_suffixes
    for s in ["छे", "ने", "छ्यौ", "एको", "एका", "ेका", "इक", "िक", "नु"]:
        assert s in rs.type2_suffixes
    assert {"काले", "नेहरु"} <= rs.exceptions
    assert rs.prefixes == {"न"}


def test_validate_default_is_clean():
    assert validate_rule_set(default_rules()) == []


def test_validate_live_exception():
    rs = RuleSet.from_entries(type1=["हरु"], exceptions=["नेहरु"])
    assert validate_rule_set(rs) == []


def test_validate_dead_exception_and_shapes():
    rs = RuleSet.from_entries(
        type1=["हरु", "अबकखगघङ"], exceptions=["कलम"], prefixes=["न", "अन"]
    )
    kinds = sorted(d.kind for d in validate_rule_set(rs))
    assert kinds == ["dead-exception", "long-suffix", "prefix-shape"]
