import pytest

import abelruns


def spans(runs):
    return [(r.start, r.head, r.tail, r.end) for r in runs]


def test_worked_example_fixed_period():
    runs = abelruns.abelian_runs("abaababaabbb", [2, 2])
    assert spans(runs) == [(0, 3, 1, 11)]
    assert runs[0].period == [2, 2]
    assert runs[0].anchor == 3
    assert runs[0].cores == 2
    assert runs[0].norm == 4


def test_anchored_versus_abelian():
    anchored = spans(abelruns.anchored_runs("ababaaa", [1, 1]))
    assert (0, 0, 1, 4) in anchored
    abelian = spans(abelruns.abelian_runs("ababaaa", [1, 1]))
    assert abelian == [(0, 1, 1, 5)]


def test_fixed_norm():
    runs = abelruns.abelian_runs_norm("abaababaabbb", 4)
    assert spans(runs) == [(0, 3, 1, 11)]
    assert runs[0].period == [2, 2]
    assert abelruns.abelian_runs_norm("ab", 3) == []


def test_all_runs_modes_agree():
    word = "abaababaabbbaab"
    randomized = abelruns.all_abelian_runs(word, mode="randomized", seed=5)
    deterministic = abelruns.all_abelian_runs(word, mode="deterministic")
    assert randomized == deterministic
    assert len(randomized) > 0


def test_all_runs_against_oracle():
    for word in ["ababaaa", "abaababaabbb", "aabbabab", "abcabc"]:
        got = abelruns.all_abelian_runs(word)
        want = abelruns.oracle_all_runs(word)
        assert got == want


def test_squares():
    assert abelruns.abelian_squares("aababa") == [(0, 1), (1, 2), (2, 2), (0, 3)]


def test_parikh():
    assert abelruns.parikh("aab") == [2, 1]
    assert abelruns.parikh("cba", alphabet="abc") == [1, 1, 1]


def test_streaming_scanner():
    scanner = abelruns.Scanner([2, 2], "ab")
    seen = []
    for symbol in "abaababaabbb":
        seen += scanner.push(symbol)
    assert seen == []
    finished = scanner.finish()
    assert spans(finished) == [(0, 3, 1, 11)]
    assert scanner.finished


def test_norm_scanner_streams():
    scanner = abelruns.NormScanner(2, "ab")
    collected = []
    for symbol in "ababaaa":
        collected += scanner.push(symbol)
    collected += scanner.finish()
    assert (0, 1, 1, 5) in spans(collected)


def test_errors():
    with pytest.raises(ValueError):
        abelruns.abelian_runs("ab", [0, 0])
    with pytest.raises(ValueError):
        abelruns.parikh("abx", alphabet="ab")
