import random
from itertools import product
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from lrbound.analyzer import verdict
from lrbound.deps import Mode
from lrbound.interp import reachable_stores
from lrbound.lang import validate
from lrbound.nfa import Layout, Nfa, all_nfas, is_universal, nfa_to_program, parse_nfa, random_nfa, render_nfa
from lrbound.parser import ParseError, parse_program, render

from conftest import universal_by_words

DATA = Path(__file__).resolve().parents[1] / "data" / "nfas"


def nfa(text):
    return parse_nfa(text.replace(" / ", "\n"))


def test_parse_examples():
    a = nfa("states 1 / start 1 / accept 1 / trans 1 0 1 / trans 1 1 1")
    assert a == Nfa(1, 1, frozenset({1}), frozenset({(1, 0, 1), (1, 1, 1)}))
    assert parse_nfa(render_nfa(a)) == a


def test_empty_accepting_set_is_an_error():
    with pytest.raises(ParseError):
        nfa("states 1 / start 1 / accept / trans 1 0 1")


@pytest.mark.parametrize("text", [
    "states 1 / start 2 / accept 1",
    "states 1 / accept 1",
    "states 1 / start 1 / accept 1 / trans 1 2 1",
    "states 1 / start 1 / accept 1 / bogus 3",
    "states x / start 1 / accept 1",
])
def test_malformed_files(text):
    with pytest.raises(ParseError):
        nfa(text)


def test_universality_examples():
    assert is_universal(nfa("states 1 / start 1 / accept 1 / trans 1 0 1 / trans 1 1 1"))
    assert not is_universal(nfa("states 1 / start 1 / accept 1 / trans 1 0 1"))
    assert is_universal(parse_nfa((DATA / "sink2.nfa").read_text()))


def test_universality_agrees_with_word_search():
    for a in all_nfas(1):
        assert is_universal(a) == universal_by_words(a)
    rng = random.Random(3)
    for _ in range(150):
        a = random_nfa(rng, rng.randint(2, 3), rng.uniform(0.3, 0.9))
        assert is_universal(a) == universal_by_words(a)


def test_all_nfas_counts():
    assert sum(1 for _ in all_nfas(1)) == 4
    assert sum(1 for _ in all_nfas(2)) == 256 * 3 * 2


def test_emitted_program_golden():
    a = parse_nfa((DATA / "universal1.nfa").read_text())
    text = render(nfa_to_program(a), header=True)
    assert text.startswith("vars 4\nX1 := 0 ; loop X3 {")
    assert text.strip() == (DATA / "universal1.lr").read_text().strip()


def test_layout():
    lay = Layout(3)
    assert [lay.x(1), lay.xp(1), lay.y, lay.z, lay.n_vars] == [1, 4, 7, 8, 8]


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 3), st.integers(0, 2 ** 32 - 1))
def test_generated_programs_validate_and_parse(n, seed):
    a = random_nfa(random.Random(seed), n, 0.5)
    p = nfa_to_program(a)
    assert validate(p.root, p.n) == []
    assert parse_program(render(p, header=True)) == p


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 2), st.integers(0, 2 ** 32 - 1))
def test_zero_pattern_tracks_reachable_states(n, seed):
    # With every input 1 except Y = k, each run reads one word of length <= k
    # and ends with Z = 0 iff that word is accepted.
    a = random_nfa(random.Random(seed), n, 0.5)
    p = nfa_to_program(a)
    lay = Layout(n)
    for k in range(3):
        s = [1] * p.n
        s[lay.y - 1] = k
        finals = reachable_stores(p.root, tuple(s)).final_stores
        rejected = any(not a.accepts(w) for m in range(k + 1) for w in product((0, 1), repeat=m))
        assert any(f[lay.z - 1] != 0 for f in finals) == rejected
        assert all(f[lay.z - 1] in (0, 1) for f in finals)


def test_empty_word_rejection_is_linear():
    # the start state is not accepting: Z is zeroed before any letter is read
    a = nfa("states 2 / start 1 / accept 2 / trans 1 0 2 / trans 1 1 2 / trans 2 0 2 / trans 2 1 2")
    assert not is_universal(a)
    p = nfa_to_program(a)
    assert verdict(Mode.LIN, p, Layout(2).z).bounded is False


@pytest.mark.parametrize("name, expected", [("universal1", True), ("zeros_only", False), ("sink2", True)])
def test_reduction_on_data_files(name, expected):
    a = parse_nfa((DATA / f"{name}.nfa").read_text())
    assert is_universal(a) == expected
    p = nfa_to_program(a)
    assert verdict(Mode.LIN, p, Layout(a.n_states).z).bounded == expected
