import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from multautomata import (
    BOOLEAN,
    INTEGER,
    NATURAL,
    RATIONAL,
    TROPICAL,
    LinearRepresentation,
    MismatchError,
    PreconditionError,
    RelatorSet,
    TensorPolynomial,
    UnsupportedRelatorError,
    Verdict,
    automaton_compatible,
    classify_relators,
    congruence_class,
    coproduct_word,
    hadamard_preserves_compatibility_check,
    letter_rep,
    minimize,
    parse_relators,
    predicted_compatibility,
    rep_shuffle,
    shuffle_compatible,
    tensor_congruent,
    zmod,
)
from multautomata.congruence import canonical_word, format_relators
from multautomata.semiring import additive_monoid_parameters

from conftest import ALL_SEMIRINGS

Z2 = zmod(2)
CHAR2 = [("abb", "bba"), ("aab", "baa"), ("abab", "baba")]
CHAR2_LONG = [("a" * 8 + "bb", "bb" + "a" * 8), ("aaaabbbb", "bbbbaaaa"), ("aaaabbaaaabb", "bbaaaabbaaaa")]


def R(alphabet, pairs):
    return RelatorSet(alphabet, pairs)


# -- classes ------------------------------------------------------------------


def test_class_examples():
    assert congruence_class("aab", R("ab", [("ab", "ba")])) == {"aab", "aba", "baa"}
    assert congruence_class("abba", R("ab", [])) == {"abba"}
    assert congruence_class("aba", R("ab", [("a", "")])) == {"b"}


def test_erasure_propagates_through_identifications():
    rel = R("abc", [("a", ""), ("a", "b")])
    assert rel.erasable_letters == {"a", "b"}
    assert congruence_class("abcab", rel) == {"c"}


def test_unsupported_relators():
    with pytest.raises(UnsupportedRelatorError):
        congruence_class("ab", R("ab", [("ab", "a")]))
    with pytest.raises(UnsupportedRelatorError):
        shuffle_compatible(R("ab", [("aa", "")]), RATIONAL)


def test_relator_normalization():
    rel = R("ab", [("ba", "ab"), ("ab", "ba"), ("a", "a")])
    assert rel.pairs == (("ab", "ba"),)
    assert rel.restrict("a").pairs == ()


def test_relator_file_round_trip():
    text = "# sample\nab = ba\na = 1   # erase a\n\n1 = c\n"
    rel = parse_relators(text)
    assert rel.alphabet == ("a", "b", "c")
    assert rel.pairs == (("", "a"), ("", "c"), ("ab", "ba"))
    assert parse_relators(format_relators(rel), "abc") == rel
    for bad in ("ab", "a = b = c", "a1 = b"):
        with pytest.raises(ValueError):
            parse_relators(bad)


@settings(max_examples=40, deadline=None)
@given(st.text("abc", max_size=6))
def test_commutation_class_is_permutation_set(w):
    # with every pair commuting the class is the set of rearrangements
    rel = R("abc", [("ab", "ba"), ("ac", "ca"), ("bc", "cb")])
    assert congruence_class(w, rel) == {"".join(p) for p in itertools.permutations(w)}
    assert canonical_word(w, rel) == "".join(sorted(w))


# -- automata -------------------------------------------------------------------


def test_automaton_compatibility_examples():
    sr = RATIONAL
    same = ((1, 2), (3, 4))
    rep = LinearRepresentation(sr, "ab", (1, 0), {"a": same, "b": same}, (0, 1))
    assert automaton_compatible(rep, R("ab", [("a", "b")]))
    assert automaton_compatible(letter_rep(sr, "ab", "a"), R("ab", [("ab", "ba")]))
    assert not automaton_compatible(letter_rep(sr, "ab", "a"), R("ab", [("a", "")]))
    with pytest.raises(MismatchError):
        automaton_compatible(letter_rep(sr, "a", "a"), R("ab", []))


def commuting_rep(sr, seed, dim=2):
    """Diagonal transitions: compatible with every commutation."""
    rng = random.Random(seed)
    diag = lambda: tuple(tuple(sr.sample(rng, 3) if i == j else sr.zero for j in range(dim)) for i in range(dim))  # noqa: E731
    lam = tuple(sr.sample(rng, 3) for _ in range(dim))
    gamma = tuple(sr.sample(rng, 3) for _ in range(dim))
    return LinearRepresentation(sr, "ab", lam, {"a": diag(), "b": diag()}, gamma)


def identity_rep(sr, alphabet="ab"):
    ident = ((sr.one, sr.zero), (sr.zero, sr.one))
    return LinearRepresentation(sr, alphabet, (sr.one, sr.one), {a: ident for a in alphabet}, (sr.one, sr.zero))


def idempotent_rep(sr):
    """μ(a) = μ(b) = e with e² = e: compatible with all the char-2 relators."""
    e = ((sr.one, sr.one), (sr.zero, sr.zero))
    return LinearRepresentation(sr, "ab", (sr.one, sr.zero), {"a": e, "b": e}, (sr.one, sr.one))


def test_hadamard_keeps_compatibility():
    lc = R("ab", [("ab", "ba")])
    for seed in range(3):
        assert hadamard_preserves_compatibility_check(commuting_rep(RATIONAL, seed), commuting_rep(RATIONAL, seed + 9), lc)
    for rel in (lc, R("ab", [("a", "")]), R("ab", [("a", "b")]), R("ab", CHAR2)):
        assert hadamard_preserves_compatibility_check(identity_rep(RATIONAL), identity_rep(RATIONAL), rel)
    char2 = R("ab", CHAR2)
    assert hadamard_preserves_compatibility_check(idempotent_rep(Z2), commuting_rep(Z2, 4), char2)
    with pytest.raises(PreconditionError):
        hadamard_preserves_compatibility_check(letter_rep(RATIONAL, "ab", "a"), identity_rep(RATIONAL), R("ab", [("a", "")]))


@pytest.mark.parametrize("seed", range(5))
def test_shuffle_of_compatible_automata(semiring, seed):
    lc = R("ab", [("ab", "ba")])
    r, s = commuting_rep(semiring, seed), commuting_rep(semiring, seed + 50)
    assert shuffle_compatible(lc, semiring)
    assert automaton_compatible(r, lc) and automaton_compatible(s, lc)
    assert automaton_compatible(rep_shuffle(r, s), lc)


def test_minimal_automaton_stays_compatible():
    lc = R("ab", [("ab", "ba")])
    for seed in range(5):
        r = commuting_rep(RATIONAL, seed, dim=3)
        assert automaton_compatible(minimize(r).reduced, lc)
    li = R("ab", [("a", "b")])
    for seed in range(3):
        r = commuting_rep(RATIONAL, seed)
        r = LinearRepresentation(RATIONAL, "ab", r.lam, {"a": r.mu["a"], "b": r.mu["a"]}, r.gamma)
        assert automaton_compatible(minimize(r).reduced, li)


# -- tensor congruence and shuffle compatibility ------------------------------------


def test_tensor_congruence_examples():
    lc = R("cd", [("cd", "dc")])
    assert tensor_congruent(coproduct_word("cd"), coproduct_word("dc"), lc, RATIONAL)
    p = coproduct_word("abba")
    assert tensor_congruent(p, p, R("ab", [("a", "b")]), RATIONAL)
    le = R("a", [("a", "")])
    assert tensor_congruent(coproduct_word("a"), coproduct_word(""), le, BOOLEAN)
    assert not tensor_congruent(coproduct_word("a"), coproduct_word(""), le, RATIONAL)
    # coefficients already in the target semiring are taken as they are
    one = TensorPolynomial(Z2, {("", ""): 1})
    assert tensor_congruent(one, coproduct_word("").embed(Z2), le, Z2)


@pytest.mark.parametrize("sr", [RATIONAL, BOOLEAN, Z2, TROPICAL], ids=lambda s: s.tag)
def test_partial_commutation(sr):
    assert shuffle_compatible(R("ab", [("ab", "ba")]), sr)


def test_worked_verdicts():
    mixed = R("abcd", [("a", ""), ("a", "b"), ("cd", "dc")])
    assert shuffle_compatible(mixed, TROPICAL) and shuffle_compatible(mixed, BOOLEAN)
    assert not shuffle_compatible(mixed, RATIONAL)
    assert not shuffle_compatible(R("a", [("a", "")]), RATIONAL)
    assert not shuffle_compatible(R("a", [("a", "")]), NATURAL)
    assert shuffle_compatible(R("a", [("a", "")]), BOOLEAN)
    assert shuffle_compatible(R("ab", CHAR2), Z2)
    assert not shuffle_compatible(R("ab", CHAR2), RATIONAL)
    assert not shuffle_compatible(R("ab", CHAR2), zmod(3))


@pytest.mark.slow
def test_long_char2_relators():
    assert shuffle_compatible(R("ab", CHAR2_LONG), Z2)


def random_elementary(rng, alphabet="abc"):
    pairs = []
    for _ in range(rng.randint(1, 3)):
        kind = rng.choice(["le", "li", "lc"])
        x, y = rng.sample(alphabet, 2)
        pairs.append({"le": (x, ""), "li": (x, y), "lc": (x + y, y + x)}[kind])
    return R(alphabet, pairs)


@pytest.mark.parametrize("seed", range(12))
def test_classification_matches_computation(seed):
    rel = random_elementary(random.Random(seed))
    for sr in ALL_SEMIRINGS:
        verdict = predicted_compatibility(rel, sr)
        assert verdict in (Verdict.COMPATIBLE, Verdict.INCOMPATIBLE)
        assert (verdict == Verdict.COMPATIBLE) == shuffle_compatible(rel, sr)


@pytest.mark.parametrize("seed", range(8))
def test_identifications_and_commutations_always_pass(seed):
    rng = random.Random(seed)
    pairs = []
    for _ in range(rng.randint(1, 3)):
        x, y = rng.sample("abc", 2)
        pairs.append((x, y) if rng.random() < 0.5 else (x + y, y + x))
    rel = R("abc", pairs)
    assert all(shuffle_compatible(rel, sr) for sr in ALL_SEMIRINGS)


RELATOR_SAMPLES = [
    [("ab", "ba")],
    [("a", "")],
    [("a", "b"), ("bc", "cb")],
    CHAR2,
    [("abc", "cba")],
    [("aab", "aba")],
    [("ab", "ba"), ("ac", "ca")],
]


@pytest.mark.parametrize("pairs", RELATOR_SAMPLES, ids=str)
def test_transfer_from_naturals(pairs):
    rel = R("abc", pairs)
    if shuffle_compatible(rel, NATURAL):
        assert all(shuffle_compatible(rel, sr) for sr in ALL_SEMIRINGS)


@pytest.mark.parametrize("pairs", RELATOR_SAMPLES, ids=str)
@pytest.mark.parametrize("sub", ["a", "ab", "bc"])
def test_restriction_stability(pairs, sub):
    rel = R("abc", pairs)
    for sr in (RATIONAL, Z2, BOOLEAN):
        if shuffle_compatible(rel, sr):
            assert shuffle_compatible(rel.restrict(sub), sr)


def test_classification():
    kinds = classify_relators(R("abcd", [("a", ""), ("b", "c"), ("cd", "dc"), ("abab", "baba"), ("aa", "bb")]))
    assert kinds.le == (("a", ""),)
    assert kinds.li == (("b", "c"),)
    assert kinds.lc == (("cd", "dc"),)
    assert set(kinds.other) == {("abab", "baba"), ("aa", "bb")}


def test_predictions():
    le = R("a", [("a", "")])
    assert predicted_compatibility(le, BOOLEAN) == Verdict.COMPATIBLE
    assert predicted_compatibility(le, NATURAL) == Verdict.INCOMPATIBLE
    assert predicted_compatibility(le, INTEGER) == Verdict.INCOMPATIBLE
    assert predicted_compatibility(R("ab", CHAR2), Z2) == Verdict.UNKNOWN
    assert str(Verdict.UNKNOWN) == "unknown"
    # m(K) = 0 still gets a verdict for elementary relators
    assert additive_monoid_parameters(Z2)[0] == 0
    assert predicted_compatibility(le, Z2) == Verdict.INCOMPATIBLE
