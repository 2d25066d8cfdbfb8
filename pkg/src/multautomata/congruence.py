"""Relators, congruence classes and compatibility with the shuffle.

A congruence is given by a finite relator set.  Supported relators are
length-preserving pairs ``(u, v)`` and letter erasures ``(a, 1)``.  Words
are first brought to an erased normal form: the erasable letters are the
letters ``a`` with ``a ≡ 1``, closed under the identifications the relators
induce once erasable letters are deleted.  What remains is a
length-preserving rewriting system, whose classes are finite and are
enumerated by breadth-first search.

A congruence is K-shuffle compatible when related words have
``≡⊗≡``-related shuffle coproducts; it suffices to test this on the
relators themselves (:func:`shuffle_compatible`).
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .dual import coproduct_word, rep_hadamard
from .errors import MismatchError, PreconditionError, UnsupportedRelatorError
from .semiring import Semiring, one_plus_one_equals_one
from .series import LinearRepresentation, TensorPolynomial, check_word, normalize_alphabet

__all__ = [
    "RelatorSet",
    "RelatorClassification",
    "Verdict",
    "parse_relators",
    "format_relators",
    "congruence_class",
    "canonical_word",
    "automaton_compatible",
    "tensor_congruent",
    "shuffle_compatible",
    "classify_relators",
    "predicted_compatibility",
    "hadamard_preserves_compatibility_check",
]


class RelatorSet:
    """Word pairs generating a congruence; pairs are sorted and deduplicated."""

    def __init__(self, alphabet: Iterable[str], pairs: Iterable[tuple[str, str]] = ()):
        self.alphabet = normalize_alphabet(alphabet)
        normalized = set()
        for u, v in pairs:
            check_word(u, self.alphabet)
            check_word(v, self.alphabet)
            if u != v:
                normalized.add((min(u, v), max(u, v)))
        self.pairs: tuple[tuple[str, str], ...] = tuple(sorted(normalized))
        self._rewriting = None

    def __iter__(self):
        return iter(self.pairs)

    def __len__(self):
        return len(self.pairs)

    def __eq__(self, other):
        return isinstance(other, RelatorSet) and (self.alphabet, self.pairs) == (other.alphabet, other.pairs)

    def __repr__(self):
        body = ", ".join(f"{u or '1'}={v or '1'}" for u, v in self.pairs)
        return f"RelatorSet({''.join(self.alphabet)!r}, [{body}])"

    def restrict(self, letters: Iterable[str]) -> RelatorSet:
        """Relators whose words only use ``letters``, over that subalphabet."""
        sub = tuple(a for a in self.alphabet if a in set(letters))
        keep = [(u, v) for u, v in self.pairs if set(u + v) <= set(sub)]
        return RelatorSet(sub, keep)

    # -- erased normal form -------------------------------------------------

    def _system(self):
        """Erasable letters and the length-preserving rules left after erasure."""
        if self._rewriting is not None:
            return self._rewriting
        erasable = {u or v for u, v in self.pairs if min(len(u), len(v)) == 0 and len(u + v) == 1}
        while True:
            rules = set()
            grew = False
            for u, v in self.pairs:
                eu = "".join(c for c in u if c not in erasable)
                ev = "".join(c for c in v if c not in erasable)
                if eu == ev:
                    continue
                if len(eu) == len(ev):
                    rules.add((eu, ev))
                elif min(len(eu), len(ev)) == 0 and len(eu + ev) == 1:
                    erasable.add(eu + ev)
                    grew = True
                else:
                    raise UnsupportedRelatorError(
                        f"relator {u or '1'} = {v or '1'} is neither length-preserving nor a letter erasure"
                    )
            if not grew:
                break
        self._rewriting = (frozenset(erasable), tuple(sorted(rules)))
        return self._rewriting

    @property
    def erasable_letters(self) -> frozenset[str]:
        return self._system()[0]

    def erase(self, word: str) -> str:
        erasable = self._system()[0]
        return "".join(c for c in word if c not in erasable)


def parse_relators(text: str, alphabet: Iterable[str] | None = None) -> RelatorSet:
    """Parse ``u = v`` lines; ``1`` is the empty word and ``#`` starts a comment.

    Without an explicit alphabet, the letters occurring in the file are used.
    """
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        sides = line.split("=")
        if len(sides) != 2:
            raise ValueError(f"line {lineno}: expected 'u = v', got {raw!r}")
        u, v = (side.strip() for side in sides)
        u, v = ("" if u == "1" else u), ("" if v == "1" else v)
        if not (u.isalpha() or u == "") or not (v.isalpha() or v == ""):
            raise ValueError(f"line {lineno}: words must be letters or 1, got {raw!r}")
        pairs.append((u, v))
    if alphabet is None:
        alphabet = sorted({c for u, v in pairs for c in u + v})
    return RelatorSet(alphabet, pairs)


def format_relators(rel: RelatorSet) -> str:
    return "".join(f"{u or '1'} = {v or '1'}\n" for u, v in rel.pairs)


def congruence_class(w: str, rel: RelatorSet) -> frozenset[str]:
    """Class of the erased normal form of ``w`` under the remaining rules."""
    check_word(w, rel.alphabet)
    _, rules = rel._system()
    start = rel.erase(w)
    seen = {start}
    queue = deque([start])
    while queue:
        word = queue.popleft()
        for u, v in rules:
            for src, dst in ((u, v), (v, u)):
                k = len(src)
                i = word.find(src)
                while i != -1:
                    image = word[:i] + dst + word[i + k:]
                    if image not in seen:
                        seen.add(image)
                        queue.append(image)
                    i = word.find(src, i + 1)
    return frozenset(seen)


def canonical_word(w: str, rel: RelatorSet, _cache: dict | None = None) -> str:
    """Lexicographically least word of the class of ``w``."""
    if _cache is not None and w in _cache:
        return _cache[w]
    cls = congruence_class(w, rel)
    least = min(cls)
    if _cache is not None:
        for member in cls:
            _cache[member] = least
        _cache[w] = least
    return least


def automaton_compatible(rep: LinearRepresentation, rel: RelatorSet) -> bool:
    """``mu(u) = mu(v)`` for every relator (enough since ``mu`` is a morphism)."""
    if rep.alphabet != rel.alphabet:
        raise MismatchError("automaton and relators use different alphabets")
    sr = rep.semiring
    for u, v in rel.pairs:
        mu_u, mu_v = rep.matrix(u), rep.matrix(v)
        if any(not sr.eq(x, y) for ru, rv in zip(mu_u, mu_v) for x, y in zip(ru, rv)):
            return False
    return True


def _project(poly: TensorPolynomial, rel: RelatorSet, target: Semiring, cache: dict) -> dict:
    poly = poly.embed(target)
    out: dict = {}
    for (u, v), c in poly.items():
        key = (canonical_word(u, rel, cache), canonical_word(v, rel, cache))
        out[key] = target.add(out.get(key, target.zero), c)
    return {k: c for k, c in out.items() if not target.is_zero(c)}


def tensor_congruent(p1: TensorPolynomial, p2: TensorPolynomial, rel: RelatorSet, semiring: Semiring) -> bool:
    """Equality of the images in ``K[A*/≡] ⊗ K[A*/≡]``.

    Natural-number coefficients are embedded into ``semiring`` first.
    """
    cache: dict = {}
    image1 = _project(p1, rel, semiring, cache)
    image2 = _project(p2, rel, semiring, cache)
    if set(image1) != set(image2):
        return False
    return all(semiring.eq(c, image2[k]) for k, c in image1.items())


def shuffle_compatible(rel: RelatorSet, semiring: Semiring) -> bool:
    """Whether ``≡_rel`` is K-shuffle compatible, checked relator by relator."""
    rel._system()
    return all(
        tensor_congruent(coproduct_word(u, "shuffle"), coproduct_word(v, "shuffle"), rel, semiring)
        for u, v in rel.pairs
    )


@dataclass(frozen=True)
class RelatorClassification:
    le: tuple[tuple[str, str], ...]
    li: tuple[tuple[str, str], ...]
    lc: tuple[tuple[str, str], ...]
    other: tuple[tuple[str, str], ...]


def classify_relators(rel: RelatorSet) -> RelatorClassification:
    """Split into erasures ``a = 1``, identifications ``a = b``, commutations ``ab = ba``."""
    le, li, lc, other = [], [], [], []
    for u, v in rel.pairs:
        if u == "" and len(v) == 1:
            le.append((v, ""))
        elif len(u) == len(v) == 1:
            li.append((u, v))
        elif len(u) == len(v) == 2 and u == v[::-1] and u[0] != u[1]:
            lc.append((u, v))
        else:
            other.append((u, v))
    return RelatorClassification(tuple(le), tuple(li), tuple(lc), tuple(other))


class Verdict(str, enum.Enum):
    COMPATIBLE = "compatible"
    INCOMPATIBLE = "incompatible"
    UNKNOWN = "unknown"

    def __str__(self):
        return self.value


def predicted_compatibility(rel: RelatorSet, semiring: Semiring) -> Verdict:
    """Verdict from the relator kinds alone, without computing coproducts.

    Relators outside the three elementary kinds give ``UNKNOWN``.  When
    ``m(K) != 0`` a set of elementary relators is compatible iff ``1+1 = 1``
    or it has no erasure.  When ``m(K) = 0`` no classification exists, but
    for elementary relators the same verdict still holds relator by relator:
    identifications and commutations are compatible over any semiring, and
    under ``a = 1`` the coproduct ``a⊗1 + 1⊗a`` collapses to ``(1+1)·1⊗1``.
    """
    kinds = classify_relators(rel)
    if kinds.other:
        return Verdict.UNKNOWN
    if kinds.le and not one_plus_one_equals_one(semiring):
        return Verdict.INCOMPATIBLE
    return Verdict.COMPATIBLE


def hadamard_preserves_compatibility_check(
    rep1: LinearRepresentation, rep2: LinearRepresentation, rel: RelatorSet
) -> bool:
    """Compatibility of the Hadamard product of two compatible automata."""
    if not (automaton_compatible(rep1, rel) and automaton_compatible(rep2, rel)):
        raise PreconditionError("both automata must be compatible with the relators")
    return automaton_compatible(rep_hadamard(rep1, rep2), rel)
