"""Words, finite-support polynomials and linear representations.

Letters are single lowercase characters and words are plain strings over
the alphabet; the empty string is the unit word.  A
:class:`LinearRepresentation` ``(lam, mu, gamma)`` recognizes the series
whose coefficient at ``w`` is ``lam · mu(w) · gamma``.
"""

from __future__ import annotations

import string
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator, Mapping

from . import matrices as mx
from .errors import InvalidWordError, MismatchError
from .semiring import Semiring

__all__ = [
    "normalize_alphabet",
    "check_word",
    "words_up_to",
    "LinearRepresentation",
    "SeriesPolynomial",
    "TensorPolynomial",
    "coefficient",
    "truncate",
    "letter_rep",
    "constant_rep",
    "zero_rep",
    "is_proper",
    "check_compatible",
]


def normalize_alphabet(alphabet: Iterable[str]) -> tuple[str, ...]:
    letters = tuple(alphabet)
    if len(set(letters)) != len(letters):
        raise ValueError(f"alphabet has repeated letters: {letters!r}")
    for letter in letters:
        if len(letter) != 1 or letter not in string.ascii_lowercase:
            raise ValueError(f"letters must be single characters a-z, got {letter!r}")
    return letters


def check_word(word: str, alphabet: tuple[str, ...]) -> str:
    for letter in word:
        if letter not in alphabet:
            raise InvalidWordError(f"letter {letter!r} of {word!r} is not in alphabet {''.join(alphabet)!r}")
    return word


def words_up_to(alphabet: Iterable[str], max_len: int) -> Iterator[str]:
    """All words of length <= max_len, by length then alphabet order."""
    alphabet = tuple(alphabet)
    for n in range(max_len + 1):
        for letters in product(alphabet, repeat=n):
            yield "".join(letters)


@dataclass(frozen=True, eq=True)
class LinearRepresentation:
    """A triplet ``(lam, mu, gamma)`` over ``semiring``.

    ``mu`` maps every letter of ``alphabet`` to a ``dim x dim`` matrix.  The
    instance is treated as immutable; do not mutate the mapping.
    """

    semiring: Semiring
    alphabet: tuple[str, ...]
    lam: tuple
    mu: Mapping[str, tuple]
    gamma: tuple

    def __post_init__(self):
        object.__setattr__(self, "alphabet", normalize_alphabet(self.alphabet))
        object.__setattr__(self, "lam", tuple(self.lam))
        object.__setattr__(self, "gamma", tuple(self.gamma))
        n = len(self.lam)
        if len(self.gamma) != n:
            raise ValueError(f"lambda has length {n} but gamma has length {len(self.gamma)}")
        if set(self.mu) != set(self.alphabet):
            raise ValueError("mu must have exactly one matrix per letter")
        mu = {}
        for letter in self.alphabet:
            m = tuple(tuple(row) for row in self.mu[letter])
            if len(m) != n or any(len(row) != n for row in m):
                raise ValueError(f"mu({letter}) is not {n}x{n}")
            mu[letter] = m
        object.__setattr__(self, "mu", mu)

    @property
    def dim(self) -> int:
        return len(self.lam)

    def matrix(self, word: str):
        """The product ``mu(word)``."""
        check_word(word, self.alphabet)
        m = mx.identity(self.semiring, self.dim)
        for letter in word:
            m = mx.mat_mul(self.semiring, m, self.mu[letter])
        return m

    def transpose(self) -> LinearRepresentation:
        """Representation of the mirror series (coefficient at ``w`` is that at reversed ``w``)."""
        mu = {a: mx.transpose(m, self.dim) for a, m in self.mu.items()}
        return LinearRepresentation(self.semiring, self.alphabet, self.gamma, mu, self.lam)

    def __repr__(self):
        return f"LinearRepresentation({self.semiring.tag}, {''.join(self.alphabet)!r}, dim={self.dim})"


def check_compatible(*reps: LinearRepresentation) -> None:
    first = reps[0]
    for other in reps[1:]:
        if other.semiring != first.semiring:
            raise MismatchError(f"semirings differ: {first.semiring.tag} vs {other.semiring.tag}")
        if other.alphabet != first.alphabet:
            raise MismatchError(f"alphabets differ: {first.alphabet} vs {other.alphabet}")


def coefficient(rep: LinearRepresentation, w: str):
    """``<S|w> = lam · mu(w) · gamma``, evaluated left to right."""
    check_word(w, rep.alphabet)
    sr = rep.semiring
    v = rep.lam
    for letter in w:
        v = mx.vec_mat(sr, v, rep.mu[letter])
    return mx.dot(sr, v, rep.gamma)


class SeriesPolynomial:
    """Finite-support series; zero coefficients are never stored."""

    __slots__ = ("semiring", "alphabet", "_coeffs")

    def __init__(self, semiring: Semiring, alphabet: Iterable[str], coeffs: Mapping[str, object] | None = None):
        self.semiring = semiring
        self.alphabet = normalize_alphabet(alphabet)
        self._coeffs: dict[str, object] = {}
        for word, value in (coeffs or {}).items():
            check_word(word, self.alphabet)
            value = semiring.coerce(value)
            if not semiring.is_zero(value):
                self._coeffs[word] = value

    @classmethod
    def _trusted(cls, semiring, alphabet, coeffs):
        poly = cls.__new__(cls)
        poly.semiring = semiring
        poly.alphabet = alphabet
        poly._coeffs = {w: c for w, c in coeffs.items() if not semiring.is_zero(c)}
        return poly

    def __getitem__(self, word: str):
        return self._coeffs.get(word, self.semiring.zero)

    def __iter__(self):
        return iter(self._coeffs)

    def __len__(self):
        return len(self._coeffs)

    def items(self):
        return self._coeffs.items()

    def support(self) -> set[str]:
        return set(self._coeffs)

    def restrict(self, max_len: int) -> SeriesPolynomial:
        return SeriesPolynomial._trusted(
            self.semiring, self.alphabet, {w: c for w, c in self._coeffs.items() if len(w) <= max_len}
        )

    def __add__(self, other: SeriesPolynomial) -> SeriesPolynomial:
        sr = self.semiring
        out = dict(self._coeffs)
        for w, c in other.items():
            out[w] = sr.add(out.get(w, sr.zero), c)
        return SeriesPolynomial._trusted(sr, self.alphabet, out)

    def scale(self, k) -> SeriesPolynomial:
        sr = self.semiring
        return SeriesPolynomial._trusted(sr, self.alphabet, {w: sr.mul(k, c) for w, c in self._coeffs.items()})

    def __eq__(self, other):
        if not isinstance(other, SeriesPolynomial):
            return NotImplemented
        if self.semiring != other.semiring or set(self._coeffs) != set(other._coeffs):
            return False
        return all(self.semiring.eq(c, other._coeffs[w]) for w, c in self._coeffs.items())

    def __repr__(self):
        return f"SeriesPolynomial({self})"

    def __str__(self):
        if not self._coeffs:
            return "0"
        fmt = self.semiring.format
        terms = sorted(self._coeffs.items(), key=lambda kv: (len(kv[0]), kv[0]))
        return " + ".join(f"{fmt(c)}·{w or '1'}" for w, c in terms)


class TensorPolynomial:
    """Finite-support element of the tensor square, keyed by word pairs."""

    __slots__ = ("semiring", "_coeffs")

    def __init__(self, semiring: Semiring, coeffs: Mapping[tuple[str, str], object] | None = None):
        self.semiring = semiring
        self._coeffs = {}
        for pair, value in (coeffs or {}).items():
            value = semiring.coerce(value)
            if not semiring.is_zero(value):
                self._coeffs[tuple(pair)] = value

    @classmethod
    def _trusted(cls, semiring, coeffs):
        poly = cls.__new__(cls)
        poly.semiring = semiring
        poly._coeffs = {p: c for p, c in coeffs.items() if not semiring.is_zero(c)}
        return poly

    @classmethod
    def unit(cls, semiring: Semiring) -> TensorPolynomial:
        return cls._trusted(semiring, {("", ""): semiring.one})

    def __getitem__(self, pair):
        return self._coeffs.get(tuple(pair), self.semiring.zero)

    def __iter__(self):
        return iter(self._coeffs)

    def __len__(self):
        return len(self._coeffs)

    def items(self):
        return self._coeffs.items()

    def support(self) -> set[tuple[str, str]]:
        return set(self._coeffs)

    def __mul__(self, other: TensorPolynomial) -> TensorPolynomial:
        """Product ``(u1⊗v1)(u2⊗v2) = u1u2 ⊗ v1v2`` extended bilinearly."""
        sr = self.semiring
        out: dict = {}
        for (u1, v1), c1 in self._coeffs.items():
            for (u2, v2), c2 in other._coeffs.items():
                key = (u1 + u2, v1 + v2)
                out[key] = sr.add(out.get(key, sr.zero), sr.mul(c1, c2))
        return TensorPolynomial._trusted(sr, out)

    def embed(self, target: Semiring) -> TensorPolynomial:
        """Push natural-number coefficients into ``target`` through ``nat_embed``."""
        if self.semiring == target:
            return self
        if self.semiring.tag != "natural":
            raise MismatchError(f"can only embed natural coefficients, not {self.semiring.tag}")
        return TensorPolynomial._trusted(target, {p: target.nat_embed(c) for p, c in self._coeffs.items()})

    def __eq__(self, other):
        if not isinstance(other, TensorPolynomial):
            return NotImplemented
        if self.semiring != other.semiring or set(self._coeffs) != set(other._coeffs):
            return False
        return all(self.semiring.eq(c, other._coeffs[p]) for p, c in self._coeffs.items())

    def __repr__(self):
        if not self._coeffs:
            return "TensorPolynomial(0)"
        fmt = self.semiring.format
        terms = sorted(self._coeffs.items(), key=lambda kv: (len(kv[0][0]) + len(kv[0][1]), kv[0]))
        return "TensorPolynomial(" + " + ".join(f"{fmt(c)}·{u or '1'}⊗{v or '1'}" for (u, v), c in terms) + ")"


def truncate(rep: LinearRepresentation, max_len: int) -> SeriesPolynomial:
    """Coefficients of all words of length <= max_len (zeros dropped)."""
    sr = rep.semiring
    coeffs = {}
    layer = {"": rep.lam}
    for length in range(max_len + 1):
        next_layer = {}
        for word, v in layer.items():
            coeffs[word] = mx.dot(sr, v, rep.gamma)
            if length < max_len:
                for letter in rep.alphabet:
                    next_layer[word + letter] = mx.vec_mat(sr, v, rep.mu[letter])
        layer = next_layer
    return SeriesPolynomial._trusted(sr, rep.alphabet, coeffs)


def letter_rep(sr: Semiring, alphabet: Iterable[str], letter: str) -> LinearRepresentation:
    """Two-state representation of the single word ``letter``."""
    alphabet = normalize_alphabet(alphabet)
    check_word(letter, alphabet)
    if len(letter) != 1:
        raise InvalidWordError(f"expected a single letter, got {letter!r}")
    z, o = sr.zero, sr.one
    mu = {a: ((z, o if a == letter else z), (z, z)) for a in alphabet}
    return LinearRepresentation(sr, alphabet, (o, z), mu, (z, o))


def constant_rep(sr: Semiring, alphabet: Iterable[str], k) -> LinearRepresentation:
    """One-state representation of ``k·1`` (the empty word weighted by ``k``)."""
    alphabet = normalize_alphabet(alphabet)
    mu = {a: ((sr.zero,),) for a in alphabet}
    return LinearRepresentation(sr, alphabet, (sr.coerce(k),), mu, (sr.one,))


def zero_rep(sr: Semiring, alphabet: Iterable[str], dim: int = 0) -> LinearRepresentation:
    alphabet = normalize_alphabet(alphabet)
    zero_matrix = mx.zeros(sr, dim, dim)
    return LinearRepresentation(sr, alphabet, (sr.zero,) * dim, {a: zero_matrix for a in alphabet}, (sr.zero,) * dim)


def is_proper(rep: LinearRepresentation) -> bool:
    """True when the constant term ``lam · gamma`` vanishes."""
    return rep.semiring.is_zero(mx.dot(rep.semiring, rep.lam, rep.gamma))
