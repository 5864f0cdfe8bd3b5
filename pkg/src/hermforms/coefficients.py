"""Formal scalar ring for conformal-factor computations.

A coefficient is a finite sum of terms

    c * e^(a*s) * w_1(s) * ... * w_r(s)

with c a Gaussian rational, a a rational exponent, s a fixed real symbol (the
conformal exponent) and each w_j a derivative word: a composition of frame
vector fields applied to s, kept in PBW normal order with respect to the
fixed frame order V_1 < ... < V_n < Vb_1 < ... < Vb_n.  Distinct normal-
ordered words are treated as algebraically independent symbols, so is_zero
decides identical vanishing in the free model.

Frame directions are integers 0..L-1.  In complex mode direction j < n is
V_{j+1} and direction n+j is its conjugate Vb_{j+1}; in real mode conjugation
fixes every direction.
"""

from __future__ import annotations

from fractions import Fraction

from .gaussian import GQ, ONE, ZERO, gq_sort_key, render_fraction

Word = tuple  # tuple[int, ...], non-decreasing once normalized
Monomial = tuple  # tuple[Word, ...], sorted


class Frame:
    """Directions, their conjugation involution and the frame brackets.

    ``brackets`` maps an ordered pair (a, b) with a < b to a dict
    {c: coeff} meaning [V_a, V_b] = sum_c coeff * V_c.  Missing pairs
    commute.
    """

    def __init__(self, size, conj=None, brackets=None):
        self.size = size
        self.conj = tuple(conj) if conj is not None else tuple(range(size))
        self.brackets = {
            k: {c: GQ.of(v) for c, v in row.items() if not GQ.of(v).is_zero()}
            for k, row in (brackets or {}).items()
        }
        self._normal_cache = {}

    def bracket(self, a, b):
        """[V_a, V_b] as a dict {direction: GQ}, for any order of a, b."""
        if a == b:
            return {}
        if a < b:
            return self.brackets.get((a, b), {})
        return {c: -v for c, v in self.brackets.get((b, a), {}).items()}

    def conj_word(self, word):
        return tuple(self.conj[a] for a in word)


def _merge_term(acc, key, coeff):
    cur = acc.get(key)
    coeff = coeff if cur is None else cur + coeff
    if coeff.is_zero():
        acc.pop(key, None)
    else:
        acc[key] = coeff


def normal_order_word(frame: Frame, word) -> dict:
    """PBW normal form of a single derivative word.

    Returns {normal_word: GQ} such that the operator ``word`` equals the
    returned combination.  Out-of-order adjacent pairs V_b V_a (a < b) are
    rewritten as V_a V_b - [V_a, V_b]; the commutator term is strictly
    shorter, so the rewriting terminates.
    """
    word = tuple(word)
    cached = frame._normal_cache.get(word)
    if cached is not None:
        return cached
    for i in range(len(word) - 1):
        b, a = word[i], word[i + 1]
        if b > a:
            swapped = word[:i] + (a, b) + word[i + 2:]
            result = dict(normal_order_word(frame, swapped))
            for c, v in frame.bracket(a, b).items():
                shorter = word[:i] + (c,) + word[i + 2:]
                for w2, v2 in normal_order_word(frame, shorter).items():
                    _merge_term(result, w2, -(v * v2))
            frame._normal_cache[word] = result
            return result
    result = {word: ONE}
    frame._normal_cache[word] = result
    return result


class FormalCoefficient:
    """Exact scalar: Gaussian-rational combination of e^(a s) times
    monomials in normal-ordered derivative words of s."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        # terms: {(exponent: Fraction, monomial): GQ}, already normalized
        self.terms = terms or {}

    # -- constructors -------------------------------------------------------
    @staticmethod
    def of(x) -> "FormalCoefficient":
        if isinstance(x, FormalCoefficient):
            return x
        z = GQ.of(x)
        if z.is_zero():
            return FormalCoefficient()
        return FormalCoefficient({(Fraction(0), ()): z})

    @staticmethod
    def exponential(a, coeff=ONE) -> "FormalCoefficient":
        """c * e^(a s)."""
        c = GQ.of(coeff)
        if c.is_zero():
            return FormalCoefficient()
        if not isinstance(a, Fraction):
            a = Fraction(a)
        return FormalCoefficient({(a, ()): c})

    @staticmethod
    def derivative_word(word, coeff=ONE) -> "FormalCoefficient":
        """c * w(s) for an already normal-ordered word w."""
        c = GQ.of(coeff)
        if c.is_zero():
            return FormalCoefficient()
        word = tuple(word)
        if any(word[i] > word[i + 1] for i in range(len(word) - 1)):
            raise ValueError("word %r is not normal ordered; use normalize" % (word,))
        return FormalCoefficient({(Fraction(0), (word,)): c})

    # -- predicates ----------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        """True when the value is a plain Gaussian rational."""
        if not self.terms:
            return True
        if len(self.terms) != 1:
            return False
        (a, mono), = self.terms.keys()
        return a == 0 and mono == ()

    def constant_value(self) -> GQ:
        if not self.terms:
            return ZERO
        if not self.is_constant():
            raise ValueError("coefficient is not a constant: %s" % self)
        return next(iter(self.terms.values()))

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    # -- ring operations ------------------------------------------------------
    def __add__(self, other):
        other = FormalCoefficient.of(other)
        if not self.terms:
            return other
        if not other.terms:
            return self
        acc = dict(self.terms)
        for key, v in other.terms.items():
            _merge_term(acc, key, v)
        return FormalCoefficient(acc)

    __radd__ = __add__

    def __neg__(self):
        return FormalCoefficient({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-FormalCoefficient.of(other))

    def __rsub__(self, other):
        return FormalCoefficient.of(other) + (-self)

    def __mul__(self, other):
        other = FormalCoefficient.of(other)
        acc = {}
        for (a1, m1), c1 in self.terms.items():
            for (a2, m2), c2 in other.terms.items():
                key = (a1 + a2, tuple(sorted(m1 + m2)))
                _merge_term(acc, key, c1 * c2)
        return FormalCoefficient(acc)

    __rmul__ = __mul__

    def scaled(self, z) -> "FormalCoefficient":
        z = GQ.of(z)
        if z.is_zero():
            return FormalCoefficient()
        return FormalCoefficient({k: v * z for k, v in self.terms.items()})

    def inverse_monomial(self) -> "FormalCoefficient":
        """Inverse of a single term c*e^(a s) with no derivative factors."""
        if len(self.terms) != 1:
            raise ValueError("only monomials are invertible: %s" % self)
        (a, mono), c = next(iter(self.terms.items()))
        if mono != ():
            raise ValueError("derivative factors are not invertible: %s" % self)
        return FormalCoefficient({(-a, ()): ONE / c})

    # -- structure-dependent operations ---------------------------------------
    def conjugate(self, frame: Frame) -> "FormalCoefficient":
        """Complex conjugate; s is real, words map to their barred mirror
        (re-normalized, since conjugation can break PBW order)."""
        acc = {}
        for (a, mono), c in self.terms.items():
            expansions = [normal_order_word(frame, frame.conj_word(w)) for w in mono]
            for combo, z in _expand_products(expansions):
                key = (a, tuple(sorted(combo)))
                _merge_term(acc, key, c.conjugate() * z)
        return FormalCoefficient(acc)

    def differentiate(self, direction: int, frame: Frame) -> "FormalCoefficient":
        """Apply the frame vector field V_direction by the product rule.

        V_a(e^(b s)) = b V_a(s) e^(b s); V_a(w(s)) = normalize(aw)(s);
        pure Gaussian rationals differentiate to zero.
        """
        acc = {}
        for (a, mono), c in self.terms.items():
            if a:
                key = (a, tuple(sorted(mono + ((direction,),))))
                _merge_term(acc, key, c * GQ(a))
            for j, w in enumerate(mono):
                rest = mono[:j] + mono[j + 1:]
                for w2, z in normal_order_word(frame, (direction,) + w).items():
                    key = (a, tuple(sorted(rest + (w2,))))
                    _merge_term(acc, key, c * z)
        return FormalCoefficient(acc)

    # -- equality / rendering ---------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, GQ, Fraction)):
            other = FormalCoefficient.of(other)
        if not isinstance(other, FormalCoefficient):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (kv[0][0], kv[0][1], gq_sort_key(kv[1])))

    def __repr__(self):
        return "FormalCoefficient(%s)" % self

    def __str__(self):
        return render_coefficient(self)


ZERO_FC = FormalCoefficient()
ONE_FC = FormalCoefficient.of(1)


def _expand_products(expansions):
    """Cartesian product of word expansions: yields (words tuple, GQ)."""
    combos = [((), ONE)]
    for exp in expansions:
        combos = [
            (words + (w,), z * z2)
            for words, z in combos
            for w, z2 in exp.items()
        ]
    return combos


def normalize(frame: Frame, raw_terms) -> FormalCoefficient:
    """Normal form of a term sum with arbitrarily ordered derivative words.

    ``raw_terms`` is an iterable of (coeff, exponent, words) with coeff a GQ
    (or int), exponent rational and words an iterable of direction tuples in
    any order.
    """
    acc = {}
    for coeff, exponent, words in raw_terms:
        coeff = GQ.of(coeff)
        if not isinstance(exponent, Fraction):
            exponent = Fraction(exponent)
        expansions = [normal_order_word(frame, tuple(w)) for w in words]
        for combo, z in _expand_products(expansions):
            key = (exponent, tuple(sorted(combo)))
            _merge_term(acc, key, coeff * z)
    return FormalCoefficient(acc)


# -- rendering ----------------------------------------------------------------

def direction_name(d: int, frame_size: int, n_holo=None) -> str:
    if n_holo is not None and d >= n_holo:
        return "Vb%d" % (d - n_holo + 1)
    return "V%d" % (d + 1)


def render_word(word, frame_size, n_holo=None) -> str:
    return " ".join(direction_name(d, frame_size, n_holo) for d in word) + " (s)"


def render_coefficient(f: FormalCoefficient, n_holo=None, frame_size=0) -> str:
    """Fixed textual convention: e.g. ``2 e^(-4 s) V3 Vb3 (s)``."""
    from .gaussian import render_gq

    if f.is_zero():
        return "0"
    pieces = []
    for (a, mono), c in f.sorted_terms():
        part = [render_gq(c)]
        if a:
            part.append("e^(%s s)" % render_fraction(a))
        for w in mono:
            part.append(render_word(w, frame_size, n_holo))
        pieces.append(" ".join(part))
    return " + ".join(pieces).replace("+ -", "- ")
