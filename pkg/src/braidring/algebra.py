"""The level-layered algebra: elements, straightening, canonical forms.

Elements are stored as free-algebra representatives: finite rational-function
combinations of words in generators ``y[i,m]`` (index ``i`` in the Dynkin
index set, level ``m`` any integer).  The defining relations are

* within a level: quantum Serre relations (imposed through the shuffle
  character, not by rewriting),
* between adjacent levels (the t-boson relation, ``d`` the Kronecker delta)::

      y[i,m] y[j,m+1] = t^a_ij y[j,m+1] y[i,m] + d_ij (1 - t^2)

* between levels at distance >= 2 (t-commutation)::

      y[i,m] y[j,p] = t^((-1)^(p-m+1) a_ij) y[j,p] y[i,m]

``straighten`` rewrites every word to nondecreasing levels by repeatedly
solving the exchange relations for the inverted product; ``canonicalize``
then splits each level-sorted word into constant-level blocks and replaces
each block by its shuffle character, producing a combination of level-tuples
of shuffle words.  That normal form has decidable equality.

Soundness is unconditional (every rewriting step is a defining relation and
the character kills exactly the within-level relations).  Completeness rests
on the standard fact that level-ordered products with independent
within-level characters stay independent; under that reading, canonical-form
equality is ring equality.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .cartan import CartanDatum
from .coeffs import LaurentPoly, RationalFunction
from .shuffle import _char_letters, format_word

__all__ = [
    "LayeredWord",
    "LayeredTuple",
    "Element",
    "CanonicalForm",
    "generator",
    "one",
    "zero",
    "add",
    "mul",
    "scalar",
    "straighten_step",
    "straighten",
    "straighten_randomized",
    "canonicalize",
    "canonicalize_randomized",
    "equals",
    "quantum_bracket",
    "defining_relation_elements",
    "T",
    "T_INV",
    "T_HALF",
    "T_HALF_INV",
    "BRACKET_DENOM",
]

LayeredWord = tuple  # tuple[(index, level), ...]
LayeredTuple = tuple  # tuple[(level, Word), ...] with strictly increasing levels

T = RationalFunction.s_power(2)
T_INV = RationalFunction.s_power(-2)
T_HALF = RationalFunction.s_power(1)
T_HALF_INV = RationalFunction.s_power(-1)
BRACKET_DENOM = T - T_INV  # t - t^(-1)
_BRACKET_DENOM_INV = BRACKET_DENOM.invert()
_RF_ONE = RationalFunction.one()


def _format_layered_word(w):
    if not w:
        return "1"
    return "*".join("y[%d,%d]" % (i, m) for i, m in w)


class Element:
    """Finite mapping from layered words to rational-function coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        t = {}
        if terms:
            for w, v in terms.items():
                if not isinstance(v, RationalFunction):
                    v = RationalFunction._coerce(v)
                if not v.is_zero:
                    t[w] = v
        self._terms = t

    @classmethod
    def _raw(cls, terms):
        e = object.__new__(cls)
        e._terms = terms
        return e

    @classmethod
    def zero(cls):
        return cls._raw({})

    @classmethod
    def one(cls):
        return cls._raw({(): _RF_ONE})

    def terms(self):
        return self._terms.items()

    def coefficient(self, word):
        return self._terms.get(word, RationalFunction.zero())

    @property
    def is_zero_representative(self):
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        """Representative-level equality; use :func:`equals` for ring equality."""
        return isinstance(other, Element) and self._terms == other._terms

    def __add__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        out = dict(self._terms)
        for w, v in other._terms.items():
            _acc(out, w, v)
        return Element._raw(out)

    def __neg__(self):
        return Element._raw({w: -v for w, v in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Element):
            out = {}
            for w1, v1 in self._terms.items():
                for w2, v2 in other._terms.items():
                    _acc(out, w1 + w2, v1 * v2)
            return Element._raw(out)
        c = RationalFunction._coerce(other)
        if c is None:
            return NotImplemented
        return self.scale(c)

    def __rmul__(self, other):
        c = RationalFunction._coerce(other)
        if c is None:
            return NotImplemented
        return self.scale(c)

    def scale(self, coeff):
        if not isinstance(coeff, RationalFunction):
            coeff = RationalFunction._coerce(coeff)
        if coeff.is_zero:
            return Element.zero()
        return Element._raw({w: v * coeff for w, v in self._terms.items()})

    def shift_levels(self, k):
        """Add k to the level of every letter."""
        if k == 0:
            return self
        return Element._raw({
            tuple((i, m + k) for i, m in w): v for w, v in self._terms.items()
        })

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for w in sorted(self._terms):
            v = self._terms[w]
            ws = _format_layered_word(w)
            if v.is_one:
                parts.append(ws)
            elif ws == "1":
                parts.append("(%s)" % v)
            else:
                parts.append("(%s)*%s" % (v, ws))
        return " + ".join(parts)

    def __repr__(self):
        return "Element(%s)" % self


def _acc(acc, word, coeff):
    cur = acc.get(word)
    nv = coeff if cur is None else cur + coeff
    if nv.is_zero:
        acc.pop(word, None)
    else:
        acc[word] = nv


def generator(i, m, c):
    c.check_index(i)
    return Element._raw({((int(i), int(m)),): _RF_ONE})


def one():
    return Element.one()


def zero():
    return Element.zero()


def add(x, y):
    return x + y


def mul(x, y):
    return x * y


def scalar(coeff, x):
    return x.scale(coeff)


# -- straightening -----------------------------------------------------------


def _leftmost_inversion(w):
    for p in range(len(w) - 1):
        if w[p][1] > w[p + 1][1]:
            return p
    return None


def _inversions(w):
    return [p for p in range(len(w) - 1) if w[p][1] > w[p + 1][1]]


def _step_terms(w, p, c, flip_gap_parity=False):
    """Rewrite the descending pair at position p; list of (word, LaurentPoly).

    Solves the exchange relation for the inverted product, so the returned
    words put the lower level first.  ``flip_gap_parity`` deliberately breaks
    the alternating exponent of the distance >= 2 case (negative controls).
    """
    (i, m), (j, mp) = w[p], w[p + 1]
    aij = c.a(i, j)
    swapped = w[:p] + ((j, mp), (i, m)) + w[p + 2:]
    if m == mp + 1:
        out = [(swapped, LaurentPoly.s_power(-2 * aij))]
        if i == j:
            # -t^(-2) (1 - t^2) = 1 - t^(-2)
            out.append((w[:p] + w[p + 2:],
                        LaurentPoly({0: 1, -4: Fraction(-1)})))
        return out
    gap = m - mp
    if flip_gap_parity:
        gap += 1
    e = aij if gap % 2 == 0 else -aij
    return [(swapped, LaurentPoly.s_power(2 * e))]


def straighten_step(w, p, c):
    """Apply one exchange step at position p (0-based); requires an inversion
    there, i.e. the level at p exceeds the level at p+1."""
    if not 0 <= p <= len(w) - 2:
        raise ValueError("position %d out of range for word of length %d" % (p, len(w)))
    if w[p][1] <= w[p + 1][1]:
        raise ValueError("no level inversion at position %d of %s" % (p, _format_layered_word(w)))
    out = {}
    for w2, lp in _step_terms(w, p, c):
        _acc(out, w2, RationalFunction.from_laurent(lp))
    return Element._raw(out)


@lru_cache(maxsize=None)
def _straighten_word(c, w):
    """Level-sort a word at the leftmost inversion, recursively; coefficients
    stay Laurent (no denominators arise while straightening)."""
    p = _leftmost_inversion(w)
    if p is None:
        return {w: LaurentPoly.one()}
    out = {}
    for w2, lp in _step_terms(w, p, c):
        for w3, lp3 in _straighten_word(c, w2).items():
            cur = out.get(w3)
            nv = lp * lp3 if cur is None else cur + lp * lp3
            if nv.is_zero:
                out.pop(w3, None)
            else:
                out[w3] = nv
    return out


def _straighten_word_shifted(c, w):
    if not w:
        return _straighten_word(c, w)
    off = min(m for _, m in w)
    if off == 0:
        return _straighten_word(c, w)
    base = _straighten_word(c, tuple((i, m - off) for i, m in w))
    return {tuple((i, m + off) for i, m in w2): lp for w2, lp in base.items()}


def straighten(x, c):
    """Deterministic straightening of every word of x to nondecreasing levels."""
    out = {}
    for w, coeff in x.terms():
        for w2, lp in _straighten_word_shifted(c, w).items():
            _acc(out, w2, coeff * RationalFunction.from_laurent(lp))
    return Element._raw(out)


def straighten_randomized(x, c, rng, flip_gap_parity=False):
    """Straighten with seeded random inversion selection.

    Exists to test that the normal form does not depend on the rewriting
    order.  ``flip_gap_parity`` is a deliberate corruption hook used only by
    negative controls.
    """
    done = {}
    pool = {}
    for w, coeff in x.terms():
        if _leftmost_inversion(w) is None:
            _acc(done, w, coeff)
        else:
            _acc(pool, w, coeff)
    while pool:
        words = sorted(pool)
        w = words[rng.randrange(len(words))]
        coeff = pool.pop(w)
        p = rng.choice(_inversions(w))
        for w2, lp in _step_terms(w, p, c, flip_gap_parity=flip_gap_parity):
            v = coeff * RationalFunction.from_laurent(lp)
            if _leftmost_inversion(w2) is None:
                _acc(done, w2, v)
            else:
                _acc(pool, w2, v)
    return Element._raw(done)


# -- canonical forms ----------------------------------------------------------


class CanonicalForm:
    """Combination of level-tuples of shuffle words; the decidable-equality
    surface of the algebra."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        t = {}
        if terms:
            for k, v in terms.items():
                if not v.is_zero:
                    t[k] = v
        self._terms = t

    @classmethod
    def _raw(cls, terms):
        f = object.__new__(cls)
        f._terms = terms
        return f

    def terms(self):
        return self._terms.items()

    def sorted_terms(self):
        return sorted(self._terms.items())

    @property
    def is_zero(self):
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        return isinstance(other, CanonicalForm) and self._terms == other._terms

    def single_term(self):
        """The (tuple, coefficient) pair; raises unless exactly one term."""
        if len(self._terms) != 1:
            raise ValueError("canonical form with %d terms" % len(self._terms))
        return next(iter(self._terms.items()))

    @staticmethod
    def _tuple_str(tup):
        if not tup:
            return "()"
        return "·".join("(%d,%s)" % (m, format_word(w)) for m, w in tup)

    def __str__(self):
        if not self._terms:
            return "0"
        items = self.sorted_terms()
        if len(items) == 1:
            (tup, coeff), = items
            body = "{%s: 1}" % self._tuple_str(tup)
            if coeff.is_one:
                return body
            cs = str(coeff)
            if not coeff.is_monomial and not cs.startswith("("):
                cs = "(%s)" % cs
            return "%s·%s" % (cs, body)
        return "{%s}" % ", ".join(
            "%s: %s" % (self._tuple_str(tup), coeff) for tup, coeff in items)

    def __repr__(self):
        return "CanonicalForm(%s)" % self

    def to_json(self):
        return [
            {"tuple": [[m, list(w)] for m, w in tup], "coeff": coeff.to_json()}
            for tup, coeff in self.sorted_terms()
        ]


def _split_blocks(w):
    blocks = []
    pos = 0
    while pos < len(w):
        m = w[pos][1]
        q = pos
        while q < len(w) and w[q][1] == m:
            q += 1
        blocks.append((m, tuple(i for i, _ in w[pos:q])))
        pos = q
    return blocks


@lru_cache(maxsize=None)
def _canonical_sorted_word(c, w):
    """Canonical tuples of a level-sorted word (Laurent coefficients)."""
    acc = {(): LaurentPoly.one()}
    for m, letters in _split_blocks(w):
        ch = _char_letters(c, letters)
        nxt = {}
        for tup, lp in acc.items():
            for word, lp2 in ch.items():
                key = tup + ((m, word),)
                cur = nxt.get(key)
                nv = lp * lp2 if cur is None else cur + lp * lp2
                if nv.is_zero:
                    nxt.pop(key, None)
                else:
                    nxt[key] = nv
        acc = nxt
    return acc


@lru_cache(maxsize=None)
def _canonical_word0(c, w):
    if _leftmost_inversion(w) is None:
        return _canonical_sorted_word(c, w)
    out = {}
    for w2, lp in _straighten_word(c, w).items():
        for tup, lp2 in _canonical_sorted_word(c, w2).items():
            cur = out.get(tup)
            nv = lp * lp2 if cur is None else cur + lp * lp2
            if nv.is_zero:
                out.pop(tup, None)
            else:
                out[tup] = nv
    return out


def _canonical_word(c, w):
    """Canonical tuples of a word, cached up to an overall level shift:
    straightening exponents depend only on level gaps and characters only
    on letters."""
    if not w:
        return _canonical_word0(c, w)
    off = min(m for _, m in w)
    if off == 0:
        return _canonical_word0(c, w)
    base = _canonical_word0(c, tuple((i, m - off) for i, m in w))
    return {tuple((m + off, word) for m, word in tup): lp
            for tup, lp in base.items()}


def canonicalize(x, c):
    acc = {}
    for w, coeff in x.terms():
        for tup, lp in _canonical_word(c, w).items():
            cur = acc.get(tup)
            nv = coeff * RationalFunction.from_laurent(lp)
            nv = nv if cur is None else cur + nv
            if nv.is_zero:
                acc.pop(tup, None)
            else:
                acc[tup] = nv
    return CanonicalForm._raw(acc)


def canonicalize_randomized(x, c, rng, flip_gap_parity=False):
    """Canonical form computed through the randomized rewriting strategy."""
    st = straighten_randomized(x, c, rng, flip_gap_parity=flip_gap_parity)
    acc = {}
    for w, coeff in st.terms():
        for tup, lp in _canonical_sorted_word(c, w).items():
            cur = acc.get(tup)
            nv = coeff * RationalFunction.from_laurent(lp)
            nv = nv if cur is None else cur + nv
            if nv.is_zero:
                acc.pop(tup, None)
            else:
                acc[tup] = nv
    return CanonicalForm._raw(acc)


def equals(x, y, c):
    """Ring equality through canonical forms."""
    return canonicalize(x - y, c).is_zero


def quantum_bracket(x, y):
    """(t^(1/2) x y - t^(-1/2) y x) / (t - t^(-1))."""
    num = (x * y).scale(T_HALF) - (y * x).scale(T_HALF_INV)
    return num.scale(_BRACKET_DENOM_INV)


# -- defining relation instances ----------------------------------------------


def defining_relation_elements(c, window, corrupt=False):
    """Yield (label, element) for every defining-relation instance whose
    generator levels lie in the window.

    Each element is LHS - RHS of a relation, so it must canonicalize to
    zero.  The distance >= 2 exchange is enumerated at gaps 2 and 3 only:
    the alternating exponent has period two, so those gaps exhaust the
    behavior.  ``corrupt`` damages the constant of the adjacent-level
    relation (negative controls).
    """
    lo, hi = window
    if lo > hi:
        raise ValueError("empty level window %r" % (window,))
    t_sq = T * T
    delta_const = Element.one().scale(_RF_ONE - (t_sq * T if corrupt else t_sq))
    for m in range(lo, hi + 1):
        for i in c.indices:
            yi = generator(i, m, c)
            for j in c.indices:
                yj = generator(j, m, c)
                aij = c.a(i, j)
                if aij == 0 and i < j:
                    yield ("(a) commuting i=%d j=%d m=%d" % (i, j, m),
                           yi * yj - yj * yi)
                elif aij == -1:
                    yield ("(a) serre i=%d j=%d m=%d" % (i, j, m),
                           yi * yi * yj - (yi * yj * yi).scale(T + T_INV) + yj * yi * yi)
        if m + 1 <= hi:
            for i in c.indices:
                yi = generator(i, m, c)
                for j in c.indices:
                    yjp = generator(j, m + 1, c)
                    rel = yi * yjp - (yjp * yi).scale(
                        RationalFunction.t_power(c.a(i, j)))
                    if i == j:
                        rel = rel - delta_const
                    yield ("(b) i=%d j=%d m=%d" % (i, j, m), rel)
        for gap in (2, 3):
            if m + gap > hi:
                continue
            sign = 1 if (gap + 1) % 2 == 0 else -1
            for i in c.indices:
                yi = generator(i, m, c)
                for j in c.indices:
                    yjp = generator(j, m + gap, c)
                    coeff = RationalFunction.t_power(sign * c.a(i, j))
                    yield ("(c) i=%d j=%d m=%d p=%d" % (i, j, m, m + gap),
                           yi * yjp - (yjp * yi).scale(coeff))
