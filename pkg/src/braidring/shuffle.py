"""Words over the Dynkin index set and the quantum shuffle product.

The within-level part of the layered algebra is a copy of the negative half
of the quantized enveloping algebra; its defining quantum Serre relations
are not rewritten away but killed by a character map into the shuffle
algebra realized here.  The product is the bilinear extension of

    (u.a) sh (v.b) = (u sh (v.b)).a + t^(-(wt(u.a), alpha_b)) ((u.a) sh v).b

where ``w.x`` appends the letter ``x`` and ``wt`` is the letter content in
the root lattice.  Characters of generator products fold the single-letter
words through this product last-letter-first, which orients segment words
ascending; see :func:`char_of_generator_product`.
"""

from __future__ import annotations

from functools import lru_cache

from .coeffs import LaurentPoly, RationalFunction

__all__ = [
    "Word",
    "WordCombination",
    "content",
    "format_word",
    "shuffle_mul",
    "char_of_generator_product",
    "combination_is_zero",
]

Word = tuple[int, ...]
# WordCombination: finite mapping Word -> RationalFunction, no zero values.
WordCombination = dict


def content(word, c):
    """Letter multiset of a word as a root-lattice element (index -> count)."""
    out = {}
    for i in word:
        c.check_index(i)
        out[i] = out.get(i, 0) + 1
    return out


def format_word(word):
    return "(%s)" % ",".join(str(i) for i in word)


def _add_term(acc, word, coeff):
    cur = acc.get(word)
    nv = coeff if cur is None else cur + coeff
    if nv.is_zero:
        acc.pop(word, None)
    else:
        acc[word] = nv


@lru_cache(maxsize=None)
def _shuffle_words(c, u, v):
    """Shuffle of two plain words; values are Laurent polynomials in s."""
    if not u:
        return {v: LaurentPoly.one()}
    if not v:
        return {u: LaurentPoly.one()}
    out = {}
    a = u[-1]
    b = v[-1]
    for w, coeff in _shuffle_words(c, u[:-1], v).items():
        _add_term(out, w + (a,), coeff)
    # t-exponent: minus the pairing of the whole first factor with alpha_b
    tw = -2 * sum(c.a(x, b) for x in u)
    for w, coeff in _shuffle_words(c, u, v[:-1]).items():
        _add_term(out, w + (b,), coeff.shift(tw))
    return out


def shuffle_mul(u, v, c):
    """Bilinear quantum shuffle product of two word combinations."""
    out = {}
    for wu, cu in u.items():
        for wv, cv in v.items():
            scale = cu * cv
            if scale.is_zero:
                continue
            for w, lp in _shuffle_words(c, wu, wv).items():
                _add_term(out, w, scale * RationalFunction.from_laurent(lp))
    return out


@lru_cache(maxsize=None)
def _char_letters(c, letters):
    """Character of the generator product with the given index sequence.

    The letters are folded through the shuffle product starting from the
    last one, so the first factor of the product contributes the leftmost
    letter of the dominant word.
    """
    for i in letters:
        c.check_index(i)
    if len(letters) <= 1:
        return {letters: LaurentPoly.one()}
    tail = _char_letters(c, letters[1:])
    head = (letters[0],)
    out = {}
    for w, coeff in tail.items():
        for w2, tw in _shuffle_words(c, w, head).items():
            _add_term(out, w2, tw * coeff)
    return out


def char_of_generator_product(letters, c):
    """WordCombination realizing a product of same-level generators."""
    raw = _char_letters(c, tuple(letters))
    return {w: RationalFunction.from_laurent(lp) for w, lp in raw.items()}


def combination_is_zero(u):
    return not u
