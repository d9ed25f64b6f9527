"""The braid group action on the layered algebra.

The generator images are

    sigma_i(y[j,m])      = y[j, m + d_ij]                     if a_ij != -1
                         = (t^(1/2) y[j,m] y[i,m]
                            - t^(-1/2) y[i,m] y[j,m]) / (t - t^(-1))   otherwise

    sigma_i^(-1)(y[j,m]) = y[j, m - d_ij]                     if a_ij != -1
                         = (t^(1/2) y[i,m] y[j,m]
                            - t^(-1/2) y[j,m] y[i,m]) / (t - t^(-1))   otherwise

extended to arbitrary elements multiplicatively and linearly.  That the
extension is well defined on the quotient (each sigma_i kills the defining
relations), the braid relations, and the inverse formulas are *checked*, not
assumed: the verify_* suites enumerate every instance over a level window
and report failures with the offending canonical form.
"""

from __future__ import annotations

import re
import time
from dataclasses import dataclass, field
from functools import lru_cache

from .algebra import (
    Element,
    canonicalize,
    defining_relation_elements,
    equals,
    generator,
    quantum_bracket,
    T_HALF,
)
from .coeffs import RationalFunction

__all__ = [
    "BraidWord",
    "parse_braid_word",
    "format_braid_word",
    "invert_braid_word",
    "sigma_on_generator",
    "apply",
    "Failure",
    "CheckReport",
    "verify_relation_preservation",
    "verify_braid_relations",
    "verify_inverse",
]

BraidWord = tuple  # tuple[(index, sign), ...], sign in {+1, -1}

_T = RationalFunction.s_power(2)


def parse_braid_word(text):
    """Parse braid words like "s1 s2 s1^-1" (also accepts sigma1, s3^+1)."""
    letters = []
    for tok in (text or "").split():
        m = re.fullmatch(r"(?:s|sigma)(\d+)(?:\^([+-]?1))?", tok)
        if not m:
            raise ValueError("cannot parse braid letter %r" % tok)
        sign = -1 if m.group(2) == "-1" else 1
        letters.append((int(m.group(1)), sign))
    return tuple(letters)


def format_braid_word(word):
    if not word:
        return "(identity)"
    return " ".join("s%d" % i if s > 0 else "s%d^-1" % i for i, s in word)


def invert_braid_word(word):
    return tuple((i, -s) for i, s in reversed(word))


@lru_cache(maxsize=None)
def _sigma_gen0(c, i, sign, j, corrupt):
    aij = c.a(i, j)
    if aij != -1:
        shift = sign if i == j else 0
        return Element._raw({((j, shift),): RationalFunction.one()})
    x, y = ((j, 0), (i, 0)) if sign > 0 else ((i, 0), (j, 0))
    el = quantum_bracket(Element._raw({(x,): RationalFunction.one()}),
                         Element._raw({(y,): RationalFunction.one()}))
    if corrupt and sign > 0:
        # negative-control damage: t^(1/2) -> t in the bracket numerator
        el = quantum_bracket(
            Element._raw({(x,): _T}),
            Element._raw({(y,): RationalFunction.one()}))
    return el


def _sigma_gen(c, i, sign, j, m, corrupt):
    # generator images commute with the level shift
    el = _sigma_gen0(c, i, sign, j, corrupt)
    return el if m == 0 else el.shift_levels(m)


def sigma_on_generator(i, j, m, sign, c, corrupt=False):
    """Image of y[j,m] under sigma_i (sign=+1) or its inverse (sign=-1)."""
    c.check_index(i)
    c.check_index(j)
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1, got %r" % (sign,))
    return _sigma_gen(c, i, sign, j, int(m), bool(corrupt))


@lru_cache(maxsize=None)
def _letter_on_word0(c, i, sign, w, corrupt):
    out = Element.one()
    for j, m in w:
        out = out * _sigma_gen(c, i, sign, j, m, corrupt)
    return out


def _letter_on_word(c, i, sign, w, corrupt):
    if not w:
        return Element.one()
    off = min(m for _, m in w)
    if off == 0:
        return _letter_on_word0(c, i, sign, w, corrupt)
    base = _letter_on_word0(c, i, sign, tuple((j, m - off) for j, m in w), corrupt)
    return base.shift_levels(off)


def _apply_letter(i, sign, x, c, corrupt):
    acc = {}
    for w, coeff in x.terms():
        img = _letter_on_word(c, i, sign, w, corrupt)
        for w2, c2 in img.terms():
            cur = acc.get(w2)
            nv = coeff * c2
            nv = nv if cur is None else cur + nv
            if nv.is_zero:
                acc.pop(w2, None)
            else:
                acc[w2] = nv
    return Element._raw(acc)


def apply(word, x, c, corrupt=False):
    """Apply a braid word to an element, letters acting right to left."""
    for i, sign in reversed(word):
        x = _apply_letter(i, sign, x, c, corrupt)
    return x


# -- verification suites -------------------------------------------------------


@dataclass
class Failure:
    instance: str
    witness: str

    def to_json(self):
        return {"instance": self.instance, "witness": self.witness}


@dataclass
class CheckReport:
    """Outcome of one verification suite.

    ``elapsed`` is wall-clock seconds; it is excluded from the JSON form so
    that identical seeds produce byte-identical reports.
    """

    suite: str
    label: str
    window: tuple
    instances: list = field(default_factory=list)
    failures: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    seed: int | None = None
    elapsed: float = 0.0

    @property
    def passed(self):
        return not self.failures

    def record(self, instance, ok, witness=""):
        self.instances.append(instance)
        if not ok:
            self.failures.append(Failure(instance, witness))

    def to_json(self):
        return {
            "suite": self.suite,
            "label": self.label,
            "window": list(self.window),
            "seed": self.seed,
            "instances": list(self.instances),
            "failures": [f.to_json() for f in self.failures],
            "notes": list(self.notes),
            "passed": self.passed,
        }

    def summary(self):
        state = "PASS" if self.passed else "FAIL"
        return "[%s] %-20s %-8s window=%d:%d instances=%d failures=%d (%.2fs)" % (
            state, self.suite, self.label, self.window[0], self.window[1],
            len(self.instances), len(self.failures), self.elapsed)


def _windowed_generators(c, window):
    lo, hi = window
    for m in range(lo, hi + 1):
        for k in c.indices:
            yield k, m


def verify_relation_preservation(i, c, window, corrupt=False):
    """Check that sigma_i and its inverse annihilate every defining-relation
    instance over the window."""
    c.check_index(i)
    report = CheckReport("relation-preservation", c.label, tuple(window))
    start = time.perf_counter()
    rels = list(defining_relation_elements(c, window))
    for sign in (1, -1):
        word = ((i, sign),)
        tag = "s%d" % i if sign > 0 else "s%d^-1" % i
        for label, rel in rels:
            image = apply(word, rel, c, corrupt=corrupt)
            cf = canonicalize(image, c)
            report.record("%s %s" % (tag, label), cf.is_zero, str(cf))
    report.elapsed = time.perf_counter() - start
    return report


def verify_braid_relations(i, j, c, window, corrupt=False):
    """Braid relation (adjacent indices) or commutation (orthogonal ones) on
    every windowed generator."""
    c.check_index(i)
    c.check_index(j)
    if i == j:
        raise ValueError("braid relation needs two distinct indices")
    aij = c.a(i, j)
    if aij == -1:
        w1 = ((i, 1), (j, 1), (i, 1))
        w2 = ((j, 1), (i, 1), (j, 1))
        kind = "braid"
    else:
        w1 = ((i, 1), (j, 1))
        w2 = ((j, 1), (i, 1))
        kind = "commute"
    report = CheckReport("braid-relations", c.label, tuple(window))
    start = time.perf_counter()
    for k, m in _windowed_generators(c, window):
        g = generator(k, m, c)
        lhs = apply(w1, g, c, corrupt=corrupt)
        rhs = apply(w2, g, c, corrupt=corrupt)
        diff = canonicalize(lhs - rhs, c)
        report.record("%s i=%d j=%d on y[%d,%d]" % (kind, i, j, k, m),
                      diff.is_zero, str(diff))
    report.elapsed = time.perf_counter() - start
    return report


def verify_inverse(i, c, window, corrupt=False):
    """sigma_i sigma_i^-1 and sigma_i^-1 sigma_i fix every windowed generator."""
    c.check_index(i)
    report = CheckReport("inverse", c.label, tuple(window))
    start = time.perf_counter()
    for k, m in _windowed_generators(c, window):
        g = generator(k, m, c)
        for word, tag in ((((i, 1), (i, -1)), "s%d s%d^-1" % (i, i)),
                          (((i, -1), (i, 1)), "s%d^-1 s%d" % (i, i))):
            diff = canonicalize(apply(word, g, c, corrupt=corrupt) - g, c)
            report.record("%s on y[%d,%d]" % (tag, k, m), diff.is_zero, str(diff))
    report.elapsed = time.perf_counter() - start
    return report
