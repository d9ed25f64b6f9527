"""Suite registry and run configuration shared by the service and the CLI."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from . import braid as braid_mod
from .algebra import (
    Element,
    canonicalize,
    canonicalize_randomized,
    defining_relation_elements,
    generator,
    T,
    T_INV,
)
from .braid import CheckReport
from .cartan import CartanDatum, from_label
from .coeffs import RationalFunction
from .shuffle import _char_letters, _shuffle_words, shuffle_mul
from .typea import TypeAContext, verify_proposition, verify_reflection_on_generators

__all__ = ["RunConfig", "SUITES", "available_suites", "run_config", "reports_document"]

SUITES = ("relations", "braid", "inverse", "proposition", "thm32", "shuffle", "property")
_ALIASES = {"thm32": "reflection"}
_KNOWN = set(SUITES) | {"reflection"}


@dataclass(frozen=True)
class RunConfig:
    """One verification run: a Cartan context (or type-A N), a level window,
    the suites to run, and a seed for the randomized suites."""

    cartan: CartanDatum | None = None
    n: int | None = None
    window: tuple = (0, 2)
    suites: tuple = ("all",)
    seed: int = 0
    corrupt: bool = False

    def __post_init__(self):
        if self.cartan is None and self.n is None:
            raise ValueError("a Cartan type or a type-A N is required")
        if self.cartan is not None and self.n is not None:
            raise ValueError("give either a Cartan type or N, not both")
        lo, hi = self.window
        if lo > hi:
            raise ValueError("window %r is empty" % (self.window,))
        for s in self.selected():
            if s not in _KNOWN:
                raise ValueError("unknown suite %r (known: %s, all)" % (s, ", ".join(SUITES)))
            if s in ("proposition", "thm32", "reflection") and self.n is None:
                raise ValueError("suite %r needs the type-A context (--N)" % s)

    def selected(self):
        if "all" in self.suites:
            base = ["relations", "braid", "inverse", "shuffle", "property"]
            if self.n is not None:
                base += ["proposition", "thm32"]
            return tuple(base)
        return tuple(self.suites)

    def datum(self):
        if self.cartan is not None:
            return self.cartan
        return TypeAContext(self.n).cartan

    def context(self):
        if self.n is None:
            raise ValueError("this suite needs the type-A context (--N)")
        return TypeAContext(self.n)

    @property
    def label(self):
        return "N=%d" % self.n if self.n is not None else self.datum().label


def run_config(type_label=None, n=None, window=(0, 2), suites=("all",), seed=0,
               corrupt=False):
    c = from_label(type_label) if type_label else None
    return RunConfig(cartan=c, n=n, window=tuple(window), suites=tuple(suites),
                     seed=seed, corrupt=corrupt)


# -- suite implementations ----------------------------------------------------


def _suite_relations(cfg):
    c = cfg.datum()
    rep = CheckReport("relations", cfg.label, cfg.window)
    start = time.perf_counter()
    for label, rel in defining_relation_elements(c, cfg.window, corrupt=cfg.corrupt):
        cf = canonicalize(rel, c)
        rep.record(label, cf.is_zero, str(cf))
    rep.elapsed = time.perf_counter() - start
    reports = [rep]
    for i in c.indices:
        reports.append(braid_mod.verify_relation_preservation(
            i, c, cfg.window, corrupt=cfg.corrupt))
    return reports


def _suite_braid(cfg):
    c = cfg.datum()
    rep = CheckReport("braid-relations", cfg.label, cfg.window)
    start = time.perf_counter()
    for i in c.indices:
        for j in c.indices:
            if i >= j:
                continue
            sub = braid_mod.verify_braid_relations(i, j, c, cfg.window,
                                                   corrupt=cfg.corrupt)
            rep.instances.extend(sub.instances)
            rep.failures.extend(sub.failures)
    rep.elapsed = time.perf_counter() - start
    return [rep]


def _suite_inverse(cfg):
    c = cfg.datum()
    rep = CheckReport("inverse", cfg.label, cfg.window)
    start = time.perf_counter()
    for i in c.indices:
        sub = braid_mod.verify_inverse(i, c, cfg.window, corrupt=cfg.corrupt)
        rep.instances.extend(sub.instances)
        rep.failures.extend(sub.failures)
    rep.elapsed = time.perf_counter() - start
    return [rep]


def _suite_proposition(cfg):
    return [verify_proposition(cfg.context(), cfg.window, corrupt=cfg.corrupt)]


def _suite_reflection(cfg):
    return [verify_reflection_on_generators(cfg.context(), cfg.window,
                                            corrupt=cfg.corrupt)]


def _random_word(rng, rank, max_len):
    return tuple(rng.randint(1, rank) for _ in range(rng.randint(0, max_len)))


def _suite_shuffle(cfg, triples=500):
    """Serre/commuting vanishing on every edge/non-edge plus seeded
    associativity of the shuffle product."""
    c = cfg.datum()
    rep = CheckReport("shuffle", cfg.label, cfg.window, seed=cfg.seed)
    start = time.perf_counter()
    one = RationalFunction.one()
    t_plus = T + T_INV if not cfg.corrupt else T + T_INV * T_INV
    for i in c.indices:
        for j in c.indices:
            if i == j:
                continue
            if c.adjacent(i, j):
                combo = {}
                for letters, coeff in (((i, i, j), one), ((i, j, i), -t_plus),
                                       ((j, i, i), one)):
                    for w, v in _char_letters(c, letters).items():
                        cur = combo.get(w, RationalFunction.zero())
                        nv = cur + coeff * RationalFunction.from_laurent(v)
                        if nv.is_zero:
                            combo.pop(w, None)
                        else:
                            combo[w] = nv
                rep.record("serre i=%d j=%d" % (i, j), not combo,
                           ", ".join("%s: %s" % (w, v) for w, v in sorted(combo.items())))
            elif i < j:
                combo = {}
                for letters, coeff in (((i, j), one), ((j, i), -one)):
                    for w, v in _char_letters(c, letters).items():
                        cur = combo.get(w, RationalFunction.zero())
                        nv = cur + coeff * RationalFunction.from_laurent(v)
                        if nv.is_zero:
                            combo.pop(w, None)
                        else:
                            combo[w] = nv
                rep.record("commuting i=%d j=%d" % (i, j), not combo,
                           ", ".join("%s: %s" % (w, v) for w, v in sorted(combo.items())))
    rng = random.Random(cfg.seed)
    rank = min(c.rank, 4)
    for k in range(triples):
        u = {_random_word(rng, rank, 4): one}
        v = {_random_word(rng, rank, 4): one}
        w = {_random_word(rng, rank, 4): one}
        lhs = shuffle_mul(shuffle_mul(u, v, c), w, c)
        rhs = shuffle_mul(u, shuffle_mul(v, w, c), c)
        ok = lhs == rhs
        if not ok or k < 1:
            rep.record("associativity #%d" % k, ok, "" if ok else str(sorted(lhs)))
        else:
            rep.instances.append("associativity #%d" % k)
    rep.elapsed = time.perf_counter() - start
    return [rep]


def _random_element(rng, c, window):
    lo, hi = window
    out = Element.zero()
    for _ in range(rng.randint(1, 3)):
        word = tuple((rng.randint(1, c.rank), rng.randint(lo, hi))
                     for _ in range(rng.randint(0, 3)))
        coeff = RationalFunction.s_power(rng.randint(-2, 2), rng.randint(1, 3))
        out = out + Element({word: coeff})
    return out


def _suite_property(cfg, elements=100, triples=200):
    """Rewriting-order independence of the canonical form and associativity
    after canonicalization, on seeded random elements."""
    c = cfg.datum()
    rep = CheckReport("property", cfg.label, cfg.window, seed=cfg.seed)
    start = time.perf_counter()
    rng = random.Random(cfg.seed)
    for k in range(elements):
        x = _random_element(rng, c, cfg.window)
        det = canonicalize(x, c)
        rnd = canonicalize_randomized(x, c, rng, flip_gap_parity=cfg.corrupt)
        ok = det == rnd
        rep.record("rewrite-order #%d" % k, ok,
                   "" if ok else "det %s vs random %s" % (det, rnd))
    for k in range(triples):
        a = _random_element(rng, c, cfg.window)
        b = _random_element(rng, c, cfg.window)
        d = _random_element(rng, c, cfg.window)
        lhs = canonicalize((a * b) * d, c)
        rhs = canonicalize(a * (b * d), c)
        ok = lhs == rhs
        rep.record("associativity #%d" % k, ok, "" if ok else str(lhs))
    rep.elapsed = time.perf_counter() - start
    return [rep]


_RUNNERS = {
    "relations": _suite_relations,
    "braid": _suite_braid,
    "inverse": _suite_inverse,
    "proposition": _suite_proposition,
    "reflection": _suite_reflection,
    "shuffle": _suite_shuffle,
    "property": _suite_property,
}


def available_suites():
    return SUITES + ("all",)


def run(cfg):
    """Run the configured suites; reports in a deterministic order."""
    reports = []
    for name in cfg.selected():
        runner = _RUNNERS[_ALIASES.get(name, name)]
        reports.extend(runner(cfg))
    return reports


def reports_document(cfg, reports):
    """Stable JSON-ready document; excludes timing so identical seeds give
    byte-identical output."""
    return {
        "config": {
            "label": cfg.label,
            "window": list(cfg.window),
            "suites": list(cfg.selected()),
            "seed": cfg.seed,
            "corrupt": cfg.corrupt,
        },
        "passed": all(r.passed for r in reports),
        "reports": [r.to_json() for r in reports],
    }


def render_text(reports):
    lines = []
    for r in reports:
        lines.append(r.summary())
        for note in r.notes:
            lines.append("    note: %s" % note)
        for f in r.failures:
            lines.append("    FAIL %s" % f.instance)
            lines.append("         witness: %s" % f.witness)
    total = sum(len(r.instances) for r in reports)
    bad = sum(len(r.failures) for r in reports)
    lines.append("total: %d instances, %d failures" % (total, bad))
    return "\n".join(lines)
