import random

import pytest

from braidring.algebra import (
    CanonicalForm,
    Element,
    T_HALF,
    canonicalize,
    equals,
    generator,
)
from braidring.braid import (
    apply,
    format_braid_word,
    invert_braid_word,
    parse_braid_word,
    sigma_on_generator,
    verify_braid_relations,
    verify_inverse,
    verify_relation_preservation,
)
from braidring.coeffs import RationalFunction

ONE = RationalFunction.one()


class TestBraidWords:
    def test_parse(self):
        assert parse_braid_word("s1 s2 s1^-1") == ((1, 1), (2, 1), (1, -1))
        assert parse_braid_word("sigma3^+1") == ((3, 1),)
        assert parse_braid_word("") == ()

    def test_parse_rejects_garbage(self):
        with pytest.raises(ValueError):
            parse_braid_word("sx")
        with pytest.raises(ValueError):
            parse_braid_word("s1^2")

    def test_format_round_trip(self):
        w = ((1, 1), (2, -1), (1, 1))
        assert parse_braid_word(format_braid_word(w)) == w

    def test_invert(self):
        w = parse_braid_word("s1 s2^-1")
        assert invert_braid_word(w) == ((2, 1), (1, -1))


class TestSigmaOnGenerator:
    def test_same_index_shifts(self, a2):
        got = sigma_on_generator(1, 1, 0, 1, a2)
        assert got == generator(1, 1, a2)
        got = sigma_on_generator(1, 1, 5, -1, a2)
        assert got == generator(1, 4, a2)

    def test_orthogonal_fixed(self, a3):
        got = sigma_on_generator(1, 3, 2, 1, a3)
        assert got == generator(3, 2, a3)

    def test_adjacent_bracket(self, a2):
        got = sigma_on_generator(1, 2, 0, 1, a2)
        cf = canonicalize(got, a2)
        assert cf == CanonicalForm({((0, (1, 2)),): T_HALF})

    def test_adjacent_bracket_inverse(self, a2):
        got = sigma_on_generator(1, 2, 0, -1, a2)
        cf = canonicalize(got, a2)
        assert cf == CanonicalForm({((0, (2, 1)),): T_HALF})

    def test_index_checked(self, a2):
        with pytest.raises(ValueError):
            sigma_on_generator(3, 1, 0, 1, a2)
        with pytest.raises(ValueError):
            sigma_on_generator(1, 1, 0, 2, a2)


class TestApply:
    def test_identity_word(self, a2):
        x = generator(1, 0, a2) * generator(2, 1, a2)
        assert apply((), x, a2) == x

    def test_inverse_composition(self, a3):
        for j in a3.indices:
            for m in (-1, 0, 2):
                g = generator(j, m, a3)
                out = apply(((2, 1), (2, -1)), g, a3)
                assert equals(out, g, a3)

    def test_letterwise_on_same_index_product(self, a2):
        x = generator(1, 0, a2) * generator(1, 1, a2)
        got = apply(((1, 1),), x, a2)
        assert got == generator(1, 1, a2) * generator(1, 2, a2)

    def test_algebra_map_on_representatives(self, a3):
        rng = random.Random(13)
        for _ in range(30):
            w1 = tuple((rng.randint(1, 3), rng.randint(0, 2)) for _ in range(2))
            w2 = tuple((rng.randint(1, 3), rng.randint(0, 2)) for _ in range(2))
            x = Element({w1: ONE})
            y = Element({w2: RationalFunction.s_power(1)})
            word = ((rng.randint(1, 3), rng.choice((1, -1))),)
            assert apply(word, x * y, a3) == apply(word, x, a3) * apply(word, y, a3)

    def test_level_shift_covariance(self, a3):
        rng = random.Random(29)
        for _ in range(20):
            w = tuple((rng.randint(1, 3), rng.randint(0, 2)) for _ in range(3))
            x = Element({w: ONE})
            word = ((rng.randint(1, 3), rng.choice((1, -1))),)
            assert apply(word, x.shift_levels(1), a3) == \
                apply(word, x, a3).shift_levels(1)


class TestSuites:
    def test_relation_preservation_small(self, a2):
        for i in a2.indices:
            rep = verify_relation_preservation(i, a2, (0, 2))
            assert rep.passed and rep.instances

    def test_braid_relation_adjacent(self, a2):
        rep = verify_braid_relations(1, 2, a2, (0, 2))
        assert rep.passed

    def test_braid_relation_commuting(self, a3):
        rep = verify_braid_relations(1, 3, a3, (0, 2))
        assert rep.passed

    def test_braid_relation_wider_window(self, a2):
        rep = verify_braid_relations(1, 2, a2, (0, 3))
        assert rep.passed

    def test_braid_relation_branch_node(self, e6):
        rep = verify_braid_relations(2, 4, e6, (0, 1))
        assert rep.passed

    def test_inverse_d4(self, d4):
        rep = verify_inverse(2, d4, (0, 2))
        assert rep.passed

    def test_same_index_rejected(self, a2):
        with pytest.raises(ValueError):
            verify_braid_relations(1, 1, a2, (0, 1))

    def test_corrupted_action_fails_with_witness(self, a2):
        rep = verify_relation_preservation(1, a2, (0, 1), corrupt=True)
        assert not rep.passed
        assert all(f.witness and f.witness != "0" for f in rep.failures)
        rep = verify_inverse(1, a2, (0, 1), corrupt=True)
        assert not rep.passed
        rep = verify_braid_relations(1, 2, a2, (0, 1), corrupt=True)
        assert not rep.passed

    def test_report_json_shape(self, a2):
        rep = verify_inverse(1, a2, (0, 1))
        doc = rep.to_json()
        assert doc["passed"] is True
        assert doc["suite"] == "inverse"
        assert "elapsed" not in doc
        assert isinstance(doc["instances"], list)
