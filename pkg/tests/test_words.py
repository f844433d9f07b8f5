"""Tests for the word calculus and the abelianization map."""

import random

import pytest

from mcgtorsion.errors import ParseError
from mcgtorsion.surfaces import chain_system, planar_arc_system, torus_system
from mcgtorsion.words import (
    HALFTWIST,
    TWIST,
    AbelianImage,
    Generator,
    Word,
    abelian_image,
    commutator,
    conjugate,
    empty_word,
    free_reduce,
    inverse,
    letter,
    parse_word,
    twist_modulus,
)

CHAIN2 = chain_system(2)
TORUS = torus_system()

# Ten positive chain twists whose homology matrix is -identity; its
# product with C1 C2 C3 C4 has order five.  Used across the test suite.
HYPERELLIPTIC2 = "C1 C2 C3 C4 C5^2 C4 C3 C2 C1"
ORDER5_WORD = HYPERELLIPTIC2 + " C1 C2 C3 C4"


def random_word(rng: random.Random, system, max_len: int = 12) -> Word:
    names = [c.name for c in system.curves]
    letters = tuple(
        letter(system, rng.choice(names), rng.choice((1, -1)))
        for _ in range(rng.randint(0, max_len))
    )
    return Word(letters, system)


class TestParsing:
    def test_exponents_expand(self):
        w = parse_word("C1 C2^3 C5^-2", CHAIN2)
        assert [(g.curve_name, g.sign) for g in w.letters] == [
            ("C1", 1),
            ("C2", 1),
            ("C2", 1),
            ("C2", 1),
            ("C5", -1),
            ("C5", -1),
        ]
        assert all(g.kind == TWIST for g in w.letters)

    def test_zero_exponent_vanishes(self):
        assert len(parse_word("C1^0", CHAIN2)) == 0

    def test_empty_text(self):
        assert parse_word("", CHAIN2) == empty_word(CHAIN2)

    def test_halftwists_on_arcs(self):
        system = planar_arc_system(6)
        w = parse_word("A1 A5^-1", system)
        assert [g.kind for g in w.letters] == [HALFTWIST, HALFTWIST]

    def test_unknown_curve_names_position(self):
        with pytest.raises(ParseError, match="letter 2"):
            parse_word("C1 X2", CHAIN2)

    def test_malformed_exponent_names_token(self):
        with pytest.raises(ParseError, match=r"C1\^"):
            parse_word("C1^ C2", CHAIN2)
        with pytest.raises(ParseError, match="letter 3"):
            parse_word("C1 C2 C3^1.5", CHAIN2)

    def test_case_insensitive_curve_spelling(self):
        assert parse_word("a b a", TORUS) == parse_word("A B A", TORUS)

    def test_round_trip_str(self):
        w = parse_word("C1 C2^-1 C3", CHAIN2)
        assert str(w) == "C1 C2^-1 C3"
        assert parse_word(str(w), CHAIN2) == w


class TestWordConstruction:
    def test_kind_mismatch_rejected(self):
        with pytest.raises(ValueError, match="only supports twists"):
            Word((Generator("C1", HALFTWIST, 1),), CHAIN2)
        system = planar_arc_system(4)
        with pytest.raises(ValueError, match="only supports half-twists"):
            Word((Generator("A1", TWIST, 1),), system)

    def test_mixed_system_concat_rejected(self):
        u = parse_word("C1", CHAIN2)
        v = parse_word("A", TORUS)
        with pytest.raises(ValueError, match="different systems"):
            u * v

    def test_bad_sign_rejected(self):
        with pytest.raises(ValueError):
            Generator("C1", TWIST, 2)


class TestFreeGroupOps:
    def test_free_reduce(self):
        w = parse_word("C1 C2 C2^-1 C1 C1^-1 C1^-1 C3", CHAIN2)
        assert free_reduce(w) == parse_word("C3", CHAIN2)

    def test_free_reduce_cascades(self):
        w = parse_word("C1 C2 C3 C3^-1 C2^-1 C1^-1", CHAIN2)
        assert free_reduce(w) == empty_word(CHAIN2)

    def test_inverse(self):
        w = parse_word("C1 C2^-1", CHAIN2)
        assert inverse(w) == parse_word("C2 C1^-1", CHAIN2)
        assert free_reduce(w * inverse(w)) == empty_word(CHAIN2)

    def test_conjugate_and_commutator(self):
        u = parse_word("C1", CHAIN2)
        w = parse_word("C2", CHAIN2)
        assert conjugate(w, u) == parse_word("C1 C2 C1^-1", CHAIN2)
        assert commutator(u, w) == parse_word("C1 C2 C1^-1 C2^-1", CHAIN2)

    def test_random_reduction_is_idempotent(self):
        rng = random.Random(3)
        for _ in range(100):
            w = random_word(rng, CHAIN2)
            reduced = free_reduce(w)
            assert free_reduce(reduced) == reduced
            assert free_reduce(w * inverse(w)) == empty_word(CHAIN2)


class TestAbelianImage:
    def test_twist_moduli(self):
        assert twist_modulus(1) == 12
        assert twist_modulus(2) == 10
        assert twist_modulus(3) == 1
        assert twist_modulus(7) == 1
        with pytest.raises(ValueError):
            twist_modulus(0)

    def test_order_five_word(self):
        w = parse_word(ORDER5_WORD, CHAIN2)
        image = abelian_image(w, 2, 0)
        assert image.components == (4, 0)
        assert image.twist_modulus == 10

    def test_hyperelliptic_word_vanishes(self):
        w = parse_word(HYPERELLIPTIC2, CHAIN2)
        assert abelian_image(w, 2, 0).components == (0, 0)

    def test_empty_word(self):
        assert abelian_image(empty_word(CHAIN2), 2, 0).is_zero

    def test_genus_three_kills_twists(self):
        cs = chain_system(3)
        w = parse_word("C1 C2 C3", cs)
        image = abelian_image(w, 3, 0)
        assert image.twist_modulus == 1
        assert image.components == (0, 0)

    def test_halftwist_component(self):
        system = planar_arc_system(6)
        w = parse_word("A1 A2 A3", system)
        image = abelian_image(w, 1, 6)
        assert image.halftwist_component == 1
        assert image.halftwist_modulus == 2
        assert abelian_image(parse_word("A1^2", system), 1, 6).is_zero

    def test_few_boundaries_trivialize_halftwists(self):
        w = parse_word("A B", TORUS)
        image = abelian_image(w, 1, 1)
        assert image.halftwist_modulus == 1
        assert image.components == (2, 0)

    def test_genus_zero_rejected(self):
        with pytest.raises(ValueError):
            abelian_image(empty_word(CHAIN2), 0, 5)

    def test_additive_on_concatenation(self):
        rng = random.Random(17)
        for _ in range(100):
            u = random_word(rng, CHAIN2)
            v = random_word(rng, CHAIN2)
            left = abelian_image(u * v, 2, 3)
            assert left == abelian_image(u, 2, 3) + abelian_image(v, 2, 3)

    def test_invariant_under_reduction_and_conjugation(self):
        rng = random.Random(19)
        for _ in range(100):
            w = random_word(rng, CHAIN2)
            u = random_word(rng, CHAIN2)
            img = abelian_image(w, 2, 3)
            assert abelian_image(free_reduce(w), 2, 3) == img
            assert abelian_image(conjugate(w, u), 2, 3) == img
            assert abelian_image(commutator(u, w), 2, 3).is_zero

    def test_torsion_orders_kill_images(self):
        # Each certified torsion word, scaled by its order, lands on zero.
        cases = [
            (parse_word(HYPERELLIPTIC2, CHAIN2), 2, 2),
            (parse_word(ORDER5_WORD, CHAIN2), 2, 5),
            (parse_word("A B A", TORUS), 1, 4),
            (parse_word("A B", TORUS), 1, 6),
            (parse_word("A B A B", TORUS), 1, 3),
            (parse_word("A B A B A B", TORUS), 1, 2),
        ]
        for word, g, order in cases:
            assert abelian_image(word, g, 0).scaled(order).is_zero

    def test_moduli_mismatch_rejected(self):
        a = AbelianImage(1, 12, 0, 1)
        b = AbelianImage(1, 10, 0, 1)
        with pytest.raises(ValueError):
            a + b

    def test_component_reduction_enforced(self):
        with pytest.raises(ValueError):
            AbelianImage(12, 12, 0, 2)
        with pytest.raises(ValueError):
            AbelianImage(0, 12, -1, 2)
