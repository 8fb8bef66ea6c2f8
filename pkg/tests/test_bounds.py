import pytest

from hpfold.bounds import (
    GENERIC_BOUND,
    HEX_BOUND,
    RECT2D_BOUND,
    EXACT_SEARCH,
    ClaimKind,
    best_bound,
    certify_equality,
    certify_suffix_drop,
    certify_wrap_drop,
    handshake_bound,
    lift_counterexample,
    monotone_sweep,
    replay,
    suffix_monotone_check,
    upper_bound,
)
from hpfold.errors import InputError, VerificationError
from hpfold.folding import Fold, read_fold_file
from hpfold.words import Word, square_construction


class TestBounds:
    def test_rect_family(self, rect_k0):
        _, w = rect_k0
        assert upper_bound("rect2d", w) == 7
        assert upper_bound("rect2d", w, wrapped=True) == 6
        assert best_bound("rect2d", w) == (7, RECT2D_BOUND)

    def test_cyclic_words_are_bounded_wrapped(self):
        assert upper_bound("rect2d", Word.parse("cyc:0000")) == 4
        assert upper_bound("rect2d", Word.parse("0000")) == 5

    def test_hex(self, corpus_file):
        _, w = read_fold_file(corpus_file("platypus.fold"))
        assert upper_bound("hex", w) == 6
        assert upper_bound("hex", w, wrapped=True) == 5
        assert best_bound("hex", w)[1] == HEX_BOUND

    def test_handshake_beats_zero_count_after_a_suffix(self, rect_k0):
        _, w = rect_k0
        assert best_bound("rect2d", Word(letters=w.letters + "1")) == (6, GENERIC_BOUND)

    def test_handshake_on_pair(self):
        # two adjacent zeros on the square lattice: 3 free directions each
        assert handshake_bound("rect2d", Word.parse("00")) == 3

    def test_level_two_is_rejected(self):
        with pytest.raises(InputError):
            upper_bound("rect2d", Word.parse("020"))


class TestCertificates:
    def test_equality_and_wrap_drop(self, rect_k0):
        f, w = rect_k0
        eq = certify_equality("rect2d", w, f)
        assert eq.accepted and eq.score == 7 and eq.gap == 0
        assert eq.statement() == f"J_rect2d({w}) = 7"

        drop = certify_wrap_drop("rect2d", w, f)
        assert drop.accepted
        assert drop.claim == ClaimKind.WRAP_DROP
        assert drop.bound_value == 6
        assert drop.extended_word.letters == "1" + w.letters + "1"
        assert replay(drop)

    def test_suffix_drop(self, rect_k0):
        f, w = rect_k0
        cert = certify_suffix_drop("rect2d", w, f)
        assert cert.accepted
        assert cert.bound_value == 6 and cert.bound_used == GENERIC_BOUND
        assert replay(cert)

    def test_suffix_drop_on_cyclic_word(self):
        with pytest.raises(InputError):
            certify_suffix_drop("rect2d", Word.parse("cyc:0000"), Fold(kind="rect2d", moves="urdl", closed=True))

    def test_square_is_not_tight(self):
        c = square_construction("p2")
        cert = certify_equality("rect2d", c.word, Fold.from_construction(c))
        assert not cert.accepted
        assert cert.gap == 10
        assert not certify_wrap_drop("rect2d", c.word, Fold.from_construction(c)).accepted

    def test_lattice_mismatch(self, rect_k0):
        f, w = rect_k0
        with pytest.raises(InputError):
            certify_equality("tri", w, f)

    def test_lift_with_room_at_the_start(self, corpus_file):
        fold, x = read_fold_file(corpus_file("lift_base.fold"))
        cert = lift_counterexample("rect2d", x, fold, 2)
        assert cert.claim == ClaimKind.LIFTED_DROP
        assert cert.accepted
        assert cert.word.letters == "11" + x.letters
        assert cert.base_word == x
        assert cert.fold == Fold(kind="rect2d", start=(0, -2, 0), moves="uuullddru")
        assert cert.score == 3
        assert cert.bound_used == EXACT_SEARCH
        assert cert.bound_value <= 2
        assert replay(cert)

    def test_lift_places_enclosed_start_again(self, corpus_file):
        fold, x = read_fold_file(corpus_file("lift_reroute.fold"))
        with pytest.raises(VerificationError):
            lift_counterexample("rect2d", x, fold, 1, max_reroute=0)
        cert = lift_counterexample("rect2d", x, fold, 1)
        assert cert.fold == Fold(kind="rect2d", start=(-2, -1, 0), moves="rrruulullddru")
        assert cert.score == 3
        assert cert.statement().startswith("J_rect2d(")

    def test_lift_zero_ones_keeps_the_fold(self, corpus_file):
        fold, x = read_fold_file(corpus_file("lift_base.fold"))
        cert = lift_counterexample("rect2d", x, fold, 0, oracle=lambda kind, w: 2)
        assert cert.word == x
        assert cert.fold == fold
        assert cert.bound_value == 2

    def test_rect_family_start_cannot_be_lifted(self, rect_k0):
        f, w = rect_k0
        assert certify_suffix_drop("rect2d", w, f).accepted
        # the first zero has three contacts, and a leading 1 leaves it two sides
        assert best_bound("rect2d", Word(letters="1" + w.letters))[0] == 6
        with pytest.raises(VerificationError):
            lift_counterexample("rect2d", w, f, 3)
        assert lift_counterexample("rect2d", w, f, 0).bound_value == 6

    def test_lift_needs_a_strict_drop(self):
        enclosed = Fold(kind="rect2d", moves="urddllu")
        with pytest.raises(VerificationError):
            lift_counterexample("rect2d", Word.parse("0^8"), enclosed, 1, oracle=lambda kind, w: 3)
        with pytest.raises(InputError):
            lift_counterexample("rect2d", Word.parse("0^8"), enclosed, -1)


class TestMonotone:
    def test_sweep_with_fake_oracle(self):
        report = monotone_sweep("rect2d", 3, oracle=lambda kind, w: w.letters.count("0") // 2)
        assert report.words_checked == 2 + 4 + 8
        assert report.solver_calls == 14 + 12
        assert report.violations == []

    def test_sweep_reaches_max_len(self):
        seen = []

        def oracle(kind, w):
            seen.append(len(w))
            return 0

        monotone_sweep("hex", 4, oracle=oracle)
        assert max(seen) == 5
        assert seen.count(4) == 16
        assert seen.count(5) == 16 + 16 - 8

    def test_sweep_reports_violations(self):
        with pytest.raises(VerificationError):
            monotone_sweep("rect2d", 3, oracle=lambda kind, w: len(w))

    def test_sweep_needs_a_length(self):
        with pytest.raises(InputError):
            monotone_sweep("rect2d", 0)

    def test_single_word_with_solver(self):
        report = suffix_monotone_check("rect2d", Word.parse("0000"))
        assert (report.j_word, report.j_append, report.j_prepend) == (1, 1, 1)
        assert report.ok
