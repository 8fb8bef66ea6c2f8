import pytest
from pydantic import ValidationError

from hpfold.errors import InputError, VerificationError
from hpfold.multichain import (
    BENT_TRIPLE,
    STRAIGHT_TRIPLE,
    Chain,
    Embedding,
    EmbeddingViolationKind,
    HydroLevels,
    RingHypothesis,
    TripleShape,
    classify_triple,
    contribution_counts,
    embedding_score,
    enumerate_ring_placements,
    format_embedding_text,
    intended_embedding,
    intended_score,
    levels_bound_audit,
    pair_value,
    parse_embedding_text,
    potential_contacts,
    read_embedding_file,
    require_ring_lemma,
    ring_image,
    validate_embedding,
    vertex_boundary,
    write_embedding_file,
    zero_parity_classes,
)
from hpfold.words import Word

UNIT_SQUARE = [(0, 0, 0), (0, 1, 0), (1, 1, 0), (1, 0, 0)]


def square_embedding(letters="0000", sites=UNIT_SQUARE) -> Embedding:
    return Embedding(chains=[Chain(word=Word.parse(letters), sites=sites)])


class TestLevels:
    def test_standard(self):
        h = HydroLevels.standard(10)
        assert pair_value(h, "0", "2") == 11
        assert pair_value(h, "2", "2") == 20
        assert pair_value(h, "0", "0") == 2
        assert pair_value(h, "0", "1") == 0

    def test_invalid_levels(self):
        with pytest.raises(ValidationError):
            HydroLevels(h={"0": 1, "1": 0})
        with pytest.raises(ValidationError):
            HydroLevels(h={"0": 1, "1": -1, "2": 3})
        with pytest.raises(InputError):
            HydroLevels.standard(-1)


class TestEmbedding:
    def test_chain_word_is_cyclic(self):
        assert square_embedding().chains[0].word.cyclic

    def test_unit_square_is_valid_without_contacts(self):
        e = square_embedding()
        assert validate_embedding(e).ok
        assert potential_contacts(e) == set()

    @pytest.mark.parametrize("sites,kind", [
        ([(0, 0, 0), (0, 1, 0), (1, 1, 0)], EmbeddingViolationKind.LENGTH_MISMATCH),
        ([(0, 0, 0), (0, 1, 0), (0, 0, 0), (1, 0, 0)], EmbeddingViolationKind.NOT_INJECTIVE),
        ([(0, 0, 0), (0, 1, 0), (1, 1, 0), (2, 0, 0)], EmbeddingViolationKind.BAD_STEP),
    ])
    def test_violations(self, sites, kind):
        report = validate_embedding(square_embedding(sites=sites))
        assert kind in {v.kind for v in report.violations}

    def test_overlapping_chains(self):
        chain = Chain(word=Word.parse("0000"), sites=UNIT_SQUARE)
        report = validate_embedding(Embedding(chains=[chain, chain]))
        assert EmbeddingViolationKind.OVERLAP in {v.kind for v in report.violations}
        with pytest.raises(InputError):
            potential_contacts(Embedding(chains=[chain, chain]))

    def test_contacts_between_chains(self):
        shifted = [(x + 1, y, z) for x, y, z in [(1, 0, 0), (1, 1, 0), (2, 1, 0), (2, 0, 0)]]
        e = Embedding(chains=[
            Chain(word=Word.parse("0000"), sites=UNIT_SQUARE),
            Chain(word=Word.parse("0000"), sites=shifted),
        ])
        # (1,0,0)-(2,0,0) and (1,1,0)-(2,1,0)
        assert len(potential_contacts(e)) == 2
        assert embedding_score(e, HydroLevels.standard(3)) == 4


class TestIntendedEmbedding:
    @pytest.mark.parametrize("c", [4, 10])
    def test_score(self, c):
        e = intended_embedding(0)
        assert validate_embedding(e).ok
        assert embedding_score(e, HydroLevels.standard(c)) == intended_score(c)

    def test_counts(self):
        counts = contribution_counts(intended_embedding(0), HydroLevels.standard(10))
        assert counts[11] == 12
        assert sum(value * count for value, count in counts.items()) == 148

    def test_deepened_rectangle(self):
        e = intended_embedding(2)
        assert validate_embedding(e).ok
        assert [len(chain) for chain in e.chains][:3] == [8, 8, 8]

    def test_zero_parity(self):
        classes = zero_parity_classes(intended_embedding(0))
        assert all(pc.single_class for pc in classes[:3])


class TestLemmas:
    def test_vertex_boundary(self):
        assert len(vertex_boundary([(0, 0, 0)])) == 6
        assert len(vertex_boundary(STRAIGHT_TRIPLE)) == 14
        assert len(vertex_boundary(BENT_TRIPLE)) == 13

    def test_classify(self):
        assert classify_triple(*STRAIGHT_TRIPLE) == TripleShape.STRAIGHT
        assert classify_triple(*BENT_TRIPLE) == TripleShape.BENT
        with pytest.raises(InputError):
            classify_triple((0, 0, 0), (2, 0, 0), (3, 0, 0))

    def test_ring_placements_even(self):
        report = enumerate_ring_placements(STRAIGHT_TRIPLE, RingHypothesis.EVEN_INDEX)
        assert len(report.solutions) == 8
        assert report.images == [ring_image(STRAIGHT_TRIPLE)]
        assert report.all_match
        require_ring_lemma(report)

    def test_ring_placements_any(self):
        report = enumerate_ring_placements(STRAIGHT_TRIPLE, RingHypothesis.ANY_INDEX)
        assert len(report.images) > 1
        with pytest.raises(VerificationError):
            require_ring_lemma(report)

    def test_ring_needs_straight_triple(self):
        with pytest.raises(InputError):
            enumerate_ring_placements(BENT_TRIPLE)

    @pytest.mark.parametrize("x", [1, 2, 3, 4, 5, 12])
    def test_audit_strict_at_ten(self, x):
        assert levels_bound_audit(x, 10).strict

    def test_audit_values(self):
        audit = levels_bound_audit(1, 10)
        assert (audit.straight_value, audit.intended_value) == (147, 148)
        loose = levels_bound_audit(1, 9, strict_from=None)
        assert loose.straight_value == loose.intended_value == 136
        assert not loose.strict
        with pytest.raises(VerificationError):
            levels_bound_audit(1, 9, strict_from=9)

    def test_audit_range(self):
        with pytest.raises(InputError):
            levels_bound_audit(0, 10)


class TestEmbeddingFile:
    def test_parse_with_notation(self):
        e = parse_embedding_text("# ring\nchain 0^4: (0,0,0);(0,1,0);(1,1,0);(1,0,0)\n")
        assert e.chains[0].word.letters == "0000"
        assert e.chains[0].sites == UNIT_SQUARE

    def test_format(self):
        assert format_embedding_text(square_embedding()) == "chain 0000: (0,0,0);(0,1,0);(1,1,0);(1,0,0)\n"

    @pytest.mark.parametrize("text", ["", "ring 00: (0,0,0)\n", "chain 00: (0,0);(0,1,0)\n"])
    def test_malformed(self, text):
        with pytest.raises(InputError):
            parse_embedding_text(text)

    def test_write_and_read(self, tmp_path):
        e = intended_embedding(0)
        path = write_embedding_file(tmp_path / "intended.emb", e)
        assert read_embedding_file(path) == e

    def test_corpus_files(self, corpus_file):
        for name in ("linked_cube.emb", "unlinked_cube.emb"):
            e = read_embedding_file(corpus_file(name))
            assert validate_embedding(e).ok
            assert [len(chain) for chain in e.chains] == [8, 56]
