import pytest
from pydantic import ValidationError

from hpfold.errors import InputError, VerificationError
from hpfold.folding import (
    DecodeConstraints,
    Fold,
    ViolationKind,
    compare_decodings,
    contacts,
    decode_catalog_entry,
    decode_keyboard_moves,
    drop_ends,
    fold_from_sites,
    format_fold_text,
    induced_edge_sum,
    parse_fold_text,
    read_fold_file,
    reverse_fold,
    score,
    sites,
    transform_fold,
    validate,
    walk,
    write_fold_file,
    zero_set_edges,
    zeros_fill_cube,
)
from hpfold.lattice import LatticeKind, letter_permutations
from hpfold.words import Word, reverse, special_words, square_construction


class TestFold:
    def test_parse_expands_notation(self):
        f = Fold.parse("rect2d", "u^3 r")
        assert f.moves == "uuur"
        assert len(walk(f)) == 5

    def test_rejects_foreign_moves(self):
        with pytest.raises(ValidationError):
            Fold(kind="rect2d", moves="uf")

    def test_closed_sites_drop_the_return(self):
        f = Fold(kind="rect2d", moves="urdl", closed=True)
        assert len(walk(f)) == 5
        assert sites(f) == [(0, 0, 0), (0, 1, 0), (1, 1, 0), (1, 0, 0)]

    def test_valid(self, square_0000):
        f, w = square_0000
        assert validate(f, w).ok

    @pytest.mark.parametrize("moves,word,closed,kind", [
        ("ud", "000", False, ViolationKind.REVISIT),
        ("uu", "00", False, ViolationKind.LENGTH_MISMATCH),
        ("uur", "cyc:000", True, ViolationKind.NOT_CLOSED),
        ("ud", "cyc:00", True, ViolationKind.SHORT_CYCLE),
        ("uu", "cyc:000", False, ViolationKind.CYCLIC_MISMATCH),
    ])
    def test_violations(self, moves, word, closed, kind):
        report = validate(Fold(kind="rect2d", moves=moves, closed=closed), Word.parse(word))
        assert kind in {v.kind for v in report.violations}
        assert not report.ok

    def test_from_sites_round_trip(self, rect_k0):
        f, _ = rect_k0
        assert fold_from_sites("rect2d", sites(f)) == f

    def test_from_sites_rejects_gaps(self):
        with pytest.raises(InputError):
            fold_from_sites("rect2d", [(0, 0, 0), (2, 0, 0)])

    def test_drop_ends(self, rect_k0):
        f, w = rect_k0
        sub, subword = drop_ends(f, w, 2, 3)
        assert len(subword) == len(w) - 5
        assert validate(sub, subword).ok
        assert sites(sub) == sites(f)[2:len(w) - 3]
        with pytest.raises(InputError):
            drop_ends(f, w, 20, 6)


class TestScoring:
    def test_square_contact(self, square_0000):
        f, w = square_0000
        assert contacts(f, w) == [(0, 3)]
        assert score(f, w) == 1

    def test_closed_unit_square_scores_zero(self):
        assert score(Fold(kind="rect2d", moves="urdl", closed=True), Word.parse("cyc:0000")) == 0

    def test_invalid_fold_raises(self):
        with pytest.raises(InputError):
            score(Fold(kind="rect2d", moves="ud"), Word.parse("000"))

    def test_reverse_and_symmetry_invariance(self, rect_k0):
        f, w = rect_k0
        assert score(reverse_fold(f), reverse(w)) == 7
        for perm in letter_permutations("rect2d"):
            assert score(transform_fold(f, perm), w) == 7

    def test_induced_edges_match_zero_set(self):
        c = square_construction("p2")
        f = Fold.from_construction(c)
        assert induced_edge_sum(f, c.word) == zero_set_edges(f, c.word) == 40


class TestFoldFile:
    TEXT = "# comment\nlattice: rect2d\nword: 0^4\nmoves: u l d\nclosed: false\n"

    def test_parse(self):
        f, w = parse_fold_text(self.TEXT)
        assert f.moves == "uld"
        assert w.letters == "0000"

    def test_format_is_flat(self):
        f, w = parse_fold_text(self.TEXT)
        assert format_fold_text(f, w) == "lattice: rect2d\nword: 0000\nmoves: uld\nclosed: false\n"

    def test_start_line(self):
        f = Fold(kind="rect3d", start=(1, 0, 2), moves="uurrddll", closed=True)
        text = format_fold_text(f, Word.parse("cyc:0^8"))
        assert "start: 1,0,2" in text
        assert parse_fold_text(text)[0] == f

    @pytest.mark.parametrize("text", [
        "lattice: rect2d\nword: 00\nmoves: u\n",
        "lattice: rect2d\nword: 00\nmoves: u\nclosed: maybe\n",
        "lattice: rect2d\nword: 00\nmoves: u\nclosed: false\ncolour: red\n",
        "lattice rect2d\n",
    ])
    def test_malformed(self, text):
        with pytest.raises(InputError):
            parse_fold_text(text)

    def test_write_and_read(self, tmp_path, rect_k0):
        f, w = rect_k0
        path = write_fold_file(tmp_path / "k0.fold", f, w)
        assert read_fold_file(path) == (f, w)

    def test_missing_file(self, tmp_path):
        with pytest.raises(InputError):
            read_fold_file(tmp_path / "missing.fold")


class TestDecode:
    def test_trefoil_mapping(self):
        result = decode_catalog_entry("trefoil24")
        assert len(result.mappings) == 48
        assert result.canonical == {"a": "u", "d": "d", "e": "l", "f": "r", "s": "f", "w": "b"}
        assert result.fold_for(result.canonical, closed=True).moves == "lddrbbrrffullblddrruuulf"

    def test_cube_fold(self):
        result = decode_catalog_entry("cube54")
        fold = result.fold_for(result.canonical, closed=False)
        assert zeros_fill_cube(fold, special_words()["cube54"], 3)
        assert fold.moves == "uufddfdbbdbuubuflbdfddfuffubuubdlufddfdbbdbuubufldfrr"

    def test_both_strings_share_mappings(self):
        comparison = compare_decodings(decode_catalog_entry("trefoil24"), decode_catalog_entry("cube54"))
        assert comparison == {"same_canonical": True, "same_mapping_set": True}

    def test_errors(self):
        constraints = DecodeConstraints(word=Word.parse("00"))
        with pytest.raises(InputError):
            decode_keyboard_moves("", constraints)
        with pytest.raises(InputError):
            decode_keyboard_moves("x", constraints)
        with pytest.raises(VerificationError):
            decode_keyboard_moves("aa", DecodeConstraints(word=Word.parse("000"), zero_cube=2))

    def test_unknown_catalog_entry(self):
        with pytest.raises(InputError):
            decode_catalog_entry("trefoil70")

    def test_kind_of_decoded_fold(self):
        result = decode_catalog_entry("trefoil24")
        assert result.fold_for(result.canonical, closed=True).kind == LatticeKind.RECT3D
