import pytest
from pydantic import ValidationError

from hpfold.errors import BudgetExceeded, InputError
from hpfold.folding import score
from hpfold.search import FoldSolver, SearchLimits, enumerate_optima, optimal, search_certificate_agreement
from hpfold.search.engine import _merge
from hpfold.words import Word


@pytest.mark.parametrize("kind,word,value", [
    ("rect2d", "0000", 1),
    ("rect2d", "000000", 2),
    ("rect2d", "0^8", 3),
    ("rect2d", "111", 0),
    ("tri", "000", 1),
    ("tri", "0000", 2),
    ("hex", "000000", 1),
    ("rect3d", "0^8", 5),
])
def test_optimal_values(kind, word, value):
    w = Word.parse(word)
    result = optimal(kind, w)
    assert result.exact
    assert result.value == value
    assert score(result.witness, w) == value


def test_witness_is_least_canonical_string():
    result = optimal("rect2d", Word.parse("0000"))
    assert result.witness.moves == "uld"


def test_enumerate_optima():
    assert [f.moves for f in enumerate_optima("rect2d", Word.parse("0000"))] == ["uld"]
    assert [f.moves for f in enumerate_optima("rect2d", Word.parse("111"))] == ["uu", "ul"]


def test_hex_folds_start_with_forced_moves():
    result = optimal("hex", Word.parse("000000"))
    assert result.witness.moves.startswith("ll")


def test_closed_odd_word_on_bipartite_lattice():
    with pytest.raises(InputError):
        optimal("rect2d", Word.parse("cyc:00000"))


def test_level_two_rejected():
    with pytest.raises(InputError):
        FoldSolver("rect2d", Word.parse("0200"))


def test_budget_exhausted():
    with pytest.raises(BudgetExceeded) as excinfo:
        optimal("rect2d", Word.parse("0^12"), limits=SearchLimits(max_nodes=5))
    assert excinfo.value.exit_code == 3
    assert excinfo.value.result is not None
    assert not excinfo.value.result.exact


def test_limits_must_be_positive():
    with pytest.raises(ValidationError):
        SearchLimits(max_nodes=0)
    with pytest.raises(ValidationError):
        SearchLimits(workers=-1)


PARALLEL_CASES = [("rect2d", "0^8"), ("rect2d", "0^9"), ("rect2d", "0110110 0"), ("tri", "0^7"), ("hex", "0^8")]


@pytest.mark.parametrize("kind,word", PARALLEL_CASES)
def test_result_independent_of_worker_count(kind, word):
    w = Word.parse(word)
    single = optimal(kind, w, limits=SearchLimits(workers=1))
    pooled = optimal(kind, w, limits=SearchLimits(workers=4))
    assert pooled.value == single.value
    assert pooled.witness.moves == single.witness.moves


def test_merge_breaks_ties_in_alphabet_order():
    outcomes = [(3, "ulddluu", 10, True), (3, "uuulddd", 10, True), (2, "uuuuuuu", 10, True)]
    assert _merge(outcomes, "uldr") == (3, "uuulddd", 30, True)
    assert _merge([(1, None, 4, False)] + outcomes[:1], "uldr")[1:] == ("ulddluu", 14, False)


def test_lower_bound_keeps_witness():
    w = Word.parse("0^8")
    assert optimal("rect2d", w, lower_bound=3).witness == optimal("rect2d", w).witness
    with pytest.raises(InputError):
        optimal("rect2d", w, lower_bound=4)
    with pytest.raises(InputError):
        optimal("rect2d", w, lower_bound=10)


def test_canonical_prefixes_start_with_up():
    prefixes = FoldSolver("rect2d", Word.parse("0^6")).canonical_prefixes(2)
    assert prefixes == ["uu", "ul"]


def test_agreement_falls_back_to_prefixes(rect_k0):
    f, w = rect_k0
    report = search_certificate_agreement("rect2d", w, f, max_prefix=8, limits=SearchLimits(max_nodes=20000))
    assert report.certificate_accepted
    assert report.value == 7
    assert [p.length for p in report.prefixes] == list(range(2, 9))
    assert report.prefixes_agree
    assert report.ok


def test_agreement_on_uncertified_fold(square_0000):
    f, w = square_0000
    report = search_certificate_agreement("rect2d", w, f)
    assert report.exact
    assert report.value == 1
    assert len(report.prefixes) == 2
    assert report.prefixes_agree
    assert not report.ok


@pytest.mark.slow
def test_rect_family_optimum(rect_k0):
    f, w = rect_k0
    report = search_certificate_agreement("rect2d", w, f)
    assert report.value == 7
    assert len(report.prefixes) == 15
    assert report.ok
