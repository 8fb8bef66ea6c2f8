"""
Randomised and exhaustive invariants: symmetry of scores and J, bound soundness,
worker-count independence, isometry invariance of boundaries and linking.
"""
import random

import numpy as np
import pytest

from hpfold.bounds import certify_equality, upper_bound
from hpfold.folding import fold_from_sites, reverse_fold, score, sites, transform_fold
from hpfold.lattice import (
    LatticeKind,
    ORIGIN,
    coordinate_parity,
    letter_permutations,
    neighbors,
    point_group,
    transform_sites,
)
from hpfold.multichain import (
    HydroLevels,
    embedding_score,
    intended_embedding,
    intended_score,
    validate_embedding,
    vertex_boundary,
)
from hpfold.search import SearchLimits, optimal
from hpfold.topology import ClosedCurve, build_linked_cube_embedding, linking_number
from hpfold.words import Word, reverse

ALL_KINDS = [kind.value for kind in LatticeKind]
BIPARTITE = ["rect2d", "rect3d", "hex"]


def random_word(rng: random.Random, n: int) -> Word:
    return Word(letters="".join(rng.choice("01") for _ in range(n)))


def random_fold(kind: str, n: int, rng: random.Random):
    """A random self-avoiding walk of n sites, restarted when it traps itself"""
    for _ in range(200):
        path = [ORIGIN]
        used = {ORIGIN}
        while len(path) < n:
            options = [t for t in neighbors(LatticeKind(kind), path[-1]) if t not in used]
            if not options:
                break
            step = rng.choice(options)
            path.append(step)
            used.add(step)
        if len(path) == n:
            return fold_from_sites(kind, path)
    raise AssertionError(f"no {n}-site walk found on {kind}")


def image_fold(kind: str, fold, matrix):
    return fold_from_sites(kind, transform_sites(sites(fold), matrix))


def hopf_pair():
    a = ClosedCurve(vertices=[
        (0, 0, 0), (1, 0, 0), (2, 0, 0), (2, 1, 0), (2, 2, 0), (1, 2, 0), (0, 2, 0), (0, 1, 0),
    ])
    b = ClosedCurve(vertices=[
        (1, 1, -1), (1, 1, 0), (1, 1, 1), (2, 1, 1), (3, 1, 1), (3, 1, 0), (3, 1, -1), (2, 1, -1),
    ])
    return a, b


def moved(curve: ClosedCurve, matrix) -> ClosedCurve:
    return ClosedCurve(vertices=tuple(transform_sites(curve.vertices, matrix)))


class TestFoldSymmetry:
    @pytest.mark.parametrize("kind", ALL_KINDS)
    @pytest.mark.parametrize("seed", range(5))
    def test_score_survives_reversal(self, kind, seed):
        rng = random.Random(seed)
        w = random_word(rng, 14)
        f = random_fold(kind, len(w), rng)
        assert score(reverse_fold(f), reverse(w)) == score(f, w)

    @pytest.mark.parametrize("kind", ALL_KINDS)
    @pytest.mark.parametrize("seed", range(5))
    def test_score_survives_point_group(self, kind, seed):
        rng = random.Random(100 + seed)
        w = random_word(rng, 14)
        f = random_fold(kind, len(w), rng)
        value = score(f, w)
        for matrix in point_group(kind):
            assert score(image_fold(kind, f, matrix), w) == value
        for perm in letter_permutations(kind):
            assert score(transform_fold(f, perm), w) == value

    @pytest.mark.parametrize("kind", BIPARTITE)
    @pytest.mark.parametrize("seed", range(5))
    def test_parity_alternates_along_fold(self, kind, seed):
        rng = random.Random(200 + seed)
        placed = sites(random_fold(kind, 20, rng))
        parities = [coordinate_parity(s) for s in placed]
        assert all(a != b for a, b in zip(parities, parities[1:]))


class TestSearchSymmetry:
    @pytest.mark.parametrize("kind,length", [("rect2d", 8), ("tri", 7), ("hex", 8), ("rect3d", 6)])
    @pytest.mark.parametrize("seed", range(4))
    def test_j_of_reverse(self, kind, length, seed):
        w = random_word(random.Random(300 + seed), length)
        assert optimal(kind, w).value == optimal(kind, reverse(w)).value

    @pytest.mark.parametrize("kind", ["rect2d", "tri"])
    @pytest.mark.parametrize("seed", range(3))
    def test_j_independent_of_workers(self, kind, seed):
        w = random_word(random.Random(400 + seed), 9)
        single = optimal(kind, w, limits=SearchLimits(workers=1))
        pooled = optimal(kind, w, limits=SearchLimits(workers=4))
        assert (pooled.value, pooled.witness.moves) == (single.value, single.witness.moves)


def check_equality_against_search(kind: str, w: Word, rng: random.Random) -> None:
    result = optimal(kind, w)
    bound = upper_bound(kind, w)
    assert result.value <= bound
    assert certify_equality(kind, w, result.witness).accepted == (result.value == bound)
    guess = random_fold(kind, len(w), rng)
    cert = certify_equality(kind, w, guess)
    if cert.accepted:
        assert result.value == cert.score


class TestCertificatesAgainstSearch:
    @pytest.mark.parametrize("kind,length", [("rect2d", 10), ("hex", 10)])
    def test_short_words(self, kind, length):
        rng = random.Random(500)
        for _ in range(12):
            check_equality_against_search(kind, random_word(rng, rng.randint(2, length)), rng)

    def test_zero_runs_on_hex(self):
        rng = random.Random(501)
        for n in range(2, 9):
            check_equality_against_search("hex", Word(letters="0" * n), rng)

    @pytest.mark.slow
    @pytest.mark.parametrize("kind,length", [("rect2d", 14), ("hex", 12)])
    def test_long_words(self, kind, length):
        rng = random.Random(502)
        for _ in range(40):
            check_equality_against_search(kind, random_word(rng, rng.randint(length - 3, length)), rng)


class TestIntendedEmbedding:
    @pytest.mark.parametrize("m", range(4))
    @pytest.mark.parametrize("c", [4, 10, 100])
    def test_score_formula(self, m, c):
        embedding = intended_embedding(m)
        assert validate_embedding(embedding).ok
        assert embedding_score(embedding, HydroLevels.standard(c)) == intended_score(c)


class TestIsometries:
    SAMPLE = [(0, 0, 0), (1, 0, 0), (1, 1, 0), (1, 1, 1), (3, 0, 2)]

    def test_group_has_48_elements(self):
        assert len(point_group("rect3d")) == 48

    def test_vertex_boundary(self):
        boundary = vertex_boundary(self.SAMPLE)
        for matrix in point_group("rect3d"):
            image = vertex_boundary(transform_sites(self.SAMPLE, matrix))
            assert image == set(transform_sites(boundary, matrix))

    def test_linking_number_of_hopf_pair(self):
        a, b = hopf_pair()
        lk = linking_number(a, b)
        for matrix in point_group("rect3d"):
            det = int(round(np.linalg.det(matrix)))
            assert linking_number(moved(a, matrix), moved(b, matrix)) == det * lk

    @pytest.mark.slow
    def test_linking_number_of_cube_loops(self):
        short, long = build_linked_cube_embedding()
        lk = linking_number(short, long)
        for matrix in point_group("rect3d"):
            det = int(round(np.linalg.det(matrix)))
            assert linking_number(moved(short, matrix), moved(long, matrix)) == det * lk
