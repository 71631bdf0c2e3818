import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from permotzkin.algebra import MultiPoly
from permotzkin.bijection import decode, encode
from permotzkin.errors import InvalidPathError
from permotzkin.jfraction import brute_force_gf
from permotzkin.motzkin import (
    StepKind,
    WeightedMotzkinPath,
    enumerate_weighted,
    path_weight,
)
from permotzkin.permutations import Permutation, four_stats, iter_group

perms = st.integers(min_value=0, max_value=8).flatmap(
    lambda n: st.permutations(list(range(1, n + 1)))
).map(lambda images: Permutation(tuple(images)))


def test_identity_maps_to_ground_path():
    for n in (0, 1, 4, 7):
        path = encode(Permutation.identity(n))
        assert path.to_text() == " ".join(["H3(0,0)"] * n)
        assert path_weight(path) == MultiPoly.monomial((0, n, 0, 0))


@pytest.mark.parametrize(
    "perm_text, path_text",
    [
        ("3 2 1", "U(1,0) H3(1,0) D(1,0)"),
        ("2 3 1", "U(1,0) H1(1,0) D(1,0)"),
        ("3 1 2", "U(1,0) H2(1,0) D(1,0)"),
        ("2 1", "U(1,0) D(1,0)"),
        ("", ""),
    ],
)
def test_encode_examples(perm_text, path_text):
    perm = Permutation.from_text(perm_text)
    assert encode(perm).to_text() == path_text
    assert decode(WeightedMotzkinPath.from_text(path_text)) == perm


def test_weights_track_the_four_statistics():
    for n in range(7):
        for perm in iter_group(n):
            assert path_weight(encode(perm)) == MultiPoly.monomial(four_stats(perm))


def test_encode_is_a_bijection_onto_the_weighted_paths():
    for n in range(7):
        image = {encode(perm) for perm in iter_group(n)}
        assert len(image) == math.factorial(n)
        assert image == set(enumerate_weighted(n))


def test_round_trip_exhaustively():
    for n in range(7):
        for perm in iter_group(n):
            assert decode(encode(perm)) == perm


def test_step_count_identities():
    for perm in iter_group(6):
        _, fix, exc, _ = four_stats(perm)
        kinds = [step.kind for step in encode(perm).steps]
        assert kinds.count(StepKind.H3) == fix
        assert kinds.count(StepKind.U) + kinds.count(StepKind.H1) == exc
        assert kinds.count(StepKind.U) == kinds.count(StepKind.D)


def test_aggregate_weights_match_brute_force():
    for n in range(6):
        total = MultiPoly.zero()
        for perm in iter_group(n):
            total = total + path_weight(encode(perm))
        assert total == brute_force_gf(n)


@settings(deadline=None)
@given(perms)
def test_round_trip_property(perm):
    path = encode(perm)
    assert decode(path) == perm
    assert path_weight(path) == MultiPoly.monomial(four_stats(perm))


def test_decode_rejects_invalid_paths():
    with pytest.raises(InvalidPathError):
        decode(WeightedMotzkinPath.from_text("U(1,0)"))
    with pytest.raises(InvalidPathError):
        decode(WeightedMotzkinPath.from_text("U(1,0) H1(1,1) D(1,0)"))
