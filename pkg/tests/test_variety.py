"""Construction, validation, normalization, and serialization."""

import json

import pytest

from acmlines import (
    DuplicateLine,
    EMPTY_VARIETY,
    EmptyPointSet,
    HyperplaneId,
    OutOfBounds,
    UnknownHyperplane,
    UnusedHyperplane,
    UnusedHyperplaneWarning,
    compact,
    direction_slice,
    grid_from_points,
    make_variety,
    points_from_json,
    relabel,
    remove_hyperplane,
    render,
    validate,
    validation_errors,
    variety_from_json,
    variety_to_dict,
    variety_to_json,
)
from acmlines.errors import BadPermutation
from conftest import DIAGONAL_PAIR_PLUS_ONE, FULL_BOX_432, SINGLE_LINE


def test_make_variety_bounds():
    with pytest.raises(OutOfBounds):
        make_variety((1, 1, 1), u3={(2, 1)})
    with pytest.raises(OutOfBounds):
        make_variety((1, 1, 1), u1={(1, 2)})
    with pytest.raises(OutOfBounds):
        make_variety((1, 1, 1), u2={(0, 1)})


def test_line_count_and_lines():
    X = DIAGONAL_PAIR_PLUS_ONE
    assert X.line_count == 3
    lines = X.lines()
    assert (3, 1, 1) in lines  # direction, row index, column index
    assert len(lines) == 3


def test_used_indices():
    X = DIAGONAL_PAIR_PLUS_ONE
    assert X.used_indices(1) == {1, 2}
    assert X.used_indices(2) == {1, 2, 3}
    assert X.used_indices(3) == {1}


def test_raw_form_compacts_to_small_labels():
    raw = {
        "d": [2, 3, 3],
        "U3": [[1, 1], [2, 2]],
        "U2": [],
        "U1": [[3, 3]],
    }
    with pytest.warns(UnusedHyperplaneWarning):
        X = validate(raw)
    assert X == DIAGONAL_PAIR_PLUS_ONE


def test_validate_strict_rejects_unused():
    raw = {"d": [2, 1, 1], "U3": [[1, 1]], "U2": [], "U1": []}
    with pytest.raises(UnusedHyperplane):
        validate(raw, strict=True)


def test_validate_duplicate_line():
    raw = {"d": [1, 1, 1], "U3": [[1, 1], [1, 1]], "U2": [], "U1": []}
    with pytest.raises(DuplicateLine):
        validate(raw)


def test_validation_errors_message_list():
    raw = {"d": [1, 1, 1], "U3": [[5, 1]], "U2": [], "U1": []}
    messages = validation_errors(raw)
    assert messages and any("U3" in m for m in messages)


def test_compact_is_idempotent():
    raw = make_variety((3, 3, 3), u3={(1, 3), (3, 3)})
    once = compact(raw)
    assert once.d == (2, 1, 0)
    assert once.U3 == frozenset({(1, 1), (2, 1)})
    assert compact(once) == once
    assert once.is_compact()


def test_direction_slice_preserves_labels():
    X = DIAGONAL_PAIR_PLUS_ONE
    sl = direction_slice(X, 3)
    assert sl.U3 == X.U3
    assert sl.U2 == frozenset() and sl.U1 == frozenset()
    assert sl.d == X.d
    union = (
        direction_slice(X, 3).lines()
        | direction_slice(X, 2).lines()
        | direction_slice(X, 1).lines()
    )
    assert union == X.lines()


def test_remove_hyperplane():
    X = FULL_BOX_432
    Y = remove_hyperplane(X, "A", 4)
    assert Y.d[0] == 3
    assert all(i <= 3 for i, _ in Y.U3)
    with pytest.raises(UnknownHyperplane):
        remove_hyperplane(X, "C", 9)


def test_relabel_permutes_indices():
    X = make_variety((2, 1, 1), u3={(1, 1)})
    Y = relabel(X, (2, 1), (1,), (1,))
    assert Y.U3 == frozenset({(2, 1)})
    with pytest.raises(BadPermutation):
        relabel(X, (1, 1), (1,), (1,))


def test_render_shape():
    text = render(SINGLE_LINE, 3)
    assert text == "●"
    grid = render(DIAGONAL_PAIR_PLUS_ONE, 3)
    rows = grid.splitlines()
    assert len(rows) == 2
    assert rows[0].split() == ["●", "·", "·"]
    assert rows[1].split() == ["·", "●", "·"]


def test_json_round_trip():
    X = FULL_BOX_432
    again = variety_from_json(variety_to_json(X))
    assert again == X
    payload = json.loads(variety_to_json(X))
    assert set(payload) == {"d", "U3", "U2", "U1"}


def test_variety_to_dict_sorted():
    d = variety_to_dict(DIAGONAL_PAIR_PLUS_ONE)
    assert d["U3"] == [[1, 1], [2, 2]]
    assert d["U1"] == [[3, 1]]


def test_malformed_payload_raises_package_error():
    with pytest.raises(OutOfBounds):
        variety_from_json("{\"d\": [1, 1]}")
    with pytest.raises(ValueError):
        variety_from_json("not json at all")


def test_grid_from_points_golden():
    X = grid_from_points([(1, 1, 2), (1, 2, 2), (1, 2, 1), (2, 1, 2)])
    assert (1, 1) in X.U3 and (1, 2) in X.U3 and (2, 1) in X.U3
    assert X.line_count == len(X.U3) + len(X.U2) + len(X.U1)
    with pytest.raises(EmptyPointSet):
        grid_from_points([])


def test_points_from_json_accepts_both_shapes():
    want = {(1, 1, 1), (2, 2, 1)}
    assert points_from_json('{"points": [[1, 1, 1], [2, 2, 1]]}') == want
    assert points_from_json("[[1, 1, 1], [2, 2, 1]]") == want
    with pytest.raises(EmptyPointSet):
        points_from_json('"nope"')
    with pytest.raises(OutOfBounds):
        points_from_json("[[1, 1]]")


def test_grid_from_points_full_box_counts():
    pts = [
        (i, j, k)
        for i in range(1, 3)
        for j in range(1, 4)
        for k in range(1, 3)
    ]
    X = grid_from_points(pts)
    assert (len(X.U3), len(X.U2), len(X.U1)) == (6, 4, 6)


def test_empty_variety_properties():
    assert EMPTY_VARIETY.is_empty
    assert EMPTY_VARIETY.line_count == 0
    assert compact(EMPTY_VARIETY) == EMPTY_VARIETY


def test_hyperplane_id_str():
    assert str(HyperplaneId("A", 1)) == "A1"
    assert str(HyperplaneId("C", 12)) == "C12"
