import io

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from tourrank import (
    CANONICAL_CATEGORY_NAMES,
    DegenerateColumnWarning,
    InputError,
    ParseError,
    RatingCategory,
    RatingRangeError,
    ReviewMatrix,
    StructureError,
    category_means,
    classify_rating,
    load_reviews,
    normalize,
)


def _load(text, **kwargs):
    return load_reviews(io.StringIO(text), **kwargs)


class TestLoadReviews:
    def test_minimal_two_columns(self):
        m = _load("id,a,b\nr1,1.0,2.0\n")
        assert m.alternatives == ("a", "b")
        # transposed: alternatives index rows
        np.testing.assert_array_equal(m.values, [[1.0], [2.0]])

    def test_multiple_reviewers(self):
        m = _load("id,a,b\nr1,1,2\nr2,3,4\n")
        np.testing.assert_array_equal(m.values, [[1.0, 3.0], [2.0, 4.0]])

    def test_non_numeric_cell_names_row_and_column(self):
        # "abc" sits in file row 5 (header is row 1), file column 3
        text = "id,a,b\nr1,1,1\nr2,1,1\nr3,1,1\nr4,1,abc\n"
        with pytest.raises(ParseError, match=r"row 5, column 3") as err:
            _load(text)
        assert (err.value.row, err.value.column) == (5, 3)

    def test_rating_out_of_range(self):
        with pytest.raises(RatingRangeError, match=r"row 2, column 2"):
            _load("id,a,b\nr1,4.5,1\n")
        with pytest.raises(RatingRangeError):
            _load("id,a,b\nr1,-0.1,1\n")

    def test_ragged_row(self):
        with pytest.raises(StructureError, match="row 3"):
            _load("id,a,b\nr1,1,2\nr2,1\n")

    def test_too_few_rating_columns(self):
        with pytest.raises(StructureError):
            _load("id,a\nr1,1\n")

    def test_no_data_rows(self):
        with pytest.raises(StructureError):
            _load("id,a,b\n")

    def test_empty_input(self):
        with pytest.raises(StructureError):
            _load("")

    def test_non_finite_cell_rejected(self):
        with pytest.raises(ParseError):
            _load("id,a,b\nr1,nan,1\n")

    def test_alternate_delimiter(self):
        m = _load("id;a;b\nr1;1.5;2.5\n", delimiter=";")
        assert m.alternatives == ("a", "b")

    def test_names_override(self):
        m = _load("id,a,b\nr1,1,2\n", names={2: "Beaches"})
        assert m.alternatives == ("a", "Beaches")

    def test_names_override_bad_index(self):
        with pytest.raises(InputError):
            _load("id,a,b\nr1,1,2\n", names={3: "x"})

    def test_generic_headers_get_canonical_names(self):
        header = "id," + ",".join(f"Category {i}" for i in range(1, 11))
        row = "r1," + ",".join("1.0" for _ in range(10))
        m = _load(f"{header}\n{row}\n")
        assert m.alternatives == CANONICAL_CATEGORY_NAMES

    def test_generic_headers_other_width_kept(self):
        m = _load("id,Category 1,Category 2\nr1,1,2\n")
        assert m.alternatives == ("Category 1", "Category 2")

    def test_travel_fixture_shape(self, travel_matrix):
        assert travel_matrix.n_alternatives == 10
        assert travel_matrix.n_reviewers == 980
        assert travel_matrix.alternatives == CANONICAL_CATEGORY_NAMES


class TestReviewMatrixInvariants:
    def test_duplicate_names_rejected(self):
        with pytest.raises(InputError):
            ReviewMatrix(("a", "a"), np.ones((2, 1)))

    def test_empty_name_rejected(self):
        with pytest.raises(InputError):
            ReviewMatrix(("a", ""), np.ones((2, 1)))

    def test_single_alternative_rejected(self):
        with pytest.raises(InputError):
            ReviewMatrix(("a",), np.ones((1, 3)))

    def test_out_of_range_value_rejected(self):
        with pytest.raises(RatingRangeError):
            ReviewMatrix(("a", "b"), np.array([[1.0], [4.2]]))

    def test_values_read_only(self):
        m = ReviewMatrix(("a", "b"), np.ones((2, 1)))
        with pytest.raises(ValueError):
            m.values[0, 0] = 2.0


class TestCategoryMeans:
    def test_single_reviewer(self):
        m = ReviewMatrix(("a", "b"), np.array([[3.0], [1.0]]))
        np.testing.assert_array_equal(category_means(m).scores, [3.0, 1.0])

    def test_symmetric_mean(self):
        m = ReviewMatrix(("a", "b"), np.array([[1.0, 2.0, 3.0], [0.0, 0.0, 0.0]]))
        assert category_means(m).scores[0] == pytest.approx(2.0)

    def test_travel_fixture_parks_mean(self, travel_matrix):
        means = category_means(travel_matrix)
        parks = means.scores[means.alternatives.index("Parks/Picnic Spots")]
        assert parks == pytest.approx(3.1809, abs=1e-3)

    def test_reviewer_permutation_invariance(self, travel_matrix):
        rng = np.random.default_rng(7)
        shuffled = ReviewMatrix(
            travel_matrix.alternatives,
            travel_matrix.values[:, rng.permutation(travel_matrix.n_reviewers)],
        )
        np.testing.assert_allclose(
            category_means(shuffled).scores,
            category_means(travel_matrix).scores,
            atol=1e-12,
        )


# zeros stay possible but tiny values are excluded: scaling a denormal
# can underflow to 0 and legitimately change the normalized column
nonneg_matrices = arrays(
    np.float64,
    st.tuples(st.integers(1, 6), st.integers(1, 6)),
    elements=st.one_of(st.just(0.0), st.floats(1e-3, 1e6, allow_nan=False)),
)


class TestNormalize:
    def test_column_divided_by_max(self):
        np.testing.assert_allclose(
            normalize(np.array([2.0, 4.0, 1.0])), [0.5, 1.0, 0.25]
        )

    def test_equal_positive_column(self):
        np.testing.assert_array_equal(normalize(np.array([3.0, 3.0, 3.0])), [1, 1, 1])

    def test_zero_column_zeros_plus_one_warning(self):
        with pytest.warns(DegenerateColumnWarning) as caught:
            out = normalize(np.array([[0.0, 1.0], [0.0, 2.0]]))
        assert len(caught) == 1
        np.testing.assert_array_equal(out[:, 0], [0.0, 0.0])
        np.testing.assert_allclose(out[:, 1], [0.5, 1.0])

    def test_negative_entry_rejected(self):
        with pytest.raises(InputError):
            normalize(np.array([-1.0, 2.0]))

    def test_matrix_is_per_column(self):
        out = normalize(np.array([[1.0, 10.0], [2.0, 5.0]]))
        np.testing.assert_allclose(out, [[0.5, 1.0], [1.0, 0.5]])

    @pytest.mark.filterwarnings("ignore::tourrank.DegenerateColumnWarning")
    @given(nonneg_matrices)
    @settings(max_examples=200, deadline=None)
    def test_range_and_max(self, m):
        out = normalize(m)
        assert np.all(out >= 0) and np.all(out <= 1)
        for j in range(m.shape[1]):
            if m[:, j].max() > 0:
                assert out[:, j].max() == 1.0

    @pytest.mark.filterwarnings("ignore::tourrank.DegenerateColumnWarning")
    @given(nonneg_matrices)
    @settings(max_examples=200, deadline=None)
    def test_idempotent(self, m):
        once = normalize(m)
        np.testing.assert_allclose(normalize(once), once, atol=1e-12)

    @pytest.mark.filterwarnings("ignore::tourrank.DegenerateColumnWarning")
    @given(nonneg_matrices, st.floats(1e-3, 1e3, allow_nan=False))
    @settings(max_examples=200, deadline=None)
    def test_scale_invariant(self, m, c):
        np.testing.assert_allclose(normalize(c * m), normalize(m), atol=1e-12)


class TestClassifyRating:
    @pytest.mark.parametrize(
        "value,expected",
        [
            (0.0, RatingCategory.TERRIBLE),
            (0.005, RatingCategory.POOR),
            (1.0, RatingCategory.POOR),
            (1.01, RatingCategory.AVERAGE),
            (2.0, RatingCategory.AVERAGE),
            (2.01, RatingCategory.VERY_GOOD),
            (3.0, RatingCategory.VERY_GOOD),
            (3.01, RatingCategory.EXCELLENT),
            (4.0, RatingCategory.EXCELLENT),
        ],
    )
    def test_boundaries(self, value, expected):
        assert classify_rating(value) is expected

    @pytest.mark.parametrize("value", [-0.001, 4.001, float("nan"), float("inf")])
    def test_out_of_range(self, value):
        with pytest.raises(RatingRangeError):
            classify_rating(value)

    @given(st.floats(0, 4, allow_nan=False))
    @settings(max_examples=500, deadline=None)
    def test_total_partition(self, v):
        # every rating lands in exactly one category
        assert classify_rating(v) in RatingCategory
