import pathlib

import pytest

from tourrank import load_reviews

DATA_DIR = pathlib.Path(__file__).parent / "data"

# Published per-category mean ratings and the ordering they imply,
# shared by the ranking and acceptance tests.
EXPECTED_MEANS = {
    "Art Galleries": 0.8931,
    "Dance Clubs": 1.3526,
    "Juice Bars": 1.0133,
    "Restaurants": 0.5325,
    "Museums": 0.9397,
    "Resorts": 1.8428,
    "Parks/Picnic Spots": 3.1809,
    "Beaches": 2.8350,
    "Theaters": 1.5694,
    "Religious Institutions": 2.7992,
}

EXPECTED_MANUAL_ORDER = [
    "Parks/Picnic Spots",
    "Beaches",
    "Religious Institutions",
    "Resorts",
    "Theaters",
    "Dance Clubs",
    "Juice Bars",
    "Museums",
    "Art Galleries",
    "Restaurants",
]


@pytest.fixture(scope="session")
def travel_csv_path() -> pathlib.Path:
    return DATA_DIR / "travel_reviews.csv"


@pytest.fixture(scope="session")
def travel_matrix(travel_csv_path):
    with open(travel_csv_path, newline="", encoding="utf-8") as fh:
        return load_reviews(fh)


@pytest.fixture()
def inconsistent_csv(tmp_path) -> pathlib.Path:
    """4 categories whose mean ratios saturate the 1/9..9 clamp (CR ~ 0.41)."""
    path = tmp_path / "inconsistent4.csv"
    path.write_text("reviewer,W,X,Y,Z\nr1,4.0,0.5,0.06,0.008\n", encoding="utf-8")
    return path
