from pathlib import Path

import pytest

from qrfpv import tables
from qrfpv.cli import main

DATA = Path(__file__).parent / "data"


def test_table_pairs_cover_both_tables():
    pairs = tables.table_pairs()
    assert len(pairs) == 22
    assert (13, 3) in pairs and (3, 37) in pairs


def test_reference_rows_are_consistent_with_their_gray_parameters():
    for rows in tables.TABLES.values():
        for r in rows:
            n, k, d = r.gray.split("]")[0].strip("[").split(",")
            assert int(d) == r.d
            assert int(n) == 2 * r.n or r.note


def test_gray_duality_classes():
    from qrfpv.qr_construct import qr_family

    assert tables.gray_duality(qr_family(3, 11)) == "self-dual"
    assert tables.gray_duality(qr_family(3, 13)) == "formally self-dual"
    assert tables.gray_duality(qr_family(2, 17)) == "formally self-dual"


def test_small_rows():
    by_label = {r.label: r for r in tables.TABLE1}
    row = tables.compute_row(by_label["ext QR_7(3)"])
    assert row.status == "match" and row.computed == "(4,49^2,4)"
    row = tables.compute_row(tables.TABLE2[3])
    assert row.computed == "(4,169^2,4)"
    assert row.status == "differs: length (annotated)"


@pytest.mark.parametrize("which", [1, 2])
def test_fast_tier_matches_checked_in_file(which, tmp_path, capsys):
    out = tmp_path / "t.txt"
    assert main(["table", "--which", str(which), "--tier", "fast", "--out", str(out)]) == 0
    assert out.read_text() == (DATA / f"table{which}_fast.txt").read_text()
