import pytest

from moserrep.bfile import check_bfile, export_bfile, format_bfile, parse_bfile
from moserrep.errors import DomainError
from moserrep.sequences import SequenceFamily

FAMILIES = [
    SequenceFamily("moser", r=2),
    SequenceFamily("moser", r=5),
    SequenceFamily("s", r=3),
    SequenceFamily("shifted", c=7),
    SequenceFamily("affine", a=1, b=2),
    SequenceFamily("t"),
]


def test_format():
    assert format_bfile(SequenceFamily("moser"), 4) == "0 0\n1 1\n2 4\n3 5\n"
    assert format_bfile(SequenceFamily("s"), 3) == "1 1\n2 3\n3 9\n"


@pytest.mark.parametrize("family", FAMILIES, ids=str)
def test_round_trip(family, tmp_path):
    path = tmp_path / "b.txt"
    export_bfile(family, 10**4, path)
    assert check_bfile(family, path) == []
    records = parse_bfile(path.read_text())
    assert records[0][0] == family.first_index
    assert len(records) == 10**4


def test_check_reports_mismatch(tmp_path):
    path = tmp_path / "b.txt"
    path.write_text("0 0\n1 1\n2 5\n")
    assert check_bfile(SequenceFamily("moser"), path) == ["index 2: file has 5, expected 4"]


def test_parse_rejects_malformed():
    with pytest.raises(DomainError):
        parse_bfile("1 1\n3 9\n")
    with pytest.raises(DomainError):
        parse_bfile("1\t1\n")
    with pytest.raises(DomainError):
        parse_bfile("1 x\n")
