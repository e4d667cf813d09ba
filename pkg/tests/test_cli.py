import pytest
from conftest import M8, M12, standard_rows
from hypothesis import given
from hypothesis import strategies as st

from lcdcodes import database, tables
from lcdcodes.cli import main


@pytest.fixture
def dbdir(tmp_path, monkeypatch):
    d = tmp_path / "db"
    monkeypatch.setenv("LCDDB_DIR", str(d))
    return d


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_classify_worked_example(dbdir, capsys):
    code, out, _ = run(capsys, "classify", "-q", "2", "-n", "6", "-k", "3")
    assert code == 0
    assert "N=8 mass=640/640 COMPLETE" in out
    db = database.load(database.db_path(dbdir, 2, 6, 3))
    assert db.N == 8 and db.stored_mass() == 640


def test_classify_examples(dbdir, capsys):
    assert "N=4 " in run(capsys, "classify", "-q", "3", "-n", "4", "-k", "2")[1]
    code, out, _ = run(capsys, "classify", "-q", "2", "-n", "4", "-k", "3")
    assert code == 0 and "N=2 " in out and "strategy=dual" in out


def test_missing_prerequisite(dbdir, capsys):
    code, _, err = run(capsys, "classify", "-q", "2", "-n", "8", "-k", "3", "--no-prereqs")
    assert code == 2
    assert "lcdcodes classify -q 2 -n 7 -k 3" in err


def test_usage_errors(dbdir, capsys):
    assert run(capsys, "classify", "-q", "5", "-n", "4", "-k", "2")[0] == 2
    assert run(capsys, "classify", "-q", "2", "-n", "4", "-k", "4")[0] == 2
    assert run(capsys, "classify", "-q", "2", "-n", "4", "-k", "1", "--threads", "0")[0] == 2
    assert run(capsys, "info", "-q", "2", "1100", "110")[0] == 2
    assert run(capsys, "info", "-q", "2", "1100", "1100")[0] == 2
    assert run(capsys, "bogus")[0] == 2


def test_verify(dbdir, capsys, tmp_path):
    run(capsys, "classify", "-q", "2", "-n", "8", "-k", "4")
    path = database.db_path(dbdir, 2, 8, 4)
    code, out, _ = run(capsys, "verify", str(path))
    assert code == 0 and out.startswith("PASS (2,8,4) N=42")

    lines = path.read_text().splitlines()
    bad = tmp_path / "corrupt.db"
    tok = lines[1].split()
    tok[1] = tok[2]  # two equal rows: rank drops
    bad.write_text("\n".join([lines[0], " ".join(tok)] + lines[2:]) + "\n")
    code, out, _ = run(capsys, "verify", str(bad))
    assert code == 1 and "rank" in out

    dup = tmp_path / "dup.db"
    head = lines[0].rsplit(" ", 1)[0] + " 43"
    dup.write_text("\n".join([head] + lines[1:] + [lines[1]]) + "\n")
    code, out, _ = run(capsys, "verify", str(dup))
    assert code == 1 and "exceeds" in out

    assert run(capsys, "verify", str(tmp_path / "absent.db"))[0] == 1


def test_info_named_codes(capsys):
    code, out, _ = run(capsys, "info", "-q", "2", *standard_rows(6, M12))
    assert code == 0 and "[12,6,3]" in out and "LCD yes, d=3, |Aut|=1" in out
    code, out, _ = run(capsys, "info", "-q", "3", ",".join(standard_rows(4, M8)))
    assert "[8,4,3]" in out and "LCD yes, d=3, |Aut|=2" in out
    code, out, _ = run(capsys, "info", "-q", "2", "10000", "01000", "00100", "00010", "00001")
    assert "LCD yes, d=1, |Aut|=120" in out


def test_mass_command(capsys):
    assert "T_2(6,3) = 640" in run(capsys, "mass", "-q", "2", "6", "3")[1]
    assert "t_2(14,7) = 9282" in run(capsys, "mass", "-q", "2", "14", "7", "--lower")[1]
    assert "t_3(11,4) = 319" in run(capsys, "mass", "-q", "3", "11", "4", "--lower")[1]
    out = run(capsys, "mass", "-q", "2", "14", "--lower")[1]
    assert out.strip().endswith("= 19790")
    assert run(capsys, "mass", "-q", "2", "6", "6")[0] == 2


def test_equiv_command(capsys):
    code, out, _ = run(capsys, "equiv", "-q", "3", "1021,0112", "2201,0112")
    assert code == 0 and out.startswith("equivalent")
    code, out, _ = run(capsys, "equiv", "-q", "2", "1100,0011", "1000,0100")
    assert out.startswith("not equivalent")


def test_table_missing_then_built(dbdir, capsys):
    code, _, err = run(capsys, "table", "aut-binary", "--max-n", "5")
    assert code == 2 and "lcdcodes classify -q 2 -n 5 -k 2" in err
    code, out, _ = run(capsys, "table", "aut-binary", "--max-n", "5", "--build")
    assert code == 0
    assert out.splitlines() == ["(2,1)\t1", "(3,1)\t2", "(4,1)\t6", "(4,2)\t4", "(5,1)\t12", "(5,2)\t4"]
    # a second run reads the stored databases
    assert run(capsys, "table", "aut-binary", "--max-n", "5")[0] == 0


def test_table_rows_from_databases(dbdir, capsys):
    code, out, _ = run(capsys, "table", "ternary-main", "--max-n", "6", "--build")
    assert code == 0
    assert "(6,3)\t17 | 7 8 2 | 7 8 2" in out.splitlines()


# -- database format --------------------------------------------------------

def _entries():
    row = st.text(alphabet="012", min_size=5, max_size=5)
    return st.builds(
        database.Entry,
        st.lists(row, min_size=2, max_size=2).map(tuple),
        st.integers(1, 10 ** 30), st.integers(0, 5), st.integers(0, 5),
        st.lists(st.integers(0, 300), min_size=6, max_size=6).map(tuple),
    )


@given(st.lists(_entries(), max_size=5))
def test_serialize_round_trip(entries):
    db = database.CodeDb(3, 5, 2, tuple(entries))
    text = database.serialize(db)
    assert database.parse(text) == db
    assert database.serialize(database.parse(text)) == text


@pytest.mark.parametrize("text", [
    "",
    "LCDDB 2 2 4 2 0\n",
    "LCDDB 1 5 4 2 0\n",
    "LCDDB 1 2 4 2 1\n",
    "LCDDB 1 2 4 2 1\nG 1000 0100 AUT 4 D 1 DD 1\n",
    "LCDDB 1 2 4 2 1\nG 1000 0102 AUT 4 D 1 DD 1 WE 1,2,1,0,0\n",
    "LCDDB 1 2 4 2 1\nG 1000 0100 AUT x D 1 DD 1 WE 1,2,1,0,0\n",
    "LCDDB 1 2 4 2 1\nG 1000 0100 AUT 4 D 1 DD 1 WE 1,2,1\n",
])
def test_parse_rejects(text):
    with pytest.raises(database.DatabaseError):
        database.parse(text)


def test_table_spec():
    assert tables.table_spec("binary-main").cells[-1] == (11, 5)
    assert tables.table_spec("ternary-main").cells[-1] == (8, 4)
    assert (12, 6) in tables.table_spec("aut-binary", 12).cells
    with pytest.raises(ValueError):
        tables.table_spec("nope")
