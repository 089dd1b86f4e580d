import pytest

from noisydup.cli import main, sample_codebook_text
from noisydup.ndcode import Codebook


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_transform(capsys):
    assert run(capsys, "transform", "--q", "3", "--k", "3", "--op", "phi", "1201210")[:2] == (0, "120|0012\n")
    assert run(capsys, "transform", "--q", "3", "--k", "3", "--op", "root", "1201201210")[1] == "1201210\n"
    assert run(capsys, "transform", "--q", "3", "--k", "3", "--op", "mu", "1202")[1] == "1202\n"
    assert run(capsys, "transform", "--q", "3", "--k", "3", "--op", "interleave", "221200012")[1] == "220201102\n"
    assert run(capsys, "transform", "--q", "3", "--k", "1", "--op", "zeta", "2101")[1] == "1001\n"


def test_transform_bad_input(capsys):
    code, out, err = run(capsys, "transform", "--q", "3", "--k", "3", "1291")
    assert code == 2 and out == "" and err
    assert run(capsys, "transform", "--k", "3", "1201")[0] == 2


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as e:
        main(["nosuch"])
    assert e.value.code == 2
    with pytest.raises(SystemExit) as e:
        main(["rates"])
    assert e.value.code == 2


def test_corrupt_is_seeded(tmp_path, capsys):
    log = tmp_path / "events.txt"
    a = run(capsys, "corrupt", "--q", "3", "--k", "2", "--t", "3", "--noisy", "--seed", "4", "--out", str(log), "01021201")
    first_log = log.read_text()
    b = run(capsys, "corrupt", "--q", "3", "--k", "2", "--t", "3", "--noisy", "--seed", "4", "--out", str(log), "01021201")
    assert a == b and a[0] == 0
    assert log.read_text() == first_log and len(first_log.splitlines()) == 3
    assert run(capsys, "corrupt", "--q", "3", "--k", "2", "--t", "0", "01021201")[1] == "01021201\n"


def test_corrupt_then_decode_round_trip(capsys):
    book = Codebook.from_text(sample_codebook_text())
    for seed, c in enumerate(book.words):
        word = "".join(map(str, c))
        _, y, _ = run(capsys, "corrupt", "--q", "3", "--k", "2", "--t", "4", "--noisy", "--seed", str(seed), word)
        code, out, _ = run(capsys, "decode", y.strip())
        assert code == 0 and out == word + "\n"


def test_decode_failure_exit_1(capsys):
    code, out, err = run(capsys, "decode", "2222222222")
    assert code == 1 and out == "" and "decode failed" in err


def test_codebook_command(tmp_path, capsys):
    path = tmp_path / "book.txt"
    assert run(capsys, "codebook", "--q", "3", "--k", "2", "--n", "8", "--out", str(path))[0] == 0
    assert path.read_text() == sample_codebook_text()
    params = path.read_text().splitlines()[1]
    code, out, _ = run(capsys, "codebook", "--q", "3", "--k", "2", "--n", "8", "--params", params)
    assert code == 0 and out == sample_codebook_text()
    assert run(capsys, "codebook", "--q", "3", "--k", "2", "--n", "4")[0] == 2


def test_rates_command(tmp_path, capsys):
    path = tmp_path / "rates.csv"
    code, _, _ = run(capsys, "rates", "--k", "3", "--q-list", "3,4,5", "--n-range", "100:400:20", "--out", str(path))
    lines = path.read_text().splitlines()
    assert code == 0
    assert lines[0] == "q,k,n,upper_rate,lower_rate"
    assert len(lines) - 1 == 3 * 16


def test_verify_sample(capsys):
    code, out, _ = run(capsys, "verify", "sample", "--t", "2")
    assert code == 0 and out.count("status: pass") == 3


def test_verify_other_scenarios(capsys):
    assert run(capsys, "verify", "guard", "--n", "5")[0] == 0
    assert run(capsys, "verify", "syndromes", "--q", "2", "--k", "2", "--n", "7")[0] == 0
    assert run(capsys, "verify", "decode", "--q", "2", "--k", "2", "--n", "8", "--t", "2")[0] == 0
    assert run(capsys, "verify", "cone", "--t", "1")[0] == 0
    assert run(capsys, "verify", "coverage", "--q", "2", "--k", "2", "--n", "6", "--t", "2")[0] == 0
    assert run(capsys, "verify", "guard")[0] == 2


def test_budget_exhaustion_exit_1(capsys):
    assert run(capsys, "verify", "cone", "--t", "3", "--budget", "10")[0] == 1
