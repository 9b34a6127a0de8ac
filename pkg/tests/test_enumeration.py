import csv
import io

import pytest

from digitopo import enumeration
from digitopo.metrics import is_interior

EXPECTED = {
    "T4": {0: 16, 1: 117, 2: 102, 3: 20, 4: 1},
    "T8": {0: 1, 1: 132, 2: 102, 3: 20, 4: 1},
    "H": {0: 17, 1: 116, 2: 102, 3: 20, 4: 1},
    "Y4": {0: 17, 1: 116, 2: 102, 3: 20, 4: 1},
    "Y8": {0: 17, 1: 116, 2: 102, 3: 20, 4: 1},
}


@pytest.mark.parametrize("metric,expected", sorted(EXPECTED.items()))
def test_distributions_match_reference(metric, expected):
    dist = enumeration.distribution(metric)
    assert dist == expected
    assert sum(dist.values()) == 256
    assert max(dist) <= 4


def test_complement_distributions():
    assert (enumeration.distribution("T4_COMPLEMENT")
            == enumeration.distribution("T4"))
    assert (enumeration.distribution("T8_COMPLEMENT")
            == enumeration.distribution("T8"))


def test_duality_check_passes():
    report = enumeration.duality_check()
    assert report.passed
    assert [c.name for c in report.checks] == ["duality_T4", "duality_T8"]
    assert all(c.counterexamples == [] for c in report.checks)


def test_equivalence_report_passes():
    report = enumeration.equivalence_report()
    assert report.passed
    assert report.failures() == []
    for check in report.checks:
        assert check.counterexamples == []
    names = {c.name for c in report.checks}
    assert "hilditch_vs_oracle_n8" in names
    assert "yokoi8_equals_hilditch" in names


def test_equivalence_report_summary_counts():
    report = enumeration.equivalence_report()
    assert report.summary["simple_n4"] == 116
    assert report.summary["simple_n8"] == 116
    # regression constant: the two 116-element sets share 48 masks
    assert report.summary["simple_both"] == 48


def test_identity_exception_sets():
    from digitopo.metrics import (HILDITCH_TABLE, T4_TABLE, T8_TABLE,
                                  Y4_TABLE, Y8_TABLE)
    h_bad = {m for m in range(256) if HILDITCH_TABLE[m] != T8_TABLE[m]}
    assert h_bad == {m for m in range(256) if is_interior(m, 8)}
    assert all(HILDITCH_TABLE[m] == 0 and T8_TABLE[m] == 1 for m in h_bad)
    assert all(Y8_TABLE[m] == HILDITCH_TABLE[m] for m in range(256))
    y4_bad = {m for m in range(256) if Y4_TABLE[m] != T4_TABLE[m]}
    assert y4_bad == {255}
    y8_bad = {m for m in range(256) if Y8_TABLE[m] != T8_TABLE[m]}
    assert y8_bad == h_bad


def test_deletability_rate():
    for n in (4, 8):
        rate = enumeration.deletability_rate(n)
        assert (rate.simple, rate.total) == (116, 256)
        assert rate.percent == 45.31
        assert rate.non_simple == 140
        assert rate.non_simple_percent == 54.69


def test_round_percent_is_half_up():
    assert enumeration._round_percent(1, 800) == 0.13  # 0.125 rounds up
    assert enumeration._round_percent(116, 256) == 45.31
    assert enumeration._round_percent(140, 256) == 54.69


def test_distribution_csv_schema():
    text = enumeration.distribution_csv(("T4", "H"))
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == ["metric", "k", "count"]
    body = rows[1:]
    assert [r[0] for r in body] == ["T4"] * 5 + ["H"] * 5
    assert [int(r[1]) for r in body] == [0, 1, 2, 3, 4] * 2
    assert [int(r[2]) for r in body[:5]] == [16, 117, 102, 20, 1]
    assert [int(r[2]) for r in body[5:]] == [17, 116, 102, 20, 1]


def test_write_tables_csv(tmp_path):
    paths = enumeration.write_tables_csv(str(tmp_path))
    assert [p.rsplit("/", 1)[1] for p in paths] == [
        "table1.csv", "table2.csv", "table3.csv"]
    table1 = (tmp_path / "table1.csv").read_text()
    assert table1.startswith("metric,k,count\nT4,0,16\n")
    for stem, metrics in enumeration.TABLE_METRICS.items():
        rows = list(csv.reader(io.StringIO((tmp_path / f"{stem}.csv").read_text())))
        assert len(rows) == 1 + 5 * len(metrics)


def test_render_distribution_table():
    text = enumeration.render_distribution_table(("T4", "T8"))
    lines = text.splitlines()
    assert "k=0" in lines[0] and "k>4" in lines[0]
    assert lines[1].split() == ["T4", "16", "117", "102", "20", "1", "0"]
    assert lines[2].split() == ["T8", "1", "132", "102", "20", "1", "0"]
