import io

import pytest

from chebmul import bench
from chebmul.bench import (
    CSV_COLUMNS,
    BenchRecord,
    UnknownMethodError,
    lookup,
    parse_sizes,
    read_csv,
    run_bench,
    run_costmodel,
    run_error,
    run_opcount,
    time_call,
    write_csv,
)
from chebmul.chebyshev import pm_dft


def _by(records):
    return {(r.method, r.n): r for r in records}


def test_registries():
    assert set(bench.CHEB_METHODS) >= {"direct", "dct", "pm-schoolbook", "pm-karatsuba", "pm-dft",
                                       "pm-dft-accurate"}
    assert set(bench.MONO_METHODS) == {"schoolbook", "karatsuba", "fft"}
    with pytest.raises(UnknownMethodError, match="choose from"):
        lookup("bogus")


@pytest.mark.parametrize("text, sizes", [
    ("2,4,8", [2, 4, 8]),
    ("2^1..2^4", [2, 4, 8, 16]),
    ("2..16", [2, 4, 8, 16]),
    ("7", [7]),
])
def test_parse_sizes(text, sizes):
    assert parse_sizes(text) == sizes


@pytest.mark.parametrize("bad", ["", "a,b", "0", "2^3..2^1x"])
def test_parse_sizes_rejects(bad):
    with pytest.raises(ValueError):
        parse_sizes(bad)


def test_opcount_examples():
    recs = _by(run_opcount(["direct", "karatsuba", "pm-schoolbook"], [4, 8]))
    d4 = recs[("direct", 4)]
    assert (d4.muls, d4.adds, d4.match) == (23, 15, True)
    assert recs[("karatsuba", 8)].muls == 27
    assert all(r.match for r in recs.values())
    assert "published adds" in recs[("pm-schoolbook", 4)].note


def test_opcount_instrumented_methods():
    recs = run_opcount(list(bench.FLOP_BOUND_FACTOR), [2, 64])
    assert all(r.match for r in recs)
    assert all("bound" in r.note for r in recs)


def test_opcount_unknown():
    with pytest.raises(UnknownMethodError):
        run_opcount(["mystery"], [2])


def test_error_small():
    recs = _by(run_error(["direct", "pm-dft", "schoolbook"], [1, 8], trials=5))
    assert recs[("direct", 8)].rel_error <= 1e-13
    assert recs[("pm-dft", 8)].rel_error <= 1e-12
    assert recs[("schoolbook", 8)].rel_error <= 1e-13
    assert recs[("direct", 8)].trials == 5


def test_error_of_trivial_product_is_zero():
    # [2] x [2] is exact in every method
    for name in ("direct", "pm-dft", "dct", "schoolbook", "fft"):
        assert bench.METHODS[name]([2.0], [2.0])[0] == pytest.approx(2.0 if name in bench.CHEB_METHODS else 4.0)
    recs = run_error(["direct"], [1], trials=3, value_range=(2.0, 2.0 + 1e-300))
    assert recs[0].rel_error == 0.0


def test_error_separation_at_256():
    recs = _by(run_error(["pm-dft", "pm-dft-accurate"], [256], trials=10))
    assert recs[("pm-dft", 256)].rel_error >= 10 * recs[("pm-dft-accurate", 256)].rel_error


def test_error_is_seeded():
    one = run_error(["pm-dft"], [32], trials=4, seed=1)
    two = run_error(["pm-dft"], [32], trials=4, seed=1)
    assert one[0].rel_error == two[0].rel_error


def test_time_call_counts_calls():
    calls = []
    mean, total = time_call(lambda a, b: calls.append(1), None, None, reps=3, min_sample=0.0)
    assert total == 3 and len(calls) == 4 and mean >= 0
    with pytest.raises(ValueError):
        time_call(lambda a, b: None, None, None, reps=0)


def test_run_bench_small():
    recs = run_bench(["direct", "pm-dft"], [4, 16], reps=2, min_sample=0.001)
    assert len(recs) == 4
    assert all(r.mean_time_us > 0 and r.trials >= 2 for r in recs)


def test_monotonic_timing_smoke():
    small = run_bench(["pm-dft"], [512], reps=5)[0].mean_time_us
    large = run_bench(["pm-dft"], [1024], reps=5)[0].mean_time_us
    assert large < 4 * small


def test_costmodel_records():
    recs = _by(run_costmodel(["direct", "pm-dft"], [4]))
    assert recs[("direct", 4)].muls + recs[("direct", 4)].adds == 38
    assert recs[("pm-dft", 4)].muls + recs[("pm-dft", 4)].adds == 179


def test_csv_contract_and_round_trip():
    recs = [
        BenchRecord("direct", 4, trials=3, mean_time_us=1.5, rel_error=2e-17),
        BenchRecord("pm-dft", 8, muls=10, adds=20),
    ]
    buf = io.StringIO()
    write_csv(recs, buf, {"seed": 7, "range": "-50,50"})
    text = buf.getvalue()
    lines = text.splitlines()
    assert lines[:2] == ["# seed=7", "# range=-50,50"]
    assert lines[2] == ",".join(CSV_COLUMNS)
    assert lines[4] == "pm-dft,8,1,,,10,20"
    meta, back = read_csv(text)
    assert meta == {"seed": "7", "range": "-50,50"}
    assert [r.row() for r in back] == [r.row() for r in recs]


def test_csv_rejects_wrong_header():
    with pytest.raises(ValueError):
        read_csv("a,b,c\n1,2,3\n")


def test_record_validation():
    with pytest.raises(ValueError):
        BenchRecord("direct", 0)
    with pytest.raises(ValueError):
        BenchRecord("direct", 2, mean_time_us=0.0)


def test_pm_dft_is_registered_unchanged():
    assert lookup("pm-dft") is pm_dft
