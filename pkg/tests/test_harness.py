"""Campaign driver: enumeration, random models, graph6, reports, search."""

import json

import pytest

from spectral_turan import (
    Graph6Error,
    SuiteConfig,
    SuiteConfigError,
    complete_graph,
    cycle_graph,
    empty_graph,
    enumerate_labeled_graphs,
    extremal_search,
    graph6_decode,
    graph6_encode,
    is_isomorphic,
    random_graph,
    run_suite,
    spectral_radius,
    turan_graph,
    turan_params,
)
from spectral_turan.harness import SplitMix64, derive_seed, parse_model, validate_config
from spectral_turan.reporting import report_to_dict, write_report_bundle, write_report_json


def test_enumerate_labeled_graphs_counts():
    assert len(list(enumerate_labeled_graphs(3))) == 8
    graphs4 = list(enumerate_labeled_graphs(4))
    assert len(graphs4) == 64
    assert sum(1 for g in graphs4 if all(g.degree(v) == 2 for v in range(4))) == 3
    assert len(list(enumerate_labeled_graphs(0))) == 1
    with pytest.raises(ValueError):
        next(enumerate_labeled_graphs(9))


def test_enumerate_offset_restart():
    full = list(enumerate_labeled_graphs(4))
    assert list(enumerate_labeled_graphs(4, offset=40)) == full[40:]


def test_random_graph_determinism():
    assert random_graph("gnp:0.5", 12, 99) == random_graph("gnp:0.5", 12, 99)
    assert random_graph("reg:3", 8, 5) == random_graph("reg:3", 8, 5)
    assert random_graph("gnp:0.5", 12, 99) != random_graph("gnp:0.5", 12, 100)
    assert random_graph("gnp:0", 7, 1) == empty_graph(7)
    assert random_graph("gnp:1", 7, 1) == complete_graph(7)


def test_random_graph_known_stream():
    # frozen draw so cross-platform drift would be caught
    g = random_graph("gnp:0.5", 6, 2024)
    assert graph6_encode(g) == graph6_encode(random_graph(("gnp", 0.5), 6, 2024))
    r = random_graph(("regular", 2), 5, 11)
    assert sorted(r.degree(v) for v in range(5)) == [2] * 5


def test_parse_model_errors():
    with pytest.raises(ValueError):
        parse_model("gnp:1.5")
    with pytest.raises(ValueError):
        parse_model("banana:3")
    with pytest.raises(ValueError):
        random_graph("reg:3", 5, 0)  # odd product


def test_derive_seed_spreads():
    seeds = {derive_seed(7, i) for i in range(1000)}
    assert len(seeds) == 1000


def test_graph6_format_examples():
    assert graph6_encode(empty_graph(1)) == "@"
    assert graph6_encode(complete_graph(2)) == "A_"
    assert graph6_encode(empty_graph(2)) == "A?"
    assert graph6_decode("A_") == complete_graph(2)
    assert graph6_decode(">>graph6<<A_") == complete_graph(2)


def test_graph6_roundtrip():
    for n in range(7):
        for g in enumerate_labeled_graphs(n):
            assert graph6_decode(graph6_encode(g)) == g
    rng = SplitMix64(77)
    for _ in range(2000):
        g = random_graph("gnp:0.5", 7, rng.next_u64())
        assert graph6_decode(graph6_encode(g)) == g
    for n in (63, 80, 130):
        g = random_graph("gnp:0.2", n, rng.next_u64())
        text = graph6_encode(g)
        assert text.startswith("~")
        assert graph6_decode(text) == g


def test_graph6_malformed():
    with pytest.raises(Graph6Error):
        graph6_decode("")
    with pytest.raises(Graph6Error):
        graph6_decode("A")  # missing body
    with pytest.raises(Graph6Error):
        graph6_decode("B??")  # too long
    with pytest.raises(Graph6Error):
        graph6_decode("A" + chr(20))  # outside alphabet
    with pytest.raises(Graph6Error):
        graph6_decode("A" + chr(63 + 16))  # nonzero padding for n=2


def test_run_suite_counts_and_determinism():
    # two runs of the full battery must serialize identically apart from timing
    cfg = SuiteConfig(theorems=("all",), mode="exhaustive", n=4, r_values=(2, 3), s_values=(1, 2))
    rep1 = run_suite(cfg)
    rep2 = run_suite(cfg)
    d1, d2 = report_to_dict(rep1), report_to_dict(rep2)
    d1.pop("elapsed_seconds")
    d2.pop("elapsed_seconds")
    assert json.dumps(d1, sort_keys=True) == json.dumps(d2, sort_keys=True)
    for res in rep1.results:
        assert res.instances == res.holds + res.vacuous + res.degenerate + len(res.violations)
    assert rep1.violation_count == 0


def test_run_suite_worker_parity():
    base = SuiteConfig(theorems=("edge-to-spectral",), mode="exhaustive", n=5, r_values=(2,))
    rep1 = run_suite(base)
    rep4 = run_suite(SuiteConfig(**{**base.__dict__, "workers": 4}))
    d1, d4 = report_to_dict(rep1), report_to_dict(rep4)
    d1.pop("elapsed_seconds"), d4.pop("elapsed_seconds")
    d1["config"].pop("workers"), d4["config"].pop("workers")
    assert d1 == d4


def test_run_suite_random_mode():
    cfg = SuiteConfig(
        theorems=("clique-bound",),
        mode="random",
        n=9,
        count=300,
        model="gnp:0.5",
        seed=7,
    )
    rep = run_suite(cfg)
    assert rep.results[0].instances == 300
    assert rep.violation_count == 0


def test_run_suite_file_mode(tmp_path):
    path = tmp_path / "graphs.g6"
    graphs = [cycle_graph(5), complete_graph(4), turan_graph(6, 2)]
    path.write_text("".join(graph6_encode(g) + "\n" for g in graphs))
    cfg = SuiteConfig(theorems=("spectral-turan",), mode="file", path=str(path), r_values=(2,))
    rep = run_suite(cfg)
    res = rep.results[0]
    assert res.instances == 3
    assert res.vacuous == 1  # K4 contains a triangle
    assert rep.violation_count == 0


def test_run_suite_violation_plumbing(tmp_path):
    # a negative tolerance makes true statements fail, exercising the
    # violation records, the streaming sink, and the report schema
    seen = []
    cfg = SuiteConfig(theorems=("edge-to-spectral",), mode="exhaustive", n=4, r_values=(2,), tolerance=-1.0)
    rep = run_suite(cfg, violation_sink=lambda theorem, record: seen.append((theorem, record)))
    assert rep.violation_count > 0
    assert len(seen) == rep.violation_count
    assert all(theorem == "edge-to-spectral" for theorem, _ in seen)
    res = rep.results[0]
    assert res.instances == res.holds + res.vacuous + res.degenerate + len(res.violations)
    record = res.violations[0]
    assert set(record) == {"g6", "residuals"}
    assert graph6_decode(record["g6"]).n == 4


def test_run_suite_violation_sink_parallel():
    seen = []
    cfg = SuiteConfig(
        theorems=("edge-to-spectral",), mode="exhaustive", n=5, r_values=(2,),
        tolerance=-1.0, workers=4,
    )
    rep = run_suite(cfg, violation_sink=lambda theorem, record: seen.append((theorem, record)))
    assert rep.violation_count > 0 and len(seen) == rep.violation_count
    assert [record for _, record in seen] == rep.results[0].violations


def test_run_suite_config_validation():
    with pytest.raises(SuiteConfigError):
        validate_config(SuiteConfig(theorems=("nope",), mode="exhaustive", n=4))
    with pytest.raises(SuiteConfigError):
        validate_config(SuiteConfig(mode="exhaustive", n=9))
    with pytest.raises(SuiteConfigError):
        validate_config(SuiteConfig(mode="random", n=5))
    with pytest.raises(SuiteConfigError):
        validate_config(SuiteConfig(mode="file"))
    with pytest.raises(SuiteConfigError):
        validate_config(SuiteConfig(mode="exhaustive", n=4, workers=0))


def test_report_schema(tmp_path):
    cfg = SuiteConfig(theorems=("clique-bound",), mode="exhaustive", n=3)
    rep = run_suite(cfg)
    data = report_to_dict(rep)
    assert set(data) == {"config", "results", "elapsed_seconds", "version"}
    entry = data["results"][0]
    assert set(entry) == {"theorem", "instances", "holds", "vacuous", "degenerate", "violations"}
    path = write_report_json(rep, str(tmp_path / "report.json"))
    loaded = json.loads(open(path).read())
    assert loaded["version"] == rep.version
    assert loaded["results"][0]["instances"] == 8


def test_report_bundle_files(tmp_path):
    cfg = SuiteConfig(theorems=("clique-bound", "spectral-turan"), mode="exhaustive", n=4, r_values=(2,))
    rep = run_suite(cfg)
    paths = write_report_bundle(rep, str(tmp_path / "out"))
    names = {p.rsplit("/", 1)[-1] for p in paths}
    assert {"report.json", "summary.csv", "outcomes.png"} <= names
    csv_text = open(tmp_path / "out" / "summary.csv").read()
    assert csv_text.splitlines()[0] == "theorem,instances,holds,vacuous,degenerate,violations"
    assert "clique-bound" in csv_text


def test_extremal_search_small_cases():
    assert is_isomorphic(extremal_search(5, 2, seed=1, steps=2000), turan_graph(5, 2))
    assert is_isomorphic(extremal_search(4, 3, seed=2, steps=2000), turan_graph(4, 3))
    best = extremal_search(6, 3, seed=3, steps=3000)
    assert is_isomorphic(best, turan_graph(6, 3))
    assert spectral_radius(best) == pytest.approx(turan_params(6, 3).lam0, abs=1e-9)
