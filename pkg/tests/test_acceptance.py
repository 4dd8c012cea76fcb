"""Acceptance criteria 1-8.  Each test records one PASS/FAIL line, shown in
the terminal summary (and printed, visible with ``-s``)."""

import shutil
import time
from pathlib import Path

from oracles import all_antichains, brute_lookahead, prefix
from wkl import fixtures
from wkl.cli import main
from wkl.extractors import (
    extract_ext_bounded,
    extract_pf_bounded,
    extract_w_bounded_kl,
    lookahead_stability_report,
    verify,
)
from wkl.formats import load_tree
from wkl.tables import FunctionTable, PredicateTable
from wkl.transforms import (
    EnumeratedTree,
    cex_level_width,
    cex_prefix_free,
    hat_interpret,
    leftmost_deepest,
    level_widths,
    limit_characteristic,
    pad_to_narrow,
    project_hat_path,
    strip_twos,
    unique_path_tree,
)
from wkl.tree_core import lookahead_extendible, max_antichain, validate_truncation

GOLDEN = Path(__file__).parent / "golden"
HORIZON = 24
BRISTLE = 3


def report(criterion, number, failures, detail):
    passed = not failures
    line = f"{detail}" + ("" if passed else f"; first failure: {failures[0]}")
    criterion(number, passed, line)
    print(f"criterion {number}: {'PASS' if passed else 'FAIL'}  {line}")
    assert passed, failures[:5]


def bristled_suite():
    return [(k, fixtures.bristled_chains(k, HORIZON, seed, BRISTLE)) for k in range(1, 5) for seed in range(25)]


def test_1_antichain_oracle(criterion):
    start = time.perf_counter()
    failures = []
    for seed in range(200):
        tree = fixtures.random_tree(18, seed)
        best = max(len(a) for a in all_antichains(tree.nodes))
        size, witness = max_antichain(tree)
        if size != best or len(witness) != size:
            failures.append(f"seed {seed}: {size} vs {best}")
    elapsed = time.perf_counter() - start
    if elapsed >= 10:
        failures.append(f"runtime {elapsed:.2f}s")
    report(criterion, 1, failures, f"200 trees (<= 18 nodes) exact, {elapsed:.2f}s")


def test_2_padding_round_trip(criterion):
    start = time.perf_counter()
    failures = []
    for k, tree in bristled_suite():
        padded, sched = pad_to_narrow(tree, k)
        widths = level_widths(padded)
        if max(widths) > k:
            failures.append(f"k={k}: widths {widths}")
        branch = leftmost_deepest(padded)
        path = strip_twos(branch)
        if len(path) != sched.revealed_below(len(branch)):
            failures.append(f"k={k}: length {len(path)} vs {sched.revealed_below(len(branch))}")
        if any(path[:j] not in tree.nodes for j in range(len(path) + 1)):
            failures.append(f"k={k}: {path} not a path prefix")
        if path not in brute_lookahead(tree.nodes, len(path), sched.entries[len(path)]):
            failures.append(f"k={k}: {path} fails lookahead {sched.entries[len(path)]}")
    elapsed = time.perf_counter() - start
    if elapsed >= 30:
        failures.append(f"runtime {elapsed:.2f}s")
    report(criterion, 2, failures, f"100 bristled trees, width <= k, stripped branch checked, {elapsed:.2f}s")


def _runs():
    for k, tree in bristled_suite():
        b0 = max_antichain(tree)[0]
        c_level = max(level_widths(tree))
        yield "pf", tree, b0, 16, 8
        yield "ext", tree, k, HORIZON - BRISTLE, BRISTLE
        yield "wbd", tree, c_level, 10, BRISTLE
    for tree in (fixtures.comb(), fixtures.twochain()):
        b0 = max_antichain(tree)[0]
        c_level = max(level_widths(tree))
        yield "pf", tree, b0, 4, 2
        yield "ext", tree, max(len(lookahead_extendible(tree, n, 2)) for n in range(5)), 4, 2
        yield "wbd", tree, c_level, 3, 3


def test_3_extractor_soundness(criterion):
    extractors = {"pf": extract_pf_bounded, "ext": extract_ext_bounded, "wbd": extract_w_bounded_kl}
    failures = []
    count = 0
    for variant, tree, c, length, s in _runs():
        count += 1
        try:
            result, cert = extractors[variant](tree, c, length, s)
        except Exception as exc:  # any raise is a failure here
            failures.append(f"{variant} c={c}: {exc!r}")
            continue
        problems = verify(tree, result, cert, c)
        # checked again directly against the raw node set
        path = result.path
        if any(path[:j] not in tree.nodes for j in range(len(path) + 1)):
            problems.append("prefix missing")
        if path not in brute_lookahead(tree.nodes, len(path), s):
            problems.append("endpoint fails lookahead")
        if len(path) != length:
            problems.append(f"length {len(path)}")
        if problems:
            failures.append(f"{variant} c={c}: {problems}")
    report(criterion, 3, failures, f"{count} extractions re-verified, zero failures")


def test_4_unique_path_tree(criterion):
    failures = []
    horizon = 14
    bounds = set()
    for seed in range(50):
        theta = fixtures.random_predicate_table(seed, 1 + seed % 8, horizon, density=3 + seed % 5)
        tree = unique_path_tree(theta, horizon).accumulate()
        bound = theta.stabilization_bound()
        bounds.add(bound)
        for s in range(bound + 1, horizon + 1):
            for n in range(horizon - s + 1):
                width = len(lookahead_extendible(tree, n, s))
                if width != 1:
                    failures.append(f"seed {seed}: n={n} s={s} width {width}")
        s = bound + 1
        result, _ = extract_ext_bounded(tree, 1, horizon - s, s)
        if result.path != limit_characteristic(theta, horizon - s):
            failures.append(f"seed {seed}: path {result.path}")
    report(
        criterion, 4, failures,
        f"50 tables (bounds {sorted(bounds)}), width 1 past the stabilization bound, path = limit string",
    )


def test_5_counterexamples(criterion):
    failures = []
    observed = []
    for seed in range(20):
        b = 1 + seed % 3
        horizon = 7
        h = fixtures.random_function_table(seed, horizon, b)
        tree = cex_prefix_free(h, horizon).accumulate()
        best = max(len(a) for a in all_antichains(tree.nodes))
        if best > b or max_antichain(tree)[0] != best:
            failures.append(f"cex-pf seed {seed}: antichain {best} > {b}")
        for n in range(horizon):
            if (1,) * h(n) + (0,) * n not in tree.nodes:
                failures.append(f"cex-pf seed {seed}: missing witness at n={n}")
    for seed in range(20):
        c = 1 + seed % 3
        horizon = 8
        theta = fixtures.random_predicate_table(seed, horizon + 4, horizon, density=6)
        # erase-style table: theta true except on the random pairs
        theta = PredicateTable.from_rule(lambda m, i: (m, i) not in theta.true_pairs, horizon + 4, horizon)
        widths = level_widths(cex_level_width(theta, c, horizon).accumulate())
        observed.append(f"{c}:{max(widths)}")
        if max(widths) > c + 1:
            failures.append(f"cex-width seed {seed}: width {max(widths)} > {c + 1}")
    print("cex_level_width observed max width (c:max) " + " ".join(observed))
    report(criterion, 5, failures, "cex-pf antichain <= b, witnesses present; cex-width max (c:max) " + " ".join(observed))


def _random_enumeration(seed):
    tree = fixtures.random_tree(16, seed)
    rng = fixtures.Lcg(seed)
    pending = sorted(tree.nodes, key=len)
    emitted = []
    stages = []
    stage = 0
    while pending:
        ready = [v for v in pending if not v or v[:-1] in emitted]
        pick = ready[rng.below(len(ready))]
        pending.remove(pick)
        emitted.append(pick)
        stage += rng.below(2)
        stages.append((stage, pick))
        if rng.below(4) == 0:
            stages.append((stage, emitted[rng.below(len(emitted))]))
    return tree, EnumeratedTree(tuple(stages), tree.horizon)


def test_6_hat_interpretation(criterion):
    failures = []
    checked = 0
    for seed in range(50):
        tree, enum = _random_enumeration(seed)
        if enum.accumulate() != tree:
            failures.append(f"seed {seed}: enumeration differs from source")
        for depth in range(tree.depth + 2):
            hat = hat_interpret(enum, depth)
            validate_truncation(hat.nodes, depth, "nat")
            for tau in hat.levels[depth]:
                checked += 1
                image = project_hat_path(enum, tau)
                if image not in tree.nodes or len(image) != max(depth - 1, 0):
                    failures.append(f"seed {seed}: {tau} -> {image}")
    report(criterion, 6, failures, f"50 enumerations, {checked} top-level members projected")


def test_7_stability_golden(criterion):
    enum = unique_path_tree(fixtures.staircase_theta(8), 8)
    rep = lookahead_stability_report(enum, [(1, 0, 0), (1, 0, 1)], range(6))
    lines = ["report stability", "source staircase.enum"] + rep.lines()
    golden = (GOLDEN / "stability.report").read_text()
    failures = []
    if "\n".join(lines) + "\n" != golden:
        failures.append("matrix differs from golden file")
    if not (rep.survives[(1, 0, 0), 1] and not rep.survives[(1, 0, 0), 3]):
        failures.append("100 should survive 1 and fail 3")
    if not all(rep.survives[(1, 0, 1), s] for s in range(6)):
        failures.append("101 should survive every checkable lookahead")
    report(criterion, 7, failures, "100 survives s=1 and fails s=3, 101 survives s=0..5, golden match")


def test_8_cli_pipeline_golden(criterion, tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    steps = [
        ["gen", "comb", "--out", "comb.tree", "--report", "gen.report"],
        ["pad", "comb.tree", "--c", "1", "--out", "padded.tree", "--report", "pad.report"],
        ["extract", "ext", "padded.tree", "--c", "1", "--report", "extract.report"],
        ["verify", "extract.report", "padded.tree", "--report", "verify.report"],
    ]
    failures = []
    for argv in steps:
        code = main(argv)
        if code != 0:
            failures.append(f"{argv[0]} exited {code}")
    for name in ["gen.report", "comb.tree", "pad.report", "padded.tree", "extract.report", "verify.report"]:
        if (tmp_path / name).read_bytes() != (GOLDEN / name).read_bytes():
            failures.append(f"{name} differs from golden")
    # the staircase inputs regenerate byte-identically as well
    shutil.copy(GOLDEN / "staircase.tab", tmp_path)
    main(["gen", "unique-path", "--table", "staircase.tab", "--horizon", "8", "--out", "staircase.enum", "--report", "g2.report"])
    main(["stability", "staircase.enum", "--nodes", "100,101", "--lookaheads", "0,1,2,3,4,5", "--report", "stability.report"])
    for name in ["staircase.enum", "stability.report"]:
        if (tmp_path / name).read_bytes() != (GOLDEN / name).read_bytes():
            failures.append(f"{name} differs from golden")
    if load_tree(tmp_path / "padded.tree").horizon != 3:
        failures.append("padded horizon")
    report(criterion, 8, failures, "gen -> pad -> extract -> verify byte-identical to golden files")
