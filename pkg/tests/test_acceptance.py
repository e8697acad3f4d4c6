"""Acceptance criteria 1-8, each at its stated tolerance.

Every criterion records one PASS/FAIL line, printed in the terminal summary.
The corpora are built once per session and shared between criteria.
"""

import contextlib
import io
import json
import random
import time
from itertools import chain

import numpy as np
import pytest

from bootperc import _kernels as K
from bootperc.cli import run
from bootperc.constructors import extend, find_small_certificate
from bootperc.corpus import all_connected_labeled, cached_nonisomorphic, random_connected_bipartite, random_graph
from bootperc.deciders import decide_bip3, decide_bip4, decide_gen3
from bootperc.engine import percolate, reduce_time
from bootperc.families import degree_one_set, gamma_family
from bootperc.graph import Graph, delay_tree, far_set, is_bipartite
from bootperc.oracle import brute_force, brute_force_t, is_co_convex, percolation_table, vertices_at_time
from bootperc.reduction import CnfFormula, verify_reduction

TRIALS = 1000


def witness_json(result):
    ok, w = result
    return json.dumps({"ok": ok, "witness": w.to_json() if w else None}, sort_keys=True)


# ---------------------------------------------------------------- corpora

@pytest.fixture(scope="session")
def labeled():
    """Criterion 1 corpus: every connected labeled graph with n <= 6."""
    start = time.perf_counter()
    graphs = list(chain.from_iterable(all_connected_labeled(n) for n in range(1, 7)))
    rows = []
    for g in graphs:
        row = {"g": g, "t": brute_force_t(g), "gen3": decide_gen3(g), "bipartite": is_bipartite(g) is not None}
        if row["bipartite"]:
            row["bip3"] = decide_bip3(g)
        rows.append(row)
    return rows, time.perf_counter() - start


@pytest.fixture(scope="session")
def random_bipartite():
    """Criterion 2 corpus: 240 seeded random connected bipartite graphs plus both delay trees."""
    rng = random.Random(2024)
    graphs = [random_connected_bipartite(rng.randint(6, 12), rng, p=rng.choice([0.08, 0.12, 0.18, 0.25]))
              for _ in range(240)]
    graphs += [delay_tree(3), delay_tree(4)]
    start = time.perf_counter()
    rows = [{"g": g, "t": brute_force_t(g), "bip4": decide_bip4(g, threads=4)} for g in graphs]
    return rows, time.perf_counter() - start


# ---------------------------------------------------------------- criteria

def test_criterion_1_exhaustive_k3(labeled, verdict):
    rows, seconds = labeled
    bip = [r for r in rows if r["bipartite"]]
    gen_bad = sum(r["gen3"][0] != (r["t"] >= 3) for r in rows)
    bip_bad = sum(r["bip3"][0] != (r["t"] >= 3) for r in bip)
    ok = gen_bad == bip_bad == 0 and seconds < 600
    verdict(1, ok, f"{len(rows)} graphs ({len(bip)} bipartite): gen3 mismatches {gen_bad}, "
                   f"bip3 mismatches {bip_bad}, {seconds:.0f}s")
    assert len(rows) == 27_476
    assert ok


def test_criterion_2_random_k4(random_bipartite, verdict):
    rows, seconds = random_bipartite
    bad = sum(r["bip4"][0] != (r["t"] >= 4) for r in rows)
    yes = sum(r["bip4"][0] for r in rows)
    ok = bad == 0 and seconds < 1800 and len(rows) >= 202
    verdict(2, ok, f"{len(rows)} graphs ({yes} with t >= 4): mismatches {bad}, {seconds:.0f}s")
    assert ok


CRITERION_3 = CnfFormula(2, ((1, 2, 2), (-1, 2, 2)))


@pytest.mark.xfail(strict=True, reason="both clauses have two true slots; the drawn labels assume one")
def test_criterion_3_gadget_schedule(verdict):
    reports = {k: verify_reduction(CRITERION_3, {2: True}, k) for k in (5, 6, 7)}
    labels_ok = reports[5].ok
    times_ok = all(r.t == k and r.schedule_ok for k, r in reports.items())
    wrong = sorted({c.role.split()[0] for c in reports[5].failures()})
    verdict(3, labels_ok and times_ok,
            f"schedule (w, y, z, t=k for k=5,6,7) {'ok' if times_ok else 'FAILED'}; "
            f"drawn labels {'ok' if labels_ok else 'wrong for ' + ','.join(wrong)}")
    assert labels_ok and times_ok


def test_criterion_3_schedule_part():
    """The part of criterion 3 that does hold: y at 4, z at 5, t = k."""
    for k in (5, 6, 7):
        report = verify_reduction(CRITERION_3, {2: True}, k)
        assert report.t == k and report.schedule_ok


def _random_instance(rng):
    g = random_graph(rng.randint(1, 14), rng, p=rng.choice([0.15, 0.25, 0.35, 0.5]))
    return g, {v for v in range(g.n) if rng.random() < rng.random()}


def monotonicity_trials(rng):
    for _ in range(TRIALS):
        g, seed = _random_instance(rng)
        bigger = seed | {v for v in range(g.n) if rng.random() < 0.3}
        a, b = percolate(g, seed).times, percolate(g, bigger).times
        yield all(y <= x for x, y in zip(a, b))


def far_set_trials(rng):
    done = 0
    while done < TRIALS:
        g, seed = _random_instance(rng)
        w, k = rng.randrange(g.n), rng.randint(1, 5)
        if percolate(g, seed).times[w] < k:
            continue
        done += 1
        far = far_set(g, w, k)
        single = all(percolate(g, seed | {z}).times[w] >= k for z in far)
        yield single and percolate(g, seed | far).times[w] >= k


def reduce_trials(rng):
    done = 0
    while done < TRIALS:
        g, seed = _random_instance(rng)
        tr = percolate(g, seed)
        if not tr.percolates or tr.t < 1:
            continue
        done += 1
        yield percolate(g, reduce_time(g, seed)).t == tr.t - 1


def co_convex_trials(rng):
    """Every labeled graph n <= 6: leaves, degree-2 edges and sampled co-convex sets
    meet every percolating set. One trial per (graph, co-convex set)."""
    for n in range(1, 7):
        pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
        for bits in range(1 << len(pairs)):
            g = Graph(n, [p for i, p in enumerate(pairs) if bits >> i & 1])
            hulls = np.flatnonzero(percolation_table(g) >= 0)
            pieces = [{v} for v in degree_one_set(g)]
            pieces += [{a, b} for a, b in g.edges() if g.degree(a) == g.degree(b) == 2]
            for _ in range(2):
                sample = {v for v in range(n) if rng.random() < 0.5}
                if sample and is_co_convex(g, sample):
                    pieces.append(sample)
            for piece in pieces:
                mask = K.mask_of(piece)
                yield bool(np.all(hulls & mask))


def test_criterion_4_lemma_properties(verdict):
    rng = random.Random(4)
    results = {}
    for name, trials in (("monotonicity", monotonicity_trials), ("far set", far_set_trials),
                         ("reduce time", reduce_trials), ("co-convex", co_convex_trials)):
        outcomes = list(trials(rng))
        results[name] = (len(outcomes), outcomes.count(False))
    ok = all(n >= TRIALS and bad == 0 for n, bad in results.values())
    verdict(4, ok, "; ".join(f"{name} {n} trials {bad} failures" for name, (n, bad) in results.items()))
    assert ok


def test_criterion_5_certificates_exist(corpus_dir, verdict):
    general = bipartite = failures = 0
    classes = 0
    for n in range(1, 10):
        for g in cached_nonisomorphic(n, corpus_dir):
            classes += 1
            for u in vertices_at_time(g, 3):
                general += 1
                failures += find_small_certificate(g, u, 3, 4) is None
    for n in range(1, 12):
        for g in cached_nonisomorphic(n, corpus_dir, bipartite=True):
            classes += 1
            members = [m.members for u in range(g.n) for m in gamma_family(g, u)]
            for x in vertices_at_time(g, 4, members):
                bipartite += 1
                failures += find_small_certificate(g, x, 4, 8) is None
    ok = failures == 0
    verdict(5, ok, f"{classes} graph classes; {general} time-3 vertices (cap 4), "
                   f"{bipartite} time-4 vertices (cap 8); {failures} without a certificate")
    assert classes == 273_193 + 30_614
    assert ok


def test_criterion_6_constructors(labeled, random_bipartite, verdict):
    checked = failures = 0
    cases = []
    for r in labeled[0]:
        cases.append((r["g"], r["gen3"], 3, r["t"]))
        if r["bipartite"]:
            cases.append((r["g"], r["bip3"], 3, r["t"]))
    cases += [(r["g"], r["bip4"], 4, r["t"]) for r in random_bipartite[0]]
    for g, (ok, w), k, t in cases:
        if not ok:
            continue
        checked += 1
        hull = extend(g, w)
        tr = percolate(g, hull)
        failures += not (w.base_seed <= hull and tr.percolates and tr.t >= k and t >= k)
    ok = failures == 0 and checked > 0
    verdict(6, ok, f"{checked} witnesses extended; {failures} failures")
    assert ok


def test_criterion_7_pruning_is_exact(labeled, random_bipartite, corpus_dir, verdict):
    gen_bad = sum(decide_gen3(r["g"], prune=False)[0] != r["gen3"][0] for r in labeled[0])
    small = [g for n in range(1, 10) for g in cached_nonisomorphic(n, corpus_dir, bipartite=True)]
    small += [r["g"] for r in random_bipartite[0] if r["g"].n <= 9]
    bip_bad = sum(decide_bip4(g)[0] != decide_bip4(g, prune=False)[0] for g in small)
    ok = gen_bad == bip_bad == 0
    verdict(7, ok, f"gen3 on {len(labeled[0])} graphs: {gen_bad} disagreements; "
                   f"bip4 on {len(small)} graphs: {bip_bad} disagreements")
    assert ok


def _cli_bytes(argv):
    out = io.StringIO()
    with contextlib.redirect_stdout(out):
        code = run(argv)
    return code, out.getvalue()


def test_criterion_8_determinism(labeled, random_bipartite, tmp_path, verdict):
    differ = 0
    for r in labeled[0]:
        g = r["g"]
        first = witness_json(r["gen3"])
        differ += first != witness_json(decide_gen3(g)) or first != witness_json(decide_gen3(g, threads=4))
        if r["bipartite"]:
            first = witness_json(r["bip3"])
            differ += first != witness_json(decide_bip3(g, threads=4))
    for r in random_bipartite[0]:
        g = r["g"]
        first = witness_json(r["bip4"])
        differ += first != witness_json(decide_bip4(g)) or first != witness_json(decide_bip4(g, threads=1))
        differ += brute_force(g) != brute_force(g, threads=4)
    commands = 0
    for i, r in enumerate(random_bipartite[0][::20] + random_bipartite[0][-2:]):
        path = tmp_path / f"g{i}.txt"
        path.write_text(r["g"].to_text())
        for argv in (["decide", "--k", "3", "--mode", "general"],
                     ["decide", "--k", "3", "--mode", "bipartite"],
                     ["decide", "--k", "4", "--mode", "bipartite"], ["oracle"]):
            outputs = {_cli_bytes(argv + ["--graph", str(path), "--json", "--threads", th])
                       for th in ("1", "4", "1", "4")}
            commands += 1
            differ += len(outputs) != 1
    ok = differ == 0
    verdict(8, ok, f"{len(labeled[0]) + len(random_bipartite[0])} graphs and {commands} CLI runs "
                   f"repeated with 1 and 4 threads; {differ} differences")
    assert ok
