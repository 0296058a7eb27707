"""Acceptance suite: twelve end-to-end criteria, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -s`` or ``python tests/test_acceptance.py``.
Every instance is drawn from a fixed seed, so the lines are reproducible.
"""
import itertools
import os
import sys
import time

import numpy as np
import pytest

sys.path.insert(0, os.path.dirname(__file__))

from ddmconvex import parse_function_spec  # noqa: E402
from ddmconvex.classify import (check_ddm_characterization, check_parallelogram, classify,  # noqa: E402
                                is_ddm_convex, is_ddm_set)
from ddmconvex.continuous import (ContinuousFunction, RealBox, verify_continuous_proximity,  # noqa: E402
                                  verify_r_ddm)
from ddmconvex.functions import (Box, QuadraticSpec, UnivariateConvex, direct_sum, indicator,  # noqa: E402
                                 infconv, project, quadratic_function, quadratic_is_diag_dominant,
                                 quadratic_to_two_separable, restrict, separable_function, transform)
from ddmconvex.fuzz import (random_dd_quadratic_spec, random_separable_table_spec,  # noqa: E402
                            random_symmetric_q, random_two_separable_spec)
from ddmconvex.gallery import DDM_NOT_DMC, S_PAIR, run_gallery  # noqa: E402
from ddmconvex.lattice import chebyshev_distance, level_set_directions, midpoint_decompose  # noqa: E402
from ddmconvex.minimize import (brute_force_argmin, scaling_minimize, steepest_descent,  # noqa: E402
                                verify_proximity)

import oracles  # noqa: E402
from corpus import ddm_corpus, table_corpus  # noqa: E402


def _timed(limit, fn):
    t0 = time.perf_counter()
    ok, msg = fn()
    dt = time.perf_counter() - t0
    if limit is not None and dt >= limit:
        return False, f"{msg}; took {dt:.2f} s, limit {limit} s"
    return ok, f"{msg}; {dt:.2f} s"


# --- 1 ---------------------------------------------------------------------

def criterion_1():
    def body():
        ok, rep = run_gallery()
        bad = [r["fixture"] for r in rep["fixtures"] if not r["pass"]]
        half = next(r for r in rep["fixtures"] if r["fixture"] == "half-simplex")["observed"]
        msg = (f"{rep['passed']}/{rep['total']} fixtures"
               + (f", failing: {bad}" if bad else "")
               + f"; half-simplex pair (2,0,0),(0,1,1) violates: {half['stated_pair_violates']}"
               + f", first lexicographic witness {half['first_witness']}")
        return ok, msg
    return _timed(1.0, body)


# --- 2, 3 ------------------------------------------------------------------

def criterion_2():
    def body():
        corpus = table_corpus()
        disagree = 0
        for f in corpus:
            res = {check_ddm_characterization(f, variant=k).holds for k in range(1, 6)}
            disagree += len(res) != 1
        return disagree == 0 and len(corpus) >= 500, f"{len(corpus)} tables, {disagree} disagreements"
    return _timed(30.0, body)


def criterion_3():
    def body():
        corpus = table_corpus()
        broken = []
        for k, f in enumerate(corpus):
            v = classify(f).implication_violations()
            if v:
                broken.append((k, v))
        return not broken, f"{len(corpus)} tables, {len(broken)} with broken implications {broken[:3]}"
    return _timed(None, body)


# --- 4, 5 ------------------------------------------------------------------

def criterion_4():
    def body():
        rng = np.random.default_rng(404)
        mismatches, count = [], 0
        for n in (2, 3):
            for _ in range(100):
                q = QuadraticSpec(random_symmetric_q(rng, n))
                d = is_ddm_convex(quadratic_function(q, Box.cube(-3, 3, n))).holds
                dd = quadratic_is_diag_dominant(q).holds and bool((np.diag(q.Q) >= 0).all())
                count += 1
                if d != dd:
                    mismatches.append(q.Q.tolist())
        return not mismatches and count >= 200, f"{count} matrices, {len(mismatches)} mismatches"
    return _timed(60.0, body)


def criterion_5():
    def body():
        rng = np.random.default_rng(505)
        fails = 0
        for k in range(200):
            n = 2 + k % 2
            f = parse_function_spec(random_two_separable_spec(rng, n=n, side=3 if n == 2 else 2))
            fails += not is_ddm_convex(f).holds
        worst = 0.0
        for k in range(200):
            n = 1 + k % 3
            spec = random_dd_quadratic_spec(rng, n=n)
            q = QuadraticSpec(spec["Q"], spec["c"])
            X = Box.cube(-3, 3, n).points_array()
            worst = max(worst, float(np.abs(q.batch(X) - quadratic_to_two_separable(q).batch(X)).max()))
        ok = fails == 0 and worst <= 1e-9
        return ok, f"200 two-separable instances, {fails} not DDM; 200 quadratic rewrites, max gap {worst:.2e}"
    return _timed(None, body)


# --- 6 ---------------------------------------------------------------------

def _closures(f, rng):
    n = f.dim
    out = [("scale2", transform(f, "scale", 2)), ("scale3", transform(f, "scale", 3)),
           ("sign_flip", transform(f, "sign_flip", [int(s) for s in rng.choice([-1, 1], size=n)])),
           ("permute", transform(f, "permute", [int(s) for s in rng.permutation(n)])),
           ("translate", transform(f, "translate", [int(s) for s in rng.integers(-2, 3, size=n)]))]
    partner = separable_function([UnivariateConvex.table(0, [1, 0, 2])])
    out.append(("direct_sum", direct_sum(f, partner)))
    if n >= 2:
        i = int(rng.integers(n))
        dom = f.domain_points()
        fixed = dom[int(rng.integers(len(dom)))][i]
        out.append(("restrict", restrict(f, {i: fixed})))
        keep = sorted(int(k) for k in rng.choice(n, size=n - 1, replace=False))
        out.append(("project", project(f, keep)))
    sep = parse_function_spec(random_separable_table_spec(rng, n))
    out.append(("infconv", infconv(f, sep)))
    return out


def criterion_6():
    def body():
        rng = np.random.default_rng(606)
        corpus = ddm_corpus()
        checked, failures = 0, []
        for k, f in enumerate(corpus):
            for name, g in _closures(f, rng):
                checked += 1
                if not is_ddm_convex(g).holds:
                    failures.append((k, name))
        return not failures, f"{len(corpus)} instances, {checked} closures, {len(failures)} failures {failures[:3]}"
    return _timed(None, body)


# --- 7 ---------------------------------------------------------------------

def criterion_7():
    def body():
        rng = np.random.default_rng(707)
        corpus = ddm_corpus()
        bad = []
        for k, f in enumerate(corpus):
            dom = f.domain_points()
            x0 = dom[int(rng.integers(len(dom)))]
            tr = steepest_descent(f, x0)
            L = oracles.descent_L(oracles.table_of(f, f.universe), x0)
            steps_ok = all(chebyshev_distance(a, b) <= 1 for a, b in zip(tr.path, tr.path[1:]))
            if tr.iterations != L + 1 or not steps_ok:
                bad.append((k, tr.iterations, L))
        return not bad and len(corpus) >= 100, f"{len(corpus)} instances, {len(bad)} off the L+1 count {bad[:3]}"
    return _timed(None, body)


# --- 8 ---------------------------------------------------------------------

def _scaling_instances(rng, K, n):
    box = Box.cube(0, K, n)
    yield separable_function([UnivariateConvex.square(int(rng.integers(0, K + 1)), 1) for _ in range(n)], box)
    yield separable_function([UnivariateConvex.abs(int(rng.integers(0, K + 1)), int(rng.integers(1, 4)))
                              for _ in range(n)], box)
    if n == 2:
        spec = random_dd_quadratic_spec(rng, n=2, side=1)
        q = QuadraticSpec(spec["Q"], -2 * np.asarray(spec["Q"]) @ rng.uniform(0, K, size=2))
        yield quadratic_function(q, box)
        spec = random_two_separable_spec(rng, n=2)
        spec["box"] = box.to_dict()
        yield parse_function_spec(spec)


def criterion_8():
    def body():
        rng = np.random.default_rng(808)
        runs, bad = 0, []
        for K in (7, 15, 31):
            for n in (1, 2):
                for f in _scaling_instances(rng, K, n):
                    if not is_ddm_convex(f).holds:
                        bad.append(("not DDM", K, n))
                        continue
                    for _ in range(3):
                        x0 = tuple(int(v) for v in rng.integers(0, K + 1, size=n))
                        tr = scaling_minimize(f, x0)
                        runs += 1
                        _, mins = brute_force_argmin(f)
                        phases = K.bit_length() + 1  # ceil(log2(K + 1)) + 1 for K = 2^j - 1
                        in_ball = all(max(abs(c) for c in y) <= n for ys in tr.phase_steps for y in ys)
                        budget = (n * 2 * n + 1) * tr.phases
                        if (tr.minimizer not in mins or tr.phases != phases or not in_ball
                                or tr.total_calls > budget):
                            bad.append((K, n, x0, tr.minimizer, tr.phases, tr.total_calls))
        return not bad, f"{runs} runs over K in {{7,15,31}}, n in {{1,2}}; {len(bad)} failures {bad[:3]}"
    return _timed(None, body)


# --- 9 ---------------------------------------------------------------------

def criterion_9():
    def body():
        rng = np.random.default_rng(909)
        instances = list(ddm_corpus())
        for _ in range(20):
            spec = random_dd_quadratic_spec(rng, n=2, side=6)
            instances.append(parse_function_spec(spec))
        for _ in range(20):
            instances.append(parse_function_spec(random_two_separable_spec(rng, n=2, side=6)))
        checked, bad = 0, []
        for k, f in enumerate(instances):
            if not is_ddm_convex(f).holds:
                continue
            for alpha in (2, 3):
                checked += 1
                v = verify_proximity(f, alpha)
                if not v.holds:
                    bad.append((k, alpha, v.witness.x))
        return not bad, f"{checked} (instance, alpha) checks, {len(bad)} violations {bad[:3]}"
    return _timed(None, body)


# --- 10 --------------------------------------------------------------------

def criterion_10():
    def body():
        corpus = ddm_corpus()
        bad = [k for k, f in enumerate(corpus) if not check_parallelogram(f, max_m=4).holds]
        sets = [S_PAIR, DDM_NOT_DMC, list(itertools.product((0, 1), repeat=3))]
        sets += [[tuple(t * a for t, a in zip(tau, p)) for p in DDM_NOT_DMC]
                 for tau in itertools.product((1, -1), repeat=3)]
        sets += [list(S) for r in range(1, 5) for S in itertools.combinations(itertools.product((0, 1), repeat=2), r)]
        set_bad = 0
        for S in sets:
            assert is_ddm_set(S).holds
            set_bad += not check_parallelogram(indicator(S), max_m=4).holds
        ok = not bad and not set_bad and len(corpus) >= 100
        return ok, (f"{len(corpus)} functions, {len(bad)} failures; "
                    f"{len(sets)} DDM sets, {set_bad} not closed under the parallelogram moves")
    return _timed(None, body)


# --- 11 --------------------------------------------------------------------

def criterion_11():
    def body():
        rng = np.random.default_rng(1111)
        prox_bad, inconclusive, rddm_bad, count = [], 0, [], 0
        for k in range(30):
            spec = random_dd_quadratic_spec(rng, n=2)
            Q = np.asarray(spec["Q"])
            F = ContinuousFunction.quadratic(Q, -2 * Q @ rng.uniform(-2, 2, size=2))
            v = verify_continuous_proximity(F, Box.cube(-5, 5, 2))
            count += 1
            inconclusive += v.inconclusive
            if not v.holds:
                prox_bad.append(("quadratic", k))
            if not verify_r_ddm(F, 3, Box.cube(-2, 2, 2)).holds:
                rddm_bad.append(("quadratic", k))
        for k in range(30):
            F = parse_function_spec(random_two_separable_spec(rng, n=2, side=3, continuous=True))
            F.universe = RealBox((-3.0, -3.0), (3.0, 3.0))
            v = verify_continuous_proximity(F, Box.cube(-3, 3, 2))
            count += 1
            inconclusive += v.inconclusive
            if not v.holds:
                prox_bad.append(("2sep", k))
            if not verify_r_ddm(F, 3, Box.cube(-3, 3, 2)).holds:
                rddm_bad.append(("2sep", k))
        ok = count >= 50 and not prox_bad and not rddm_bad and inconclusive == 0
        return ok, (f"{count} instances; proximity failures {len(prox_bad)}, inconclusive {inconclusive}; "
                    f"fractional restrictions (alpha <= 3) not DDM: {len(rddm_bad)}")
    return _timed(None, body)


# --- 12 --------------------------------------------------------------------

def _monotone_family(rng):
    """Nested directions d^1 >= ... >= d^m (in the level-set sense) from per-coordinate counts."""
    while True:
        n = int(rng.integers(1, 5))
        s = rng.choice([-1, 1], size=n)
        l = rng.integers(0, 7, size=n)
        m = int(l.max())
        if m >= 1:
            break
    return [tuple(int(s[i]) if k <= l[i] else 0 for i in range(n)) for k in range(1, m + 1)]


def criterion_12():
    def body():
        rng = np.random.default_rng(1212)
        bad = 0
        for _ in range(1000):
            n = int(rng.integers(1, 5))
            x = tuple(int(v) for v in rng.integers(-6, 7, size=n))
            D = midpoint_decompose(x)
            total = tuple(sum(d[i] for d in D) for i in range(n))
            bad += total != x or D != level_set_directions((0,) * n, x)
        fam_bad = 0
        for _ in range(500):
            fam = _monotone_family(rng)
            n = len(fam[0])
            x = tuple(sum(d[i] for d in fam) for i in range(n))
            fam_bad += list(level_set_directions((0,) * n, x)) != sorted(fam) or \
                oracles.level_dirs_ref((0,) * n, x) != fam
        return bad == 0 and fam_bad == 0, (f"1000 vectors, {bad} failed round-trips; "
                                           f"500 monotone families, {fam_bad} failed")
    return _timed(None, body)


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
            criterion_7, criterion_8, criterion_9, criterion_10, criterion_11, criterion_12]


@pytest.mark.parametrize("k", range(1, 13))
def test_criterion(k, capsys):
    ok, msg = CRITERIA[k - 1]()
    with capsys.disabled():
        print(f"\ncriterion {k}: {'PASS' if ok else 'FAIL'}  {msg}")
    assert ok, msg


if __name__ == "__main__":
    results = []
    for k, fn in enumerate(CRITERIA, 1):
        ok, msg = fn()
        results.append(ok)
        print(f"criterion {k}: {'PASS' if ok else 'FAIL'}  {msg}", flush=True)
    sys.exit(0 if all(results) else 1)
