"""Instance enumeration and batch running for the verify/sweep commands.

A task is a ``(function, args)`` pair of module-level objects so it can be
shipped to worker processes.  Results always come back in task order, which
keeps the output byte-stable whatever the degree of parallelism.
"""
from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations
from pathlib import Path
from typing import Callable, Iterable, Iterator

from . import nonabelian, relations
from .oracle import x_lambda_oracle
from .partition import Partition, partitions_in_box, partitions_in_staircase
from .rectlemma import (
    build_nest_graph,
    c_hook,
    c_inductive,
    center_check,
    e_expansion_check,
    index_identity_holds,
    rect_decompose_check,
)
from .report import FAIL, PASS, Report
from .rook import abreu_nigro_auto_check, f_equals_h_check, hit_decompose_check

JOBS_ENV = "CQSYM_JOBS"

Task = tuple[Callable[..., Report], tuple]


def jobs_from_env(default: int = 1) -> int:
    raw = os.environ.get(JOBS_ENV, "")
    if not raw:
        return default
    try:
        jobs = int(raw)
    except ValueError:
        raise ValueError(f"{JOBS_ENV} must be a positive integer, got {raw!r}") from None
    if jobs < 1:
        raise ValueError(f"{JOBS_ENV} must be a positive integer, got {raw!r}")
    return jobs


def rect_shapes(n: int) -> Iterator[tuple[Partition, int, int]]:
    """``(lam, ell, s)`` with ``ell <= min(s, n-s)`` and ``lam`` inside ``ell x (n-s)``."""
    for s in range(1, n):
        for ell in range(1, min(s, n - s) + 1):
            for lam in partitions_in_box(ell, n - s):
                yield lam, ell, s


def abelian_shapes(n: int) -> Iterator[tuple[Partition, int]]:
    for ell in range(1, n // 2 + 1):
        for lam in partitions_in_box(ell, n - ell):
            yield lam, ell


def c_lemma_check(ell: int, I: tuple[int, ...]) -> Report:
    G = build_nest_graph(ell, I)
    params = {"ell": ell, "I": list(I)}
    a, b = c_inductive(G), c_hook(G)
    if a != b:
        return Report("c-lemma", params, FAIL, a, b)
    if not index_identity_holds(G):
        return Report("c-lemma", params, FAIL, extra={"reason": "index identity"})
    return Report("c-lemma", params, PASS)


def e_positivity_check(lam: Partition, n: int) -> Report:
    """Nonnegative and unimodal e-coefficients plus the common palindromic center."""
    params = {"lambda": list(lam), "n": n}
    X = x_lambda_oracle(lam, n)
    for mu, c in X.items():
        if not c.is_nonnegative():
            return Report("epositivity", params, FAIL, c, None, mu, {"violation": "negative coefficient"})
        if not c.is_unimodal():
            return Report("epositivity", params, FAIL, c, None, mu, {"violation": "not unimodal"})
    pal = relations.palindromicity_check(lam, n)
    if not pal.ok:
        pal.kind = "epositivity"
        pal.extra["violation"] = "palindromic center"
        return pal
    return Report("epositivity", params, PASS)


def _verify_rect(n):
    return [(rect_decompose_check, (lam, ell, n, s)) for lam, ell, s in rect_shapes(n)]


def _verify_centers(n):
    return [(center_check, (lam, ell, n, s)) for lam, ell, s in rect_shapes(n)]


def _verify_fqhit(n):
    out = []
    for lam, ell, s in rect_shapes(n):
        out.append((f_equals_h_check, (lam, ell, n, s)))
        out.append((hit_decompose_check, (lam, ell, n, s)))
    return out


def _verify_theorem_e(n):
    return [(e_expansion_check, (lam, ell, n)) for lam, ell in abelian_shapes(n)]


def _verify_abreu_nigro(n):
    return [(abreu_nigro_auto_check, (lam, ell, n)) for lam, ell in abelian_shapes(n)]


def _verify_relations(n):
    return [(relations.check, (inst,)) for inst in relations.all_instances(n)]


def _verify_palindromic(n):
    return [(relations.palindromicity_check, (lam, n)) for lam in partitions_in_staircase(n)]


def _verify_c_lemma(ell_max):
    return [
        (c_lemma_check, (ell, I))
        for ell in range(1, ell_max + 1)
        for r in range(ell + 1)
        for I in combinations(range(1, ell + 1), r)
    ]


VERIFY: dict[str, Callable[[int], list[Task]]] = {
    "rect": _verify_rect,
    "theorem-e": _verify_theorem_e,
    "corollary-fqhit": _verify_fqhit,
    "abreu-nigro": _verify_abreu_nigro,
    "relations": _verify_relations,
    "palindromic": _verify_palindromic,
    "centers": _verify_centers,
    "c-lemma": _verify_c_lemma,
}


def _sweep_epositivity(n):
    return [(e_positivity_check, (lam, n)) for lam in partitions_in_staircase(n)]


def _sweep_conjecture(n):
    return [(nonabelian.conjecture_e_n22_check, (f,)) for f in nonabelian.instances("conjecture-e-n22", n)]


SWEEP: dict[str, Callable[[int], list[Task]]] = {
    "epositivity": _sweep_epositivity,
    "conjecture55": _sweep_conjecture,
}


def _call(task: Task) -> Report:
    fn, args = task
    return fn(*args)


def run_tasks(tasks: Iterable[Task], jobs: int = 1) -> Iterator[Report]:
    tasks = list(tasks)
    if jobs <= 1 or len(tasks) < 2:
        for t in tasks:
            yield _call(t)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        yield from pool.map(_call, tasks, chunksize=max(1, len(tasks) // (4 * jobs)))


def record_key(rep_json: dict) -> str:
    return json.dumps([rep_json["kind"], rep_json["params"]], sort_keys=True)


def load_checkpoint(path: Path) -> set[str]:
    """Keys of records already written; a torn last line (interrupted write) is ignored."""
    done = set()
    if not path.exists():
        return done
    with path.open() as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            try:
                done.add(record_key(json.loads(line)))
            except (json.JSONDecodeError, KeyError):
                continue
    return done


def run_sweep(kind: str, ns: Iterable[int], out: Path | None, jobs: int = 1) -> Iterator[Report]:
    """Run a sweep, appending each new record to ``out`` as one JSON line.

    Records already present in ``out`` are neither recomputed nor yielded,
    so an interrupted sweep resumes where it stopped.
    """
    done = load_checkpoint(out) if out else set()
    todo = [t for n in ns for t in SWEEP[kind](n) if record_key(_params_of(kind, t)) not in done]
    fh = out.open("a") if out else None
    if fh and out.stat().st_size and not out.read_bytes().endswith(b"\n"):
        fh.write("\n")  # close off a torn last line so the next record starts clean
    try:
        for rep in run_tasks(todo, jobs):
            if fh:
                fh.write(json.dumps(rep.to_json(), sort_keys=True) + "\n")
                fh.flush()
            yield rep
    finally:
        if fh:
            fh.close()


def _params_of(kind: str, task: Task) -> dict:
    fn, args = task
    if kind == "epositivity":
        lam, n = args
        return {"kind": "epositivity", "params": {"lambda": list(lam), "n": n}}
    (f,) = args
    return {"kind": "conjecture", "params": {"display": "conjecture-e-n22", **f.params()}}
