#!/usr/bin/env python3
"""Development harness: sample every corpus family, validate, compute both
zeta routes, and compare against the expected table.  Prints one line per
family; details on the first failure per family."""

import sys
import time
import traceback

sys.path.insert(0, "src")

from infranil.polynomials import QPoly
from infranil.selfmaps import (
    expected_zeta_cell,
    family_instantiate,
    load_corpus,
    resolve_params,
    sample_params,
)
from infranil.series import RatFuncProduct, rfp_equal
from infranil.zeta import compute_zeta
from infranil.fixedpoint import check_sign_relations
from infranil.exprs import eval_rational


def expected_product(cell, env):
    return RatFuncProduct.from_factors(
        (QPoly([eval_rational(c, env) for c in f["coeffs"]]), f["exp"]) for f in cell
    )


def main():
    corpus = load_corpus()
    only = sys.argv[1] if len(sys.argv) > 1 else None
    nsamples = int(sys.argv[2]) if len(sys.argv) > 2 else 3
    total = failures = 0
    for spec in corpus.families:
        if only and not spec.label.startswith(only):
            continue
        t0 = time.time()
        status = "ok"
        detail = ""
        try:
            samples = sample_params(spec, nsamples)
        except Exception as exc:
            print(f"{spec.label:24s} SAMPLE-FAIL {exc}")
            failures += 1
            continue
        for params in samples:
            total += 1
            try:
                cand = family_instantiate(spec, params)
                res = compute_zeta(cand)
                env = resolve_params(spec, params)
                cell = expected_zeta_cell(spec, env, res.index, res.p, res.n)
                if cell is None:
                    status = "NO-CELL"
                    detail = f"params={params} computed (index={res.index}, p={res.p}, n={res.n})"
                    break
                expect = expected_product(cell, env)
                if not rfp_equal(res.nielsen, expect):
                    status = "MISMATCH"
                    detail = (f"params={params} (index={res.index}, p={res.p}, n={res.n})\n"
                              f"   engine:   {res.nielsen}\n   expected: {expect}")
                    break
                rep = check_sign_relations(cand, kmax=20)
                if not rep.ok:
                    status = "SIGN-FAIL"
                    detail = f"params={params} violation={rep.first_violation}"
                    break
            except Exception as exc:
                status = "ERROR"
                detail = f"params={params} {type(exc).__name__}: {exc}"
                if "-v" in sys.argv:
                    detail += "\n" + traceback.format_exc()
                break
        dt = time.time() - t0
        print(f"{spec.label:24s} {status:9s} ({len(samples)} samples, {dt:.2f}s)")
        if status != "ok":
            failures += 1
            print(f"   {detail}")
    print(f"\n{total} instances, {failures} failing families")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
