"""Compare the normal form against exhaustive reduction orders on random commutation factors."""
import argparse
import itertools
import random
import sys
import time
from dataclasses import dataclass
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "tests"))

from oracles import ZERO, reduction_outcomes  # noqa: E402

from gradex.algebra import AlgebraSpec, BaseAlgebraSpec, Letter, normal_form  # noqa: E402
from gradex.bicharacter import CommutationFactor, eval_factor  # noqa: E402
from gradex.kernel import QSpec, Scalar  # noqa: E402


@dataclass
class StressConfig:
    trials: int = 20
    rank: int = 3
    order: int = 4
    max_len: int = 4
    nilpotency: int = 2
    seed: int = 0


def random_spec(rng, cfg):
    n = cfg.rank
    sigma = [[0] * n for _ in range(n)]
    omega = [[0] * n for _ in range(n)]
    for i in range(n):
        sigma[i][i] = rng.randint(0, 1)
        for j in range(i + 1, n):
            sigma[i][j] = sigma[j][i] = rng.randint(0, 1)
            w = rng.randint(-cfg.order, cfg.order)
            omega[i][j], omega[j][i] = w, -w
    cf = CommutationFactor(sigma, omega, QSpec.root_of_unity(cfg.order), 2 * cfg.order)
    return AlgebraSpec(cf, BaseAlgebraSpec(1, cfg.nilpotency))


def check(spec, max_len):
    cf = spec.cf
    fac = lambda i, j: eval_factor(cf, cf.generator(i), cf.generator(j))
    one = Scalar.one(spec.qspec)
    letters = [Letter(i) for i in range(1, cf.rank + 1)]
    bad = 0
    for k in range(max_len + 1):
        for w in itertools.product(letters, repeat=k):
            outs = reduction_outcomes(w, fac, lambda i: fac(i, i), spec.base.nilpotency, one)
            e = normal_form(spec, w)
            bad += outs != (frozenset({ZERO}) if e.is_zero() else frozenset(e))
    return bad


def main():
    p = argparse.ArgumentParser(description=__doc__)
    cfg = StressConfig()
    for name, default in vars(cfg).items():
        p.add_argument(f"--{name.replace('_', '-')}", type=int, default=default)
    cfg = StressConfig(**vars(p.parse_args()))
    rng = random.Random(cfg.seed)
    start, bad = time.perf_counter(), 0
    for _ in range(cfg.trials):
        bad += check(random_spec(rng, cfg), cfg.max_len)
    print(f"{cfg.trials} factors, words up to length {cfg.max_len}: {bad} mismatches "
          f"({time.perf_counter() - start:.2f}s)")
    sys.exit(1 if bad else 0)


if __name__ == "__main__":
    main()
