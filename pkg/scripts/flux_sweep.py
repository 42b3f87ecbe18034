"""Classify flux presets over a range of N and base algebras, printing one row each."""
import argparse
import json
from dataclasses import asdict, dataclass

from gradex.algebra import AlgebraSpec, BaseAlgebraSpec
from gradex.bicharacter import from_flux
from gradex.realization import consistency_check


@dataclass
class SweepConfig:
    n_min: int = 1
    n_max: int = 6
    generators: int = 1
    nilpotency: int = 2


def sweep(cfg: SweepConfig):
    base = BaseAlgebraSpec(cfg.generators, cfg.nilpotency)
    for n in range(cfg.n_min, cfg.n_max + 1):
        rep = consistency_check(AlgebraSpec(from_flux(n), base))
        label = "composite_fermion" if rep.verdict == "reality" else "composite_boson"
        yield {"N": n, "verdict": rep.verdict, "label": label,
               "pauli_pairs": len(rep.pauli_pairs), "lost_words": len(rep.lost_words)}


def main():
    p = argparse.ArgumentParser(description=__doc__)
    for field, default in asdict(SweepConfig()).items():
        p.add_argument(f"--{field.replace('_', '-')}", type=int, default=default)
    p.add_argument("--json", action="store_true")
    args = vars(p.parse_args())
    as_json = args.pop("json")
    cfg = SweepConfig(**args)
    rows = list(sweep(cfg))
    if as_json:
        print(json.dumps({"config": asdict(cfg), "rows": rows}, indent=2))
        return
    print(f"{'N':>3}  {'verdict':<11} {'label':<18} pairs  lost")
    for r in rows:
        print(f"{r['N']:>3}  {r['verdict']:<11} {r['label']:<18} {r['pauli_pairs']:>5} {r['lost_words']:>5}")


if __name__ == "__main__":
    main()
