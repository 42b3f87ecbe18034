"""Strong-grading tables for the full flux extension and its Pauli quotient."""
import argparse

from gradex.algebra import AlgebraSpec, BaseAlgebraSpec
from gradex.bicharacter import from_flux
from gradex.galois import full_extension, galois_verdict, pauli_quotient, surjectivity_witnesses


def show(title, model, comps, witnesses):
    v = galois_verdict(model, comps)
    print(f"== {title}: {v.verdict}")
    for p in v.report.pairs:
        mark = "" if p.passed else "   <- deficient"
        print(f"  A_{p.g} A_{p.h}: span {p.span_dim} / {p.target_dim}{mark}")
    if witnesses:
        found, missing = surjectivity_witnesses(model, comps)
        print(f"  beta preimages: {found} found, {len(missing)} missing")


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--flux", type=int, default=3)
    p.add_argument("--generators", type=int, default=1)
    p.add_argument("--witnesses", action="store_true")
    args = p.parse_args()
    spec = AlgebraSpec(from_flux(args.flux), BaseAlgebraSpec(args.generators))
    show(f"full extension, N={args.flux}", *full_extension(spec), args.witnesses)
    show(f"Pauli quotient, N={args.flux}", *pauli_quotient(spec), args.witnesses)


if __name__ == "__main__":
    main()
