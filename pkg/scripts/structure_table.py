"""Radical dimensions and maximal-ideal counts above each irreducible factor of Lambda."""
import argparse
import itertools
from dataclasses import dataclass, field

from hamilton import AlgebraParams, CenterPoly
from hamilton.poly import poly_is_irreducible, poly_roots_quadratic, split_type
from hamilton.specialization import maximal_ideal_count_criterion, maximal_ideals_above, radical_report, specialize

DEFAULT_GRID = {
    "q": ["t^2+1", "t^2-t", "t^2"],
    "fp:2": ["t^2+t+1", "t^2+t", "t^2+1"],
    "fp:3": ["t^2+1", "t^2-t", "t^2"],
}


@dataclass
class TableConfig:
    grid: dict = field(default_factory=lambda: dict(DEFAULT_GRID))


def factors(lam: CenterPoly):
    if poly_is_irreducible(lam):
        return [lam]
    x = CenterPoly.variable(lam.field)
    return list(dict.fromkeys(x - CenterPoly.constant(lam.field, r.value) for r in poly_roots_quadratic(lam)))


def rows(cfg: TableConfig):
    for fname, polys in cfg.grid.items():
        for p, q in itertools.product(polys, repeat=2):
            P = AlgebraParams.parse(fname, p, q)
            for r in factors(P.fundamental_polynomial):
                rep = radical_report(specialize(P, r))
                mx = maximal_ideals_above(P, r)
                yield (fname, p, split_type(P.p), q, split_type(P.q), r.render(), rep.dim_R, rep.dim_frakR,
                       mx.count, maximal_ideal_count_criterion(P))


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--field", action="append", help="restrict to these fields (q, fp:2, fp:3)")
    args = ap.parse_args()
    cfg = TableConfig()
    if args.field:
        cfg.grid = {k: v for k, v in cfg.grid.items() if k in args.field}
    head = ("field", "p", "type", "q", "type", "r", "dimR", "dimN", "ideals", "expected")
    print("  ".join(f"{h:<12}" for h in head))
    for row in rows(cfg):
        print("  ".join(f"{str(c):<12}" for c in row))


if __name__ == "__main__":
    main()
