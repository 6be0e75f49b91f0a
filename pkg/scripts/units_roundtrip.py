"""Factor random products of basic and semi-basic units and report timings."""
import argparse
import random
import statistics
import time
from dataclasses import dataclass

from hamilton import AlgebraParams, HamiltonElement, zero_divisors_of_side
from hamilton.automorphisms import factor_unit
from hamilton.units import BasicUnit, SemiBasicUnit
from hamilton.basic import BasicVector
from hamilton.poly import CenterPoly


@dataclass
class RoundTripConfig:
    field: str = "q"
    p: str = "t^2-t"
    q: str = "t^2"
    count: int = 50
    max_factors: int = 6
    seed: int = 0


def random_factor(P, side, rng):
    f = P.field
    zs = zero_divisors_of_side(P, side)
    if zs and rng.random() < 0.5:
        coeffs = [f.random(rng, 3) for _ in range(rng.randint(1, 3))]
        r = CenterPoly(f, coeffs)
        if not r.is_zero():
            return SemiBasicUnit(rng.choice(zs), r)
    for _ in range(100):
        v = BasicVector.make(P, side, f.random_nonzero(rng, 3), f.random(rng, 3))
        if v.is_unit(P):
            return BasicUnit(v)
    return None


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    for name, default in vars(RoundTripConfig()).items():
        ap.add_argument(f"--{name.replace('_', '-')}", type=type(default), default=default)
    cfg = RoundTripConfig(**vars(ap.parse_args()))
    P = AlgebraParams.parse(cfg.field, cfg.p, cfg.q)
    rng = random.Random(cfg.seed)
    times, lengths = [], []
    for _ in range(cfg.count):
        g = HamiltonElement.one(P)
        side = rng.choice("ab")
        for _ in range(rng.randint(1, cfg.max_factors)):
            fac = random_factor(P, side, rng)
            if fac is not None:
                g = g * fac.element(P)
            side = "b" if side == "a" else "a"
        start = time.perf_counter()
        d = factor_unit(g)
        times.append(time.perf_counter() - start)
        assert d.element(P) == g and d.is_reduced()
        lengths.append(len(d.factors))
    print(f"{P}: {cfg.count} units, mean reduced length {statistics.mean(lengths):.2f}, "
          f"mean time {statistics.mean(times) * 1000:.1f} ms, max {max(times) * 1000:.1f} ms")


if __name__ == "__main__":
    main()
