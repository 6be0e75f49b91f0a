"""Two idempotent 2x2 matrices generating all 2x2 matrices, per base field."""
import argparse

from hamilton import Field
from hamilton.specialization import laffey_idempotents


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("fields", nargs="*", default=["fp:2", "fp:3", "fp:5", "fp:7", "q"])
    for spec in ap.parse_args().fields:
        res = laffey_idempotents(Field.parse(spec))
        if not res.possible:
            print(f"{spec}: impossible ({res.reason})")
            continue
        fmt = lambda m: "[" + "; ".join(" ".join(str(x) for x in row) for row in m) + "]"  # noqa: E731
        print(f"{spec}: P={fmt(res.P)} Q={fmt(res.Q)} span={res.span_dimension}")


if __name__ == "__main__":
    main()
