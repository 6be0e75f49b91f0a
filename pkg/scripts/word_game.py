"""Print the product (2.abab+3.aba)(ab+b) under several rule books."""
import argparse
from dataclasses import dataclass

from hamilton import AlgebraParams, word_mul
from hamilton.parser import parse_word

RULE_BOOKS = [("t^2-t", "t^2-t"), ("t^2", "t^2"), ("t^2-t", "t^2"), ("t^2-1", "t^2-1"), ("t^2+1", "t^2+1")]


@dataclass
class WordGameConfig:
    left: str = "2.abab+3.aba"
    right: str = "ab+b"
    sort: bool = False


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--left", default=WordGameConfig.left)
    ap.add_argument("--right", default=WordGameConfig.right)
    ap.add_argument("--sorted", dest="sort", action="store_true")
    cfg = WordGameConfig(**vars(ap.parse_args()))
    for p, q in RULE_BOOKS:
        P = AlgebraParams.parse("q", p, q)
        prod = word_mul(parse_word(cfg.left, P), parse_word(cfg.right, P))
        print(f"p={p:<6} q={q:<6} {prod.render(sort=cfg.sort)}")


if __name__ == "__main__":
    main()
