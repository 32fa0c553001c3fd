"""Certify what support search can say about every constructor code for one
parameter set: theorem value, certified lower bound, cheapest witness."""

import argparse
import json
import time
from dataclasses import dataclass

from whiteman6.codegen import ADMISSIBLE_TRIPLES, construct
from whiteman6.distance import exact_min_distance, min_weight_support_search
from whiteman6.sequence import make_setting


@dataclass
class ProfileConfig:
    n1: int = 13
    n2: int = 19
    q: int = 2
    wmax: int = 4
    enum_budget: int = 2**22


def constructions(q_in_d0: bool):
    yield 3, (1,)
    yield 3, (2,)
    yield 4, ()
    if not q_in_d0:
        return
    for i in (1, 2):
        for j in range(6):
            yield 5, (i, j)
    for j in range(6):
        yield 6, (j,)
    for i in (1, 2):
        for t in ADMISSIBLE_TRIPLES:
            yield 7, (i,) + t
    for t in ADMISSIBLE_TRIPLES:
        yield 8, t


def profile(cfg: ProfileConfig):
    s = make_setting(cfg.n1, cfg.n2, cfg.q)
    for theorem, indices in constructions(s.q_class == 0):
        t = time.perf_counter()
        code = construct(s, theorem, indices)
        exact = exact_min_distance(code, cfg.enum_budget)
        row = {"theorem": theorem, "indices": list(indices), "k": code.k,
               "theorem_value": [code.distance.kind, code.distance.value]}
        if exact.kind == "exact":
            row["exact"] = exact.value
        else:
            r = min_weight_support_search(code, cfg.wmax)
            row["search"] = [r.kind, r.value]
            row["witness_max"] = r.upper_bound
        row["seconds"] = round(time.perf_counter() - t, 2)
        yield row


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    for name, default in vars(ProfileConfig()).items():
        ap.add_argument(f"--{name.replace('_', '-')}", type=int, default=default)
    cfg = ProfileConfig(**vars(ap.parse_args()))
    for row in profile(cfg):
        print(json.dumps(row))


if __name__ == "__main__":
    main()
