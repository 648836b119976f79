"""Compare the rho normal form against the finite presentation on random pairs.

Each pair is either related by a random sum of relation instances or offset
by a random nonzero class; the script counts agreements between the two
decision routes.
"""

import argparse
import random
from collections import Counter
from dataclasses import dataclass

from hcyl.invariants import SurgeryPresentation, same_class_by_presentation, y2_equivalent
from hcyl.sampling import random_relation_sum, random_yexpr
from hcyl.ygraph import epsilon, pullback_model


@dataclass
class CrosscheckConfig:
    genus: int = 2
    pairs: int = 200
    seed: int = 1


def random_pair(rng, g, case):
    base = random_yexpr(rng, g, terms=rng.randint(0, 4))
    if rng.random() < 0.5:
        other = base + random_relation_sum(rng, g, rng.randint(1, 4), closed=case == "closed")
    else:
        model = pullback_model(g)
        v = model.pair([rng.randint(-1, 1) for _ in range(model.group.gen_count)])
        other = base + epsilon(v)
    return SurgeryPresentation(g, case, base), SurgeryPresentation(g, case, other)


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--genus", type=int, default=CrosscheckConfig.genus)
    p.add_argument("--pairs", type=int, default=CrosscheckConfig.pairs)
    p.add_argument("--seed", type=int, default=CrosscheckConfig.seed)
    a = p.parse_args()
    cfg = CrosscheckConfig(a.genus, a.pairs, a.seed)

    rng = random.Random(cfg.seed)
    tally = Counter()
    for i in range(cfg.pairs):
        case = ("boundary", "closed")[i % 2]
        m1, m2 = random_pair(rng, cfg.genus, case)
        fast = y2_equivalent(m1, m2)[0]
        slow = same_class_by_presentation(m1, m2)
        tally[(case, fast, slow)] += 1

    for (case, fast, slow), n in sorted(tally.items()):
        print(f"{case:<9} rho={str(fast):<5} presentation={str(slow):<5} count={n}")
    disagreements = sum(n for (_, f, s), n in tally.items() if f != s)
    print(f"disagreements: {disagreements}")
    raise SystemExit(1 if disagreements else 0)


if __name__ == "__main__":
    main()
