"""Deterministic property sweep used by ``hcyl selftest``."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import linalg
from .boolean import BoolPoly, arf_quotient, b3_basis
from .invariants import SurgeryPresentation, beta, rochlin_delta, structure, y2_equivalent
from .lie import a_g1_generators, check_exactness, eta1_hom, hl2_dim, nu
from .quadforms import enumerate_forms
from .sampling import random_relation, random_relation_sum, random_yexpr
from .ygraph import (
    PullbackElem,
    close,
    epsilon,
    epsilon_boolean,
    gamma,
    pullback_model,
    rho,
    symplectic_relations,
)


@dataclass
class SelftestConfig:
    genus: int = 2
    seed: int = 0
    samples: int = 50
    extensionality_max_genus: int = 2


@dataclass
class SelftestReport:
    checks: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(ok for ok, _ in self.checks.values())

    def record(self, name: str, ok: bool, detail: str = ""):
        self.checks[name] = (bool(ok), detail)

    def lines(self) -> list[str]:
        out = [f"{name}: {'pass' if ok else 'FAIL'}" + (f" ({d})" if d else "") for name, (ok, d) in self.checks.items()]
        out.append(f"result: {'pass' if self.passed else 'FAIL'}")
        return out


def _relations(rng, g, n) -> dict:
    out = {}
    for kind in ("as", "multilinear", "slide"):
        out[kind] = all(rho(random_relation(rng, g, kind)).is_zero() for _ in range(n))
    return out


def pullback_basis(g: int) -> list[PullbackElem]:
    model = pullback_model(g)
    n = model.group.gen_count
    return [model.pair([1 if i == j else 0 for i in range(n)]) for j in range(n)]


def sections_ok(g: int) -> tuple[bool, bool]:
    ok_rho = all(rho(epsilon(v)) == v for v in pullback_basis(g))
    ok_gamma = all(gamma(epsilon_boolean(BoolPoly(g, {m}))) == BoolPoly(g, {m}) for m in b3_basis(g))
    return ok_rho, ok_gamma


def eta_consistent(x) -> bool:
    """eta1_hom(x) and nu of the wedge part of rho(x) differ by an element of A_{g,1}."""
    g = x.genus
    diff = [a - b for a, b in zip(eta1_hom(x).to_tensor(), nu(rho(x).u))]
    if not g:
        return not any(diff)
    A = linalg.from_columns(a_g1_generators(g), hl2_dim(g))
    return linalg.solve_integer(A, diff, 2 * g) is not None


def rochlin_consistent(m: SurgeryPresentation) -> bool:
    f = beta(SurgeryPresentation(m.genus, "boundary", m.expr))
    for q in enumerate_forms(m.genus):
        total = sum(t.coefficient * rochlin_delta(*t.labels, q) for t in m.expr) % 16
        if (8 * f(q)) % 16 != total:
            return False
    return True


def evaluation_rank(g: int) -> int:
    """GF(2) rank of the table (monomial, form) -> value, over all 2^(2g) monomials."""
    forms = enumerate_forms(g)
    rows = [linalg.pack_bits([BoolPoly(g, {m})(q) for q in forms]) for m in range(1 << (2 * g))]
    return linalg.gf2_rank(rows)


def extensionality(g: int) -> bool:
    """Support equality coincides with pointwise equality iff evaluation is injective."""
    return evaluation_rank(g) == 1 << (2 * g)


def run_selftest(cfg: SelftestConfig) -> SelftestReport:
    rep = SelftestReport()
    rng = random.Random(cfg.seed)
    for g in range(cfg.genus + 1):
        for kind, ok in _relations(rng, g, cfg.samples).items():
            rep.record(f"g{g}.relation.{kind}", ok)

        rels = symplectic_relations(g)
        q = arf_quotient(g)
        rep.record(f"g{g}.symplectic_in_arf_ideal", all(q.contains(rho(r).f) for r in rels))
        rep.record(f"g{g}.symplectic_closed_zero", all(close(r).is_zero() for r in rels))

        ok_rho, ok_gamma = sections_ok(g)
        rep.record(f"g{g}.rho_epsilon_identity", ok_rho)
        rep.record(f"g{g}.gamma_epsilon_identity", ok_gamma)

        exprs = [random_yexpr(rng, g) for _ in range(cfg.samples)]
        rep.record(f"g{g}.eta1_consistency", all(eta_consistent(x) for x in exprs))
        rep.record(
            f"g{g}.beta_rochlin",
            all(rochlin_consistent(SurgeryPresentation(g, "boundary", x)) for x in exprs[:10]),
        )

        for case in ("boundary", "closed"):
            ok = True
            for x in exprs[:10]:
                r = random_relation_sum(rng, g, 3, closed=case == "closed")
                m1 = SurgeryPresentation(g, case, x)
                ok &= y2_equivalent(m1, SurgeryPresentation(g, case, x + r))[0]
            rep.record(f"g{g}.equivalence_invariance.{case}", ok)

        ex = check_exactness(g)
        rep.record(f"g{g}.lie_exactness", ex.passed, "; ".join(f"{k}" for k, (ok, _) in ex.checks.items() if not ok))

        for case in ("boundary", "closed"):
            s = structure(g, case)
            rep.record(f"g{g}.structure.{case}", s.agree and s.matches_expected, f"rank {s.pullback[0]}, {len(s.pullback[1])} x Z/2")

        if g <= cfg.extensionality_max_genus:
            rep.record(f"g{g}.boolean_extensionality", extensionality(g))
    return rep

