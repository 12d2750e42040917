"""Cross-check the closed-form covers against Reidemeister-Schreier + H1."""

from __future__ import annotations

import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from math import gcd

from .abelian import H1Invariants, h1, h1_z2_dim
from .covers import CaseTag, CoverCase, classify, double_cover
from .errors import SeifertError
from .rs import kernel_presentation
from .seifert import (
    FiberPair,
    SeifertInvariants,
    TypeSymbol,
    chi_orb,
    euler_number,
    format_seifert,
    fundamental_presentation,
    validate,
)
from .z2hom import Z2Hom, enumerate_epimorphisms, is_valid


@dataclass
class VerifyReport:
    symbol: str
    phi: str
    case: CoverCase | None
    predicted: SeifertInvariants | None
    predicted_h1: H1Invariants | None
    oracle_h1: H1Invariants | None
    chi_ok: bool | None
    euler_ok: bool | None  # None when the relation does not apply
    passed: bool
    failures: list[dict] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "symbol": self.symbol,
            "phi": self.phi,
            "case": self.case.to_json() if self.case else None,
            "predicted": format_seifert(self.predicted) if self.predicted else None,
            "predicted_h1": self.predicted_h1.to_json() if self.predicted_h1 else None,
            "oracle_h1": self.oracle_h1.to_json() if self.oracle_h1 else None,
            "chi_ok": self.chi_ok,
            "euler_ok": self.euler_ok,
            "pass": self.passed,
            "failures": self.failures,
        }


@lru_cache(maxsize=4096)
def predicted_h1(inv: SeifertInvariants) -> H1Invariants:
    return h1(fundamental_presentation(inv))


def oracle_h1(inv: SeifertInvariants, phi: Z2Hom, q: str | None = None) -> H1Invariants:
    return h1(kernel_presentation(fundamental_presentation(inv), phi, q))


def check_prediction(
    inv: SeifertInvariants, phi: Z2Hom, predicted: SeifertInvariants, case: CoverCase | None = None
) -> VerifyReport:
    """Compare ``predicted`` with the RS oracle for ``ker(phi)``.

    Predicted H1 is always computed from the predicted symbol's own
    presentation.
    """
    case = case or classify(inv, phi)
    failures = []

    def fail(stage, expected, got):
        failures.append({"stage": stage, "expected": str(expected), "got": str(got)})

    report = validate(predicted)
    if not report.ok:
        fail("validate", "valid symbol", "; ".join(report.violations))
        return VerifyReport(format_seifert(inv), str(phi), case, predicted, None, None,
                            None, None, False, failures)

    ph1 = predicted_h1(predicted)
    oh1 = oracle_h1(inv, phi)
    if ph1 != oh1:
        fail("h1", oh1, ph1)

    want_chi = chi_orb(inv) * (1 if phi["h"] else 2)
    chi_ok = chi_orb(predicted) == want_chi
    if not chi_ok:
        fail("chi_orb", want_chi, chi_orb(predicted))

    euler_ok = None
    if inv.type in (TypeSymbol.O1, TypeSymbol.N2):
        factor = {CaseTag.ORDINARY: 2, CaseTag.FIBER: 0.5}.get(case.tag)
        if factor is not None:
            want = euler_number(inv) * 2 if factor == 2 else euler_number(inv) / 2
            euler_ok = euler_number(predicted) == want
            if not euler_ok:
                fail("euler", want, euler_number(predicted))

    return VerifyReport(format_seifert(inv), str(phi), case, predicted, ph1, oh1,
                        chi_ok, euler_ok, not failures, failures)


def verify_cover(inv: SeifertInvariants, phi: Z2Hom) -> VerifyReport:
    case = classify(inv, phi)
    return check_prediction(inv, phi, double_cover(inv, phi), case)


def killvj_check(inv: SeifertInvariants) -> list[VerifyReport]:
    """For every epimorphism with ``phi(h) = 0`` and ``m > 0``, vary ``phi``
    on the ``v_j`` and check the prediction and oracle H1 do not move.
    """
    p = fundamental_presentation(inv)
    vnames = [f"v{j}" for j in range(1, inv.gprime + 1)]
    base_phis = {}
    for phi in enumerate_epimorphisms(p):
        bits = phi.as_dict()
        if bits["h"] or not any(bits[f"s{k}"] for k in range(1, inv.n + 1)):
            continue
        key = tuple(bits[f"s{k}"] for k in range(1, inv.n + 1))
        base_phis.setdefault(key, phi)

    reports = []
    for phi in base_phis.values():
        ref_pred = ref_h1 = None
        for vb in product((0, 1), repeat=len(vnames)):
            bits = phi.as_dict()
            bits.update(zip(vnames, vb))
            variant = Z2Hom.from_mapping(p.generators, bits)
            if not is_valid(p, variant):
                continue
            rep = verify_cover(inv, variant)
            if ref_pred is None:
                ref_pred, ref_h1 = rep.predicted, rep.oracle_h1
            else:
                if rep.predicted != ref_pred:
                    rep.failures.append({"stage": "killvj-prediction",
                                         "expected": str(ref_pred), "got": str(rep.predicted)})
                if rep.oracle_h1 != ref_h1:
                    rep.failures.append({"stage": "killvj-oracle",
                                         "expected": str(ref_h1), "got": str(rep.oracle_h1)})
                rep.passed = not rep.failures
            reports.append(rep)
    return reports


# -- fuzzing -------------------------------------------------------------------


@dataclass(frozen=True)
class FuzzConfig:
    count: int = 100
    seed: int = 1
    max_n: int = 3
    max_e: int = 3
    max_g: int = 2
    max_a: int = 9
    max_b: int = 9
    types: tuple[TypeSymbol, ...] = tuple(TypeSymbol)
    allow_negative_a: bool = True


def random_fiber(rng: random.Random, cfg: FuzzConfig) -> FiberPair:
    while True:
        a = rng.randint(1, cfg.max_a)
        if cfg.allow_negative_a and rng.random() < 0.5:
            a = -a
        b = rng.randint(-cfg.max_b, cfg.max_b)
        if gcd(a, b) == 1:
            return FiberPair(a, b)


def random_symbol(rng: random.Random, cfg: FuzzConfig) -> SeifertInvariants:
    t = TypeSymbol(rng.choice(cfg.types))
    g = rng.randint(t.min_genus, max(cfg.max_g, t.min_genus))
    n = rng.randint(0, cfg.max_n)
    e = rng.randint(-cfg.max_e, cfg.max_e)
    return SeifertInvariants(e, t, g, tuple(random_fiber(rng, cfg) for _ in range(n)))


def corpus(cfg: FuzzConfig) -> list[SeifertInvariants]:
    rng = random.Random(cfg.seed)
    return [random_symbol(rng, cfg) for _ in range(cfg.count)]


@dataclass
class CaseResult:
    index: int
    symbol: str
    epimorphisms: int
    z2_dim: int
    coverage: Counter
    failures: list[dict]


def run_case(index: int, inv: SeifertInvariants) -> CaseResult:
    p = fundamental_presentation(inv)
    failures = []
    coverage: Counter = Counter()
    try:
        phis = enumerate_epimorphisms(p)
    except SeifertError as exc:
        failures.append({"symbol": format_seifert(inv), "phi": "", "stage": "enumerate",
                         "expected": "epimorphism list", "got": repr(exc)})
        return CaseResult(index, format_seifert(inv), 0, -1, coverage, failures)
    dim = h1_z2_dim(p)
    if len(phis) != 2 ** dim - 1:
        failures.append({"symbol": format_seifert(inv), "phi": "", "stage": "count",
                         "expected": str(2 ** dim - 1), "got": str(len(phis))})
    for phi in phis:
        try:
            rep = verify_cover(inv, phi)
        except SeifertError as exc:
            failures.append({"symbol": format_seifert(inv), "phi": str(phi), "stage": "exception",
                             "expected": "report", "got": repr(exc)})
            continue
        coverage[(rep.case.tag.value, inv.type.value)] += 1
        for f in rep.failures:
            failures.append({"symbol": rep.symbol, "phi": rep.phi, **f})
    return CaseResult(index, format_seifert(inv), len(phis), dim, coverage, failures)


def _run_case_star(args):
    return run_case(*args)


def fuzz(cfg: FuzzConfig, workers: int = 1) -> dict:
    """Verify every epimorphism of ``cfg.count`` random symbols.

    Returns the JSON-ready summary ``{cases, epimorphisms, failures, coverage}``.
    """
    jobs = list(enumerate(corpus(cfg)))
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(_run_case_star, jobs, chunksize=8))
    else:
        results = [run_case(i, inv) for i, inv in jobs]
    results.sort(key=lambda r: r.index)
    coverage: Counter = Counter()
    type_counts: Counter = Counter()
    failures = []
    for r in results:
        coverage.update(r.coverage)
        type_counts[r.symbol.split("(")[1].split(",")[0]] += 1
        failures.extend(r.failures)
    return {
        "cases": len(results),
        "epimorphisms": sum(r.epimorphisms for r in results),
        "failures": failures,
        "coverage": {f"{tag}/{t}": c for (tag, t), c in sorted(coverage.items())},
        "types": dict(sorted(type_counts.items())),
    }
