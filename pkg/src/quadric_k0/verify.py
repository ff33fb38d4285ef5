"""Oracle-versus-symbolic comparison over small prime fields."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache

from .clifford import clifford_of_signature as build_clifford
from .fields import PrimeField, Residue, is_square
from .forms import SignatureForm, ds_form
from .labels import AlgebraLabel, Base, K0Class, abs_group, clifford_of_signature, simple_dim
from .wedderburn import SimpleFactor, WedderburnReport, classify

DEFAULT_PRIMES = (5, 13, 17, 7, 11, 19)
DEFAULT_MAX_RANK = 8
MAX_RANK_LIMIT = 10


def predicted_factors(label: AlgebraLabel) -> tuple:
    """Simple factors over F_p implied by a normalized label."""
    if label.base is Base.H:
        raise ValueError(f"{label} is not realizable over a finite field")
    degree = 2 if label.base is Base.C else 1
    factor = SimpleFactor(1 << label.log2size, degree)
    return (factor, factor) if label.split else (factor,)


def _fmt_factors(factors) -> str:
    return "+".join(f"M{f.matrix_size}(F_p^{f.center_degree})" for f in factors)


@dataclass
class VerificationRecord:
    plus: int
    minus: int
    p: int
    label: AlgebraLabel
    k0: K0Class
    report: WedderburnReport
    diffs: list = field(default_factory=list)
    lemma_violations: list = field(default_factory=list)

    @property
    def match(self) -> bool:
        return not self.diffs

    @property
    def ok(self) -> bool:
        return self.match and not self.lemma_violations

    def render(self) -> str:
        verdict = "MATCH" if self.match else "MISMATCH"
        line = (f"VERIFY plus={self.plus} minus={self.minus} field=Fp:{self.p} "
                f"algebra={self.label.render()} result={self.k0} "
                f"predicted={_fmt_factors(predicted_factors(self.label))} "
                f"oracle={_fmt_factors(self.report.factors)} {verdict}")
        extra = [f"  diff {d}" for d in self.diffs]
        extra += [f"  lemma {v}" for v in self.lemma_violations]
        return "\n".join([line] + extra)


@lru_cache(maxsize=256)
def oracle_report(plus: int, minus: int, p: int) -> WedderburnReport:
    return classify(build_clifford(plus, minus, PrimeField(p)))


def compare(label: AlgebraLabel, report: WedderburnReport) -> list:
    """Field-by-field differences between a label and an oracle report."""
    expected = predicted_factors(label)
    got = report.factors
    diffs = []
    if len(expected) != len(got):
        diffs.append(f"factor_count expected={len(expected)} got={len(got)}")
    for k, (e, g) in enumerate(zip(expected, got)):
        if e.matrix_size != g.matrix_size:
            diffs.append(f"factor{k}.matrix_size expected={e.matrix_size} got={g.matrix_size}")
        if e.center_degree != g.center_degree:
            diffs.append(f"factor{k}.center_degree expected={e.center_degree} got={g.center_degree}")
        if e.simple_module_dim != g.simple_module_dim:
            diffs.append(f"factor{k}.simple_module_dim expected={e.simple_module_dim} "
                         f"got={g.simple_module_dim}")
    if simple_dim(label) != (got[0].simple_module_dim.bit_length() - 1):
        diffs.append(f"d expected=2^{simple_dim(label)} got={got[0].simple_module_dim}")
    return diffs


def lemma_checks(plus: int, minus: int, p: int, report: WedderburnReport,
                 perp_report: WedderburnReport | None) -> list:
    """Structural facts every Clifford report must satisfy."""
    F = PrimeField(p)
    rank = plus + minus
    out = []
    ds = ds_form(SignatureForm(plus, minus).diagonal(F))
    expect_split = rank % 2 == 1 and is_square(Residue(ds, F))
    if report.is_split != expect_split:
        out.append(f"split={report.is_split} but odd_rank_and_ds_square={expect_split}")
    if report.is_split and report.factors[0] != report.factors[1]:
        out.append("two factors differ")
    if report.dim != 1 << rank:
        out.append(f"sum m^2 e = {report.dim} != 2^{rank}")
    if perp_report is not None:
        ratio, rem = divmod(perp_report.factors[0].simple_module_dim,
                            report.factors[0].simple_module_dim)
        if rem or ratio not in (1, 2):
            out.append(f"d(q perp 1)/d(q) = {perp_report.factors[0].simple_module_dim}"
                       f"/{report.factors[0].simple_module_dim}")
        if report.is_split and ratio != 2:
            out.append("split algebra but d(q perp 1) != 2 d(q)")
    return out


def verify_case(plus: int, minus: int, p: int, with_perp: bool = True) -> VerificationRecord:
    profile = PrimeField(p).profile
    label = clifford_of_signature(profile, plus, minus)
    k0 = abs_group(profile, plus, minus).k0
    report = oracle_report(plus, minus, p)
    perp = oracle_report(plus + 1, minus, p) if with_perp else None
    return VerificationRecord(plus, minus, p, label, k0, report,
                              compare(label, report), lemma_checks(plus, minus, p, report, perp))


def sweep_cases(primes, max_rank: int):
    """``(plus, minus, p)`` in deterministic order."""
    for rank in range(1, max_rank + 1):
        for plus in range(rank, -1, -1):
            for p in primes:
                yield plus, rank - plus, p


def _run(case):
    return verify_case(*case)


def sweep(primes=DEFAULT_PRIMES, max_rank: int = DEFAULT_MAX_RANK, jobs: int = 1) -> list:
    if max_rank > MAX_RANK_LIMIT:
        raise ValueError(f"max_rank {max_rank} exceeds {MAX_RANK_LIMIT}")
    fields = [PrimeField(p) for p in primes]  # validates every prime up front
    cases = list(sweep_cases([F.p for F in fields], max_rank))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_run, cases))
    return [_run(c) for c in cases]
