"""Row generators for the Clifford and simple-module-dimension tables."""

from __future__ import annotations

from dataclasses import dataclass

from .fields import FieldProfile
from .labels import AlgebraLabel, Base, abs_group, clifford_of_signature, simple_dim

KINDS = ("definite-plus", "definite-minus", "paper-8r", "paper-4r")
MAX_TABLE_N = 512

_GLYPH = {Base.K: "k", Base.C: "C", Base.H: "H"}


def relative_size(log2: int, log2_s: int) -> str:
    """Render ``2^log2`` as a multiple of ``s = 2^log2_s`` (``s``, ``2s``, ...)."""
    shift = log2 - log2_s
    if shift < 0:
        raise ValueError(f"2^{log2} is smaller than s = 2^{log2_s}")
    return "s" if shift == 0 else f"{1 << shift}s"


def relative_label(label: AlgebraLabel, log2_s: int) -> str:
    out = f"{_GLYPH[label.base]}({relative_size(label.log2size, log2_s)})"
    return out + "^2" if label.split else out


@dataclass(frozen=True)
class PeriodicRow:
    """One row of the ``s``-parametrized tables.

    ``minus`` is ``C(q_N)`` for the negative definite form of rank ``N``,
    ``plus`` is ``C(q_N')`` and ``perp`` is ``C(q_N perp 1)``.
    """

    n: int
    rank: int
    minus: AlgebraLabel
    plus: AlgebraLabel
    perp: AlgebraLabel

    def cells(self, log2_s: int) -> list:
        return [
            relative_label(self.minus, log2_s),
            relative_label(self.plus, log2_s),
            relative_label(self.perp, log2_s),
            relative_size(simple_dim(self.minus), log2_s),
            relative_size(simple_dim(self.plus), log2_s),
            relative_size(simple_dim(self.perp), log2_s),
        ]


def periodic_rows(profile: FieldProfile, period: int, r: int) -> list:
    rows = []
    for n in range(1, period + 1):
        N = period * r + n
        rows.append(PeriodicRow(
            n, N,
            clifford_of_signature(profile, 0, N),
            clifford_of_signature(profile, N, 0),
            clifford_of_signature(profile, 1, N),
        ))
    return rows


def render_periodic(profile: FieldProfile, kind: str, r: int) -> str:
    period = 8 if kind == "paper-8r" else 4
    log2_s = r * (4 if period == 8 else 2)
    base = 16 if period == 8 else 4
    lines = [f"# kind={kind} field={profile.value} r={r} s={base}^{r}"]
    for row in periodic_rows(profile, period, r):
        c_minus, c_plus, c_perp, d_minus, d_plus, d_perp = row.cells(log2_s)
        lines.append(f"n={row.n} C={c_minus} Cp={c_plus} Cperp={c_perp} "
                     f"d={d_minus} dp={d_plus} dperp={d_perp}")
    return "\n".join(lines) + "\n"


def render_definite(profile: FieldProfile, kind: str, max_n: int) -> str:
    positive = kind == "definite-plus"
    lines = [f"# kind={kind} field={profile.value}"]
    for n in range(1, max_n + 1):
        plus, minus = (n, 0) if positive else (0, n)
        res = abs_group(profile, plus, minus)
        lines.append(f"n={n} C={res.label.render()} Cperp={res.perp_label.render()} "
                     f"d={res.d} dperp={res.dperp} result={res.k0}")
    return "\n".join(lines) + "\n"


def render_table(profile: FieldProfile, kind: str, max_n: int = 8, r: int = 0) -> str:
    if kind not in KINDS:
        raise ValueError(f"unknown table kind {kind!r}; expected one of {', '.join(KINDS)}")
    if kind.startswith("paper"):
        if r < 0:
            raise ValueError("r must be non-negative")
        return render_periodic(profile, kind, r)
    if not 1 <= max_n <= MAX_TABLE_N:
        raise ValueError(f"max_n must be in 1..{MAX_TABLE_N}")
    return render_definite(profile, kind, max_n)
