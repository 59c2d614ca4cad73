"""Rolling of tilting complexes over a Dynkin quiver and its iteration."""
from __future__ import annotations

import math
from typing import NamedTuple

from .derived import (
    DComplex,
    Section,
    in_module_region,
    is_tilting_complex,
    section_of,
    tilted_section,
)
from .endoalg import end_algebra, extract_presentation, gldim
from .errors import MaxStepsExceeded, PotentialNotDecreasing


class RollResult(NamedTuple):
    complex: DComplex
    section: Section
    moved: list  # positions of the summands replaced by F^{-1}
    hom_x_rest_zero: bool
    below_tau_section: bool


def roll(t: DComplex) -> RollResult:
    """Replace the summands lying on Sigma(T) by their F^{-1} translates."""
    cat = t.cat
    sec = section_of(t)
    moved = [k for k, x in enumerate(t.summands) if sec.contains(x)]
    rest = [k for k in range(len(t)) if k not in moved]
    new = [cat.F_inv(x) if k in moved else x for k, x in enumerate(t.summands)]
    hom_zero = all(cat.hom_dim(t[a], t[b]) == 0 for a in moved for b in rest)
    tau_sec = sec.tau()
    below = True
    for x in new:
        z = cat.coordinate(x)
        if z[1] >= tau_sec.level[z[0]]:
            below = False
    return RollResult(t.replace(new), sec, moved, hom_zero, below)


def rho(t: DComplex) -> DComplex:
    return roll(t).complex


def end_gldim(t: DComplex, cap=8):
    return gldim(end_algebra(t), cap)


class PreserveReport(NamedTuple):
    gldim: float
    rolled: DComplex
    rolled_is_tilting: bool
    rolled_gldim: float | None
    witnesses: list  # (moved index, rest index, k, dim) for Hom(tau X, T'[k]), k in {0, -1}
    rolled_witnesses: list

    @property
    def ok(self):
        if self.gldim > 2:
            return True
        return self.rolled_is_tilting and self.rolled_gldim is not None and self.rolled_gldim <= 2

    def to_json(self):
        g = lambda v: None if v is None else (v if v != math.inf else "inf")
        return {
            "gldim": g(self.gldim),
            "rolled_is_tilting": self.rolled_is_tilting,
            "rolled_gldim": g(self.rolled_gldim),
            "tau_x_witnesses": [list(w) for w in self.witnesses],
            "rolled_witnesses": [list(w) for w in self.rolled_witnesses],
            "ok": self.ok,
        }


def roll_preserves(t: DComplex, cap=8) -> PreserveReport:
    cat = t.cat
    g = end_gldim(t, cap)
    res = roll(t)
    rest = [k for k in range(len(t)) if k not in res.moved]
    wit = []
    for a in res.moved:
        tx = cat.tau(t[a])
        for b in rest:
            for k in (0, -1):
                d = cat.hom_dim(tx, cat.shift(t[b], k))
                if d:
                    wit.append((a, b, k, d))
    verdict = is_tilting_complex(res.complex)
    rg = end_gldim(res.complex, cap) if verdict.ok else None
    return PreserveReport(g, res.complex, verdict.ok, rg, wit, verdict.witnesses)


class Potential(NamedTuple):
    m: list
    G: list
    n: int


def potential(t: DComplex, s: Section) -> Potential:
    cat = t.cat
    m = [sum(cat.distance(x, y) for y in t.summands) for x in t.summands]
    G = [k for k, x in enumerate(t.summands) if not in_module_region(x, s)]
    return Potential(m, G, sum(m[k] for k in G))


class TraceStep(NamedTuple):
    complex: DComplex
    presentation: object
    gldim: float
    section: Section
    potential: int
    tilted: bool
    tilted_section: Section | None

    def to_json(self, h):
        from .derived import format_complex

        return {
            "step": h,
            "complex": self.complex.describe(),
            "complex_text": format_complex(self.complex),
            "presentation": self.presentation.to_json(),
            "gldim": self.gldim if self.gldim != math.inf else "inf",
            "section": self.section.to_json(),
            "potential": self.potential,
            "tilted": self.tilted,
        }


class RollTrace(NamedTuple):
    steps: list

    def first_tilted(self):
        for h, s in enumerate(self.steps):
            if s.tilted:
                return h
        return None


def _step(t: DComplex, name) -> TraceStep:
    alg = end_algebra(t, name=name)
    pres = extract_presentation(alg, name).presentation
    g = gldim(alg, 8)
    sec = section_of(t)
    n = potential(t, sec).n
    ts = tilted_section(t)
    return TraceStep(t, pres, g, sec, n, ts is not None, ts)


def roll_steps(t: DComplex, steps: int) -> RollTrace:
    """The first ``steps`` rolls, with no stopping rule."""
    out = [_step(t, "B0")]
    cur = t
    for h in range(1, steps + 1):
        cur = rho(cur)
        out.append(_step(cur, f"B{h}"))
    _check_monotone(out)
    return RollTrace(out)


def _check_monotone(steps):
    for a, b in zip(steps, steps[1:]):
        if a.gldim > 2:
            return
        if a.potential > 0 and not b.potential < a.potential:
            raise PotentialNotDecreasing(f"potential went from {a.potential} to {b.potential}")
        if a.potential == 0 and b.potential != 0:
            raise PotentialNotDecreasing("potential left zero")


def roll_to_tilted(t: DComplex, max_steps=50) -> RollTrace:
    out = [_step(t, "B0")]
    cur = t
    while not out[-1].tilted:
        if len(out) > max_steps:
            raise MaxStepsExceeded(f"not tilted after {max_steps} rolls")
        cur = rho(cur)
        out.append(_step(cur, f"B{len(out)}"))
        _check_monotone(out[-2:])
    return RollTrace(out)


__all__ = [
    "Potential",
    "PreserveReport",
    "RollResult",
    "RollTrace",
    "TraceStep",
    "end_gldim",
    "potential",
    "rho",
    "roll",
    "roll_preserves",
    "roll_steps",
    "roll_to_tilted",
]
