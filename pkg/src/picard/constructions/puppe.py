"""The four comparison equivalences behind 2-Puppe exactness.

Each entry builds both sides directly, certifies them equivalent with
find_equivalence, and also checks an explicit comparison hom:

    puppe.coker_ker    Coker(e_F) -> Im¹_pl F   (descended from Ê)
    puppe.root_copip   Im²_pl F -> Root(copip F)   (A, φ, B) ↦ B
    puppe.ker_coker    Im² F -> Ker(p_F)        (factored from M through ε)
    puppe.coroot_pip   Coroot(pip F) -> Im¹ F   [f] ↦ [f]
"""

from __future__ import annotations

from typing import Callable

from ..equivalence import find_equivalence, is_equivalence
from ..errors import PicardError
from ..report import CheckEntry, CheckReport
from ..rmodule import RModHom, RModMor, RModule, validate_mod_hom, validate_module, zero_hom
from ..search import SearchBudget
from ..twogroup import compose_hom
from .cokernel import cokernel, cokernel_factor
from .common import strict_hom
from .image import im1, im1_pl, im2, im2_pl
from .kernel import kernel, kernel_factor
from .pips import copip, coroot, pip, root


def _entry(axiom: str, left: RModule, right: RModule, comparison: Callable[[], RModHom],
           budget: SearchBudget | None) -> CheckEntry:
    for side, X in (("left", left), ("right", right)):
        rep = validate_module(X)
        if not rep.ok:
            bad = rep.failures[0]
            return CheckEntry(axiom, False, ("construction", side, bad.axiom))
    try:
        H = comparison()
    except PicardError as exc:
        return CheckEntry(axiom, False, ("comparison", exc.code))
    rep = validate_mod_hom(H)
    if not rep.ok:
        return CheckEntry(axiom, False, ("comparison", rep.failures[0].axiom))
    verdict = is_equivalence(H)
    if not verdict:
        return CheckEntry(axiom, False, ("comparison", "not an equivalence", verdict.witness))
    stats: dict = {}
    if find_equivalence(left, right, budget, stats) is None:
        fl, fr = stats["fingerprints"]
        return CheckEntry(axiom, False, ("equivalence", "not found", fl, fr, stats["nodes"]))
    return CheckEntry(axiom, True)


def _coker_ker(F: RModHom, budget) -> tuple:
    K = kernel(F)
    C = cokernel(K.e)
    I1, E = im1_pl(F)
    N = F.cod

    def comparison():
        # δ: Ê∘e_F => 0 at (A, a) is a followed by F₀⁻¹, read in Im¹_pl
        delta = RModMor(compose_hom(K.e, E), zero_hom(K.ker, I1),
                        {x: (x[0], N.then(x[1], N.inv(F.fzero)), F.dom.unit) for x in K.ker.objects})
        fac = cokernel_factor(C, E, delta, budget)
        if not fac.report.ok:
            raise _Failed(fac.report)
        return fac.hom

    return C.coker, I1, comparison


def _root_copip(F: RModHom, budget) -> tuple:
    Rt = root(copip(F).sigma).module
    I2 = im2_pl(F)
    return I2, Rt, lambda: strict_hom(I2, Rt, {x: x[2] for x in I2.objects},
                                      {m: m[1] for m in I2.morphisms})


def _ker_coker(F: RModHom, budget) -> tuple:
    C = cokernel(F)
    K = kernel(C.p)
    I2, _ = im2(F)
    N = F.cod

    def comparison():
        Mf = strict_hom(I2, N, {x: x[2] for x in I2.objects}, {m: m[1] for m in I2.morphisms})
        # ε: p_F∘M => 0 at (A, φ, B) is the class of φ⁻¹ then l⁻¹ with witness A
        eps = RModMor(compose_hom(Mf, C.p), zero_hom(I2, C.coker),
                      {x: C.cls((N.then(N.inv(x[1]), N.inv(N.lunit[F.omap[x[0]]])), x[0], N.unit))
                       for x in I2.objects})
        fac = kernel_factor(K, Mf, eps, budget)
        if not fac.report.ok:
            raise _Failed(fac.report)
        return fac.hom

    return I2, K.ker, comparison


def _coroot_pip(F: RModHom, budget) -> tuple:
    Cr = coroot(pip(F).sigma).module
    I1, E = im1(F)
    return Cr, I1, lambda: strict_hom(Cr, I1, {a: a for a in Cr.objects},
                                      {f: E.mmap[f] for f in Cr.morphisms})


class _Failed(PicardError):
    code = "FACTOR_FAILED"

    def __init__(self, report: CheckReport):
        super().__init__(report.summary())
        self.report = report


BRANCHES = (("puppe.coker_ker", _coker_ker), ("puppe.root_copip", _root_copip),
            ("puppe.ker_coker", _ker_coker), ("puppe.coroot_pip", _coroot_pip))


def puppe_check(F: RModHom, budget: SearchBudget | None = None) -> CheckReport:
    """One entry per comparison; BudgetExceeded propagates."""
    entries = []
    for axiom, build in BRANCHES:
        left, right, comparison = build(F, budget)
        entries.append(_entry(axiom, left, right, comparison, budget))
    return CheckReport(entries)


__all__ = ["puppe_check", "BRANCHES"]
