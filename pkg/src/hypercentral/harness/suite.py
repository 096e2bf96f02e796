"""Implications between ring classes, checked ring by ring over a catalog."""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from .. import structure as st
from ..constructions import (
    FAMILIES,
    FAMILY_KEYWORDS,
    Finding,
    armendariz_check,
    build_matrix_subring,
    polyext_h_check,
)
from ..errors import ConstructionNotARing, RingError, SizeCapExceeded
from ..properties import all_satisfy_P, check_property
from ..ring import DEFAULT_SIZE_CAP, FiniteRing, corner_ring, opposite_ring, quotient_ring
from ..verdict import Status, Verdict
from .report import Report, make_report

H = "h_semicommutative"


@dataclass(frozen=True)
class Implication:
    id: str
    antecedents: tuple[str, ...]
    consequent: str
    statement: str


def _imp(id, ants, cons, statement):
    return Implication(id, tuple(ants), cons, statement)


IMPLICATIONS = (
    _imp("reduced_implies_semicommutative", ["reduced"], "semicommutative", "reduced rings are semicommutative"),
    _imp("semicommutative_implies_h", ["semicommutative"], H, "semicommutative rings are H-semicommutative"),
    _imp("central_implies_h", ["central_semicommutative"], H, "central semicommutative rings are H-semicommutative"),
    _imp("nil_ring_implies_h", ["nil_ring"], H, "nil rings are H-semicommutative"),
    _imp("h_implies_nil_semicommutative_2", [H], "nil_semicommutative_2", "H-semicommutative rings are nil-semicommutative-II"),
    _imp("h_implies_abelian", [H], "abelian", "H-semicommutative rings are abelian"),
    _imp("h_implies_directly_finite", [H], "directly_finite", "H-semicommutative rings are directly finite"),
    _imp("h_implies_two_primal", [H], "two_primal", "H-semicommutative rings are 2-primal"),
    _imp("h_implies_j_semicommutative", [H], "j_semicommutative", "H-semicommutative rings are J-semicommutative"),
    _imp("two_primal_implies_ni", ["two_primal"], "ni_ring", "2-primal rings are NI"),
    _imp(
        "h_semiprime_implies_central",
        [H, "semiprime"],
        "central_semicommutative",
        "semiprime (equivalently semisimple, for finite rings) H-semicommutative rings are central semicommutative",
    ),
    _imp("h_semiprime_implies_reduced", [H, "semiprime"], "reduced", "semiprime H-semicommutative rings are reduced"),
    _imp("h_left_pp_implies_reduced", [H, "left_pp"], "reduced", "left p.p. H-semicommutative rings are reduced"),
    _imp("h_right_pp_implies_reduced", [H, "right_pp"], "reduced", "right p.p. H-semicommutative rings are reduced"),
    _imp(
        "h_left_pq_implies_reduced", [H, "left_pq_baer"], "reduced", "left p.q.-Baer H-semicommutative rings are reduced"
    ),
    _imp(
        "h_right_pq_implies_reduced",
        [H, "right_pq_baer"],
        "reduced",
        "right p.q.-Baer H-semicommutative rings are reduced",
    ),
    _imp(
        "h_left_sf_implies_strongly_regular",
        [H, "left_sf"],
        "strongly_regular",
        "left SF H-semicommutative rings are strongly regular",
    ),
    _imp(
        "h_wnil_implies_reduced",
        [H, "wnil_injective_simple_singulars"],
        "reduced",
        "H-semicommutative rings whose simple singular left modules are wnil-injective are reduced",
    ),
    _imp(
        "h_gw_gp_left_iff_strongly_regular",
        [H],
        "equiv:strongly_regular,gw_gp_left",
        "an H-semicommutative ring is strongly regular iff its maximal left ideals are GW-ideals and it is left GP-V'",
    ),
    _imp(
        "h_gw_gp_right_iff_strongly_regular",
        [H],
        "equiv:strongly_regular,gw_gp_right",
        "an H-semicommutative ring is strongly regular iff its maximal right ideals are GW-ideals and it is right GP-V'",
    ),
    _imp(
        "h_nil_quotient_sf_implies_nil_singular",
        [H, "nil_quotient:left_sf"],
        "nil_singular",
        "H-semicommutative rings with R/Nil(R) left SF are nil singular",
    ),
    _imp(
        "h_nil_quotient_gp_gw_left_implies_nil_singular",
        [H, "nil_quotient:gw_gp_left"],
        "nil_singular",
        "H-semicommutative rings with R/Nil(R) left GP-V' and left GW maximal ideals are nil singular",
    ),
    _imp(
        "h_nil_quotient_gp_gw_right_implies_nil_singular",
        [H, "nil_quotient:gw_gp_right"],
        "nil_singular",
        "H-semicommutative rings with R/Nil(R) right GP-V' and right GW maximal ideals are nil singular",
    ),
    _imp(
        "h_property_p_semi_left_pp_implies_reduced",
        [H, "all_P", "semi_left_pp"],
        "reduced",
        "H-semicommutative left semi-p.p. rings whose elements satisfy (P) are reduced",
    ),
    _imp(
        "h_property_p_semi_right_pp_implies_reduced",
        [H, "all_P", "semi_right_pp"],
        "reduced",
        "H-semicommutative right semi-p.p. rings whose elements satisfy (P) are reduced",
    ),
    _imp(
        "h_property_p_semi_left_pq_implies_reduced",
        [H, "all_P", "semi_left_pq"],
        "reduced",
        "H-semicommutative left semi-p.q. rings whose elements satisfy (P) are reduced",
    ),
    _imp(
        "h_property_p_semi_right_pq_implies_reduced",
        [H, "all_P", "semi_right_pq"],
        "reduced",
        "H-semicommutative right semi-p.q. rings whose elements satisfy (P) are reduced",
    ),
    _imp(
        "h_pp_pq_equivalent",
        [H],
        "equiv:left_pp,right_pp,left_pq_baer,right_pq_baer",
        "for H-semicommutative rings left/right p.p. and left/right p.q.-Baer coincide",
    ),
    _imp(
        "h_semi_pp_pq_equivalent",
        [H],
        "equiv:semi_left_pp,semi_right_pp,semi_left_pq,semi_right_pq",
        "for H-semicommutative rings the semi p.p. and semi p.q. conditions coincide",
    ),
    _imp(
        "h_semi_baer_iff_semi_quasi_baer",
        [H],
        "equiv:semi_baer,semi_quasi_baer",
        "for H-semicommutative rings semi-Baer and semi-quasi-Baer coincide",
    ),
    _imp(
        "armendariz_h_iff_polynomial_h",
        ["armendariz_bounded(2)"],
        "equiv:h_semicommutative,polyext_h(2)",
        "for Armendariz rings (degree 2 surrogate) R is H-semicommutative iff the degree-2 polynomial test passes",
    ),
)

SPECIAL_CHECKS = ("corner_biconditional", "reduced_ideal_lifting")

SUITE_IDS = tuple(i.id for i in IMPLICATIONS) + SPECIAL_CHECKS

# rings above this size skip the ideal-by-ideal quotient check
LIFTING_SIZE_LIMIT = 64


# -- atoms -------------------------------------------------------------------


def _opposite(R: FiniteRing) -> FiniteRing:
    if "opposite" not in R.memo:
        R.memo["opposite"] = opposite_ring(R)
    return R.memo["opposite"]


def _nil_quotient(R: FiniteRing) -> FiniteRing | None:
    if "nil_quotient" not in R.memo:
        nil = st.nil_mask(R)
        try:
            R.memo["nil_quotient"] = quotient_ring(R, nil, name=f"{R.name}/Nil")[0]
        except RingError:
            R.memo["nil_quotient"] = None
    return R.memo["nil_quotient"]


def _all(R, names) -> Verdict:
    for name in names:
        v = atom(R, name)
        if not v.ok:
            return v
    return Verdict.holds()


def atom(R: FiniteRing, name: str) -> Verdict:
    """Verdict for a property id or one of the derived conditions used by the suite."""
    key = ("atom", name)
    if key in R.memo:
        return R.memo[key]
    v = _atom(R, name)
    R.memo[key] = v
    return v


def _atom(R: FiniteRing, name: str) -> Verdict:
    if name.startswith("equiv:"):
        return _equivalence(R, name[6:].split(","))
    if name.startswith("nil_quotient:"):
        Q = _nil_quotient(R)
        if Q is None:
            return Verdict.not_applicable("Nil(R) is not an ideal")
        return atom(Q, name.split(":", 1)[1])
    if name == "nil_ring":
        nil = st.nil_mask(R)
        if nil.all():
            return Verdict.holds()
        return Verdict.fails([("x", int(np.argmin(nil)))], "x is not nilpotent")
    if name == "semiprime":
        P = st.prime_radical_mask(R)
        if P[1:].any():
            return Verdict.fails([("x", int(np.argmax(P[1:])) + 1)], "x is a nonzero element of P(R)")
        return Verdict.holds()
    if name == "all_P":
        if all_satisfy_P(R):
            return Verdict.holds()
        x = next(x for x in range(R.size) if not st.power_profile(R, x).satisfies_P)
        return Verdict.fails([("x", x)], "no n >= 2 with x^n = x")
    if name == "gw_gp_left":
        return _all(R, ["gw_maximal_left", "gp_v_prime_left"])
    if name == "gw_gp_right":
        if not R.is_unital:
            return Verdict.not_applicable("needs a unity")
        return _all(_opposite(R), ["gw_maximal_left", "gp_v_prime_left"])
    if name == "polyext_h(2)":
        return _budgeted(lambda: polyext_h_check(R, 2))
    if name.startswith("armendariz_bounded"):
        return _budgeted(lambda: check_property(R, name))
    return check_property(R, name)


def _budgeted(run) -> Verdict:
    try:
        return run()
    except SizeCapExceeded as exc:
        return Verdict.not_applicable(f"over budget: {exc}")


def _equivalence(R, names) -> Verdict:
    verdicts = [(n, atom(R, n)) for n in names]
    statuses = {v.status for _, v in verdicts}
    if Status.NOT_APPLICABLE in statuses:
        return Verdict.not_applicable(", ".join(f"{n}: {v.status.value}" for n, v in verdicts))
    if len(statuses) == 1:
        return Verdict.holds(f"all {statuses.pop().value}")
    held = next(n for n, v in verdicts if v.ok)
    failed, fv = next((n, v) for n, v in verdicts if v.failed)
    return Verdict.fails(fv.witness, f"{held} holds but {failed} fails", held=held, failed=failed)


# -- evaluation ----------------------------------------------------------------


def evaluate(R: FiniteRing, imp: Implication) -> Verdict:
    seen = {}
    for a in imp.antecedents:
        v = atom(R, a)
        seen[a] = v.status.value
        if v.status is Status.NOT_APPLICABLE:
            return Verdict.not_applicable(f"{a}: {v.trace}")
        if v.failed:
            return Verdict.holds(f"vacuous: {a} fails", antecedents=seen)
    c = atom(R, imp.consequent)
    if c.status is Status.NOT_APPLICABLE:
        return Verdict.not_applicable(f"{imp.consequent}: {c.trace}")
    if c.failed:
        return Verdict.fails(
            c.witness,
            f"antecedents hold but {imp.consequent} fails: {c.trace}",
            antecedents=seen,
            consequent=c.status.value,
            **c.extra,
        )
    return Verdict.holds("antecedents and consequent hold", antecedents=seen)


def central_idempotents(R: FiniteRing) -> list[int]:
    ar = np.arange(R.size)
    idem = R.mul[ar, ar] == ar
    return [int(e) for e in np.flatnonzero(idem & st.center_mask(R))]


def corner_biconditional(R: FiniteRing) -> Verdict:
    """For abelian unital R: R is H iff eR and (1-e)R are, for each central idempotent e."""
    if not R.is_unital:
        return Verdict.not_applicable("corner rings are formed only in unital rings")
    if not check_property(R, "abelian").ok:
        return Verdict.holds("vacuous: abelian fails")
    whole = check_property(R, H).ok
    checked = 0
    for e in central_idempotents(R):
        if e in (0, R.one):
            continue
        f = int(R.add[R.one, R.neg[e]])
        parts = check_property(corner_ring(R, e), H).ok and check_property(corner_ring(R, f), H).ok
        checked += 1
        if parts != whole:
            return Verdict.fails(
                [("e", e)],
                f"R is {'' if whole else 'not '}H-semicommutative but the corners eR, (1-e)R "
                f"{'are' if parts else 'are not both'}",
            )
    return Verdict.holds(f"{checked} nontrivial central idempotents agree", idempotents=checked)


def reduced_ideal_lifting(R: FiniteRing) -> Verdict:
    """For every reduced principal ideal I with R/I H-semicommutative, R is H-semicommutative."""
    if R.size > LIFTING_SIZE_LIMIT:
        return Verdict.not_applicable(f"size {R.size} above the lifting limit {LIFTING_SIZE_LIMIT}")
    nil = st.nil_mask(R)
    seen = set()
    checked = 0
    whole = check_property(R, H).ok
    for x in range(1, R.size):
        I = st.principal_ideal_mask(R, x, "two_sided")
        key = I.tobytes()
        if key in seen or (I & nil)[1:].any():
            seen.add(key)
            continue
        seen.add(key)
        Q, _ = quotient_ring(R, I)
        checked += 1
        if check_property(Q, H).ok and not whole:
            return Verdict.fails([("x", x)], "the ideal generated by x is reduced and R/I is H-semicommutative, R is not")
    return Verdict.holds(f"{checked} reduced principal ideals checked", ideals=checked)


_SPECIAL = {"corner_biconditional": corner_biconditional, "reduced_ideal_lifting": reduced_ideal_lifting}


def run_implication_suite(catalog, checks=None) -> list[Report]:
    """One report per (ring, check), ordered by ring name then check id."""
    wanted = SUITE_IDS if checks is None else tuple(checks)
    imps = {i.id: i for i in IMPLICATIONS}
    reports = []
    for entry in catalog:
        R = entry.ring
        for cid in wanted:
            t0 = time.perf_counter()
            if cid in imps:
                v = evaluate(R, imps[cid])
                prop = imps[cid].consequent
            else:
                v = _SPECIAL[cid](R)
                prop = None
            ms = (time.perf_counter() - t0) * 1000
            reports.append(make_report(R, entry.name, cid, prop, v, ms))
    reports.sort(key=lambda r: (r.ring, r.check))
    return reports


def violations(reports: list[Report]) -> list[Report]:
    return [r for r in reports if r.verdict == Status.FAILS.value]


# -- construction claims -------------------------------------------------------

# families whose literal sums are claimed to be H-semicommutative and not central
# semicommutative over an H-semicommutative base
_H_NOT_CENTRAL = ("S_prime_n", "U_n", "A_n", "T_prime_R_n")
_REDUCED_CENTRAL = ("T_R_n", "A_n", "U_n")
_SUBSETS_OF_S_PRIME = ("A_n", "U_n", "T_prime_R_n")

CLAIM_SCAN_LIMIT = 512


def _finding(subject, claim, observed, witness=()) -> Finding:
    return Finding(subject, claim, observed, "paper-discrepancy", tuple(witness))


def _note(subject, claim, observed) -> Finding:
    return Finding(subject, claim, observed, "note")


def _witness_labels(R, v: Verdict):
    return [f"{role}={R.labels[x]}" for role, x in v.witness]


def _claim(findings, S, prop, expect: bool, claim: str, limit: bool = False):
    if limit and S.size > CLAIM_SCAN_LIMIT:
        findings.append(_note(S.name, claim, f"not checked: {S.size} elements exceeds the scan limit"))
        return
    v = check_property(S, prop)
    if v.status is Status.NOT_APPLICABLE:
        findings.append(_note(S.name, claim, f"not applicable: {v.trace}"))
    elif v.ok != expect:
        findings.append(_finding(S.name, claim, f"{prop} {v.status.value}", _witness_labels(S, v)))


def construction_findings(R: FiniteRing, ns=(2, 3), cap: int = DEFAULT_SIZE_CAP) -> tuple[dict, list[Finding]]:
    """Build every family over R and compare each build against the stated claims."""
    built: dict[tuple[str, int], FiniteRing] = {}
    findings: list[Finding] = []
    base_h = check_property(R, H).ok
    base_reduced = check_property(R, "reduced").ok
    base_nil2 = check_property(R, "nil_semicommutative_2").ok
    for n in ns:
        for fam in FAMILIES:
            subject = f"{FAMILY_KEYWORDS[fam]}({R.name},{n})"
            try:
                S = build_matrix_subring(fam, R, n, cap)
            except ConstructionNotARing as exc:
                findings.append(_finding(subject, "the literal element set is a ring", str(exc), exc.witness))
                continue
            except SizeCapExceeded as exc:
                findings.append(_note(subject, "build within the size cap", str(exc)))
                continue
            built[(fam, n)] = S
            if fam == "T_n":
                _claim(findings, S, H, False, "T_n(R) is not H-semicommutative")
                if base_nil2:
                    _claim(findings, S, "nil_semicommutative_2", True, "T_n(R) is nil-semicommutative-II", True)
            if base_h and fam in _H_NOT_CENTRAL:
                _claim(findings, S, H, True, f"{fam}(R) is H-semicommutative")
                _claim(findings, S, "central_semicommutative", False, f"{fam}(R) is not central semicommutative")
            if base_h and fam == "B_n":
                _claim(findings, S, H, True, "B_n(R) is H-semicommutative")
                if n in (2, 3):
                    _claim(findings, S, "central_semicommutative", False, "B_n(R) is not central semicommutative")
            if base_reduced and fam in _REDUCED_CENTRAL:
                _claim(findings, S, "central_semicommutative", True, f"{fam}(R) is central semicommutative", True)
        whole = built.get(("S_prime_n", n))
        if whole is None:
            continue
        ambient = {e.tobytes() for e in whole.matrix.entries}
        for fam in _SUBSETS_OF_S_PRIME:
            S = built.get((fam, n))
            if S is not None and not all(e.tobytes() in ambient for e in S.matrix.entries):
                findings.append(_finding(S.name, f"{fam}(R) is a subset of S'_n(R)", "element outside S'_n(R)"))
    return built, findings
