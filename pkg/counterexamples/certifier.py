"""
Sound, incomplete certificates that a nonnegative flag does not extend

An extension problem adjoins one vector v = P z to a base subspace. Every
Plücker coordinate of [base | v] is linear in z, so nonnegativity cuts out
a polyhedral cone C (the sign of v is free, and -C is handled by
symmetry). Pairings with the base are linear equalities, self-isotropy a
quadratic one.

The certifier keeps z = T y and shrinks y one forced equality at a time:

    1. a pairing with a base vector
    2. two forms f, g with f + lambda g = 0 for a constant lambda > 0
    3. a self-isotropy form whose terms all have one known weak sign
    4. a form g for which {forms >= 0, g >= 1} is infeasible (Fourier-Motzkin)

Each equality is solved for a variable with a constant coefficient. When
nothing is left of y the problem is ProvenNoExtension; otherwise Unknown,
which proves nothing.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from algebra.flags import Flag, intersect_with_interval
from algebra.forms import BilinearForm
from algebra.fourier_motzkin import FMECapError, Inequality, is_infeasible
from algebra.matrix import ExactMatrix
from algebra.plucker import plucker_vector
from algebra.symbolic import Entry, constant_value, entry, is_constant
from algebra.scalar import ONE, ZERO, QuadScalar
from config.settings import CERTIFIER_MAX_ROUNDS, FEATURES, FME_ROW_CAP
from counterexamples.constructions import Construction
from counterexamples.hints import HintError, ProofHint
from positivity.reports import Report
from positivity.sampling import make_rng, signed_rationals

logger = logging.getLogger(__name__)

PROVEN = "ProvenNoExtension"
UNKNOWN = "Unknown"

LinearForm = Tuple[Entry, ...]


def _is_unit_constant(p: Entry) -> bool:
    return is_constant(p) and not p.is_zero()


def pivot_rows(base: ExactMatrix) -> Tuple[int, ...]:
    """First row subset (1-based, lexicographic) on which base has a nonzero constant minor"""
    if base.n_cols == 0:
        return ()
    p = plucker_vector(base)
    for S in p.subsets():
        if _is_unit_constant(entry(p.coords[S])):
            return S
    raise ValueError(f"Base of shape {base.shape} has no nonzero constant maximal minor")


def complement_columns(base: ExactMatrix, upper: ExactMatrix) -> ExactMatrix:
    """Columns of upper that are independent modulo the column span of base"""
    N = base.n_rows
    kept: List[tuple] = []
    current = list(base.columns())
    rank = ExactMatrix.from_columns(current, n_rows=N).rank()
    for col in upper.columns():
        trial = ExactMatrix.from_columns(current + [col], n_rows=N).rank()
        if trial > rank:
            current.append(col)
            kept.append(col)
            rank = trial
    return ExactMatrix.from_columns(kept, n_rows=N)


@dataclass(frozen=True)
class ExtensionProblem:
    """
    Adjoin v = directions @ z to base. Unbounded problems normalize v to
    vanish on the pivot rows of base; bounded ones keep v inside the next
    known subspace.
    """
    base: ExactMatrix
    form: BilinearForm
    directions: ExactMatrix
    name: str = ""
    bounded: bool = False

    @classmethod
    def unbounded(cls, base: ExactMatrix, form: BilinearForm, name: str = "") -> ExtensionProblem:
        N = base.n_rows
        S = pivot_rows(base)
        identity = ExactMatrix.identity(N)
        directions = identity.submatrix(range(N), [j for j in range(N) if j + 1 not in S])
        return cls(base, form, directions, name, False)

    @classmethod
    def bounded(cls, base: ExactMatrix, upper: ExactMatrix, form: BilinearForm, name: str = "") -> ExtensionProblem:
        return cls(base, form, complement_columns(base, upper), name, True)

    @property
    def ambient(self) -> int:
        return self.base.n_rows

    @property
    def target_rank(self) -> int:
        return self.base.n_cols + 1

    @property
    def dimension(self) -> int:
        return self.directions.n_cols

    def direction(self, j: int) -> ExactMatrix:
        return self.directions.submatrix(range(self.ambient), [j])

    def linear_forms(self) -> List[Tuple[Tuple[int, ...], LinearForm]]:
        """(row subset, coefficients in z) for every Plücker coordinate of [base | v] that is not identically 0"""
        per_direction = [plucker_vector(self.base.hstack(self.direction(j))) for j in range(self.dimension)]
        forms = []
        for S in combinations(range(1, self.ambient + 1), self.target_rank):
            coeffs = tuple(entry(p.coords[S]) for p in per_direction)
            if any(coeffs):
                forms.append((S, coeffs))
        return forms

    def bilinear_constraints(self) -> List[LinearForm]:
        """Pairings of v with each base column"""
        directions = [self.directions.column(j) for j in range(self.dimension)]
        return [
            tuple(entry(self.form.pair(b, d)) for d in directions)
            for b in self.base.columns()
        ]

    def quadratic_constraint(self) -> Optional[List[List[Entry]]]:
        """Gram matrix of the directions; None for alternating forms, where v pairs to 0 with itself"""
        if not self.form.matrix.is_symmetric():
            return None
        directions = [self.directions.column(j) for j in range(self.dimension)]
        return [[entry(self.form.pair(a, b)) for b in directions] for a in directions]


@dataclass
class Certificate:
    problem: str
    target_rank: int
    verdict: str
    equalities: List[str] = field(default_factory=list)
    forced: List[LinearForm] = field(default_factory=list)
    residual: List[List[Entry]] = field(default_factory=list)
    residual_forms: List[LinearForm] = field(default_factory=list)

    @property
    def residual_dimension(self) -> int:
        return len(self.residual[0]) if self.residual else 0

    def to_dict(self) -> Dict:
        return {
            'problem': self.problem,
            'target_rank': self.target_rank,
            'verdict': self.verdict,
            'equalities': list(self.equalities),
            'residual_dimension': self.residual_dimension,
        }


class _Reduction:
    """z = T y; every surviving y is one of the original z coordinates"""

    def __init__(self, d: int) -> None:
        self.T = [[ONE if i == j else ZERO for j in range(d)] for i in range(d)]
        self.free = list(range(d))

    @property
    def dimension(self) -> int:
        return len(self.free)

    def apply(self, form: Sequence[Entry]) -> List[Entry]:
        return [
            sum((form[i] * self.T[i][a] for i in range(len(form)) if form[i] and self.T[i][a]), ZERO)
            for a in range(self.dimension)
        ]

    def usable(self, form: Sequence[Entry]) -> Optional[Tuple[List[Entry], int]]:
        """The form in y and a variable to solve for, when some coefficient is a nonzero constant"""
        y = self.apply(form)
        for a, c in enumerate(y):
            if _is_unit_constant(c):
                return y, a
        return None

    def substitute(self, y: List[Entry], k: int) -> None:
        """Solve y . (current y) = 0 for y_k"""
        qk = constant_value(y[k])
        self.T = [
            [row[j] - row[k] * y[j] / qk for j in range(self.dimension) if j != k]
            for row in self.T
        ]
        self.free.pop(k)

    def unit(self, a: int, d: int) -> LinearForm:
        z = self.free[a]
        return tuple(ONE if i == z else ZERO for i in range(d))

    def quadratic(self, gram: List[List[Entry]]) -> List[List[Entry]]:
        d, m = len(self.T), self.dimension
        gt = [[sum((gram[i][j] * self.T[j][b] for j in range(d) if gram[i][j] and self.T[j][b]), ZERO)
               for b in range(m)] for i in range(d)]
        return [[sum((self.T[i][a] * gt[i][b] for i in range(d) if self.T[i][a] and gt[i][b]), ZERO)
                 for b in range(m)] for a in range(m)]


# ============================================================================
# EQUALITY FINDERS
# ============================================================================

Found = Tuple[str, LinearForm, List[Entry], int]


def _from_pairings(state: _Reduction, pairings: List[LinearForm]) -> Optional[Found]:
    for idx, p in enumerate(pairings):
        hit = state.usable(p)
        if hit:
            return (f"pairing with base vector {idx + 1}", p, *hit)
    return None


def _from_opposite_pairs(state: _Reduction, forms: List[Tuple[Tuple[int, ...], LinearForm]]) -> Optional[Found]:
    live = []
    for S, zf in forms:
        y = state.apply(zf)
        if any(y):
            live.append((S, zf, y))
    for i, (S, zf, f) in enumerate(live):
        a = next(t for t, c in enumerate(f) if c)
        if not is_constant(f[a]):
            continue
        for T_, _, g in live[i + 1:]:
            if not g[a] or not is_constant(g[a]):
                continue
            lam = -(constant_value(f[a]) / constant_value(g[a]))
            if lam.sign() <= 0:
                continue
            if all(not (fc + gc * lam) for fc, gc in zip(f, g)):
                hit = state.usable(zf)
                if hit:
                    return (f"P{S} and P{T_} have opposite signs", zf, *hit)
    return None


def _known_signs(state: _Reduction, forms: List[Tuple[Tuple[int, ...], LinearForm]]) -> Dict[int, int]:
    signs: Dict[int, int] = {}
    for _, zf in forms:
        y = state.apply(zf)
        nonzero = [a for a, c in enumerate(y) if c]
        if len(nonzero) == 1 and is_constant(y[nonzero[0]]):
            a = nonzero[0]
            signs.setdefault(a, constant_value(y[a]).sign())
    return signs


def _from_quadratic(state: _Reduction, forms, gram) -> Optional[Found]:
    if gram is None:
        return None
    Q = state.quadratic(gram)
    signs = _known_signs(state, forms)
    m = state.dimension
    term_signs, squares = set(), []
    for a in range(m):
        for b in range(a, m):
            c = Q[a][a] if a == b else Q[a][b] + Q[b][a]
            if not c:
                continue
            if not is_constant(c):
                return None
            s = constant_value(c).sign()
            if a == b:
                squares.append(a)
            elif a in signs and b in signs:
                s *= signs[a] * signs[b]
            else:
                return None
            term_signs.add(s)
    if len(term_signs) != 1 or not squares:
        return None
    a = squares[0]
    zf = state.unit(a, len(state.T))
    y = [ONE if t == a else ZERO for t in range(m)]
    return (f"self-isotropy forces z{state.free[a] + 1} = 0", zf, y, a)


def _from_fourier_motzkin(state: _Reduction, forms) -> Optional[Found]:
    if not FEATURES.get("fme_fallback", True):
        return None
    constant = []
    for S, zf in forms:
        y = state.apply(zf)
        if any(y) and all(is_constant(c) for c in y):
            constant.append((S, zf, [constant_value(c) for c in y]))
    rows = [Inequality.of(y) for _, _, y in constant]
    for S, zf, y in constant:
        try:
            if not is_infeasible(rows + [Inequality.of(y, -1)], FME_ROW_CAP):
                continue
        except FMECapError as e:
            logger.warning(f"Fourier-Motzkin gave up: {e}")
            return None
        hit = state.usable(zf)
        if hit:
            return (f"P{S} >= 1 is infeasible", zf, *hit)
    return None


def no_extension_certificate(problem: ExtensionProblem) -> Certificate:
    """ProvenNoExtension when the forced equalities leave no direction for v; Unknown otherwise"""
    forms = problem.linear_forms()
    pairings = problem.bilinear_constraints()
    gram = problem.quadratic_constraint()
    state = _Reduction(problem.dimension)
    cert = Certificate(problem.name, problem.target_rank, UNKNOWN)

    for _ in range(CERTIFIER_MAX_ROUNDS):
        if state.dimension == 0:
            break
        found = (
            _from_pairings(state, pairings)
            or _from_opposite_pairs(state, forms)
            or _from_quadratic(state, forms, gram)
            or _from_fourier_motzkin(state, forms)
        )
        if found is None:
            break
        label, zf, y, k = found
        logger.debug(f"{problem.name} rank {problem.target_rank}: {label}")
        state.substitute(y, k)
        cert.equalities.append(label)
        cert.forced.append(zf)
    else:
        logger.warning(f"{problem.name}: certifier stopped after {CERTIFIER_MAX_ROUNDS} rounds")

    if state.dimension == 0:
        cert.verdict = PROVEN
    else:
        P = problem.directions
        cert.residual = [
            [sum((entry(P[r, j]) * state.T[j][a] for j in range(problem.dimension) if P[r, j]), ZERO)
             for a in range(state.dimension)]
            for r in range(problem.ambient)
        ]
        cert.residual_forms = [tuple(state.apply(zf)) for _, zf in forms]
    logger.info(f"{problem.name} rank {problem.target_rank}: {cert.verdict} "
                f"({len(cert.equalities)} equalities, residual {cert.residual_dimension})")
    return cert


# ============================================================================
# PIPELINE
# ============================================================================

def gap_blocks(ranks: Sequence[int], n: int) -> List[Tuple[int, Optional[int]]]:
    """(l, u) for each run of missing ranks in [n]; u is None above the top known rank"""
    known = [0] + sorted(k for k in ranks if k <= n)
    blocks = [(a, b) for a, b in zip(known, known[1:]) if b > a + 1]
    if known[-1] < n:
        blocks.append((known[-1], None))
    return blocks


def _forced_direction(cert: Certificate) -> Optional[ExactMatrix]:
    """The single residual direction, signed so the Plücker forms are nonnegative"""
    if cert.residual_dimension != 1:
        return None
    column = [row[0] for row in cert.residual]
    if not all(is_constant(c) for c in column):
        return None
    signs = {constant_value(f[0]).sign() for f in cert.residual_forms if f[0] and is_constant(f[0])}
    if signs == {1, -1}:
        return None
    flip = -1 if signs == {-1} else 1
    return ExactMatrix.from_columns([[constant_value(c) * flip for c in column]])


def certify_flag(F: Flag, form: BilinearForm, n: int, name: str = "") -> List[Certificate]:
    """
    Certificates for the first missing rank of every gap, stepping along
    forced one-dimensional extensions; the last one is PROVEN on success
    """
    certificates: List[Certificate] = []
    for l, u in gap_blocks(F.ranks, n):
        base = F.subspace(l)
        upper = F.subspace(u) if u is not None else None
        top = u - 1 if u is not None else n
        for _ in range(l + 1, top + 1):
            label = f"{name} gap ({l}, {u if u is not None else 'top'})"
            if upper is not None:
                problem = ExtensionProblem.bounded(base, upper, form, label)
            else:
                problem = ExtensionProblem.unbounded(base, form, label)
            cert = no_extension_certificate(problem)
            certificates.append(cert)
            if cert.verdict == PROVEN:
                return certificates
            v = _forced_direction(cert) if FEATURES.get("chain_stepping", True) else None
            if v is None:
                break
            logger.debug(f"{label}: stepping along the forced direction to rank {base.n_cols + 1}")
            base = base.hstack(v)
    return certificates


def top_problem(c: Construction) -> ExtensionProblem:
    """Adjoin one vector above the top rank of the construction"""
    F = c.flag
    return ExtensionProblem.unbounded(F.subspace(max(c.ranks)), c.descriptor.form, c.name)


def interval_for(c: Construction) -> Tuple[int, int]:
    n = c.descriptor.n
    return (n - 2, n + 3) if c.descriptor.system == "C" else (n - 2, n + 4)


def reduce_by_interval_then_certify(c: Construction) -> Report:
    """
    Intersect a case (ii) flag with the consecutive coordinate interval
    around the middle row; the ranks of the intersection contain 1 and 3, so
    an extension would extend the rank-1 piece to rank 2 there
    """
    a, b = interval_for(c)
    report = Report("reduce-by-interval", {"name": c.name, "interval": [a, b]})
    if c.case != "case_ii":
        report.add("construction is a case (ii) family member", False, c.case)
        return report
    F = intersect_with_interval(c.flag, a, b)
    applicable = {1, 3} <= set(F.ranks)
    report.add("intersected ranks contain 1 and 3", applicable, list(F.ranks))
    if not applicable:
        return report
    gram = c.descriptor.form.matrix.submatrix(range(a - 1, b), range(a - 1, b))
    problem = ExtensionProblem.unbounded(F.subspace(1), BilinearForm.custom(gram), f"{c.name} on [{a}, {b}]")
    cert = no_extension_certificate(problem)
    report.add("rank 1 of the intersection does not extend to rank 2", cert.verdict == PROVEN, cert.to_dict())
    return report


# ============================================================================
# HINTED CASE SPLITS
# ============================================================================

def _vanishes(values) -> bool:
    return all(not entry(v) for v in values)


def certify_with_hints(c: Construction, hint: ProofHint) -> Report:
    """
    Every branch of the scripted split satisfies the forced equalities and
    isotropy identically, and the next rank is impossible on each branch

    Raises:
        HintError: the hint does not fit the construction
    """
    report = Report("certify-hints", {"name": c.name, "rank": hint.rank})
    F, form = c.flag, c.descriptor.form
    if hint.rank - 1 != max(c.ranks):
        raise HintError(f"{c.name}: hints split at the rank above the top rank {max(c.ranks)}, got {hint.rank}")
    base = F.subspace(hint.rank - 1)
    problem = ExtensionProblem.unbounded(base, form, c.name)
    direct = no_extension_certificate(problem)
    report.add(f"direct certificate at rank {hint.rank} leaves a residual family",
               direct.verdict == UNKNOWN, direct.to_dict())
    S = set(pivot_rows(base))
    free_rows = [r for r in range(F.ambient) if r + 1 not in S]

    for branch in hint.branches:
        v = list(branch.vector)
        if len(v) != F.ambient:
            raise HintError(f"{c.name}: branch '{branch.name}' has {len(v)} entries, expected {F.ambient}")
        tag = f"branch {branch.name}"
        report.add(f"{tag}: vanishes on the pivot rows {sorted(S)}",
                   _vanishes(v[r - 1] for r in S))
        z = [v[r] for r in free_rows]
        report.add(f"{tag}: satisfies the forced equalities",
                   _vanishes(sum((f[j] * z[j] for j in range(len(z))), ZERO) for f in direct.forced))
        report.add(f"{tag}: isotropic to the base", _vanishes(form.pair(b, v) for b in base.columns()))
        if form.matrix.is_symmetric():
            report.add(f"{tag}: isotropic", _vanishes([form.pair(v, v)]))
        extended = base.hstack(ExactMatrix.from_columns([v]))
        cert = no_extension_certificate(ExtensionProblem.unbounded(extended, form, f"{c.name} {tag}"))
        report.add(f"{tag}: rank {hint.rank + 1} does not extend", cert.verdict == PROVEN, cert.to_dict())
    logger.warning(f"{c.name}: certified with a scripted case split ({len(hint.branches)} branches)")
    return report


def certify_construction(c: Construction, hints: Optional[Dict[str, ProofHint]] = None) -> Report:
    """
    Run the certifier pipeline: the direct gap-by-gap certificate, then the
    interval reduction for case (ii), then a scripted split if one exists.
    The descriptor records the verdict and the method that produced it.
    """
    report = Report("certify", {"name": c.name, **c.descriptor.to_json_dict(), "K": list(c.ranks)})
    certificates = certify_flag(c.flag, c.descriptor.form, c.descriptor.n, c.name)
    proven = bool(certificates) and certificates[-1].verdict == PROVEN
    report.add("direct certificate", proven, [cert.to_dict() for cert in certificates])
    method = "direct" if proven else None

    if not proven and c.case == "case_ii":
        reduced = reduce_by_interval_then_certify(c)
        report.extend(reduced, prefix="interval: ")
        if reduced.passed:
            method = "interval"

    hint = (hints or {}).get(c.name)
    if method is None and hint is not None and FEATURES.get("proof_hints", True):
        hinted = certify_with_hints(c, hint)
        report.extend(hinted, prefix="hints: ")
        if all(check.passed for check in hinted.checks):
            method = "hints"

    report.descriptor["verdict"] = PROVEN if method else UNKNOWN
    report.descriptor["method"] = method
    report.descriptor["used_hints"] = method == "hints"
    logger.info(f"certify {c.name}: {report.descriptor['verdict']} via {method}")
    return report


def certified(report: Report) -> bool:
    return report.descriptor.get("verdict") == PROVEN


# ============================================================================
# FALSIFICATION
# ============================================================================

def falsify(problem: ExtensionProblem, trials: int, seed: int) -> Report:
    """
    Random candidates v in the pairing kernel; a candidate that is
    sign-coherent on every Plücker form and self-isotropic would refute a
    ProvenNoExtension
    """
    report = Report("falsify", {"problem": problem.name, "target_rank": problem.target_rank}, seed, trials)
    forms = [[constant_value(c) for c in zf] for _, zf in problem.linear_forms()]
    pairing_rows = [[constant_value(c) for c in p] for p in problem.bilinear_constraints()]
    gram = problem.quadratic_constraint()
    d = problem.dimension
    kernel = ExactMatrix(pairing_rows, n_cols=d).kernel() if pairing_rows else ExactMatrix.identity(d)
    satisfying = []
    for index in range(trials):
        if kernel.n_cols == 0:
            break
        w = signed_rationals(make_rng(seed, index), kernel.n_cols)
        z = kernel.apply(w)
        values = {sum((c * x for c, x in zip(f, z)), QuadScalar()).sign() for f in forms}
        if 1 in values and -1 in values:
            continue
        if gram is not None:
            q = sum((constant_value(gram[i][j]) * z[i] * z[j] for i in range(d) for j in range(d)), QuadScalar())
            if not q.is_zero():
                continue
        satisfying.append([str(x) for x in z])
    report.add("no random candidate satisfies every constraint", not satisfying, satisfying[:5] or None)
    logger.info(f"falsify {problem.name}: {len(satisfying)} of {trials} candidates satisfy the constraints")
    return report
