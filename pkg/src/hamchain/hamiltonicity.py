"""Linear-time Hamiltonicity decisions for threshold and chain graphs.

Both decisions work directly on the run-length form and run in time linear
in the number of levels: the suffix-sum inequalities are checked from the
top level downward with running sums, stopping at the first failure.
Every verdict carries a machine-readable reason code plus the intermediate
quantities that produced it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Optional

from .errors import ReductionNotApplicableError
from .graph import DegreeProfile
from .sequence import GeneratingSequence

if TYPE_CHECKING:
    from .oracle import HamiltonCycle

TOO_FEW_VERTICES = "TOO_FEW_VERTICES"
SMALL_CASE_R0 = "SMALL_CASE_R0"
SMALL_CASE_R1 = "SMALL_CASE_R1"
CLIQUE_TOO_SMALL = "CLIQUE_TOO_SMALL"
ZERO_DEGREE_IN_CLIQUE = "ZERO_DEGREE_IN_CLIQUE"
UNEQUAL_CLASSES = "UNEQUAL_CLASSES"
PENDANT_STRUCTURE = "PENDANT_STRUCTURE"
INEQUALITY_FAILED = "INEQUALITY_FAILED"
ELL_PLUS_ONE_EQUALS_H = "ELL_PLUS_ONE_EQUALS_H"
INEQUALITIES_HOLD = "INEQUALITIES_HOLD"

REASON_CODES = (
    TOO_FEW_VERTICES,
    SMALL_CASE_R0,
    SMALL_CASE_R1,
    CLIQUE_TOO_SMALL,
    ZERO_DEGREE_IN_CLIQUE,
    UNEQUAL_CLASSES,
    PENDANT_STRUCTURE,
    INEQUALITY_FAILED,
    ELL_PLUS_ONE_EQUALS_H,
    INEQUALITIES_HOLD,
)

# Codes that can accompany a positive verdict.
POSITIVE_REASONS = frozenset(
    {SMALL_CASE_R0, SMALL_CASE_R1, ELL_PLUS_ONE_EQUALS_H, INEQUALITIES_HOLD}
)


@dataclass(frozen=True)
class Verdict:
    """Hamiltonicity decision with its reason and intermediate values.

    For threshold graphs ``r``/``s`` are the co-clique and maximal-clique
    sizes; for chain graphs they are the two class sizes.  ``ell`` is the
    trimming level of the clique reduction, ``failed_j`` the first failing
    suffix-inequality index (scanning from the top level downward).  The
    witness cycle is only attached on request, via the oracle.
    """

    hamiltonian: bool
    reason: str
    r: int
    s: int
    T: int
    S: int
    ell: Optional[int] = None
    failed_j: Optional[int] = None
    witness: Optional["HamiltonCycle"] = None

    def as_dict(self) -> dict:
        return {
            "hamiltonian": self.hamiltonian,
            "reason": self.reason,
            "r": self.r,
            "s": self.s,
            "T": self.T,
            "S": self.S,
            "ell": self.ell,
            "failed_j": self.failed_j,
            "witness": list(self.witness.vertices) if self.witness is not None else None,
        }


def _least_ell(ss: tuple[int, ...], target: int) -> int:
    """The level count whose ones are fully eaten by trimming ``target``.

    0 when ``target < s_1``; otherwise the unique ell with
    ``s_1 + ... + s_ell <= target < s_1 + ... + s_{ell+1}``.
    """
    if target < ss[0]:
        return 0
    prefix = 0
    ell = 0
    for i, si in enumerate(ss, start=1):
        prefix += si
        if prefix <= target:
            ell = i
        else:
            break
    return ell


def _first_suffix_failure(ts, ss, j_start: int, slack: int) -> Optional[int]:
    """First j, scanning h down to ``j_start``, where the ones of levels
    j..h number fewer than the zeros of levels j..h plus ``slack``."""
    ssum = 0
    tsum = 0
    for j in range(len(ss), j_start - 1, -1):
        ssum += ss[j - 1]
        tsum += ts[j - 1]
        if ssum < tsum + slack:
            return j
    return None


def is_hamiltonian_threshold(seq: GeneratingSequence) -> Verdict:
    """Decide Hamiltonicity of the threshold graph of ``seq``.

    Runs in time linear in the number of levels: small co-cliques are
    special-cased, a too-small or degree-starved clique is rejected, and
    otherwise the graph is Hamiltonian iff the clique trimming eats all
    levels (ell + 1 = h) or every suffix of levels past the trimmed ones
    carries strictly more ones than zeros, exactly the balanced-chain
    criterion applied to the trimmed graph.
    """
    ts, ss = seq.zero_runs, seq.one_runs
    h = seq.h
    T, S = seq.zeros, seq.ones
    n = T + S
    r = T - 1
    s = S + 1

    if n < 3:
        return Verdict(False, TOO_FEW_VERTICES, r, s, T, S)
    if r == 0:
        return Verdict(s >= 3, SMALL_CASE_R0, r, s, T, S)
    if r == 1:
        # The lone non-absorbed zero sits at the top level: degree s_h.
        return Verdict(ss[-1] >= 2, SMALL_CASE_R1, r, s, T, S)

    t1, s1 = ts[0], ss[0]
    if (t1 != 1 and s <= r + 1) or (t1 == 1 and s <= r + s1 + 1):
        if s <= r:
            return Verdict(False, CLIQUE_TOO_SMALL, r, s, T, S)
        # r < s but the s-r smallest clique-side degrees include a zero.
        return Verdict(False, ZERO_DEGREE_IN_CLIQUE, r, s, T, S)

    ell = _least_ell(ss, s - r - 1)
    if ell + 1 == h:
        return Verdict(True, ELL_PLUS_ONE_EQUALS_H, r, s, T, S, ell=ell)
    failed = _first_suffix_failure(ts, ss, ell + 2, slack=1)
    if failed is not None:
        return Verdict(False, INEQUALITY_FAILED, r, s, T, S, ell=ell, failed_j=failed)
    return Verdict(True, INEQUALITIES_HOLD, r, s, T, S, ell=ell)


def is_hamiltonian_chain(seq: GeneratingSequence) -> Verdict:
    """Decide Hamiltonicity of the chain graph of ``seq``.

    Linear in the number of levels: the classes must be balanced and, for
    h >= 2, every suffix of levels j..h (j >= 2) must carry strictly more
    ones than zeros.  A pendant edge (t_1 = 1 or s_h = 1) is reported with
    its own code; the weaker boundary conditions t_1 >= s_1 + 1 and
    s_h >= t_h + 1 are exactly the j = 2 and j = h suffix inequalities and
    surface as those.
    """
    ts, ss = seq.zero_runs, seq.one_runs
    T, S = seq.zeros, seq.ones
    n = T + S

    if n < 3:
        return Verdict(False, TOO_FEW_VERTICES, T, S, T, S)
    if T != S:
        return Verdict(False, UNEQUAL_CLASSES, T, S, T, S)
    if ts[0] == 1 or ss[-1] == 1:
        # A level-1 one (or top-level zero) with a single neighbour.
        return Verdict(False, PENDANT_STRUCTURE, T, S, T, S)
    failed = _first_suffix_failure(ts, ss, 2, slack=1)
    if failed is not None:
        return Verdict(False, INEQUALITY_FAILED, T, S, T, S, failed_j=failed)
    return Verdict(True, INEQUALITIES_HOLD, T, S, T, S)


def reduce_to_g_star(seq: GeneratingSequence) -> GeneratingSequence:
    """Trim the clique surplus, preserving threshold Hamiltonicity.

    Removes s - r clique vertices: one absorbed zero and s - r - 1 ones
    eaten from the lowest levels.  Applicable when r >= 2 and the clique is
    large enough (s >= r + 2, or s >= r + s_1 + 2 when t_1 = 1); the result
    has equally many zeros and ones.
    """
    ts, ss = seq.zero_runs, seq.one_runs
    T, S = seq.zeros, seq.ones
    r = T - 1
    s = S + 1
    t1, s1 = ts[0], ss[0]
    if r < 2:
        raise ReductionNotApplicableError(f"reduction needs a co-clique of size >= 2, got r={r}")
    if (t1 != 1 and s <= r + 1) or (t1 == 1 and s <= r + s1 + 1):
        raise ReductionNotApplicableError(
            f"clique too small to trim (r={r}, s={s}, t_1={t1}, s_1={s1})"
        )
    ell = _least_ell(ss, s - r - 1)
    head = (sum(ts[: ell + 1]) - 1, sum(ss[: ell + 1]) - (s - r - 1))
    return GeneratingSequence((head,) + seq.runs[ell + 1 :])


def check_sq_system(profile: DegreeProfile, q: int) -> bool:
    """Check the q-th inequality system on a balanced chain graph profile.

    ``profile.d`` and ``profile.e`` are the class degree lists of a chain
    graph with equally sized classes (see ``chain_degree_profile``).  The
    system requires d_j >= j + 1 for j = 1..q and e_j >= j + 1 for
    j = 1..|U|-1-q.
    """
    d, e = profile.d, profile.e
    m = len(d)
    if len(e) != m or m < 2:
        raise ValueError("the inequality systems are defined for equal class sizes >= 2")
    if not 0 <= q <= m - 1:
        raise ValueError(f"q must be in 0..{m - 1}, got {q}")
    return all(d[j - 1] >= j + 1 for j in range(1, q + 1)) and all(
        e[j - 1] >= j + 1 for j in range(1, m - q)
    )
