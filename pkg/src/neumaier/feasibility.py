"""Arithmetic feasibility tests for (strictly) Neumaier parameter tuples.

A parameter tuple is (v, k, lambda; e, s): an edge-regular graph on v
vertices of degree k in which adjacent pairs share lambda neighbours,
carrying an e-regular clique of size s. The checkers below encode the
known necessary conditions; `enumerate_feasible` lists every tuple that
survives all of them up to a vertex bound and annotates each row with the
two complement-counting exclusions.

Verdict reasons carry stable identifiers so regression tests can pin the
reason, not just the status:

  ERG.i    v - 2k + lambda >= 0
  ERG.ii   lambda * k even
  ERG.iii  v * k * lambda divisible by 6
  ERG.vk   v * k even
  NEU.i    k - s + e - lambda - 1 >= 0
  NEU.ii   s(k - s + 1) = (v - s) e
  NEU.iii  s(s - 1)(lambda - s + 2) = (v - s) e (e - 1)
  STR.i    s >= 4
  STR.ii   e <= k - 2
  STR.iii  v not in {2k - lambda, 2k - lambda + 1}
  STR.iv   k - s + e - lambda - 1 >= 1
  COR32.D<0, COR32.D=0   sign cases of D = (v-k-1)(v-k-2) - k(v-2k+lambda)
  THM33    membership in the excluded family (6l+3, 4l+2, 3l; l+1, 2l+1), l >= 3
"""

from dataclasses import dataclass, field

INFEASIBLE = "infeasible"
ONLY_SRG = "srg_only"
OPEN = "open"


@dataclass(frozen=True, order=True)
class NeumaierParams:
    v: int
    k: int
    lam: int
    e: int
    s: int

    def validate(self) -> None:
        if not 1 <= self.e <= self.s - 1:
            raise ValueError(f"e = {self.e} outside 1..s-1 for s = {self.s}")
        if not self.k < self.v - 1:
            raise ValueError(f"k = {self.k} must be < v - 1 = {self.v - 1}")
        if not self.s - 2 <= self.lam < self.k:
            raise ValueError(f"lambda = {self.lam} outside s-2..k-1")

    def as_tuple(self) -> tuple:
        return (self.v, self.k, self.lam, self.e, self.s)


@dataclass
class Verdict:
    status: str
    reasons: list = field(default_factory=list)  # (identifier, human-readable)

    def fail(self, code: str, text: str) -> None:
        self.status = INFEASIBLE
        self.reasons.append((code, text))

    @property
    def ok(self) -> bool:
        return self.status == OPEN

    def reason_codes(self) -> list[str]:
        return [c for c, _ in self.reasons]


def erg_conditions(v: int, k: int, lam: int) -> Verdict:
    """Edge-regular graph conditions on (v, k, lambda)."""
    verdict = Verdict(OPEN)
    if v - 2 * k + lam < 0:
        verdict.fail("ERG.i", f"v - 2k + lambda = {v - 2 * k + lam} < 0")
    if (lam * k) % 2:
        verdict.fail("ERG.ii", f"lambda*k = {lam * k} is odd")
    if (v * k * lam) % 6:
        verdict.fail("ERG.iii", f"v*k*lambda = {v * k * lam} not divisible by 6")
    if (v * k) % 2:
        verdict.fail("ERG.vk", f"v*k = {v * k} is odd")
    return verdict


def neumaier_conditions(p: NeumaierParams) -> Verdict:
    """Counting identities every Neumaier parameter tuple must satisfy."""
    v, k, lam, e, s = p.as_tuple()
    verdict = Verdict(OPEN)
    if k - s + e - lam - 1 < 0:
        verdict.fail("NEU.i", f"k - s + e - lambda - 1 = {k - s + e - lam - 1} < 0")
    if s * (k - s + 1) != (v - s) * e:
        verdict.fail("NEU.ii", f"s(k-s+1) = {s * (k - s + 1)} != (v-s)e = {(v - s) * e}")
    if s * (s - 1) * (lam - s + 2) != (v - s) * e * (e - 1):
        verdict.fail("NEU.iii",
                     f"s(s-1)(lambda-s+2) = {s * (s - 1) * (lam - s + 2)}"
                     f" != (v-s)e(e-1) = {(v - s) * e * (e - 1)}")
    return verdict


def strict_conditions(p: NeumaierParams) -> Verdict:
    """Extra conditions that hold for strictly Neumaier parameter tuples."""
    v, k, lam, e, s = p.as_tuple()
    verdict = Verdict(OPEN)
    if s < 4:
        verdict.fail("STR.i", f"s = {s} < 4")
    if e > k - 2:
        verdict.fail("STR.ii", f"e = {e} > k - 2 = {k - 2}")
    if v in (2 * k - lam, 2 * k - lam + 1):
        verdict.fail("STR.iii", f"v = {v} in {{2k-lambda, 2k-lambda+1}}")
    if k - s + e - lam - 1 < 1:
        verdict.fail("STR.iv", f"k - s + e - lambda - 1 = {k - s + e - lam - 1} < 1")
    return verdict


def co_edge_defect(v: int, k: int, mu: int) -> int:
    """k(k-1) - mu(v-k-1) for a co-edge-regular graph.

    Negative: impossible. Zero: the graph is forced strongly regular.
    Two: every vertex lies in a unique triangle.
    """
    return k * (k - 1) - mu * (v - k - 1)


def complement_defect(v: int, k: int, lam: int) -> int:
    """D = (v-k-1)(v-k-2) - k(v-2k+lambda), the complement-side defect."""
    return (v - k - 1) * (v - k - 2) - k * (v - 2 * k + lam)


def corollary_complement_test(v: int, k: int, lam: int) -> Verdict:
    """Complement counting bound: D < 0 kills the tuple, D = 0 forces SRG."""
    d = complement_defect(v, k, lam)
    if d < 0:
        return Verdict(INFEASIBLE, [("COR32.D<0", f"complement defect D = {d} < 0")])
    if d == 0:
        return Verdict(ONLY_SRG, [("COR32.D=0", "complement defect D = 0 forces strong regularity")])
    return Verdict(OPEN)


def theorem_family_6l3(p: NeumaierParams) -> bool:
    """True iff p lies in the excluded family (6l+3, 4l+2, 3l; l+1, 2l+1), l >= 3."""
    if p.v % 6 != 3:
        return False
    l = (p.v - 3) // 6
    return l >= 3 and p.as_tuple() == (6 * l + 3, 4 * l + 2, 3 * l, l + 1, 2 * l + 1)


# Known constructions from the literature for rows of the v <= 64 table.
KNOWN_CONSTRUCTIONS = {
    (16, 9, 4, 2, 4): "yes",
    (24, 8, 2, 1, 4): "yes",
    (28, 9, 2, 1, 4): "yes",
    (40, 12, 2, 1, 4): "yes",
    (52, 15, 2, 1, 4): "yes",
}


@dataclass(frozen=True)
class FeasibleRow:
    params: NeumaierParams
    verdict: Verdict
    known_construction: str  # "yes" or "unknown" (bibliographic, not computed)


def enumerate_feasible(v_max: int) -> list[FeasibleRow]:
    """All tuples with v <= v_max passing the erg/neumaier/strict conditions,
    ordered by (v, k, lambda, e, s), annotated with the complement-defect
    and excluded-family verdicts."""
    if v_max < 5:
        raise ValueError("v_max must be at least 5")
    rows = []
    for v in range(5, v_max + 1):
        for k in range(3, v - 1):
            if (v * k) % 2:
                continue
            for s in range(4, k + 2):
                for e in range(1, s):
                    # the two counting identities pin lambda before any scan
                    if s * (k - s + 1) != (v - s) * e:
                        continue
                    num = (v - s) * e * (e - 1)
                    den = s * (s - 1)
                    if num % den:
                        continue
                    lam = s - 2 + num // den
                    if not s - 2 <= lam < k:
                        continue
                    params = NeumaierParams(v, k, lam, e, s)
                    if not (erg_conditions(v, k, lam).ok
                            and neumaier_conditions(params).ok
                            and strict_conditions(params).ok):
                        continue
                    verdict = corollary_complement_test(v, k, lam)
                    if theorem_family_6l3(params):
                        verdict = Verdict(INFEASIBLE,
                                          verdict.reasons + [("THM33", "excluded family (6l+3,4l+2,3l;l+1,2l+1)")])
                    known = KNOWN_CONSTRUCTIONS.get(params.as_tuple(), "unknown")
                    rows.append(FeasibleRow(params, verdict, known))
    rows.sort(key=lambda r: r.params.as_tuple())
    return rows
