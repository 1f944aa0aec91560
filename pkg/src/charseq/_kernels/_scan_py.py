"""Pure-Python scan kernel: reference implementation and import-time fallback.

Both backends share one contract.  A kernel is built from compiled
condition tuples and classifies every integer k in a range as a certain
hit (all conditions certainly hold), a certain miss, or ambiguous
(caller must resolve exactly):

    ("rat", q, p, table)  -- generator is the exact rational p/q;
        holds iff table[(k*p) % q], which is exact.
    ("fix", A, arcs)      -- generator enclosed in [A, A+2] / 2**SHIFT;
        frac(k * alpha) then lies in [u, u + 2k] / 2**SHIFT with
        u = k*A mod 2**SHIFT.  Each arc is a fixed-point pair (lo, hi):
        certainly inside when lo <= u and u + 2k <= hi, certainly clear
        of it when u + 2k < lo or u > hi (the two thresholds coincide
        because the ambiguity zone is exactly one enclosure width).  The
        condition holds if some arc certainly contains the value, fails
        if every arc is certainly clear, else ambiguous.

An enclosure reaching past 2**SHIFT (the seam) is always ambiguous.
"""

SHIFT = 62
MOD = 1 << SHIFT
MASK = MOD - 1


class PyScanKernel:
    def __init__(self, conds):
        self._rat = []
        self._fix = []
        for cond in conds:
            if cond[0] == "rat":
                _, q, p, table = cond
                self._rat.append((q, p % q, table))
            elif cond[0] == "fix":
                _, A, arcs = cond
                if not 0 <= A < MOD:
                    raise ValueError("fixed-point generator out of range")
                self._fix.append((A, tuple(arcs)))
            else:
                raise ValueError(f"unknown condition kind {cond[0]!r}")

    def scan_range(self, lo, hi):
        """Classify k in [lo, hi]: returns (certain hits, ambiguous)."""
        hits, ambiguous = [], []
        if hi < lo:
            return hits, ambiguous
        rat = self._rat
        fix = self._fix
        rat_acc = [(lo * p) % q for q, p, _ in rat]
        fix_acc = [(lo * A) & MASK for A, _ in fix]
        nrat, nfix = len(rat), len(fix)
        for k in range(lo, hi + 1):
            verdict = 1  # 1 hit, 0 miss, -1 ambiguous
            for i in range(nrat):
                q, p, table = rat[i]
                r = rat_acc[i]
                if not table[r]:
                    verdict = 0
                r += p
                rat_acc[i] = r - q if r >= q else r
            kk = 2 * k
            for i in range(nfix):
                A, arcs = fix[i]
                u = fix_acc[i]
                fix_acc[i] = (u + A) & MASK
                if not verdict:
                    continue
                w = u + kk
                if w >= MOD:
                    verdict = -1
                    continue
                inside = False
                clear = True
                for alo, ahi in arcs:
                    if alo <= u and w <= ahi:
                        inside = True
                        break
                    if w >= alo and u <= ahi:
                        clear = False
                if not inside:
                    verdict = 0 if clear else -1
            if verdict == 1:
                hits.append(k)
            elif verdict == -1:
                ambiguous.append(k)
        return hits, ambiguous
