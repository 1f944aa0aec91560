# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled scan kernel.  Semantics are defined by and must stay in
lockstep with the pure-Python reference in _scan_py.py; the parity test
suite drives both backends over the same inputs."""

from cpython.bytes cimport PyBytes_AS_STRING
from libc.stdlib cimport free, malloc

cdef long long SHIFT_C = 62
cdef long long MOD_C = (<long long> 1) << 62
cdef long long MASK_C = MOD_C - 1

SHIFT = 62
MOD = 1 << 62
MASK = MOD - 1


cdef class CScanKernel:
    cdef long long* rq
    cdef long long* rp
    cdef long long* racc
    cdef const unsigned char** rtab
    cdef int nrat
    cdef long long* fA
    cdef long long* facc
    cdef int* foff
    cdef long long* alo
    cdef long long* ahi
    cdef int nfix
    cdef list _keep

    def __cinit__(self, conds):
        rats = []
        fixes = []
        for cond in conds:
            if cond[0] == "rat":
                rats.append((cond[1], cond[2] % cond[1], cond[3]))
            elif cond[0] == "fix":
                if not 0 <= cond[1] < MOD:
                    raise ValueError("fixed-point generator out of range")
                fixes.append((cond[1], tuple(cond[2])))
            else:
                raise ValueError(f"unknown condition kind {cond[0]!r}")
        self.nrat = len(rats)
        self.nfix = len(fixes)
        self._keep = []
        narcs = sum(len(a) for _, a in fixes)
        self.rq = <long long*> malloc(max(1, self.nrat) * sizeof(long long))
        self.rp = <long long*> malloc(max(1, self.nrat) * sizeof(long long))
        self.racc = <long long*> malloc(max(1, self.nrat) * sizeof(long long))
        self.rtab = <const unsigned char**> malloc(max(1, self.nrat) * sizeof(void*))
        self.fA = <long long*> malloc(max(1, self.nfix) * sizeof(long long))
        self.facc = <long long*> malloc(max(1, self.nfix) * sizeof(long long))
        self.foff = <int*> malloc((self.nfix + 1) * sizeof(int))
        self.alo = <long long*> malloc(max(1, narcs) * sizeof(long long))
        self.ahi = <long long*> malloc(max(1, narcs) * sizeof(long long))
        cdef int i, j
        cdef bytes table_b
        for i, (q, p, table) in enumerate(rats):
            self.rq[i] = q
            self.rp[i] = p
            table_b = bytes(table)
            self._keep.append(table_b)
            self.rtab[i] = <const unsigned char*> PyBytes_AS_STRING(table_b)
        j = 0
        self.foff[0] = 0
        for i, (A, arcs) in enumerate(fixes):
            self.fA[i] = A
            for arc_lo, arc_hi in arcs:
                self.alo[j] = arc_lo
                self.ahi[j] = arc_hi
                j += 1
            self.foff[i + 1] = j

    def __dealloc__(self):
        free(self.rq)
        free(self.rp)
        free(self.racc)
        free(self.fA)
        free(self.facc)
        free(self.alo)
        free(self.ahi)
        free(self.rtab)
        free(self.foff)

    def scan_range(self, lo_obj, hi_obj):
        """Classify k in [lo, hi]: returns (certain hits, ambiguous)."""
        hits = []
        ambiguous = []
        if hi_obj < lo_obj:
            return hits, ambiguous
        if hi_obj >= (1 << 52):
            raise OverflowError("scan range too large for compiled kernel")
        cdef long long lo = lo_obj
        cdef long long hi = hi_obj
        cdef int i, j, verdict, inside, clear
        cdef long long k, u, w, r, kk
        for i in range(self.nrat):
            self.racc[i] = (int(lo) * int(self.rp[i])) % int(self.rq[i])
        for i in range(self.nfix):
            self.facc[i] = (int(lo) * int(self.fA[i])) & MASK
        for k in range(lo, hi + 1):
            verdict = 1
            for i in range(self.nrat):
                r = self.racc[i]
                if not self.rtab[i][r]:
                    verdict = 0
                r += self.rp[i]
                if r >= self.rq[i]:
                    r -= self.rq[i]
                self.racc[i] = r
            kk = 2 * k
            for i in range(self.nfix):
                u = self.facc[i]
                self.facc[i] = (u + self.fA[i]) & MASK_C
                if verdict == 0:
                    continue
                w = u + kk
                if w >= MOD_C:
                    verdict = -1
                    continue
                inside = 0
                clear = 1
                for j in range(self.foff[i], self.foff[i + 1]):
                    if self.alo[j] <= u and w <= self.ahi[j]:
                        inside = 1
                        break
                    if w >= self.alo[j] and u <= self.ahi[j]:
                        clear = 0
                if not inside:
                    verdict = 0 if clear else -1
            if verdict == 1:
                hits.append(k)
            elif verdict == -1:
                ambiguous.append(k)
        return hits, ambiguous
