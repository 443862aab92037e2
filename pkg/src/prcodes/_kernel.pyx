# cython: language_level=3
# cython: boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled twins of the _pyops polynomial loops.

Only fields small enough for log/antilog tables are handled here; the
backend routes everything else to the pure-Python implementation.  The
counting rules match _pyops exactly (see that module's docstring).
"""

from libc.stdlib cimport free, malloc

ctypedef unsigned long long u64


cdef class KernelField:
    cdef readonly u64 p
    cdef readonly unsigned int m
    cdef readonly u64 q
    cdef object _exp_obj
    cdef object _log_obj
    cdef long long[::1] exp
    cdef long long[::1] log

    def __init__(self, p, m, q, exp, log):
        self.p = p
        self.m = m
        self.q = q
        self._exp_obj = exp
        self._log_obj = log
        self.exp = exp
        self.log = log

    cdef inline u64 fmul(self, u64 a, u64 b):
        if a == 0 or b == 0:
            return 0
        return <u64>self.exp[self.log[a] + self.log[b]]

    cdef inline u64 finv(self, u64 a):
        return <u64>self.exp[self.q - 1 - <u64>self.log[a]]

    cdef inline u64 fadd(self, u64 a, u64 b):
        cdef u64 p = self.p
        cdef u64 out, mult
        if p == 2:
            return a ^ b
        if self.m == 1:
            return (a + b) % p
        out = 0
        mult = 1
        while a or b:
            out += ((a % p + b % p) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    cdef inline u64 fsub(self, u64 a, u64 b):
        cdef u64 p = self.p
        cdef u64 out, mult
        if p == 2:
            return a ^ b
        if self.m == 1:
            return (a + p - b) % p
        out = 0
        mult = 1
        while a or b:
            out += ((a % p + p - b % p) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out


cdef u64* _buf(Py_ssize_t n) except NULL:
    cdef u64* b = <u64*>malloc(n * sizeof(u64))
    if b == NULL:
        raise MemoryError()
    return b


cdef u64* _from_seq(object seq, Py_ssize_t n) except NULL:
    cdef u64* b = _buf(n if n > 0 else 1)
    cdef Py_ssize_t i
    try:
        for i in range(n):
            b[i] = seq[i]
    except BaseException:
        free(b)
        raise
    return b


cdef list _to_list(u64* b, Py_ssize_t n):
    cdef list out = [0] * n
    cdef Py_ssize_t i
    for i in range(n):
        out[i] = b[i]
    return out


cdef inline Py_ssize_t _trim(u64* b, Py_ssize_t n):
    while n > 0 and b[n - 1] == 0:
        n -= 1
    return n


def poly_mul(KernelField kf not None, a, b, ctr=None):
    cdef Py_ssize_t na = len(a), nb = len(b)
    if na == 0 or nb == 0:
        return []
    cdef u64* pa = _from_seq(a, na)
    cdef u64* pb
    cdef u64* po
    cdef Py_ssize_t i, j, no = na + nb - 1
    cdef u64 ai
    cdef long long nmul = 0
    try:
        pb = _from_seq(b, nb)
    except BaseException:
        free(pa)
        raise
    po = <u64*>malloc(no * sizeof(u64))
    if po == NULL:
        free(pa)
        free(pb)
        raise MemoryError()
    for i in range(no):
        po[i] = 0
    for i in range(na):
        ai = pa[i]
        if ai == 0:
            continue
        for j in range(nb):
            if pb[j] == 0:
                continue
            po[i + j] = kf.fadd(po[i + j], kf.fmul(ai, pb[j]))
            nmul += 1
    out = _to_list(po, no)
    free(pa)
    free(pb)
    free(po)
    if ctr is not None:
        ctr.mults = ctr.mults + nmul
    return out


def poly_divmod(KernelField kf not None, a, b, ctr=None):
    cdef Py_ssize_t na = len(a), nb = len(b)
    if nb == 0:
        raise ZeroDivisionError("polynomial division by zero")
    if na < nb:
        return [], list(a)
    cdef u64* pr = _from_seq(a, na)
    cdef u64* pb
    cdef u64* pq
    cdef Py_ssize_t db = nb - 1, k, j, nr
    cdef u64 lead, qc, inv_lb = 0
    cdef bint monic
    cdef long long nmul = 0, ninv = 0
    try:
        pb = _from_seq(b, nb)
    except BaseException:
        free(pr)
        raise
    monic = pb[db] == 1
    if not monic:
        inv_lb = kf.finv(pb[db])
        ninv = 1
    pq = <u64*>malloc((na - db) * sizeof(u64))
    if pq == NULL:
        free(pr)
        free(pb)
        raise MemoryError()
    for k in range(na - db):
        pq[k] = 0
    for k in range(na - 1 - db, -1, -1):
        lead = pr[k + db]
        if lead == 0:
            continue
        if monic:
            qc = lead
        else:
            qc = kf.fmul(lead, inv_lb)
            nmul += 1
        pq[k] = qc
        pr[k + db] = 0
        for j in range(db):
            if pb[j]:
                pr[k + j] = kf.fsub(pr[k + j], kf.fmul(qc, pb[j]))
                nmul += 1
    nr = _trim(pr, na)
    quot = _to_list(pq, na - db)
    rem = _to_list(pr, nr)
    free(pr)
    free(pb)
    free(pq)
    if ctr is not None:
        ctr.mults = ctr.mults + nmul
        ctr.invs = ctr.invs + ninv
    return quot, rem


def gcd_pass(KernelField kf not None, r, rt, s, st, t, tt, ctr=None):
    """One full division pass of the extended GCD loop; see _pyops.gcd_pass."""
    cdef Py_ssize_t nr = len(r), nrt = len(rt)
    cdef Py_ssize_t ns = len(s), nst = len(st)
    cdef Py_ssize_t nt = len(t), ntt = len(tt)
    cdef Py_ssize_t j = nrt - 1
    cdef Py_ssize_t i, jj, shift, cap_r, cap_s, cap_t
    cdef u64 qc, inv_lr = 0
    cdef bint monic
    cdef long long nmul = 0, ninv = 0, steps = 0
    cdef u64* pr
    cdef u64* prt
    cdef u64* ps
    cdef u64* pst
    cdef u64* pt
    cdef u64* ptt

    shift = nr - 1 - j
    if shift < 0:
        shift = 0
    cap_r = nr
    cap_s = ns if ns > nst + shift else nst + shift
    cap_t = nt if nt > ntt + shift else ntt + shift
    if cap_r == 0:
        cap_r = 1
    if cap_s == 0:
        cap_s = 1
    if cap_t == 0:
        cap_t = 1

    pr = _from_seq(r, nr)
    prt = _from_seq(rt, nrt)
    ps = _buf(cap_s)
    pst = _from_seq(st, nst)
    pt = _buf(cap_t)
    ptt = _from_seq(tt, ntt)
    for i in range(cap_s):
        ps[i] = s[i] if i < ns else 0
    for i in range(cap_t):
        pt[i] = t[i] if i < nt else 0

    monic = prt[j] == 1
    if not monic and nr - 1 >= j:
        inv_lr = kf.finv(prt[j])
        ninv = 1

    while nr - 1 >= j:
        i = nr - 1
        if monic:
            qc = pr[i]
        else:
            qc = kf.fmul(pr[i], inv_lr)
            nmul += 1
        shift = i - j
        nr -= 1
        for jj in range(j):
            if prt[jj]:
                pr[shift + jj] = kf.fsub(pr[shift + jj], kf.fmul(qc, prt[jj]))
                nmul += 1
        nr = _trim(pr, nr)
        # s -= qc * x^shift * st
        if nst + shift > ns:
            ns = nst + shift
        for jj in range(nst):
            if pst[jj]:
                ps[shift + jj] = kf.fsub(ps[shift + jj], kf.fmul(qc, pst[jj]))
                nmul += 1
        ns = _trim(ps, ns)
        # t -= qc * x^shift * tt
        if ntt + shift > nt:
            nt = ntt + shift
        for jj in range(ntt):
            if ptt[jj]:
                pt[shift + jj] = kf.fsub(pt[shift + jj], kf.fmul(qc, ptt[jj]))
                nmul += 1
        nt = _trim(pt, nt)
        steps += 1

    out = (_to_list(pr, nr), _to_list(ps, ns), _to_list(pt, nt), steps)
    free(pr)
    free(prt)
    free(ps)
    free(pst)
    free(pt)
    free(ptt)
    if ctr is not None:
        ctr.mults = ctr.mults + nmul
        ctr.invs = ctr.invs + ninv
    return out
