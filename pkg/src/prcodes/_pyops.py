"""Pure-Python polynomial inner loops.

These are the reference implementations of the three quadratic kernels the
optional compiled extension accelerates.  Both backends follow the same
counting rules so decoder statistics never depend on which one is active:

* multiplying two coefficients counts 1; zero terms are skipped, never
  multiplied;
* a quotient coefficient costs 1 multiplication unless the divisor is
  monic (then it is just the leading coefficient);
* the leading term cancelled by a division step is not recomputed;
* inversions are tallied separately from multiplications.

Polynomials are ascending coefficient sequences with no trailing zeros;
the empty sequence is the zero polynomial.  Results are plain lists.
"""

from __future__ import annotations


def poly_mul(field, a, b, ctr=None):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    fmul = field.mul
    fadd = field.add
    nmul = 0
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            if bj == 0:
                continue
            out[i + j] = fadd(out[i + j], fmul(ai, bj))
            nmul += 1
    if ctr is not None:
        ctr.mults += nmul
    return out


def poly_divmod(field, a, b, ctr=None):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return [], list(a)
    r = list(a)
    db = len(b) - 1
    monic = b[db] == 1
    inv_lb = 0
    nmul = 0
    ninv = 0
    if not monic:
        inv_lb = field.inv(b[db])
        ninv = 1
    quot = [0] * (len(a) - db)
    fmul = field.mul
    fsub = field.sub
    for k in range(len(a) - 1 - db, -1, -1):
        lead = r[k + db]
        if lead == 0:
            continue
        if monic:
            qc = lead
        else:
            qc = fmul(lead, inv_lb)
            nmul += 1
        quot[k] = qc
        r[k + db] = 0
        for j in range(db):
            bj = b[j]
            if bj:
                r[k + j] = fsub(r[k + j], fmul(qc, bj))
                nmul += 1
    while r and r[-1] == 0:
        r.pop()
    if ctr is not None:
        ctr.mults += nmul
        ctr.invs += ninv
    return quot, r


def gcd_pass(field, r, rt, s, st, t, tt, ctr=None):
    """One full division pass: reduce r by rt while deg r >= deg rt.

    The cofactor rows (s, t) receive the same elementary operations.
    Returns updated (r, s, t) lists plus the number of division steps;
    the inputs are left untouched.  rt must be nonzero.
    """
    r = list(r)
    s = list(s)
    t = list(t)
    j = len(rt) - 1
    monic = rt[j] == 1
    inv_lr = 0
    nmul = 0
    ninv = 0
    if not monic and len(r) - 1 >= j:
        inv_lr = field.inv(rt[j])
        ninv = 1
    fmul = field.mul
    fsub = field.sub
    steps = 0
    while len(r) - 1 >= j:
        i = len(r) - 1
        if monic:
            qc = r[i]
        else:
            qc = fmul(r[i], inv_lr)
            nmul += 1
        shift = i - j
        r.pop()
        for jj in range(j):
            c = rt[jj]
            if c:
                r[shift + jj] = fsub(r[shift + jj], fmul(qc, c))
                nmul += 1
        while r and r[-1] == 0:
            r.pop()
        nmul += _submul_shift(field, s, st, qc, shift)
        nmul += _submul_shift(field, t, tt, qc, shift)
        steps += 1
    if ctr is not None:
        ctr.mults += nmul
        ctr.invs += ninv
    return r, s, t, steps


def _submul_shift(field, a, b, qc, shift):
    """In place a -= qc * x^shift * b; returns multiplications performed."""
    need = shift + len(b)
    if need > len(a):
        a.extend([0] * (need - len(a)))
    fmul = field.mul
    fsub = field.sub
    nmul = 0
    for jj, c in enumerate(b):
        if c:
            a[shift + jj] = fsub(a[shift + jj], fmul(qc, c))
            nmul += 1
    while a and a[-1] == 0:
        a.pop()
    return nmul
