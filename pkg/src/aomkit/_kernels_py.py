"""Pure-Python kernels. Reference semantics for the compiled ``_kernels`` module.

All vectors are passed as parallel sequences of ``plus`` and ``minus`` bitmasks.
"""


def first_composition_failure(lp, lm, rp, rm, tp, tm, negate_right=False):
    """First ``(i, j)`` with ``L[i] o (+-R[j])`` outside target ``T``, else ``None``."""
    target = set(zip(tp, tm))
    if negate_right:
        rp, rm = rm, rp
    for i in range(len(lp)):
        xp = lp[i]
        xm = lm[i]
        free = ~(xp | xm)
        for j in range(len(rp)):
            if (xp | (rp[j] & free), xm | (rm[j] & free)) not in target:
                return i, j
    return None


def stabilizer_scan(cp, cm, wp, wm, tp, tm, symmetric):
    """Indices of candidates ``c`` with ``c o W`` (and ``-c o W``) inside ``T``."""
    target = set(zip(tp, tm))
    ops = list(zip(wp, wm))
    keep = []
    for k in range(len(cp)):
        p = cp[k]
        m = cm[k]
        free = ~(p | m)
        ok = True
        for yp, ym in ops:
            if (p | (yp & free), m | (ym & free)) not in target:
                ok = False
                break
            if symmetric and (m | (yp & free), p | (ym & free)) not in target:
                ok = False
                break
        if ok:
            keep.append(k)
    return keep


def elimination_cover(xp, xm, yp, ym, wp, wm):
    """Mask of separating coordinates ``e`` whose elimination set meets ``W``.

    ``Z`` lies in the (extended) ``e``-elimination set of ``X, Y`` iff ``Z_e = 0``
    and ``Z`` agrees with ``X o Y`` off the separation set. For equal supports
    this coincides with the plain elimination set.
    """
    s = (xp & ym) | (xm & yp)
    if not s:
        return 0
    off = ~s
    free = ~(xp | xm)
    cp = (xp | (yp & free)) & off
    cm = (xm | (ym & free)) & off
    cover = 0
    for k in range(len(wp)):
        zp = wp[k]
        zm = wm[k]
        if (zp & off) == cp and (zm & off) == cm:
            cover |= s & ~(zp | zm)
            if cover == s:
                break
    return cover


def first_elimination_failure(wp, wm, equal_support, per_element):
    """First failing ``(i, j, e)`` of an elimination axiom over ``W``.

    With ``equal_support`` only pairs ``X != Y`` of equal support are examined
    (the plain axioms), otherwise all pairs with nonempty separation.
    ``per_element`` requires every separating ``e`` to be covered; otherwise a
    single covered coordinate suffices and a failure reports ``e = -1``.
    """
    n = len(wp)
    for i in range(n):
        xp = wp[i]
        xm = wm[i]
        for j in range(n):
            yp = wp[j]
            ym = wm[j]
            if equal_support and ((xp | xm) != (yp | ym) or i == j):
                continue
            s = (xp & ym) | (xm & yp)
            if not s:
                continue
            cover = elimination_cover(xp, xm, yp, ym, wp, wm)
            if per_element:
                missing = s & ~cover
                if missing:
                    return i, j, (missing & -missing).bit_length() - 1
            elif not cover:
                return i, j, -1
    return None


def pair_sums(xp_list, xm_list, wp, wm, equal_support):
    """Sums ``X + (-Y)`` over ordered pairs of candidates with empty eliminations.

    A pair qualifies when neither ``I(X, -Y)`` nor ``I(-X, Y)`` meets ``W``
    (extended elimination sets when supports may differ). With
    ``equal_support`` only pairs of equal support are considered.
    """
    out = []
    n = len(xp_list)
    for i in range(n):
        xp = xp_list[i]
        xm = xm_list[i]
        for j in range(n):
            yp = xp_list[j]
            ym = xm_list[j]
            if equal_support and (xp | xm) != (yp | ym):
                continue
            # -Y has plus ym, minus yp
            if elimination_cover(xp, xm, ym, yp, wp, wm):
                continue
            if elimination_cover(xm, xp, yp, ym, wp, wm):
                continue
            s = (xp & yp) | (xm & ym)
            free = ~(xp | xm)
            sp = (xp | (ym & free)) & ~s
            sm = (xm | (yp & free)) & ~s
            out.append((sp, sm))
    return out
