"""Pure-Python fallback for the hot table-scan kernels.

All tables are flat row-major integer sequences of length n*n.  The compiled
twin in ``_native.pyx`` implements exactly the same functions with the same
scan orders, so both backends return identical results.
"""

BACKEND = "python"


def pbci_ok(arrow, squig, n, unit):
    """True iff the two tables satisfy the pseudo-BCI axioms.

    Checked: both unit-row identities, both composition identities and the
    antisymmetry quasi-identity.
    """
    un = unit * n
    for x in range(n):
        if arrow[un + x] != x or squig[un + x] != x:
            return False
    for x in range(n):
        xn = x * n
        for y in range(x + 1, n):
            if arrow[xn + y] == unit and arrow[y * n + x] == unit:
                return False
    for x in range(n):
        xn = x * n
        for y in range(n):
            axy = arrow[xn + y]
            sxy = squig[xn + y]
            yn = y * n
            for z in range(n):
                t = squig[arrow[yn + z] * n + arrow[xn + z]]
                if squig[axy * n + t] != unit:
                    return False
                t = arrow[squig[yn + z] * n + squig[xn + z]]
                if arrow[sxy * n + t] != unit:
                    return False
    return True


def rpom3_ok(prod, arrow, n):
    """True iff (x*y) -> z == x -> (y -> z) for all x, y, z."""
    for x in range(n):
        xn = x * n
        for y in range(n):
            pn = prod[xn + y] * n
            yn = y * n
            for z in range(n):
                if arrow[pn + z] != arrow[xn + arrow[yn + z]]:
                    return False
    return True


def residuation_ok(leq, prod, resl, resr, n):
    """True iff the residuation law holds for all triples.

    x <= y -> z  iff  x*y <= z,  and  x <= y ~> z  iff  y*x <= z.
    """
    for x in range(n):
        xn = x * n
        for y in range(n):
            yn = y * n
            pxy = prod[xn + y] * n
            pyx = prod[yn + x] * n
            for z in range(n):
                if leq[xn + resl[yn + z]] != leq[pxy + z]:
                    return False
                if leq[xn + resr[yn + z]] != leq[pyx + z]:
                    return False
    return True


def arguesian_witness(join, meet, n):
    """First 6-tuple violating the arguesian lattice identity, else None.

    Scan order is lexicographic in (x1, y1, x2, y2, x3, y3).
    """
    for x1 in range(n):
        x1n = x1 * n
        for y1 in range(n):
            y1n = y1 * n
            p1 = join[x1n + y1] * n
            for x2 in range(n):
                x2n = x2 * n
                jxx12 = join[x1n + x2] * n
                for y2 in range(n):
                    y2n = y2 * n
                    lhs12 = meet[p1 + join[x2n + y2]] * n
                    z12 = meet[jxx12 + join[y1n + y2]]
                    for x3 in range(n):
                        x3n = x3 * n
                        jxx13 = join[x1n + x3] * n
                        jxx23 = join[x2n + x3] * n
                        for y3 in range(n):
                            lhs = meet[lhs12 + join[x3n + y3]]
                            z13 = meet[jxx13 + join[y1n + y3]]
                            z23 = meet[jxx23 + join[y2n + y3]]
                            z = meet[z12 * n + join[z13 * n + z23]]
                            rhs = join[
                                meet[x1n + join[x2n + z]] * n
                                + meet[y1n + join[y2n + z]]
                            ]
                            if meet[lhs * n + rhs] != lhs:
                                return (x1, y1, x2, y2, x3, y3)
    return None


def _consistent(arrow, squig, n, unit):
    # Partial tables use -1 for unfilled cells; an axiom or derived-law
    # instance is only judged once every lookup it needs is available.
    for x in range(n):
        xn = x * n
        for y in range(x + 1, n):
            if arrow[xn + y] == unit and arrow[y * n + x] == unit:
                return False
    for x in range(n):
        xn = x * n
        ax1 = arrow[xn + unit]
        for y in range(n):
            yn = y * n
            axy = arrow[xn + y]
            sxy = squig[xn + y]
            # (x -> y) -> 1 == (x -> 1) ~> (y -> 1), and the mirror law
            if axy >= 0 and ax1 >= 0:
                ay1 = arrow[yn + unit]
                if ay1 >= 0:
                    lhs = arrow[axy * n + unit]
                    rhs = squig[ax1 * n + ay1]
                    if lhs >= 0 and rhs >= 0 and lhs != rhs:
                        return False
            if sxy >= 0:
                sx1 = squig[xn + unit]
                sy1 = squig[yn + unit]
                if sx1 >= 0 and sy1 >= 0:
                    lhs = squig[sxy * n + unit]
                    rhs = arrow[sx1 * n + sy1]
                    if lhs >= 0 and rhs >= 0 and lhs != rhs:
                        return False
            for z in range(n):
                ayz = arrow[yn + z]
                axz = arrow[xn + z]
                if axy >= 0 and ayz >= 0 and axz >= 0:
                    t = squig[ayz * n + axz]
                    if t >= 0:
                        r = squig[axy * n + t]
                        if r >= 0 and r != unit:
                            return False
                syz = squig[yn + z]
                sxz = squig[xn + z]
                if sxy >= 0 and syz >= 0 and sxz >= 0:
                    t = arrow[syz * n + sxz]
                    if t >= 0:
                        r = arrow[sxy * n + t]
                        if r >= 0 and r != unit:
                            return False
                # exchange: x -> (y ~> z) == y ~> (x -> z)
                if syz >= 0 and axz >= 0:
                    l = arrow[xn + syz]
                    r = squig[yn + axz]
                    if l >= 0 and r >= 0 and l != r:
                        return False
    return True


def enumerate_tables(n, unit, max_raw=-1):
    """All table pairs on n elements (unit fixed) passing the pseudo-BCI axioms.

    Returns one ``bytes`` blob per model: the arrow table followed by the
    squig table, row-major.  The output order is the lexicographic order of
    the backtracking search and is identical across kernel backends.
    """
    size = n * n
    arrow = [-1] * size
    squig = [-1] * size
    for y in range(n):
        arrow[unit * n + y] = y
        squig[unit * n + y] = y
    for x in range(n):
        arrow[x * n + x] = unit
        squig[x * n + x] = unit
    cells = [(x, y) for x in range(n) if x != unit for y in range(n) if y != x]
    out = []

    def fill(k):
        if max_raw >= 0 and len(out) >= max_raw:
            return
        if k == len(cells):
            if pbci_ok(arrow, squig, n, unit):
                out.append(bytes(arrow) + bytes(squig))
            return
        x, y = cells[k]
        i = x * n + y
        if y == unit:
            # x -> 1 == x ~> 1 always holds, so fill both cells at once
            for v in range(n):
                arrow[i] = v
                squig[i] = v
                if _consistent(arrow, squig, n, unit):
                    fill(k + 1)
        else:
            # the cells share the unit value: x -> y == 1 iff x ~> y == 1
            for v in range(n):
                arrow[i] = v
                if v == unit:
                    squig[i] = unit
                    if _consistent(arrow, squig, n, unit):
                        fill(k + 1)
                else:
                    for w in range(n):
                        if w == unit:
                            continue
                        squig[i] = w
                        if _consistent(arrow, squig, n, unit):
                            fill(k + 1)
        arrow[i] = -1
        squig[i] = -1

    fill(0)
    return out
