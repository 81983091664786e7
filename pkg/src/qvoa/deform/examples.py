"""Explicit generators of the smallest deformation families.

``sp_n1_generators``: ``h, e, f`` of the ``n = 1`` symplectic family.
``osp_m1n1_generators``: even ``h, e, f`` and odd ``psi1, psi2`` of the
``m = n = 1`` orthosymplectic family.
"""

from __future__ import annotations

from .polymatrix import PolyMatrix
from .tensor import Superspace, x


def sp_n1_generators() -> dict[str, PolyMatrix]:
    sp = Superspace(0, 3)
    h = PolyMatrix.from_rows(sp, [[0, 0, 1], [0, x, 0], [0, 0, -x]])
    e = PolyMatrix.from_rows(sp, [[0, 0, 0], [0, 0, -1], [0, 0, 0]])
    f = PolyMatrix.from_rows(sp, [[0, 1, 0], [0, 0, 0], [0, -x, 0]])
    return {"h": h, "e": e, "f": f}


def sp_n1_relations() -> dict[str, PolyMatrix]:
    """Differences ``lhs - rhs`` of the bracket relations; all should vanish."""
    g = sp_n1_generators()
    h, e, f = g["h"], g["e"], g["f"]
    return {
        "[h,e]-2xe": h.bracket(e) - (2 * x) * e,
        "[h,f]+2xf": h.bracket(f) + (2 * x) * f,
        "[e,f]-h": e.bracket(f) - h,
    }


def osp_m1n1_generators() -> dict[str, PolyMatrix]:
    sp = Superspace(1, 3)
    h = PolyMatrix.from_rows(sp, [[0, 0, 0, 0], [0, 0, 0, 1], [0, 0, x**2, 0], [0, 0, 0, -x**2]])
    e = PolyMatrix.from_rows(sp, [[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, -1], [0, 0, 0, 0]])
    f = PolyMatrix.from_rows(sp, [[0, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 0], [0, 0, -x**2, 0]])
    psi1 = PolyMatrix.from_rows(sp, [[0, 0, 0, 1], [0, 0, 0, 0], [x**4, 0, 0, 0], [0, 0, 0, 0]])
    psi2 = PolyMatrix.from_rows(sp, [[0, 0, 1, 0], [x**2, 0, 0, 0], [0, 0, 0, 0], [-x**4, 0, 0, 0]])
    return {"h": h, "e": e, "f": f, "psi1": psi1, "psi2": psi2}
