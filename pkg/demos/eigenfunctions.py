"""The difference operators act diagonally on the P-basis.

Applying the r-th operator to P_lam returns the same polynomial scaled
by the exterior-power character evaluated at q^(2(lam + k rho)); the
scale factor is printed for a sweep of weights.
"""

from macdpoly import (
    MacdonaldContext,
    dominant_weights_up_to,
    eigenvalue,
    macdonald_operator,
    macdonald_poly,
    scalar_to_str,
)


def main():
    ctx = MacdonaldContext(3, 2)
    print(f"n = {ctx.n}, k = {ctx.k}")
    for r in (1, 2):
        print(f"\noperator M_{r}:")
        for lam in dominant_weights_up_to(3, 3):
            p = macdonald_poly(lam, ctx)
            image = macdonald_operator(p, r, ctx)
            ev = eigenvalue(lam, r, ctx)
            ok = image == p * ev
            print(f"  M_{r} P[{lam}] = ({scalar_to_str(ev)}) * P[{lam}]"
                  + ("" if ok else "   <- NOT an eigenfunction?!"))


if __name__ == "__main__":
    main()
