"""The two headline evaluations: norms and the symmetry ratio.

The squared norm <P, P> comes out of a brute-force constant-term
integral, yet it always equals a tidy product of cyclotomic-like
factors; and evaluating P_mu at lambda's shifted point against
P_lam at mu's shifted point gives a pure q-bracket ratio.
"""

from macdpoly import (
    MacdonaldContext,
    Weight,
    inner_product,
    macdonald_poly,
    norm_rhs,
    scalar_to_str,
    symmetry_rhs,
)


def main():
    ctx = MacdonaldContext(2, 3)
    print(f"n = {ctx.n}, k = {ctx.k}\n")

    for m in range(4):
        lam = Weight((m, 0))
        p = macdonald_poly(lam, ctx)
        bruteforce = inner_product(p, p, ctx)
        closed = norm_rhs(lam, ctx)
        tag = "ok" if bruteforce == closed else "MISMATCH"
        print(f"<P[{lam}], P[{lam}]> = {scalar_to_str(bruteforce)}   [{tag}]")

    print()
    lam, mu = Weight((3, 0)), Weight((1, 0))
    rho = ctx.root_data.rho
    num = macdonald_poly(mu, ctx).evaluate_at(lam + ctx.k * rho)
    den = macdonald_poly(lam, ctx).evaluate_at(mu + ctx.k * rho)
    print(f"P[{mu}](q^(2({lam}+k rho))) / P[{lam}](q^(2({mu}+k rho)))")
    print(f"  = {scalar_to_str(num / den)}")
    print(f"  closed form: {scalar_to_str(symmetry_rhs(lam, mu, ctx))}")


if __name__ == "__main__":
    main()
