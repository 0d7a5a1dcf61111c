"""The rank-one family is a three-term ladder of q-orthogonal polynomials.

For n = 2 everything lives on a single coordinate axis, and multiplying
P_m by the degree-one invariant climbs the ladder: one step up with
coefficient 1, one step down with an explicit q-bracket coefficient.
"""

from macdpoly import MacdonaldContext, Weight, pieri_expand, scalar_to_str


def main():
    for k in (1, 2, 3):
        ctx = MacdonaldContext(2, k)
        print(f"--- k = {k} ---")
        for m in range(1, 5):
            mu = Weight((m, 0))
            terms = pieri_expand(mu, 1, ctx)
            pieces = [f"({scalar_to_str(t.coefficient)}) P[{mu + t.nu}]" for t in terms]
            print(f"(m[1,0]) * P[{mu}] = " + " + ".join(pieces))
        print()


if __name__ == "__main__":
    main()
