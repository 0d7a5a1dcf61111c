"""At k = 1 the polynomials collapse to classical Weyl characters.

Every coefficient on the orbit-sum basis becomes a plain integer (a
weight multiplicity), with no q left anywhere.
"""

from macdpoly import MacdonaldContext, macdonald_coeffs, dominant_weights_up_to, scalar_to_str


def main():
    for n in (2, 3):
        ctx = MacdonaldContext(n, 1)
        print(f"--- n = {n}, k = 1 ---")
        for lam in dominant_weights_up_to(n, 3):
            coeffs = macdonald_coeffs(lam, ctx)
            pieces = [f"{scalar_to_str(c)}*m[{mu}]"
                      for mu, c in sorted(coeffs.items(), key=lambda kv: kv[0].coords, reverse=True)]
            print(f"P[{lam}] = " + " + ".join(pieces))
        print()


if __name__ == "__main__":
    main()
