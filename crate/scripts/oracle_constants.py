#!/usr/bin/env python3
"""High-precision reference values pinned in the Rust tests.

Run with mpmath installed:

    python3 scripts/oracle_constants.py

Everything here is computed independently of the Rust code: Gamma and Beta
from mpmath, the two cubic integrals by mpmath quadrature split at the real
roots.
"""

import mpmath as mp

mp.mp.dps = 40


def show(name, value):
    print(f"{name:<28} {mp.nstr(value, 36)}")


def power_integral(coeffs, n, breaks):
    f = lambda x: abs(mp.polyval(coeffs, x)) ** (-mp.mpf(2) / n)
    pts = [-mp.inf] + breaks + [mp.inf]
    return mp.quad(f, pts)


def main():
    third = mp.mpf(1) / 3
    b33 = mp.beta(third, third)
    b26 = mp.beta(mp.mpf(1) / 2, mp.mpf(1) / 6)
    c_minus = mp.cbrt(2) * b26
    c_plus = 3 * b33

    show("gamma(1/3)", mp.gamma(third))
    show("beta(1/3,1/3)", b33)
    show("beta(1/2,1/6)", b26)
    show("C_minus", c_minus)
    show("C_plus", c_plus)
    show("C_plus/C_minus - sqrt3", c_plus / c_minus - mp.sqrt(3))
    show("cbrt(2)", mp.cbrt(2))

    # x^3 + x has D = -4; x^3 - x has D = 4.
    four_sixth = mp.mpf(4) ** (mp.mpf(1) / 6)
    show("C_minus/4^(1/6)", c_minus / four_sixth)
    show("quad x^3+x", power_integral([1, 0, 1, 0], 3, [0]))
    show("C_plus/4^(1/6)", c_plus / four_sixth)
    show("quad x^3-x", power_integral([1, 0, -1, 0], 3, [-1, 0, 1]))

    # 1/(2x^2 + x + 3): 2*pi/sqrt(23)
    show("2pi/sqrt(23)", 2 * mp.pi / mp.sqrt(23))
    show("quad 1/(2x^2+x+3)", mp.quad(lambda x: 1 / (2 * x**2 + x + 3), [-mp.inf, mp.inf]))


if __name__ == "__main__":
    main()
