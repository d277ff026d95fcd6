"""Generate the piecewise Chebyshev tables used by ``nonlocal_helmholtz.specfun``.

On each unit interval ``[a, a + 1)`` covering ``[X_LO, X_HI)`` every function
``f`` in {J0, J1, Y0, Y1} is written as ``f(x) = (x - z) * g(x)`` when the
interval holds a zero ``z`` of ``f`` (and ``f = g`` otherwise).  ``g`` is
smooth and zero-free there, so its Chebyshev interpolant evaluated in double
precision keeps a small *relative* error even right next to ``z``.  The zero is
stored as an unevaluated sum ``z_hi + z_lo``.

Run from the repository root::

    python3 tools/gen_bessel_tables.py > src/nonlocal_helmholtz/_bessel_tables.py
"""

import mpmath as mp

X_LO = 0.5
X_HI = 25.5
N_NODES = 56
CUTOFF = mp.mpf("1e-19")

mp.mp.dps = 60

FUNCS = {
    "j0": lambda x: mp.besselj(0, x),
    "j1": lambda x: mp.besselj(1, x),
    "y0": lambda x: mp.bessely(0, x),
    "y1": lambda x: mp.bessely(1, x),
}


def zeros_below(name, limit):
    kind, order = name[0], int(name[1])
    zfun = mp.besseljzero if kind == "j" else mp.besselyzero
    out = []
    m = 1
    while True:
        z = zfun(order, m)
        if z >= limit:
            return out
        out.append(z)
        m += 1


def cheb_coeffs(g, a, b):
    n = N_NODES
    nodes = [mp.cos(mp.pi * (j + mp.mpf(1) / 2) / n) for j in range(n)]
    vals = [g((b - a) / 2 * t + (a + b) / 2) for t in nodes]
    coeffs = []
    for k in range(n):
        s = mp.fsum(vals[j] * mp.cos(mp.pi * k * (j + mp.mpf(1) / 2) / n) for j in range(n))
        coeffs.append(2 * s / n)
    coeffs[0] /= 2
    scale = max(abs(v) for v in vals)
    last = max(k for k, c in enumerate(coeffs) if abs(c) > CUTOFF * scale)
    return coeffs[: last + 1]


def main():
    n_int = int(X_HI - X_LO)
    print('"""Generated by tools/gen_bessel_tables.py; do not edit by hand."""')
    print()
    print("from math import nan")
    print()
    print(f"X_LO = {X_LO!r}")
    print(f"X_HI = {X_HI!r}")
    print()
    for name, f in FUNCS.items():
        zs = zeros_below(name, X_HI)
        zero_hi, zero_lo, rows = [], [], []
        for i in range(n_int):
            a = mp.mpf(X_LO) + i
            b = a + 1
            inside = [z for z in zs if a <= z < b]
            assert len(inside) <= 1
            if inside:
                z = inside[0]
                g = lambda x, z=z: f(x) / (x - z)
                hi = float(z)
                lo = float(z - hi)
            else:
                g = f
                hi = lo = float("nan")
            zero_hi.append(hi)
            zero_lo.append(lo)
            rows.append([float(c) for c in cheb_coeffs(g, a, b)])
        print(f"{name.upper()}_ZERO_HI = {zero_hi!r}")
        print(f"{name.upper()}_ZERO_LO = {zero_lo!r}")
        print(f"{name.upper()}_COEFFS = [")
        for row in rows:
            print(f"    {row!r},")
        print("]")
        print()


if __name__ == "__main__":
    main()
