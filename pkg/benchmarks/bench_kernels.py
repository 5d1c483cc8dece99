"""Compare the compiled kernels against the pure-Python ones.

Runs the three hot loops (bigint convolution, GF(p) gcd, GF(p) modular
exponentiation) on inputs shaped like the ones the library actually
produces, and prints a small table.  Usage::

    python benchmarks/bench_kernels.py [--repeat 5]

The compiled column is skipped (with a note) when bridgevar._speedups
has not been built.
"""

import argparse
import random
import sys
import timeit

from bridgevar import _kernels

try:
    from bridgevar import _speedups
except ImportError:
    _speedups = None


def _bigint_inputs():
    # Coefficient growth similar to the Chebyshev-like sequences: a few
    # hundred terms, magnitudes around 10^40.
    rng = random.Random(20260815)
    a = [rng.randint(-10 ** 40, 10 ** 40) for _ in range(220)]
    b = [rng.randint(-10 ** 40, 10 ** 40) for _ in range(180)]
    return a, b


def _modp_inputs(p=10007):
    rng = random.Random(97)
    f = [rng.randrange(p) for _ in range(160)] + [1]
    g = [rng.randrange(p) for _ in range(150)] + [1]
    base = [rng.randrange(p) for _ in range(120)]
    return f, g, base, p


def _cases():
    a, b = _bigint_inputs()
    f, g, base, p = _modp_inputs()
    return [
        ("poly_mul (bigint, 220x180)", "poly_mul", (a, b)),
        ("poly_gcd_p (deg 160/150)", "poly_gcd_p", (f, g, p)),
        ("poly_powmod_p (x^p mod f)", "poly_powmod_p", (base, p, f, p)),
    ]


def _time(fn, args, repeat):
    t = timeit.Timer(lambda: fn(*args))
    number, _ = t.autorange()
    return min(t.repeat(repeat, number)) / number


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)

    if _speedups is None:
        print("note: bridgevar._speedups is not built; showing pure only",
              file=sys.stderr)

    rows = []
    for label, name, call_args in _cases():
        pure = _time(getattr(_kernels, name), call_args, args.repeat)
        if _speedups is not None:
            comp = _time(getattr(_speedups, name), call_args, args.repeat)
            # Same semantics, not just similar timing.
            assert getattr(_kernels, name)(*call_args) == \
                getattr(_speedups, name)(*call_args)
            rows.append((label, pure, comp, pure / comp))
        else:
            rows.append((label, pure, None, None))

    width = max(len(r[0]) for r in rows)
    print("%-*s  %12s  %12s  %8s" % (width, "kernel", "pure", "compiled",
                                     "speedup"))
    for label, pure, comp, ratio in rows:
        if comp is None:
            print("%-*s  %10.3f ms  %12s  %8s" % (width, label, pure * 1e3,
                                                  "-", "-"))
        else:
            print("%-*s  %10.3f ms  %10.3f ms  %7.2fx" %
                  (width, label, pure * 1e3, comp * 1e3, ratio))
    return 0


if __name__ == "__main__":
    sys.exit(main())
