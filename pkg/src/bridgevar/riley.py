"""Symbolic 2x2 matrices over Z[L^{±1}, r] and Riley polynomials.

The parabolic representation sends the two bridge generators to

    A = [[L, 1], [0, L^-1]]        B = [[L, 0], [2-r, L^-1]]

(so that tr(A B^-1) = r).  Words in a, b evaluate to LaurentMat2; the
Riley polynomial of a two-bridge word is the matrix-entry combination
W11 + (L^-1 - L) W12, rewritten in the subring generated by r and
y = L^2 + L^-2.  For the J(k, l) family there is also the closed form
built from the Phi/Psi sequences; both paths live here so each can
oracle the other.
"""

from fractions import Fraction
from math import gcd as int_gcd
from random import Random
from typing import NamedTuple

from .poly import UniPoly, BiPoly, LaurentPoly, ExactError, poly_gcd
from .seq import f_poly, phi, psi


class TraceSubringError(ExactError):
    """A Laurent term is not expressible in r and y = L^2 + L^-2."""

    def __init__(self, exponent, coefficient):
        super().__init__(
            "not in trace subring: term L^%d with coefficient %s"
            % (exponent, coefficient))
        self.exponent = exponent
        self.coefficient = coefficient


# ---------------------------------------------------------------------------
# words

def word_normalize(pairs):
    """Merge adjacent same-generator letters, drop zero exponents."""
    out = []
    for gen, exp in pairs:
        if gen not in ("a", "b"):
            raise ExactError("unknown generator %r" % (gen,))
        if not exp:
            continue
        if out and out[-1][0] == gen:
            merged = out[-1][1] + exp
            out.pop()
            if merged:
                out.append((gen, merged))
        else:
            out.append((gen, exp))
    return tuple(out)


def word_inverse(word):
    return word_normalize((g, -e) for g, e in reversed(word))


def word_concat(*words):
    out = []
    for w in words:
        out.extend(w)
    return word_normalize(out)


def word_power(word, n):
    if n < 0:
        return word_power(word_inverse(word), -n)
    return word_concat(*([word] * n))


def w_k_word(k):
    """w_k: (a b^-1)^m (a^-1 b)^m for k = 2m, with an `ab` core for odd k."""
    ab_inv = (("a", 1), ("b", -1))
    ainv_b = (("a", -1), ("b", 1))
    m, rem = divmod(k, 2)
    if rem == 0:
        return word_concat(word_power(ab_inv, m), word_power(ainv_b, m))
    return word_concat(word_power(ab_inv, m), (("a", 1), ("b", 1)),
                       word_power(ainv_b, m))


def schubert_word(p, q):
    """The standard two-bridge word a^{e_1} b^{e_2} ... of length p-1,
    with e_i = (-1)^{floor(i*q/p)}."""
    if p < 1:
        raise ExactError("schubert word needs p >= 1, got p=%d" % p)
    if p % 2 == 0 or q % 2 == 0:
        raise ExactError("schubert word needs p and q odd, got (%d, %d)" % (p, q))
    if not (-p < q <= p):
        raise ExactError("schubert word needs -p < q <= p, got (%d, %d)" % (p, q))
    if int_gcd(p, q) != 1:
        raise ExactError("schubert word needs gcd(p, q) = 1, got (%d, %d)" % (p, q))
    letters = []
    for i in range(1, p):
        e = 1 if (i * q // p) % 2 == 0 else -1
        letters.append(("a" if i % 2 else "b", e))
    return word_normalize(letters)


# ---------------------------------------------------------------------------
# matrices

_R = UniPoly.gen("r")
_ZERO = LaurentPoly.zero()
_ONE = LaurentPoly.unit(0)


class LaurentMat2(NamedTuple):
    a11: LaurentPoly
    a12: LaurentPoly
    a21: LaurentPoly
    a22: LaurentPoly

    def __mul__(self, other):
        return LaurentMat2(
            self.a11 * other.a11 + self.a12 * other.a21,
            self.a11 * other.a12 + self.a12 * other.a22,
            self.a21 * other.a11 + self.a22 * other.a21,
            self.a21 * other.a12 + self.a22 * other.a22,
        )

    def det(self):
        return self.a11 * self.a22 - self.a12 * self.a21

    def trace(self):
        return self.a11 + self.a22

    def inverse(self):
        if self.det() != _ONE:
            raise ExactError("inverse requires determinant 1")
        return LaurentMat2(self.a22, -self.a12, -self.a21, self.a11)

    def eval(self, lam, r):
        """Exact numeric 2x2 matrix at L = lam, r = r."""
        return tuple(tuple(Fraction(e.eval(lam, r)) for e in row)
                     for row in ((self.a11, self.a12), (self.a21, self.a22)))


MAT_IDENTITY = LaurentMat2(_ONE, _ZERO, _ZERO, _ONE)


def gen_matrices():
    A = LaurentMat2(LaurentPoly.unit(1), _ONE, _ZERO, LaurentPoly.unit(-1))
    B = LaurentMat2(LaurentPoly.unit(1), _ZERO,
                    LaurentPoly.unit(0, 2 - _R), LaurentPoly.unit(-1))
    return A, B


def mat_power(M, n):
    if n < 0:
        return mat_power(M.inverse(), -n)
    result = MAT_IDENTITY
    base = M
    while n:
        if n & 1:
            result = result * base
        n >>= 1
        if n:
            base = base * base
    return result


def eval_word(word):
    A, B = gen_matrices()
    out = MAT_IDENTITY
    for gen, exp in word:
        out = out * mat_power(A if gen == "a" else B, exp)
    return out


# ---------------------------------------------------------------------------
# the trace-parameter rewrite: L^{2j} + L^{-2j} = D_j(y)

_D_memo = [UniPoly.const(2, "y"), UniPoly.gen("y")]


def _dpoly(j):
    while len(_D_memo) <= j:
        _D_memo.append(UniPoly.gen("y") * _D_memo[-1] - _D_memo[-2])
    return _D_memo[j]


def laurent_to_ry(F):
    """Rewrite a Laurent polynomial (in L, coeffs in r) as a BiPoly in
    (r, y), y = L^2 + L^-2.  Requires even, palindromic exponents."""
    terms = dict(F.terms())
    for e, c in terms.items():
        if e % 2:
            raise TraceSubringError(e, c)
        if terms.get(-e, UniPoly.zero("r")) != c:
            raise TraceSubringError(e, c)
    out = BiPoly.zero("y", "r")
    for e, c in terms.items():
        if e > 0:
            out = out + BiPoly.from_inner(c, "y") * _dpoly(e // 2)
        elif e == 0:
            out = out + BiPoly.from_inner(c, "y")
    return out


# ---------------------------------------------------------------------------
# Riley polynomials: closed form and matrix extraction

def trace_wk(k):
    """tr W_k as a BiPoly in (r, y): Phi_{-k}(r) Psi_k(r) (y - r) + 2."""
    coeff = phi(-k, "r") * psi(k, "r")
    y_minus_r = BiPoly([-_R, UniPoly.const(1, "r")], "y", "r")
    return BiPoly.from_inner(coeff, "y") * y_minus_r + 2


def riley_poly_J(k, n):
    """Closed-form F_{k,n} in Z[r, y] (outer y, inner r):
    f_n(t) * F_{k,1} - f_{n-1}(t) with t = tr W_k."""
    y_minus_r = BiPoly([-_R, UniPoly.const(1, "r")], "y", "r")
    f_k1 = -BiPoly.from_inner(phi(-k, "r") * phi(k - 1, "r"), "y") * y_minus_r + 1
    t = trace_wk(k)
    return f_poly(n, "t")(t) * f_k1 - f_poly(n - 1, "t")(t)


def riley_poly_matrix(k, n):
    """F_{k,n} extracted from W = W_k^n as (L - L^-1) W12 + W22."""
    W = mat_power(eval_word(w_k_word(k)), n)
    lam_minus = LaurentPoly.unit(1) - LaurentPoly.unit(-1)
    return laurent_to_ry(lam_minus * W.a12 + W.a22)


def riley_poly_pq(p, q):
    """Riley polynomial of the (p, q) two-bridge word: W11 + (L^-1 - L) W12."""
    W = eval_word(schubert_word(p, q))
    lam_minus = LaurentPoly.unit(-1) - LaurentPoly.unit(1)
    return laurent_to_ry(W.a11 + lam_minus * W.a12)


def normalize_unit(F):
    """Content- and sign-normalized copy for up-to-unit comparisons
    (positive coefficient at the top (y, r)-lexicographic monomial)."""
    return F.primitive()


# ---------------------------------------------------------------------------
# randomized oracles

def _rand_fraction(rng, nonzero=False, exclude=()):
    while True:
        num = rng.randint(-100, 100)
        den = rng.randint(1, 100)
        q = Fraction(num, den)
        if nonzero and q == 0:
            continue
        if q in exclude:
            continue
        return q


def trace_formula_check(k, samples, seed=""):
    """Exact-rational spot check of tr W_k = Phi_{-k} Psi_k (y - r) + 2."""
    if samples < 1:
        raise ExactError("samples must be >= 1")
    W = eval_word(w_k_word(k))
    closed = trace_wk(k)
    rng = Random("%strace-formula-%d" % (seed, k))
    for _ in range(samples):
        lam = _rand_fraction(rng, nonzero=True, exclude=(1, -1))
        r0 = _rand_fraction(rng)
        y0 = lam ** 2 + lam ** -2
        got = W.a11.eval(lam, r0) + W.a22.eval(lam, r0)
        want = closed.eval_point(r0, y0)
        if got != want:
            return False
    return True


def ideal_generator_check(k, n, samples, seed=""):
    """Randomized check that the four entries of A W^n - W^n B cut out the
    same locus as F_{k,n}: at random L = lam0 the gcd of the specialized
    entries equals the specialized F_{k,n} up to a nonzero rational."""
    if samples < 1:
        raise ExactError("samples must be >= 1")
    A, B = gen_matrices()
    W = mat_power(eval_word(w_k_word(k)), n)
    M = A * W
    N = W * B
    entries = [M[i] - N[i] for i in range(4)]
    F = riley_poly_J(k, n)
    rng = Random("%sideal-%d-%d" % (seed, k, n))
    for _ in range(samples):
        lam = _rand_fraction(rng, nonzero=True, exclude=(1, -1))
        y0 = lam ** 2 + lam ** -2
        spec = [_eval_unit(e, lam) for e in entries]
        g = UniPoly.zero("r")
        for s in spec:
            g = poly_gcd(g, s)
        f_spec = F.eval_outer(y0)
        if g.degree <= 0 and f_spec.degree <= 0:
            if f_spec.is_zero:
                return False
            continue  # both cut out the empty set: vacuous pass
        if g.degree != f_spec.degree:
            return False
        if g.primitive() != f_spec.clear_denominators().primitive():
            return False
    return True


def _eval_unit(lp, lam):
    """Specialize the Laurent unit to an exact rational, keep r symbolic."""
    acc = UniPoly.zero("r")
    for e, c in lp.terms():
        acc = acc + c * (Fraction(lam) ** e)
    return acc
