#include "bridgewalk/roots.hpp"

#include <cassert>

namespace bridgewalk {

namespace {

int sgn_rat(const Rational& q) { return sgn(q); }

}  // namespace

int sign_variations_in(const Polynomial& p, const Rational& a, const Rational& b) {
    assert(a < b);
    // q(t) = (1+t)^deg * p((a + b t) / (1 + t)) maps t in (0, inf) to (a, b)
    int deg = p.degree();
    if (deg < 0) return 0;
    Polynomial num({a, b});        // a + b t
    Polynomial den({Rational(1), Rational(1)});  // 1 + t
    // Horner from the top: q = sum c_i num^i den^(deg-i)
    Polynomial q = Polynomial::constant(p.coeff(deg));
    for (int i = deg - 1; i >= 0; --i)
        q = q * num + Polynomial::constant(p.coeff(i)) * [&] {
            Polynomial d = Polynomial({Rational(1)});
            for (int k = 0; k < deg - i; ++k) d = d * den;
            return d;
        }();
    int variations = 0, prev = 0;
    for (int i = 0; i <= q.degree(); ++i) {
        int s = sgn_rat(q.coeff(i));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++variations;
        prev = s;
    }
    return variations;
}

RootInterval smallest_positive_root(const Polynomial& p, const Rational& width,
                                    const Rational& search_hi) {
    if (p.is_zero() || p.eval(0) == 0)
        throw std::invalid_argument("smallest_positive_root requires p(0) != 0");
    if (!(width > 0) || !(search_hi > 0))
        throw std::invalid_argument("width and search_hi must be positive");

    // locate the first sign change (or exact zero) on refining grids
    Rational lo, hi;
    int sign_lo = 0, sign_hi = 0;
    bool found = false;
    for (int cells = 16; cells <= (1 << 14) && !found; cells *= 4) {
        int prev = sgn_rat(p.eval(0));
        for (int t = 1; t <= cells; ++t) {
            Rational x = search_hi * Rational(t, cells);
            int s = sgn_rat(p.eval(x));
            if (s == 0) {
                // exact root at a grid point: shrink a symmetric bracket
                // around it until the end signs are opposite
                Rational eps = search_hi / (4 * cells);
                for (int it = 0;; ++it) {
                    if (it >= 200)
                        throw NoRootFound("even-order root cannot be certified");
                    Rational a = x - eps, b = x + eps;
                    int sa = sgn_rat(p.eval(a)), sb = sgn_rat(p.eval(b));
                    if (a > 0 && sa != 0 && sb != 0 && sa != sb) {
                        lo = a;
                        hi = b;
                        sign_lo = sa;
                        sign_hi = sb;
                        found = true;
                        break;
                    }
                    eps /= 2;
                }
                break;
            }
            if (prev != 0 && s != prev) {
                lo = search_hi * Rational(t - 1, cells);
                hi = x;
                sign_lo = prev;
                sign_hi = s;
                found = true;
                break;
            }
            prev = s;
        }
    }
    if (!found) throw NoRootFound("no sign change of p in (0, search_hi]");

    // certificates: exactly one root in the bracket, none below it
    if (sign_variations_in(p, lo, hi) != 1)
        throw NoRootFound("bracket does not isolate a single simple root");
    if (lo > 0 && sign_variations_in(p, Rational(0), lo) != 0)
        throw NoRootFound("a smaller positive root may exist below the bracket");

    // exact bisection down to the requested width
    while (hi - lo > width) {
        Rational mid = (lo + hi) / 2;
        int s = sgn_rat(p.eval(mid));
        if (s == 0) {
            // the root is rational and we hit it: center a tiny bracket on it
            Rational shift = std::min({Rational(mid - lo), Rational(hi - mid), width}) / 2;
            lo = mid - shift;
            hi = mid + shift;
            sign_lo = sgn_rat(p.eval(lo));
            sign_hi = sgn_rat(p.eval(hi));
            assert(sign_lo != 0 && sign_hi != 0 && sign_lo != sign_hi);
            break;
        }
        if (s == sign_lo)
            lo = mid;
        else
            hi = mid;
    }
    return RootInterval{lo, hi, sign_lo, sign_hi};
}

ExactBridgeConstant bridge_constant_exact(Direction dir, int precision_bits) {
    if (precision_bits < 1 || precision_bits > 4096)
        throw std::invalid_argument("precision_bits out of range");
    ExactBridgeConstant out;
    out.dir = dir;
    out.quartic = threshold_quartic(dir);

    BigInt denom = BigInt(1) << unsigned(precision_bits);
    Rational target = Rational(1, denom);
    // both roots lie above 1/8, so the reciprocal inflates widths by < 64;
    // start a little finer and tighten if needed
    Rational w = target / 128;
    for (int attempt = 0; attempt < 8; ++attempt, w /= 16) {
        RootInterval root = smallest_positive_root(out.quartic, w, Rational(1, 2));
        assert(root.lo > 0);
        RootInterval value{Rational(1) / root.hi, Rational(1) / root.lo, 0, 0};
        if (value.width() <= target) {
            out.root = root;
            out.value = value;
            return out;
        }
    }
    throw NoRootFound("could not tighten the constant bracket");
}

}  // namespace bridgewalk
