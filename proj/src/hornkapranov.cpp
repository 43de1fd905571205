#include "tropdisc/hornkapranov.hpp"

#include "tropdisc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

namespace tropdisc {

namespace {

Rat rat_pow(const Rat& base, const Int& e) {
    if (e == 0) return Rat(1);
    Int a = abs(e);
    if (a > 1000000) throw std::invalid_argument("rat_pow: exponent out of range");
    unsigned k = unsigned(a);
    Int num = pow(numerator(base), k);
    Int den = pow(denominator(base), k);
    return e > 0 ? Rat(num, den) : Rat(den, num);
}

std::complex<double> cpow_int(std::complex<double> base, long e) {
    bool invert = e < 0;
    unsigned long k = invert ? -(unsigned long)(e) : (unsigned long)(e);
    std::complex<double> r = 1.0;
    while (k) {
        if (k & 1) r *= base;
        base *= base;
        k >>= 1;
    }
    return invert ? 1.0 / r : r;
}

std::complex<double> sorted_product(std::vector<std::complex<double>> factors) {
    std::sort(factors.begin(), factors.end(),
              [](const std::complex<double>& a, const std::complex<double>& b) {
                  return std::abs(a) < std::abs(b);
              });
    std::complex<double> p = 1.0;
    for (const auto& f : factors) p *= f;
    return p;
}

std::string form_name(const DerivedMatrices& d, int j) {
    if (j < d.N) return "coordinate s_" + std::to_string(j + 1);
    if (j < d.N + d.n) return "linear form psi_" + std::to_string(j - d.N + 1);
    return "linear form psi-tilde_" + std::to_string(j - d.N - d.n + 1);
}

// All N+2n linear forms <u_j, s>; throws on any zero.
RatVector form_values(const DerivedMatrices& d, const ParameterPoint& s) {
    if (int(s.s.size()) != d.N) throw std::invalid_argument("parameter point has wrong length");
    RatVector vals(d.U.rows());
    for (int j = 0; j < d.U.rows(); ++j) {
        vals[j] = dot(s.s, d.U.row(j));
        if (vals[j] == 0)
            throw PoleOrZero("evaluation pole: " + form_name(d, j) + " vanishes at s");
    }
    return vals;
}

}  // namespace

RatVector eval_w(const DerivedMatrices& d, const ParameterPoint& s) {
    RatVector forms = form_values(d, s);
    RatVector w(d.N, Rat(1));
    for (int lam = 0; lam < d.N; ++lam)
        for (int j = 0; j < d.V.cols(); ++j) {
            const Int& e = d.V.at(lam, j);
            if (e != 0) w[lam] *= rat_pow(forms[j], e);
        }
    return w;
}

std::vector<std::vector<std::complex<double>>> eval_x_branches(const DerivedMatrices& d,
                                                               const ParameterPoint& s,
                                                               double dedup_tol) {
    form_values(d, s);  // pole guard; the identical forms reappear below

    const int n = d.n, N = d.N;
    Int det_abs = abs(d.det_omega);
    if (det_abs > 64) throw std::invalid_argument("eval_x_branches: |det omega| too large");
    const int D = int(det_abs);
    const int sgn = d.det_omega > 0 ? 1 : -1;

    // Per equation k: the base <phi-tilde_k, s> / <phi_k, s> and its
    // principal |det|-th root; branches multiply the root by roots of unity.
    std::vector<std::complex<double>> root(n);
    for (int k = 0; k < n; ++k) {
        Rat num = dot(d.PhiTilde.row(k), s.s);
        Rat den = dot(d.Phi.row(k), s.s);
        std::complex<double> base(double(num) / double(den), 0.0);
        root[k] = std::pow(base, 1.0 / D);
    }
    // Prefactor -s_lambda / <phi-tilde_i, s> per coordinate.
    std::vector<std::complex<double>> pre(N);
    for (int lam = 0; lam < N; ++lam) {
        int i = d.block_of[lam];
        Rat v = -s.s[lam] / dot(d.PhiTilde.row(i), s.s);
        pre[lam] = double(v);
    }

    std::vector<std::vector<std::complex<double>>> branches;
    std::vector<int> m(n, 0);
    const double two_pi = 2.0 * std::numbers::pi;
    while (true) {
        std::vector<std::complex<double>> x(N);
        for (int lam = 0; lam < N; ++lam) {
            std::vector<std::complex<double>> factors{pre[lam]};
            for (int k = 0; k < n; ++k) {
                std::complex<double> rk =
                    root[k] * std::polar(1.0, two_pi * m[k] / D);
                long e = sgn * long(d.Psi.at(k, lam));
                factors.push_back(cpow_int(rk, e));
            }
            x[lam] = sorted_product(std::move(factors));
        }
        double scale = 0.0;
        for (const auto& v : x) scale = std::max(scale, std::abs(v));
        bool fresh = true;
        for (const auto& b : branches) {
            double dist = 0.0;
            for (int lam = 0; lam < N; ++lam) dist = std::max(dist, std::abs(b[lam] - x[lam]));
            if (dist <= dedup_tol * (1.0 + scale)) {
                fresh = false;
                break;
            }
        }
        if (fresh) branches.push_back(std::move(x));

        int k = 0;
        while (k < n && ++m[k] == D) m[k++] = 0;
        if (k == n) break;
    }
    return branches;
}

double residual(const DerivedMatrices& d, const SupportPolynomial& delta, const ParameterPoint& s) {
    if (delta.dim != d.N)
        throw std::invalid_argument("residual: polynomial dimension does not match the system");
    auto branches = eval_x_branches(d, s);
    double best = std::numeric_limits<double>::infinity();
    for (const auto& x : branches) {
        std::vector<std::complex<double>> monomials;
        double max_mag = 0.0;
        for (const auto& [expo, coeff] : delta.terms) {
            std::vector<std::complex<double>> factors;
            for (int j = 0; j < d.N; ++j)
                if (expo[j] != 0) factors.push_back(cpow_int(x[j], long(expo[j])));
            std::complex<double> mono = sorted_product(std::move(factors));
            // normalization is by the bare monomial scale, not the term scale:
            // a unit coefficient perturbation then shows up at its own size
            max_mag = std::max(max_mag, std::abs(mono));
            monomials.push_back(std::complex<double>(double(coeff), 0.0) * mono);
        }
        std::sort(monomials.begin(), monomials.end(),
                  [](const std::complex<double>& a, const std::complex<double>& b) {
                      return std::abs(a) < std::abs(b);
                  });
        std::complex<double> sum = 0.0;
        for (const auto& m : monomials) sum += m;
        best = std::min(best, std::abs(sum) / (1.0 + max_mag));
    }
    return best;
}

std::vector<ParameterPoint> sample_points(const DerivedMatrices& d, int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(-9, 9);
    std::vector<ParameterPoint> out;
    long attempts = 0, limit = 10000L * std::max(count, 1);
    while (int(out.size()) < count) {
        if (++attempts > limit)
            throw Error("sample_points: could not find non-pole points; "
                        "the linear forms may vanish on the sampling grid");
        ParameterPoint p;
        p.s.resize(d.N);
        bool ok = true;
        for (int j = 0; j < d.N; ++j) {
            int v = dist(rng);
            if (v == 0) {
                ok = false;
                break;
            }
            p.s[j] = v;
        }
        if (!ok) continue;
        for (int k = 0; k < d.n && ok; ++k) {
            if (dot(p.s, d.Psi.row(k)) == 0) ok = false;
            if (ok && dot(p.s, d.PsiTilde.row(k)) == 0) ok = false;
        }
        if (ok) out.push_back(std::move(p));
    }
    return out;
}

}  // namespace tropdisc
