#include "cyclo/params.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

namespace cyclo {

namespace {

void check_entries(int ell, std::size_t got, const char* what) {
    if (ell < 1 || static_cast<std::size_t>(ell) != got)
        fail(errc::parse_error, std::string("expected ") + std::to_string(ell) + " entries for " +
                                    what + ", got " + std::to_string(got));
}

void check_kappa(const ExactScalar& kappa) {
    if (kappa.is_zero()) fail(errc::kappa_zero, "kappa must be nonzero");
}

}  // namespace

void validate_hyperplane(const HyperplaneParams& hp) {
    if (hp.ell < 2 || hp.i < 0 || hp.j <= hp.i || hp.j > hp.ell - 1)
        fail(errc::bad_hyperplane, "need 0 <= i < j <= ell-1 with ell >= 2");
}

HParams c_to_h(const CParams& p) {
    check_entries(p.ell, p.d.size(), "d");
    if (p.c0.is_zero()) fail(errc::kappa_zero, "c0 = 0 makes kappa zero");
    HParams out;
    out.ell = p.ell;
    out.kappa = -p.c0;
    for (const auto& dj : p.d) out.h.push_back(dj / Rational(-p.ell));
    return out;
}

CParams h_to_c(const HParams& p) {
    check_entries(p.ell, p.h.size(), "h");
    check_kappa(p.kappa);
    CParams out;
    out.ell = p.ell;
    out.c0 = -p.kappa;
    for (const auto& hj : p.h) out.d.push_back(hj * Rational(-p.ell));
    return out;
}

SParams h_to_s(const HParams& p) {
    check_entries(p.ell, p.h.size(), "h");
    check_kappa(p.kappa);
    SParams out;
    out.ell = p.ell;
    out.kappa = p.kappa;
    for (int j = 0; j < p.ell; ++j)
        out.s.push_back((p.h[static_cast<std::size_t>(j)] + Rational(j, p.ell)) / p.kappa);
    return out;
}

HParams s_to_h(const SParams& p) {
    check_entries(p.ell, p.s.size(), "s");
    check_kappa(p.kappa);
    HParams out;
    out.ell = p.ell;
    out.kappa = p.kappa;
    for (int j = 0; j < p.ell; ++j)
        out.h.push_back(p.kappa * p.s[static_cast<std::size_t>(j)] - Rational(j, p.ell));
    return out;
}

SParams c_to_s(const CParams& p) { return h_to_s(c_to_h(p)); }
CParams s_to_c(const SParams& p) { return h_to_c(s_to_h(p)); }

std::vector<ExactScalar> lambda_classical(const CParams& p) {
    check_entries(p.ell, p.d.size(), "d");
    const Rational inv_ell(1, p.ell);
    std::vector<ExactScalar> out;
    out.push_back(p.c0 + (p.d[static_cast<std::size_t>(p.ell - 1)] - p.d[0]) * inv_ell);
    for (int a = 1; a < p.ell; ++a)
        out.push_back((p.d[static_cast<std::size_t>(a - 1)] - p.d[static_cast<std::size_t>(a)]) *
                      inv_ell);
    return out;
}

std::vector<ExactScalar> lambda_quantum(const CParams& p) {
    check_entries(p.ell, p.d.size(), "d");
    const Rational inv_ell(1, p.ell);
    std::vector<ExactScalar> out;
    out.push_back((ExactScalar(Rational(1 - p.ell)) - p.c0 * Rational(p.ell) + p.d[0] -
                   p.d[static_cast<std::size_t>(p.ell - 1)]) *
                  inv_ell);
    for (int a = 1; a < p.ell; ++a)
        out.push_back((ExactScalar(Rational(1)) - p.d[static_cast<std::size_t>(a - 1)] +
                       p.d[static_cast<std::size_t>(a)]) *
                      inv_ell);
    return out;
}

long long isqrt_ll(long long x) {
    if (x < 0) fail(errc::overflow, "isqrt of negative value");
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(x)));
    while (r > 0 && r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

long long q_floor(long long n, long long m) {
    long long am = m < 0 ? -m : m;
    long long s = isqrt_ll(4 * n + m * m);
    return (s - am) / 2;
}

namespace {

// Condition (a): c0 = -k/m with 1 <= k < m <= n, i.e. c0 in (-1,0) with
// denominator at most n.
std::optional<AsphericalWitness> cond_a(const ExactScalar& value, bool negate, long long n) {
    if (!value.is_rational()) return std::nullopt;
    Rational v = value.as_rational();
    if (negate) v = -v;  // now v should equal k/m > 0
    if (!(v > Rational(0) && v < Rational(1) && v.den() <= n)) return std::nullopt;
    AsphericalWitness w;
    w.kind = AsphericalWitness::Kind::CondA;
    w.k = v.num();
    w.m = v.den();
    return w;
}

int mod_index(long long a, int ell) {
    long long r = a % ell;
    if (r < 0) r += ell;
    return static_cast<int>(r);
}

}  // namespace

std::optional<AsphericalWitness> is_aspherical_c(const CParams& p, long long n) {
    check_entries(p.ell, p.d.size(), "d");
    if (auto w = cond_a(p.c0, /*negate=*/true, n)) return w;
    const long long ell = p.ell;
    for (int j = 1; j < p.ell; ++j) {
        for (long long m = -(n - 1); m <= n - 1; ++m) {
            long long kmax = j + (q_floor(n, m) - 1) * ell;
            for (long long k = 1; k <= kmax; ++k) {
                if (k % ell == 0) continue;
                const ExactScalar rhs = p.d[static_cast<std::size_t>(j)] -
                                        p.d[static_cast<std::size_t>(mod_index(j - k, p.ell))] +
                                        p.c0 * Rational(ell * m);
                if (rhs == ExactScalar(Rational(k))) {
                    AsphericalWitness w;
                    w.kind = AsphericalWitness::Kind::CondB;
                    w.j = j;
                    w.m = m;
                    w.k = k;
                    return w;
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<AsphericalWitness> is_aspherical_s(const SParams& p, long long n) {
    check_entries(p.ell, p.s.size(), "s");
    check_kappa(p.kappa);
    if (auto w = cond_a(p.kappa, /*negate=*/false, n)) return w;
    const long long ell = p.ell;
    for (int j = 1; j < p.ell; ++j) {
        for (long long m = -(n - 1); m <= n - 1; ++m) {
            long long kmax = j + (q_floor(n, m) - 1) * ell;
            for (long long k = 1; k <= kmax; ++k) {
                if (k % ell == 0) continue;
                // Unique khat in [j+1-ell, j] congruent to k mod ell.
                long long khat = j - mod_index(j - k, p.ell);
                const ExactScalar rhs =
                    p.kappa * Rational(ell) *
                    (p.s[static_cast<std::size_t>(mod_index(j - k, p.ell))] -
                     p.s[static_cast<std::size_t>(j)] - Rational(m));
                if (rhs == ExactScalar(Rational(k - khat))) {
                    AsphericalWitness w;
                    w.kind = AsphericalWitness::Kind::CondB;
                    w.j = j;
                    w.m = m;
                    w.k = k;
                    w.khat = khat;
                    return w;
                }
            }
        }
    }
    return std::nullopt;
}

std::vector<HyperplaneParams> enumerate_aspherical_hyperplanes(int ell, long long n) {
    if (ell < 2 || n < 1) fail(errc::bad_hyperplane, "need ell >= 2 and n >= 1");
    std::set<HyperplaneParams> seen;
    for (int j = 1; j < ell; ++j) {
        for (long long m = -(n - 1); m <= n - 1; ++m) {
            long long kmax = j + (q_floor(n, m) - 1) * ell;
            for (long long k = 1; k <= kmax; ++k) {
                if (k % ell == 0) continue;
                int i = mod_index(j - k, ell);
                long long t = (k + i - j) / ell;
                HyperplaneParams hp;
                hp.ell = ell;
                if (i < j) {
                    hp.i = i;
                    hp.j = j;
                    hp.m = m;
                    hp.t = t;
                } else {
                    hp.i = j;
                    hp.j = i;
                    hp.m = -m;
                    hp.t = -t;
                }
                seen.insert(hp);
            }
        }
    }
    return std::vector<HyperplaneParams>(seen.begin(), seen.end());
}

CParams hyperplane_cparams(const HyperplaneParams& hp) {
    validate_hyperplane(hp);
    CParams out;
    out.ell = hp.ell;
    out.c0 = ExactScalar::transcendental(0, -1, 0);  // c0 = -kappa
    out.d.assign(static_cast<std::size_t>(hp.ell), ExactScalar());
    out.d[static_cast<std::size_t>(hp.i)] =
        ExactScalar::transcendental(Rational(hp.k_c()), Rational(-hp.ell * hp.m), 0);
    return out;
}

SParams hyperplane_sparams(const HyperplaneParams& hp) { return c_to_s(hyperplane_cparams(hp)); }

}  // namespace cyclo
