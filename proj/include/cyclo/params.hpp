#pragma once

#include <optional>
#include <vector>

#include "cyclo/scalar.hpp"

namespace cyclo {

// The three parameter systems for G(ell,1,n). Index j runs 0..ell-1; the
// defining relations are d_j = j - kappa*ell*s_j = -ell*h_j and c0 = -kappa.
struct CParams {
    int ell = 2;
    ExactScalar c0;
    std::vector<ExactScalar> d;
};

struct HParams {
    int ell = 2;
    ExactScalar kappa;  // nonzero
    std::vector<ExactScalar> h;
};

struct SParams {
    int ell = 2;
    ExactScalar kappa;  // nonzero
    std::vector<ExactScalar> s;
};

// One relation s_i - s_j = m + t/kappa with kappa transcendental and every
// other s-difference generic; the derived constant in the d-system is
// k = i - j - ell*t (so d_i - d_j - ell*m*c0 = k).
struct HyperplaneParams {
    int ell = 2;
    int i = 0;
    int j = 1;
    long long m = 0;
    long long t = 0;

    long long k_c() const { return i - j - static_cast<long long>(ell) * t; }

    friend bool operator==(const HyperplaneParams& a, const HyperplaneParams& b) {
        return a.ell == b.ell && a.i == b.i && a.j == b.j && a.m == b.m && a.t == b.t;
    }
    friend bool operator<(const HyperplaneParams& a, const HyperplaneParams& b) {
        if (a.ell != b.ell) return a.ell < b.ell;
        if (a.i != b.i) return a.i < b.i;
        if (a.j != b.j) return a.j < b.j;
        if (a.m != b.m) return a.m < b.m;
        return a.t < b.t;
    }
};

// Throws bad_hyperplane unless 0 <= i < j <= ell-1 and ell >= 2.
void validate_hyperplane(const HyperplaneParams& hp);

HParams c_to_h(const CParams& p);  // kappa_zero when c0 = 0
CParams h_to_c(const HParams& p);
SParams h_to_s(const HParams& p);
HParams s_to_h(const SParams& p);
SParams c_to_s(const CParams& p);
CParams s_to_c(const SParams& p);

// Coordinates sum to c0 (classical) resp. -c0 (quantum; value fixed by
// telescoping the printed formula).
std::vector<ExactScalar> lambda_classical(const CParams& p);
std::vector<ExactScalar> lambda_quantum(const CParams& p);

struct AsphericalWitness {
    enum class Kind { CondA, CondB };
    Kind kind = Kind::CondA;
    long long k = 0;
    long long m = 0;
    int j = 0;           // CondB only
    long long khat = 0;  // CondB via s-parameters only
};

// Witness-bearing aspherical tests; nullopt means spherical. Inputs must be
// rational-valued for the searches to be decidable.
std::optional<AsphericalWitness> is_aspherical_c(const CParams& p, long long n);
std::optional<AsphericalWitness> is_aspherical_s(const SParams& p, long long n);

// Normal forms (i<j, duplicates removed, sorted) of every hyperplane arising
// from a condition-(b) witness at the given rank.
std::vector<HyperplaneParams> enumerate_aspherical_hyperplanes(int ell, long long n);

// Symbolic Weil-generic point on the hyperplane: c0 = -kappa transcendental,
// d_a = 0 for a != i, d_i = k_c - ell*m*kappa.
CParams hyperplane_cparams(const HyperplaneParams& hp);
SParams hyperplane_sparams(const HyperplaneParams& hp);

// Exact integer helpers: floor(sqrt(x)) and q = floor(sqrt(n + m^2/4) - |m|/2).
long long isqrt_ll(long long x);
long long q_floor(long long n, long long m);

}  // namespace cyclo
