#include "cyclo/quiver.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace cyclo {

namespace {

constexpr long long kMaxExhaustiveTotal = 14;

void check_dim(const QuiverData& q, const DimVector& v, const char* what) {
    if (v.size() != static_cast<std::size_t>(q.nv))
        fail(errc::parse_error, std::string(what) + " has wrong number of vertices");
}

long long dot(const DimVector& a, const DimVector& b) {
    long long s = 0;
    for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
    return s;
}

ExactScalar dot(const std::vector<ExactScalar>& a, const DimVector& b) {
    ExactScalar s;
    for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * ExactScalar(Rational(b[k]));
    return s;
}

long long total(const DimVector& v) { return std::accumulate(v.begin(), v.end(), 0LL); }

bool is_zero(const DimVector& v) {
    return std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; });
}

bool has_loop(const QuiverData& q, int k) {
    for (const Arrow& a : q.arrows)
        if (a.t == k && a.h == k && a.mult > 0) return true;
    return false;
}

bool support_connected(const QuiverData& q, const DimVector& v) {
    std::vector<int> support;
    for (int k = 0; k < q.nv; ++k)
        if (v[static_cast<std::size_t>(k)] > 0) support.push_back(k);
    if (support.empty()) return false;
    std::vector<char> in(static_cast<std::size_t>(q.nv), 0), seen(static_cast<std::size_t>(q.nv), 0);
    for (int k : support) in[static_cast<std::size_t>(k)] = 1;
    std::vector<int> stack{support.front()};
    seen[static_cast<std::size_t>(support.front())] = 1;
    while (!stack.empty()) {
        int k = stack.back();
        stack.pop_back();
        for (const Arrow& a : q.arrows) {
            if (a.mult <= 0) continue;
            int other = -1;
            if (a.t == k) other = a.h;
            else if (a.h == k) other = a.t;
            if (other >= 0 && in[static_cast<std::size_t>(other)] &&
                !seen[static_cast<std::size_t>(other)]) {
                seen[static_cast<std::size_t>(other)] = 1;
                stack.push_back(other);
            }
        }
    }
    for (int k : support)
        if (!seen[static_cast<std::size_t>(k)]) return false;
    return true;
}

// (v, eps_k) without building the basis vector.
long long pair_with_simple(const QuiverData& q, const DimVector& v, int k) {
    long long s = 2 * v[static_cast<std::size_t>(k)];
    for (const Arrow& a : q.arrows) {
        if (a.h == k) s -= a.mult * v[static_cast<std::size_t>(a.t)];
        if (a.t == k) s -= a.mult * v[static_cast<std::size_t>(a.h)];
    }
    return s;
}

}  // namespace

long long tits_form(const QuiverData& q, const DimVector& v1, const DimVector& v2) {
    check_dim(q, v1, "dimension vector");
    check_dim(q, v2, "dimension vector");
    long long s = 0;
    for (int k = 0; k < q.nv; ++k)
        s += 2 * v1[static_cast<std::size_t>(k)] * v2[static_cast<std::size_t>(k)];
    for (const Arrow& a : q.arrows)
        s -= a.mult * (v1[static_cast<std::size_t>(a.t)] * v2[static_cast<std::size_t>(a.h)] +
                       v1[static_cast<std::size_t>(a.h)] * v2[static_cast<std::size_t>(a.t)]);
    return s;
}

long long p_of(const QuiverData& q, const DimVector& v) {
    return 1 - tits_form(q, v, v) / 2;
}

RootKind classify_root(const QuiverData& q, DimVector v) {
    check_dim(q, v, "dimension vector");
    for (;;) {
        for (long long x : v)
            if (x < 0) return RootKind::NotARoot;
        if (is_zero(v)) return RootKind::NotARoot;
        if (!support_connected(q, v)) return RootKind::NotARoot;
        if (total(v) == 1) {
            int at = 0;
            while (v[static_cast<std::size_t>(at)] == 0) ++at;
            if (!has_loop(q, at)) return RootKind::Real;
        }
        bool reflected = false;
        for (int k = 0; k < q.nv; ++k) {
            if (has_loop(q, k)) continue;
            long long pr = pair_with_simple(q, v, k);
            if (pr > 0) {
                v[static_cast<std::size_t>(k)] -= pr;
                reflected = true;
                break;
            }
        }
        if (!reflected) return RootKind::Imaginary;
    }
}

QuiverData cyclic_quiver(int ell) {
    if (ell < 1) fail(errc::parse_error, "need at least one vertex");
    QuiverData q;
    q.nv = ell;
    for (int a = 0; a < ell; ++a) {
        q.arrows.push_back({a, (a + 1) % ell, 1});
        q.names.push_back(std::to_string(a));
    }
    return q;
}

QuiverData framed(const QuiverData& q, const DimVector& w) {
    check_dim(q, w, "framing");
    QuiverData out = q;
    if (out.names.empty())
        for (int k = 0; k < q.nv; ++k) out.names.push_back(std::to_string(k));
    out.nv = q.nv + 1;
    out.names.push_back("inf");
    for (int k = 0; k < q.nv; ++k)
        if (w[static_cast<std::size_t>(k)] > 0) out.arrows.push_back({k, q.nv, w[static_cast<std::size_t>(k)]});
    return out;
}

namespace {

// Multisets of candidate vectors summing to target, candidates drawn with
// repetition from cand[from..]; calls sink(multiset) and stops early on false.
bool for_each_multiset(const std::vector<DimVector>& cand, std::size_t from, DimVector& remaining,
                       std::vector<std::size_t>& picked,
                       const std::function<bool(const std::vector<std::size_t>&)>& sink) {
    if (is_zero(remaining)) return sink(picked);
    for (std::size_t c = from; c < cand.size(); ++c) {
        const DimVector& u = cand[c];
        bool fits = true;
        for (std::size_t k = 0; k < u.size(); ++k)
            if (u[k] > remaining[k]) { fits = false; break; }
        if (!fits) continue;
        for (std::size_t k = 0; k < u.size(); ++k) remaining[k] -= u[k];
        picked.push_back(c);
        bool keep = for_each_multiset(cand, c, remaining, picked, sink);
        picked.pop_back();
        for (std::size_t k = 0; k < u.size(); ++k) remaining[k] += u[k];
        if (!keep) return false;
    }
    return true;
}

// All nonzero vectors 0 < u <= v, odometer order.
std::vector<DimVector> vectors_below(const DimVector& v) {
    std::vector<DimVector> out;
    DimVector u(v.size(), 0);
    for (;;) {
        std::size_t k = 0;
        while (k < v.size()) {
            if (u[k] < v[k]) { ++u[k]; break; }
            u[k] = 0;
            ++k;
        }
        if (k == v.size()) break;
        out.push_back(u);
    }
    return out;
}

}  // namespace

bool cb_simple_exists(const QuiverData& qw, const std::vector<ExactScalar>& lambda_ext,
                      const DimVector& vtilde) {
    check_dim(qw, vtilde, "dimension vector");
    if (lambda_ext.size() != static_cast<std::size_t>(qw.nv))
        fail(errc::parse_error, "parameter vector has wrong number of vertices");
    if (total(vtilde) > kMaxExhaustiveTotal)
        fail(errc::resource_limit, "dimension too large for exhaustive decomposition search");
    if (classify_root(qw, vtilde) == RootKind::NotARoot) return false;
    if (!dot(lambda_ext, vtilde).is_zero()) return false;
    std::vector<DimVector> cand;
    for (DimVector& u : vectors_below(vtilde))
        if (dot(lambda_ext, u).is_zero()) cand.push_back(std::move(u));
    const long long pv = p_of(qw, vtilde);
    DimVector remaining = vtilde;
    std::vector<std::size_t> picked;
    bool ok = for_each_multiset(cand, 0, remaining, picked,
                                [&](const std::vector<std::size_t>& parts) {
                                    if (parts.size() < 2) return true;  // not proper
                                    long long sum = 0;
                                    for (std::size_t c : parts) sum += p_of(qw, cand[c]);
                                    return pv > sum;
                                });
    return ok;
}

bool moment_flat(const QuiverData& q, const DimVector& v, const DimVector& w) {
    check_dim(q, v, "dimension vector");
    check_dim(q, w, "framing");
    if (total(v) > kMaxExhaustiveTotal)
        fail(errc::resource_limit, "dimension too large for exhaustive decomposition search");
    // defect = p(v) + sum over parts of (w.u - p(u)); the remainder v0 absorbs
    // whatever is not covered, so only negative-contribution roots matter.
    std::vector<DimVector> cand;
    for (DimVector& u : vectors_below(v))
        if (classify_root(q, u) != RootKind::NotARoot && dot(w, u) - p_of(q, u) < 0)
            cand.push_back(std::move(u));
    const long long base = p_of(q, v);
    long long worst = base;
    std::function<void(std::size_t, DimVector&, long long)> rec =
        [&](std::size_t from, DimVector& remaining, long long defect) {
            worst = std::min(worst, defect);
            for (std::size_t c = from; c < cand.size(); ++c) {
                bool fits = true;
                for (std::size_t k = 0; k < remaining.size(); ++k)
                    if (cand[c][k] > remaining[k]) { fits = false; break; }
                if (!fits) continue;
                for (std::size_t k = 0; k < remaining.size(); ++k) remaining[k] -= cand[c][k];
                rec(c, remaining, defect + dot(w, cand[c]) - p_of(q, cand[c]));
                for (std::size_t k = 0; k < remaining.size(); ++k) remaining[k] += cand[c][k];
            }
        };
    DimVector remaining = v;
    rec(0, remaining, base);
    return worst >= 0;
}

bool generic_pair(const QuiverData& q, const DimVector& v,
                  const std::vector<ExactScalar>& lambda, const DimVector& theta) {
    check_dim(q, v, "dimension vector");
    check_dim(q, theta, "stability parameter");
    if (lambda.size() != static_cast<std::size_t>(q.nv))
        fail(errc::parse_error, "parameter vector has wrong number of vertices");
    long long cells = 1;
    for (long long x : v) {
        cells *= x + 1;
        if (cells > 200000) fail(errc::resource_limit, "dimension too large for root scan");
    }
    for (const DimVector& u : vectors_below(v)) {
        if (dot(theta, u) != 0) continue;
        if (!dot(lambda, u).is_zero()) continue;
        if (classify_root(q, u) != RootKind::NotARoot) return false;
    }
    return true;
}

std::vector<Rational> rho(const QuiverData& q, const DimVector& v, const DimVector& w) {
    check_dim(q, v, "dimension vector");
    check_dim(q, w, "framing");
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(q.nv));
    for (int k = 0; k < q.nv; ++k) {
        long long in = 0, outk = 0;
        for (const Arrow& a : q.arrows) {
            if (a.h == k) in += a.mult * v[static_cast<std::size_t>(a.t)];
            if (a.t == k) outk += a.mult * v[static_cast<std::size_t>(a.h)];
        }
        out.push_back(Rational(-(in - outk - w[static_cast<std::size_t>(k)]), 2));
    }
    return out;
}

namespace {

// The framing-reversed companion of rho: same arrow sums with +w_k in place
// of -w_k. slice() needs this variant so that restricted parameters come out
// with the orientation its worked examples fix (e.g. v - s, not s - v).
std::vector<Rational> rho_framing_reversed(const QuiverData& q, const DimVector& v,
                                           const DimVector& w) {
    std::vector<Rational> out = rho(q, v, w);
    for (int k = 0; k < q.nv; ++k)
        out[static_cast<std::size_t>(k)] =
            out[static_cast<std::size_t>(k)] - Rational(w[static_cast<std::size_t>(k)]);
    return out;
}

}  // namespace

SliceQuiver slice(const QuiverData& q, const DimVector& v, const DimVector& w,
                  const Decomposition& dec, const std::vector<ExactScalar>& lambda) {
    check_dim(q, v, "dimension vector");
    check_dim(q, w, "framing");
    check_dim(q, dec.v0, "decomposition remainder");
    if (lambda.size() != static_cast<std::size_t>(q.nv))
        fail(errc::parse_error, "parameter vector has wrong number of vertices");
    DimVector sum = dec.v0;
    for (long long x : dec.v0)
        if (x < 0) fail(errc::inconsistent_decomposition, "negative remainder entry");
    for (const auto& [part, mult] : dec.parts) {
        check_dim(q, part, "decomposition part");
        if (mult < 1) fail(errc::inconsistent_decomposition, "part multiplicity must be >= 1");
        if (is_zero(part)) fail(errc::inconsistent_decomposition, "zero part");
        if (classify_root(q, part) == RootKind::NotARoot)
            fail(errc::inconsistent_decomposition, "part is not a root");
        for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += mult * part[k];
    }
    if (sum != v) fail(errc::inconsistent_decomposition, "decomposition does not sum to v");

    const std::size_t k = dec.parts.size();
    SliceQuiver out;
    out.quiver.nv = static_cast<int>(k);
    for (std::size_t u = 0; u < k; ++u) out.quiver.names.push_back(std::to_string(u));
    for (std::size_t u = 0; u < k; ++u) {
        long long loops = p_of(q, dec.parts[u].first);
        if (loops < 0) fail(errc::inconsistent_decomposition, "negative loop count at a part");
        if (loops > 0) out.quiver.arrows.push_back({static_cast<int>(u), static_cast<int>(u), loops});
        for (std::size_t up = u + 1; up < k; ++up) {
            long long arrows = -tits_form(q, dec.parts[u].first, dec.parts[up].first);
            if (arrows < 0) fail(errc::inconsistent_decomposition, "negative arrow count between parts");
            if (arrows > 0)
                out.quiver.arrows.push_back({static_cast<int>(u), static_cast<int>(up), arrows});
        }
    }
    for (std::size_t u = 0; u < k; ++u) {
        out.vhat.push_back(dec.parts[u].second);
        long long wu = dot(w, dec.parts[u].first) - tits_form(q, dec.v0, dec.parts[u].first);
        if (wu < 0) fail(errc::inconsistent_decomposition, "negative framing entry in slice");
        out.what.push_back(wu);
    }
    const std::vector<Rational> base = rho_framing_reversed(q, v, w);
    const std::vector<Rational> hat = rho_framing_reversed(out.quiver, out.vhat, out.what);
    for (std::size_t u = 0; u < k; ++u) {
        ExactScalar lam;
        for (std::size_t a = 0; a < lambda.size(); ++a)
            lam += (lambda[a] - ExactScalar(base[a])) *
                   ExactScalar(Rational(dec.parts[u].first[a]));
        out.lambda_hat.push_back(lam + ExactScalar(hat[u]));
    }
    return out;
}

DimVector cherednik_vprime(const HyperplaneParams& hp) {
    validate_hyperplane(hp);
    const long long am = hp.m < 0 ? -hp.m : hp.m;
    const long long arc = hp.m > 0 ? am - 1 : am + 1;
    DimVector v(static_cast<std::size_t>(hp.ell), am);
    for (int a = hp.i + 1; a <= hp.j; ++a) v[static_cast<std::size_t>(a)] = arc;
    return v;
}

std::vector<Decomposition> cherednik_decompositions(const HyperplaneParams& hp, long long n) {
    validate_hyperplane(hp);
    if (n < 0) fail(errc::parse_error, "negative rank");
    const long long am = hp.m < 0 ? -hp.m : hp.m;
    const DimVector vprime = cherednik_vprime(hp);
    const QuiverData cyc = cyclic_quiver(hp.ell);
    DimVector w(static_cast<std::size_t>(hp.ell), 0);
    w[0] = 1;
    const QuiverData frm = framed(cyc, w);
    std::vector<Decomposition> out;
    for (long long s = 0; s <= q_floor(n, hp.m); ++s) {
        Decomposition dec;
        dec.v0.assign(static_cast<std::size_t>(hp.ell), n);
        for (std::size_t a = 0; a < dec.v0.size(); ++a) {
            dec.v0[a] -= s * vprime[a];
            if (dec.v0[a] < 0) fail(errc::inconsistent_decomposition, "negative remainder");
        }
        if (s > 0) dec.parts.push_back({vprime, s});
        DimVector ext = dec.v0;
        ext.push_back(1);
        if (p_of(frm, ext) != n - s * am - s * s || n - s * am - s * s < 0)
            fail(errc::inconsistent_decomposition, "remainder fails the root p-check");
        out.push_back(std::move(dec));
    }
    return out;
}

std::vector<ExactScalar> cherednik_slice_parameter(const HyperplaneParams& hp) {
    validate_hyperplane(hp);
    const CParams cp = hyperplane_cparams(hp);
    const std::vector<ExactScalar> lc = lambda_classical(cp);
    const Rational sign = hp.m > 0 ? Rational(-1) : Rational(1);
    std::vector<ExactScalar> out;
    out.reserve(lc.size());
    for (int a = 0; a < hp.ell; ++a) {
        ExactScalar zeta = ExactScalar(Rational(a == 0 ? 1 : 0)) -
                           ExactScalar(Rational(1, hp.ell));
        out.push_back(ExactScalar(sign) * (zeta - lc[static_cast<std::size_t>(a)]));
    }
    return out;
}

}  // namespace cyclo
