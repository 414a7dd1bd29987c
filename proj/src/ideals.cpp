#include "cyclo/ideals.hpp"

#include <algorithm>

#include "cyclo/supports.hpp"

namespace cyclo {

bool cohomology_nonvanishing(long long v, long long w, long long n) {
    if (v < 0 || w < v) fail(errc::parse_error, "need 0 <= v <= w");
    return !(1 - w <= n && n <= -1);
}

namespace {

// Shared chain builder. The Cherednik transfer lands on w = 2v when m = 0,
// so the public standing assumption w > 2v is enforced by the caller.
IdealChain build_grass(long long v, long long w, long long lambda) {
    IdealChain chain;
    chain.v = v;
    chain.w = w;
    chain.lambda = lambda;
    const bool singular = 1 - w <= lambda && lambda <= -1;
    chain.algebra = singular ? AlgebraTag::GrassmannSingular : AlgebraTag::GrassmannRegular;
    long long top;  // largest slice index present
    if (singular) {
        const long long m = std::max(lambda + v, v - w - lambda);
        chain.p_grass = std::max(m, 0LL);
        top = m;  // may be -1: no slice survives
    } else {
        chain.p_grass = v;
        top = v;
    }
    if (top < 0) {
        IdealDescriptor zero;
        zero.kind = IdealKind::Zero;
        chain.ideals.push_back(zero);
    }
    for (long long s = 0; s <= top; ++s) {
        IdealDescriptor d;
        d.kind = IdealKind::Slice;
        d.s = s;
        d.vhat = s;
        d.what = w - 2 * v + 2 * s;
        d.lambda_hat = lambda + v - s;
        d.leaf_dim = 2 * s * (w - s);
        if (singular && !cohomology_nonvanishing(d.vhat, d.what, d.lambda_hat))
            continue;  // unreachable: presence is contiguous up to top
        chain.ideals.push_back(d);
    }
    IdealDescriptor unit;
    unit.kind = IdealKind::Unit;
    chain.ideals.push_back(unit);
    return chain;
}

long long abs_m(const HyperplaneParams& hp) { return hp.m < 0 ? -hp.m : hp.m; }

void require_aspherical(const HyperplaneParams& hp, long long n) {
    const std::vector<HyperplaneParams> all = enumerate_aspherical_hyperplanes(hp.ell, n);
    if (std::find(all.begin(), all.end(), hp) == all.end())
        fail(errc::not_aspherical, "hyperplane is not aspherical at this rank");
}

}  // namespace

IdealChain grass_chain(long long v, long long w, long long lambda) {
    if (v < 0) fail(errc::parse_error, "negative rank");
    if (w <= 2 * v) fail(errc::w_leq_2v, "need w > 2v");
    return build_grass(v, w, lambda);
}

IdealChain cherednik_chain(const HyperplaneParams& hp, long long n) {
    validate_hyperplane(hp);
    require_aspherical(hp, n);
    const long long am = abs_m(hp);
    const long long q = q_floor(n, hp.m);
    IdealChain chain = build_grass(q, am + 2 * q, hp.t - q);
    chain.algebra = AlgebraTag::SphericalCherednik;
    chain.hp = hp;
    chain.n = n;
    chain.p_stated = std::max(hp.t, 0LL);
    for (IdealDescriptor& d : chain.ideals)
        if (d.kind == IdealKind::Slice) d.leaf_dim = 2 * (n - d.s * (am + d.s));
    return chain;
}

std::vector<MultiPartition> annihilated_simples(const HyperplaneParams& hp, long long n) {
    validate_hyperplane(hp);
    require_aspherical(hp, n);
    const long long p = std::max(hp.t, 0LL);
    const long long threshold = n - (p + 1) * (abs_m(hp) + p + 1);
    std::vector<MultiPartition> out;
    if (threshold < 0) return out;
    for (const MultiPartition& nu : enumerate_multipartitions(hp.ell, n))
        if (closed_form_depth(nu, hp) <= threshold) out.push_back(nu);
    return out;
}

std::vector<MultiPartition> k0_kernel(const HyperplaneParams& hp, long long n) {
    return annihilated_simples(hp, n);
}

bool e_membership(const IdealChain& chain, long long s) {
    return s >= chain.p_grass + 1;
}

}  // namespace cyclo
