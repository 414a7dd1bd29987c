#pragma once

#include <optional>
#include <vector>

#include "cyclo/multipartition.hpp"
#include "cyclo/params.hpp"

namespace cyclo {

enum class AlgebraTag { GrassmannRegular, GrassmannSingular, SphericalCherednik };

enum class IdealKind { Zero, Slice, Unit };

// One step of the chain. Slice entries are characterized by the slice data
// (vhat, what, lambda_hat) whose finite-dimensional quotient the ideal is the
// kernel of; leaf_dim is the dimension of the attached leaf closure when known.
struct IdealDescriptor {
    IdealKind kind = IdealKind::Slice;
    long long s = 0;
    long long vhat = 0;
    long long what = 0;
    long long lambda_hat = 0;
    std::optional<long long> leaf_dim;
};

struct IdealChain {
    AlgebraTag algebra = AlgebraTag::GrassmannRegular;
    long long v = 0;
    long long w = 0;
    long long lambda = 0;
    std::optional<HyperplaneParams> hp;  // SphericalCherednik only
    std::optional<long long> n;          // SphericalCherednik only
    std::vector<IdealDescriptor> ideals;
    long long p_grass = 0;
    std::optional<long long> p_stated;  // SphericalCherednik only
};

// Total cohomology of O(n) on Gr(v,w); vanishes exactly for 1-w <= n <= -1.
bool cohomology_nonvanishing(long long v, long long w, long long n);

IdealChain grass_chain(long long v, long long w, long long lambda);

IdealChain cherednik_chain(const HyperplaneParams& hp, long long n);

std::vector<MultiPartition> annihilated_simples(const HyperplaneParams& hp, long long n);

std::vector<MultiPartition> k0_kernel(const HyperplaneParams& hp, long long n);

// Whether the averaging idempotent lies in the s-th ideal of the chain.
bool e_membership(const IdealChain& chain, long long s);

}  // namespace cyclo
