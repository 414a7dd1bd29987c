#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cyclo/params.hpp"
#include "cyclo/rational.hpp"
#include "cyclo/scalar.hpp"

namespace cyclo {

struct Arrow {
    int t = 0;  // tail
    int h = 0;  // head
    long long mult = 1;
};

struct QuiverData {
    int nv = 0;
    std::vector<Arrow> arrows;
    std::vector<std::string> names;  // optional; defaulted to indices when empty
};

using DimVector = std::vector<long long>;

enum class RootKind { Real, Imaginary, NotARoot };

// Symmetrized Tits form 2*sum v1_k v2_k - sum_a mult (v1_t v2_h + v1_h v2_t).
long long tits_form(const QuiverData& q, const DimVector& v1, const DimVector& v2);

// p(v) = 1 - (v,v)/2.
long long p_of(const QuiverData& q, const DimVector& v);

RootKind classify_root(const QuiverData& q, DimVector v);

// Cyclic orientation on ell vertices: a -> a+1 mod ell.
QuiverData cyclic_quiver(int ell);

// Adds a framing vertex (index q.nv) with w_k arrows k -> framing.
QuiverData framed(const QuiverData& q, const DimVector& w);

// Simple representation of dimension vtilde exists for the deformation
// lambda_ext: positive root, orthogonality, and the proper decomposition
// condition p(vtilde) > sum p(parts) over every splitting of vtilde into
// >= 2 nonzero lambda-orthogonal summands.
bool cb_simple_exists(const QuiverData& qw, const std::vector<ExactScalar>& lambda_ext,
                      const DimVector& vtilde);

// Moment map flatness: p(v) + w.v - (w.v0 + sum p(v_i)) >= 0 for every
// decomposition v = v0 + sum v_i with each v_i a positive root.
bool moment_flat(const QuiverData& q, const DimVector& v, const DimVector& w);

// No root 0 < v' <= v with v'.theta = 0 and v'.lambda = 0.
bool generic_pair(const QuiverData& q, const DimVector& v,
                  const std::vector<ExactScalar>& lambda, const DimVector& theta);

// rho(v)_k = -1/2 (sum_{h(a)=k} v_t(a) - sum_{t(a)=k} v_h(a) - w_k).
std::vector<Rational> rho(const QuiverData& q, const DimVector& v, const DimVector& w);

struct Decomposition {
    DimVector v0;
    std::vector<std::pair<DimVector, long long>> parts;  // (root, multiplicity >= 1)
};

struct SliceQuiver {
    QuiverData quiver;
    DimVector vhat;
    DimVector what;
    std::vector<ExactScalar> lambda_hat;
};

SliceQuiver slice(const QuiverData& q, const DimVector& v, const DimVector& w,
                  const Decomposition& dec, const std::vector<ExactScalar>& lambda);

// The real root with entries |m| off the arc (i, j] and |m|+1 on it when
// m <= 0, |m|-1 on it when m > 0. Its pairing with the classical parameter
// at the canonical wall point is the constant +-k_c/ell (sign of m <= 0);
// the slice parameter below is the combination that pairs to t - s.
DimVector cherednik_vprime(const HyperplaneParams& hp);

// Decompositions (n*delta, 1) = (v'', 1) + s (v', 0) for s = 0..q.
std::vector<Decomposition> cherednik_decompositions(const HyperplaneParams& hp, long long n);

// Quiver-side deformation parameter whose restriction to the slice yields
// lambda_hat = t - s; built at the symbolic hyperplane point.
std::vector<ExactScalar> cherednik_slice_parameter(const HyperplaneParams& hp);

}  // namespace cyclo
