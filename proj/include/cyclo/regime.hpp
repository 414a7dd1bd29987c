#pragma once

#include <vector>

#include "cyclo/multipartition.hpp"
#include "cyclo/params.hpp"
#include "cyclo/scalar.hpp"

namespace cyclo {

// The three parameter regimes the combinatorics runs in:
//  - Concrete: explicit SParams; every question is decided by exact scalar
//    arithmetic.
//  - Hyperplane: Weil generic on one s_i - s_j = m + t/kappa relation; all
//    genericity consequences become closed forms.
//  - Generic: kappa transcendental, all s-differences generic; boxes are
//    equivalent only within one component at equal content.
class ParamRegime {
public:
    enum class Kind { Concrete, Hyperplane, Generic };

    static ParamRegime concrete(SParams p);
    static ParamRegime hyperplane(HyperplaneParams hp);
    static ParamRegime generic(int ell);

    Kind kind() const { return kind_; }
    int ell() const { return ell_; }
    const SParams& sparams() const;       // Concrete only
    const HyperplaneParams& hp() const;   // Hyperplane only

private:
    ParamRegime() = default;
    Kind kind_ = Kind::Generic;
    int ell_ = 2;
    SParams sp_;
    HyperplaneParams hp_;
};

enum class BoxOrder { Less, Greater, Equal, Incomparable };

ExactScalar charged_content(const Box& b, const SParams& p);  // x - y + s_i
ExactScalar c_of_box(const Box& b, const HParams& p);         // kappa*ell*(x-y) + ell*h_i
ExactScalar c_of_box(const Box& b, const SParams& p);         // kappa*ell*cont^s(b) - i
ExactScalar c_function(const MultiPartition& nu, const HParams& p);

// b ~ b' iff kappa*(cont^s(b) - cont^s(b')) is an integer in the scalar model.
bool boxes_equivalent(const Box& b, const Box& bp, const SParams& p);
bool boxes_equivalent(const Box& b, const Box& bp, const HyperplaneParams& hp);
bool boxes_equivalent(const Box& b, const Box& bp, const ParamRegime& regime);

// Integer c_b - c_{b'} for equivalent boxes (degenerate_parameter if the
// model's integrality guarantee fails).
BoxOrder box_compare(const Box& b, const Box& bp, const HParams& p);
BoxOrder box_compare(const Box& b, const Box& bp, const HyperplaneParams& hp);
BoxOrder box_compare(const Box& b, const Box& bp, const ParamRegime& regime);

// Perfect matching of boxes with b <=_c b' edge-wise.
bool preceq_multipartition(const MultiPartition& a, const MultiPartition& b, const HParams& p);
bool preceq_multipartition(const MultiPartition& a, const MultiPartition& b,
                           const HyperplaneParams& hp);
bool preceq_multipartition(const MultiPartition& a, const MultiPartition& b,
                           const ParamRegime& regime);

// tau <=_c xi iff tau = xi or c_tau - c_xi is a positive integer.
bool leq_c(const MultiPartition& tau, const MultiPartition& xi, const HParams& p);
bool leq_c(const MultiPartition& tau, const MultiPartition& xi, const HyperplaneParams& hp);
bool leq_c(const MultiPartition& tau, const MultiPartition& xi, const ParamRegime& regime);

}  // namespace cyclo
