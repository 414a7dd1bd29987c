#include "cyclo/crystal.hpp"

#include <algorithm>
#include <set>

namespace cyclo {

namespace {

void require_crystal_regime(const ParamRegime& regime) {
    if (regime.kind() == ParamRegime::Kind::Concrete)
        fail(errc::unsupported_regime,
             "crystal operators need a hyperplane or fully generic regime");
}

void require_same_ell(const MultiPartition& nu, const ParamRegime& regime) {
    if (nu.ell() != regime.ell())
        fail(errc::bad_hyperplane, "regime ell differs from multipartition ell");
}

}  // namespace

std::string ZSignature::signs() const {
    std::string out;
    out.reserve(entries.size());
    for (const SignatureEntry& e : entries) out.push_back(e.sign);
    return out;
}

ZClass box_class(const Box& b, const ParamRegime& regime) {
    require_crystal_regime(regime);
    if (regime.kind() == ParamRegime::Kind::Hyperplane) {
        const HyperplaneParams& hp = regime.hp();
        if (b.comp == hp.j) return ZClass{hp.i, b.content() - hp.m};
        return ZClass{b.comp, b.content()};
    }
    return ZClass{b.comp, b.content()};
}

std::vector<ZClass> z_classes(const MultiPartition& nu, const ParamRegime& regime) {
    require_crystal_regime(regime);
    require_same_ell(nu, regime);
    std::set<ZClass> seen;
    for (const Box& b : nu.addable_boxes()) seen.insert(box_class(b, regime));
    for (const Box& b : nu.removable_boxes()) seen.insert(box_class(b, regime));
    return std::vector<ZClass>(seen.begin(), seen.end());
}

ZSignature signature(const MultiPartition& nu, const ZClass& z, const ParamRegime& regime,
                     Convention conv) {
    require_crystal_regime(regime);
    require_same_ell(nu, regime);
    ZSignature sig;
    for (const Box& b : nu.addable_boxes())
        if (box_class(b, regime) == z) sig.entries.push_back({'+', b});
    for (const Box& b : nu.removable_boxes())
        if (box_class(b, regime) == z) sig.entries.push_back({'-', b});
    // Class members are pairwise equivalent, hence comparable; equal c on
    // distinct boxes is a model violation surfaced as degenerate_parameter.
    for (std::size_t a = 0; a < sig.entries.size(); ++a)
        for (std::size_t b = a + 1; b < sig.entries.size(); ++b)
            if (box_compare(sig.entries[a].box, sig.entries[b].box, regime) == BoxOrder::Equal)
                fail(errc::degenerate_parameter, "tied boxes in one z-class signature");
    std::sort(sig.entries.begin(), sig.entries.end(),
              [&](const SignatureEntry& a, const SignatureEntry& b) {
                  BoxOrder cmp = box_compare(a.box, b.box, regime);
                  return conv == Convention::PrintedOrder ? cmp == BoxOrder::Less
                                                          : cmp == BoxOrder::Greater;
              });
    return sig;
}

ZSignature reduce_signature(const ZSignature& sig) {
    ZSignature out;
    for (const SignatureEntry& e : sig.entries) {
        if (e.sign == '+' && !out.entries.empty() && out.entries.back().sign == '-')
            out.entries.pop_back();  // erase one "-+" pair
        else
            out.entries.push_back(e);
    }
    return out;
}

std::optional<MultiPartition> e_tilde(const MultiPartition& nu, const ZClass& z,
                                      const ParamRegime& regime, Convention conv) {
    ZSignature red = reduce_signature(signature(nu, z, regime, conv));
    for (const SignatureEntry& e : red.entries)
        if (e.sign == '-') return nu.remove_box(e.box);  // leftmost '-'
    return std::nullopt;
}

std::optional<MultiPartition> f_tilde(const MultiPartition& nu, const ZClass& z,
                                      const ParamRegime& regime, Convention conv) {
    ZSignature red = reduce_signature(signature(nu, z, regime, conv));
    for (auto it = red.entries.rbegin(); it != red.entries.rend(); ++it)
        if (it->sign == '+') return nu.add_box(it->box);  // rightmost '+'
    return std::nullopt;
}

bool is_highest_weight(const MultiPartition& nu, const ParamRegime& regime, Convention conv) {
    for (const ZClass& z : z_classes(nu, regime))
        if (e_tilde(nu, z, regime, conv)) return false;
    return true;
}

long long depth_by_descent(const MultiPartition& nu, const ParamRegime& regime,
                           Convention conv) {
    MultiPartition cur = nu;
    long long depth = 0;
    for (;;) {
        bool moved = false;
        for (const ZClass& z : z_classes(cur, regime)) {
            if (std::optional<MultiPartition> next = e_tilde(cur, z, regime, conv)) {
                cur = std::move(*next);
                ++depth;
                moved = true;
                break;
            }
        }
        if (!moved) return depth;
    }
}

namespace {

void add_term(FockVector& out, MultiPartition mp, const Rational& coef) {
    Rational& slot = out[mp];
    slot = slot + coef;
    if (slot.is_zero()) out.erase(mp);
}

}  // namespace

FockVector fock_f(const FockVector& v, const ZClass& z, const ParamRegime& regime) {
    require_crystal_regime(regime);
    FockVector out;
    for (const auto& [nu, coef] : v)
        for (const Box& b : nu.addable_boxes())
            if (box_class(b, regime) == z) add_term(out, nu.add_box(b), coef);
    return out;
}

FockVector fock_e(const FockVector& v, const ZClass& z, const ParamRegime& regime) {
    require_crystal_regime(regime);
    FockVector out;
    for (const auto& [nu, coef] : v)
        for (const Box& b : nu.removable_boxes())
            if (box_class(b, regime) == z) add_term(out, nu.remove_box(b), coef);
    return out;
}

}  // namespace cyclo
