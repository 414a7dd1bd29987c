#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cyclo/multipartition.hpp"
#include "cyclo/rational.hpp"
#include "cyclo/regime.hpp"

namespace cyclo {

// Which way signatures are read. PrintedOrder lists boxes by increasing
// c-value left to right; ExampleOrder reverses it.
enum class Convention { PrintedOrder, ExampleOrder };

// Canonical key of an equivalence class of boxes: the class's content on its
// smallest participating component. In a hyperplane regime every box on
// component i or j belongs to a pair class keyed by (i, content-on-i); all
// remaining classes are singletons (comp, cont).
struct ZClass {
    int comp = 0;
    long long cont = 0;

    friend bool operator==(const ZClass& a, const ZClass& b) {
        return a.comp == b.comp && a.cont == b.cont;
    }
    friend bool operator!=(const ZClass& a, const ZClass& b) { return !(a == b); }
    friend bool operator<(const ZClass& a, const ZClass& b) {
        if (a.comp != b.comp) return a.comp < b.comp;
        return a.cont < b.cont;
    }
};

struct SignatureEntry {
    char sign = '+';  // '+' addable box, '-' removable box
    Box box;
};

struct ZSignature {
    std::vector<SignatureEntry> entries;
    std::string signs() const;
};

// Sparse vector in the level-ell Fock space; no zero coefficients stored.
using FockVector = std::map<MultiPartition, Rational>;

ZClass box_class(const Box& b, const ParamRegime& regime);

std::vector<ZClass> z_classes(const MultiPartition& nu, const ParamRegime& regime);

ZSignature signature(const MultiPartition& nu, const ZClass& z, const ParamRegime& regime,
                     Convention conv = Convention::PrintedOrder);

ZSignature reduce_signature(const ZSignature& sig);

std::optional<MultiPartition> e_tilde(const MultiPartition& nu, const ZClass& z,
                                      const ParamRegime& regime,
                                      Convention conv = Convention::PrintedOrder);

std::optional<MultiPartition> f_tilde(const MultiPartition& nu, const ZClass& z,
                                      const ParamRegime& regime,
                                      Convention conv = Convention::PrintedOrder);

bool is_highest_weight(const MultiPartition& nu, const ParamRegime& regime,
                       Convention conv = Convention::PrintedOrder);

long long depth_by_descent(const MultiPartition& nu, const ParamRegime& regime,
                           Convention conv = Convention::PrintedOrder);

FockVector fock_f(const FockVector& v, const ZClass& z, const ParamRegime& regime);
FockVector fock_e(const FockVector& v, const ZClass& z, const ParamRegime& regime);

}  // namespace cyclo
