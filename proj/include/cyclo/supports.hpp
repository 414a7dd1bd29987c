#pragma once

#include <set>
#include <string>
#include <vector>

#include "cyclo/multipartition.hpp"
#include "cyclo/params.hpp"

namespace cyclo {

// Closure of the stratum with p free coordinates; its dimension equals p.
struct SupportStratum {
    long long p = 0;
    std::string description;
};

// Role split of a hyperplane's two components: addable boxes are scanned on
// one component while the other hosts the singular rectangle. For t < 0 the
// roles of i and j swap wholesale, including the sign of the content shift.
int scan_component(const HyperplaneParams& hp);
int rect_component(const HyperplaneParams& hp);
long long effective_shift(const HyperplaneParams& hp);  // cont(b') - cont(b)

std::vector<MultiPartition> singular_family(const HyperplaneParams& hp, long long n);

long long r_of_addable_box(const MultiPartition& nu, const Box& b, const HyperplaneParams& hp);

long long closed_form_depth(const MultiPartition& nu, const HyperplaneParams& hp);

SupportStratum support_stratum(const MultiPartition& nu, const HyperplaneParams& hp);

std::set<long long> possible_support_dims(const HyperplaneParams& hp, long long n);

}  // namespace cyclo
