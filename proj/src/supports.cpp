#include "cyclo/supports.hpp"

#include <algorithm>

namespace cyclo {

int scan_component(const HyperplaneParams& hp) {
    validate_hyperplane(hp);
    return hp.t >= 0 ? hp.i : hp.j;
}

int rect_component(const HyperplaneParams& hp) {
    validate_hyperplane(hp);
    return hp.t >= 0 ? hp.j : hp.i;
}

long long effective_shift(const HyperplaneParams& hp) {
    validate_hyperplane(hp);
    return hp.t >= 0 ? hp.m : -static_cast<long long>(hp.m);
}

std::vector<MultiPartition> singular_family(const HyperplaneParams& hp, long long n) {
    validate_hyperplane(hp);
    if (n < 0) fail(errc::bad_partition, "negative size");
    std::vector<MultiPartition> out;
    if (n == 0) {
        out.emplace_back(hp.ell);
        return out;
    }
    const long long m = effective_shift(hp);
    const long long am = m < 0 ? -m : m;
    // Unique r >= 1 with r(r+|m|) = n, when it exists.
    long long s = isqrt_ll(4 * n + am * am);
    if (s * s != 4 * n + am * am || (s - am) % 2 != 0) return out;
    long long r = (s - am) / 2;
    if (r < 1) return out;
    long long rows = m >= 0 ? r : r + am;
    long long cols = m >= 0 ? r + am : r;
    std::vector<Partition> comps(static_cast<std::size_t>(hp.ell),
                                 Partition(std::vector<long long>{}));
    comps[static_cast<std::size_t>(rect_component(hp))] =
        Partition(std::vector<long long>(static_cast<std::size_t>(rows), cols));
    out.emplace_back(std::move(comps));
    return out;
}

long long r_of_addable_box(const MultiPartition& nu, const Box& b, const HyperplaneParams& hp) {
    validate_hyperplane(hp);
    if (nu.ell() != hp.ell) fail(errc::bad_hyperplane, "hyperplane ell differs from multipartition");
    const int scan = scan_component(hp);
    if (b.comp != scan) fail(errc::not_addable, "box is not on the scanned component");
    const std::vector<Box> addable = nu.addable_boxes();
    if (std::find(addable.begin(), addable.end(), b) == addable.end())
        fail(errc::not_addable, "box is not addable");
    const long long shift = effective_shift(hp);
    const Partition& host = nu.comp(rect_component(hp));
    // Outermost member box on the matching content diagonal; min(dy, dx)+1
    // measures how much rectangle sits between b and b'.
    long long best = 0;
    for (long long y = 1; y <= host.rows(); ++y) {
        long long x = b.content() + shift + y;  // x - y = cont(b) + shift
        if (x >= 1 && x <= host.row_length(y)) {
            long long dy = y - b.y;
            long long dx = x - b.x;
            best = std::max(best, std::min(dy, dx) + 1);
        }
    }
    return std::max(best, 0LL);
}

long long closed_form_depth(const MultiPartition& nu, const HyperplaneParams& hp) {
    validate_hyperplane(hp);
    if (nu.ell() != hp.ell) fail(errc::bad_hyperplane, "hyperplane ell differs from multipartition");
    const int scan = scan_component(hp);
    long long r = 0;
    for (const Box& b : nu.addable_boxes())
        if (b.comp == scan) r = std::max(r, r_of_addable_box(nu, b, hp));
    const long long am = hp.m < 0 ? -static_cast<long long>(hp.m) : hp.m;
    return nu.size() - r * (r + am);
}

SupportStratum support_stratum(const MultiPartition& nu, const HyperplaneParams& hp) {
    SupportStratum st;
    st.p = closed_form_depth(nu, hp);
    st.description = "closure of X(W_{" + std::to_string(st.p) + ",0})";
    return st;
}

std::set<long long> possible_support_dims(const HyperplaneParams& hp, long long n) {
    validate_hyperplane(hp);
    if (n < 0) fail(errc::bad_partition, "negative size");
    std::set<long long> out;
    const long long am = hp.m < 0 ? -static_cast<long long>(hp.m) : hp.m;
    for (long long r = 0; r <= q_floor(n, hp.m); ++r) out.insert(n - r * (r + am));
    return out;
}

}  // namespace cyclo
