#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cyclo/errors.hpp"

namespace cyclo {

// Weakly decreasing positive parts; trailing zero rows are never stored.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<long long> parts);

    const std::vector<long long>& parts() const { return parts_; }
    long long size() const;
    long long rows() const { return static_cast<long long>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    // 1-based row/column reads; zero outside the diagram.
    long long row_length(long long y) const;
    long long col_length(long long x) const;

    std::string str() const;  // "(4,2)"; "()" when empty

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

private:
    std::vector<long long> parts_;
};

// Cell of component `comp` in column x, row y (both 1-based).
struct Box {
    int comp = 0;
    long long x = 1;
    long long y = 1;

    long long content() const { return x - y; }

    friend bool operator==(const Box& a, const Box& b) {
        return a.comp == b.comp && a.x == b.x && a.y == b.y;
    }
    friend bool operator!=(const Box& a, const Box& b) { return !(a == b); }
    friend bool operator<(const Box& a, const Box& b) {
        if (a.comp != b.comp) return a.comp < b.comp;
        if (a.y != b.y) return a.y < b.y;
        return a.x < b.x;
    }
};

class MultiPartition {
public:
    explicit MultiPartition(int ell);  // ell empty components
    explicit MultiPartition(std::vector<Partition> components);

    int ell() const { return static_cast<int>(comps_.size()); }
    const Partition& comp(int i) const { return comps_.at(static_cast<std::size_t>(i)); }
    const std::vector<Partition>& components() const { return comps_; }
    long long size() const;

    bool contains(const Box& b) const;
    std::vector<Box> boxes() const;

    // Corner cells / cells whose addition keeps every component a partition;
    // listed by (component, row).
    std::vector<Box> addable_boxes() const;
    std::vector<Box> removable_boxes() const;

    MultiPartition add_box(const Box& b) const;     // not_addable if invalid
    MultiPartition remove_box(const Box& b) const;  // not_addable if not removable

    std::string str() const;  // "((4,2),(1))"
    static MultiPartition parse(const std::string& text);

    friend bool operator==(const MultiPartition& a, const MultiPartition& b) {
        return a.comps_ == b.comps_;
    }
    friend bool operator!=(const MultiPartition& a, const MultiPartition& b) { return !(a == b); }
    friend bool operator<(const MultiPartition& a, const MultiPartition& b) {
        return a.comps_ < b.comps_;
    }

private:
    std::vector<Partition> comps_;
};

std::vector<Partition> enumerate_partitions(long long n);

// Complete and duplicate-free, sorted lexicographically by
// (component-0 parts, component-1 parts, ...).
std::vector<MultiPartition> enumerate_multipartitions(int ell, long long n);

}  // namespace cyclo
