#include "cyclo/multipartition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace cyclo {

Partition::Partition(std::vector<long long> parts) : parts_(std::move(parts)) {
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (parts_[k] <= 0)
            fail(errc::bad_partition, "part " + std::to_string(parts_[k]) + " is not positive");
        if (k > 0 && parts_[k] > parts_[k - 1])
            fail(errc::bad_partition, "parts are not weakly decreasing");
    }
}

long long Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

long long Partition::row_length(long long y) const {
    if (y < 1 || y > rows()) return 0;
    return parts_[static_cast<std::size_t>(y - 1)];
}

long long Partition::col_length(long long x) const {
    long long count = 0;
    for (long long p : parts_)
        if (p >= x) ++count;
    return count;
}

std::string Partition::str() const {
    std::string out = "(";
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (k) out += ",";
        out += std::to_string(parts_[k]);
    }
    return out + ")";
}

MultiPartition::MultiPartition(int ell) {
    if (ell < 1) fail(errc::bad_partition, "need at least one component");
    comps_.resize(static_cast<std::size_t>(ell));
}

MultiPartition::MultiPartition(std::vector<Partition> components) : comps_(std::move(components)) {
    if (comps_.empty()) fail(errc::bad_partition, "need at least one component");
}

long long MultiPartition::size() const {
    long long total = 0;
    for (const auto& p : comps_) total += p.size();
    return total;
}

bool MultiPartition::contains(const Box& b) const {
    if (b.comp < 0 || b.comp >= ell() || b.x < 1 || b.y < 1) return false;
    return comp(b.comp).row_length(b.y) >= b.x;
}

std::vector<Box> MultiPartition::boxes() const {
    std::vector<Box> out;
    for (int i = 0; i < ell(); ++i) {
        const auto& parts = comp(i).parts();
        for (long long y = 1; y <= static_cast<long long>(parts.size()); ++y)
            for (long long x = 1; x <= parts[static_cast<std::size_t>(y - 1)]; ++x)
                out.push_back(Box{i, x, y});
    }
    return out;
}

std::vector<Box> MultiPartition::addable_boxes() const {
    std::vector<Box> out;
    for (int i = 0; i < ell(); ++i) {
        const Partition& p = comp(i);
        for (long long y = 1; y <= p.rows() + 1; ++y) {
            long long x = p.row_length(y) + 1;
            if (y == 1 || p.row_length(y - 1) >= x) out.push_back(Box{i, x, y});
        }
    }
    return out;
}

std::vector<Box> MultiPartition::removable_boxes() const {
    std::vector<Box> out;
    for (int i = 0; i < ell(); ++i) {
        const Partition& p = comp(i);
        for (long long y = 1; y <= p.rows(); ++y) {
            long long x = p.row_length(y);
            if (x > p.row_length(y + 1)) out.push_back(Box{i, x, y});
        }
    }
    return out;
}

MultiPartition MultiPartition::add_box(const Box& b) const {
    if (b.comp < 0 || b.comp >= ell())
        fail(errc::not_addable, "component " + std::to_string(b.comp) + " out of range");
    const Partition& p = comp(b.comp);
    if (b.y < 1 || b.y > p.rows() + 1 || b.x != p.row_length(b.y) + 1 ||
        (b.y > 1 && p.row_length(b.y - 1) < b.x))
        fail(errc::not_addable, "box is not addable at " + str());
    std::vector<long long> parts = p.parts();
    if (b.y == p.rows() + 1)
        parts.push_back(1);
    else
        parts[static_cast<std::size_t>(b.y - 1)] += 1;
    std::vector<Partition> comps = comps_;
    comps[static_cast<std::size_t>(b.comp)] = Partition(parts);
    return MultiPartition(comps);
}

MultiPartition MultiPartition::remove_box(const Box& b) const {
    if (b.comp < 0 || b.comp >= ell())
        fail(errc::not_addable, "component " + std::to_string(b.comp) + " out of range");
    const Partition& p = comp(b.comp);
    if (b.y < 1 || b.y > p.rows() || b.x != p.row_length(b.y) || p.row_length(b.y + 1) >= b.x)
        fail(errc::not_addable, "box is not removable at " + str());
    std::vector<long long> parts = p.parts();
    parts[static_cast<std::size_t>(b.y - 1)] -= 1;
    if (parts[static_cast<std::size_t>(b.y - 1)] == 0) parts.pop_back();
    std::vector<Partition> comps = comps_;
    comps[static_cast<std::size_t>(b.comp)] = Partition(parts);
    return MultiPartition(comps);
}

std::string MultiPartition::str() const {
    std::string out = "(";
    for (int i = 0; i < ell(); ++i) {
        if (i) out += ",";
        out += comp(i).str();
    }
    return out + ")";
}

namespace {

void skip_ws(const std::string& s, std::size_t& pos) {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

void expect(const std::string& s, std::size_t& pos, char c) {
    skip_ws(s, pos);
    if (pos >= s.size() || s[pos] != c)
        fail(errc::parse_error, std::string("expected '") + c + "' in multipartition '" + s + "'");
    ++pos;
}

long long parse_part(const std::string& s, std::size_t& pos) {
    skip_ws(s, pos);
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail(errc::parse_error, "expected integer part in '" + s + "'");
    return std::stoll(s.substr(start, pos - start));
}

Partition parse_component(const std::string& s, std::size_t& pos) {
    expect(s, pos, '(');
    std::vector<long long> parts;
    skip_ws(s, pos);
    if (pos < s.size() && s[pos] == ')') {
        ++pos;
        return Partition(parts);
    }
    while (true) {
        parts.push_back(parse_part(s, pos));
        skip_ws(s, pos);
        if (pos < s.size() && s[pos] == ',') {
            ++pos;
            continue;
        }
        break;
    }
    expect(s, pos, ')');
    try {
        return Partition(parts);
    } catch (const Error& e) {
        fail(errc::parse_error, std::string("invalid component in '") + s + "': " + e.what());
    }
}

}  // namespace

MultiPartition MultiPartition::parse(const std::string& text) {
    std::size_t pos = 0;
    expect(text, pos, '(');
    std::vector<Partition> comps;
    while (true) {
        comps.push_back(parse_component(text, pos));
        skip_ws(text, pos);
        if (pos < text.size() && text[pos] == ',') {
            ++pos;
            continue;
        }
        break;
    }
    expect(text, pos, ')');
    skip_ws(text, pos);
    if (pos != text.size())
        fail(errc::parse_error, "trailing characters in multipartition '" + text + "'");
    return MultiPartition(comps);
}

namespace {

void partitions_rec(long long n, long long max_part, std::vector<long long>& acc,
                    std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(acc);
        return;
    }
    for (long long p = std::min(n, max_part); p >= 1; --p) {
        acc.push_back(p);
        partitions_rec(n - p, p, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(long long n) {
    std::vector<Partition> out;
    std::vector<long long> acc;
    partitions_rec(n, n, acc, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<MultiPartition> enumerate_multipartitions(int ell, long long n) {
    if (ell < 1) fail(errc::bad_partition, "need at least one component");
    std::vector<std::vector<Partition>> per_size;
    for (long long k = 0; k <= n; ++k) per_size.push_back(enumerate_partitions(k));

    std::vector<MultiPartition> out;
    std::vector<Partition> acc;
    // All splits n = n_0 + ... + n_{ell-1}, cross product of component choices.
    auto rec = [&](auto&& self, int comp, long long rem) -> void {
        if (comp == ell - 1) {
            for (const auto& p : per_size[static_cast<std::size_t>(rem)]) {
                acc.push_back(p);
                out.emplace_back(acc);
                acc.pop_back();
            }
            return;
        }
        for (long long k = 0; k <= rem; ++k)
            for (const auto& p : per_size[static_cast<std::size_t>(k)]) {
                acc.push_back(p);
                self(self, comp + 1, rem - k);
                acc.pop_back();
            }
    };
    rec(rec, 0, n);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace cyclo
