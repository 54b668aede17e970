#pragma once

#include <cstdint>
#include <vector>

namespace clp {

/// Growable Fenwick tree over 0/1 flags: prefix counts and k-th set flag.
class FenwickFlags {
public:
    void push_back(bool flag);
    void set(std::size_t i, bool flag);
    bool get(std::size_t i) const { return flags_[i]; }
    /// Number of set flags in [0, i).
    std::uint64_t rank(std::size_t i) const;
    /// Index of the k-th set flag (0-based); k must be < total().
    std::size_t select(std::uint64_t k) const;
    std::uint64_t total() const { return total_; }
    std::size_t size() const { return flags_.size(); }

private:
    std::vector<std::int64_t> tree_{0};  // 1-based
    std::vector<bool> flags_;
    std::uint64_t total_ = 0;
};

} // namespace clp
