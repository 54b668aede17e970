#include "clp/fenwick.hpp"

#include <bit>

namespace clp {

void FenwickFlags::push_back(bool flag) {
    const std::size_t i = flags_.size() + 1;
    flags_.push_back(flag);
    // tree[i] covers (i - lowbit(i), i]; everything but position i is already stored.
    const std::size_t low = i & (~i + 1);
    const auto covered = static_cast<std::int64_t>(rank(i - 1)) -
                         static_cast<std::int64_t>(rank(i - low));
    tree_.push_back(covered + (flag ? 1 : 0));
    total_ += flag;
}

void FenwickFlags::set(std::size_t i, bool flag) {
    if (flags_[i] == flag) return;
    flags_[i] = flag;
    const std::int64_t delta = flag ? 1 : -1;
    total_ = static_cast<std::uint64_t>(static_cast<std::int64_t>(total_) + delta);
    for (std::size_t j = i + 1; j < tree_.size(); j += j & (~j + 1)) tree_[j] += delta;
}

std::uint64_t FenwickFlags::rank(std::size_t i) const {
    std::int64_t s = 0;
    for (std::size_t j = i; j > 0; j -= j & (~j + 1)) s += tree_[j];
    return static_cast<std::uint64_t>(s);
}

std::size_t FenwickFlags::select(std::uint64_t k) const {
    const std::size_t n = tree_.size() - 1;
    std::size_t pos = 0;
    auto remaining = static_cast<std::int64_t>(k);
    for (std::size_t step = std::bit_floor(n == 0 ? std::size_t{1} : n); step > 0; step >>= 1) {
        const std::size_t next = pos + step;
        if (next <= n && tree_[next] <= remaining) {
            pos = next;
            remaining -= tree_[next];
        }
    }
    return pos;  // 1-based position pos + 1 holds the flag, i.e. index pos
}

} // namespace clp
