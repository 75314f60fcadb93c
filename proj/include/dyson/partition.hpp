#ifndef DYSON_PARTITION_HPP
#define DYSON_PARTITION_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace dyson
{

/// A partition of n: nonincreasing positive parts summing to n.
///
/// The empty partition is the unique partition of 0. Construction validates the
/// ordering invariant; use `Partition::from_multiset` when the parts are unsorted.
class Partition
{
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts))
    {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1) {
                throw std::invalid_argument("partition parts must be positive");
            }
            if (i > 0 && parts_[i] > parts_[i - 1]) {
                throw std::invalid_argument("partition parts must be nonincreasing");
            }
        }
        size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    static Partition from_multiset(std::vector<int> parts)
    {
        std::sort(parts.begin(), parts.end(), std::greater<>{});
        return Partition(std::move(parts));
    }

    [[nodiscard]] std::span<const int> parts() const noexcept
    {
        return parts_;
    }
    [[nodiscard]] int n() const noexcept
    {
        return size_;
    }
    [[nodiscard]] std::size_t length() const noexcept
    {
        return parts_.size();
    }
    [[nodiscard]] bool empty() const noexcept
    {
        return parts_.empty();
    }
    [[nodiscard]] int largest() const noexcept
    {
        return parts_.empty() ? 0 : parts_.front();
    }

    /// Dyson rank: largest part minus number of parts.
    [[nodiscard]] int rank() const noexcept
    {
        return largest() - static_cast<int>(parts_.size());
    }

    [[nodiscard]] int multiplicity(int part) const noexcept
    {
        return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
    }

    /// Ferrers-diagram transpose.
    [[nodiscard]] Partition conjugate() const
    {
        std::vector<int> out(static_cast<std::size_t>(largest()), 0);
        for (int p : parts_) {
            for (int i = 0; i < p; ++i) {
                ++out[static_cast<std::size_t>(i)];
            }
        }
        return Partition(std::move(out));
    }

    [[nodiscard]] std::string str() const
    {
        std::ostringstream os;
        os << '(';
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            os << (i ? "," : "") << parts_[i];
        }
        os << ')';
        return os.str();
    }

    friend bool operator==(const Partition &, const Partition &) = default;

    // Reverse-lexicographic: (3) comes before (2,1) before (1,1,1).
    friend std::strong_ordering operator<=>(const Partition &a, const Partition &b)
    {
        return std::lexicographical_compare_three_way(b.parts_.begin(), b.parts_.end(),
                                                      a.parts_.begin(), a.parts_.end());
    }

    friend std::ostream &operator<<(std::ostream &os, const Partition &p)
    {
        return os << p.str();
    }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// Parses "(4,2,2)", "4,2,2", "4 2 2" or "()".
inline Partition parse_partition(const std::string &text)
{
    std::vector<int> parts;
    std::string token;
    auto flush = [&] {
        if (!token.empty()) {
            parts.push_back(std::stoi(token));
            token.clear();
        }
    };
    for (char c : text) {
        if (c >= '0' && c <= '9') {
            token.push_back(c);
        } else if (c == ',' || c == ' ' || c == '(' || c == ')') {
            flush();
        } else {
            throw std::invalid_argument("unexpected character in partition: " + text);
        }
    }
    flush();
    return Partition::from_multiset(std::move(parts));
}

/// Visits every partition of n once, in reverse-lexicographic order.
/// The visitor returns false to stop early.
template <typename Visitor>
void for_each_partition(int n, Visitor &&visit)
{
    if (n < 0) {
        throw std::invalid_argument("partition size must be nonnegative");
    }
    if (n == 0) {
        visit(Partition{});
        return;
    }
    // Classic successor rule on a nonincreasing array.
    std::vector<int> a{n};
    while (true) {
        if (!visit(Partition(a))) {
            return;
        }
        int ones = 0;
        while (!a.empty() && a.back() == 1) {
            a.pop_back();
            ++ones;
        }
        if (a.empty()) {
            return;
        }
        const int k = --a.back();
        int rest = ones + 1;
        while (rest > k) {
            a.push_back(k);
            rest -= k;
        }
        if (rest > 0) {
            a.push_back(rest);
        }
    }
}

inline std::vector<Partition> enumerate_partitions(int n)
{
    std::vector<Partition> out;
    for_each_partition(n, [&](Partition p) {
        out.push_back(std::move(p));
        return true;
    });
    return out;
}

} // namespace dyson

#endif
