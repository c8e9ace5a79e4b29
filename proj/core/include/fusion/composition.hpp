#pragma once

#include <string>
#include <vector>

namespace fusion {

/// Dimensions a_1 <= ... <= a_n of the irreducible sl2-modules in a fusion
/// product. Entries are kept sorted; the multiset is what matters.
class AVector {
public:
    AVector() = default;
    explicit AVector(std::vector<int> entries);

    const std::vector<int>& entries() const { return entries_; }
    int size() const { return static_cast<int>(entries_.size()); }
    int max() const { return entries_.back(); }

    friend bool operator==(const AVector&, const AVector&) = default;

private:
    std::vector<int> entries_;
};

/// Multiplicities D = (d_1, ..., d_{k+1}) of module dimensions: d_j counts
/// the factors of dimension j. Stored 0-based, so entries()[j-1] is d_j.
class CompositionD {
public:
    CompositionD() = default;
    explicit CompositionD(std::vector<int> entries);

    /// Zero composition with level k.
    static CompositionD zero(int k);

    int k() const { return static_cast<int>(d_.size()) - 1; }
    const std::vector<int>& entries() const { return d_; }

    /// 1-based access d_j, j = 1..k+1.
    int d(int j) const { return d_.at(static_cast<std::size_t>(j - 1)); }
    int& d(int j) { return d_.at(static_cast<std::size_t>(j - 1)); }

    /// d_1 + ... + d_{k+1}.
    int total() const;
    /// d_2 + ... + d_{k+1}.
    int nontrivial() const;

    /// Copy with d_1 reset to 0 (one-dimensional factors do not matter).
    CompositionD stripped() const;
    /// Copy with d_{k+1} increased by `extra`.
    CompositionD with_top(int extra) const;

    friend bool operator==(const CompositionD&, const CompositionD&) = default;
    friend auto operator<=>(const CompositionD&, const CompositionD&) = default;

private:
    std::vector<int> d_;
};

CompositionD dvector_of(const AVector& a);

/// The A associated with D, followed by `extra_top` more copies of k+1.
AVector avector_of(const CompositionD& d, int extra_top = 0);

/// Parses "0,2,0" style lists.
std::vector<int> parse_int_list(const std::string& text);

std::string to_string(const CompositionD& d);
std::string to_string(const AVector& a);

/// Every D with the given level, d_1 = 0, d_2 + ... + d_{k+1} <= max_sum and
/// d_{k+1} <= max_top.
std::vector<CompositionD> compositions_up_to(int k, int max_sum, int max_top);

/// Every sorted A with entries >= 1 and product <= max_product; entries equal
/// to 1 are allowed only up to `max_ones` times.
std::vector<AVector> avectors_up_to(int max_product, int max_ones = 0);

}  // namespace fusion
