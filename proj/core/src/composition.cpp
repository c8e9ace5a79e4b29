#include "fusion/composition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "fusion/errors.hpp"

namespace fusion {

AVector::AVector(std::vector<int> entries) : entries_(std::move(entries))
{
    if (entries_.empty())
        throw UsageError("AVector: at least one factor is required");
    for (int a : entries_) {
        if (a < 1)
            throw UsageError("AVector: dimensions must be positive");
    }
    std::sort(entries_.begin(), entries_.end());
}

CompositionD::CompositionD(std::vector<int> entries) : d_(std::move(entries))
{
    if (d_.size() < 2)
        throw UsageError("CompositionD: need at least (d_1, d_2), i.e. level k >= 1");
    for (int x : d_) {
        if (x < 0)
            throw UsageError("CompositionD: multiplicities must be nonnegative");
    }
}

CompositionD CompositionD::zero(int k)
{
    if (k < 1)
        throw UsageError("CompositionD: level must be positive");
    return CompositionD(std::vector<int>(static_cast<std::size_t>(k) + 1, 0));
}

int CompositionD::total() const
{
    return std::accumulate(d_.begin(), d_.end(), 0);
}

int CompositionD::nontrivial() const
{
    return total() - d_[0];
}

CompositionD CompositionD::stripped() const
{
    CompositionD r = *this;
    r.d_[0] = 0;
    return r;
}

CompositionD CompositionD::with_top(int extra) const
{
    CompositionD r = *this;
    r.d_.back() += extra;
    if (r.d_.back() < 0)
        throw UsageError("CompositionD: negative top multiplicity");
    return r;
}

CompositionD dvector_of(const AVector& a)
{
    std::vector<int> d(static_cast<std::size_t>(a.max()), 0);
    if (d.size() < 2)
        d.resize(2, 0);
    for (int x : a.entries())
        ++d[static_cast<std::size_t>(x - 1)];
    return CompositionD(std::move(d));
}

AVector avector_of(const CompositionD& d, int extra_top)
{
    std::vector<int> a;
    for (int j = 1; j <= d.k() + 1; ++j)
        a.insert(a.end(), static_cast<std::size_t>(d.d(j)), j);
    a.insert(a.end(), static_cast<std::size_t>(std::max(extra_top, 0)), d.k() + 1);
    return AVector(std::move(a));
}

std::vector<int> parse_int_list(const std::string& text)
{
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw UsageError("expected a comma-separated integer list, got '" + text + "'");
        }
        while (used < item.size() && item[used] == ' ')
            ++used;
        if (used != item.size())
            throw UsageError("expected a comma-separated integer list, got '" + text + "'");
        out.push_back(v);
    }
    if (out.empty())
        throw UsageError("empty integer list");
    return out;
}

namespace {

std::string join(const std::vector<int>& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

}  // namespace

std::string to_string(const CompositionD& d) { return join(d.entries()); }
std::string to_string(const AVector& a) { return join(a.entries()); }

std::vector<CompositionD> compositions_up_to(int k, int max_sum, int max_top)
{
    std::vector<CompositionD> out;
    std::vector<int> d(static_cast<std::size_t>(k) + 1, 0);
    // Odometer over d_2..d_{k+1}.
    while (true) {
        if (d.back() <= max_top)
            out.emplace_back(d);
        std::size_t i = 1;
        while (i < d.size()) {
            ++d[i];
            int sum = std::accumulate(d.begin() + 1, d.end(), 0);
            if (sum <= max_sum)
                break;
            d[i] = 0;
            ++i;
        }
        if (i == d.size())
            break;
    }
    return out;
}

std::vector<AVector> avectors_up_to(int max_product, int max_ones)
{
    std::vector<AVector> out;
    std::vector<int> cur;
    // Nondecreasing sequences of entries >= 2 with bounded product.
    auto rec = [&](auto&& self, int min_entry, int product) -> void {
        if (!cur.empty()) {
            for (int ones = 0; ones <= max_ones; ++ones) {
                std::vector<int> a(static_cast<std::size_t>(ones), 1);
                a.insert(a.end(), cur.begin(), cur.end());
                out.emplace_back(std::move(a));
            }
        }
        for (int x = min_entry; product * x <= max_product; ++x) {
            cur.push_back(x);
            self(self, x, product * x);
            cur.pop_back();
        }
    };
    rec(rec, 2, 1);
    return out;
}

}  // namespace fusion
