#include "fusion/qseries.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "fusion/errors.hpp"

namespace fusion {

namespace {

void require_same_bound(const BiSeries& a, const BiSeries& b, const char* op)
{
    if (a.qmax4() != b.qmax4()) {
        std::ostringstream os;
        os << op << ": mismatched truncation bounds (qmax4 " << a.qmax4() << " vs "
           << b.qmax4() << ")";
        throw UsageError(os.str());
    }
}

// Highest q4 up to which the truncated Cauchy product is exact: a discarded
// term of one factor can only reach the retained range through a negative
// exponent of the other factor.
void require_exact_product(const BiSeries& a, const BiSeries& b)
{
    const auto ma = a.min_q4();
    const auto mb = b.min_q4();
    if ((!a.finite() && mb && *mb < 0) || (!b.finite() && ma && *ma < 0)) {
        throw UsageError(
            "series_mul: a truncated factor times a factor with negative q-exponents "
            "is not exact at the bound; multiply first and shift afterwards");
    }
}

}  // namespace

BiSeries BiSeries::one(int qmax4)
{
    return monomial(qmax4, {0, 0}, 1);
}

BiSeries BiSeries::monomial(int qmax4, ExponentPair e, const Integer& c)
{
    BiSeries s(qmax4);
    s.add_term(e, c);
    return s;
}

Integer BiSeries::coefficient(int q4, int z2) const
{
    auto it = terms_.find({q4, z2});
    return it == terms_.end() ? Integer(0) : it->second;
}

std::optional<int> BiSeries::min_q4() const
{
    if (terms_.empty())
        return std::nullopt;
    return terms_.begin()->first.q4;
}

void BiSeries::add_term(ExponentPair e, const Integer& c)
{
    if (c == 0)
        return;
    if (e.q4 > qmax4_) {
        finite_ = false;
        return;
    }
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

void BiSeries::add_univariate(ExponentPair base, const std::vector<Integer>& coeffs,
                              const Integer& scale)
{
    for (std::size_t d = 0; d < coeffs.size(); ++d) {
        if (coeffs[d] == 0)
            continue;
        add_term({base.q4 + 4 * static_cast<int>(d), base.z2}, coeffs[d] * scale);
    }
}

BiSeries BiSeries::truncated(int new_qmax4) const
{
    if (new_qmax4 > qmax4_)
        throw UsageError("truncated: cannot raise the truncation bound");
    BiSeries r(new_qmax4);
    r.finite_ = finite_;
    for (const auto& [e, c] : terms_)
        r.add_term(e, c);
    return r;
}

BiSeries& BiSeries::operator+=(const BiSeries& other)
{
    require_same_bound(*this, other, "series_add");
    for (const auto& [e, c] : other.terms_)
        add_term(e, c);
    finite_ = finite_ && other.finite_;
    return *this;
}

BiSeries& BiSeries::operator-=(const BiSeries& other)
{
    require_same_bound(*this, other, "series_sub");
    for (const auto& [e, c] : other.terms_)
        add_term(e, -c);
    finite_ = finite_ && other.finite_;
    return *this;
}

bool operator==(const BiSeries& a, const BiSeries& b)
{
    require_same_bound(a, b, "series equality");
    return a.terms_ == b.terms_;
}

BiSeries series_add(const BiSeries& a, const BiSeries& b)
{
    BiSeries r = a;
    r += b;
    return r;
}

BiSeries series_sub(const BiSeries& a, const BiSeries& b)
{
    BiSeries r = a;
    r -= b;
    return r;
}

BiSeries series_mul(const BiSeries& a, const BiSeries& b)
{
    require_same_bound(a, b, "series_mul");
    require_exact_product(a, b);
    BiSeries r(a.qmax4());
    if (!a.finite() || !b.finite())
        r.mark_infinite();
    // Group b by q4 so the inner loop can stop once the bound is passed.
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            const int q4 = ea.q4 + eb.q4;
            if (q4 > a.qmax4()) {
                r.mark_infinite();
                break;
            }
            r.add_term({q4, ea.z2 + eb.z2}, ca * cb);
        }
    }
    return r;
}

BiSeries series_scale(const BiSeries& a, const Integer& c)
{
    BiSeries r(a.qmax4());
    if (!a.finite())
        r.mark_infinite();
    for (const auto& [e, v] : a.terms())
        r.add_term(e, v * c);
    return r;
}

BiSeries monomial_shift(const BiSeries& a, int dq4, int dz2)
{
    if (!a.finite() && dq4 < 0)
        throw UsageError("monomial_shift: lowering a truncated series exposes uncomputed terms");
    BiSeries r(a.qmax4());
    if (!a.finite())
        r.mark_infinite();
    for (const auto& [e, c] : a.terms())
        r.add_term({e.q4 + dq4, e.z2 + dz2}, c);
    return r;
}

BiSeries substitute_z(const BiSeries& a, int dq4_per_z2)
{
    BiSeries r(a.qmax4());
    if (!a.finite()) {
        r.mark_infinite();
        for (const auto& [e, c] : a.terms()) {
            if (dq4_per_z2 * e.z2 < 0)
                throw UsageError("substitute_z: lowering a truncated series exposes uncomputed terms");
        }
    }
    for (const auto& [e, c] : a.terms())
        r.add_term({e.q4 + dq4_per_z2 * e.z2, e.z2}, c);
    return r;
}

BiSeries q_factorial(int n, int qmax4)
{
    if (n < 0)
        throw UsageError("q_factorial: n must be nonnegative");
    // Dense product in integer q-degree; the full polynomial has degree n(n+1)/2.
    std::vector<Integer> poly{1};
    for (int i = 1; i <= n; ++i) {
        std::vector<Integer> next(poly.size() + static_cast<std::size_t>(i));
        for (std::size_t d = 0; d < poly.size(); ++d) {
            next[d] += poly[d];
            next[d + static_cast<std::size_t>(i)] -= poly[d];
        }
        poly = std::move(next);
    }
    BiSeries r(qmax4);
    r.add_univariate({0, 0}, poly);
    return r;
}

BiSeries q_binomial(int n, int k, int qmax4)
{
    BiSeries r(qmax4);
    if (n < 0 || k < 0 || k > n)
        return r;
    r.add_univariate({0, 0}, univariate::q_binomial(n, k));
    return r;
}

BiSeries inverse_q_factorial(int n, int qmax4)
{
    if (n < 0)
        throw UsageError("inverse_q_factorial: n must be nonnegative");
    BiSeries r(qmax4);
    if (qmax4 >= 0)
        r.add_univariate({0, 0}, univariate::inverse_q_factorial(n, qmax4 / 4));
    if (n > 0)
        r.mark_infinite();
    return r;
}

BiSeries euler_inverse(int qmax4)
{
    // 1/(inf)_q agrees with 1/(N)_q! through degree N.
    const int degree = std::max(qmax4, 0) / 4;
    BiSeries r(qmax4);
    if (qmax4 >= 0)
        r.add_univariate({0, 0}, univariate::inverse_q_factorial(degree, degree));
    r.mark_infinite();
    return r;
}

Integer specialize_q1_z1(const BiSeries& a)
{
    if (!a.finite())
        throw UsageError(
            "specialize_q1_z1: series is truncated from an infinite sum; q=z=1 is meaningless");
    Integer sum = 0;
    for (const auto& [e, c] : a.terms())
        sum += c;
    return sum;
}

std::string to_json(const BiSeries& a)
{
    nlohmann::ordered_json j;
    j["qmax4"] = a.qmax4();
    auto terms = nlohmann::ordered_json::array();
    for (const auto& [e, c] : a.terms()) {
        nlohmann::ordered_json t;
        t["q4"] = e.q4;
        t["z2"] = e.z2;
        t["c"] = c.get_str();
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j.dump();
}

BiSeries series_from_json(const std::string& text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw UsageError(std::string("series_from_json: ") + e.what());
    }
    if (!j.contains("qmax4") || !j.contains("terms") || !j["terms"].is_array())
        throw UsageError("series_from_json: expected {\"qmax4\", \"terms\"}");
    BiSeries r(j["qmax4"].get<int>());
    for (const auto& t : j["terms"]) {
        Integer c;
        if (c.set_str(t.at("c").get<std::string>(), 10) != 0)
            throw UsageError("series_from_json: bad coefficient");
        r.add_term({t.at("q4").get<int>(), t.at("z2").get<int>()}, c);
    }
    return r;
}

namespace {

std::string exponent_text(int num, int den)
{
    const int g = std::gcd(num < 0 ? -num : num, den);
    num /= g;
    den /= g;
    if (den == 1)
        return std::to_string(num);
    return "(" + std::to_string(num) + "/" + std::to_string(den) + ")";
}

std::string power_text(const char* var, int num, int den)
{
    if (num == 0)
        return {};
    if (num == den)
        return var;
    return std::string(var) + "^" + exponent_text(num, den);
}

}  // namespace

std::string to_string(const BiSeries& a)
{
    if (a.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : a.terms()) {
        std::string mono;
        const auto zp = power_text("z", e.z2, 2);
        const auto qp = power_text("q", e.q4, 4);
        mono = zp;
        if (!qp.empty())
            mono += (mono.empty() ? "" : "*") + qp;
        Integer mag = abs(c);
        if (first) {
            if (c < 0)
                os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (mono.empty())
            os << mag.get_str();
        else if (mag == 1)
            os << mono;
        else
            os << mag.get_str() << "*" << mono;
    }
    return os.str();
}

std::string first_difference(const BiSeries& a, const BiSeries& b)
{
    auto it_a = a.terms().begin();
    auto it_b = b.terms().begin();
    while (it_a != a.terms().end() || it_b != b.terms().end()) {
        ExponentPair e;
        if (it_b == b.terms().end() || (it_a != a.terms().end() && it_a->first < it_b->first))
            e = it_a->first;
        else
            e = it_b->first;
        const Integer ca = a.coefficient(e.q4, e.z2);
        const Integer cb = b.coefficient(e.q4, e.z2);
        if (ca != cb) {
            std::ostringstream os;
            os << "(q4=" << e.q4 << ", z2=" << e.z2 << "): " << ca.get_str() << " vs "
               << cb.get_str();
            return os.str();
        }
        if (it_a != a.terms().end() && it_a->first == e)
            ++it_a;
        if (it_b != b.terms().end() && it_b->first == e)
            ++it_b;
    }
    return "none";
}

bool coefficientwise_le(const BiSeries& a, const BiSeries& b, std::string* where)
{
    require_same_bound(a, b, "coefficientwise_le");
    for (const auto& [e, c] : a.terms()) {
        const Integer cb = b.coefficient(e.q4, e.z2);
        if (c > cb) {
            if (where) {
                std::ostringstream os;
                os << "(q4=" << e.q4 << ", z2=" << e.z2 << "): " << c.get_str() << " > "
                   << cb.get_str();
                *where = os.str();
            }
            return false;
        }
    }
    // Terms of b missing from a count as zero on the left.
    for (const auto& [e, c] : b.terms()) {
        if (c < 0 && a.coefficient(e.q4, e.z2) == 0) {
            if (where) {
                std::ostringstream os;
                os << "(q4=" << e.q4 << ", z2=" << e.z2 << "): 0 > " << c.get_str();
                *where = os.str();
            }
            return false;
        }
    }
    return true;
}

namespace univariate {

std::vector<Integer> q_binomial(int n, int k)
{
    if (n < 0 || k < 0 || k > n)
        return {0};
    static std::mutex mutex;
    static std::map<std::pair<int, int>, std::vector<Integer>> cache;
    std::lock_guard lock(mutex);
    // q-Pascal: [n k] = [n-1 k-1] + q^k [n-1 k], filled bottom-up per row.
    for (int m = 0; m <= n; ++m) {
        for (int j = 0; j <= std::min(m, k); ++j) {
            if (cache.count({m, j}))
                continue;
            if (j == 0 || j == m) {
                cache[{m, j}] = {1};
                continue;
            }
            const auto& left = cache.at({m - 1, j - 1});
            const auto& right = cache.at({m - 1, j});
            std::vector<Integer> r(static_cast<std::size_t>(j * (m - j) + 1));
            for (std::size_t d = 0; d < left.size(); ++d)
                r[d] += left[d];
            for (std::size_t d = 0; d < right.size(); ++d)
                r[d + static_cast<std::size_t>(j)] += right[d];
            cache[{m, j}] = std::move(r);
        }
    }
    return cache.at({n, k});
}

std::vector<Integer> inverse_q_factorial(int n, int max_degree)
{
    if (max_degree < 0)
        return {};
    std::vector<Integer> s(static_cast<std::size_t>(max_degree) + 1);
    s[0] = 1;
    divide_by_q_factorial(s, n);
    return s;
}

void divide_by_q_factorial(std::vector<Integer>& s, int n)
{
    // Multiply by 1/(1 - q^i) for i = 1..n: running sums with stride i.
    const int len = static_cast<int>(s.size());
    for (int i = 1; i <= std::min(n, len - 1); ++i) {
        for (int d = i; d < len; ++d)
            s[static_cast<std::size_t>(d)] += s[static_cast<std::size_t>(d - i)];
    }
}

std::vector<Integer> multiply(const std::vector<Integer>& a, const std::vector<Integer>& b,
                              int max_degree)
{
    if (max_degree < 0 || a.empty() || b.empty())
        return {};
    const std::size_t top = std::min<std::size_t>(static_cast<std::size_t>(max_degree),
                                                  a.size() + b.size() - 2);
    std::vector<Integer> r(top + 1);
    for (std::size_t i = 0; i < a.size() && i <= top; ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size() && i + j <= top; ++j)
            r[i + j] += a[i] * b[j];
    }
    return r;
}

}  // namespace univariate

}  // namespace fusion
