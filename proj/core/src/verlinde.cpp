#include "fusion/verlinde.hpp"

#include <algorithm>

#include "fusion/errors.hpp"

namespace fusion {

VerlindeElement::VerlindeElement(int m)
{
    if (m < 1)
        throw UsageError("VerlindeElement: basis size must be positive");
    coeffs_.assign(static_cast<std::size_t>(m), 0);
}

VerlindeElement VerlindeElement::basis(int m, int i)
{
    if (i < 1 || i > m)
        throw UsageError("VerlindeElement: basis index out of range");
    VerlindeElement x(m);
    x[i] = 1;
    return x;
}

VerlindeElement& VerlindeElement::operator+=(const VerlindeElement& other)
{
    if (other.m() != m())
        throw UsageError("Verlinde algebra: mismatched basis sizes");
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] += other.coeffs_[i];
    return *this;
}

VerlindeElement operator+(const VerlindeElement& x, const VerlindeElement& y)
{
    VerlindeElement r = x;
    r += y;
    return r;
}

VerlindeElement fusion_multiply(const VerlindeElement& x, const VerlindeElement& y)
{
    if (x.m() != y.m())
        throw UsageError("fusion_multiply: mismatched basis sizes");
    const int m = x.m();
    VerlindeElement r(m);
    for (int a = 1; a <= m; ++a) {
        if (x[a] == 0)
            continue;
        for (int b = 1; b <= m; ++b) {
            if (y[b] == 0)
                continue;
            const Integer c = x[a] * y[b];
            const int i = std::min(a, b);
            const int j = std::max(a, b);
            const int top = std::min(i + j - 1, 2 * m + 1 - i - j);
            for (int t = j - i + 1; t <= top; t += 2)
                r[t] += c;
        }
    }
    return r;
}

VerlindeElement pi_D(const CompositionD& d)
{
    const int m = d.k() + 1;
    VerlindeElement r = VerlindeElement::identity(m);
    for (int j = 1; j <= m; ++j) {
        const auto pj = VerlindeElement::basis(m, j);
        for (int c = 0; c < d.d(j); ++c)
            r = fusion_multiply(r, pj);
    }
    return r;
}

std::vector<Integer> verlinde_coefficients(const CompositionD& d)
{
    return pi_D(d).coeffs();
}

std::vector<VerlindeFailure> verlinde_identity_failures(int m)
{
    std::vector<VerlindeFailure> out;
    auto pi = [m](int i) { return VerlindeElement::basis(m, i); };
    if (!(pi(m) * pi(m) == pi(1)))
        out.push_back({"pi_m^2 = pi_1", m, m});
    for (int i = 2; i < m; ++i) {
        if (!(pi(i) * pi(i) == pi(1) + pi(i - 1) * pi(i + 1)))
            out.push_back({"pi_i^2 = 1 + pi_{i-1} pi_{i+1}", i, i});
    }
    for (int i = 2; i < m; ++i) {
        for (int j = i; j < m; ++j) {
            if (!(pi(i) * pi(j) == pi(j - i + 1) + pi(i - 1) * pi(j + 1)))
                out.push_back({"pi_i pi_j = pi_{j-i+1} + pi_{i-1} pi_{j+1}", i, j});
        }
    }
    for (int i = 1; i <= m; ++i) {
        if (!(pi(i) * pi(m) == pi(m - i + 1)))
            out.push_back({"pi_i pi_m = pi_{m-i+1}", i, m});
    }
    return out;
}

std::string to_string(const VerlindeElement& x)
{
    std::string s;
    for (int i = 1; i <= x.m(); ++i) {
        if (x[i] == 0)
            continue;
        if (!s.empty())
            s += " + ";
        if (x[i] != 1)
            s += x[i].get_str() + "*";
        s += "pi_" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
}

}  // namespace fusion
