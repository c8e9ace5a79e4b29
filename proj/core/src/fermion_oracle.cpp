#include "fusion/fermion_oracle.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>

#include "fusion/affine_char.hpp"
#include "fusion/errors.hpp"
#include "fusion/fusion_char.hpp"

namespace fusion {

namespace {

__extension__ using Mask = unsigned __int128;

int popcount(Mask m)
{
    return __builtin_popcountll(static_cast<std::uint64_t>(m)) +
           __builtin_popcountll(static_cast<std::uint64_t>(m >> 64));
}

Mask shr(Mask m, int s)
{
    return s >= 128 ? Mask(0) : (m >> s);
}

Mask one_bit(int b)
{
    return Mask(1) << b;
}

Mask low_bits(int n)
{
    if (n <= 0)
        return 0;
    if (n >= 128)
        return ~Mask(0);
    return (Mask(1) << n) - 1;
}

std::string cutoff_message(const char* what, int index, int floor)
{
    std::ostringstream os;
    os << what << " index " << index << " outside the trusted window (" << floor << ", "
       << floor + Configuration::window << "]";
    return os.str();
}

}  // namespace

Configuration::Configuration(int depth)
{
    if (depth < 1 || depth > window - 2)
        throw UsageError("Configuration: cutoff depth must be in [1, 126]");
    floor_ = -depth;
    psi_ = low_bits(bit(0) + 1);
    phi_ = low_bits(bit(-1) + 1);
}

Configuration Configuration::extremal(int m, int depth)
{
    Configuration c(depth);
    const int top_psi = m >= 0 ? m / 2 : -((-m + 1) / 2);  // floor(m/2)
    const int top_phi = (m - 1) >= 0 ? (m - 1) / 2 : -((-(m - 1) + 1) / 2);
    if (top_phi <= c.floor_ || top_psi <= c.floor_ || top_psi >= c.floor_ + window ||
        top_phi >= c.floor_ + window)
        throw CutoffError(cutoff_message("extremal vector", m, c.floor_));
    c.psi_ = low_bits(c.bit(top_psi) + 1);
    c.phi_ = low_bits(c.bit(top_phi) + 1);
    return c;
}

Configuration make_extremal(int m, int depth)
{
    return Configuration::extremal(m, depth);
}

bool Configuration::present(const Mask& m, int index) const
{
    if (index <= floor_)
        return true;
    if (index > floor_ + window)
        return false;
    return ((m >> bit(index)) & 1) != 0;
}

bool Configuration::has_psi(int i) const { return present(psi_, i); }
bool Configuration::has_phi(int i) const { return present(phi_, i); }

int Configuration::tale_level() const
{
    int n = floor_;
    while (n + 1 <= floor_ + window && has_psi(n + 1) && has_phi(n + 1))
        ++n;
    return n;
}

std::vector<int> Configuration::extra_psi() const
{
    std::vector<int> out;
    for (int i = tale_level() + 1; i <= floor_ + window; ++i) {
        if (has_psi(i))
            out.push_back(i);
    }
    return out;
}

std::vector<int> Configuration::extra_phi() const
{
    std::vector<int> out;
    for (int i = tale_level() + 1; i <= floor_ + window; ++i) {
        if (has_phi(i))
            out.push_back(i);
    }
    return out;
}

ExponentPair Configuration::degrees() const
{
    // Reference v(0): psi(floor+1..0), phi(floor+1..-1).
    long long count = 0;
    long long energy = 0;
    for (int b = 0; b < window; ++b) {
        const int index = floor_ + 1 + b;
        if ((psi_ >> b) & 1) {
            ++count;
            energy += index;
        }
        if ((phi_ >> b) & 1) {
            ++count;
            energy += index;
        }
    }
    const long long ref_psi = -floor_;
    const long long ref_phi = -floor_ - 1;
    const long long ref_energy = -(ref_psi * (ref_psi - 1)) / 2 - (ref_phi * (ref_phi + 1)) / 2;
    return {static_cast<int>(4 * (energy - ref_energy)),
            static_cast<int>(count - ref_psi - ref_phi)};
}

int Configuration::larger_keys(int index, bool is_phi) const
{
    const int b = bit(index);
    // Later in the order: psi(j) with j > index, phi(j) with j >= index
    // (j > index when the fermion itself is a phi).
    return popcount(shr(psi_, b + 1)) + popcount(shr(phi_, is_phi ? b + 1 : b));
}

std::optional<Configuration::Signed> Configuration::create(int index, bool is_phi) const
{
    const Mask& m = is_phi ? phi_ : psi_;
    if (present(m, index))
        return std::nullopt;
    if (index > floor_ + window)
        throw CutoffError(cutoff_message(is_phi ? "creating phi" : "creating psi", index, floor_));
    Signed r{*this, larger_keys(index, is_phi) % 2 ? -1 : 1};
    (is_phi ? r.config.phi_ : r.config.psi_) |= one_bit(bit(index));
    return r;
}

std::optional<Configuration::Signed> Configuration::remove(int index, bool is_phi) const
{
    const Mask& m = is_phi ? phi_ : psi_;
    if (!present(m, index))
        return std::nullopt;
    if (index <= floor_)
        throw CutoffError(cutoff_message(is_phi ? "removing phi" : "removing psi", index, floor_));
    Signed r{*this, larger_keys(index, is_phi) % 2 ? -1 : 1};
    (is_phi ? r.config.phi_ : r.config.psi_) &= ~one_bit(bit(index));
    return r;
}

std::optional<Configuration::Signed> Configuration::psi(int i) const { return create(i, false); }
std::optional<Configuration::Signed> Configuration::phi(int i) const { return create(i, true); }
std::optional<Configuration::Signed> Configuration::psi_star(int i) const { return remove(-i, false); }
std::optional<Configuration::Signed> Configuration::phi_star(int i) const { return remove(-i, true); }

namespace {

void accumulate(FactorVector& out, const Configuration& c, const Integer& v)
{
    if (v == 0)
        return;
    auto [it, inserted] = out.try_emplace(c, v);
    if (!inserted) {
        it->second += v;
        if (it->second == 0)
            out.erase(it);
    }
}

int highest(const Configuration& c, bool is_phi)
{
    int top = c.floor();
    for (int i = c.floor() + 1; i <= c.floor() + Configuration::window; ++i) {
        if (is_phi ? c.has_phi(i) : c.has_psi(i))
            top = i;
    }
    return top;
}

int lowest_absent(const Configuration& c, bool is_phi)
{
    int i = c.floor() + 1;
    while (is_phi ? c.has_phi(i) : c.has_psi(i))
        ++i;
    return i;
}

}  // namespace

FactorVector factor_e(int i, const Configuration& c)
{
    // psi(a) phi(b) with both absent: a >= lowest absent psi, b likewise.
    FactorVector out;
    const int a_lo = lowest_absent(c, false);
    const int a_hi = i - lowest_absent(c, true);
    for (int a = a_lo; a <= a_hi; ++a) {
        const int b = i - a;
        if (c.has_psi(a) || c.has_phi(b))
            continue;
        const auto s1 = c.phi(b);
        const auto s2 = s1->config.psi(a);
        accumulate(out, s2->config, s1->sign * s2->sign);
    }
    return out;
}

FactorVector factor_f(int i, const Configuration& c)
{
    // psi*(a) phi*(b) removes psi(x), phi(y) with x + y = -i.
    FactorVector out;
    const int x_hi = highest(c, false);
    const int x_lo = -i - highest(c, true);
    for (int x = x_lo; x <= x_hi; ++x) {
        const int y = -i - x;
        if (!c.has_psi(x) || !c.has_phi(y))
            continue;
        const auto s1 = c.phi_star(-y);
        const auto s2 = s1->config.psi_star(-x);
        accumulate(out, s2->config, s1->sign * s2->sign);
    }
    return out;
}

FactorVector factor_h(int i, const Configuration& c)
{
    FactorVector out;
    for (const auto& [c1, v1] : factor_f(0, c)) {
        for (const auto& [c2, v2] : factor_e(i, c1))
            accumulate(out, c2, v1 * v2);
    }
    for (const auto& [c1, v1] : factor_e(i, c)) {
        for (const auto& [c2, v2] : factor_f(0, c1))
            accumulate(out, c2, -v1 * v2);
    }
    return out;
}

namespace {

FactorVector factor_current(Current x, int i, const Configuration& c)
{
    switch (x) {
    case Current::e:
        return factor_e(i, c);
    case Current::f:
        return factor_f(i, c);
    case Current::h:
        return factor_h(i, c);
    }
    return {};
}

}  // namespace

void FockVector::add(const Key& key, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

FockVector FockVector::tensor(const std::vector<int>& extremal_charges, int depth)
{
    Key key;
    key.reserve(extremal_charges.size());
    for (int m : extremal_charges)
        key.push_back(Configuration::extremal(m, depth));
    FockVector v;
    v.add(key, 1);
    return v;
}

FockVector apply_current(Current x, int i, int factor, const FockVector& v)
{
    FockVector out;
    for (const auto& [key, c] : v.terms()) {
        if (factor < 1 || factor > static_cast<int>(key.size()))
            throw UsageError("apply_current: factor index out of range");
        const std::size_t slot = static_cast<std::size_t>(factor) - 1;
        for (const auto& [cfg, coef] : factor_current(x, i, key[slot])) {
            auto k2 = key;
            k2[slot] = cfg;
            out.add(k2, c * Rational(coef));
        }
    }
    return out;
}

FockVector apply_current(Current x, int i, const FockVector& v)
{
    FockVector out;
    for (const auto& [key, c] : v.terms()) {
        for (std::size_t slot = 0; slot < key.size(); ++slot) {
            for (const auto& [cfg, coef] : factor_current(x, i, key[slot])) {
                auto k2 = key;
                k2[slot] = cfg;
                out.add(k2, c * Rational(coef));
            }
        }
    }
    return out;
}

namespace {

std::vector<int> vA_charges(const CompositionD& d)
{
    std::vector<int> m;
    int acc = -1;
    for (int a = 1; a <= d.k(); ++a) {
        acc += d.d(a);
        m.push_back(acc);
    }
    return m;
}

std::vector<int> wA_charges(const CompositionD& d)
{
    std::vector<int> m;
    for (int beta : alpha_vector(d))
        m.push_back(-beta);
    return m;
}

// Vectors symmetric under permutations of tensor factors inside fixed
// blocks, stored by orbit: only block-sorted keys are kept, with the
// coefficient of that key (every key in the orbit has the same one). The
// total currents commute with these permutations, so spans of symmetric
// vectors can be computed entirely in this compressed form.
class OrbitSpace {
public:
    using Key = FockVector::Key;
    using Vec = std::map<Key, Rational>;

    explicit OrbitSpace(const std::vector<int>& charges)
    {
        std::size_t start = 0;
        for (std::size_t i = 1; i <= charges.size(); ++i) {
            if (i == charges.size() || charges[i] != charges[start]) {
                blocks_.emplace_back(start, i);
                start = i;
            }
        }
    }

    Key canonical(Key key) const
    {
        for (auto [b, e] : blocks_)
            std::sort(key.begin() + static_cast<long>(b), key.begin() + static_cast<long>(e));
        return key;
    }

    // Order of the stabilizer of a canonical key.
    Integer stabilizer(const Key& key) const
    {
        Integer s = 1;
        for (auto [b, e] : blocks_) {
            std::size_t run = 1;
            for (std::size_t i = b + 1; i <= e; ++i) {
                if (i < e && key[i] == key[i - 1]) {
                    ++run;
                    s *= static_cast<unsigned long>(run);
                } else {
                    run = 1;
                }
            }
        }
        return s;
    }

    // Total current x_i applied to a symmetric vector.
    Vec apply(Current x, int i, const Vec& v)
    {
        Vec out;
        auto& cache = cache_[{static_cast<int>(x), i}];
        for (const auto& [key, c] : v) {
            const Integer stab0 = stabilizer(key);
            for (std::size_t slot = 0; slot < key.size(); ++slot) {
                if (slot > 0 && key[slot] == key[slot - 1] && same_block(slot - 1, slot)) {
                    // Identical factor in the same block already handled:
                    // its images lie in the same orbits.
                    continue;
                }
                const std::size_t mult = multiplicity(key, slot);
                auto it = cache.find(key[slot]);
                if (it == cache.end())
                    it = cache.emplace(key[slot], factor_current(x, i, key[slot])).first;
                for (const auto& [cfg, coef] : it->second) {
                    Key y = key;
                    y[slot] = cfg;
                    y = canonical(std::move(y));
                    Rational w = c * Rational(coef) * Rational(static_cast<unsigned long>(mult));
                    w *= Rational(stabilizer(y));
                    w /= Rational(stab0);
                    add(out, y, w);
                }
            }
        }
        return out;
    }

    static void add(Vec& v, const Key& key, const Rational& c)
    {
        if (c == 0)
            return;
        auto [it, inserted] = v.try_emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                v.erase(it);
        }
    }

    static ExponentPair degrees(const Key& key)
    {
        ExponentPair e;
        for (const auto& c : key) {
            const auto d = c.degrees();
            e.q4 += d.q4;
            e.z2 += d.z2;
        }
        return e;
    }

private:
    bool same_block(std::size_t i, std::size_t j) const
    {
        for (auto [b, e] : blocks_) {
            if (i >= b && i < e)
                return j >= b && j < e;
        }
        return false;
    }

    // Number of slots in the block of `slot` holding the same configuration
    // (they form a contiguous run in a canonical key).
    std::size_t multiplicity(const Key& key, std::size_t slot) const
    {
        std::size_t m = 1;
        for (std::size_t j = slot + 1; j < key.size() && same_block(slot, j) && key[j] == key[slot]; ++j)
            ++m;
        return m;
    }

    std::vector<std::pair<std::size_t, std::size_t>> blocks_;
    std::map<std::pair<int, int>, std::map<Configuration, FactorVector>> cache_;
};

// Echelon bases per bidegree, with leading key = smallest key and leading
// coefficient 1.
class GradedEchelon {
public:
    using Vec = OrbitSpace::Vec;

    // Reduces v; returns the reduced vector if it is independent (and adds
    // it), or nullopt if it lies in the span.
    std::optional<Vec> insert(Vec v)
    {
        if (v.empty())
            return std::nullopt;
        const ExponentPair deg = OrbitSpace::degrees(v.begin()->first);
        auto& layer = layers_[deg];
        while (!v.empty()) {
            auto lead = v.begin();
            auto it = layer.find(lead->first);
            if (it == layer.end())
                break;
            const Rational c = lead->second;
            for (const auto& [key, val] : it->second)
                OrbitSpace::add(v, key, -c * val);
        }
        if (v.empty())
            return std::nullopt;
        const Rational lead = v.begin()->second;
        for (auto& [key, val] : v)
            val /= lead;
        layer.emplace(v.begin()->first, v);
        return v;
    }

    BiSeries character(int qmax4) const
    {
        BiSeries s(qmax4);
        for (const auto& [deg, layer] : layers_)
            s.add_term(deg, static_cast<unsigned long>(layer.size()));
        return s;
    }

    Integer dimension() const
    {
        Integer n = 0;
        for (const auto& [deg, layer] : layers_)
            n += static_cast<unsigned long>(layer.size());
        return n;
    }

private:
    std::map<ExponentPair, std::map<OrbitSpace::Key, Vec>> layers_;
};

struct Op {
    Current x;
    int i;
};

// Span of `start` under the given total currents. Throws InvariantError
// when the dimension exceeds `max_dim`.
GradedEchelon closure(const std::vector<int>& charges, int depth, const std::vector<Op>& ops,
                      std::size_t max_dim = 200000)
{
    OrbitSpace space(charges);
    GradedEchelon basis;
    OrbitSpace::Vec start;
    OrbitSpace::Key key;
    for (int m : charges)
        key.push_back(Configuration::extremal(m, depth));
    start[space.canonical(key)] = 1;
    std::deque<OrbitSpace::Vec> queue;
    if (auto v = basis.insert(start))
        queue.push_back(*v);
    std::size_t dim = queue.size();
    while (!queue.empty()) {
        const auto v = std::move(queue.front());
        queue.pop_front();
        for (const auto& op : ops) {
            if (auto w = basis.insert(space.apply(op.x, op.i, v))) {
                queue.push_back(std::move(*w));
                if (++dim > max_dim)
                    throw InvariantError("oracle closure exceeded dimension " +
                                         std::to_string(max_dim));
            }
        }
    }
    return basis;
}

}  // namespace

FockVector make_vA(const AVector& a, int depth)
{
    return FockVector::tensor(vA_charges(dvector_of(a)), depth);
}

FockVector make_wA(const CompositionD& d, int depth)
{
    return FockVector::tensor(wA_charges(d), depth);
}

Integer span_dimension(const AVector& a, int depth)
{
    const int n = a.size();
    std::vector<Op> ops;
    for (int i = 0; i < n; ++i)
        ops.push_back({Current::e, i});
    return closure(vA_charges(dvector_of(a)), depth, ops).dimension();
}

BiSeries graded_span_character(const AVector& a, int depth, int qmax4)
{
    const int n = a.size();
    std::vector<Op> ops;
    for (int i = 0; i < n; ++i)
        ops.push_back({Current::e, -i});
    return closure(wA_charges(dvector_of(a)), depth, ops).character(qmax4);
}

IdentityReport ideal_annihilation_check(const AVector& a, int i_max, int depth)
{
    const int n = a.size();
    const auto charges = vA_charges(dvector_of(a));
    OrbitSpace space(charges);
    OrbitSpace::Key key;
    for (int m : charges)
        key.push_back(Configuration::extremal(m, depth));

    auto needed = [&](int i) {
        int s = 0;
        for (int x : a.entries())
            s += std::max(i + 1 - x, 0);
        return s;
    };
    int max_c = 0;
    for (int i = 1; i <= i_max; ++i)
        max_c = std::max(max_c, needed(i) - 1);

    // coeff[c] = coefficient of z^c in e^{(n)}(z)^t v_A.
    std::vector<OrbitSpace::Vec> coeff(static_cast<std::size_t>(max_c) + 1);
    coeff[0][space.canonical(key)] = 1;
    IdentityReport report;
    for (int t = 1; t <= i_max; ++t) {
        std::vector<OrbitSpace::Vec> next(coeff.size());
        for (int c = 0; c <= max_c; ++c) {
            for (int j = 0; j < n && j <= c; ++j) {
                const auto& src = coeff[static_cast<std::size_t>(c - j)];
                if (src.empty())
                    continue;
                for (const auto& [k2, v] : space.apply(Current::e, j, src))
                    OrbitSpace::add(next[static_cast<std::size_t>(c)], k2, v);
            }
        }
        coeff = std::move(next);
        for (int c = 0; c < needed(t); ++c) {
            if (!coeff[static_cast<std::size_t>(c)].empty()) {
                report.holds = false;
                report.detail = "A=" + to_string(a) + ": coefficient of z^" + std::to_string(c) +
                                " in e(z)^" + std::to_string(t) + " v_A is nonzero";
                return report;
            }
        }
    }
    return report;
}

IdentityReport embedding_check(const CompositionD& d, int depth)
{
    const auto target_charges = wA_charges(d);
    const auto start_charges = wA_charges(d.with_top(2));
    int raise = 0;
    int lower = 0;
    for (int beta : alpha_vector(d)) {
        raise += beta + 2;
        lower += beta + 1;
    }
    OrbitSpace space(start_charges);
    OrbitSpace::Key key;
    for (int m : start_charges)
        key.push_back(Configuration::extremal(m, depth));
    OrbitSpace::Vec v;
    v[space.canonical(key)] = 1;
    for (int t = 0; t < raise; ++t)
        v = space.apply(Current::e, 0, v);
    for (int t = 0; t < lower; ++t)
        v = space.apply(Current::f, -1, v);

    OrbitSpace::Key target;
    for (int m : target_charges)
        target.push_back(Configuration::extremal(m, depth));
    target = space.canonical(target);

    IdentityReport report;
    if (v.size() == 1 && v.begin()->first == target) {
        report.detail = "constant = " + v.begin()->second.get_str();
        return report;
    }
    report.holds = false;
    report.detail = "D=" + to_string(d) + ": result has " + std::to_string(v.size()) +
                    " orbit terms and is not a nonzero multiple of w_A";
    return report;
}

namespace {

CompositionD extremal_composition(const std::vector<int>& b)
{
    const int k = static_cast<int>(b.size());
    if (k < 1)
        throw UsageError("extremal_module_check: b must be nonempty");
    for (int a = 0; a < k; ++a) {
        if (b[static_cast<std::size_t>(a)] < 1 ||
            (a > 0 && b[static_cast<std::size_t>(a)] > b[static_cast<std::size_t>(a) - 1]))
            throw UsageError("extremal_module_check: need b_1 >= ... >= b_k >= 1");
    }
    std::vector<int> d(static_cast<std::size_t>(k) + 1, 0);
    for (int a = 1; a < k; ++a)
        d[static_cast<std::size_t>(a)] = b[static_cast<std::size_t>(a) - 1] - b[static_cast<std::size_t>(a)];
    d[static_cast<std::size_t>(k)] = b.back();
    return CompositionD(std::move(d));
}

}  // namespace

BiSeries extremal_module_character(const std::vector<int>& b, int depth, int qmax4)
{
    const CompositionD d = extremal_composition(b);
    const int n = d.total();
    std::vector<int> charges;
    for (int x : b)
        charges.push_back(-x);
    std::vector<Op> ops;
    // Modes beyond -n act by zero on the module; one extra mode checks that.
    for (int i = 0; i <= n + 1; ++i) {
        ops.push_back({Current::e, -i});
        ops.push_back({Current::f, -i});
        ops.push_back({Current::h, -i});
    }
    return closure(charges, depth, ops).character(qmax4);
}

IdentityReport extremal_module_check(const std::vector<int>& b, int depth, int qmax4)
{
    const CompositionD d = extremal_composition(b);
    const BiSeries lhs = extremal_module_character(b, depth, qmax4);
    const BiSeries rhs = m_character(d, qmax4);
    IdentityReport report;
    if (!(lhs == rhs)) {
        report.holds = false;
        report.detail = "b -> D=" + to_string(d) + ": first mismatch at " + first_difference(lhs, rhs);
    }
    return report;
}

}  // namespace fusion
