#include "suites.hpp"

#include <functional>

#include <fusion/affine_char.hpp>
#include <fusion/basis_enum.hpp>
#include <fusion/decomposer.hpp>
#include <fusion/errors.hpp>
#include <fusion/fermion_oracle.hpp>
#include <fusion/fusion_char.hpp>
#include <fusion/verlinde.hpp>

namespace fusion::cli {

namespace {

// Runs one case, turning invariant and cutoff errors into failures.
CaseResult guarded(const std::string& name, const std::function<IdentityReport()>& body)
{
    CaseResult r{name, true, {}};
    try {
        const auto report = body();
        r.pass = report.holds;
        r.detail = report.detail;
    } catch (const InvariantError& e) {
        r.pass = false;
        r.detail = e.what();
    } catch (const CutoffError& e) {
        r.pass = false;
        r.detail = e.what();
    }
    return r;
}

IdentityReport verdict(bool holds, std::string detail = {})
{
    return {holds, std::move(detail)};
}

std::vector<CompositionD> level_family(const SuiteParams& p, int max_sum)
{
    std::vector<CompositionD> out;
    for (int k = 1; k <= p.k; ++k) {
        for (auto& d : compositions_up_to(k, max_sum, 1))
            out.push_back(std::move(d));
    }
    return out;
}

std::vector<CaseResult> recursions(const SuiteParams& p)
{
    std::vector<CaseResult> out;
    for (const auto& d : level_family(p, p.max_sum)) {
        const auto name = to_string(d);
        if (d.nontrivial() >= 2)
            out.push_back(guarded("step " + name, [&] { return decfun_identity_check(d, p.qmax4); }));
        out.push_back(guarded("reconstruct " + name, [&] { return reconstruction_check(d, p.qmax4); }));
        out.push_back(guarded("kostka-verlinde " + name,
                              [&] { return verdict(kostka_verlinde_check(d)); }));
    }
    // Doubled-entry triples: base D (d_1 included) with sum <= 3, every s.
    for (int k = 1; k <= p.k; ++k) {
        std::vector<int> base(static_cast<std::size_t>(k) + 1, 0);
        std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
            if (i == base.size()) {
                const CompositionD b(base);
                for (int s = 2; s <= k; ++s) {
                    CompositionD dd = b;
                    dd.d(s) += 2;
                    if (dd.d(k + 1) > 1)
                        continue;
                    out.push_back(guarded("doubled " + to_string(b) + " s=" + std::to_string(s),
                                          [&] { return decch_identity_check(b, s, p.qmax4); }));
                }
                return;
            }
            for (int x = 0; x <= left; ++x) {
                base[i] = x;
                rec(i + 1, left - x);
            }
            base[i] = 0;
        };
        rec(0, 3);
    }
    return out;
}

std::vector<CaseResult> oracle(const SuiteParams& p)
{
    std::vector<CaseResult> out;
    for (const auto& a : avectors_up_to(p.max_dim)) {
        const auto name = to_string(a);
        const int k = a.max() - 1;
        out.push_back(guarded("gradedchar " + name, [&] {
            const auto lhs = graded_span_character(a, p.cutoff_depth, p.qmax4);
            const auto rhs = m_character(dvector_of(a), p.qmax4);
            return verdict(lhs == rhs, lhs == rhs ? "" : first_difference(lhs, rhs));
        }));
        out.push_back(guarded("dim " + name, [&] {
            const auto n = span_dimension(a, p.cutoff_depth);
            return verdict(n == fusion_dimension(a), "span " + n.get_str());
        }));
        out.push_back(guarded("annihilate " + name,
                              [&] { return ideal_annihilation_check(a, k + 2, p.cutoff_depth); }));
    }
    return out;
}

std::vector<CaseResult> basis(const SuiteParams& p)
{
    std::vector<CaseResult> out;
    for (const auto& d : level_family(p, p.max_sum)) {
        const auto name = to_string(d);
        out.push_back(guarded("winf " + name,
                              [&] { return winf_basis_count_check(d, p.qmax4, p.bound); }));
        out.push_back(guarded("ld-basis " + name, [&] {
            const int s = ld_basis_stabilization(d, p.qmax4, -1, p.bound);
            return verdict(true, "stable from s=" + std::to_string(s));
        }));
    }
    return out;
}

std::vector<CaseResult> verlinde(const SuiteParams& p)
{
    std::vector<CaseResult> out;
    for (int m = 1; m <= p.max_level; ++m) {
        out.push_back(guarded("identities m=" + std::to_string(m), [&] {
            const auto failures = verlinde_identity_failures(m);
            std::string detail;
            for (const auto& f : failures)
                detail += f.identity + " (i=" + std::to_string(f.i) + ", j=" + std::to_string(f.j) + "); ";
            return verdict(failures.empty(), detail);
        }));
    }
    return out;
}

std::vector<CaseResult> stabilize(const SuiteParams& p)
{
    std::vector<CaseResult> out;
    for (const auto& d : level_family(p, p.max_sum)) {
        out.push_back(guarded("stabilize " + to_string(d), [&] {
            const auto r = stabilization_check(d, p.qmax4);
            return verdict(true, "stable from s=" + std::to_string(r.s_min));
        }));
    }
    return out;
}

}  // namespace

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"recursions", "oracle", "basis", "verlinde",
                                                "stabilize"};
    return names;
}

std::vector<CaseResult> run_suite(const std::string& name, const SuiteParams& params)
{
    if (name == "recursions")
        return recursions(params);
    if (name == "oracle")
        return oracle(params);
    if (name == "basis")
        return basis(params);
    if (name == "verlinde")
        return verlinde(params);
    if (name == "stabilize")
        return stabilize(params);
    throw UsageError("unknown suite '" + name + "'");
}

nlohmann::ordered_json suite_report(const std::string& name, const std::vector<CaseResult>& cases)
{
    nlohmann::ordered_json j;
    j["suite"] = name;
    auto arr = nlohmann::ordered_json::array();
    int passed = 0;
    for (const auto& c : cases) {
        nlohmann::ordered_json e;
        e["case"] = c.name;
        e["pass"] = c.pass;
        if (!c.detail.empty())
            e["detail"] = c.detail;
        arr.push_back(std::move(e));
        passed += c.pass ? 1 : 0;
    }
    j["cases"] = std::move(arr);
    j["passed"] = passed;
    j["failed"] = static_cast<int>(cases.size()) - passed;
    return j;
}

}  // namespace fusion::cli
