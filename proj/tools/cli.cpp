#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include <fusion/affine_char.hpp>
#include <fusion/basis_enum.hpp>
#include <fusion/decomposer.hpp>
#include <fusion/errors.hpp>
#include <fusion/fermion_oracle.hpp>
#include <fusion/fusion_char.hpp>
#include <fusion/verlinde.hpp>

#include "suites.hpp"

namespace fusion::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Outcome {
    std::string body;
    int code = ok;
};

Json series_json(const BiSeries& s)
{
    return Json::parse(to_json(s));
}

Json integers_json(const std::vector<Integer>& v)
{
    auto arr = Json::array();
    for (const auto& x : v) {
        if (x.fits_slong_p())
            arr.push_back(x.get_si());
        else
            arr.push_back(x.get_str());
    }
    return arr;
}

std::string integers_text(const std::vector<Integer>& v)
{
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + v[i].get_str();
    return s + "]";
}

CompositionD padded(const std::vector<int>& v)
{
    auto e = v;
    if (e.size() < 2)
        e.resize(2, 0);
    return CompositionD(std::move(e));
}

CompositionD parse_d(const std::string& text)
{
    const auto v = parse_int_list(text);
    for (int x : v) {
        if (x < 0)
            throw UsageError("--d entries must be nonnegative");
    }
    return padded(v);
}

AVector parse_a(const std::string& text, bool drop_ones)
{
    auto v = parse_int_list(text);
    if (drop_ones)
        std::erase(v, 1);
    if (v.empty())
        throw UsageError("--a needs at least one entry of size >= 2");
    return AVector(std::move(v));
}

Outcome series_outcome(const BiSeries& s, const RunConfig& cfg)
{
    if (cfg.format == "text")
        return {to_string(s) + "\n"};
    return {series_json(s).dump() + "\n"};
}

Outcome report_outcome(const IdentityReport& r, const RunConfig& cfg, Json extra = Json::object())
{
    if (cfg.format == "text") {
        std::string s = r.holds ? "PASS" : "FAIL";
        if (!r.detail.empty())
            s += " " + r.detail;
        return {s + "\n", r.holds ? ok : verification_failed};
    }
    Json j = std::move(extra);
    j["holds"] = r.holds;
    if (!r.detail.empty())
        j["detail"] = r.detail;
    return {j.dump() + "\n", r.holds ? ok : verification_failed};
}

Outcome decompose_outcome(const CompositionD& d_in, bool verify, const RunConfig& cfg)
{
    const CompositionD d = d_in.stripped();
    const auto ks = decompose_full(d);
    const auto c = verlinde_coefficients(d);
    std::optional<IdentityReport> check;
    if (verify) {
        check = reconstruction_check(d, cfg.qmax4);
        if (check->holds && !kostka_verlinde_check(d))
            check = IdentityReport{false, "K_j(1) differs from the Verlinde coefficients"};
        if (check->holds && d.nontrivial() >= 2) {
            const auto step = decfun_identity_check(d, cfg.qmax4);
            if (!step.holds)
                check = step;
        }
    }
    const int code = check && !check->holds ? verification_failed : ok;

    if (cfg.format == "text") {
        std::string s;
        for (std::size_t j = 0; j < ks.size(); ++j) {
            if (!ks[j].empty())
                s += "K_" + std::to_string(j) + " = " + to_string(ks[j]) + "\n";
        }
        s += "verlinde = " + integers_text(c) + "\n";
        if (check)
            s += std::string("verified = ") + (check->holds ? "true" : "false") + "\n";
        return {s, code};
    }
    Json j;
    j["D"] = to_string(d);
    auto karr = Json::array();
    for (std::size_t i = 0; i < ks.size(); ++i) {
        if (ks[i].empty())
            continue;
        Json e;
        e["j"] = static_cast<int>(i);
        e["poly"] = to_string(ks[i]);
        auto terms = Json::array();
        for (const auto& [q4, coef] : ks[i].terms())
            terms.push_back(Json{{"q4", q4}, {"c", coef.get_str()}});
        e["terms"] = std::move(terms);
        karr.push_back(std::move(e));
    }
    j["K"] = std::move(karr);
    j["verlinde"] = integers_json(c);
    if (check) {
        j["verified"] = check->holds;
        if (!check->holds)
            j["detail"] = check->detail;
    }
    return {j.dump() + "\n", code};
}

Outcome suite_outcome(const std::string& name, const SuiteParams& params, const RunConfig& cfg)
{
    const auto cases = run_suite(name, params);
    const bool all = std::all_of(cases.begin(), cases.end(), [](const auto& c) { return c.pass; });
    const int code = all ? ok : verification_failed;
    if (cfg.format == "text") {
        std::string s;
        int passed = 0;
        for (const auto& c : cases) {
            s += (c.pass ? "PASS " : "FAIL ") + c.name;
            if (!c.detail.empty())
                s += ": " + c.detail;
            s += "\n";
            passed += c.pass ? 1 : 0;
        }
        s += name + ": " + std::to_string(passed) + "/" + std::to_string(cases.size()) + " passed\n";
        return {s, code};
    }
    return {suite_report(name, cases).dump(2) + "\n", code};
}

}  // namespace

int cutoff_depth_from_env(int fallback)
{
    const char* raw = std::getenv("FUSION_CUTOFF");
    if (raw == nullptr || *raw == '\0')
        return fallback;
    char* end = nullptr;
    const long v = std::strtol(raw, &end, 10);
    if (*end != '\0' || v < 1 || v > 100000)
        throw UsageError(std::string("FUSION_CUTOFF must be a positive integer, got '") + raw + "'");
    return static_cast<int>(v);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Graded characters of sl2 fusion products and their decompositions", "fusion"};
    app.fallthrough();
    app.require_subcommand(1);

    RunConfig cfg;
    std::optional<int> qmax4_flag;
    std::optional<int> qmax_flag;
    app.add_option("--qmax4", qmax4_flag, "Truncation bound in quarter q-degrees")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--qmax", qmax_flag, "Truncation bound in integer q-degrees (x4 internally)")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--output", cfg.output, "Write the result to a file instead of stdout");

    std::function<Outcome()> action;
    auto bind = [&](CLI::App* sub, std::function<Outcome()> f) {
        sub->callback([&action, f = std::move(f)] { action = f; });
    };

    std::string a_text, d_text, b_text;
    int j_label = 0, k_label = 1;

    // char
    auto* chr = app.add_subcommand("char", "Characters as truncated series");
    chr->require_subcommand(1);
    auto* ch_fusion = chr->add_subcommand("fusion", "Fusion product W^A");
    ch_fusion->add_option("--a", a_text, "Dimensions a_1,...,a_n")->required();
    bind(ch_fusion, [&] { return series_outcome(fusion_character(parse_a(a_text, true), cfg.qmax4), cfg); });
    auto* ch_minf = chr->add_subcommand("minf", "M^A in the absolute grading");
    ch_minf->add_option("--d", d_text, "Multiplicities d_1,...,d_{k+1}")->required();
    bind(ch_minf, [&] { return series_outcome(m_character(parse_d(d_text).stripped(), cfg.qmax4), cfg); });
    auto* ch_winf = chr->add_subcommand("winf", "W^{A_infinity}");
    ch_winf->add_option("--d", d_text, "Multiplicities d_1,...,d_{k+1}")->required();
    bind(ch_winf, [&] { return series_outcome(w_infinity_character(parse_d(d_text), cfg.qmax4), cfg); });
    auto* ch_ld = chr->add_subcommand("ld", "Limit module L^D");
    ch_ld->add_option("--d", d_text, "Multiplicities d_1,...,d_{k+1}")->required();
    bind(ch_ld, [&] { return series_outcome(ld_character(parse_d(d_text), cfg.qmax4), cfg); });
    auto* ch_irrep = chr->add_subcommand("irrep", "Level-k irreducible L_{j,k}");
    ch_irrep->add_option("--j", j_label, "Highest weight")->required();
    ch_irrep->add_option("--k", k_label, "Level")->required();
    bind(ch_irrep, [&] { return series_outcome(irrep_character({j_label, k_label}, cfg.qmax4), cfg); });

    // decompose
    bool verify_flag = false;
    auto* dec = app.add_subcommand("decompose", "Graded multiplicities K_j(q) of L^D");
    dec->add_option("--d", d_text, "Multiplicities d_1,...,d_{k+1}")->required();
    dec->add_flag("--verify", verify_flag, "Check the decomposition on characters");
    bind(dec, [&] { return decompose_outcome(parse_d(d_text), verify_flag, cfg); });

    // verlinde
    auto* ver = app.add_subcommand("verlinde", "Verlinde coefficients c_{i,D}");
    ver->add_option("--d", d_text, "Multiplicities d_1,...,d_{k+1}")->required();
    bind(ver, [&] {
        const auto c = verlinde_coefficients(parse_d(d_text));
        return Outcome{(cfg.format == "text" ? integers_text(c) : integers_json(c).dump()) + "\n"};
    });

    // basis count
    std::optional<int> s_index;
    std::string bound_name = "linear";
    auto* basis = app.add_subcommand("basis", "Monomial basis enumeration");
    basis->require_subcommand(1);
    auto* count = basis->add_subcommand("count", "Basis counts by bidegree");
    count->add_option("--d", d_text, "Multiplicities d_1,...,d_{k+1}")->required();
    count->add_option("--s", s_index, "Count for C[e] w_{A_s} instead of W^{A_infinity}")
        ->check(CLI::NonNegativeNumber);
    count->add_option("--bound", bound_name, "Lower-bound convention")
        ->check(CLI::IsMember({"intro", "section3", "linear"}));
    bind(count, [&] {
        const auto d = parse_d(d_text);
        const auto bound = parse_lower_bound(bound_name);
        if (s_index)
            return series_outcome(enumerate_ld_basis(d, *s_index, cfg.qmax4, bound), cfg);
        return series_outcome(enumerate_winf_basis(d, cfg.qmax4, bound), cfg);
    });

    // oracle
    int i_max = 0;
    auto* orc = app.add_subcommand("oracle", "Fermionic Fock space computations");
    orc->require_subcommand(1);
    auto* o_dim = orc->add_subcommand("dim", "dim C[e_0..e_{n-1}] v_A");
    o_dim->add_option("--a", a_text, "Dimensions a_1,...,a_n")->required();
    bind(o_dim, [&] {
        const auto a = parse_a(a_text, false);
        const auto n = span_dimension(a, cfg.cutoff_depth);
        const auto expected = fusion_dimension(a);
        const IdentityReport r{n == expected, "span " + n.get_str() + ", product " + expected.get_str()};
        return report_outcome(r, cfg, Json{{"A", to_string(a)}, {"dim", n.get_str()}});
    });
    auto* o_graded = orc->add_subcommand("gradedchar", "Bigraded dimensions of C[e] w_A");
    o_graded->add_option("--a", a_text, "Dimensions a_1,...,a_n")->required();
    bind(o_graded, [&] {
        return series_outcome(graded_span_character(parse_a(a_text, true), cfg.cutoff_depth, cfg.qmax4), cfg);
    });
    auto* o_ann = orc->add_subcommand("annihilate", "Vanishing of e(z)^i v_A coefficients");
    o_ann->add_option("--a", a_text, "Dimensions a_1,...,a_n")->required();
    o_ann->add_option("--imax", i_max, "Largest power i")->required()->check(CLI::PositiveNumber);
    bind(o_ann, [&] {
        const auto a = parse_a(a_text, false);
        return report_outcome(ideal_annihilation_check(a, i_max, cfg.cutoff_depth), cfg,
                              Json{{"A", to_string(a)}});
    });
    auto* o_embed = orc->add_subcommand("embed", "Embedding M^A -> M^{A_1}");
    std::optional<int> embed_level;
    o_embed->add_option("--d", d_text, "Multiplicities d_1,...,d_{k+1}")->required();
    o_embed->add_option("--k", embed_level, "Level (must match --d)");
    bind(o_embed, [&] {
        const auto d = parse_d(d_text).stripped();
        if (embed_level && *embed_level != d.k())
            throw UsageError("--k " + std::to_string(*embed_level) + " does not match --d of level " +
                             std::to_string(d.k()));
        return report_outcome(embedding_check(d, cfg.cutoff_depth), cfg, Json{{"D", to_string(d)}});
    });
    auto* o_ext = orc->add_subcommand("extremal", "Closure of an extremal vector");
    o_ext->add_option("--b", b_text, "Charges b_1 >= ... >= b_k >= 1")->required();
    bind(o_ext, [&] {
        const auto b = parse_int_list(b_text);
        return report_outcome(extremal_module_check(b, cfg.cutoff_depth, cfg.qmax4), cfg);
    });

    // verify
    SuiteParams params;
    std::string suite;
    auto* ver_suite = app.add_subcommand("verify", "Run a verification suite");
    ver_suite->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
    ver_suite->add_option("--k", params.k, "Largest level")->check(CLI::PositiveNumber);
    ver_suite->add_option("--max-sum", params.max_sum, "Bound on d_2 + ... + d_{k+1}")
        ->check(CLI::NonNegativeNumber);
    ver_suite->add_option("--max-dim", params.max_dim, "Bound on prod a_i")->check(CLI::PositiveNumber);
    ver_suite->add_option("--max-level", params.max_level, "Largest Verlinde level")
        ->check(CLI::PositiveNumber);
    ver_suite->add_option("--bound", bound_name, "Lower-bound convention for the basis suite")
        ->check(CLI::IsMember({"intro", "section3", "linear"}));
    bind(ver_suite, [&] {
        params.bound = parse_lower_bound(bound_name);
        params.qmax4 = cfg.qmax4;
        params.cutoff_depth = cfg.cutoff_depth;
        return suite_outcome(suite, params, cfg);
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err) == 0 ? ok : usage_error;
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err) == 0 ? ok : usage_error;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return usage_error;
    }

    try {
        if (qmax4_flag && qmax_flag)
            throw UsageError("--qmax4 and --qmax are mutually exclusive");
        if (qmax_flag)
            cfg.qmax4 = 4 * *qmax_flag;
        else if (qmax4_flag)
            cfg.qmax4 = *qmax4_flag;
        cfg.cutoff_depth = cutoff_depth_from_env(cfg.cutoff_depth);

        const Outcome result = action();
        if (cfg.output.empty()) {
            out << result.body;
        } else {
            std::ofstream file(cfg.output, std::ios::binary);
            file << result.body;
            if (!file)
                throw UsageError("cannot write " + cfg.output);
        }
        return result.code;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return usage_error;
    } catch (const CutoffError& e) {
        err << "cutoff error: " << e.what() << "\n";
        return verification_failed;
    } catch (const InvariantError& e) {
        err << "invariant violated: " << e.what() << "\n";
        return verification_failed;
    }
}

}  // namespace fusion::cli
