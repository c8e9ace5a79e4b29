#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include <fusion/basis_enum.hpp>

namespace fusion::cli {

struct CaseResult {
    std::string name;
    bool pass = true;
    std::string detail;
};

struct SuiteParams {
    int k = 3;            ///< largest level in the family
    int max_sum = 4;      ///< bound on d_2 + ... + d_{k+1}
    int max_dim = 36;     ///< oracle: bound on prod a_i
    int max_level = 8;    ///< verlinde: largest basis size
    int qmax4 = 60;
    int cutoff_depth = 24;
    LowerBound bound = LowerBound::linear;  ///< basis: lower-bound convention
};

/// Suites: recursions, oracle, basis, verlinde, stabilize.
std::vector<CaseResult> run_suite(const std::string& name, const SuiteParams& params);

const std::vector<std::string>& suite_names();

nlohmann::ordered_json suite_report(const std::string& name, const std::vector<CaseResult>& cases);

}  // namespace fusion::cli
