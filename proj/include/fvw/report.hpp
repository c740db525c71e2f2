#pragma once

#include <json.hpp>

#include <algorithm>
#include <string>
#include <vector>

namespace fvw {

struct CheckFailure {
    int case_index = -1;
    std::string inputs, lhs, rhs, tag;
};

// verdict of one suite run; failures stay keyed by case index so parallel and
// serial execution emit identical reports
struct Report {
    std::string suite;
    std::uint64_t seed = 0;
    int cases = 0;
    std::vector<CheckFailure> failures;
    nlohmann::ordered_json extra; // suite-specific payload (survivors, steps, ...)

    bool pass() const { return failures.empty(); }

    void add(CheckFailure f) { failures.push_back(std::move(f)); }

    void sort_failures() {
        std::sort(failures.begin(), failures.end(),
                  [](const CheckFailure& a, const CheckFailure& b) {
                      return a.case_index < b.case_index;
                  });
    }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["suite"] = suite;
        j["seed"] = seed;
        j["cases"] = cases;
        nlohmann::ordered_json fs = nlohmann::ordered_json::array();
        for (const CheckFailure& f : failures) {
            nlohmann::ordered_json e;
            e["case"] = f.case_index;
            e["tag"] = f.tag;
            e["inputs"] = f.inputs;
            e["lhs"] = f.lhs;
            e["rhs"] = f.rhs;
            fs.push_back(e);
        }
        j["failures"] = fs;
        if (!extra.is_null()) j["detail"] = extra;
        j["verdict"] = pass() ? "PASS" : "FAIL";
        return j;
    }
};

} // namespace fvw
