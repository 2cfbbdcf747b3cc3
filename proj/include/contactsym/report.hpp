#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "contactsym/rational.hpp"

namespace contactsym {

enum class CheckStatus { Pass, Fail, Skip };

inline std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        default: return "skip";
    }
}

/// One verified statement instance: which proposition, at which panel
/// parameters, and how it went. Failing checks carry a serialized
/// counterexample in `detail`; skipped checks carry the reason.
struct CheckResult {
    std::string id;
    std::vector<std::pair<std::string, std::string>> params;
    CheckStatus status = CheckStatus::Pass;
    std::string detail;
    double ms = 0.0;

    std::string params_str() const {
        std::string out;
        for (const auto& [k, v] : params) {
            if (!out.empty()) out += " ";
            out += k + "=" + v;
        }
        return out;
    }
};

struct SuiteConfig {
    std::vector<int> ns = {1, 2};
    int k_max = 4;
    std::vector<Rational> deltas = {Rational(1), Rational(1, 2), Rational(-1, 3),
                                    Rational(7, 5)};
    int base_deg = 3;
    int trials = 25;
    std::uint64_t seed = 1;
    std::vector<std::string> suites;  // empty = all

    bool wants(const std::string& name) const {
        if (suites.empty()) return true;
        return std::find(suites.begin(), suites.end(), name) != suites.end();
    }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["n"] = ns;
        j["k_max"] = k_max;
        std::vector<std::string> ds;
        ds.reserve(deltas.size());
        for (const auto& d : deltas) ds.push_back(to_string(d));
        j["delta"] = ds;
        j["base_deg"] = base_deg;
        j["trials"] = trials;
        j["seed"] = seed;
        j["suites"] = suites.empty() ? std::vector<std::string>{"all"} : suites;
        return j;
    }
};

/// Machine-readable outcome of a verification run. Checks are keyed and
/// sorted canonically, so the JSON is byte-identical for identical
/// configurations (apart from the timing fields).
struct Report {
    SuiteConfig config;
    std::vector<CheckResult> checks;

    void add(CheckResult r) { checks.push_back(std::move(r)); }

    void sort_checks() {
        std::stable_sort(checks.begin(), checks.end(),
                         [](const CheckResult& a, const CheckResult& b) {
                             if (a.id != b.id) return a.id < b.id;
                             return a.params_str() < b.params_str();
                         });
    }

    int count(CheckStatus s) const {
        int c = 0;
        for (const auto& r : checks)
            if (r.status == s) ++c;
        return c;
    }

    bool all_passed() const { return count(CheckStatus::Fail) == 0; }

    nlohmann::json to_json(bool include_timing = true) const {
        nlohmann::json j;
        j["config"] = config.to_json();
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : checks) {
            nlohmann::json c;
            c["id"] = r.id;
            nlohmann::json params;
            for (const auto& [k, v] : r.params) params[k] = v;
            c["params"] = params;
            c["status"] = to_string(r.status);
            if (!r.detail.empty()) c["detail"] = r.detail;
            if (include_timing) c["ms"] = r.ms;
            arr.push_back(std::move(c));
        }
        j["checks"] = std::move(arr);
        j["summary"] = {{"pass", count(CheckStatus::Pass)},
                        {"fail", count(CheckStatus::Fail)},
                        {"skip", count(CheckStatus::Skip)}};
        return j;
    }
};

}  // namespace contactsym
