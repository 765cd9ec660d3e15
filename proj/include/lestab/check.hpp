#pragma once

// Pass/fail bookkeeping shared by every verification-producing module.
//
// A CheckResult records one proved (or refuted) statement.  The `residual`
// field carries the exact leftover polynomial (or another diagnostic) when a
// check fails, so a red entry is actionable without rerunning anything; for
// a handful of informational checks it carries a note even on success.

#include <json.hpp>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace lestab {

struct CheckResult {
    std::string id;        // stable machine name, e.g. "coeff.km.a1"
    std::string anchor;    // the claim being checked, in words/formulas
    bool pass = false;
    std::string residual;  // exact leftover on failure; empty or a note on success
};

class Report {
public:
    Report() = default;
    explicit Report(std::string title) : title_(std::move(title)) {}

    void add(CheckResult r) { checks_.push_back(std::move(r)); }
    void add(std::string id, std::string anchor, bool pass, std::string residual = "") {
        checks_.push_back(
            CheckResult{std::move(id), std::move(anchor), pass, std::move(residual)});
    }
    void merge(const Report& other) {
        checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
    }

    const std::vector<CheckResult>& checks() const { return checks_; }
    const std::string& title() const { return title_; }

    bool all_pass() const {
        for (const auto& c : checks_)
            if (!c.pass) return false;
        return true;
    }

    std::size_t failed_count() const {
        std::size_t n = 0;
        for (const auto& c : checks_)
            if (!c.pass) ++n;
        return n;
    }

    const CheckResult* find(const std::string& id) const {
        for (const auto& c : checks_)
            if (c.id == id) return &c;
        return nullptr;
    }

    nlohmann::json json() const {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& c : checks_)
            arr.push_back({{"name", c.id},
                           {"anchor", c.anchor},
                           {"pass", c.pass},
                           {"residual", c.residual}});
        return nlohmann::json{
            {"title", title_}, {"all_pass", all_pass()}, {"checks", arr}};
    }

private:
    std::string title_;
    std::vector<CheckResult> checks_;
};

}  // namespace lestab
