#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace qma {

/// Outcome of one identity check. Residual-style checks pass exactly when
/// the residual has no terms; the residual term count is kept because a
/// nonzero residual is the primary debugging artifact.
struct VerificationReport {
    enum class Status { pass, fail, skipped };

    std::string check;
    std::vector<std::pair<std::string, std::string>> params;  // ordered key/value
    Status status = Status::pass;
    long residual_terms = 0;
    long millis = 0;

    static VerificationReport residual_check(std::string name,
                                             std::vector<std::pair<std::string, std::string>> parameters,
                                             long residual_term_count, long elapsed_ms) {
        VerificationReport r;
        r.check = std::move(name);
        r.params = std::move(parameters);
        r.residual_terms = residual_term_count;
        r.status = residual_term_count == 0 ? Status::pass : Status::fail;
        r.millis = elapsed_ms;
        return r;
    }

    static VerificationReport skipped_check(std::string name,
                                            std::vector<std::pair<std::string, std::string>> parameters) {
        VerificationReport r;
        r.check = std::move(name);
        r.params = std::move(parameters);
        r.status = Status::skipped;
        return r;
    }

    bool passed() const { return status != Status::fail; }

    std::string status_string() const {
        switch (status) {
            case Status::pass: return "pass";
            case Status::fail: return "fail";
            case Status::skipped: return "skipped";
        }
        return "?";
    }

    std::string params_string() const {
        std::string out;
        for (const auto& [k, v] : params) {
            if (!out.empty()) out += " ";
            out += k + "=" + v;
        }
        return out;
    }
};

inline nlohmann::ordered_json to_json(const VerificationReport& r) {
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    return nlohmann::ordered_json{{"name", r.check},
                                  {"params", params},
                                  {"status", r.status_string()},
                                  {"residual_terms", r.residual_terms},
                                  {"millis", r.millis}};
}

}  // namespace qma
