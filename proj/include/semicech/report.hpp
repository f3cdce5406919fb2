#pragma once

// Run reports for the CLI: command echo, a digest of the inputs, structured
// results, and the verification ledger.  Identical inputs produce
// byte-identical machine output.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace semicech {

inline std::string fnv1a_hex(std::string_view bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

struct RunReport {
    using json = nlohmann::ordered_json;

    std::string command;
    std::string inputs_digest;
    json results = json::object();
    struct Check {
        std::string name;
        bool passed;
        std::string detail;
    };
    std::vector<Check> checks;

    void check(const std::string& name, bool passed, const std::string& detail = "") {
        checks.push_back({name, passed, detail});
    }

    /// A result value stamped with the check that vouches for it.
    void result(const std::string& key, json value, const std::string& verified_by) {
        results[key] = json{{"value", std::move(value)}, {"verified_by", verified_by}};
    }

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return !checks.empty();
    }

    json to_json() const {
        json ledger = json::array();
        for (const auto& c : checks) {
            json e{{"check", c.name}, {"passed", c.passed}};
            if (!c.detail.empty()) e["detail"] = c.detail;
            ledger.push_back(e);
        }
        return json{{"command", command},
                    {"inputs_digest", inputs_digest},
                    {"results", results},
                    {"verification", ledger},
                    {"ok", all_passed()}};
    }

    std::string human() const {
        std::string out;
        out += "command: " + command + "\n";
        out += "inputs:  " + inputs_digest + "\n";
        for (const auto& [key, val] : results.items()) {
            out += key + ": " + val.at("value").dump() +
                   "   [" + val.at("verified_by").get<std::string>() + "]\n";
        }
        out += "checks:\n";
        for (const auto& c : checks) {
            out += std::string("  [") + (c.passed ? "pass" : "FAIL") + "] " + c.name;
            if (!c.detail.empty()) out += " (" + c.detail + ")";
            out += "\n";
        }
        out += all_passed() ? "ok\n" : "FAILED\n";
        return out;
    }
};

}  // namespace semicech
