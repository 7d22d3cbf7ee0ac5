#pragma once

#include <string>
#include <utility>
#include <vector>

#include "heunlie/operator.hpp"

namespace heunlie {

/// One verified identity: name, outcome, and a rendered residual or value on failure.
struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct CheckList {
    std::vector<Check> checks;

    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    void add(std::string name, bool ok, std::string detail = {}) {
        checks.push_back({std::move(name), ok, std::move(detail)});
    }

    /// Passes iff the residual is the zero operator; renders it otherwise.
    void add_zero(std::string name, const Operator& residual) {
        bool ok = residual.is_zero();
        add(std::move(name), ok, ok ? std::string() : "residual " + residual.str());
    }

    void add_equal(std::string name, const Complex& got, const Complex& want) {
        bool ok = got == want;
        add(std::move(name), ok, ok ? got.str() : "got " + got.str() + ", expected " + want.str());
    }

    void append(const CheckList& other, const std::string& prefix = {}) {
        for (const auto& c : other.checks) checks.push_back({prefix + c.name, c.pass, c.detail});
    }

    const Check* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }

    std::string failures() const {
        std::string out;
        for (const auto& c : checks) {
            if (c.pass) continue;
            if (!out.empty()) out += "; ";
            out += c.name;
            if (!c.detail.empty()) out += ": " + c.detail;
        }
        return out;
    }
};

}  // namespace heunlie
