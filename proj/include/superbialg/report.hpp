#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace superbialg {

struct Check {
    std::string name;
    bool passed = true;
    std::optional<std::string> counterexample;
};

/// Outcome of a verification: one entry per named check. Failures are data.
class VerificationReport {
public:
    VerificationReport() = default;

    /// The counterexample is kept only for failed checks.
    void add(std::string name, bool passed, std::optional<std::string> counterexample = std::nullopt)
    {
        checks_.push_back({std::move(name), passed, passed ? std::nullopt : std::move(counterexample)});
    }
    void pass(std::string name) { add(std::move(name), true); }
    void fail(std::string name, std::string counterexample) { add(std::move(name), false, std::move(counterexample)); }

    /// Appends the checks of another report, prefixing their names.
    void merge(const VerificationReport& other, const std::string& prefix = {})
    {
        for (const auto& c : other.checks_)
            checks_.push_back({prefix + c.name, c.passed, c.counterexample});
    }

    const std::vector<Check>& checks() const { return checks_; }
    bool ok() const
    {
        for (const auto& c : checks_)
            if (!c.passed)
                return false;
        return true;
    }
    const Check* first_failure() const
    {
        for (const auto& c : checks_)
            if (!c.passed)
                return &c;
        return nullptr;
    }
    const Check* find(const std::string& name) const
    {
        for (const auto& c : checks_)
            if (c.name == name)
                return &c;
        return nullptr;
    }

private:
    std::vector<Check> checks_;
};

inline std::ostream& operator<<(std::ostream& os, const VerificationReport& r)
{
    for (const auto& c : r.checks()) {
        os << (c.passed ? "PASS  " : "FAIL  ") << c.name;
        if (c.counterexample)
            os << "  -- " << *c.counterexample;
        os << '\n';
    }
    return os;
}

}  // namespace superbialg
