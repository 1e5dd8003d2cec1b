#pragma once

#include <chrono>
#include <string>
#include <vector>

namespace ursa {

enum class CheckStatus { Pass, Fail, Skip };

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    std::string witness;      // failure payload, empty on pass
    double millis = 0.0;
    long truncation_loss = 0;  // counters for boundary-dropped cases
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;

    bool pass() const {
        for (const auto& c : checks)
            if (c.status == CheckStatus::Fail) return false;
        return true;
    }
    void add(const std::string& name, bool ok, const std::string& witness = "",
             double millis = 0.0, long loss = 0) {
        checks.push_back({name, ok ? CheckStatus::Pass : CheckStatus::Fail, ok ? "" : witness,
                          millis, loss});
    }
    void skip(const std::string& name, const std::string& why) {
        checks.push_back({name, CheckStatus::Skip, why, 0.0, 0});
    }
};

class Stopwatch {
  public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double millis() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                         start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace ursa
