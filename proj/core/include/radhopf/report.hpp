#pragma once

#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

namespace radhopf {

enum class Status { Pass, Fail, Skipped };

std::string to_string(Status s);

/// Outcome of one verification. A failing report always carries a witness
/// (the first counterexample found).
struct Report {
    std::string claim;
    nlohmann::json parameters = nlohmann::json::object();
    Status status = Status::Skipped;
    std::optional<nlohmann::json> witness;
    std::int64_t elapsed_ms = 0;
    /// Computed quantities (ranks, dimensions, counts) backing the verdict.
    nlohmann::json details = nlohmann::json::object();

    bool passed() const { return status == Status::Pass; }

    /// Marks the report failed unless ok; witness is required on failure.
    void require(bool ok, const nlohmann::json& witness_if_failed);
};

nlohmann::json to_json(const Report& r);

/// Measures wall time from construction; stamps elapsed_ms into a report.
class Stopwatch {
  public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    std::int64_t elapsed_ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
    }
    void stamp(Report& r) const { r.elapsed_ms = elapsed_ms(); }

  private:
    std::chrono::steady_clock::time_point start_;
};

/// Starts a report in the passing state; checks downgrade it via require().
Report begin_report(std::string claim, nlohmann::json parameters);

}  // namespace radhopf
