#include "radhopf/report.hpp"

namespace radhopf {

std::string to_string(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Skipped: return "skipped";
    }
    return "skipped";
}

void Report::require(bool ok, const nlohmann::json& witness_if_failed) {
    if (ok || status == Status::Fail) return;
    status = Status::Fail;
    witness = witness_if_failed;
}

nlohmann::json to_json(const Report& r) {
    nlohmann::json j;
    j["claim"] = r.claim;
    j["parameters"] = r.parameters;
    j["status"] = to_string(r.status);
    j["witness"] = r.witness ? *r.witness : nlohmann::json(nullptr);
    j["elapsed_ms"] = r.elapsed_ms;
    j["details"] = r.details;
    return j;
}

Report begin_report(std::string claim, nlohmann::json parameters) {
    Report r;
    r.claim = std::move(claim);
    r.parameters = std::move(parameters);
    r.status = Status::Pass;
    return r;
}

}  // namespace radhopf
