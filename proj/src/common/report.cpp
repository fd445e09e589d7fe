#include "dessin/report.hpp"

#include <stdexcept>

namespace dessin {

std::string to_string(Status s) {
    switch (s) {
    case Status::pass:
        return "pass";
    case Status::fail:
        return "fail";
    case Status::skipped:
        return "skipped";
    }
    return "fail";
}

namespace {

Status status_from_string(const std::string& s) {
    if (s == "pass")
        return Status::pass;
    if (s == "fail")
        return Status::fail;
    if (s == "skipped")
        return Status::skipped;
    throw std::invalid_argument("report: unknown status '" + s + "'");
}

}  // namespace

void VerificationReport::fail(std::string location, std::string expected, std::string actual) {
    status = Status::fail;
    if (!first_discrepancy)
        first_discrepancy = Discrepancy{std::move(location), std::move(expected), std::move(actual)};
}

nlohmann::json VerificationReport::to_json(bool with_timing) const {
    nlohmann::json j;
    j["suite"] = suite;
    j["name"] = name;
    j["parameters"] = parameters;
    j["order"] = order;
    j["status"] = to_string(status);
    j["checked_count"] = checked_count;
    if (first_discrepancy)
        j["first_discrepancy"] = {{"location", first_discrepancy->location},
                                  {"expected", first_discrepancy->expected},
                                  {"actual", first_discrepancy->actual}};
    else
        j["first_discrepancy"] = nullptr;
    if (!note.empty())
        j["note"] = note;
    if (with_timing)
        j["elapsed_ms"] = elapsed_ms;
    return j;
}

VerificationReport VerificationReport::from_json(const nlohmann::json& j) {
    VerificationReport r;
    r.suite = j.at("suite").get<std::string>();
    r.name = j.at("name").get<std::string>();
    r.parameters = j.at("parameters");
    r.order = j.at("order").get<int>();
    r.status = status_from_string(j.at("status").get<std::string>());
    r.checked_count = j.at("checked_count").get<std::int64_t>();
    if (!j.at("first_discrepancy").is_null()) {
        const auto& d = j.at("first_discrepancy");
        r.first_discrepancy = Discrepancy{d.at("location").get<std::string>(), d.at("expected").get<std::string>(),
                                          d.at("actual").get<std::string>()};
    }
    if (j.contains("note"))
        r.note = j.at("note").get<std::string>();
    if (j.contains("elapsed_ms"))
        r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
    return r;
}

}  // namespace dessin
