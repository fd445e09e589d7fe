#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"

namespace dessin {

enum class Status { pass, fail, skipped };

std::string to_string(Status s);

struct Discrepancy {
    std::string location;
    std::string expected;
    std::string actual;
};

/// Outcome of one identity or equivalence suite. status is pass exactly
/// when no discrepancy was recorded (skipped reports carry a reason in
/// `note`).
struct VerificationReport {
    std::string suite;
    std::string name;
    nlohmann::json parameters = nlohmann::json::object();
    int order = 0;
    Status status = Status::pass;
    std::int64_t checked_count = 0;
    std::optional<Discrepancy> first_discrepancy;
    std::int64_t elapsed_ms = 0;
    std::string note;

    bool passed() const { return status == Status::pass; }

    /// Records a mismatch; only the first one is kept.
    void fail(std::string location, std::string expected, std::string actual);

    /// Tallies one comparison; records a discrepancy when `ok` is false.
    template <class F>
    void check(bool ok, F&& describe) {
        ++checked_count;
        if (!ok && !first_discrepancy) {
            auto [loc, exp, act] = describe();
            fail(std::move(loc), std::move(exp), std::move(act));
        }
    }

    /// Serialized form; `with_timing` false drops elapsed_ms for
    /// byte-stable output.
    nlohmann::json to_json(bool with_timing = true) const;
    static VerificationReport from_json(const nlohmann::json& j);
};

/// Measures wall time into a report's elapsed_ms on destruction.
class ReportTimer {
public:
    explicit ReportTimer(VerificationReport& r) : report_(r), start_(std::chrono::steady_clock::now()) {}
    ~ReportTimer() {
        report_.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                 std::chrono::steady_clock::now() - start_)
                                 .count();
    }
    ReportTimer(const ReportTimer&) = delete;
    ReportTimer& operator=(const ReportTimer&) = delete;

private:
    VerificationReport& report_;
    std::chrono::steady_clock::time_point start_;
};

}  // namespace dessin
