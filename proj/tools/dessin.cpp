#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dessin/airy/airy.hpp"
#include "dessin/algebra/json_io.hpp"
#include "dessin/closed/closed_forms.hpp"
#include "dessin/eo/eo.hpp"
#include "dessin/harness/suites.hpp"
#include "dessin/virasoro/correlators.hpp"
#include "dessin/virasoro/properties.hpp"

namespace {

using namespace dessin;
namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

/// Invalid parameters detected after parsing.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string join(const std::vector<std::string>& items) {
    std::string out;
    for (const auto& s : items)
        out += (out.empty() ? "" : ", ") + s;
    return out;
}

struct Globals {
    std::string format = "json";
    std::string cache_path;
    bool use_cache = false;
    bool seedless = false;
    int jobs = 1;
    std::optional<std::uint64_t> seed;
};

/// Correlator table backed by the cache file when caching is enabled.
class TableSession {
public:
    explicit TableSession(const Globals& g) {
        if (!g.cache_path.empty())
            dir_ = g.cache_path;
        else if (const char* env = std::getenv("DESSIN_CACHE_DIR"); env && *env)
            dir_ = env;
        else if (g.use_cache)
            dir_ = ".dessin-cache";
        if (!dir_.empty() && fs::exists(file()))
            table_.merge(virasoro::cache_load(file()));
        loaded_ = table_.size();
    }

    bool enabled() const { return !dir_.empty(); }
    fs::path file() const { return dir_ / "correlators.json"; }
    virasoro::CorrelatorTable& table() { return table_; }

    void save() {
        if (enabled() && table_.size() != loaded_)
            virasoro::cache_save(table_, file());
    }

private:
    fs::path dir_;
    virasoro::CorrelatorTable table_;
    std::size_t loaded_ = 0;
};

void emit(const Globals& g, const nlohmann::json& j, const std::string& text) {
    if (g.format == "json")
        std::cout << j.dump(2) << '\n';
    else
        std::cout << text << (text.empty() || text.back() == '\n' ? "" : "\n");
}

std::string npoint_text(const NPointSeries& s) {
    std::ostringstream out;
    out << "G_{" << s.genus << "," << s.n << "} through order " << s.order << "\n";
    for (const auto& [a, c] : s.coefficients)
        out << tuple_string(a) << ": " << c.str() << "\n";
    return out.str();
}

std::string report_line(const VerificationReport& r, bool with_timing) {
    std::ostringstream out;
    std::string status = to_string(r.status);
    for (auto& ch : status)
        ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    out << status << " " << r.suite << " " << r.name << " checked=" << r.checked_count;
    if (with_timing)
        out << " ms=" << r.elapsed_ms;
    if (r.first_discrepancy)
        out << " at " << r.first_discrepancy->location << ": expected " << r.first_discrepancy->expected << ", got "
            << r.first_discrepancy->actual;
    if (!r.note.empty())
        out << " (" << r.note << ")";
    return out.str();
}

int emit_reports(const Globals& g, const std::vector<VerificationReport>& reports) {
    const auto s = harness::summarize(reports);
    nlohmann::json list = nlohmann::json::array();
    std::string text;
    for (const auto& r : reports) {
        list.push_back(r.to_json(!g.seedless));
        text += report_line(r, !g.seedless) + "\n";
    }
    text += "summary: " + std::to_string(s.passed) + " passed, " + std::to_string(s.failed) + " failed, " +
            std::to_string(s.skipped) + " skipped\n";
    emit(g, {{"reports", list}, {"summary", {{"passed", s.passed}, {"failed", s.failed}, {"skipped", s.skipped}}}},
         text);
    return s.failed == 0 ? kExitOk : kExitFail;
}

std::vector<int> parse_parts(const std::string& text) {
    std::vector<int> parts;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(item, &used);
            if (used != item.size() || v < 1)
                throw std::invalid_argument(item);
            parts.push_back(v);
        } catch (const std::exception&) {
            throw UsageError("--parts: '" + item + "' is not a positive integer");
        }
    }
    if (parts.empty())
        throw UsageError("--parts must list at least one positive integer");
    return parts;
}

void require(bool ok, const std::string& message) {
    if (!ok)
        throw UsageError(message);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact checks for dessin correlators: Virasoro recursion, closed forms, Eynard-Orantin recursion "
                 "and local Airy expansions."};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--cache", g.cache_path, "Correlator cache directory (overrides DESSIN_CACHE_DIR)");
    app.add_flag("--use-cache", g.use_cache, "Cache in DESSIN_CACHE_DIR or ./.dessin-cache");
    app.add_flag("--seedless", g.seedless, "Deterministic output: no timings, no randomized suites");
    app.add_option("--jobs", g.jobs, "Parallel suites for 'verify --suite all'")->check(CLI::PositiveNumber);
    app.add_option("--seed", g.seed, "Seed for the randomized suites");

    int genus = 0, n = 0, order = 0;
    std::string parts_text, source = "recursion", series_name, branch_name, norm_name = "display", name, suite;
    bool weighted = false, list = false;
    std::optional<int> opt_g, opt_n, opt_order, cases, max_sum_opt, max_genus_opt;
    std::optional<std::string> key;
    int budget = harness::kDefaultBudget;

    auto* correlator = app.add_subcommand("correlator", "One correlator D_g(A), or its weighted value");
    correlator->add_option("--genus,-g", genus, "Genus")->required()->check(CLI::NonNegativeNumber);
    correlator->add_option("--parts", parts_text, "Comma-separated positive parts, e.g. 1,2,3")->required();
    correlator->add_flag("--weighted", weighted, "Multiply by the product of the parts");

    auto* npoint = app.add_subcommand("npoint", "Truncated n-point series G_{g,n}");
    npoint->add_option("--genus,-g", genus, "Genus")->required()->check(CLI::NonNegativeNumber);
    npoint->add_option("--n", n, "Number of points")->required()->check(CLI::PositiveNumber);
    npoint->add_option("--order", order, "Maximal total inverse-x degree")->required();
    npoint->add_option("--source", source, "Engine")->check(CLI::IsMember({"recursion", "operator", "eo"}));

    auto* eo_cmd = app.add_subcommand("eo", "Eynard-Orantin form w_{g,n} in the global coordinate");
    eo_cmd->add_option("--g", genus, "Genus")->required()->check(CLI::NonNegativeNumber);
    eo_cmd->add_option("--n", n, "Number of points")->required()->check(CLI::PositiveNumber);

    auto* expand = app.add_subcommand("expand", "Expansion of a closed form");
    expand->add_option("--series", series_name, "G01, G02, G03 or G11")->required();
    expand->add_option("--order", order, "Maximal total inverse-x degree")->required();

    auto* times_cmd = app.add_subcommand("times", "Coefficients of y in the local coordinate at a branch point");
    times_cmd->add_option("--branch", branch_name, "plus or minus")->required();
    times_cmd->add_option("--order", order, "Highest power of xi")->required()->check(CLI::PositiveNumber);
    times_cmd->add_option("--normalization", norm_name, "display or curve")
        ->check(CLI::IsMember({"display", "curve"}));

    auto* identity = app.add_subcommand("identity", "Generating-function or local identity check");
    identity->add_option("--name", name, "Identity name")->required();
    identity->add_option("--order", order, "Truncation order")->required();

    auto* verify = app.add_subcommand("verify", "Run verification suites");
    verify->add_option("--suite", suite, "Suite name, or 'all'");
    verify->add_flag("--list", list, "List suites");
    verify->add_option("--g", opt_g, "Genus (main-theorem)");
    verify->add_option("--n", opt_n, "Number of points (main-theorem)");
    verify->add_option("--order", opt_order, "Order override");
    verify->add_option("--key", key, "Sub-check selector (catalog key, identity, closed form)");
    verify->add_option("--cases", cases, "Random cases for randomized suites");
    verify->add_option("--budget", budget, "Order budget for 'all'");

    auto* cache = app.add_subcommand("cache", "Correlator cache maintenance");
    cache->require_subcommand(1);
    auto* cache_info = cache->add_subcommand("info", "Show the cache location and size");
    auto* cache_warm = cache->add_subcommand("warm", "Fill the cache with all D_g(A) up to bounds");
    cache_warm->add_option("--max-sum", max_sum_opt, "Largest sum of parts (default 14)");
    cache_warm->add_option("--max-genus", max_genus_opt, "Largest genus (default 3)");
    auto* cache_clear = cache->add_subcommand("clear", "Delete the cache file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    try {
        if (*correlator) {
            const auto parts = parse_parts(parts_text);
            TableSession session(g);
            const auto value = weighted ? session.table().weighted(genus, parts) : session.table().raw(genus, parts);
            session.save();
            emit(g, {{"genus", genus}, {"parts", parts}, {"weighted", weighted}, {"polynomial", algebra::to_json(value)}},
                 value.str());
            return kExitOk;
        }
        if (*npoint) {
            require(order >= 2 * n, "--order must be at least 2n");
            NPointSeries s;
            if (source == "recursion") {
                TableSession session(g);
                s = virasoro::npoint_series(session.table(), genus, n, order);
                session.save();
            } else if (source == "operator") {
                require(2 * genus - 2 + n > 0, "operator source needs 2g-2+n > 0");
                s = virasoro::assemble_operator_form(genus, n - 1, order);
            } else {
                require(2 * genus - 2 + n > 0, "eo source needs 2g-2+n > 0");
                s = eo::to_x_series(genus, n, order);
            }
            emit(g, s.to_json(), npoint_text(s));
            return kExitOk;
        }
        if (*eo_cmd) {
            require(2 * genus - 2 + n > 0, "eo needs 2g-2+n > 0");
            const auto& form = eo::eo_omega(genus, n);
            emit(g, form.to_json(), form.coeff.str());
            return kExitOk;
        }
        if (*expand) {
            const auto which = closed::parse_closed_form(series_name);
            require(which.has_value(), "unknown series '" + series_name + "' (valid: G01, G02, G03, G11)");
            const int min_order = *which == closed::ClosedForm::G01 ? 2 : *which == closed::ClosedForm::G02 ? 4
                                                                      : *which == closed::ClosedForm::G03 ? 6 : 2;
            require(order >= min_order, "--order must be at least " + std::to_string(min_order) + " for " + series_name);
            const auto s = closed::dessin_closed_series(*which, order);
            emit(g, s.to_json(), npoint_text(s));
            return kExitOk;
        }
        if (*times_cmd) {
            const auto branch = airy::parse_branch(branch_name);
            require(branch.has_value(), "unknown branch '" + branch_name + "' (valid: plus, minus)");
            const auto norm = norm_name == "curve" ? airy::Normalization::curve : airy::Normalization::display;
            const auto y = airy::y_branch_series(*branch, order, norm);
            nlohmann::json items = nlohmann::json::array();
            std::string text;
            for (int k = 1; k <= order; ++k) {
                const auto c = y.coefficient(k);
                items.push_back({{"k", k}, {"coefficient", algebra::to_json(c)}});
                text += "xi^" + std::to_string(k) + ": " + c.str() + "\n";
            }
            emit(g,
                 {{"branch", branch_name}, {"order", order}, {"normalization", norm_name}, {"times", items}},
                 text);
            return kExitOk;
        }
        if (*identity) {
            require(order >= 2, "--order must be at least 2");
            std::vector<VerificationReport> reports;
            if (const auto id = closed::parse_identity(name))
                reports.push_back(closed::gf_identity_check(*id, order));
            else if (const auto local = airy::parse_local_identity(name))
                reports.push_back(airy::local_identity_check(*local, order));
            else {
                std::vector<std::string> valid;
                for (auto i : closed::all_identities())
                    valid.push_back(closed::to_string(i));
                for (auto i : airy::all_local_identities())
                    valid.push_back(airy::to_string(i));
                throw UsageError("unknown identity '" + name + "' (valid: " + join(valid) + ")");
            }
            return emit_reports(g, reports);
        }
        if (*verify) {
            if (list) {
                nlohmann::json items = nlohmann::json::array();
                std::string text;
                for (const auto& s : harness::suite_registry()) {
                    items.push_back({{"name", s.name},
                                     {"description", s.description},
                                     {"budget", s.budget},
                                     {"randomized", s.randomized}});
                    text += s.name + " - " + s.description + "\n";
                }
                emit(g, {{"suites", items}}, text);
                return kExitOk;
            }
            require(!suite.empty(), "verify needs --suite NAME or --list");
            harness::SuiteContext ctx;
            const harness::SuiteInfo* info = nullptr;
            if (suite != "all") {
                info = harness::find_suite(suite);
                require(info != nullptr,
                        "unknown suite '" + suite + "' (valid: all, " + join(harness::suite_names()) + ")");
                require(!(info->randomized && g.seedless && !g.seed), "--seedless with a randomized suite needs --seed");
            }
            ctx.seed = g.seed ? *g.seed : std::random_device{}();
            TableSession session(g);
            ctx.table = &session.table();
            std::vector<VerificationReport> reports;
            if (suite == "all") {
                require(budget >= 0, "--budget must be nonnegative");
                reports = harness::suite_all(budget, ctx, !g.seedless, g.jobs);
            } else {
                harness::SuiteParams params{opt_order, opt_g, opt_n, key, cases};
                try {
                    reports = info->run(ctx, params);
                } catch (const std::invalid_argument& e) {
                    throw UsageError(e.what());
                }
            }
            session.save();
            return emit_reports(g, reports);
        }
        if (*cache) {
            TableSession session(g);
            require(session.enabled(), "no cache configured (use --cache DIR, DESSIN_CACHE_DIR or --use-cache)");
            if (*cache_info) {
                emit(g, {{"path", session.file().string()}, {"exists", fs::exists(session.file())},
                         {"entries", session.table().size()}, {"version", virasoro::kCacheVersion}},
                     session.file().string() + ": " + std::to_string(session.table().size()) + " entries");
            } else if (*cache_warm) {
                const int max_sum = max_sum_opt.value_or(14), max_genus = max_genus_opt.value_or(3);
                require(max_sum >= 1 && max_genus >= 0, "--max-sum must be positive and --max-genus nonnegative");
                for (int total = 1; total <= max_sum; ++total)
                    for (const auto& parts : virasoro::partitions(total))
                        for (int gg = 0; gg <= max_genus; ++gg)
                            session.table().raw(gg, parts);
                session.save();
                emit(g, {{"path", session.file().string()}, {"entries", session.table().size()}},
                     session.file().string() + ": " + std::to_string(session.table().size()) + " entries");
            } else if (*cache_clear) {
                const bool removed = fs::remove(session.file());
                emit(g, {{"path", session.file().string()}, {"removed", removed}},
                     removed ? "removed " + session.file().string() : "nothing to remove");
            }
            return kExitOk;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
