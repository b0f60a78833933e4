/**
 * Copyright 2026 The absg2 Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "absg2/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "absg2/analytic.hpp"
#include "absg2/montecarlo.hpp"
#include "absg2/optimize.hpp"
#include "absg2/probability.hpp"

namespace absg2::cli {

namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

double parse_double(std::string_view text)
{
    double value = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) throw UsageError("not a number: '" + std::string(text) + "'");
    return value;
}

std::size_t parse_count(std::string_view text)
{
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw UsageError("not a count: '" + std::string(text) + "'");
    }
    return value;
}

std::vector<std::string_view> split(std::string_view text, char sep)
{
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

std::uint64_t default_seed()
{
    const char* env = std::getenv("ABS_SEED");
    if (env == nullptr || *env == '\0') return 0;
    std::string_view text(env);
    std::uint64_t seed = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), seed);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw UsageError("ABS_SEED is not an unsigned integer: '" + std::string(text) + "'");
    }
    return seed;
}

void write_output(const std::string& path, const std::string& text, std::ostream& out)
{
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot open '" + path + "' for writing");
    file << text;
    file.flush();
    if (!file) throw IoError("write to '" + path + "' failed");
}

std::vector<PairKind> parse_pairs(const std::string& text)
{
    if (text.empty() || text == "all") return {std::begin(kAllPairs), std::end(kAllPairs)};
    std::vector<PairKind> pairs;
    for (auto part : split(text, ',')) pairs.push_back(parse_pair_kind(part));
    return pairs;
}

struct SweepPreset {
    PairKind pair;
    const char* x;
    const char* r;
};

// Surfaces cover x in [0.01, 10] against the interior of a 100-point R grid.
// fig4 reads the caption's line list as reflectivities; fig4-literal reads
// it as ratios.
const std::map<std::string, SweepPreset>& presets()
{
    static const std::map<std::string, SweepPreset> table = {
        {"fig2", {PairKind::LT, "log:0.01:10:100", "0:1:100"}},
        {"fig3", {PairKind::LT, "0.1,0.5,0.71,2,5,10", "0:1:101"}},
        {"fig4", {PairKind::LT, "0:10:201", "0.05,0.1,0.2,0.3,0.4,0.5"}},
        {"fig4-literal", {PairKind::LT, "0.05,0.1,0.2,0.3,0.4,0.5", "0:1:101"}},
        {"fig5", {PairKind::LL, "log:0.01:10:100", "0:1:100"}},
        {"fig6", {PairKind::TT, "log:0.01:10:100", "0:1:100"}},
        {"fig7", {PairKind::SS, "log:0.01:10:100", "0:1:100"}},
        {"fig8", {PairKind::SL, "log:0.01:10:100", "0:1:100"}},
        {"fig9", {PairKind::ST, "log:0.01:10:100", "0:1:100"}},
    };
    return table;
}

// ---------------------------------------------------------------------------
// Subcommands

struct VisibilityArgs {
    std::string pair;
    double x = 1.0;
    double r = 0.5;
    bool json = false;
};

int cmd_visibility(const VisibilityArgs& a, std::ostream& out)
{
    const PairKind pair = parse_pair_kind(a.pair);
    const double v = visibility_analytic(pair, a.x, a.r);
    if (a.json) {
        json j = {{"pair", to_string(pair)}, {"x", a.x}, {"R", a.r}, {"visibility", v}};
        out << j.dump() << '\n';
    } else {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.9f", v);
        out << buf << '\n';
    }
    return kOk;
}

struct SweepArgs {
    std::string pair;
    std::string x;
    std::string r;
    std::string preset;
    std::string out;
};

int cmd_sweep(const SweepArgs& a, std::ostream& out, std::ostream& err)
{
    std::string pair_text = a.pair;
    std::string x_spec = a.x;
    std::string r_spec = a.r;
    if (!a.preset.empty()) {
        auto it = presets().find(a.preset);
        if (it == presets().end()) throw UsageError("unknown preset '" + a.preset + "'");
        if (pair_text.empty()) pair_text = std::string(to_string(it->second.pair));
        if (x_spec.empty()) x_spec = it->second.x;
        if (r_spec.empty()) r_spec = it->second.r;
    }
    if (pair_text.empty() || x_spec.empty() || r_spec.empty()) {
        throw UsageError("sweep needs --pair, --x and --r (or --preset)");
    }
    const PairKind pair = parse_pair_kind(pair_text);
    std::size_t skipped = 0;
    const auto rows = sweep_rows(pair, parse_grid_spec(x_spec), parse_grid_spec(r_spec), &skipped);
    if (skipped > 0) err << "sweep: skipped " << skipped << " grid points outside x > 0, 0 < R < 1\n";
    write_output(a.out, sweep_csv(rows), out);
    return kOk;
}

struct G2Args {
    std::string pair;
    double x = 1.0;
    double r = 0.5;
    double delta_nu = 1e6;
    std::string tau;
    std::string mode = "analytic";
    std::uint64_t n = 100000;
    std::uint64_t seed = 0;
    bool seed_given = false;
    std::uint64_t chunk = 4096;
    unsigned threads = 0;
    std::string phase_model = "physical";
    bool raw_extrema = false;
    std::string out;
};

int cmd_g2(const G2Args& a, std::ostream& out, std::ostream& err)
{
    ExperimentConfig cfg;
    cfg.pair = parse_pair_kind(a.pair);
    cfg.intensity_ratio = a.x;
    cfg.bs = BeamSplitter(a.r);
    cfg.delta_nu = a.delta_nu;
    if (!a.tau.empty()) {
        cfg.tau_grid = parse_grid_spec(a.tau);
    } else if (a.delta_nu > 0.0) {
        cfg.tau_grid = default_tau_grid(a.delta_nu);
    } else {
        throw UsageError("--tau is required when --delta-nu is 0");
    }
    validate_config(cfg);

    std::ostringstream csv;
    if (a.mode == "analytic") {
        const G2Curve curve = g2_analytic_curve(cfg);
        csv << "tau,g2\n";
        for (std::size_t i = 0; i < curve.tau.size(); ++i) {
            csv << format_g9(curve.tau[i]) << ',' << format_g9(curve.g2[i]) << '\n';
        }
        write_output(a.out, csv.str(), out);
        return kOk;
    }
    if (a.mode != "mc") throw UsageError("--mode must be analytic or mc");
    if (!(cfg.delta_nu > 0.0)) throw DomainError("degenerate curve: delta_nu must be > 0 in mc mode");

    McSettings mc;
    mc.n_realizations = a.n;
    mc.seed = a.seed_given ? a.seed : default_seed();
    mc.parallel_chunk = a.chunk;
    mc.threads = a.threads;
    if (a.phase_model == "independent") {
        mc.phase_model = PhaseModel::IndependentSlots;
    } else if (a.phase_model != "physical") {
        throw UsageError("--phase-model must be physical or independent");
    }

    const McRun run = run_monte_carlo(cfg, mc);
    csv << "tau,g2,stderr\n";
    for (std::size_t i = 0; i < run.curve.tau.size(); ++i) {
        csv << format_g9(run.curve.tau[i]) << ',' << format_g9(run.curve.g2[i]) << ','
            << format_g9((*run.curve.standard_error)[i]) << '\n';
    }
    write_output(a.out, csv.str(), out);

    std::ostream& report = (a.out.empty() || a.out == "-") ? err : out;
    char buf[160];
    if (a.raw_extrema) {
        const auto v = visibility_from_curve(run.curve, cfg.delta_nu, ExtractionMode::RawExtrema);
        std::snprintf(buf, sizeof buf, "V = %.6f (raw extrema, max %.6g, min %.6g)\n", v.v, v.g2_max, v.g2_min);
    } else {
        if (!run.visibility) throw DomainError("degenerate curve: grid spans less than one beat period");
        const auto& v = *run.visibility;
        std::snprintf(buf, sizeof buf, "V = %.6f +/- %.6f (N = %llu, seed = %llu)\n", v.result.v, v.standard_error,
                      static_cast<unsigned long long>(mc.n_realizations),
                      static_cast<unsigned long long>(mc.seed));
    }
    report << buf;
    return kOk;
}

struct ValidateArgs {
    std::string pairs = "all";
    std::string x = "0.5,1,2";
    std::string r = "0.25,0.5,0.75";
    double delta_nu = 1e6;
    std::uint64_t n = 100000;
    std::uint64_t seed = 0;
    bool seed_given = false;
    unsigned threads = 0;
    bool json = false;
};

int cmd_validate(const ValidateArgs& a, std::ostream& out)
{
    const auto pairs = parse_pairs(a.pairs);
    const auto xs = parse_grid_spec(a.x);
    const auto rs = parse_grid_spec(a.r);
    McSettings mc;
    mc.n_realizations = a.n;
    mc.seed = a.seed_given ? a.seed : default_seed();
    mc.threads = a.threads;

    json cells = json::array();
    std::ostringstream text;
    std::vector<std::string> failures;
    char buf[200];
    std::snprintf(buf, sizeof buf, "%-4s %10s %10s %12s %12s %12s %12s  %s\n", "pair", "x", "R", "V_analytic",
                  "V_mc", "|diff|", "3*SE", "status");
    text << buf;
    for (PairKind pair : pairs) {
        for (double x : xs) {
            for (double r : rs) {
                ExperimentConfig cfg;
                cfg.pair = pair;
                cfg.intensity_ratio = x;
                cfg.bs = BeamSplitter(r);
                cfg.delta_nu = a.delta_nu;
                cfg.tau_grid = default_tau_grid(a.delta_nu);
                const double v_an = visibility_analytic(pair, x, r);
                // Distinct stream per cell so cells are independent checks.
                McSettings cell_mc = mc;
                cell_mc.seed = mc.seed + cells.size();
                const McRun run = run_monte_carlo(cfg, cell_mc);
                const auto& est = run.visibility.value();
                const double diff = std::abs(est.result.v - v_an);
                const double bound = std::max(3.0 * est.standard_error, kZeroVarianceFloor);
                const bool ok = diff <= bound;
                std::snprintf(buf, sizeof buf, "%-4s %10.4g %10.4g %12.8f %12.8f %12.3e %12.3e  %s\n",
                              std::string(to_string(pair)).c_str(), x, r, v_an, est.result.v, diff,
                              3.0 * est.standard_error, ok ? "PASS" : "FAIL");
                text << buf;
                if (!ok) failures.push_back(buf);
                cells.push_back({{"pair", to_string(pair)},
                                 {"x", x},
                                 {"R", r},
                                 {"v_analytic", v_an},
                                 {"v_mc", est.result.v},
                                 {"standard_error", est.standard_error},
                                 {"abs_diff", diff},
                                 {"pass", ok}});
            }
        }
    }
    if (a.json) {
        json j = {{"n_realizations", mc.n_realizations}, {"seed", mc.seed}, {"cells", cells},
                  {"passed", failures.empty()}};
        out << j.dump(2) << '\n';
    } else {
        out << text.str();
        if (failures.empty()) {
            out << "all " << cells.size() << " cells pass\n";
        } else {
            out << failures.size() << " failing cell(s):\n";
            for (const auto& f : failures) out << "  " << f;
        }
    }
    return failures.empty() ? kOk : kValidationFailed;
}

struct Table1Args {
    double x_cap = 1e3;
    bool json = false;
};

int cmd_table1(const Table1Args& a, std::ostream& out)
{
    json rows = json::array();
    std::ostringstream text;
    char buf[200];
    std::snprintf(buf, sizeof buf, "%-4s %10s %10s %10s  %s\n", "pair", "V_max", "R_max", "x_max", "note");
    text << buf;
    for (PairKind pair : kAllPairs) {
        const auto m = maximize_visibility(pair, {kDefaultRatioRange.lo, a.x_cap});
        std::string x_text;
        std::string note;
        if (m.x_flat) {
            x_text = "any";
            note = "flat in x";
        } else {
            std::snprintf(buf, sizeof buf, "%.4f", m.x_star);
            x_text = buf;
            if (m.x_at_cap) {
                std::snprintf(buf, sizeof buf, "-> ss limit, x capped at %g", a.x_cap);
                note = buf;
            }
        }
        std::snprintf(buf, sizeof buf, "%-4s %10.7f %10.7g %10s", std::string(to_string(pair)).c_str(), m.v_max,
                      m.r_star, x_text.c_str());
        text << buf;
        if (!note.empty()) text << "  " << note;
        text << '\n';
        json row = {{"pair", to_string(pair)}, {"v_max", m.v_max}, {"r_star", m.r_star}};
        if (m.x_flat) {
            row["x_star"] = "any";
        } else {
            row["x_star"] = m.x_star;
        }
        row["x_at_cap"] = m.x_at_cap;
        row["x_cap"] = a.x_cap;
        rows.push_back(row);
    }
    if (a.json) {
        out << json{{"rows", rows}}.dump(2) << '\n';
    } else {
        out << text.str();
    }
    return kOk;
}

}  // namespace

std::vector<double> parse_grid_spec(std::string_view spec)
{
    if (spec.empty()) throw UsageError("empty grid spec");
    if (spec.find(':') != std::string_view::npos) {
        auto parts = split(spec, ':');
        bool geometric = false;
        if (parts.size() == 4 && parts[0] == "log") {
            geometric = true;
            parts.erase(parts.begin());
        }
        if (parts.size() != 3) throw UsageError("grid spec must be start:stop:count or log:start:stop:count");
        const double start = parse_double(parts[0]);
        const double stop = parse_double(parts[1]);
        const std::size_t count = parse_count(parts[2]);
        if (count == 0) throw UsageError("grid count must be >= 1");
        if (!std::isfinite(start) || !std::isfinite(stop)) throw UsageError("grid bounds must be finite");
        if (geometric && !(start > 0.0 && stop > 0.0)) throw UsageError("log grid bounds must be > 0");
        std::vector<double> grid(count);
        for (std::size_t i = 0; i < count; ++i) {
            const double f = count == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(count - 1);
            grid[i] = geometric ? start * std::pow(stop / start, f) : start + (stop - start) * f;
        }
        if (count > 1) grid.back() = stop;
        return grid;
    }
    std::vector<double> values;
    for (auto part : split(spec, ',')) values.push_back(parse_double(part));
    return values;
}

std::string format_g9(double value)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", value);
    return buf;
}

std::vector<SweepRow> sweep_rows(PairKind pair, const std::vector<double>& xs, const std::vector<double>& rs,
                                 std::size_t* skipped)
{
    std::vector<SweepRow> rows;
    rows.reserve(xs.size() * rs.size());
    std::size_t dropped = 0;
    for (double x : xs) {
        for (double r : rs) {
            if (!(std::isfinite(x) && x > 0.0 && r > 0.0 && r < 1.0)) {
                ++dropped;
                continue;
            }
            rows.push_back({pair, x, r, visibility_analytic(pair, x, r)});
        }
    }
    if (skipped != nullptr) *skipped = dropped;
    return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows)
{
    std::string text = "pair,x,R,visibility\n";
    for (const auto& row : rows) {
        text += to_string(row.pair);
        text += ',';
        text += format_g9(row.x);
        text += ',';
        text += format_g9(row.r);
        text += ',';
        text += format_g9(row.visibility);
        text += '\n';
    }
    return text;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Second-order temporal interference of two independent beams at an asymmetrical beam splitter"};
    app.require_subcommand(1);

    VisibilityArgs vis;
    auto* vis_cmd = app.add_subcommand("visibility", "Analytic visibility for one (pair, x, R)");
    vis_cmd->add_option("--pair", vis.pair, "lt, ll, tt, ss, sl or st")->required();
    vis_cmd->add_option("--x", vis.x, "intensity ratio I_a/I_b")->required();
    vis_cmd->add_option("--r", vis.r, "reflectivity")->required();
    vis_cmd->add_flag("--json", vis.json);

    SweepArgs sweep;
    auto* sweep_cmd = app.add_subcommand("sweep", "Visibility over an (x, R) grid as CSV");
    sweep_cmd->add_option("--pair", sweep.pair);
    sweep_cmd->add_option("--x", sweep.x, "grid spec");
    sweep_cmd->add_option("--r", sweep.r, "grid spec");
    sweep_cmd->add_option("--preset", sweep.preset, "fig2..fig9, fig4-literal");
    sweep_cmd->add_option("--out", sweep.out, "output CSV (stdout if omitted)");

    G2Args g2;
    auto* g2_cmd = app.add_subcommand("g2", "G2(tau) curve as CSV, analytic or Monte Carlo");
    g2_cmd->add_option("--pair", g2.pair)->required();
    g2_cmd->add_option("--x", g2.x);
    g2_cmd->add_option("--r", g2.r);
    g2_cmd->add_option("--delta-nu", g2.delta_nu, "beat frequency in Hz");
    g2_cmd->add_option("--tau", g2.tau, "grid spec in seconds (default: 81 points over +-1/delta-nu)");
    g2_cmd->add_option("--mode", g2.mode, "analytic or mc");
    g2_cmd->add_option("--n", g2.n, "realizations");
    auto* g2_seed = g2_cmd->add_option("--seed", g2.seed, "overrides ABS_SEED");
    g2_cmd->add_option("--chunk", g2.chunk, "realizations per work unit");
    g2_cmd->add_option("--threads", g2.threads, "worker threads (0: all cores)");
    g2_cmd->add_option("--phase-model", g2.phase_model, "physical or independent");
    g2_cmd->add_flag("--raw-extrema", g2.raw_extrema, "report V from raw curve extrema instead of the fit");
    g2_cmd->add_option("--out", g2.out, "output CSV (stdout if omitted)");

    ValidateArgs val;
    auto* val_cmd = app.add_subcommand("validate", "Monte Carlo vs analytic visibility over a grid");
    val_cmd->add_option("--pair", val.pairs, "comma list or 'all'");
    val_cmd->add_option("--x", val.x, "grid spec");
    val_cmd->add_option("--r", val.r, "grid spec");
    val_cmd->add_option("--delta-nu", val.delta_nu);
    val_cmd->add_option("--n", val.n);
    auto* val_seed = val_cmd->add_option("--seed", val.seed, "overrides ABS_SEED");
    val_cmd->add_option("--threads", val.threads);
    val_cmd->add_flag("--json", val.json);

    Table1Args t1;
    auto* t1_cmd = app.add_subcommand("table1", "Maximal visibility for every pairing");
    t1_cmd->add_option("--x-cap", t1.x_cap, "upper end of the x search range");
    t1_cmd->add_flag("--json", t1.json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kUsage;
    }

    try {
        if (*vis_cmd) return cmd_visibility(vis, out);
        if (*sweep_cmd) return cmd_sweep(sweep, out, err);
        if (*g2_cmd) {
            g2.seed_given = g2_seed->count() > 0;
            return cmd_g2(g2, out, err);
        }
        if (*val_cmd) {
            val.seed_given = val_seed->count() > 0;
            return cmd_validate(val, out);
        }
        if (*t1_cmd) return cmd_table1(t1, out);
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kIo;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace absg2::cli
