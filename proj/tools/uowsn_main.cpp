// uowsn: underwater optical sensor network link budget, routing and campaign tool.

#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "uowsn/commands.hpp"
#include "uowsn/config.hpp"
#include "uowsn/random.hpp"

namespace {

using namespace uowsn;

struct CommonFlags {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::string out_dir;
    std::string protocols;
    std::string weight_mode;
    std::string nodes;
    std::optional<std::size_t> realizations;
    std::string water;
    bool timing = false;
    std::string distances;
    std::string divergences;
};

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> items;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ','))
        if (!item.empty()) items.push_back(item);
    return items;
}

double to_double(const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw cli::UsageError("not a number: " + s);
    }
    if (used != s.size()) throw cli::UsageError("not a number: " + s);
    return v;
}

/// Comma list, or `start:stop:step` inclusive.
std::vector<double> parse_numbers(const std::string& text) {
    std::vector<double> values;
    if (text.find(':') != std::string::npos) {
        std::vector<std::string> parts;
        std::stringstream in(text);
        std::string part;
        while (std::getline(in, part, ':')) parts.push_back(part);
        if (parts.size() != 3) throw cli::UsageError("range must be start:stop:step");
        const double start = to_double(parts[0]);
        const double stop = to_double(parts[1]);
        const double step = to_double(parts[2]);
        if (!(step > 0.0) || stop < start) throw cli::UsageError("bad range " + text);
        const auto count = static_cast<long>(std::floor((stop - start) / step + 1e-9));
        for (long i = 0; i <= count; ++i) values.push_back(start + static_cast<double>(i) * step);
        return values;
    }
    for (const auto& item : split_list(text)) values.push_back(to_double(item));
    return values;
}

std::vector<channel::WaterType> parse_waters(const std::string& text) {
    std::vector<channel::WaterType> waters;
    for (const auto& item : split_list(text)) {
        const auto w = channel::parse_water(item);
        if (!w) throw cli::UsageError("unknown water type '" + item + "'");
        waters.push_back(*w);
    }
    return waters;
}

harness::SimulationConfig build_config(const CommonFlags& flags, bool single_water) {
    harness::SimulationConfig cfg;
    if (!flags.config_path.empty()) cfg = config::load_config(flags.config_path, cfg);
    if (!flags.protocols.empty()) {
        cfg.protocols.clear();
        for (const auto& item : split_list(flags.protocols)) {
            const auto p = routing::parse_protocol(item);
            if (!p) throw cli::UsageError("unknown protocol '" + item + "'");
            cfg.protocols.push_back(*p);
        }
    }
    if (!flags.weight_mode.empty()) {
        const auto m = routing::parse_weight_mode(flags.weight_mode);
        if (!m) throw cli::UsageError("weight mode must be paper or exact");
        cfg.weight_mode = *m;
    }
    if (!flags.nodes.empty()) {
        cfg.node_counts.clear();
        for (double n : parse_numbers(flags.nodes)) {
            if (n < 0 || n != std::floor(n)) throw cli::UsageError("node counts must be integers");
            cfg.node_counts.push_back(static_cast<std::size_t>(n));
        }
    }
    if (flags.realizations) cfg.realizations = *flags.realizations;
    if (single_water && !flags.water.empty()) {
        const auto w = channel::parse_water(flags.water);
        if (!w) throw cli::UsageError("water must be clear, coastal or turbid");
        cfg.water = *w;
    }
    if (flags.timing) cfg.record_timing = true;
    return cfg;
}

void emit(const records::OutputRecordSet& set, const std::string& out_dir,
          const std::string& filename) {
    if (out_dir.empty()) {
        set.write_csv(std::cout);
        return;
    }
    cli::ensure_directory(out_dir);
    cli::write_text_file(std::filesystem::path(out_dir) / filename, set.to_csv());
}

void print_warnings(const harness::SimulationConfig& cfg) {
    for (const auto& w : cfg.validate()) std::cerr << "warning: " << w << '\n';
}

int run_sweep(const CommonFlags& flags, bool ber) {
    auto cfg = build_config(flags, false);
    auto sweep = cli::default_link_sweep();
    if (!flags.water.empty()) sweep.waters = parse_waters(flags.water);
    if (!flags.distances.empty()) sweep.distances_m = parse_numbers(flags.distances);
    if (!flags.divergences.empty()) sweep.divergences_deg = parse_numbers(flags.divergences);
    if (ber) {
        emit(cli::ber_sweep_table(cfg, sweep), flags.out_dir, "ber_sweep.csv");
    } else {
        emit(cli::link_budget_table(cfg, sweep), flags.out_dir, "link_budget.csv");
    }
    return cli::kExitOk;
}

int run_route(const CommonFlags& flags) {
    auto cfg = build_config(flags, true);
    if (flags.nodes.empty() && cfg.node_counts.size() != 1) cfg.node_counts = {40};
    if (cfg.node_counts.size() != 1) throw cli::UsageError("route needs a single node count");
    print_warnings(cfg);
    const std::uint64_t seed = flags.seed ? *flags.seed : derive_trial_seed(cfg.master_seed, 0);
    const auto report = cli::route_report(cfg, cfg.node_counts.front(), seed);
    if (report.detail.graph.coincident_pairs() > 0)
        std::cerr << "warning: " << report.detail.graph.coincident_pairs()
                  << " coincident node pair(s) given zero BER\n";
    if (report.detail.graph.clamped_links() > 0)
        std::cerr << "warning: " << report.detail.graph.clamped_links()
                  << " link BER(s) below 1e-300 stored as 0\n";

    if (flags.out_dir.empty()) {
        report.summary.write_csv(std::cout);
        for (const auto& [protocol, dump] : report.dumps) std::cout << dump;
        return cli::kExitOk;
    }
    cli::ensure_directory(flags.out_dir);
    const std::filesystem::path dir(flags.out_dir);
    cli::write_text_file(dir / "route_summary.csv", report.summary.to_csv());
    for (const auto& [protocol, dump] : report.dumps)
        cli::write_text_file(dir / ("route_" + std::string(routing::to_string(protocol)) + ".txt"),
                             dump);
    cli::write_text_file(dir / "graph.txt", report.graph_dump);
    return cli::kExitOk;
}

int run_campaign(const CommonFlags& flags) {
    auto cfg = build_config(flags, true);
    if (flags.seed) cfg.master_seed = *flags.seed;
    print_warnings(cfg);
    const std::string out_dir = flags.out_dir.empty() ? "." : flags.out_dir;
    cli::ensure_directory(out_dir);

    harness::RunOptions options;
    options.threads = harness::threads_from_environment();
    const auto result = harness::run_campaign(cfg, options);

    const std::filesystem::path dir(out_dir);
    cli::write_text_file(dir / "campaign_trials.csv", cli::trial_table(result).to_csv());
    cli::write_text_file(dir / "campaign_aggregate.csv", cli::aggregate_table(result).to_csv());
    std::cerr << "wrote " << result.trials.size() << " trials to " << dir.string() << '\n';
    return cli::kExitOk;
}

void add_common(CLI::App* cmd, CommonFlags& flags, bool sweep) {
    cmd->add_option("--config", flags.config_path, "JSON configuration file");
    cmd->add_option("--out", flags.out_dir, "Output directory");
    cmd->add_option("--water", flags.water,
                    sweep ? "Water types, comma separated (clear,coastal,turbid)"
                          : "Water type: clear, coastal or turbid");
    if (sweep) {
        cmd->add_option("--distances", flags.distances, "Distances in m: list or start:stop:step");
        cmd->add_option("--divergences", flags.divergences, "Divergence angles in degrees");
        return;
    }
    cmd->add_option("--seed", flags.seed, "Trial seed (route) or master seed (campaign)");
    cmd->add_option("--protocols", flags.protocols, "Protocol subset, e.g. crp,drp,srp");
    cmd->add_option("--weight-mode", flags.weight_mode, "CRP edge weight: paper or exact");
    cmd->add_option("--nodes", flags.nodes, "Node counts: list or start:stop:step");
    cmd->add_option("--realizations", flags.realizations, "Realizations per node count");
    cmd->add_flag("--timing", flags.timing, "Record wall-clock time per protocol call");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Underwater optical wireless sensor network simulator"};
    app.require_subcommand(1);
    CommonFlags flags;
    auto* link = app.add_subcommand("link-budget", "Received power over a distance sweep");
    auto* ber = app.add_subcommand("ber-sweep", "Single-link BER over a distance sweep");
    auto* route = app.add_subcommand("route", "Run all protocols on one deployment");
    auto* campaign = app.add_subcommand("campaign", "Monte-Carlo campaign over node counts");
    add_common(link, flags, true);
    add_common(ber, flags, true);
    add_common(route, flags, false);
    add_common(campaign, flags, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return cli::kExitConfig;
    }

    try {
        if (*link) return run_sweep(flags, false);
        if (*ber) return run_sweep(flags, true);
        if (*route) return run_route(flags);
        if (*campaign) return run_campaign(flags);
    } catch (const cli::IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return cli::kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return cli::kExitConfig;
    }
    return cli::kExitConfig;
}
