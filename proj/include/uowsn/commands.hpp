#ifndef UOWSN_COMMANDS_HPP
#define UOWSN_COMMANDS_HPP

#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "uowsn/harness.hpp"
#include "uowsn/records.hpp"

namespace uowsn::cli {

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitIo = 3;

/// Bad command-line usage; reported with kExitConfig.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Cartesian sweep over water type, divergence angle and distance, in that
/// nesting order. Each water uses its own tabulated extinction coefficient.
struct LinkSweep {
    std::vector<channel::WaterType> waters;
    std::vector<double> divergences_deg;
    std::vector<double> distances_m;
};

/// Distances 5..100 m in 5 m steps, divergences {30, 60, 90} degrees, all waters.
LinkSweep default_link_sweep();

/// Columns water,divergence_deg,distance_m,received_power_w.
records::OutputRecordSet link_budget_table(const harness::SimulationConfig& config,
                                           const LinkSweep& sweep);

/// Columns water,divergence_deg,distance_m,ber.
records::OutputRecordSet ber_sweep_table(const harness::SimulationConfig& config,
                                         const LinkSweep& sweep);

struct RouteReport {
    records::OutputRecordSet summary;
    std::vector<std::pair<routing::Protocol, std::string>> dumps;
    std::string graph_dump;
    harness::TrialDetail detail;
};

/// One deployment with `trial_seed`, every configured protocol on the same graph.
/// Summary columns protocol,success,failure_reason,hop_count,e2e_ber,e2e_delay_s,
/// total_distance_m,evaluations.
RouteReport route_report(const harness::SimulationConfig& config, std::size_t node_count,
                         std::uint64_t trial_seed);

records::OutputRecordSet trial_table(const harness::CampaignResult& result);
records::OutputRecordSet aggregate_table(const harness::CampaignResult& result);

/// Throws IoError.
void write_text_file(const std::filesystem::path& path, const std::string& content);

/// Creates `dir` if needed; throws IoError.
void ensure_directory(const std::filesystem::path& dir);

}  // namespace uowsn::cli

#endif  // UOWSN_COMMANDS_HPP
