#ifndef UOWSN_CONFIG_HPP
#define UOWSN_CONFIG_HPP

#include <filesystem>
#include <string>
#include <string_view>

#include "uowsn/harness.hpp"

namespace uowsn::config {

/// Parses a JSON document whose keys mirror SimulationConfig:
///
///   {
///     "area": {"width": 250, "height": 250},
///     "node_count": 40,                 // or a list: [20, 40, 60]
///     "max_range": 80,
///     "water": "clear",                 // clear | coastal | turbid
///     "channel": {"wavelength": 530e-9, "extinction": 0.15, "absorption": ..., "scattering": ...,
///                 "tx_power": 0.1, "tx_efficiency": 0.9, "rx_efficiency": 0.9,
///                 "aperture_area": 0.17e-6, "trajectory_angle": 1.0472, "divergence_angle": 1.0472},
///     "noise": {"dark_count_rate": 1e6, "background_rate": 1e6, "detector_efficiency": 0.9,
///               "pulse_duration": 1e-9, "data_rate": 1e6},
///     "constants": {"planck": 6.62607015e-34, "light_speed_water": 2.2541e8},
///     "source_pos": [52.5, 125], "target_pos": [197.5, 125],
///     "protocols": ["crp", "drp", "srp"],
///     "weight_mode": "exact",           // exact | paper
///     "delay": {"packet_bits": 1024, "per_hop_processing": 0},
///     "realizations": 500, "master_seed": 1,
///     "srp_fallback": false, "record_timing": false
///   }
///
/// Every key is optional; angles are radians. Unknown keys are rejected.
/// Throws ConfigError.
harness::SimulationConfig parse_config(std::string_view json_text,
                                       harness::SimulationConfig base = {});

harness::SimulationConfig load_config(const std::filesystem::path& path,
                                      harness::SimulationConfig base = {});

}  // namespace uowsn::config

#endif  // UOWSN_CONFIG_HPP
