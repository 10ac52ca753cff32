#include "uowsn/channel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace uowsn::channel {

namespace {

void require(bool condition, const char* message) {
    if (!condition) throw DomainError(message);
}

bool is_probability(double p) { return p >= 0.0 && p <= 1.0; }

}  // namespace

std::string_view to_string(WaterType water) {
    switch (water) {
        case WaterType::ClearOcean: return "clear";
        case WaterType::CoastalOcean: return "coastal";
        case WaterType::TurbidHarbor: return "turbid";
    }
    return "unknown";
}

std::optional<WaterType> parse_water(std::string_view name) {
    if (name == "clear") return WaterType::ClearOcean;
    if (name == "coastal") return WaterType::CoastalOcean;
    if (name == "turbid") return WaterType::TurbidHarbor;
    return std::nullopt;
}

double extinction_coefficient(WaterType water) {
    switch (water) {
        case WaterType::ClearOcean: return 0.15;
        case WaterType::CoastalOcean: return 0.30;
        case WaterType::TurbidHarbor: return 2.19;
    }
    throw DomainError("unknown water type");
}

double extinction_from_components(double absorption, double scattering) {
    require(absorption >= 0.0, "absorption coefficient must be non-negative");
    require(scattering >= 0.0, "scattering coefficient must be non-negative");
    return absorption + scattering;
}

ChannelParams ChannelParams::for_water(WaterType water) {
    ChannelParams params;
    params.extinction = extinction_coefficient(water);
    return params;
}

void ChannelParams::validate() const {
    require(wavelength > 0.0, "wavelength must be positive");
    require(extinction >= 0.0 && std::isfinite(extinction), "extinction must be non-negative");
    if (absorption && scattering) {
        const double sum = extinction_from_components(*absorption, *scattering);
        require(std::abs(sum - extinction) <= 1e-12 * std::max(1.0, sum),
                "extinction must equal absorption + scattering");
    }
    require(tx_power > 0.0, "tx_power must be positive");
    require(is_probability(tx_efficiency), "tx_efficiency must be in [0, 1]");
    require(is_probability(rx_efficiency), "rx_efficiency must be in [0, 1]");
    require(aperture_area > 0.0, "aperture_area must be positive");
    require(trajectory_angle >= 0.0 && trajectory_angle < std::numbers::pi / 2,
            "trajectory_angle must be in [0, pi/2)");
    require(divergence_angle > 0.0 && divergence_angle <= std::numbers::pi,
            "divergence_angle must be in (0, pi]");
    require(1.0 - std::cos(divergence_angle) > 0.0, "divergence_angle too small");
}

void ReceiverNoise::validate() const {
    require(dark_count_rate >= 0.0, "dark_count_rate must be non-negative");
    require(background_rate >= 0.0, "background_rate must be non-negative");
    require(is_probability(detector_efficiency), "detector_efficiency must be in [0, 1]");
    require(pulse_duration > 0.0, "pulse_duration must be positive");
    require(data_rate > 0.0, "data_rate must be positive");
}

void PhysicalConstants::validate() const {
    require(planck > 0.0, "planck constant must be positive");
    require(light_speed_water > 0.0 && light_speed_water < kVacuumLightSpeed,
            "light_speed_water must be in (0, c0)");
}

double received_power_los(const ChannelParams& params, double distance) {
    require(std::isfinite(distance) && distance > 0.0, "distance must be positive");
    params.validate();
    const double cos_traj = std::cos(params.trajectory_angle);
    const double attenuation = std::exp(-params.extinction * distance / cos_traj);
    const double spreading = params.aperture_area * cos_traj /
                             (2.0 * std::numbers::pi * (1.0 - std::cos(params.divergence_angle)) *
                              distance * distance);
    return params.tx_power * params.tx_efficiency * params.rx_efficiency * attenuation * spreading;
}

double photon_arrival_rate(double received_power, const ReceiverNoise& noise,
                           const ChannelParams& params, const PhysicalConstants& constants) {
    require(received_power >= 0.0, "received power must be non-negative");
    return received_power * noise.detector_efficiency * params.wavelength /
           (noise.pulse_duration * noise.data_rate * constants.planck * constants.light_speed_water);
}

LinkError link_error(double received_power, const ReceiverNoise& noise,
                     const ChannelParams& params, const PhysicalConstants& constants) {
    const double signal = photon_arrival_rate(received_power, noise, params, constants);
    const double r0 = noise.dark_count_rate + noise.background_rate;
    const double r1 = r0 + signal;
    // sqrt(r1) - sqrt(r0) rewritten to avoid cancellation when signal << r0.
    const double root_gap = signal > 0.0 ? signal / (std::sqrt(r1) + std::sqrt(r0)) : 0.0;
    const double arg = std::sqrt(noise.pulse_duration / 2.0) * root_gap;

    LinkError out;
    out.ber = 0.5 * std::erfc(arg);
    out.margin = std::erf(arg);
    if (out.ber < kBerFloor) {
        out.ber = 0.0;
        out.margin = 1.0;
        out.clamped = true;
    }
    return out;
}

double single_link_ber(double received_power, const ReceiverNoise& noise,
                       const ChannelParams& params, const PhysicalConstants& constants) {
    return link_error(received_power, noise, params, constants).ber;
}

double chain_ber(double upstream_ber, double link_ber) {
    require(is_probability(upstream_ber), "upstream BER must be in [0, 1]");
    require(is_probability(link_ber), "link BER must be in [0, 1]");
    return (1.0 - upstream_ber) * link_ber + (1.0 - link_ber) * upstream_ber;
}

double e2e_ber(std::span<const double> link_bers) {
    double acc = 0.0;
    for (double p : link_bers) acc = chain_ber(acc, p);
    return acc;
}

}  // namespace uowsn::channel
