#ifndef UOWSN_CHANNEL_HPP
#define UOWSN_CHANNEL_HPP

#include <numbers>
#include <optional>
#include <span>
#include <string_view>

#include "uowsn/errors.hpp"

namespace uowsn::channel {

inline constexpr double kVacuumLightSpeed = 299792458.0;
inline constexpr double kSeawaterRefractiveIndex = 1.33;

/// Bit error probabilities below this value are stored as exactly zero.
inline constexpr double kBerFloor = 1e-300;

enum class WaterType { ClearOcean, CoastalOcean, TurbidHarbor };

std::string_view to_string(WaterType water);

/// Accepts `clear`, `coastal`, `turbid`.
std::optional<WaterType> parse_water(std::string_view name);

inline constexpr double degrees(double deg) { return deg * std::numbers::pi / 180.0; }

/// Transmitter, receiver and medium parameters of a line-of-sight optical link.
/// All quantities are SI: metres, watts, square metres, radians.
struct ChannelParams {
    double wavelength = 530e-9;
    double extinction = 0.15;
    std::optional<double> absorption;
    std::optional<double> scattering;
    double tx_power = 0.1;
    double tx_efficiency = 0.9;
    double rx_efficiency = 0.9;
    double aperture_area = 0.17e-6;
    double trajectory_angle = degrees(60.0);
    double divergence_angle = degrees(60.0);

    /// Defaults with the extinction coefficient of the given water.
    static ChannelParams for_water(WaterType water);

    /// Throws DomainError if any invariant is violated.
    void validate() const;
};

struct ReceiverNoise {
    double dark_count_rate = 1e6;
    double background_rate = 1e6;
    double detector_efficiency = 0.9;
    double pulse_duration = 1e-9;
    double data_rate = 1e6;

    void validate() const;
};

struct PhysicalConstants {
    double planck = 6.62607015e-34;
    double light_speed_water = kVacuumLightSpeed / kSeawaterRefractiveIndex;

    void validate() const;
};

/// Result of the photon-counting error model for one link.
///
/// `margin` is 1 - 2*ber evaluated as erf() of the same argument, so it keeps
/// full relative precision when ber is close to one half.
struct LinkError {
    double ber = 0.5;
    double margin = 0.0;
    bool clamped = false;
};

double extinction_coefficient(WaterType water);

/// Sum of absorption and scattering coefficients; both must be non-negative.
double extinction_from_components(double absorption, double scattering);

/// Beer-Lambert attenuated, geometrically spread LoS received power in watts.
double received_power_los(const ChannelParams& params, double distance);

/// Signal photon arrival rate, counts per second.
double photon_arrival_rate(double received_power, const ReceiverNoise& noise,
                           const ChannelParams& params, const PhysicalConstants& constants);

LinkError link_error(double received_power, const ReceiverNoise& noise,
                     const ChannelParams& params, const PhysicalConstants& constants);

/// Gaussian-approximated OOK bit error probability, in [0, 0.5].
double single_link_ber(double received_power, const ReceiverNoise& noise,
                       const ChannelParams& params, const PhysicalConstants& constants);

/// Probability that a bit is flipped by upstream path or by the next link, not both.
double chain_ber(double upstream_ber, double link_ber);

/// Left fold of chain_ber over the hops, starting from an error-free source.
double e2e_ber(std::span<const double> link_bers);

}  // namespace uowsn::channel

#endif  // UOWSN_CHANNEL_HPP
