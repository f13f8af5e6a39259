#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "ctrdesign/types.hpp"

namespace ctrdesign {

/// Residuals of calibration / marginal / independence constraints. Only the
/// map relevant to the check that produced the report is populated.
struct VerificationReport {
    std::map<std::pair<int, Rational>, Rational> calibration_residuals;     // (bidder, signal value)
    std::map<CtrProfile, Rational> marginal_residuals;                      // per CTR profile
    std::map<std::pair<int, SignalProfile>, Rational> independence_residuals;  // (bidder, signal profile)
    Rational tolerance;
    bool pass = false;

    Rational max_abs_residual() const;
};

/// Residual per (bidder i, signal value s'_i with positive mass):
///   sum over entries with s_i = s'_i of mass * (r_i - s'_i).
/// Signal values group under exact rational equality. pass iff every
/// |residual| <= tolerance. The entry list is treated as a raw nonnegative
/// measure; total mass is not required to be 1 so that deliberately broken
/// structures can be diagnosed.
VerificationReport verify_calibration(const InformationStructure& structure, const Rational& tolerance);

/// Residual per CTR profile r: (sum over s of mass(r,s)) - g(r). Profiles
/// present on only one side contribute their full mass / probability.
VerificationReport verify_marginal(const InformationStructure& structure, const Environment& env,
                                   const Rational& tolerance);

/// Residual per (bidder i, signal profile s with positive mass):
///   E[r_i | s] - E[r_i | s_i].
VerificationReport check_independence(const InformationStructure& structure, const Rational& tolerance);

enum class BidderBundling { FullBundle, Unbundle, Partial };
enum class Disclosure { NoDisclosure, FullDisclosure, Moderate };

struct BundlingLabel {
    std::vector<BidderBundling> per_bidder;
    Disclosure overall = Disclosure::Moderate;
    bool interior = false;
};

/// Per-bidder: FullBundle iff the signal marginal is a point mass at E[r_i];
/// Unbundle iff s_i = r_i with probability 1; Partial otherwise. Overall and
/// interior labels follow the disclosure lattice.
BundlingLabel classify_bundling(const InformationStructure& structure, const Environment& env);

/// Product of independently drawn per-bidder garblings with conditional-mean
/// signals: calibrated by construction, independent whenever the prior is a
/// product across bidders. Deterministic given the seed.
InformationStructure random_independent_calibrated(const Environment& env, std::uint64_t seed,
                                                   int signals_per_bidder);

}  // namespace ctrdesign
