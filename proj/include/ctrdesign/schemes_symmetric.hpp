#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ctrdesign/auction.hpp"
#include "ctrdesign/types.hpp"

namespace ctrdesign {

/// Parameters of the dispersion-along-the-diagonal ladder for the two-point
/// prior {(l,h),(h,l)}: signals s_k = s_0 (1+delta)^k with s_0 = (l+h)/2,
/// pair masses x_{-K}..x_{K-1} and corner masses y, z.
struct DispersionParams {
    Rational l, h, delta;
    long K = 0;
    std::vector<Rational> signals;      // s_{-K}..s_K, size 2K+1
    std::vector<Rational> pair_masses;  // x_{-K}..x_{K-1}, size 2K
    Rational corner_low;                // y
    Rational corner_high;               // z
    Rational x0;

    const Rational& signal(long k) const { return signals[static_cast<std::size_t>(k + K)]; }
    const Rational& pair_mass(long k) const { return pair_masses[static_cast<std::size_t>(k + K)]; }
};

/// The 8-cell structure of the flipping-the-square table over the uniform
/// {1/2,1}^2 prior with unit values; exactly calibrated, with expected
/// revenue (21-4*eps)/(24+32*eps). Requires 0 < eps <= 1/4.
InformationStructure flipping_square(const Rational& eps);

/// The environment the square-flip structure lives on.
Environment flipping_square_environment();

/// Environment {(l,h),(h,l)} each w.p. 1/2 with values (v,v).
Environment diagonal_environment(const Rational& l, const Rational& h, const Rational& v);

/// Dispersion along the diagonal with explicit ladder geometry. Validates
/// only the positivity domain l < s_{-K} and s_K < h.
std::pair<InformationStructure, DispersionParams>
diagonal_dispersion(const Rational& l, const Rational& h, const Rational& v,
                    const Rational& delta, long K);

/// Dispersion along the diagonal targeting revenue >= v*h - eps. Picks the
/// ladder spacing from the construction's non-corner admissibility bounds,
/// K from the ladder-length formula, and certifies the revenue target by
/// exact evaluation before emitting (halving the spacing if ever short).
std::pair<InformationStructure, DispersionParams>
diagonal_dispersion(const Rational& l, const Rational& h, const Rational& v, const Rational& eps);

/// The spacing bound used by the explicit-mode proofs-only tests: minimum of
/// all four admissibility bounds, including the two corner-mass ones (the
/// log term is replaced by its rational lower bound (h-l)/2h).
Rational dispersion_proof_delta_bound(const Rational& l, const Rational& h, const Rational& eps);

/// Treats bidders i and j as the high/low dispersion pair and fully
/// disentangles every other bidder (whose CTR is constant across the two
/// profiles). Prior is uniform over {first, second}; all values equal v.
InformationStructure high_low_pairing(int n, int i, int j,
                                      const std::pair<CtrProfile, CtrProfile>& profiles,
                                      const Rational& v, const Rational& eps);

struct CompositionPart {
    Rational weight;
    Environment env;
    InformationStructure structure;
};

/// Mixes calibrated structures for component priors into one calibrated
/// structure for the mixture prior. Asserts exact revenue additivity.
std::pair<Environment, InformationStructure> compose(const std::vector<CompositionPart>& parts);

/// Near-full surplus extraction for an exchangeable prior with equal values:
/// profiles whose top-two CTRs tie are fully disclosed (ties at the top pay
/// full price); the rest decomposes into reversed high/low pairs, each run
/// through high_low_pairing with an equal share of the eps budget.
InformationStructure symmetric_full_extraction(const Environment& env, const Rational& eps);

/// Parameters of the generalized (equal-means) dispersion of the two-point
/// prior {(l,a),(h,b)}: interior signals anchor*(1+eps)^i for |i| <= 2K plus
/// the endpoint signals max(a,b) / min(a,b); the anchor solves the marginal
/// balance by bisection.
struct GeneralizedDispersionParams {
    Rational l, h, a, b, eps;
    long K = 0;
    Rational mu;                       // common mean of both bidders
    Rational prob_la, prob_hb;         // prior of (l,a) and (h,b)
    Rational anchor;                   // grid center, from bisection
    std::vector<Rational> signals;     // s_{-2K-1}..s_{2K+1}, size 4K+3
    std::vector<Rational> masses_x;    // x_{-K}..x_K, size 2K+1
    std::vector<Rational> masses_xp;   // x'_{-K}..x'_K
    Rational gamma_residual;           // achieved |gamma(anchor) - prob ratio|
    Rational marginal_residual;        // achieved max marginal residual

    const Rational& signal(long i) const { return signals[static_cast<std::size_t>(i + 2 * K + 1)]; }
    const Rational& x(long k) const { return masses_x[static_cast<std::size_t>(k + K)]; }
    const Rational& xp(long k) const { return masses_xp[static_cast<std::size_t>(k + K)]; }
};

/// Equal-means environment of the generalized dispersion.
Environment generalized_dispersion_environment(const Rational& l, const Rational& h,
                                               const Rational& a, const Rational& b);

/// Appendix-style generalized dispersion. Calibration is exact for any
/// anchor; only the CTR marginal depends on the bisection and its residual
/// is reported (and kept below 1e-12 before the final mass normalization).
/// Throws DegenerateCase when a == l (full disclosure is optimal there).
std::pair<InformationStructure, GeneralizedDispersionParams>
generalized_dispersion(const Rational& l, const Rational& h, const Rational& a, const Rational& b,
                       const Rational& eps);

/// Largest t >= 0 with base^t <= x, computed exactly. Requires base > 1, x >= 1.
long floor_log_ratio(const Rational& base, const Rational& x);

}  // namespace ctrdesign
