#pragma once

#include <map>
#include <vector>

#include "ctrdesign/types.hpp"

namespace ctrdesign {

/// How tied top scores are resolved: split uniformly, or awarded to the
/// earliest bidder in a fixed priority order.
struct TiePolicy {
    enum class Kind { Uniform, Priority };
    Kind kind = Kind::Uniform;
    std::vector<int> order;  // permutation of 0..n-1 when kind == Priority

    static TiePolicy uniform() { return {}; }
    static TiePolicy priority(std::vector<int> order);

    void validate(int n) const;
};

struct AuctionOutcome {
    std::map<int, Rational> winner_distribution;  // positive probabilities only
    std::map<int, Rational> price_per_click;      // for bidders that can win
    Rational conditional_revenue;
};

/// Single-slot generalized second price: the winner maximizes v_i s_i, pays
/// max_{j != i} v_j s_j / s_i per click, and a click arrives with the
/// bidder's conditional CTR. `posterior` holds E[r_i | cell].
AuctionOutcome outcome(const std::vector<Rational>& values, const SignalProfile& s,
                       const std::vector<Rational>& posterior, const TiePolicy& tie);

/// Per-signal-cell view of a structure under an environment's values.
struct CellReport {
    SignalProfile s;
    Rational mass;
    std::vector<Rational> posterior;      // E[r_i | cell]
    AuctionOutcome out;
    Rational conditional_welfare;         // E[max_i v_i r_i | cell]
};

std::vector<CellReport> cell_reports(const Environment& env, const InformationStructure& structure,
                                     const TiePolicy& tie);

/// Exact expected revenue of the auction under `structure`. The structure's
/// CTR marginal must match the environment within `marginal_tolerance`
/// (default exact); otherwise ValidationError.
Rational expected_revenue(const Environment& env, const InformationStructure& structure,
                          const TiePolicy& tie, const Rational& marginal_tolerance = Rational(0));

/// E[max_i v_i r_i], the efficient allocation's surplus.
Rational welfare(const Environment& env);

struct BaselinePolicy {
    enum class Kind { Full, None, PerBidder };
    Kind kind = Kind::None;
    std::vector<bool> full_per_bidder;  // used when kind == PerBidder

    static BaselinePolicy full() { return {Kind::Full, {}}; }
    static BaselinePolicy none() { return {Kind::None, {}}; }
    static BaselinePolicy per_bidder(std::vector<bool> full) {
        return {Kind::PerBidder, std::move(full)};
    }
};

/// Revenue of the extremal (or per-bidder mixed) disclosure policy.
Rational baseline_revenue(const Environment& env, const BaselinePolicy& policy, const TiePolicy& tie);

}  // namespace ctrdesign
