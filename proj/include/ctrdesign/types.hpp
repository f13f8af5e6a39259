#pragma once

#include <compare>
#include <map>
#include <utility>
#include <vector>

#include "ctrdesign/rational.hpp"

namespace ctrdesign {

/// One click-through-rate value per bidder, each in [0,1].
struct CtrProfile {
    std::vector<Rational> rates;

    CtrProfile() = default;
    CtrProfile(std::initializer_list<Rational> rs) : rates(rs) {}
    explicit CtrProfile(std::vector<Rational> rs) : rates(std::move(rs)) {}

    std::size_t size() const { return rates.size(); }
    const Rational& operator[](std::size_t i) const { return rates[i]; }

    friend bool operator==(const CtrProfile&, const CtrProfile&) = default;
    friend std::strong_ordering operator<=>(const CtrProfile& a, const CtrProfile& b) {
        return std::lexicographical_compare_three_way(a.rates.begin(), a.rates.end(),
                                                      b.rates.begin(), b.rates.end());
    }
};

/// One score/signal per bidder, each in [0,1].
struct SignalProfile {
    std::vector<Rational> signals;

    SignalProfile() = default;
    SignalProfile(std::initializer_list<Rational> ss) : signals(ss) {}
    explicit SignalProfile(std::vector<Rational> ss) : signals(std::move(ss)) {}

    std::size_t size() const { return signals.size(); }
    const Rational& operator[](std::size_t i) const { return signals[i]; }

    friend bool operator==(const SignalProfile&, const SignalProfile&) = default;
    friend std::strong_ordering operator<=>(const SignalProfile& a, const SignalProfile& b) {
        return std::lexicographical_compare_three_way(a.signals.begin(), a.signals.end(),
                                                      b.signals.begin(), b.signals.end());
    }
};

/// Per-click values plus a finite-support prior over CTR profiles.
struct Environment {
    std::vector<Rational> values;
    std::vector<std::pair<CtrProfile, Rational>> support;  // (profile, probability)

    int n() const { return static_cast<int>(values.size()); }

    /// Throws ValidationError unless probabilities are positive and sum to 1,
    /// profiles are pairwise distinct with entries in [0,1], and values >= 0.
    void validate() const;

    /// E[r_i] under the prior.
    Rational mean(int i) const;

    /// Marginal distribution of bidder i's CTR, sorted by value.
    std::vector<std::pair<Rational, Rational>> marginal(int i) const;
};

struct StructureEntry {
    CtrProfile r;
    SignalProfile s;
    Rational mass;

    friend bool operator==(const StructureEntry&, const StructureEntry&) = default;
};

/// A finite joint distribution over (CTR profile, signal profile) pairs.
/// Entries are kept canonical: merged by (r,s) key, zero masses dropped,
/// sorted lexicographically by (r,s). Mass positivity and dimensions are
/// enforced on construction; total mass exactly 1 is enforced by validate().
class InformationStructure {
  public:
    InformationStructure() : n_(0) {}
    InformationStructure(int n, std::vector<StructureEntry> entries);

    int n() const { return n_; }
    const std::vector<StructureEntry>& entries() const { return entries_; }

    Rational total_mass() const;

    /// Full invariants: total mass exactly 1 on top of constructor checks.
    void validate() const;

    /// Induced marginal over CTR profiles.
    std::map<CtrProfile, Rational> r_marginal() const;

    /// Marginal distribution of bidder i's signal, sorted by value.
    std::vector<std::pair<Rational, Rational>> signal_marginal(int i) const;

    /// Uniformly rescales all masses by 1/total; conditional expectations
    /// (hence calibration) are unchanged.
    InformationStructure normalized() const;

    friend bool operator==(const InformationStructure&, const InformationStructure&) = default;

  private:
    int n_;
    std::vector<StructureEntry> entries_;
};

/// s_i = r_i almost surely.
InformationStructure full_disclosure(const Environment& env);

/// s_i = E[r_i] almost surely.
InformationStructure no_disclosure(const Environment& env);

/// Full disclosure for bidders flagged true, no disclosure for the rest.
InformationStructure per_bidder_disclosure(const Environment& env, const std::vector<bool>& full);

/// Per-bidder garbling of CTR marginals: bidder i's CTR value v is routed to
/// abstract bucket b with probability weights[i][v][b] (rows normalized
/// internally); every bucket's signal is its conditional mean, so the product
/// structure is calibrated by construction, and independent whenever the
/// prior is a product across bidders.
using GarblingWeights = std::vector<std::map<Rational, std::vector<Rational>>>;
InformationStructure product_garbling_structure(const Environment& env, const GarblingWeights& weights);

}  // namespace ctrdesign
