#include "ctrdesign/verify.hpp"

#include <random>

#include "ctrdesign/errors.hpp"

namespace ctrdesign {

Rational VerificationReport::max_abs_residual() const {
    Rational m;
    for (const auto& [k, v] : calibration_residuals) m = max(m, v.abs());
    for (const auto& [k, v] : marginal_residuals) m = max(m, v.abs());
    for (const auto& [k, v] : independence_residuals) m = max(m, v.abs());
    return m;
}

namespace {

void check_tolerance(const Rational& tol) {
    if (tol.sgn() < 0) throw ValidationError("negative tolerance");
}

bool within(const std::map<std::pair<int, Rational>, Rational>& m, const Rational& tol) {
    for (const auto& [k, v] : m)
        if (v.abs() > tol) return false;
    return true;
}

}  // namespace

VerificationReport verify_calibration(const InformationStructure& structure, const Rational& tolerance) {
    check_tolerance(tolerance);
    VerificationReport rep;
    rep.tolerance = tolerance;
    for (const auto& e : structure.entries())
        for (int i = 0; i < structure.n(); ++i)
            rep.calibration_residuals[{i, e.s[i]}] += e.mass * (e.r[i] - e.s[i]);
    rep.pass = within(rep.calibration_residuals, tolerance);
    return rep;
}

VerificationReport verify_marginal(const InformationStructure& structure, const Environment& env,
                                   const Rational& tolerance) {
    check_tolerance(tolerance);
    env.validate();
    if (structure.n() != env.n())
        throw ValidationError("structure and environment bidder counts differ");
    VerificationReport rep;
    rep.tolerance = tolerance;
    for (const auto& [r, mass] : structure.r_marginal()) rep.marginal_residuals[r] += mass;
    for (const auto& [r, g] : env.support) rep.marginal_residuals[r] -= g;
    rep.pass = true;
    for (const auto& [r, v] : rep.marginal_residuals)
        if (v.abs() > tolerance) { rep.pass = false; break; }
    return rep;
}

VerificationReport check_independence(const InformationStructure& structure, const Rational& tolerance) {
    check_tolerance(tolerance);
    VerificationReport rep;
    rep.tolerance = tolerance;
    const int n = structure.n();

    // E[r_i | s_i]: mass and r_i-weighted mass per (i, signal value)
    std::map<std::pair<int, Rational>, std::pair<Rational, Rational>> per_signal;
    // E[r_i | s]: per full signal profile
    std::map<SignalProfile, std::pair<Rational, std::vector<Rational>>> per_cell;
    for (const auto& e : structure.entries()) {
        auto& cell = per_cell[e.s];
        if (cell.second.empty()) cell.second.assign(n, Rational(0));
        cell.first += e.mass;
        for (int i = 0; i < n; ++i) {
            cell.second[i] += e.mass * e.r[i];
            auto& acc = per_signal[{i, e.s[i]}];
            acc.first += e.mass;
            acc.second += e.mass * e.r[i];
        }
    }
    for (const auto& [s, cell] : per_cell) {
        for (int i = 0; i < n; ++i) {
            const auto& acc = per_signal.at({i, s[i]});
            Rational cond_cell = cell.second[i] / cell.first;
            Rational cond_sig = acc.second / acc.first;
            rep.independence_residuals[{i, s}] = cond_cell - cond_sig;
        }
    }
    rep.pass = true;
    for (const auto& [k, v] : rep.independence_residuals)
        if (v.abs() > tolerance) { rep.pass = false; break; }
    return rep;
}

BundlingLabel classify_bundling(const InformationStructure& structure, const Environment& env) {
    env.validate();
    if (structure.n() != env.n())
        throw ValidationError("structure and environment bidder counts differ");
    BundlingLabel label;
    const int n = structure.n();
    for (int i = 0; i < n; ++i) {
        auto sm = structure.signal_marginal(i);
        bool point_at_mean = sm.size() == 1 && sm.front().first == env.mean(i);
        bool identity = true;
        for (const auto& e : structure.entries())
            if (e.s[i] != e.r[i]) { identity = false; break; }
        if (point_at_mean)
            label.per_bidder.push_back(BidderBundling::FullBundle);
        else if (identity)
            label.per_bidder.push_back(BidderBundling::Unbundle);
        else
            label.per_bidder.push_back(BidderBundling::Partial);
    }
    bool all_full = true, all_un = true, all_partial = true;
    for (auto b : label.per_bidder) {
        all_full &= b == BidderBundling::FullBundle;
        all_un &= b == BidderBundling::Unbundle;
        all_partial &= b == BidderBundling::Partial;
    }
    label.overall = all_full ? Disclosure::NoDisclosure
                  : all_un  ? Disclosure::FullDisclosure
                            : Disclosure::Moderate;
    label.interior = all_partial;
    return label;
}

InformationStructure random_independent_calibrated(const Environment& env, std::uint64_t seed,
                                                   int signals_per_bidder) {
    env.validate();
    if (signals_per_bidder < 1) throw ParameterError("signals_per_bidder must be >= 1");
    std::mt19937_64 rng(seed);
    GarblingWeights weights(env.n());
    for (int i = 0; i < env.n(); ++i) {
        for (const auto& [value, prob] : env.marginal(i)) {
            std::vector<Rational> row;
            for (int b = 0; b < signals_per_bidder; ++b)
                row.push_back(Rational(static_cast<long>(rng() % 16 + 1)));
            weights[i][value] = std::move(row);
        }
    }
    return product_garbling_structure(env, weights);
}

}  // namespace ctrdesign
