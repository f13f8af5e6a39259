#include "ctrdesign/types.hpp"

#include <algorithm>
#include <map>

#include "ctrdesign/errors.hpp"

namespace ctrdesign {

namespace {

void check_unit_interval(const std::vector<Rational>& xs, const char* what) {
    for (const auto& x : xs)
        if (x < Rational(0) || x > Rational(1))
            throw ValidationError(std::string(what) + " outside [0,1]");
}

}  // namespace

void Environment::validate() const {
    if (values.empty()) throw ValidationError("environment has no bidders");
    for (const auto& v : values)
        if (v < Rational(0)) throw ValidationError("negative per-click value");
    if (support.empty()) throw ValidationError("environment has empty support");
    Rational total;
    for (const auto& [profile, prob] : support) {
        if (static_cast<int>(profile.size()) != n())
            throw ValidationError("CTR profile length differs from bidder count");
        check_unit_interval(profile.rates, "CTR");
        if (prob.sgn() <= 0) throw ValidationError("support probability must be positive");
        total += prob;
    }
    if (total != Rational(1)) throw ValidationError("support probabilities do not sum to 1");
    std::map<CtrProfile, int> seen;
    for (const auto& [profile, prob] : support)
        if (++seen[profile] > 1) throw ValidationError("duplicate CTR profile in support");
}

Rational Environment::mean(int i) const {
    Rational m;
    for (const auto& [profile, prob] : support) m += prob * profile[i];
    return m;
}

std::vector<std::pair<Rational, Rational>> Environment::marginal(int i) const {
    std::map<Rational, Rational> acc;
    for (const auto& [profile, prob] : support) acc[profile[i]] += prob;
    return {acc.begin(), acc.end()};
}

InformationStructure::InformationStructure(int n, std::vector<StructureEntry> entries) : n_(n) {
    if (n <= 0) throw ValidationError("structure needs at least one bidder");
    std::map<std::pair<CtrProfile, SignalProfile>, Rational> acc;
    for (auto& e : entries) {
        if (static_cast<int>(e.r.size()) != n || static_cast<int>(e.s.size()) != n)
            throw ValidationError("structure entry length differs from bidder count");
        check_unit_interval(e.r.rates, "CTR");
        check_unit_interval(e.s.signals, "signal");
        if (e.mass.sgn() < 0) throw ValidationError("negative mass in structure");
        if (e.mass.is_zero()) continue;
        acc[{std::move(e.r), std::move(e.s)}] += e.mass;
    }
    entries_.reserve(acc.size());
    for (auto& [key, mass] : acc)
        entries_.push_back({key.first, key.second, mass});
}

Rational InformationStructure::total_mass() const {
    Rational t;
    for (const auto& e : entries_) t += e.mass;
    return t;
}

void InformationStructure::validate() const {
    if (entries_.empty()) throw ValidationError("structure has no entries");
    if (total_mass() != Rational(1)) throw ValidationError("structure masses do not sum to 1");
}

std::map<CtrProfile, Rational> InformationStructure::r_marginal() const {
    std::map<CtrProfile, Rational> out;
    for (const auto& e : entries_) out[e.r] += e.mass;
    return out;
}

std::vector<std::pair<Rational, Rational>> InformationStructure::signal_marginal(int i) const {
    std::map<Rational, Rational> acc;
    for (const auto& e : entries_) acc[e.s[i]] += e.mass;
    return {acc.begin(), acc.end()};
}

InformationStructure InformationStructure::normalized() const {
    Rational t = total_mass();
    if (t.is_zero()) throw ValidationError("cannot normalize an empty structure");
    std::vector<StructureEntry> scaled = entries_;
    for (auto& e : scaled) e.mass /= t;
    return InformationStructure(n_, std::move(scaled));
}

InformationStructure full_disclosure(const Environment& env) {
    env.validate();
    std::vector<StructureEntry> es;
    for (const auto& [r, g] : env.support)
        es.push_back({r, SignalProfile(r.rates), g});
    return InformationStructure(env.n(), std::move(es));
}

InformationStructure no_disclosure(const Environment& env) {
    std::vector<bool> none(env.values.size(), false);
    return per_bidder_disclosure(env, none);
}

InformationStructure per_bidder_disclosure(const Environment& env, const std::vector<bool>& full) {
    env.validate();
    if (static_cast<int>(full.size()) != env.n())
        throw ValidationError("per-bidder policy length differs from bidder count");
    std::vector<Rational> means;
    for (int i = 0; i < env.n(); ++i) means.push_back(env.mean(i));
    std::vector<StructureEntry> es;
    for (const auto& [r, g] : env.support) {
        std::vector<Rational> s(env.n());
        for (int i = 0; i < env.n(); ++i) s[i] = full[i] ? r[i] : means[i];
        es.push_back({r, SignalProfile(std::move(s)), g});
    }
    return InformationStructure(env.n(), std::move(es));
}

InformationStructure product_garbling_structure(const Environment& env, const GarblingWeights& weights) {
    env.validate();
    const int n = env.n();
    if (static_cast<int>(weights.size()) != n)
        throw ValidationError("garbling list length differs from bidder count");

    // Normalize rows and compute each bucket's conditional mean signal.
    std::vector<std::map<Rational, std::vector<Rational>>> route(n);  // value -> bucket probs
    std::vector<std::vector<Rational>> bucket_signal(n);
    for (int i = 0; i < n; ++i) {
        auto marg = env.marginal(i);
        std::size_t buckets = 0;
        for (const auto& [value, prob] : marg) {
            auto it = weights[i].find(value);
            if (it == weights[i].end())
                throw ValidationError("garbling misses a CTR value in the marginal");
            if (it->second.empty()) throw ValidationError("garbling row has no buckets");
            if (buckets == 0) buckets = it->second.size();
            if (it->second.size() != buckets)
                throw ValidationError("garbling rows disagree on bucket count");
            Rational rowsum;
            for (const auto& w : it->second) {
                if (w.sgn() < 0) throw ValidationError("negative garbling weight");
                rowsum += w;
            }
            if (rowsum.is_zero()) throw ValidationError("garbling row sums to zero");
            std::vector<Rational> probs;
            for (const auto& w : it->second) probs.push_back(w / rowsum);
            route[i][value] = std::move(probs);
        }
        bucket_signal[i].assign(buckets, Rational(0));
        std::vector<Rational> bucket_mass(buckets, Rational(0));
        for (const auto& [value, prob] : marg) {
            const auto& probs = route[i][value];
            for (std::size_t b = 0; b < buckets; ++b) {
                bucket_mass[b] += prob * probs[b];
                bucket_signal[i][b] += prob * probs[b] * value;
            }
        }
        for (std::size_t b = 0; b < buckets; ++b)
            if (!bucket_mass[b].is_zero()) bucket_signal[i][b] /= bucket_mass[b];
    }

    std::vector<StructureEntry> es;
    std::vector<std::size_t> idx(n, 0);
    for (const auto& [r, g] : env.support) {
        // enumerate bucket combinations in mixed radix
        std::fill(idx.begin(), idx.end(), 0);
        while (true) {
            Rational mass = g;
            std::vector<Rational> s(n);
            for (int i = 0; i < n && !mass.is_zero(); ++i) {
                mass *= route[i].at(r[i])[idx[i]];
                s[i] = bucket_signal[i][idx[i]];
            }
            if (!mass.is_zero())
                es.push_back({r, SignalProfile(std::move(s)), mass});
            int i = n - 1;
            while (i >= 0 && ++idx[i] == bucket_signal[i].size()) idx[i--] = 0;
            if (i < 0) break;
        }
    }
    return InformationStructure(n, std::move(es));
}

}  // namespace ctrdesign
