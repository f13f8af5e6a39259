#include "ctrdesign/auction.hpp"

#include <algorithm>
#include <map>

#include "ctrdesign/errors.hpp"
#include "ctrdesign/verify.hpp"

namespace ctrdesign {

TiePolicy TiePolicy::priority(std::vector<int> order) {
    TiePolicy t;
    t.kind = Kind::Priority;
    t.order = std::move(order);
    return t;
}

void TiePolicy::validate(int n) const {
    if (kind == Kind::Uniform) return;
    if (static_cast<int>(order.size()) != n)
        throw ValidationError("tie priority order length differs from bidder count");
    std::vector<bool> seen(n, false);
    for (int i : order) {
        if (i < 0 || i >= n || seen[i])
            throw ValidationError("tie priority order is not a permutation");
        seen[i] = true;
    }
}

AuctionOutcome outcome(const std::vector<Rational>& values, const SignalProfile& s,
                       const std::vector<Rational>& posterior, const TiePolicy& tie) {
    const int n = static_cast<int>(values.size());
    if (static_cast<int>(s.size()) != n || static_cast<int>(posterior.size()) != n)
        throw ValidationError("values, signals and posterior lengths differ");
    tie.validate(n);

    std::vector<Rational> prod(n);
    for (int i = 0; i < n; ++i) prod[i] = values[i] * s[i];
    Rational best = prod[0];
    for (int i = 1; i < n; ++i) best = max(best, prod[i]);

    std::vector<int> winners;
    for (int i = 0; i < n; ++i)
        if (prod[i] == best) winners.push_back(i);

    AuctionOutcome out;
    if (tie.kind == TiePolicy::Kind::Uniform) {
        Rational share(1, static_cast<long>(winners.size()));
        for (int w : winners) out.winner_distribution[w] = share;
    } else {
        int w = *std::min_element(winners.begin(), winners.end(), [&](int a, int b) {
            auto pos = [&](int x) {
                return std::find(tie.order.begin(), tie.order.end(), x) - tie.order.begin();
            };
            return pos(a) < pos(b);
        });
        out.winner_distribution[w] = Rational(1);
    }

    for (const auto& [w, pwin] : out.winner_distribution) {
        Rational price;  // 0 when s_w = 0: every product ties at 0
        if (!s[w].is_zero()) {
            Rational second;
            for (int j = 0; j < n; ++j)
                if (j != w) second = max(second, prod[j]);
            price = second / s[w];
        }
        out.price_per_click[w] = price;
        out.conditional_revenue += pwin * posterior[w] * price;
    }
    return out;
}

std::vector<CellReport> cell_reports(const Environment& env, const InformationStructure& structure,
                                     const TiePolicy& tie) {
    env.validate();
    if (structure.n() != env.n())
        throw ValidationError("structure and environment bidder counts differ");
    const int n = env.n();

    std::map<SignalProfile, std::vector<const StructureEntry*>> cells;
    for (const auto& e : structure.entries()) cells[e.s].push_back(&e);

    std::vector<CellReport> reports;
    reports.reserve(cells.size());
    for (const auto& [s, list] : cells) {
        CellReport rep;
        rep.s = s;
        rep.posterior.assign(n, Rational(0));
        for (const auto* e : list) {
            rep.mass += e->mass;
            for (int i = 0; i < n; ++i) rep.posterior[i] += e->mass * e->r[i];
            Rational m;
            for (int i = 0; i < n; ++i) m = max(m, env.values[i] * e->r[i]);
            rep.conditional_welfare += e->mass * m;
        }
        for (int i = 0; i < n; ++i) rep.posterior[i] /= rep.mass;
        rep.conditional_welfare /= rep.mass;
        rep.out = outcome(env.values, s, rep.posterior, tie);
        reports.push_back(std::move(rep));
    }
    return reports;
}

Rational expected_revenue(const Environment& env, const InformationStructure& structure,
                          const TiePolicy& tie, const Rational& marginal_tolerance) {
    auto marginal = verify_marginal(structure, env, marginal_tolerance);
    if (!marginal.pass)
        throw ValidationError("structure CTR marginal does not match the environment (residual " +
                              marginal.max_abs_residual().str() + ")");
    Rational total;
    for (const auto& cell : cell_reports(env, structure, tie))
        total += cell.mass * cell.out.conditional_revenue;
    return total;
}

Rational welfare(const Environment& env) {
    env.validate();
    Rational total;
    for (const auto& [r, g] : env.support) {
        Rational m;
        for (int i = 0; i < env.n(); ++i) m = max(m, env.values[i] * r[i]);
        total += g * m;
    }
    return total;
}

Rational baseline_revenue(const Environment& env, const BaselinePolicy& policy, const TiePolicy& tie) {
    InformationStructure st;
    switch (policy.kind) {
        case BaselinePolicy::Kind::Full: st = full_disclosure(env); break;
        case BaselinePolicy::Kind::None: st = no_disclosure(env); break;
        case BaselinePolicy::Kind::PerBidder:
            st = per_bidder_disclosure(env, policy.full_per_bidder);
            break;
    }
    return expected_revenue(env, st, tie);
}

}  // namespace ctrdesign
