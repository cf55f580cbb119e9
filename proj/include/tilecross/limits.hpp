#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <chrono>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tilecross/crossing.hpp"
#include "tilecross/multigraph.hpp"
#include "tilecross/reduce.hpp"
#include "tilecross/tile.hpp"

namespace tilecross {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact ceiling; the constants feed integer thresholds, so no value may
/// ever pass through floating point.
inline Integer rational_ceil(const Rational& q) {
    Integer num = boost::multiprecision::numerator(q);
    Integer den = boost::multiprecision::denominator(q);
    Integer d = num / den;
    if (num > 0 && num % den != 0) ++d;
    return d;
}

namespace limit_detail {

inline Rational choose2(const Rational& x) { return x * (x - 1) / 2; }

}  // namespace limit_detail

/// Tail control for the upper estimate: past n2 copies, averaging tile
/// drawings costs at most a0 extra crossings per unit of eps.
struct UpperConstants {
    Rational n2;
    Rational a0;
};

inline UpperConstants upper_constants(const Tile& t, const Rational& eps) {
    check_tile(t);
    if (eps <= 0) throw std::invalid_argument("upper_constants: eps must be positive");
    const Rational k = width(t);
    const Rational m = big_m(t);
    UpperConstants u;
    u.n2 = 2 * ((8 * k + 1) * m + limit_detail::choose2(2 * k)) / eps;
    u.a0 = 2 * m / eps;
    return u;
}

/// Additive cost of rerouting a drawing across a cyclic cut whose strands
/// carry s crossings: (8k+1) M(T) s + C(2k, 2).
inline Rational rerouting_overhead(const Tile& t, long long s) {
    check_tile(t);
    if (s < 1) throw std::invalid_argument("rerouting_overhead: s must be at least 1");
    const Rational k = width(t);
    return (8 * k + 1) * Rational(big_m(t)) * s + limit_detail::choose2(2 * k);
}

/// The chain of constants certifying a lower estimate at accuracy eps with
/// slack alpha, evaluated exactly in the displayed order.
struct LowerConstants {
    Rational beta;
    Rational c;
    Rational q0;
    Integer n0;
    Rational q;
    Integer n1;
};

inline LowerConstants lower_constants(const Tile& t, const Rational& eps,
                                      const Rational& alpha) {
    check_tile(t);
    if (eps <= 0 || eps > 1)
        throw std::invalid_argument("lower_constants: eps must lie in (0, 1]");
    if (alpha <= 0)
        throw std::invalid_argument("lower_constants: alpha must be positive");
    const Rational k = width(t);
    const Rational e = t.graph.edge_count();
    LowerConstants l;
    l.beta = eps / (8 * alpha);
    l.c = (1 / l.beta) * (limit_detail::choose2(k) + alpha);
    l.q0 = 2 * k * (2 * e + 2 * l.c + 4 * k) * (1 + l.beta) + 4 * k * k + 2 * alpha;
    l.n0 = rational_ceil(2 * l.q0 / eps);
    l.q = 8 * l.c * (l.n0 + 1) * (1 + l.beta) +
          4 * k * k * (l.n0 + 2) * (l.n0 + 2) + 2 * limit_detail::choose2(k);
    l.n1 = rational_ceil(2 * l.q / eps);
    return l;
}

/// Every constant produced on the way to the convergence threshold N: past
/// n >= N copies, c_n/n is within eps of the limit c(T). The d-row drives
/// the lower estimate, the u-row the upper; their alpha/beta values are
/// cross-paired.
struct ConstantLedger {
    Rational epsilon;
    Rational epsilon1;
    int k = 0;
    long long edges = 0;
    Integer M;
    Rational n2, a0;
    Rational alpha_d, alpha_u;
    Rational beta_d, beta_u;
    Rational c_d, c_u;
    Rational q0_d, q0_u;
    Integer n0_d, n0_u;
    Rational q_u;
    Integer n1_u;
    Integer N;
};

/// eps1 starts at eps/2 and halves until the lower-row threshold n0_d
/// clears n2; the loop is the canonical deterministic choice among the
/// admissible eps1.
inline ConstantLedger convergence_threshold(const Tile& t, const Rational& eps) {
    check_tile(t);
    if (eps <= 0 || eps > 1)
        throw std::invalid_argument("convergence_threshold: eps must lie in (0, 1]");

    ConstantLedger l;
    l.epsilon = eps;
    l.k = width(t);
    l.edges = t.graph.edge_count();
    l.M = big_m(t);

    // Degenerate width-0 tiles: with no edges everything is zero and N = 0;
    // with edges the closure just repeats the graph, so c(T) = c_1(T) and
    // the threshold formulas (which assume strands) do not apply.
    if (l.k == 0 && l.M > 0)
        throw std::invalid_argument(
            "convergence_threshold: width-0 tile repeats its graph, c(T) equals "
            "c_1(T); no threshold constants are defined");
    if (!(l.k == 0 && l.edges == 0)) {
        if (components(t.graph).count > 1)
            throw std::invalid_argument(
                "convergence_threshold: tile is disconnected; apply "
                "limit_decomposition and certify the components instead");
        SearchStatus linked = is_linked(t);
        if (linked == SearchStatus::Infeasible)
            throw std::invalid_argument(
                "convergence_threshold: tile is not linked; apply weakly_link and "
                "raise to the linking power first");
        if (linked == SearchStatus::Unknown)
            throw std::runtime_error(
                "convergence_threshold: linkedness check ran out of budget");
    }

    const Rational k = l.k;
    const Rational e = l.edges;
    const Rational m = Rational(l.M);
    const Rational eps_half = eps / 2;
    l.n2 = 2 * ((8 * k + 1) * m + limit_detail::choose2(2 * k)) / eps_half;
    l.a0 = 2 * m / eps_half;

    Rational eps1 = eps_half;
    for (;;) {
        l.alpha_d = eps1 / 2;
        l.alpha_u = m + eps1 / 2;
        l.beta_d = eps1 / (8 * l.alpha_u);
        l.beta_u = eps1 / (8 * l.alpha_d);
        l.c_d = (1 / l.beta_u) * (limit_detail::choose2(k) + l.alpha_d);
        l.c_u = (1 / l.beta_d) * (limit_detail::choose2(k) + l.alpha_u);
        l.q0_d = 2 * k * (2 * e + 2 * l.c_d + 4 * k) * (1 + l.beta_d) +
                 4 * k * k + 2 * l.alpha_d;
        l.q0_u = 2 * k * (2 * e + 2 * l.c_u + 4 * k) * (1 + l.beta_u) +
                 4 * k * k + 2 * l.alpha_u;
        l.n0_d = rational_ceil(2 * l.q0_d / eps1);
        l.n0_u = rational_ceil(2 * l.q0_u / eps1);
        if (Rational(l.n0_d) >= l.n2) break;
        eps1 /= 2;
    }
    l.epsilon1 = eps1;
    l.q_u = 8 * l.c_u * (l.n0_u + 1) * (1 + l.beta_u) +
            4 * k * k * (l.n0_u + 2) * (l.n0_u + 2) + 2 * limit_detail::choose2(k);
    l.n1_u = rational_ceil(2 * l.q_u / eps1);
    l.N = rational_ceil(l.a0 * Rational(l.n1_u));
    return l;
}

struct EstimateOptions {
    double budget_seconds = 120.0;
    SolveOptions solve;
    std::string tile_id;
};

/// One row of the bound table; absent values mean the solver gave up within
/// its budget, never a guess. Witnesses are the crossing pair lists of the
/// certified drawings.
struct BoundEntry {
    int n = 0;
    std::optional<int> cyc_crossings;   // c_n
    std::optional<int> tile_crossings;  // t_n
    std::vector<std::pair<EdgeId, EdgeId>> cyc_witness;
    std::vector<std::pair<EdgeId, EdgeId>> tile_witness;
};

/// A would-be lower bound c(T) >= c_n/n - eps. It is only valid once
/// n >= N(eps); `binding` says whether that held, and `required_n` records
/// the threshold so the claim stays checkable.
struct LowerCandidate {
    int n = 0;
    Rational eps;
    Rational value;
    Integer required_n;
    bool binding = false;
};

struct BoundReport {
    std::string tile_id;
    std::vector<BoundEntry> table;
    // min t_n/n over the solved rows: a true upper bound on c(T), since
    // t is subadditive and its Cesaro limit equals inf t_n/n.
    std::optional<Rational> certified_upper;
    // (sum of per-component uppers)/m when the tile decomposes.
    std::optional<Rational> decomposition_upper;
    std::vector<LowerCandidate> lower_candidates;
    std::vector<std::string> notes;

    std::optional<Rational> best_upper() const {
        if (!certified_upper) return decomposition_upper;
        if (!decomposition_upper) return certified_upper;
        return std::min(*certified_upper, *decomposition_upper);
    }
};

namespace limit_detail {

inline std::optional<Rational> min_tile_upper(
    const Tile& t, int n_max, const SolveOptions& solve,
    const std::chrono::steady_clock::time_point& deadline,
    std::vector<std::string>& notes, const std::string& who) {
    std::optional<Rational> best;
    for (int n = 1; n <= n_max; ++n) {
        if (std::chrono::steady_clock::now() >= deadline) {
            notes.push_back(who + ": time budget exhausted before n=" +
                            std::to_string(n));
            break;
        }
        CrossingResult r = t_n(t, n, solve);
        if (!r.solved()) {
            notes.push_back(who + ": tile solve at n=" + std::to_string(n) +
                            " exceeded the solver budget");
            continue;
        }
        Rational value = Rational(r.crossings) / n;
        if (!best || value < *best) best = value;
    }
    return best;
}

}  // namespace limit_detail

/// Solves c_n and t_n for n <= n_max within the time budget, certifies the
/// upper bound min t_n/n, aggregates over the limit decomposition when the
/// tile splits, and lists lower-bound candidates with their validity
/// thresholds (honestly non-binding whenever N(eps) exceeds every solved n).
inline BoundReport estimate(const Tile& t, int n_max, EstimateOptions opts = {}) {
    check_tile(t);
    if (n_max < 1) throw std::invalid_argument("estimate: n_max must be at least 1");

    auto deadline = std::chrono::steady_clock::now() +
                    std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                        std::chrono::duration<double>(opts.budget_seconds));
    BoundReport report;
    report.tile_id = opts.tile_id;

    for (int n = 1; n <= n_max; ++n) {
        if (std::chrono::steady_clock::now() >= deadline) {
            report.notes.push_back("time budget exhausted before n=" +
                                   std::to_string(n));
            break;
        }
        BoundEntry entry;
        entry.n = n;
        CrossingResult c = c_n(t, n, opts.solve);
        if (c.solved()) {
            entry.cyc_crossings = c.crossings;
            entry.cyc_witness = c.witness.crossings;
        } else {
            report.notes.push_back("closure solve at n=" + std::to_string(n) +
                                   " exceeded the solver budget");
        }
        if (std::chrono::steady_clock::now() < deadline) {
            CrossingResult f = t_n(t, n, opts.solve);
            if (f.solved()) {
                entry.tile_crossings = f.crossings;
                entry.tile_witness = f.witness.crossings;
            } else {
                report.notes.push_back("tile solve at n=" + std::to_string(n) +
                                       " exceeded the solver budget");
            }
        } else {
            report.notes.push_back("time budget exhausted before the tile solve at n=" +
                                   std::to_string(n));
        }
        report.table.push_back(std::move(entry));
    }

    for (const BoundEntry& entry : report.table)
        if (entry.tile_crossings) {
            Rational value = Rational(*entry.tile_crossings) / entry.n;
            if (!report.certified_upper || value < *report.certified_upper)
                report.certified_upper = value;
        }

    // Aggregate over the decomposition: c(T) = (c(T_1)+...+c(T_r))/m, and
    // each component is bounded by its own min t_n/n.
    try {
        Decomposition d = limit_decomposition(t);
        bool trivial = d.m == 1 && d.subtiles.size() == 1 && d.link.steps.empty();
        if (!trivial) {
            report.notes.push_back(
                "decomposition: m=" + std::to_string(d.m) + ", " +
                std::to_string(d.subtiles.size()) + " component(s)");
            Rational sum = 0;
            bool complete = true;
            for (std::size_t i = 0; i < d.subtiles.size(); ++i) {
                std::optional<Rational> best = limit_detail::min_tile_upper(
                    d.subtiles[i], n_max, opts.solve, deadline, report.notes,
                    "component " + std::to_string(i));
                if (!best) {
                    complete = false;
                    report.notes.push_back("component " + std::to_string(i) +
                                           ": no certified upper bound");
                    break;
                }
                sum += *best;
            }
            if (complete) report.decomposition_upper = sum / d.m;
        }
    } catch (const std::exception& ex) {
        report.notes.push_back(std::string("decomposition unavailable: ") + ex.what());
    }

    // Lower candidates: pick the tightest grid eps whose threshold the row
    // clears, else report the eps=1 threshold as the unmet requirement.
    bool any_c = false;
    for (const BoundEntry& entry : report.table)
        if (entry.cyc_crossings) any_c = true;
    if (any_c) {
        try {
            std::vector<std::pair<Rational, Integer>> grid;
            Rational eps = 1;
            for (int i = 0; i <= 10; ++i, eps /= 2)
                grid.emplace_back(eps, convergence_threshold(t, eps).N);
            for (const BoundEntry& entry : report.table) {
                if (!entry.cyc_crossings) continue;
                LowerCandidate cand;
                cand.n = entry.n;
                cand.eps = grid.front().first;
                cand.required_n = grid.front().second;
                for (const auto& [e, n_req] : grid)
                    if (n_req <= entry.n) {
                        cand.eps = e;
                        cand.required_n = n_req;
                        cand.binding = true;
                    }
                cand.value = Rational(*entry.cyc_crossings) / entry.n - cand.eps;
                report.lower_candidates.push_back(std::move(cand));
            }
        } catch (const std::exception& ex) {
            report.notes.push_back(std::string("lower candidates unavailable: ") +
                                   ex.what());
        }
    }
    return report;
}

}  // namespace tilecross
