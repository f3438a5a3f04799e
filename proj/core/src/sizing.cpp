#include "swarmgrid/sizing.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

#include "swarmgrid/errors.hpp"

namespace swarmgrid::sizing {
namespace {

// Hourly energies closer than this are a tie, resolved toward the smaller k.
constexpr double kTieBreakWh = 1e-9;

void check_prices(const CostTable& prices) {
    if (prices.pv.cents() <= 0 || prices.w500.cents() <= 0 || prices.w1000.cents() <= 0 ||
        prices.cell.cents() <= 0 || prices.uav.cents() <= 0) {
        throw ConfigError("all unit prices must be positive");
    }
}

double area_m2(double d_max_m) {
    return std::numbers::pi * d_max_m * d_max_m;
}

std::vector<double> combination_output_w(const GenerationBasis& basis, int n_pv, int n_w500,
                                         int n_w1000) {
    std::vector<double> gen(basis.pv_unit_w.size());
    for (std::size_t h = 0; h < gen.size(); ++h) {
        gen[h] = n_pv * basis.pv_unit_w[h] + n_w500 * basis.w500_unit_w[h] +
                 n_w1000 * basis.w1000_unit_w[h];
    }
    return gen;
}

SolutionRecord make_record(const SystemConfig& config, double eeac_val, const LoadProfile& load,
                           const GenerationBasis& basis, Money f_max, const SizingInputs& in) {
    SolutionRecord rec;
    rec.config = config;
    rec.objective_m2_per_eur = area_m2(config.d_max_m) / config.f.eur();
    rec.eeac_m2_per_wh = eeac_val;
    const auto gen = combination_output_w(basis, config.n_pv, config.n_w500, config.n_w1000);
    storage::GroundBattery bank = in.cell;
    bank.cell_count = config.n_cell;
    rec.min_reserve_wh = storage::simulate_horizon(load.energy_wh, gen, bank).min_state_wh;
    if (f_max - config.f < in.prices.cell) {
        rec.binding_constraint = "budget";
    } else if (config.n_cell > 0) {
        rec.binding_constraint = "storage";
    } else {
        rec.binding_constraint = "generation";
    }
    return rec;
}

} // namespace

double LoadProfile::annual_energy_wh() const {
    return std::accumulate(energy_wh.begin(), energy_wh.end(), 0.0);
}

SystemConfig cost_ledger(int n_pv, int n_w500, int n_w1000, int n_cell, int n_uav,
                         const CostTable& prices) {
    if (n_pv < 0 || n_w500 < 0 || n_w1000 < 0 || n_cell < 0 || n_uav < 0) {
        throw std::domain_error("ledger counts must be non-negative");
    }
    SystemConfig config;
    config.n_pv = n_pv;
    config.n_w500 = n_w500;
    config.n_w1000 = n_w1000;
    config.n_cell = n_cell;
    config.n_uav = n_uav;
    config.f_pv = prices.pv * n_pv;
    config.f_wt = prices.w500 * n_w500 + prices.w1000 * n_w1000;
    config.f_uav = prices.uav * n_uav;
    config.f_e = prices.cell * n_cell;
    config.f = config.f_pv + config.f_wt + config.f_uav + config.f_e;
    return config;
}

LoadProfile mel_profile(double d_max_m, const ingest::TrafficProfile& traffic,
                        const ingest::HourlyTrace& trace, const channel::Environment& env,
                        const channel::RadioParams& radio, const uav_power::AirframeParams& af,
                        const uav_power::WindContext& wind, const CostTable& prices) {
    if (!(d_max_m > 0.0)) throw std::domain_error("coverage radius must be positive");
    if (trace.hours() == 0) throw std::domain_error("weather trace is empty");
    check_prices(prices);

    std::array<double, kMaxSwarm + 1> edge_bps{};
    for (int k = kMinSwarm; k <= kMaxSwarm; ++k) {
        edge_bps[static_cast<std::size_t>(k)] = channel::edge_rate_bps(k, d_max_m, env, radio);
    }
    // Hourly energy depends only on (k, wind); traces repeat wind values a
    // lot, so memoize per k. NaN marks an unflyable sortie.
    std::array<std::unordered_map<double, double>, kMaxSwarm + 1> energy_memo;

    LoadProfile out;
    out.k_h.reserve(trace.hours());
    out.energy_wh.reserve(trace.hours());
    const double coverage_m2 = area_m2(d_max_m);
    int max_k = 0;
    for (std::size_t h = 0; h < trace.hours(); ++h) {
        const double demand_bps = traffic.lambda_mbps_m2[h % 24] * 1e6 * coverage_m2;
        const double wind_mps = trace.wind_mps[h];
        int best_k = -1;
        double best_e = std::numeric_limits<double>::infinity();
        for (int k = kMinSwarm; k <= kMaxSwarm; ++k) {
            if (demand_bps / k > edge_bps[static_cast<std::size_t>(k)]) continue;
            auto& memo = energy_memo[static_cast<std::size_t>(k)];
            double e;
            if (auto it = memo.find(wind_mps); it != memo.end()) {
                e = it->second;
            } else {
                try {
                    e = uav_power::swarm_hourly_load_wh(k, d_max_m, wind_mps, env, radio, af, wind);
                } catch (const InfeasibleFlightError&) {
                    e = std::numeric_limits<double>::quiet_NaN();
                }
                memo.emplace(wind_mps, e);
            }
            if (std::isnan(e)) continue;
            if (e < best_e - kTieBreakWh) {
                best_e = e;
                best_k = k;
            }
        }
        if (best_k < 0) {
            throw CoverageInfeasibleError("no feasible swarm size at hour " + std::to_string(h) +
                                          " for radius " + std::to_string(d_max_m) + " m");
        }
        out.k_h.push_back(best_k);
        out.energy_wh.push_back(best_e);
        max_k = std::max(max_k, best_k);
    }
    out.n_uav = max_k + 1;
    out.f_uav = prices.uav * out.n_uav;
    return out;
}

double eeac(double d_max_m, const LoadProfile& load) {
    if (!(d_max_m > 0.0)) throw std::domain_error("coverage radius must be positive");
    const double annual = load.annual_energy_wh();
    if (!(annual > 0.0)) throw std::domain_error("annual energy must be positive");
    return area_m2(d_max_m) / annual;
}

std::vector<std::size_t> gss_candidates(std::span<const double> eeac_series) {
    std::vector<std::size_t> monotone;
    double running_max = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < eeac_series.size(); ++i) {
        if (eeac_series[i] > running_max) {
            running_max = eeac_series[i];
            monotone.push_back(i);
        }
    }
    if (monotone.size() < 3) return monotone;
    std::vector<std::size_t> kept;
    for (std::size_t j = 1; j + 1 < monotone.size(); ++j) {
        const auto x0 = static_cast<double>(monotone[j - 1]);
        const auto x1 = static_cast<double>(monotone[j]);
        const auto x2 = static_cast<double>(monotone[j + 1]);
        const double y0 = eeac_series[monotone[j - 1]];
        const double y1 = eeac_series[monotone[j]];
        const double y2 = eeac_series[monotone[j + 1]];
        const double second = 2.0 * ((y2 - y1) / (x2 - x1) - (y1 - y0) / (x1 - x0)) / (x2 - x0);
        if (second > 0.0) kept.push_back(monotone[j]);
    }
    return kept;
}

GenerationBasis generation_basis(const ingest::HourlyTrace& trace, const harvest::PvParams& pv,
                                 const harvest::TurbineCurve& w500,
                                 const harvest::TurbineCurve& w1000) {
    GenerationBasis basis;
    basis.pv_unit_w.reserve(trace.hours());
    basis.w500_unit_w.reserve(trace.hours());
    basis.w1000_unit_w.reserve(trace.hours());
    for (std::size_t h = 0; h < trace.hours(); ++h) {
        basis.pv_unit_w.push_back(harvest::pv_power_w(trace.irradiance_wm2[h], trace.ambient_c[h], 1, pv));
        basis.w500_unit_w.push_back(harvest::turbine_power_w(trace.wind_mps[h], w500));
        basis.w1000_unit_w.push_back(harvest::turbine_power_w(trace.wind_mps[h], w1000));
    }
    return basis;
}

SystemConfig ccee(const LoadProfile& load, const GenerationBasis& basis, const CostTable& prices,
                  Money f_max, const storage::GroundBattery& cell_prototype, double d_max_m) {
    check_prices(prices);
    const std::size_t hours = load.energy_wh.size();
    if (hours == 0 || basis.pv_unit_w.size() != hours || basis.w500_unit_w.size() != hours ||
        basis.w1000_unit_w.size() != hours) {
        throw ConfigError("generation basis and load profile cover different horizons");
    }
    const Money f_uav = load.f_uav;
    if (f_uav > f_max) {
        throw BudgetInfeasibleError("fleet cost " + std::to_string(f_uav.eur()) +
                                    " EUR exceeds the budget");
    }

    Money budget = f_max;
    std::optional<SystemConfig> best;

    // Lazy ascending-cost walk over (n_pv, n_w500, n_w1000). Each triple is
    // generated exactly once: bump pv freely, w500 only at pv = 0, w1000
    // only at pv = w500 = 0.
    using Node = std::tuple<std::int64_t, int, int, int>; // cents, w1000, w500, pv
    std::priority_queue<Node, std::vector<Node>, std::greater<>> frontier;
    const auto maybe_push = [&](int n_pv, int n_w500, int n_w1000) {
        const std::int64_t cents = n_pv * prices.pv.cents() + n_w500 * prices.w500.cents() +
                                   n_w1000 * prices.w1000.cents();
        if (f_uav + Money::from_cents(cents) <= budget) {
            frontier.emplace(cents, n_w1000, n_w500, n_pv);
        }
    };
    maybe_push(0, 0, 0);
    while (!frontier.empty()) {
        const auto [cents, n_w1000, n_w500, n_pv] = frontier.top();
        frontier.pop();
        const Money f_comb_base = f_uav + Money::from_cents(cents);
        if (f_comb_base > budget) break;
        maybe_push(n_pv + 1, n_w500, n_w1000);
        if (n_pv == 0) maybe_push(0, n_w500 + 1, n_w1000);
        if (n_pv == 0 && n_w500 == 0) maybe_push(0, 0, n_w1000 + 1);

        const auto gen = combination_output_w(basis, n_pv, n_w500, n_w1000);
        const std::int64_t cell_budget = (budget - f_comb_base).cents() / prices.cell.cents();
        const int cell_cap = static_cast<int>(std::min<std::int64_t>(cell_budget, 1'000'000'000));
        const int n_cell = storage::min_feasible_cells(load.energy_wh, gen, cell_prototype, cell_cap);
        if (n_cell < 0) continue;
        const Money f_total = f_comb_base + prices.cell * n_cell;
        if (!best || f_total < best->f) {
            best = cost_ledger(n_pv, n_w500, n_w1000, n_cell, load.n_uav, prices);
            best->d_max_m = d_max_m;
            budget = f_total;
        }
    }
    if (!best) {
        throw BudgetInfeasibleError("no generation and storage combination fits the budget of " +
                                    std::to_string(f_max.eur()) + " EUR");
    }
    return *best;
}

GssResult gss_optimize(const SizingInputs& inputs, double d_lb, double d_ub, double step,
                       Money f_max) {
    if (!(step > 0.0) || d_lb < 0.0 || std::isnan(d_ub) || d_ub < d_lb) {
        throw ConfigError("sweep bounds need d_lb >= 0, d_ub >= d_lb, step > 0");
    }
    check_prices(inputs.prices);
    channel::validate_radio(inputs.radio);

    GssResult result;
    const double start = std::max(d_lb, step);
    const double tol = 1e-9 * step;
    for (std::size_t i = 0;; ++i) {
        const double d = start + static_cast<double>(i) * step;
        if (d > d_ub + tol) break;
        LoadProfile load;
        try {
            load = mel_profile(d, inputs.traffic, inputs.trace, inputs.env, inputs.radio,
                               inputs.airframe, inputs.wind, inputs.prices);
        } catch (const CoverageInfeasibleError&) {
            break; // feasibility is a prefix in D: larger radii only get harder
        }
        SweepSample sample;
        sample.d_m = d;
        sample.annual_energy_wh = load.annual_energy_wh();
        sample.eeac_m2_per_wh = eeac(d, load);
        sample.n_uav = load.n_uav;
        result.sweep.push_back(sample);
    }
    if (result.sweep.empty()) {
        result.coverage_infeasible = true;
        result.diagnostic = "no coverage-feasible radius in the sweep range";
        return result;
    }

    std::vector<double> series;
    series.reserve(result.sweep.size());
    for (const SweepSample& s : result.sweep) series.push_back(s.eeac_m2_per_wh);
    result.candidate_indices = gss_candidates(series);
    if (result.candidate_indices.empty()) {
        result.coverage_infeasible = true;
        result.diagnostic = "efficiency series produced no search candidates";
        return result;
    }

    const GenerationBasis basis = generation_basis(inputs.trace, inputs.pv, inputs.w500, inputs.w1000);
    for (const std::size_t idx : result.candidate_indices) {
        const double d = result.sweep[idx].d_m;
        // Sweep samples keep only scalars; rebuild the profile at candidates.
        const LoadProfile load = mel_profile(d, inputs.traffic, inputs.trace, inputs.env,
                                             inputs.radio, inputs.airframe, inputs.wind,
                                             inputs.prices);
        SystemConfig config;
        try {
            config = ccee(load, basis, inputs.prices, f_max, inputs.cell, d);
        } catch (const BudgetInfeasibleError&) {
            continue;
        }
        result.records.push_back(
            make_record(config, result.sweep[idx].eeac_m2_per_wh, load, basis, f_max, inputs));
    }
    if (result.records.empty()) {
        result.budget_infeasible = true;
        result.diagnostic = "all " + std::to_string(result.candidate_indices.size()) +
                            " candidate radii exceed the budget";
        return result;
    }
    std::sort(result.records.begin(), result.records.end(),
              [](const SolutionRecord& a, const SolutionRecord& b) {
                  if (a.objective_m2_per_eur != b.objective_m2_per_eur) {
                      return a.objective_m2_per_eur > b.objective_m2_per_eur;
                  }
                  if (a.config.f != b.config.f) return a.config.f < b.config.f;
                  return a.config.d_max_m < b.config.d_max_m;
              });
    return result;
}

std::optional<SolutionRecord> exhaustive_oracle(const SizingInputs& inputs,
                                                std::span<const double> d_grid, Money f_max,
                                                const OracleBounds& bounds) {
    if (bounds.max_pv < 0 || bounds.max_w500 < 0 || bounds.max_w1000 < 0 || bounds.max_cells < 0) {
        throw ConfigError("oracle bounds must be non-negative");
    }
    const std::size_t combos = d_grid.size() * (bounds.max_pv + 1ULL) * (bounds.max_w500 + 1ULL) *
                               (bounds.max_w1000 + 1ULL);
    if (combos > bounds.max_combinations) {
        throw ConfigError("oracle enumeration of " + std::to_string(combos) +
                          " combinations exceeds the safety cap");
    }
    check_prices(inputs.prices);
    channel::validate_radio(inputs.radio);
    const GenerationBasis basis = generation_basis(inputs.trace, inputs.pv, inputs.w500, inputs.w1000);

    std::optional<SolutionRecord> best;
    auto better = [](const SolutionRecord& a, const SolutionRecord& b) {
        if (a.objective_m2_per_eur != b.objective_m2_per_eur) {
            return a.objective_m2_per_eur > b.objective_m2_per_eur;
        }
        if (a.config.f != b.config.f) return a.config.f < b.config.f;
        if (a.config.d_max_m != b.config.d_max_m) return a.config.d_max_m < b.config.d_max_m;
        return std::tuple(a.config.n_w1000, a.config.n_w500, a.config.n_pv, a.config.n_cell) <
               std::tuple(b.config.n_w1000, b.config.n_w500, b.config.n_pv, b.config.n_cell);
    };
    for (const double d : d_grid) {
        if (!(d > 0.0)) throw ConfigError("oracle D grid values must be positive");
        LoadProfile load;
        try {
            load = mel_profile(d, inputs.traffic, inputs.trace, inputs.env, inputs.radio,
                               inputs.airframe, inputs.wind, inputs.prices);
        } catch (const CoverageInfeasibleError&) {
            continue;
        }
        const double eeac_val = eeac(d, load);
        for (int n_pv = 0; n_pv <= bounds.max_pv; ++n_pv) {
            for (int n_w500 = 0; n_w500 <= bounds.max_w500; ++n_w500) {
                for (int n_w1000 = 0; n_w1000 <= bounds.max_w1000; ++n_w1000) {
                    const Money f_comb =
                        cost_ledger(n_pv, n_w500, n_w1000, 0, load.n_uav, inputs.prices).f;
                    if (f_comb > f_max) continue;
                    const std::int64_t by_budget =
                        (f_max - f_comb).cents() / inputs.prices.cell.cents();
                    const int cap = static_cast<int>(
                        std::min<std::int64_t>(by_budget, bounds.max_cells));
                    const auto gen = combination_output_w(basis, n_pv, n_w500, n_w1000);
                    storage::GroundBattery bank = inputs.cell;
                    int found = -1;
                    for (int n = 0; n <= cap; ++n) {
                        bank.cell_count = n;
                        if (storage::simulate_horizon(load.energy_wh, gen, bank).feasible) {
                            found = n;
                            break;
                        }
                    }
                    if (found < 0) continue;
                    SystemConfig config =
                        cost_ledger(n_pv, n_w500, n_w1000, found, load.n_uav, inputs.prices);
                    config.d_max_m = d;
                    SolutionRecord rec = make_record(config, eeac_val, load, basis, f_max, inputs);
                    if (!best || better(rec, *best)) best = rec;
                }
            }
        }
    }
    return best;
}

} // namespace swarmgrid::sizing
