#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "swarmgrid/channel.hpp"
#include "swarmgrid/harvest.hpp"
#include "swarmgrid/ingest.hpp"
#include "swarmgrid/money.hpp"
#include "swarmgrid/storage.hpp"
#include "swarmgrid/uav_power.hpp"

namespace swarmgrid::sizing {

/// Swarm sizes considered per hour.
inline constexpr int kMinSwarm = 1;
inline constexpr int kMaxSwarm = 10;

/// Unit prices. Defaults are the reference list prices in euro.
struct CostTable {
    Money pv = Money::from_cents(20200);
    Money w500 = Money::from_cents(142995);
    Money w1000 = Money::from_cents(273876);
    Money cell = Money::from_cents(575);
    Money uav = Money::from_cents(400000);
};

/// Hourly swarm plan for one coverage radius: the per-hour swarm size that
/// minimizes energy subject to the area rate demand, plus one spare UAV.
struct LoadProfile {
    std::vector<int> k_h;
    std::vector<double> energy_wh;
    int n_uav = 0; // max(k_h) + 1
    Money f_uav;

    [[nodiscard]] double annual_energy_wh() const;
};

/// A purchasable system: generation, storage, and fleet counts with the
/// exact cost ledger. f = f_pv + f_wt + f_uav + f_e always.
struct SystemConfig {
    int n_pv = 0;
    int n_w500 = 0;
    int n_w1000 = 0;
    int n_cell = 0;
    int n_uav = 0;
    double d_max_m = 0.0;
    Money f_pv, f_wt, f_uav, f_e, f;
};

/// Exact linear cost ledger for the given counts.
SystemConfig cost_ledger(int n_pv, int n_w500, int n_w1000, int n_cell, int n_uav,
                         const CostTable& prices);

/// One sized deployment with its objective (covered area per euro) and
/// feasibility diagnostics.
struct SolutionRecord {
    SystemConfig config;
    double objective_m2_per_eur = 0.0; // pi * d_max^2 / f
    double eeac_m2_per_wh = 0.0;
    double min_reserve_wh = 0.0;
    std::string binding_constraint; // "budget", "storage", or "generation"
};

/// Everything a sizing run consumes besides the search bounds.
struct SizingInputs {
    ingest::TrafficProfile traffic; // already provisioned if desired
    ingest::HourlyTrace trace;
    channel::Environment env;
    channel::RadioParams radio;
    uav_power::AirframeParams airframe;
    uav_power::WindContext wind;
    harvest::PvParams pv;
    harvest::TurbineCurve w500;
    harvest::TurbineCurve w1000;
    storage::GroundBattery cell; // prototype; cell_count is ignored
    CostTable prices;
};

/// Per-hour minimum-energy swarm sizes for one coverage radius. For every
/// hour picks the k in [1, 10] with the least hourly energy among those
/// satisfying lambda_h * pi * d_max^2 / k <= edge_rate(k, d_max); ties within
/// 1e-9 Wh go to the smaller k. Throws CoverageInfeasibleError when some
/// hour admits no k (rate demand too high or no flyable sortie).
LoadProfile mel_profile(double d_max_m, const ingest::TrafficProfile& traffic,
                        const ingest::HourlyTrace& trace, const channel::Environment& env,
                        const channel::RadioParams& radio, const uav_power::AirframeParams& af,
                        const uav_power::WindContext& wind, const CostTable& prices);

/// Energy efficiency of annual coverage: pi * d_max^2 / annual energy.
double eeac(double d_max_m, const LoadProfile& load);

/// Candidate filter over a per-D efficiency series: keep running-maximum
/// samples, then among those keep interior samples whose second difference
/// (at their original spacing) is positive. When fewer than three samples
/// survive the first stage the monotone set itself is returned.
std::vector<std::size_t> gss_candidates(std::span<const double> eeac_series);

/// Per-unit hourly generation series for one panel and one turbine of each
/// class; combination outputs are exact count-weighted sums of these.
struct GenerationBasis {
    std::vector<double> pv_unit_w;
    std::vector<double> w500_unit_w;
    std::vector<double> w1000_unit_w;
};

GenerationBasis generation_basis(const ingest::HourlyTrace& trace, const harvest::PvParams& pv,
                                 const harvest::TurbineCurve& w500,
                                 const harvest::TurbineCurve& w1000);

/// Cheapest combination of energy elements for a fixed load profile:
/// enumerates generation mixes in ascending cost order, tests each with the
/// full remaining budget converted to cells, binary-searches the minimal
/// cell count on success, and tightens the budget to each feasible total.
/// Throws BudgetInfeasibleError when nothing fits f_max.
SystemConfig ccee(const LoadProfile& load, const GenerationBasis& basis, const CostTable& prices,
                  Money f_max, const storage::GroundBattery& cell_prototype, double d_max_m);

/// One sweep sample: the efficiency curve point at a candidate radius.
struct SweepSample {
    double d_m = 0.0;
    double eeac_m2_per_wh = 0.0;
    double annual_energy_wh = 0.0;
    int n_uav = 0;
};

/// Full search outcome. records is sorted best objective first; when it is
/// empty exactly one of the infeasibility flags is set and diagnostic says
/// why.
struct GssResult {
    std::vector<SolutionRecord> records;
    std::vector<SweepSample> sweep;
    std::vector<std::size_t> candidate_indices; // into sweep
    std::string diagnostic;
    bool coverage_infeasible = false;
    bool budget_infeasible = false;
};

/// Greedy and sparse search: sweeps D from max(d_lb, step) in step
/// increments while the swarm plan stays coverage-feasible and D <= d_ub,
/// filters the efficiency series via gss_candidates, and solves the cheapest
/// combination per candidate. Throws ConfigError on bad bounds.
GssResult gss_optimize(const SizingInputs& inputs, double d_lb, double d_ub, double step,
                       Money f_max);

/// Enumeration limits for the oracle; the product of the combination counts
/// and the D grid size must stay within max_combinations.
struct OracleBounds {
    int max_pv = 5;
    int max_w500 = 5;
    int max_w1000 = 5;
    int max_cells = 2000;
    std::size_t max_combinations = 2'000'000;
};

/// Reference optimum by full enumeration over the D grid and all count
/// combinations within bounds, scanning cells linearly. Returns nullopt when
/// nothing is feasible. Throws ConfigError when the grid exceeds the safety
/// cap. Intended for reduced instances only.
std::optional<SolutionRecord> exhaustive_oracle(const SizingInputs& inputs,
                                                std::span<const double> d_grid, Money f_max,
                                                const OracleBounds& bounds);

} // namespace swarmgrid::sizing
