#include "swarmgrid/report.hpp"

#include <algorithm>
#include <vector>

#include <json.hpp>

#include "swarmgrid/storage.hpp"
#include "text_util.hpp"

namespace swarmgrid::report {
namespace {

using detail::format_double;
using ordered_json = nlohmann::ordered_json;

ordered_json record_json(const sizing::SolutionRecord& rec, const scenario::Scenario& s) {
    const sizing::SystemConfig& c = rec.config;
    ordered_json j;
    j["d_max_m"] = c.d_max_m;
    j["objective_m2_per_eur"] = rec.objective_m2_per_eur;
    j["eeac_m2_per_wh"] = rec.eeac_m2_per_wh;
    j["min_reserve_wh"] = rec.min_reserve_wh;
    j["binding_constraint"] = rec.binding_constraint;
    j["counts"] = {{"n_pv", c.n_pv},
                   {"n_w500", c.n_w500},
                   {"n_w1000", c.n_w1000},
                   {"n_cell", c.n_cell},
                   {"n_uav", c.n_uav}};
    j["costs_eur"] = {{"pv", c.f_pv.eur()},
                      {"wt", c.f_wt.eur()},
                      {"uav", c.f_uav.eur()},
                      {"cells", c.f_e.eur()},
                      {"total", c.f.eur()}};
    j["costs_cents"] = {{"pv", c.f_pv.cents()},
                        {"wt", c.f_wt.cents()},
                        {"uav", c.f_uav.cents()},
                        {"cells", c.f_e.cents()},
                        {"total", c.f.cents()}};
    storage::ChargerSpec charger = s.charger;
    charger.flight_duration_h = s.airframe.flight_duration_h;
    const storage::ChargerPlan plan = storage::charger_requirements(c.n_uav, charger);
    j["charger"] = {{"recharge_h", plan.recharge_h}, {"battery_count", plan.battery_count}};
    return j;
}

} // namespace

std::string report_json(const scenario::Scenario& s, const sizing::GssResult& result) {
    ordered_json j;
    ordered_json scn;
    for (const auto& [key, value] : scenario::resolved_parameters(s)) scn[key] = value;
    j["scenario"] = scn;

    ordered_json search;
    search["feasible"] = !result.records.empty();
    search["coverage_infeasible"] = result.coverage_infeasible;
    search["budget_infeasible"] = result.budget_infeasible;
    search["diagnostic"] = result.diagnostic;
    ordered_json sweep = ordered_json::array();
    for (const sizing::SweepSample& sample : result.sweep) {
        sweep.push_back({{"d_m", sample.d_m},
                         {"eeac_m2_per_wh", sample.eeac_m2_per_wh},
                         {"annual_energy_wh", sample.annual_energy_wh},
                         {"n_uav", sample.n_uav}});
    }
    search["sweep"] = sweep;
    search["candidate_indices"] = result.candidate_indices;
    if (result.records.empty()) {
        search["best"] = nullptr;
    } else {
        search["best"] = record_json(result.records.front(), s);
    }
    ordered_json records = ordered_json::array();
    for (const sizing::SolutionRecord& rec : result.records) records.push_back(record_json(rec, s));
    search["records"] = records;
    j["search"] = search;
    return j.dump(2) + "\n";
}

void write_sweep_csv(std::ostream& out, const sizing::GssResult& result) {
    out << "d_m,eeac_m2_per_wh,f_total_eur,objective_m2_per_eur,n_pv,n_w500,n_w1000,n_cell,n_uav\n";
    std::vector<const sizing::SolutionRecord*> rows;
    rows.reserve(result.records.size());
    for (const sizing::SolutionRecord& rec : result.records) rows.push_back(&rec);
    std::sort(rows.begin(), rows.end(), [](const auto* a, const auto* b) {
        return a->config.d_max_m < b->config.d_max_m;
    });
    for (const sizing::SolutionRecord* rec : rows) {
        const sizing::SystemConfig& c = rec->config;
        out << format_double(c.d_max_m) << ',' << format_double(rec->eeac_m2_per_wh) << ','
            << format_double(c.f.eur()) << ',' << format_double(rec->objective_m2_per_eur) << ','
            << c.n_pv << ',' << c.n_w500 << ',' << c.n_w1000 << ',' << c.n_cell << ',' << c.n_uav
            << '\n';
    }
}

void write_battery_trajectory_csv(std::ostream& out, std::span<const std::string> timestamps,
                                  std::span<const double> trajectory_wh) {
    out << "hour,time,state_wh\n";
    for (std::size_t h = 0; h < trajectory_wh.size(); ++h) {
        out << h << ',' << (h < timestamps.size() ? timestamps[h] : "") << ','
            << format_double(trajectory_wh[h]) << '\n';
    }
}

void write_swarm_profile_csv(std::ostream& out, std::span<const std::string> timestamps,
                             const sizing::LoadProfile& load) {
    out << "hour,time,k,energy_wh\n";
    for (std::size_t h = 0; h < load.k_h.size(); ++h) {
        out << h << ',' << (h < timestamps.size() ? timestamps[h] : "") << ',' << load.k_h[h] << ','
            << format_double(load.energy_wh[h]) << '\n';
    }
}

} // namespace swarmgrid::report
