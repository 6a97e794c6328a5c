#pragma once

#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "ionmirror/state.hpp"

namespace ionmirror {

/// Sampled trajectory: times plus named scalar observable series (electronic
/// populations, mean occupations, norm drift). States themselves are kept
/// only when requested; long scans stay cheap.
struct EvolutionRecord {
    std::vector<double> times;
    std::map<std::string, std::vector<double>> observables;
    std::vector<StateVector> states; // empty unless keep_states was set

    std::size_t size() const { return times.size(); }

    const std::vector<double>& series(const std::string& name) const;
    double final_value(const std::string& name) const;
    double max_value(const std::string& name) const;

    /// One row per sample: time, then the observables in key order.
    void write_csv(std::ostream& out) const;
};

/// Standard observable set for a state: pop_<level> per electronic level,
/// mean_n_<axis> per present axis, and norm_drift = |norm - 1|.
void append_standard_observables(EvolutionRecord& rec, double t, const StateVector& psi);

} // namespace ionmirror
