#pragma once

#include <nlohmann/json_fwd.hpp>

#include "ionmirror/beams.hpp"
#include "ionmirror/gates.hpp"
#include "ionmirror/probes.hpp"
#include "ionmirror/raman.hpp"
#include "ionmirror/record.hpp"

namespace ionmirror {

// JSON boundary. Dimensioned scalars are unit strings ("3 MHz", "20 us");
// dimensionless numbers are plain; complex couplings accept either a
// frequency string (real) or {"magnitude": "...", "phase": rad}; wavevectors
// are [kx, ky, kz] in rad/m. Parse errors throw ConfigError with the key path.

RamanParams raman_params_from_json(const nlohmann::json& j);
nlohmann::json raman_params_to_json(const RamanParams& p);

ProbeSuiteSpec probe_suite_from_json(const nlohmann::json& j);
nlohmann::json probe_suite_to_json(const ProbeSuiteSpec& spec);

nlohmann::json gate_report_to_json(const GateReport& r);
nlohmann::json not_gate_report_to_json(const NotGateReport& r);
nlohmann::json time_reversal_report_to_json(const TimeReversalReport& r);
nlohmann::json adiabatic_report_to_json(const AdiabaticReport& r);
nlohmann::json record_to_json(const EvolutionRecord& rec);

} // namespace ionmirror
