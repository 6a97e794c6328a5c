#include "ionmirror/json_io.hpp"

#include <complex>
#include <string>

#include <nlohmann/json.hpp>

#include "ionmirror/errors.hpp"
#include "ionmirror/units.hpp"

namespace ionmirror {

namespace {

using nlohmann::json;

double frequency_field(const json& j, const std::string& key)
{
    if (!j.contains(key)) throw ConfigError("missing key: " + key);
    const json& v = j.at(key);
    if (v.is_string()) return parse_angular_frequency(v.get<std::string>());
    throw ConfigError(key + " must be a frequency string like \"3 MHz\"");
}

double frequency_field_or(const json& j, const std::string& key, double fallback)
{
    if (!j.contains(key)) return fallback;
    return frequency_field(j, key);
}

std::complex<double> coupling_field(const json& j, const std::string& key)
{
    if (!j.contains(key)) throw ConfigError("missing key: " + key);
    const json& v = j.at(key);
    if (v.is_string()) return {parse_angular_frequency(v.get<std::string>()), 0.0};
    if (v.is_object()) {
        if (!v.contains("magnitude") || !v.contains("phase"))
            throw ConfigError(key + " needs both magnitude and phase");
        const double mag = parse_angular_frequency(v.at("magnitude").get<std::string>());
        const double phase = v.at("phase").get<double>();
        return std::polar(mag, phase);
    }
    throw ConfigError(key + " must be a frequency string or {magnitude, phase}");
}

Eigen::Vector3d wavevector_field(const json& j, const std::string& key)
{
    if (!j.contains(key)) return Eigen::Vector3d::Zero();
    const json& v = j.at(key);
    if (!v.is_array() || v.size() != 3)
        throw ConfigError(key + " must be [kx, ky, kz] in rad/m");
    Eigen::Vector3d k;
    for (int i = 0; i < 3; ++i) {
        if (!v[static_cast<size_t>(i)].is_number())
            throw ConfigError(key + " components must be numbers");
        k(i) = v[static_cast<size_t>(i)].get<double>();
    }
    return k;
}

json coupling_to_json(const std::complex<double>& g)
{
    if (g.imag() == 0.0) return format_frequency(g.real());
    return json{{"magnitude", format_frequency(std::abs(g))}, {"phase", std::arg(g)}};
}

} // namespace

RamanParams raman_params_from_json(const json& j)
{
    if (!j.is_object()) throw ConfigError("Raman parameters must be an object");
    RamanParams p;
    p.omega0 = frequency_field(j, "trap_frequency");
    p.omega_g = frequency_field_or(j, "omega_g", 0.0);
    p.omega_e = frequency_field(j, "omega_e");
    p.omega_aux = frequency_field(j, "omega_aux");
    p.omega_a = frequency_field(j, "omega_a");
    p.omega_b = frequency_field(j, "omega_b");
    p.g_a = coupling_field(j, "g_a");
    p.g_b = coupling_field(j, "g_b");
    p.k_a = wavevector_field(j, "k_a");
    p.k_b = wavevector_field(j, "k_b");
    p.ion_mass_kg = j.contains("ion_mass_amu")
                        ? j.at("ion_mass_amu").get<double>() * units::amu_kg
                        : units::beryllium9_mass_kg;
    if (p.ion_mass_kg <= 0.0) throw ConfigError("ion_mass_amu must be positive");
    return p;
}

json raman_params_to_json(const RamanParams& p)
{
    json j;
    j["trap_frequency"] = format_frequency(p.omega0);
    j["omega_g"] = format_frequency(p.omega_g);
    j["omega_e"] = format_frequency(p.omega_e);
    j["omega_aux"] = format_frequency(p.omega_aux);
    j["omega_a"] = format_frequency(p.omega_a);
    j["omega_b"] = format_frequency(p.omega_b);
    j["g_a"] = coupling_to_json(p.g_a);
    j["g_b"] = coupling_to_json(p.g_b);
    j["k_a"] = {p.k_a(0), p.k_a(1), p.k_a(2)};
    j["k_b"] = {p.k_b(0), p.k_b(1), p.k_b(2)};
    j["ion_mass_amu"] = p.ion_mass_kg / units::amu_kg;
    return j;
}

ProbeSuiteSpec probe_suite_from_json(const json& j)
{
    if (!j.is_object()) throw ConfigError("probe suite must be an object");
    ProbeSuiteSpec spec;
    if (j.contains("fock_max")) spec.fock_max = j.at("fock_max").get<int>();
    if (j.contains("coherent_alphas"))
        spec.coherent_alphas = j.at("coherent_alphas").get<std::vector<double>>();
    if (j.contains("cat_alpha")) spec.cat_alpha = j.at("cat_alpha").get<double>();
    if (j.contains("random_count")) spec.random_count = j.at("random_count").get<int>();
    if (j.contains("seed")) spec.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("max_n")) spec.max_n = j.at("max_n").get<int>();
    if (spec.fock_max < 0 || spec.random_count < 0)
        throw ConfigError("probe counts must be >= 0");
    return spec;
}

json probe_suite_to_json(const ProbeSuiteSpec& spec)
{
    return json{{"fock_max", spec.fock_max},
                {"coherent_alphas", spec.coherent_alphas},
                {"cat_alpha", spec.cat_alpha},
                {"random_count", spec.random_count},
                {"seed", spec.seed},
                {"max_n", spec.max_n}};
}

json gate_report_to_json(const GateReport& r)
{
    json probes = json::array();
    for (const auto& p : r.probes)
        probes.push_back({{"name", p.name},
                          {"fidelity", p.fidelity},
                          {"ground_population", p.ground_population},
                          {"purity", p.purity}});
    return json{{"g_nominal", format_frequency(r.g_nominal)},
                {"pulse_time_us", r.pulse_time},
                {"worst_fidelity", r.worst_fidelity},
                {"average_fidelity", r.average_fidelity},
                {"min_ground_population", r.min_ground_population},
                {"min_purity", r.min_purity},
                {"probes", probes}};
}

json not_gate_report_to_json(const NotGateReport& r)
{
    return json{{"fidelity_plus_to_minus", r.fidelity_plus_to_minus},
                {"fidelity_minus_to_plus", r.fidelity_minus_to_plus},
                {"return_fidelity", r.return_fidelity}};
}

json time_reversal_report_to_json(const TimeReversalReport& r)
{
    return json{{"anticommutator_norm", r.anticommutator_norm},
                {"identity_error", r.identity_error},
                {"recovery_fidelity", r.recovery_fidelity},
                {"three_pulse_fidelity", r.three_pulse_fidelity}};
}

json adiabatic_report_to_json(const AdiabaticReport& r)
{
    return json{{"ratio", r.ratio},
                {"envelope", r.envelope},
                {"max_aux_population", r.max_aux_population},
                {"end_fidelity", r.end_fidelity},
                {"t_final_us", r.t_final},
                {"coarse_samples", r.coarse_samples},
                {"fine_samples", r.fine_samples},
                {"fine_window_us", r.fine_window}};
}

json record_to_json(const EvolutionRecord& rec)
{
    json obs = json::object();
    for (const auto& [name, values] : rec.observables) obs[name] = values;
    return json{{"times_us", rec.times}, {"observables", obs}};
}

} // namespace ionmirror
