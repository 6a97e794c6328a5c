#include "ionmirror/record.hpp"

#include <algorithm>
#include <cmath>

#include "ionmirror/errors.hpp"
#include "ionmirror/observables.hpp"

namespace ionmirror {

const std::vector<double>& EvolutionRecord::series(const std::string& name) const
{
    auto it = observables.find(name);
    if (it == observables.end()) throw InvalidParameter("no observable series named " + name);
    return it->second;
}

double EvolutionRecord::final_value(const std::string& name) const
{
    const auto& s = series(name);
    if (s.empty()) throw InvalidParameter("observable series " + name + " is empty");
    return s.back();
}

double EvolutionRecord::max_value(const std::string& name) const
{
    const auto& s = series(name);
    if (s.empty()) throw InvalidParameter("observable series " + name + " is empty");
    return *std::max_element(s.begin(), s.end());
}

void EvolutionRecord::write_csv(std::ostream& out) const
{
    out << "time";
    for (const auto& [name, values] : observables) out << ',' << name;
    out << '\n';
    out.precision(15);
    for (std::size_t i = 0; i < times.size(); ++i) {
        out << times[i];
        for (const auto& [name, values] : observables) out << ',' << values[i];
        out << '\n';
    }
}

void append_standard_observables(EvolutionRecord& rec, double t, const StateVector& psi)
{
    rec.times.push_back(t);
    const auto pops = electronic_populations(psi);
    for (int l = 0; l < psi.space.electronic_dim; ++l) {
        const auto name = std::string("pop_") + level_name(static_cast<Level>(l));
        rec.observables[name].push_back(pops[static_cast<size_t>(l)]);
    }
    for (Axis a : psi.space.axes()) {
        const auto name = std::string("mean_n_") + axis_name(a);
        rec.observables[name].push_back(mean_occupation(psi, a));
    }
    rec.observables["norm_drift"].push_back(std::abs(psi.norm() - 1.0));
}

} // namespace ionmirror
