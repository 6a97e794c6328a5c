#include "ionmirror/probes.hpp"

#include <string>

#include "ionmirror/errors.hpp"

namespace ionmirror {

ProbeSuiteSpec default_probe_suite()
{
    return {};
}

ProbeSuiteSpec restricted_probe_suite(int max_n)
{
    ProbeSuiteSpec spec;
    if (max_n < 0) throw InvalidParameter("probe restriction needs max_n >= 0");
    spec.fock_max = max_n;
    spec.max_n = max_n;
    return spec;
}

std::vector<Probe> build_probe_suite(const SpaceDescriptor& space, Axis axis,
                                     const ProbeSuiteSpec& spec)
{
    const int cut = space.cutoff(axis);
    const int fock_top = std::min(spec.fock_max, cut - 1);
    if (spec.fock_max >= cut)
        throw CutoffExceeded("probe Fock ladder does not fit under the cutoff");

    std::vector<Probe> probes;
    auto restricted = [&](StateVector psi) {
        if (spec.max_n >= 0) return truncate_above(psi, axis, spec.max_n);
        return psi;
    };

    for (int n = 0; n <= fock_top; ++n)
        probes.push_back({"fock_" + std::to_string(n),
                          fock_state(space, Level::Ground, {{axis, n}})});

    for (double alpha : spec.coherent_alphas)
        probes.push_back({"coherent_" + std::to_string(alpha).substr(0, 4),
                          restricted(coherent_state(space, axis, alpha))});

    probes.push_back({"cat_even", restricted(cat_state(space, axis, spec.cat_alpha, +1))});
    probes.push_back({"cat_odd", restricted(cat_state(space, axis, spec.cat_alpha, -1))});

    // Random probes stay clear of the boundary so truncation artifacts do not
    // masquerade as gate error.
    const int random_top = spec.max_n >= 0 ? spec.max_n : std::max(0, cut - 4);
    for (int k = 0; k < spec.random_count; ++k)
        probes.push_back({"random_" + std::to_string(k),
                          random_vibrational_state(space, axis, random_top,
                                                   spec.seed + static_cast<std::uint64_t>(k))});
    return probes;
}

} // namespace ionmirror
