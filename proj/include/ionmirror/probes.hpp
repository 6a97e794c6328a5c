#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ionmirror/state.hpp"

namespace ionmirror {

struct Probe {
    std::string name;
    StateVector state;
};

/// Declarative probe suite: a Fock ladder, coherent states, even/odd cats,
/// and seeded random vibrational states, all along one axis with the
/// electronic factor in |g>. max_n >= 0 restricts support to levels 0..max_n
/// (coherent/cat states are truncated and renormalized); max_n < 0 means
/// unrestricted, with random states kept three levels clear of the cutoff so
/// boundary artifacts stay out of the verification.
struct ProbeSuiteSpec {
    int fock_max = 6;
    std::vector<double> coherent_alphas{1.0, 1.5};
    double cat_alpha = 1.2; // both parities are included
    int random_count = 20;
    std::uint64_t seed = 7;
    int max_n = -1;
};

/// The default verification suite (Fock 0..6, coherent 1.0/1.5, cats at 1.2,
/// 20 random states, seed 7).
ProbeSuiteSpec default_probe_suite();

/// Default suite restricted to Fock support 0..max_n.
ProbeSuiteSpec restricted_probe_suite(int max_n);

std::vector<Probe> build_probe_suite(const SpaceDescriptor& space, Axis axis,
                                     const ProbeSuiteSpec& spec);

} // namespace ionmirror
