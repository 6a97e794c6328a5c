#pragma once

#include <array>
#include <initializer_list>
#include <utility>
#include <vector>

#include "ionmirror/axes.hpp"

namespace ionmirror {

enum class Level : int { Ground = 0, Excited = 1, Aux = 2 };

constexpr int level_index(Level l) { return static_cast<int>(l); }

const char* level_name(Level l);

/// Composite Hilbert space of a single trapped ion: an electronic factor of
/// dimension 2 (|g>, |e>) or 3 (|g>, |e>, |aux>) tensored with one truncated
/// Fock ladder per confined axis. Axes are optional but at least one must be
/// present; a cutoff of N keeps levels 0..N-1.
///
/// Basis ordering is fixed so matrices are reproducible entry by entry: the
/// electronic index runs slowest, then x, then y, then z fastest. With
/// per-axis cutoffs Nx, Ny, Nz (an absent axis contributes a factor 1) the
/// flat index of |level; nx, ny, nz> is
///
///     index = ((level * Nx + nx) * Ny + ny) * Nz + nz
struct SpaceDescriptor {
    int electronic_dim = 2;
    std::array<int, 3> cutoffs{0, 0, 0}; // indexed by axis_index; 0 = absent

    bool has_axis(Axis a) const { return cutoffs[axis_index(a)] > 0; }

    /// Cutoff of a present axis; throws MissingAxis otherwise.
    int cutoff(Axis a) const;

    /// Product of the present axes' cutoffs.
    int vib_dim() const;

    int total_dim() const { return electronic_dim * vib_dim(); }

    std::vector<Axis> axes() const;

    /// Flat basis index; validates the level and every occupation number.
    int index_of(Level level, const std::array<int, 3>& occ) const;

    struct BasisPoint {
        Level level;
        std::array<int, 3> occ; // absent axes read 0
    };

    BasisPoint unpack(int index) const;

    bool operator==(const SpaceDescriptor&) const = default;
};

/// Validated constructor. electronic_dim must be 2 or 3; every listed axis
/// needs a cutoff >= 1 and may appear only once.
SpaceDescriptor make_space(int electronic_dim,
                           std::initializer_list<std::pair<Axis, int>> cutoffs);
SpaceDescriptor make_space(int electronic_dim,
                           const std::vector<std::pair<Axis, int>>& cutoffs);

} // namespace ionmirror
