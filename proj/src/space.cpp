#include "ionmirror/space.hpp"

#include <string>

#include "ionmirror/errors.hpp"

namespace ionmirror {

const char* level_name(Level l)
{
    switch (l) {
    case Level::Ground: return "ground";
    case Level::Excited: return "excited";
    case Level::Aux: return "aux";
    }
    return "?";
}

int SpaceDescriptor::cutoff(Axis a) const
{
    int n = cutoffs[axis_index(a)];
    if (n <= 0)
        throw MissingAxis("axis " + std::string(axis_name(a)) + " not part of this space");
    return n;
}

int SpaceDescriptor::vib_dim() const
{
    int d = 1;
    for (int n : cutoffs)
        if (n > 0) d *= n;
    return d;
}

std::vector<Axis> SpaceDescriptor::axes() const
{
    std::vector<Axis> out;
    for (Axis a : kAllAxes)
        if (has_axis(a)) out.push_back(a);
    return out;
}

int SpaceDescriptor::index_of(Level level, const std::array<int, 3>& occ) const
{
    int l = level_index(level);
    if (l < 0 || l >= electronic_dim)
        throw UnknownLevel("level " + std::string(level_name(level)) + " not present in a " +
                           std::to_string(electronic_dim) + "-level space");
    int idx = l;
    for (Axis a : kAllAxes) {
        int i = axis_index(a);
        if (cutoffs[i] > 0) {
            if (occ[i] < 0 || occ[i] >= cutoffs[i])
                throw CutoffExceeded("occupation " + std::to_string(occ[i]) + " outside axis " +
                                     std::string(axis_name(a)) + " cutoff " +
                                     std::to_string(cutoffs[i]));
            idx = idx * cutoffs[i] + occ[i];
        } else if (occ[i] != 0) {
            throw UnknownAxis("occupation given for absent axis " + std::string(axis_name(a)));
        }
    }
    return idx;
}

SpaceDescriptor::BasisPoint SpaceDescriptor::unpack(int index) const
{
    BasisPoint p{Level::Ground, {0, 0, 0}};
    for (int i = 2; i >= 0; --i) {
        if (cutoffs[i] > 0) {
            p.occ[i] = index % cutoffs[i];
            index /= cutoffs[i];
        }
    }
    p.level = static_cast<Level>(index);
    return p;
}

SpaceDescriptor make_space(int electronic_dim,
                           const std::vector<std::pair<Axis, int>>& cutoffs)
{
    if (electronic_dim != 2 && electronic_dim != 3)
        throw InvalidDimension("electronic dimension must be 2 or 3, got " +
                               std::to_string(electronic_dim));
    SpaceDescriptor s;
    s.electronic_dim = electronic_dim;
    for (auto [axis, n] : cutoffs) {
        int i = axis_index(axis);
        if (i < 0 || i > 2)
            throw UnknownAxis("bad axis id " + std::to_string(i));
        if (n < 1)
            throw InvalidDimension("cutoff for axis " + std::string(axis_name(axis)) +
                                   " must be >= 1, got " + std::to_string(n));
        if (s.cutoffs[i] != 0)
            throw InvalidDimension("axis " + std::string(axis_name(axis)) + " listed twice");
        s.cutoffs[i] = n;
    }
    if (s.vib_dim() == 1 && s.cutoffs == std::array<int, 3>{0, 0, 0})
        throw MissingAxis("at least one confined axis is required");
    return s;
}

SpaceDescriptor make_space(int electronic_dim,
                           std::initializer_list<std::pair<Axis, int>> cutoffs)
{
    return make_space(electronic_dim, std::vector<std::pair<Axis, int>>(cutoffs));
}

} // namespace ionmirror
