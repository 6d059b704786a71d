#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace radial {

/// One group of equal radii.
struct Layer {
    double value = 0.0;
    std::vector<std::size_t> members;  // indices into RadiiSet::values()

    std::size_t multiplicity() const { return members.size(); }
};

/// Validated multiset of positive radii grouped into layers of equal value,
/// ordered by strictly decreasing radius.
class RadiiSet {
public:
    RadiiSet() = default;
    /// Throws Error(InvalidRadius) on non-positive or non-finite values.
    explicit RadiiSet(std::vector<double> values);

    const std::vector<double>& values() const { return values_; }
    const std::vector<Layer>& layers() const { return layers_; }
    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }

    bool all_distinct() const { return layers_.size() == values_.size(); }
    std::size_t max_multiplicity() const;

private:
    std::vector<double> values_;
    std::vector<Layer> layers_;
};

}  // namespace radial
