#include "radial/radii.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "radial/geometry.hpp"

namespace radial {

RadiiSet::RadiiSet(std::vector<double> values) : values_(std::move(values))
{
    for (std::size_t i = 0; i < values_.size(); ++i)
        if (!std::isfinite(values_[i]) || !(values_[i] > 0.0))
            throw Error(ErrorCode::InvalidRadius,
                        "radius #" + std::to_string(i) + " must be positive and finite");

    std::vector<std::size_t> order(values_.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values_[a] > values_[b]; });
    for (std::size_t idx : order) {
        if (layers_.empty() || layers_.back().value != values_[idx])
            layers_.push_back({values_[idx], {}});
        layers_.back().members.push_back(idx);
    }
}

std::size_t RadiiSet::max_multiplicity() const
{
    std::size_t m = 0;
    for (const Layer& l : layers_) m = std::max(m, l.multiplicity());
    return m;
}

}  // namespace radial
