#include "nsfr/tensor.hpp"

#include <cmath>

namespace nsfr {

TensorField::TensorField(Extents e, std::vector<double> v) : ext(e), values(std::move(v)) {
  if (static_cast<int>(values.size()) != ext.size())
    throw DimensionError("TensorField: value count does not match extents");
}

}  // namespace nsfr
