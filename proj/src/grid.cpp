#include "qzs/grid.hpp"

#include <string>

#include "qzs/error.hpp"
#include "qzs/math.hpp"

namespace qzs {

TorusGrid::TorusGrid(int size) : size_(size) {
  if (size < 8 || size % 2 != 0)
    throw Error(ErrorKind::domain,
                "grid size must be even and at least 8, got " + std::to_string(size));
}

double TorusGrid::spacing() const noexcept { return 2.0 * kPi / size_; }

double TorusGrid::node(int j) const noexcept { return 2.0 * kPi * j / size_; }

}  // namespace qzs
