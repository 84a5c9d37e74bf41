#pragma once

#include <cstddef>

namespace qzs {

/// Uniform grid on [0, 2pi) with M nodes and integer frequencies
/// k in {-M/2, ..., M/2 - 1}.
///
/// Coefficient storage everywhere in the library follows the FFT ordering
/// 0, 1, ..., M/2 - 1, -M/2, ..., -1; use index() and frequency() to
/// translate.
class TorusGrid {
 public:
  explicit TorusGrid(int size);

  int size() const noexcept { return size_; }
  double spacing() const noexcept;
  double node(int j) const noexcept;

  int min_frequency() const noexcept { return -size_ / 2; }
  int max_frequency() const noexcept { return size_ / 2 - 1; }
  bool contains(long k) const noexcept {
    return k >= min_frequency() && k <= max_frequency();
  }

  std::size_t index(int k) const noexcept {
    return static_cast<std::size_t>(k >= 0 ? k : k + size_);
  }
  int frequency(std::size_t i) const noexcept {
    const int ii = static_cast<int>(i);
    return ii < size_ / 2 ? ii : ii - size_;
  }

  /// Largest |k| kept by the 2/3 dealiasing rule.
  int dealias_cutoff() const noexcept { return size_ / 3; }

  friend bool operator==(const TorusGrid&, const TorusGrid&) = default;

 private:
  int size_;
};

}  // namespace qzs
