#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace sadkit::detail {

constexpr bool is_power_of_two(std::size_t n) {
  return n != 0 && (n & (n - 1)) == 0;
}

// In-place iterative radix-2 transform; size must be a power of two.
// inverse=true applies the conjugate transform without the 1/N scaling.
void fft_inplace(std::vector<std::complex<double>>& a, bool inverse);

}  // namespace sadkit::detail
