#pragma once

// Threshold decomposition of a multiplicative group element:
//   xi = w * xi0 * prod_{j in I} xi_j^{e_j}
// where I collects the generator indices whose exponent magnitude
// exceeds the threshold B and xi0 absorbs the rest symbolically.
// Shared between the Gaussian (xi_j = conj(gamma_j)/gamma_j) and the
// rational (xi_j = prime p_j) pipelines.

#include <cstddef>
#include <utility>
#include <vector>

namespace ntkit {

template <typename Elem>
struct MultiplicativeDecomposition {
  Elem torsion;                  // w, a root of unity
  std::vector<Elem> generators;  // xi_j, aligned with the source factor order
  std::vector<std::pair<std::size_t, long>> small_part;  // (index, e), |e| <= B
  std::vector<std::pair<std::size_t, long>> large_part;  // (index, e), |e| > B
  double threshold = 0.0;        // B

  // m = #I_0 = 1 + #I
  std::size_t m() const { return large_part.size() + 1; }
};

// Multiplies a decomposition back out exactly; multiply and elem_pow
// are supplied by the element type's header (gaussian.hpp, abc.hpp).
template <typename Elem, typename Pow>
Elem reconstruct_with(const MultiplicativeDecomposition<Elem>& d, Pow&& pow) {
  Elem acc = d.torsion;
  for (const auto& [idx, e] : d.small_part) acc = acc * pow(d.generators[idx], e);
  for (const auto& [idx, e] : d.large_part) acc = acc * pow(d.generators[idx], e);
  return acc;
}

}  // namespace ntkit
