#ifndef KDTLI_QUADRATURE_HPP
#define KDTLI_QUADRATURE_HPP

#include <span>
#include <vector>

namespace kdtli {

struct GaussPoint {
  double x;
  double w;
};

// Gauss-Legendre nodes and weights on [-1, 1].
std::vector<GaussPoint> gauss_legendre(int n);

// Cached 128-node rule used for velocity averaging.
const std::vector<GaussPoint>& gauss_legendre_128();

// Fixed-tree pairwise summation; deterministic for a given input order.
double pairwise_sum(std::span<const double> values);

}  // namespace kdtli

#endif
