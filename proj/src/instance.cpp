#include "dgs/instance.hpp"

#include <stdexcept>
#include <string>

namespace dgs {

Rational Instance::total_weight() const {
  Rational sum = 0;
  for (const auto& w : c) sum += w;
  return sum;
}

Instance make_instance(Graph g, std::vector<Rational> c, std::vector<int> kappa) {
  const int n = g.vertex_count();
  if (c.empty()) c.assign(n, Rational(1));
  if (kappa.empty()) kappa.assign(n, 0);
  if (static_cast<int>(c.size()) != n || static_cast<int>(kappa.size()) != n)
    throw std::invalid_argument("profile length does not match vertex count");
  for (int u = 0; u < n; ++u) {
    if (c[u] <= 0)
      throw std::invalid_argument("nonpositive weight c(" + std::to_string(u) + ")");
    if (kappa[u] < 0)
      throw std::invalid_argument("negative kappa(" + std::to_string(u) + ")");
    if (kappa[u] > g.degree(u))
      throw std::invalid_argument("kappa(" + std::to_string(u) + ")=" +
                                  std::to_string(kappa[u]) + " > d(" + std::to_string(u) +
                                  ")=" + std::to_string(g.degree(u)));
  }
  return Instance{std::move(g), std::move(c), std::move(kappa)};
}

}  // namespace dgs
