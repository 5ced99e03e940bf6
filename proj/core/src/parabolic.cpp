#include "rootcircles/parabolic.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace rootcircles {

Parabolic make_parabolic(RootSystem rs, std::set<int> crossed) {
  for (int k : crossed)
    if (k < 1 || k > rs.rank())
      throw std::invalid_argument("crossed index " + std::to_string(k) +
                                  " outside [1, " + std::to_string(rs.rank()) +
                                  "]");
  Parabolic p;
  p.rs = std::move(rs);
  p.crossed = std::move(crossed);
  for (const auto& r : p.rs.positive_roots) {
    Int degree = 0;
    for (int k : p.crossed) degree += r.c[static_cast<size_t>(k - 1)];
    if (degree > 0) p.omitted.push_back(negate(r));
  }
  return p;
}

Int grading_degree(const Parabolic& p, const Vec& v) {
  Int degree = 0;
  for (int k : p.crossed) degree += v[static_cast<size_t>(k - 1)];
  return degree;
}

bool is_omitted(const Parabolic& p, const Root& r) {
  return grading_degree(p, r.c) < 0;
}

bool is_p_root(const Parabolic& p, const Root& r) {
  return grading_degree(p, r.c) >= 0;
}

Int dim_gp(const Parabolic& p) { return static_cast<Int>(p.omitted.size()); }

Parabolic projective_space(int n) {
  if (n < 1)
    throw std::invalid_argument("projective space needs dimension >= 1");
  return make_parabolic(build_root_system(make_lie_type(Family::A, n)), {1});
}

Parabolic quadric(int n) {
  if (n < 3)
    throw std::invalid_argument("quadric needs dimension >= 3");
  const LieType type = n % 2 == 1
                           ? make_lie_type(Family::B, (n + 1) / 2)
                           : make_lie_type(Family::D, (n + 2) / 2);
  return make_parabolic(build_root_system(type), {1});
}

Parabolic grassmannian(int k, int n) {
  if (n < 2 || k < 1 || k >= n)
    throw std::invalid_argument("grassmannian needs 1 <= k < n, n >= 2");
  if (k == 1) return projective_space(n - 1);
  if (k == n - 1) return projective_space(n - 1);
  return make_parabolic(build_root_system(make_lie_type(Family::A, n - 1)),
                        {k});
}

Parabolic flag_variety(const FlagShape& shape) {
  if (shape.blocks.size() < 2)
    throw std::invalid_argument("flag shape needs at least two blocks");
  for (int b : shape.blocks)
    if (b < 1) throw std::invalid_argument("flag blocks must be positive");
  const int n =
      std::accumulate(shape.blocks.begin(), shape.blocks.end(), 0);
  std::set<int> crossed;
  int sum = 0;
  for (size_t i = 0; i + 1 < shape.blocks.size(); ++i) {
    sum += shape.blocks[i];
    crossed.insert(sum);
  }
  return make_parabolic(build_root_system(make_lie_type(Family::A, n - 1)),
                        crossed);
}

Parabolic spinor_variety(int n) {
  if (n < 3)
    throw std::invalid_argument("spinor variety needs rank >= 3");
  return make_parabolic(build_root_system(make_lie_type(Family::D, n)), {n});
}

Parabolic lagrangian_grassmannian(int n) {
  if (n < 2)
    throw std::invalid_argument("lagrangian grassmannian needs rank >= 2");
  return make_parabolic(build_root_system(make_lie_type(Family::C, n)), {n});
}

}  // namespace rootcircles
