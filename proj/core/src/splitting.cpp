#include "rootcircles/splitting.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rootcircles {

bool operator==(const SplittingType& a, const SplittingType& b) {
  return a.summands == b.summands;
}

bool operator!=(const SplittingType& a, const SplittingType& b) {
  return !(a == b);
}

SplittingType make_splitting(
    std::initializer_list<std::pair<Int, Int>> parts) {
  SplittingType s;
  for (const auto& [degree, mult] : parts) {
    if (mult < 0)
      throw std::invalid_argument("negative multiplicity in splitting type");
    if (mult > 0) s.summands[degree] += mult;
  }
  return s;
}

Int rank(const SplittingType& s) {
  Int total = 0;
  for (const auto& [degree, mult] : s.summands) total += mult;
  return total;
}

SplittingType dual(const SplittingType& s) {
  SplittingType out;
  for (const auto& [degree, mult] : s.summands) out.summands[-degree] = mult;
  return out;
}

SplittingType direct_sum(const SplittingType& a, const SplittingType& b) {
  SplittingType out = a;
  for (const auto& [degree, mult] : b.summands) out.summands[degree] += mult;
  return out;
}

SplittingType tensor(const SplittingType& a, const SplittingType& b) {
  SplittingType out;
  for (const auto& [da, ma] : a.summands)
    for (const auto& [db, mb] : b.summands) out.summands[da + db] += ma * mb;
  return out;
}

SplittingType wedge2(const SplittingType& s) {
  SplittingType out;
  for (auto i = s.summands.begin(); i != s.summands.end(); ++i) {
    const auto& [di, mi] = *i;
    if (mi >= 2) out.summands[2 * di] += mi * (mi - 1) / 2;
    for (auto j = std::next(i); j != s.summands.end(); ++j) {
      const auto& [dj, mj] = *j;
      out.summands[di + dj] += mi * mj;
    }
  }
  // the accumulations above can only add positive amounts, but keep the
  // no-zero-multiplicity invariant robust against empty inputs
  for (auto it = out.summands.begin(); it != out.summands.end();)
    it = it->second == 0 ? out.summands.erase(it) : std::next(it);
  return out;
}

Int h0(const SplittingType& s) {
  Int total = 0;
  for (const auto& [degree, mult] : s.summands)
    total += std::max<Int>(degree + 1, 0) * mult;
  return total;
}

std::string to_string(const SplittingType& s) {
  if (s.summands.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [degree, mult] : s.summands) {
    if (!first) os << " + ";
    first = false;
    os << "O(" << degree << ")";
    if (mult > 1) os << "^" << mult;
  }
  return os.str();
}

SplittingType tangent_splitting(const Parabolic& p, const Root& alpha) {
  SplittingType out;
  for (const auto& s : string_inventory(p, alpha)) out.summands[s.d_s] += s.n_s;
  return out;
}

namespace {

Vec vec_add(const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

bool vec_is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](Int c) { return c == 0; });
}

}  // namespace

SplittingType adjoint_splitting(const Parabolic& p, const Root& alpha) {
  if (!is_root(p.rs, alpha.c) || grading_degree(p, alpha.c) >= 0)
    throw std::invalid_argument("alpha " + to_string(alpha) +
                                " is not an omitted root of the parabolic");
  // partition every root of g into maximal alpha-chains (the chain of the
  // alpha pair passes through the zero vector); each full chain is an
  // irreducible piece of the adjoint representation restricted to the
  // circle's sl2, hence weight-symmetric and a trivial summand O(0)^length
  std::set<Vec> remaining;
  for (const auto& r : p.rs.positive_roots) {
    remaining.insert(r.c);
    remaining.insert(negate(r).c);
  }
  Int nodes_total = 0;
  while (!remaining.empty()) {
    Vec start = *remaining.begin();
    std::vector<Int> weights{pairing(p.rs, Root{start}, alpha)};
    remaining.erase(remaining.begin());
    for (int sign : {+1, -1}) {
      Vec step = alpha.c;
      if (sign < 0)
        for (auto& c : step) c = -c;
      Vec v = vec_add(start, step);
      while (is_root(p.rs, v) || vec_is_zero(v)) {
        weights.push_back(pairing(p.rs, Root{v}, alpha));
        remaining.erase(v);
        v = vec_add(v, step);
      }
    }
    const auto [lo, hi] = std::minmax_element(weights.begin(), weights.end());
    if (*lo != -*hi ||
        *hi != static_cast<Int>(weights.size()) - 1)
      throw std::logic_error("alpha-chain through " + to_string(Root{start}) +
                             " is not weight-symmetric");
    nodes_total += static_cast<Int>(weights.size());
  }
  // the zero vector accounted for one Cartan direction (the sl2 coroot);
  // the remaining rank - 1 Cartan directions are circle-invariant
  const Int dim = nodes_total + p.rs.rank() - 1;
  if (dim != p.rs.dim_g())
    throw std::logic_error("adjoint bookkeeping does not reach dim g");
  SplittingType out;
  out.summands[0] = dim;
  return out;
}

}  // namespace rootcircles
