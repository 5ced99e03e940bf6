#include "rootcircles/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rootcircles {

bool operator==(const LieType& a, const LieType& b) {
  return a.family == b.family && a.rank == b.rank;
}

bool operator!=(const LieType& a, const LieType& b) { return !(a == b); }

LieType make_lie_type(Family family, int rank) {
  const auto fail = [&](const char* bound) {
    std::ostringstream os;
    os << "invalid type " << static_cast<char>(family) << rank
       << ": " << bound;
    throw std::invalid_argument(os.str());
  };
  switch (family) {
    case Family::A:
      if (rank < 1) fail("A requires rank >= 1");
      break;
    case Family::B:
      if (rank < 2) fail("B requires rank >= 2");
      break;
    case Family::C:
      if (rank < 2) fail("C requires rank >= 2");
      break;
    case Family::D:
      if (rank < 3) fail("D requires rank >= 3");
      break;
    case Family::E:
      if (rank < 6 || rank > 8) fail("E requires rank in {6, 7, 8}");
      break;
    case Family::F:
      if (rank != 4) fail("F requires rank 4");
      break;
    case Family::G:
      if (rank != 2) fail("G requires rank 2");
      break;
    default:
      fail("unknown family");
  }
  return LieType{family, rank};
}

LieType parse_lie_type(const std::string& token) {
  const auto fail = [&] {
    throw std::invalid_argument("cannot parse Lie type '" + token + "'");
  };
  if (token.size() < 2) fail();
  const char f = token[0];
  if (f < 'A' || f > 'G') fail();
  for (size_t i = 1; i < token.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(token[i]))) fail();
  int rank = 0;
  try {
    rank = std::stoi(token.substr(1));
  } catch (const std::exception&) {
    fail();
  }
  return make_lie_type(static_cast<Family>(f), rank);
}

std::string to_string(const LieType& type) {
  return std::string(1, static_cast<char>(type.family)) +
         std::to_string(type.rank);
}

Int dim_lie_algebra(const LieType& type) {
  const Int n = type.rank;
  switch (type.family) {
    case Family::A:
      return n * (n + 2);
    case Family::B:
    case Family::C:
      return n * (2 * n + 1);
    case Family::D:
      return n * (2 * n - 1);
    case Family::E:
      return n == 6 ? 78 : n == 7 ? 133 : 248;
    case Family::F:
      return 52;
    case Family::G:
      return 14;
  }
  throw std::logic_error("unreachable family");
}

bool operator==(const Root& a, const Root& b) { return a.c == b.c; }
bool operator!=(const Root& a, const Root& b) { return !(a == b); }
bool operator<(const Root& a, const Root& b) { return a.c < b.c; }

Int height(const Root& r) {
  return std::accumulate(r.c.begin(), r.c.end(), Int{0});
}

bool is_positive(const Root& r) {
  return std::all_of(r.c.begin(), r.c.end(), [](Int c) { return c >= 0; });
}

Root negate(const Root& r) {
  Root out = r;
  for (auto& c : out.c) c = -c;
  return out;
}

std::string to_string(const Root& r) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < r.c.size(); ++i) {
    if (i) os << ',';
    os << r.c[i];
  }
  os << ')';
  return os.str();
}

namespace {

// Cartan matrix in the row-equals-coroot convention together with the
// symmetrizing weights d_i = (a_i, a_i)/2.
struct CartanData {
  std::vector<Vec> cartan;
  Vec symmetrizer;
};

CartanData cartan_data(const LieType& type) {
  const int n = type.rank;
  std::vector<Vec> c(n, Vec(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  const auto edge = [&](int i, int j) {  // simply laced edge, 0-based
    c[i][j] = -1;
    c[j][i] = -1;
  };
  Vec d(n, 1);
  switch (type.family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
      break;
    case Family::B:
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
      c[n - 2][n - 1] = -1;
      c[n - 1][n - 2] = -2;
      for (int i = 0; i + 1 < n; ++i) d[i] = 2;
      break;
    case Family::C:
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
      c[n - 2][n - 1] = -2;
      c[n - 1][n - 2] = -1;
      d[n - 1] = 2;
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) edge(i, i + 1);
      edge(n - 3, n - 1);
      break;
    case Family::E:
      // chain 1-3-4-5-6(-7)(-8) with node 2 hanging off node 4
      edge(0, 2);
      for (int i = 2; i + 1 < n; ++i) edge(i, i + 1);
      edge(1, 3);
      break;
    case Family::F:
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
      c[1][2] = -1;
      c[2][1] = -2;
      d[0] = d[1] = 2;
      break;
    case Family::G:
      c[0][1] = -3;
      c[1][0] = -1;
      d[1] = 3;
      break;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (d[i] * c[i][j] != d[j] * c[j][i])
        throw std::logic_error("Cartan symmetrizer check failed for " +
                               to_string(type));
  return {std::move(c), std::move(d)};
}

Int pairing_raw(const std::vector<Vec>& cartan, const Vec& beta, int i) {
  Int p = 0;
  for (size_t j = 0; j < beta.size(); ++j) p += beta[j] * cartan[i][j];
  return p;
}

}  // namespace

RootSystem build_root_system(const LieType& type) {
  make_lie_type(type.family, type.rank);  // re-validate the bounds
  auto data = cartan_data(type);
  const int n = type.rank;

  std::set<Vec> found;
  std::vector<Vec> frontier;
  for (int i = 0; i < n; ++i) {
    Vec simple(n, 0);
    simple[i] = 1;
    found.insert(simple);
    frontier.push_back(std::move(simple));
  }

  // saturate upward in height: beta + a_i is a root iff the string of roots
  // below beta in the a_i direction is longer than pairing(beta, a_i)
  while (!frontier.empty()) {
    std::vector<Vec> next;
    for (const auto& beta : frontier)
      for (int i = 0; i < n; ++i) {
        Int down = 0;
        Vec probe = beta;
        for (;;) {
          probe[i] -= 1;
          if (!found.count(probe)) break;
          ++down;
        }
        if (down - pairing_raw(data.cartan, beta, i) <= 0) continue;
        Vec up = beta;
        up[i] += 1;
        if (found.insert(up).second) next.push_back(std::move(up));
      }
    frontier = std::move(next);
  }

  RootSystem rs;
  rs.type = type;
  rs.cartan = std::move(data.cartan);
  rs.symmetrizer = std::move(data.symmetrizer);
  rs.positive_roots.reserve(found.size());
  for (const auto& v : found) rs.positive_roots.push_back(Root{v});
  // Height-major order; within a height level, roots supported at lower
  // simple-root indices come first (alpha_1, alpha_2, ..., alpha_1+alpha_2, ...).
  std::sort(rs.positive_roots.begin(), rs.positive_roots.end(),
            [](const Root& a, const Root& b) {
              const Int ha = height(a), hb = height(b);
              return ha != hb ? ha < hb : b.c < a.c;
            });
  rs.positive_index = std::move(found);

  if (rs.dim_g() != dim_lie_algebra(type))
    throw std::logic_error("root enumeration of " + to_string(type) +
                           " disagrees with the dimension table");
  return rs;
}

bool is_root(const RootSystem& rs, const Vec& v) {
  if (rs.positive_index.count(v)) return true;
  Vec neg = v;
  for (auto& c : neg) c = -c;
  return rs.positive_index.count(neg) > 0;
}

std::optional<Root> add(const RootSystem& rs, const Root& a, const Root& b) {
  Vec sum(a.c.size());
  for (size_t i = 0; i < sum.size(); ++i) sum[i] = a.c[i] + b.c[i];
  if (!is_root(rs, sum)) return std::nullopt;
  return Root{std::move(sum)};
}

Int bilinear(const RootSystem& rs, const Vec& u, const Vec& v) {
  Int total = 0;
  for (size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) continue;
    for (size_t j = 0; j < v.size(); ++j)
      total += u[i] * v[j] * rs.symmetrizer[i] * rs.cartan[i][j];
  }
  return total;
}

Int pairing(const RootSystem& rs, const Root& beta, const Root& alpha) {
  const Int num = 2 * bilinear(rs, beta.c, alpha.c);
  const Int den = bilinear(rs, alpha.c, alpha.c);
  if (den == 0 || num % den != 0)
    throw std::logic_error("non-integral pairing of " + to_string(beta) +
                           " against " + to_string(alpha));
  return num / den;
}

}  // namespace rootcircles
