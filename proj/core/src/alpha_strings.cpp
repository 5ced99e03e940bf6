#include "rootcircles/alpha_strings.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace rootcircles {

namespace {

bool vec_is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](Int c) { return c == 0; });
}

Vec vec_add(const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

void require_omitted(const Parabolic& p, const Root& r, const char* role) {
  if (is_root(p.rs, r.c) && grading_degree(p, r.c) < 0) return;
  throw std::invalid_argument(std::string(role) + " " + to_string(r) +
                              " is not an omitted root of the parabolic");
}

// Re-checks every structural invariant promised by AlphaString and fills in
// the derived fields.
AlphaString seal(const Root& alpha, std::vector<StringNode> nodes) {
  if (nodes.empty()) throw std::logic_error("empty alpha-string");
  std::sort(nodes.begin(), nodes.end(),
            [](const StringNode& a, const StringNode& b) {
              return a.weight > b.weight;
            });
  AlphaString s;
  s.alpha = alpha;
  s.n_s = 0;
  bool in_prefix = true;
  bool saw_zero = false;
  for (size_t i = 0; i < nodes.size(); ++i) {
    const auto& node = nodes[i];
    if (i > 0 && nodes[i - 1].weight - 2 != node.weight)
      throw std::logic_error("alpha-string weights do not step by 2");
    if ((node.tag == NodeTag::zero) != vec_is_zero(node.v))
      throw std::logic_error("zero tag out of line with the zero vector");
    if (node.tag == NodeTag::omitted) {
      if (!in_prefix)
        throw std::logic_error("omitted node outside the string prefix");
      ++s.n_s;
    } else {
      in_prefix = false;
    }
    if (node.tag == NodeTag::zero) saw_zero = true;
  }
  if (saw_zero &&
      (nodes.size() != 3 || s.n_s != 1 || nodes.front().v != alpha.c))
    throw std::logic_error("the zero vector may only split the alpha pair");
  if (s.n_s < 1)
    throw std::logic_error("alpha-string carries no omitted node");
  s.top_weight = nodes.front().weight;
  s.d_s = static_cast<Int>(nodes.size()) - s.n_s;
  if (s.d_s != s.top_weight - s.n_s + 1)
    throw std::logic_error("p-piece length disagrees with string symmetry");
  s.nodes = std::move(nodes);
  return s;
}

StringNode make_node(const Parabolic& p, const Root& alpha, Vec v) {
  StringNode node;
  node.weight = pairing(p.rs, Root{v}, alpha);
  if (vec_is_zero(v))
    node.tag = NodeTag::zero;
  else
    node.tag = grading_degree(p, v) < 0 ? NodeTag::omitted : NodeTag::parabolic;
  node.v = std::move(v);
  return node;
}

}  // namespace

AlphaString alpha_string_through(const Parabolic& p, const Root& alpha,
                                 const Root& beta) {
  require_omitted(p, alpha, "alpha");
  require_omitted(p, beta, "beta");

  // walk the maximal chain beta + t*alpha of roots, passing through the
  // zero vector (which occurs only between alpha and -alpha)
  std::vector<StringNode> nodes;
  nodes.push_back(make_node(p, alpha, beta.c));
  for (int sign : {+1, -1}) {
    Vec step = alpha.c;
    if (sign < 0)
      for (auto& c : step) c = -c;
    Vec v = vec_add(beta.c, step);
    while (is_root(p.rs, v) || vec_is_zero(v)) {
      nodes.push_back(make_node(p, alpha, v));
      v = vec_add(v, step);
    }
  }
  return seal(alpha, std::move(nodes));
}

std::vector<AlphaString> string_inventory(const Parabolic& p,
                                          const Root& alpha) {
  require_omitted(p, alpha, "alpha");

  std::map<Vec, size_t> position;
  for (size_t i = 0; i < p.omitted.size(); ++i)
    position.emplace(p.omitted[i].c, i);

  std::vector<AlphaString> inventory;
  std::set<Vec> covered;
  for (const auto& beta : p.omitted) {
    if (covered.count(beta.c)) continue;
    auto s = alpha_string_through(p, alpha, beta);
    for (const auto& node : s.nodes)
      if (node.tag == NodeTag::omitted) covered.insert(node.v);
    inventory.push_back(std::move(s));
  }
  std::sort(inventory.begin(), inventory.end(),
            [&](const AlphaString& a, const AlphaString& b) {
              return position.at(a.nodes.front().v) <
                     position.at(b.nodes.front().v);
            });
  return inventory;
}

Int oracle_degree(const AlphaString& s) { return s.top_weight - s.n_s + 1; }

}  // namespace rootcircles
