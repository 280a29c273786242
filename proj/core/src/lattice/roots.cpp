#include "griess/lattice/roots.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace griess::lat {
namespace {

bool is_positive(const AmbientVec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return x.sign() > 0;
  return false;
}

std::vector<std::vector<std::size_t>> components(const RatMatrix& c) {
  const std::size_t n = c.rows();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> members{s};
    comp[s] = static_cast<int>(out.size());
    for (std::size_t k = 0; k < members.size(); ++k)
      for (std::size_t j = 0; j < n; ++j)
        if (comp[j] < 0 && !c(members[k], j).is_zero()) {
          comp[j] = comp[s];
          members.push_back(j);
        }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

}  // namespace

std::string RootSystemInfo::label() const {
  if (!has_roots) return "no roots";
  return spans ? type : "not simply-laced root lattice";
}

std::string ade_label(const RatMatrix& c) {
  const std::size_t n = c.rows();
  if (n == 0) return {};
  std::vector<std::vector<std::size_t>> adj(n);
  std::size_t edges = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (c(i, i) != Rational(2)) return {};
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || c(i, j).is_zero()) continue;
      if (c(i, j) != Rational(-1)) return {};
      adj[i].push_back(j);
      if (i < j) ++edges;
    }
  }
  if (edges != n - 1) return {};  // connected simply-laced Dynkin diagrams are trees
  std::vector<std::size_t> branch;
  for (std::size_t i = 0; i < n; ++i) {
    if (adj[i].size() > 3) return {};
    if (adj[i].size() == 3) branch.push_back(i);
  }
  if (branch.empty()) return "A" + std::to_string(n);
  if (branch.size() > 1) return {};
  const std::size_t center = branch.front();
  std::vector<std::size_t> arms;
  for (std::size_t start : adj[center]) {
    std::size_t len = 1, prev = center, cur = start;
    while (adj[cur].size() == 2) {
      std::size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return "D" + std::to_string(n);
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return "E" + std::to_string(n);
  return {};
}

RootSystemInfo root_system_type_from_roots(const Lattice& l, const std::vector<AmbientVec>& roots) {
  RootSystemInfo info;
  info.root_count = roots.size();
  if (roots.empty()) {
    info.type = "no roots";
    return info;
  }
  info.has_roots = true;
  std::vector<AmbientVec> pos;
  for (const auto& r : roots)
    if (is_positive(r)) pos.push_back(r);
  std::set<AmbientVec> sums;
  for (std::size_t i = 0; i < pos.size(); ++i)
    for (std::size_t j = i + 1; j < pos.size(); ++j) sums.insert(add(pos[i], pos[j]));
  for (const auto& p : pos)
    if (!sums.count(p)) info.simple_roots.push_back(p);

  const std::size_t r = info.simple_roots.size();
  info.cartan = RatMatrix(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) info.cartan(i, j) = inner(info.simple_roots[i], info.simple_roots[j]);

  std::vector<std::string> labels;
  for (const auto& comp : components(info.cartan)) {
    RatMatrix sub(comp.size(), comp.size());
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (std::size_t j = 0; j < comp.size(); ++j) sub(i, j) = info.cartan(comp[i], comp[j]);
    std::string lab = ade_label(sub);
    labels.push_back(lab.empty() ? "?" : lab);
  }
  std::sort(labels.begin(), labels.end());
  for (std::size_t i = 0; i < labels.size(); ++i) info.type += (i ? "+" : "") + labels[i];

  info.spans = r == l.rank() && num::determinant(info.cartan) == l.det();
  return info;
}

RootSystemInfo root_system_type(const Lattice& l, const ShellCache* cache) {
  if (!l.is_integral()) throw std::invalid_argument("root_system_type: lattice is not integral");
  return root_system_type_from_roots(l, shell(l, 2, cache).vectors);
}

}  // namespace griess::lat
