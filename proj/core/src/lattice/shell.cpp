#include "griess/lattice/shell.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace griess::lat {
namespace {

struct Enumerator {
  std::size_t n;
  // q(i,i) are the squared pivots of the completed form, q(i,j), j > i, the
  // coefficients of x_j inside the i-th square.
  RatMatrix q;
  Rational target;
  std::vector<long long> x;
  std::vector<std::vector<long long>> hits;

  void run(std::size_t level, const Rational& used) {
    const std::size_t i = level;
    Rational center;
    for (std::size_t j = i + 1; j < n; ++j)
      if (x[j] != 0 && !q(i, j).is_zero()) center -= q(i, j) * Rational(x[j]);
    Rational budget = target - used;
    double radius = std::sqrt(std::max(0.0, (budget / q(i, i)).to_double()));
    double c = center.to_double();
    auto lo = static_cast<long long>(std::floor(c - radius)) - 1;
    auto hi = static_cast<long long>(std::ceil(c + radius)) + 1;
    for (long long v = lo; v <= hi; ++v) {
      Rational d = Rational(v) - center;
      Rational term = q(i, i) * d * d;
      if (term > budget) continue;
      x[i] = v;
      Rational next = used + term;
      if (i == 0) {
        if (next == target) hits.push_back(x);
      } else {
        run(i - 1, next);
      }
    }
    x[i] = 0;
  }
};

RatMatrix complete_square(const RatMatrix& g) {
  const std::size_t n = g.rows();
  RatMatrix q(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational d = g(i, i);
    for (std::size_t k = 0; k < i; ++k) d -= q(k, k) * q(k, i) * q(k, i);
    if (d.sign() <= 0) throw std::invalid_argument("enumerate_shell: Gram matrix is not positive definite");
    q(i, i) = d;
    for (std::size_t j = i + 1; j < n; ++j) {
      Rational s = g(i, j);
      for (std::size_t k = 0; k < i; ++k) s -= q(k, k) * q(k, i) * q(k, j);
      q(i, j) = s / d;
    }
  }
  return q;
}

std::string safe_name(const std::string& label) {
  std::string out;
  for (char ch : label) out += (std::isalnum(static_cast<unsigned char>(ch)) || ch == '-' || ch == '_') ? ch : '_';
  return out;
}

}  // namespace

Shell enumerate_shell(const Lattice& l, long long norm) {
  if (norm < 0) throw std::invalid_argument("enumerate_shell: negative norm");
  Shell out{l.label(), norm, {}};
  if (l.rank() == 0) {
    if (norm == 0) out.vectors.emplace_back(l.ambient_dim());
    return out;
  }
  Enumerator e{l.rank(), complete_square(l.gram()), Rational(norm), std::vector<long long>(l.rank(), 0), {}};
  e.run(l.rank() - 1, Rational(0));
  out.vectors.reserve(e.hits.size());
  for (const auto& x : e.hits) {
    num::Vec<Rational> coords(x.begin(), x.end());
    out.vectors.push_back(l.from_coordinates(coords));
  }
  std::sort(out.vectors.begin(), out.vectors.end());
  return out;
}

std::string serialize_shell(const Shell& s) {
  std::ostringstream os;
  os << "griess-lab-shell v1 " << s.label << ' ' << s.norm << ' ' << s.vectors.size() << '\n';
  for (const auto& v : s.vectors) {
    for (std::size_t k = 0; k < v.size(); ++k) os << (k ? " " : "") << v[k];
    os << '\n';
  }
  return os.str();
}

std::optional<Shell> parse_shell(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line)) return std::nullopt;
  std::istringstream head(line);
  std::string magic, version;
  Shell s;
  std::size_t count = 0;
  if (!(head >> magic >> version >> s.label >> s.norm >> count)) return std::nullopt;
  if (magic != "griess-lab-shell" || version != "v1") return std::nullopt;
  std::size_t dim = 0;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    AmbientVec v;
    std::string tok;
    try {
      while (row >> tok) v.push_back(Rational::parse(tok));
    } catch (const std::exception&) {
      return std::nullopt;
    }
    if (s.vectors.empty()) dim = v.size();
    if (v.size() != dim) return std::nullopt;
    s.vectors.push_back(std::move(v));
  }
  if (s.vectors.size() != count) return std::nullopt;
  return s;
}

std::filesystem::path ShellCache::path_for(const std::string& label, long long norm) const {
  return dir_ / (safe_name(label) + "_" + std::to_string(norm) + ".shell");
}

std::optional<Shell> ShellCache::load(const std::string& label, long long norm) const {
  if (!enabled()) return std::nullopt;
  std::ifstream in(path_for(label, norm));
  if (!in) return std::nullopt;
  std::stringstream buf;
  buf << in.rdbuf();
  auto s = parse_shell(buf.str());
  if (!s || s->label != label || s->norm != norm) return std::nullopt;
  return s;
}

void ShellCache::store(const Shell& s) const {
  if (!enabled()) return;
  std::filesystem::create_directories(dir_);
  auto target = path_for(s.label, s.norm);
  auto tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    out << serialize_shell(s);
  }
  std::filesystem::rename(tmp, target);
}

std::vector<ShellCache::Entry> ShellCache::list() const {
  std::vector<Entry> out;
  if (!enabled() || !std::filesystem::is_directory(dir_)) return out;
  for (const auto& f : std::filesystem::directory_iterator(dir_)) {
    if (!f.is_regular_file()) continue;
    std::ifstream in(f.path());
    std::string magic, version, label;
    long long norm = 0;
    std::size_t count = 0;
    if (in >> magic >> version >> label >> norm >> count && version == "v1")
      out.push_back({magic == "griess-lab-shell" ? label : magic + ":" + label, norm, count, f.path()});
  }
  std::sort(out.begin(), out.end(), [](const Entry& a, const Entry& b) {
    return std::tie(a.label, a.norm) < std::tie(b.label, b.norm);
  });
  return out;
}

std::size_t ShellCache::clear() const {
  if (!enabled() || !std::filesystem::is_directory(dir_)) return 0;
  std::size_t n = 0;
  for (const auto& f : std::filesystem::directory_iterator(dir_)) {
    if (f.is_regular_file()) {
      std::filesystem::remove(f.path());
      ++n;
    }
  }
  return n;
}

Shell shell(const Lattice& l, long long norm, const ShellCache* cache) {
  if (cache) {
    if (auto s = cache->load(l.label(), norm); s && (s->vectors.empty() || s->vectors.front().size() == l.ambient_dim()))
      return *s;
  }
  Shell s = enumerate_shell(l, norm);
  if (cache) cache->store(s);
  return s;
}

}  // namespace griess::lat
