#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "griess/lattice/lattice.hpp"

namespace griess::lat {

/// All vectors of a fixed norm in a lattice, sorted lexicographically by
/// ambient coordinates.
struct Shell {
  std::string label;
  long long norm = 0;
  std::vector<AmbientVec> vectors;

  std::size_t size() const { return vectors.size(); }
};

/// Fincke-Pohst enumeration of {v in l : <v,v> = norm}. The quadratic form is
/// completed exactly over Q, so pruning never loses a vector.
Shell enumerate_shell(const Lattice& l, long long norm);

/// Canonical text form: header `griess-lab-shell v1 <label> <norm> <count>`,
/// then one vector per line.
std::string serialize_shell(const Shell& s);
std::optional<Shell> parse_shell(const std::string& text);

/// On-disk shell store keyed by (label, norm). An empty directory path
/// disables persistence.
class ShellCache {
 public:
  ShellCache() = default;
  explicit ShellCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  bool enabled() const { return !dir_.empty(); }
  const std::filesystem::path& dir() const { return dir_; }

  std::optional<Shell> load(const std::string& label, long long norm) const;
  void store(const Shell& s) const;

  struct Entry {
    std::string label;
    long long norm;
    std::size_t count;
    std::filesystem::path file;
  };
  std::vector<Entry> list() const;
  std::size_t clear() const;

  std::filesystem::path path_for(const std::string& label, long long norm) const;

 private:
  std::filesystem::path dir_;
};

/// Loads from the cache when present, otherwise enumerates and stores.
Shell shell(const Lattice& l, long long norm, const ShellCache* cache = nullptr);

}  // namespace griess::lat
