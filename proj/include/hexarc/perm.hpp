#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "hexarc/error.hpp"
#include "hexarc/graph.hpp"

namespace hexarc {

/// Permutation of {0..n-1} stored as an image table.
struct Perm {
  std::vector<int> img;

  Perm() = default;
  explicit Perm(std::vector<int> images) : img(std::move(images)) { validate(); }

  static Perm identity(int n) {
    Perm p;
    p.img.resize(n);
    std::iota(p.img.begin(), p.img.end(), 0);
    return p;
  }

  int degree() const { return static_cast<int>(img.size()); }
  int operator()(int x) const { return img[x]; }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (img[i] != i) return false;
    return true;
  }

  /// Composition applying *this first, then next.
  Perm then(const Perm& next) const {
    if (next.degree() != degree()) fail(Errc::degree_mismatch, "composing permutations of unequal degree");
    Perm r;
    r.img.resize(img.size());
    for (int i = 0; i < degree(); ++i) r.img[i] = next.img[img[i]];
    return r;
  }

  Perm inverse() const {
    Perm r;
    r.img.resize(img.size());
    for (int i = 0; i < degree(); ++i) r.img[img[i]] = i;
    return r;
  }

  friend bool operator==(const Perm& a, const Perm& b) { return a.img == b.img; }

private:
  void validate() const {
    std::vector<char> seen(img.size(), 0);
    for (int x : img) {
      if (x < 0 || x >= degree() || seen[x]) fail(Errc::bad_argument, "image table is not a bijection");
      seen[x] = 1;
    }
  }
};

/// True iff p maps the edge set of g onto itself.
inline bool preserves_adjacency(const Perm& p, const Graph& g) {
  if (p.degree() != g.vertex_count()) return false;
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v : g.neighbors(u)) {
      if (u > v) continue;
      if (!g.has_edge(p(u), p(v))) return false;
    }
  return true;
}

inline void require_common_degree(const std::vector<Perm>& gens, int degree) {
  for (const Perm& p : gens)
    if (p.degree() != degree)
      fail(Errc::degree_mismatch, "generator degree " + std::to_string(p.degree()) +
                                      " does not match " + std::to_string(degree));
}

}  // namespace hexarc
