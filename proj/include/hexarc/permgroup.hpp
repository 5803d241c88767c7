#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "hexarc/error.hpp"
#include "hexarc/perm.hpp"

namespace hexarc {

/// Base and strong generating set built by deterministic Schreier-Sims with
/// explicit transversals. Exactness is re-verified after every construction:
/// all original generators and all Schreier generators must sift to the
/// identity, so order/membership/stabilizer queries are certified, not
/// heuristic. An initial base may be prescribed; points the group fixes keep
/// their levels (with trivial orbits) so level indices always line up with
/// the prescribed prefix.
class StabilizerChain {
public:
  StabilizerChain(int degree, const std::vector<Perm>& generators,
                  const std::vector<int>& prescribed_base = {})
      : degree_(degree) {
    if (degree <= 0) fail(Errc::bad_argument, "degree must be positive");
    require_common_degree(generators, degree);
    for (int b : prescribed_base) {
      if (b < 0 || b >= degree) fail(Errc::bad_vertex, "prescribed base point out of range");
      for (const Level& lv : levels_)
        if (lv.base_point == b) fail(Errc::bad_argument, "duplicate prescribed base point");
      push_level(b);
    }
    for (const Perm& g : generators) add_generator(g);
    if (!verify()) fail(Errc::validation_failed, "stabilizer chain failed verification");
  }

  int degree() const { return degree_; }
  int level_count() const { return static_cast<int>(levels_.size()); }

  std::vector<int> base() const {
    std::vector<int> b;
    for (const Level& lv : levels_) b.push_back(lv.base_point);
    return b;
  }

  long long order() const {
    long long ord = 1;
    for (const Level& lv : levels_) {
      if (__builtin_mul_overflow(ord, static_cast<long long>(lv.orbit.size()), &ord))
        fail(Errc::bad_argument, "group order overflows 64 bits");
    }
    return ord;
  }

  bool contains(const Perm& g) const {
    if (g.degree() != degree_) fail(Errc::degree_mismatch, "membership test with wrong degree");
    Perm residue = g;
    return sift(residue) == level_count() && residue.is_identity();
  }

  /// Adds a generator, restoring exactness; returns true if the group grew.
  bool add_generator(const Perm& g) {
    if (g.degree() != degree_) fail(Errc::degree_mismatch, "generator degree mismatch");
    original_gens_.push_back(g);
    Perm residue = g;
    int lvl = sift(residue);
    if (lvl == level_count()) {
      if (residue.is_identity()) return false;
      // fixes the whole base: extend it with the first moved point
      for (int x = 0; x < degree_; ++x)
        if (residue(x) != x) {
          push_level(x);
          break;
        }
    }
    place(residue, lvl);
    settle();
    return true;
  }

  /// Strong generators fixing base[0..level-1] pointwise; they generate that
  /// pointwise stabilizer exactly.
  std::vector<Perm> level_generators(int level) const {
    std::vector<Perm> out;
    for (const StrongGen& sg : sgens_)
      if (sg.level >= level) out.push_back(sg.perm);
    return out;
  }

  long long stabilizer_order(int level) const {
    long long ord = 1;
    for (int i = level; i < level_count(); ++i)
      ord *= static_cast<long long>(levels_[i].orbit.size());
    return ord;
  }

  const std::vector<int>& basic_orbit(int level) const { return levels_[level].orbit; }

  /// Element mapping base[level] to point, if point is in the basic orbit.
  std::optional<Perm> transversal_element(int level, int point) const {
    const Level& lv = levels_[level];
    int idx = lv.pos[point];
    if (!idx) return std::nullopt;
    return lv.transversal[idx - 1];
  }

  /// Re-checks the defining property of the chain from scratch.
  bool verify() const {
    for (const StrongGen& sg : sgens_) {
      for (int j = 0; j < sg.level; ++j)
        if (sg.perm(levels_[j].base_point) != levels_[j].base_point) return false;
    }
    for (const Perm& g : original_gens_)
      if (!contains(g)) return false;
    for (int j = 0; j < level_count(); ++j) {
      const Level& lv = levels_[j];
      for (std::size_t i = 0; i < lv.orbit.size(); ++i) {
        if (lv.transversal[i](lv.base_point) != lv.orbit[i]) return false;
        for (int gi : lv.gen_idx) {
          const Perm& s = sgens_[gi].perm;
          int image = s(lv.orbit[i]);
          int idx = lv.pos[image];
          if (!idx) return false;  // orbit not closed
          Perm schreier = lv.transversal[i].then(s).then(inv_transversal_[j][idx - 1]);
          Perm residue = schreier;
          if (sift_from(residue, j + 1) != level_count() || !residue.is_identity()) return false;
        }
      }
    }
    return true;
  }

private:
  struct StrongGen {
    Perm perm;
    int level;  // fixes base[0..level-1]
  };
  struct Level {
    int base_point = 0;
    std::vector<int> orbit;        // discovery order, orbit[0] == base_point
    std::vector<int> pos;          // point -> index+1 in orbit, 0 = absent
    std::vector<Perm> transversal;  // transversal[i](base_point) == orbit[i]
    std::vector<int> gen_idx;      // indices into sgens_ of gens acting at this level
    std::deque<std::pair<int, int>> pending;  // (orbit index, gen_idx slot) to process
  };

  void push_level(int base_point) {
    Level lv;
    lv.base_point = base_point;
    lv.orbit = {base_point};
    lv.pos.assign(degree_, 0);
    lv.pos[base_point] = 1;
    lv.transversal = {Perm::identity(degree_)};
    levels_.push_back(std::move(lv));
    inv_transversal_.push_back({Perm::identity(degree_)});
  }

  int sift(Perm& g) const { return sift_from(g, 0); }

  int sift_from(Perm& g, int start) const {
    for (int j = start; j < level_count(); ++j) {
      const Level& lv = levels_[j];
      int x = g(lv.base_point);
      int idx = lv.pos[x];
      if (!idx) return j;
      g = g.then(inv_transversal_[j][idx - 1]);
    }
    return level_count();
  }

  /// Registers a nontrivial residue as a strong generator at the given level
  /// and queues the new Schreier work it creates at every level it touches.
  void place(const Perm& residue, int level) {
    int gi = static_cast<int>(sgens_.size());
    sgens_.push_back({residue, level});
    for (int j = 0; j <= level && j < level_count(); ++j) {
      Level& lv = levels_[j];
      int slot = static_cast<int>(lv.gen_idx.size());
      lv.gen_idx.push_back(gi);
      for (std::size_t i = 0; i < lv.orbit.size(); ++i)
        lv.pending.emplace_back(static_cast<int>(i), slot);
    }
  }

  /// Processes pending (orbit point, generator) pairs, deepest level first,
  /// until every basic orbit is closed and every Schreier generator sifts to
  /// the identity.
  void settle() {
    while (true) {
      int j = -1;
      for (int i = level_count() - 1; i >= 0; --i)
        if (!levels_[i].pending.empty()) {
          j = i;
          break;
        }
      if (j < 0) return;
      Level& lv = levels_[j];
      auto [oi, slot] = lv.pending.front();
      lv.pending.pop_front();
      const Perm& s = sgens_[lv.gen_idx[slot]].perm;
      int image = s(lv.orbit[oi]);
      int idx = lv.pos[image];
      if (!idx) {
        // new orbit point: extend transversal, queue it against all gens
        Perm t = lv.transversal[oi].then(s);
        lv.orbit.push_back(image);
        lv.pos[image] = static_cast<int>(lv.orbit.size());
        inv_transversal_[j].push_back(t.inverse());
        lv.transversal.push_back(std::move(t));
        int ni = static_cast<int>(lv.orbit.size()) - 1;
        for (int gslot = 0; gslot < static_cast<int>(lv.gen_idx.size()); ++gslot)
          lv.pending.emplace_back(ni, gslot);
        continue;  // Schreier generator is the identity by construction
      }
      Perm schreier = lv.transversal[oi].then(s).then(inv_transversal_[j][idx - 1]);
      Perm residue = schreier;
      int lvl = sift_from(residue, j + 1);
      if (lvl == level_count()) {
        if (residue.is_identity()) continue;
        for (int x = 0; x < degree_; ++x)
          if (residue(x) != x) {
            push_level(x);
            break;
          }
      }
      place(residue, lvl);
    }
  }

  int degree_;
  std::vector<Level> levels_;
  std::vector<std::vector<Perm>> inv_transversal_;  // aligned with levels_[j].transversal
  std::vector<StrongGen> sgens_;
  std::vector<Perm> original_gens_;
};

/// Orbit of a point under the group generated by gens, sorted ascending.
inline std::vector<int> orbit(int degree, const std::vector<Perm>& gens, int point) {
  if (point < 0 || point >= degree) fail(Errc::bad_vertex, "orbit point out of range");
  require_common_degree(gens, degree);
  std::vector<int> seen(degree, 0), frontier{point};
  seen[point] = 1;
  for (std::size_t h = 0; h < frontier.size(); ++h)
    for (const Perm& g : gens) {
      int y = g(frontier[h]);
      if (!seen[y]) {
        seen[y] = 1;
        frontier.push_back(y);
      }
    }
  std::sort(frontier.begin(), frontier.end());
  return frontier;
}

inline bool is_transitive(int degree, const std::vector<Perm>& gens) {
  return static_cast<int>(orbit(degree, gens, 0).size()) == degree;
}

/// Orbits of the generated group, each sorted, ordered by least element.
inline std::vector<std::vector<int>> orbit_partition(int degree, const std::vector<Perm>& gens) {
  require_common_degree(gens, degree);
  std::vector<int> seen(degree, 0);
  std::vector<std::vector<int>> blocks;
  for (int p = 0; p < degree; ++p) {
    if (seen[p]) continue;
    std::vector<int> block{p};
    seen[p] = 1;
    for (std::size_t h = 0; h < block.size(); ++h)
      for (const Perm& g : gens) {
        int y = g(block[h]);
        if (!seen[y]) {
          seen[y] = 1;
          block.push_back(y);
        }
      }
    std::sort(block.begin(), block.end());
    blocks.push_back(std::move(block));
  }
  return blocks;
}

/// True iff only the identity of the generated group fixes a point, checked
/// via orbit sizes: stabilizers are conjugate along an orbit, so each orbit
/// must have the full group order as its size.
inline bool is_semiregular(int degree, const std::vector<Perm>& gens) {
  StabilizerChain chain(degree, gens);
  long long ord = chain.order();
  for (const auto& block : orbit_partition(degree, gens))
    if (static_cast<long long>(block.size()) != ord) return false;
  return true;
}

/// Finitely generated permutation group with a verified stabilizer chain.
class PermGroup {
public:
  PermGroup(int degree, std::vector<Perm> generators)
      : degree_(degree), gens_(std::move(generators)), chain_(degree, gens_) {}

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  const StabilizerChain& chain() const { return chain_; }

  long long order() const { return chain_.order(); }
  bool contains(const Perm& g) const { return chain_.contains(g); }
  bool transitive() const { return is_transitive(degree_, gens_); }

  /// Chain rebuilt with the given base prefix (pointwise stabilizers of the
  /// prefix are then read off level by level).
  StabilizerChain chain_with_base(const std::vector<int>& prefix) const {
    return StabilizerChain(degree_, gens_, prefix);
  }

  PermGroup point_stabilizer(int v) const {
    if (v < 0 || v >= degree_) fail(Errc::bad_vertex, "stabilizer point out of range");
    StabilizerChain rooted = chain_with_base({v});
    std::vector<Perm> stab_gens = rooted.level_generators(1);
    if (stab_gens.empty()) stab_gens.push_back(Perm::identity(degree_));
    return PermGroup(degree_, std::move(stab_gens));
  }

private:
  int degree_;
  std::vector<Perm> gens_;
  StabilizerChain chain_;
};

/// Orbit of the stabilizer of base_point; the suborbits of a fixed base
/// point partition the whole point set.
struct Suborbit {
  int base_point = 0;
  std::vector<int> points;  // sorted

  int length() const { return static_cast<int>(points.size()); }
};

/// Suborbits of G at v, sorted by (length, least element). G must be
/// transitive.
inline std::vector<Suborbit> suborbits(const PermGroup& G, int v) {
  if (!G.transitive()) fail(Errc::not_transitive, "suborbits require a transitive group");
  StabilizerChain rooted = G.chain_with_base({v});
  std::vector<Perm> stab = rooted.level_generators(1);
  std::vector<std::vector<int>> blocks = orbit_partition(G.degree(), stab);
  std::sort(blocks.begin(), blocks.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.front() < b.front();
  });
  std::vector<Suborbit> out;
  out.reserve(blocks.size());
  for (auto& b : blocks) out.push_back(Suborbit{v, std::move(b)});
  return out;
}

/// Undirected orbital graph: the G-orbit of the pair {v, w} for w in the
/// given suborbit. The orbital must be self-paired; a non-self-paired one
/// would require a digraph and is rejected. The result can be disconnected
/// (e.g. a distance-2 orbital of a bipartite graph), so connectivity is not
/// enforced here.
inline Graph orbital_graph(const PermGroup& G, int v, const Suborbit& sub) {
  int n = G.degree();
  if (v < 0 || v >= n) fail(Errc::bad_vertex, "orbital base vertex out of range");
  if (sub.base_point != v) fail(Errc::not_suborbit, "suborbit belongs to a different base point");
  if (sub.points.empty()) fail(Errc::not_suborbit, "empty suborbit");
  if (sub.points.size() == 1 && sub.points[0] == v)
    fail(Errc::bad_argument, "the trivial suborbit gives only loops, not a graph");
  if (!G.transitive()) fail(Errc::not_transitive, "orbital graphs require a transitive group");

  StabilizerChain rooted = G.chain_with_base({v});
  std::vector<int> check = orbit(n, rooted.level_generators(1), sub.points[0]);
  if (check != sub.points) fail(Errc::not_suborbit, "point set is not a suborbit of the base vertex");

  // self-pairedness: with g mapping v to w, v must land inside g(sub)
  int w0 = sub.points[0];
  std::optional<Perm> g0 = rooted.transversal_element(0, w0);
  if (!g0) fail(Errc::not_transitive, "no group element maps the base vertex to the suborbit");
  bool paired = false;
  for (int x : sub.points)
    if ((*g0)(x) == v) {
      paired = true;
      break;
    }
  if (!paired) fail(Errc::not_self_paired, "orbital is not self-paired");

  auto key = [n](int a, int b) {
    if (a > b) std::swap(a, b);
    return static_cast<std::int64_t>(a) * n + b;
  };
  std::unordered_set<std::int64_t> seen;
  std::vector<std::pair<int, int>> edges, frontier{{std::min(v, w0), std::max(v, w0)}};
  seen.insert(key(v, w0));
  for (std::size_t h = 0; h < frontier.size(); ++h) {
    auto [a, b] = frontier[h];
    edges.emplace_back(a, b);
    for (const Perm& g : G.generators()) {
      int ia = g(a), ib = g(b);
      if (seen.insert(key(ia, ib)).second)
        frontier.emplace_back(std::min(ia, ib), std::max(ia, ib));
    }
  }
  std::sort(edges.begin(), edges.end());
  return Graph::from_edges(n, edges, /*require_connected=*/false);
}

}  // namespace hexarc
