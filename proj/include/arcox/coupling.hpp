#ifndef ARCOX_COUPLING_HPP
#define ARCOX_COUPLING_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arcox/systems.hpp"

namespace arcox {

// The directed graph on S with an edge s -> phi(s) for each s in S'.
// In- and out-degrees are at most 1, so it decomposes into vertex-disjoint
// loops and (possibly length-0) paths covering every vertex exactly once.
struct CouplingGraph {
  int n = 0;                            // |S|
  std::vector<std::optional<int>> next;  // phi, as successor per vertex
  std::vector<std::optional<int>> prev;  // phi^{-1}
  std::vector<std::vector<int>> loops;   // vertex cycles, in edge order
  std::vector<std::vector<int>> paths;   // vertex chains; singleton = length 0

  int max_path_length() const;  // edge count of the longest path (0 if none)
};

CouplingGraph build_coupling_graph(const ArtinSystem& system,
                                   const LabelPreservingBijection& phi);

// k is admissible iff it is a positive common multiple of every loop length
// and strictly greater than twice every path length.
bool k_is_valid(const CouplingGraph& coupling, int k);

// The minimal admissible k.
int compute_k(const CouplingGraph& coupling);

// The k-fold cover of the coupling graph on Z/k x S, with its component
// partition (the quotient generating set), the per-level embeddings psi_i,
// and deterministic component names "<gen>.<level>" taken from the
// lexicographically least member (level first, then generator order).
struct CoverGraph {
  int k = 0;
  int n = 0;  // |S|; cover vertex (i,s) has flat index i*n + s

  std::vector<int> component;               // flat vertex -> class index
  std::vector<std::vector<int>> members;    // class -> sorted flat vertices
  std::vector<std::string> class_names;     // class -> name
  std::vector<std::vector<int>> psi;        // psi[i][s] -> class index

  int num_classes() const { return static_cast<int>(members.size()); }
  int flat(int level, int gen) const { return level * n + gen; }
  int level_of(int flat_vertex) const { return flat_vertex / n; }   // p
  int gen_of(int flat_vertex) const { return flat_vertex % n; }     // pi

  // The unique generator of a class at a given level, if the class has a
  // member there (at most one, since p is injective on components).
  std::optional<int> member_at_level(int cls, int level) const;
};

// Builds the cover and verifies the structural invariants: covering-map
// edge counts, injectivity of p on every component, injectivity of every
// psi_i. Rejects inadmissible k as a caller error; invariant violations
// surface as internal errors.
CoverGraph build_cover(const ArtinSystem& system, const CouplingGraph& coupling,
                       int k);

// The induced label function on component pairs. Finite labels stored with
// class-index keys (i,j), i < j; absent pairs read as inf.
struct LabelFunction {
  int num_classes = 0;
  std::map<std::pair<int, int>, int> finite;

  int label(int x, int y) const;
  std::set<int> label_set() const;  // over all class pairs
};

// Scans every level for witness pairs and assigns m(s,t) to the class pair
// {psi_i(s), psi_i(t)}; all witnesses for one pair must agree. Disagreement
// (impossible for a label-preserving phi) raises ErrorCode::label_conflict
// naming the pair and both labels.
LabelFunction build_label_function(const ArtinSystem& system,
                                   const CoverGraph& cover);

}  // namespace arcox

#endif
