#ifndef ARCOX_PRESENTATIONS_HPP
#define ARCOX_PRESENTATIONS_HPP

#include <string>
#include <vector>

#include "arcox/coupling.hpp"
#include "arcox/systems.hpp"
#include "arcox/word.hpp"

namespace arcox {

// Why a relator is present. Carried alongside each relator so consumers can
// tell structural relators (tree identifications, stable-letter conjugation)
// from group-theoretic ones.
enum class RelatorTag {
  artin,               // alternating-product relator of a labeled pair
  involution,          // s^2
  hnn,                 // t^-1 s t phi(s)^-1
  tree_identification, // both attached images of an edge generator coincide
  stable_letter,       // conjugation by a stable letter across an edge
};

const char* relator_tag_name(RelatorTag tag);

// A finite presentation: named generators and relator words over their
// indices. tags runs parallel to relators.
struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;
  std::vector<RelatorTag> tags;

  void add(Word relator, RelatorTag tag);
  int index_of(const std::string& name) const;  // -1 if absent

  bool operator==(const Presentation&) const = default;
};

// True when the word's cyclic core is empty or coincides with one of the
// relators up to rotation and inversion — triviality visible without any
// search.
bool is_structural_consequence(const Presentation& p, const Word& w);

// Equality of relator lists as (tag, word) multisets.
bool same_relators(const Presentation& a, const Presentation& b);

// x y x y ... with m letters.
Word braid_word(int x, int y, int m);

// The relation "xyx... = yxy..." (m letters each side), flattened.
Word braid_relator(int x, int y, int m);

// Presentation of A(S,m), or of W(S,m) when the system kind is coxeter:
// one braid relator per finite-labeled pair i < j in lexicographic order,
// then (coxeter only) one involution per generator.
Presentation artin_presentation(const ArtinSystem& system);

// "t" unless a generator already uses it, then "t@".
std::string stable_letter_name(const ArtinSystem& system);

// Presentation of the HNN-extension of the system's group along phi: base
// generators plus the stable letter (last), base relators plus
// t^-1 s t phi(s)^-1 for each pair of phi in input order.
Presentation hnn_presentation(const ArtinSystem& system,
                              const LabelPreservingBijection& phi);

// --- Graphs of groups -------------------------------------------------

struct GogVertex {
  std::string id;
  Presentation group;
};

// An oriented edge with its edge group and the two attaching maps, given as
// the images of each edge-group generator in the endpoint vertex groups
// (words over the respective vertex presentations).
struct GogEdge {
  std::string id;
  int from = 0;
  int to = 0;
  Presentation group;
  std::vector<Word> attach_init;  // into vertices[from]
  std::vector<Word> attach_term;  // into vertices[to]
  bool in_tree = false;
};

struct GraphOfGroups {
  std::vector<GogVertex> vertices;
  std::vector<GogEdge> edges;
};

// Fundamental group relative to the marked spanning tree. Vertex generators
// are renamed "g@v" (v the vertex id); every non-tree edge e contributes a
// stable letter "t@e" (primed until unique). Relators: every vertex relator
// (original tags), then per edge, per edge-group generator x with attached
// images a(x), w(x):
//   tree edge:      a(x) w(x)^-1
//   non-tree edge:  t^-1 a(x) t w(x)^-1
// Rejects graphs whose marked edges are not a spanning tree.
Presentation fundamental_group(const GraphOfGroups& gog);

// --- Enlarged target groups -------------------------------------------

// The group the kernel embeds into: generated by the classes of the cover
// and one extra letter per level, each extra letter commuting with the
// level-i images of the domain of phi. For a coxeter-kind input the class
// generators are involutions but the extra letters are not, so the
// presentation is not artin_presentation(system); the system still carries
// the full label function.
struct ArtinTarget {
  ArtinSystem system;         // classes first, then stable letters
  Presentation presentation;
  int first_stable = 0;       // index of the first stable letter
  int k = 0;

  int num_classes() const { return first_stable; }
};

ArtinTarget target_artin(const ArtinSystem& system,
                         const LabelPreservingBijection& phi,
                         const CoverGraph& cover, const LabelFunction& mbar);

// Coxeter doubling of the target: each stable letter t@i becomes a product
// u@i u'@i of fresh involutions, each commuting with exactly the classes
// t@i commuted with, with an infinite label between u@i and u'@i. The
// result is a genuine Coxeter system; theta_images spells out the
// homomorphism from the target (classes fixed, t@i -> u@i u'@i).
struct CoxeterTarget {
  ArtinSystem system;
  Presentation presentation;
  int first_double = 0;            // index of u@0
  std::vector<Word> theta_images;  // per target generator, over `system`
};

CoxeterTarget target_coxeter(const ArtinTarget& target);

}  // namespace arcox

#endif
