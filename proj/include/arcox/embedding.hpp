#ifndef ARCOX_EMBEDDING_HPP
#define ARCOX_EMBEDDING_HPP

#include <optional>
#include <vector>

#include "arcox/coupling.hpp"
#include "arcox/presentations.hpp"
#include "arcox/report.hpp"
#include "arcox/systems.hpp"
#include "arcox/word.hpp"

namespace arcox {

// A homomorphism between presented groups, given on generators. Whether it
// respects the source relators is the verify module's business.
struct Homomorphism {
  Presentation source;
  Presentation target;
  std::vector<Word> images;  // per source generator, a word over target

  Word apply(const Word& w) const;
};

// outer ∘ inner; inner's target and outer's source must line up.
Homomorphism compose(const Homomorphism& outer, const Homomorphism& inner);

// The index-k kernel subgroup of the extension: the kernel of the
// stable-letter exponent sum taken mod k.
struct SubgroupDescription {
  Presentation ambient;              // hnn_presentation(system, phi)
  int stable = 0;                    // index of the stable letter in ambient
  int k = 1;
  std::vector<Word> transversal;     // {1, t, t^2, ..., t^(k-1)}
  Presentation subgroup;             // fundamental group of the k-cycle graph
  std::vector<Word> generator_words; // per subgroup generator, over ambient
};

// The cyclic graph of groups underlying the kernel: k copies of the base
// group, edge i carrying the domain parabolic of phi, attached by inclusion
// at vertex i and by phi at vertex i+1. Spanning tree: the path 0→…→k−1;
// the one non-tree edge closes the cycle.
GraphOfGroups cycle_graph(const ArtinSystem& system,
                          const LabelPreservingBijection& phi, int k);

// Kernel construction. The subgroup presentation comes from cycle_graph;
// generator words place each subgroup generator inside the ambient group
// (copy of s at level i ↦ t^i s t^-i, stable letter ↦ t^k). The same
// presentation is recomputed independently via Reidemeister–Schreier and
// the two are required to agree relator-for-relator.
SubgroupDescription kernel_subgroup(const ArtinSystem& system,
                                    const LabelPreservingBijection& phi, int k);

// Rewrites a word of the ambient group that lies in the kernel (stable-letter
// exponent sum divisible by k) into a word over the subgroup generators,
// tracking the transversal coset {1, t, …, t^(k-1)} from start_level.
Word schreier_rewrite(const SubgroupDescription& kernel, const Word& ambient,
                      int start_level = 0);

// Subgroup presentation recomputed from the ambient one by
// Reidemeister–Schreier rewriting with transversal {1, t, …, t^(k-1)},
// over the same generator numbering as kernel.subgroup. Used as an
// independent cross-check.
Presentation reidemeister_schreier(const SubgroupDescription& kernel);

// The embedding on generators: copy of s at level i ↦ its class, stable
// letter ↦ the last extra letter of the target.
Homomorphism embed_kernel(const SubgroupDescription& kernel,
                          const CoverGraph& cover, const ArtinTarget& target);

// theta on generators: classes fixed, extra letters doubled.
Homomorphism coxeter_doubling(const ArtinTarget& target,
                              const CoxeterTarget& wplus);

// The cycle graph augmented with a hub vertex carrying the class group,
// one spoke per level (edge group a copy of the base, attached identically
// at the level and through psi_i at the hub). Spokes are the spanning
// tree; all cycle edges get stable letters.
GraphOfGroups hub_graph(const ArtinSystem& system,
                        const LabelPreservingBijection& phi,
                        const CoverGraph& cover, const LabelFunction& mbar);

// The one-vertex rose on the hub: k loops, loop i carrying the domain
// parabolic attached through psi_i on both sides.
GraphOfGroups rose_graph(const ArtinSystem& system,
                         const LabelPreservingBijection& phi,
                         const CoverGraph& cover, const LabelFunction& mbar);

// Collapses the spanning tree of hub_graph's fundamental group: every
// level copy of s is substituted by its class, the spoke identifications
// (checked to vanish) are dropped. The result is over the same generators
// as fundamental_group(rose_graph(...)) and must present the same group
// relator-set-for-relator-set.
Presentation collapse_hub(const ArtinSystem& system,
                          const LabelPreservingBijection& phi,
                          const CoverGraph& cover, const LabelFunction& mbar);

// Everything the construction produces for one input, before verification.
struct Pipeline {
  ArtinSystem system;
  LabelPreservingBijection phi;
  CouplingGraph coupling;
  int k = 1;
  CoverGraph cover;
  LabelFunction mbar;
  ArtinTarget target;
  std::optional<CoxeterTarget> wplus;   // coxeter kind only
  SubgroupDescription kernel;
  Homomorphism eta_target;              // kernel → target group
  std::optional<Homomorphism> theta;    // target → doubled target
  Homomorphism eta;                     // kernel → final group (composite
                                        // through theta for coxeter kind)
};

// Runs the construction end to end. k_override must satisfy the covering
// conditions; by default the minimal admissible k is used.
Pipeline build_pipeline(const ArtinSystem& system,
                        const LabelPreservingBijection& phi,
                        std::optional<int> k_override = std::nullopt);

struct EmbeddingCertificate {
  Pipeline pipeline;
  VerificationReport report;
};

// build_pipeline + the full verification battery. Raises
// ErrorCode::check_failed if any check fails; inconclusive results are
// kept in the report but do not block.
EmbeddingCertificate certificate(const ArtinSystem& system,
                                 const LabelPreservingBijection& phi,
                                 const VerifyOptions& options = {});

}  // namespace arcox

#endif
