#include "arcox/embedding.hpp"

#include <algorithm>
#include <sstream>
#include <string>
#include <utility>

#include "arcox/error.hpp"
#include "arcox/verify.hpp"

namespace arcox {

Word Homomorphism::apply(const Word& w) const {
  Word out;
  for (const auto& syl : w.syllables()) {
    require_internal(syl.gen < static_cast<int>(images.size()),
                     "word outside the homomorphism's source");
    out.append(syl.exp > 0 ? images[syl.gen] : images[syl.gen].inverse());
  }
  return out;
}

Homomorphism compose(const Homomorphism& outer, const Homomorphism& inner) {
  require_internal(inner.target == outer.source,
                   "composition through mismatched presentations");
  Homomorphism out;
  out.source = inner.source;
  out.target = outer.target;
  for (const auto& img : inner.images) out.images.push_back(outer.apply(img));
  return out;
}

GraphOfGroups cycle_graph(const ArtinSystem& system,
                          const LabelPreservingBijection& phi, int k) {
  GraphOfGroups gog;
  Presentation base = artin_presentation(system);
  for (int i = 0; i < k; ++i)
    gog.vertices.push_back({std::to_string(i), base});

  std::vector<int> domain = phi.domain();
  Presentation edge_group =
      artin_presentation(system.restricted_to(domain));
  for (int i = 0; i < k; ++i) {
    GogEdge e;
    e.id = std::to_string(i);
    e.from = i;
    e.to = (i + 1) % k;
    e.group = edge_group;
    for (int s : domain) {
      e.attach_init.push_back(Word::generator(s));
      e.attach_term.push_back(Word::generator(*phi.apply(s)));
    }
    e.in_tree = i < k - 1;
    gog.edges.push_back(std::move(e));
  }
  return gog;
}

Word schreier_rewrite(const SubgroupDescription& kernel, const Word& ambient,
                      int start_level) {
  int n = kernel.stable;  // base generators precede the stable letter
  int k = kernel.k;
  int u = k * n;  // index of the rewritten stable generator
  int level = start_level;
  Word out;
  for (const auto& syl : ambient.syllables()) {
    if (syl.gen != kernel.stable) {
      out.append(level * n + syl.gen, syl.exp);
    } else if (syl.exp > 0) {
      if (level == k - 1) out.append(u, 1);
      level = (level + 1) % k;
    } else {
      if (level == 0) out.append(u, -1);
      level = (level - 1 + k) % k;
    }
  }
  require_internal(level == start_level, "rewriting left its coset");
  return out;
}

Presentation reidemeister_schreier(const SubgroupDescription& kernel) {
  Presentation out;
  out.generators = kernel.subgroup.generators;
  for (int i = 0; i < kernel.k; ++i) {
    for (std::size_t r = 0; r < kernel.ambient.relators.size(); ++r) {
      RelatorTag tag = kernel.ambient.tags[r];
      if (tag == RelatorTag::hnn)
        tag = i == 0 ? RelatorTag::stable_letter : RelatorTag::tree_identification;
      out.add(schreier_rewrite(kernel, kernel.ambient.relators[r], i), tag);
    }
  }
  return out;
}

SubgroupDescription kernel_subgroup(const ArtinSystem& system,
                                    const LabelPreservingBijection& phi,
                                    int k) {
  SubgroupDescription desc;
  desc.ambient = hnn_presentation(system, phi);
  desc.stable = system.size();
  desc.k = k;
  for (int i = 0; i < k; ++i)
    desc.transversal.push_back(Word::power(desc.stable, i));
  desc.subgroup = fundamental_group(cycle_graph(system, phi, k));

  int n = system.size();
  require_internal(static_cast<int>(desc.subgroup.generators.size()) ==
                       k * n + 1,
                   "unexpected subgroup generator count");
  for (int i = 0; i < k; ++i) {
    for (int s = 0; s < n; ++s) {
      require_internal(desc.subgroup.generators[i * n + s] ==
                           system.name(s) + "@" + std::to_string(i),
                       "subgroup generator layout mismatch");
      Word w = Word::power(desc.stable, i);
      w.append(s, 1);
      w.append(Word::power(desc.stable, -i));
      desc.generator_words.push_back(std::move(w));
    }
  }
  desc.generator_words.push_back(Word::power(desc.stable, k));

  for (const auto& w : desc.generator_words)
    require_internal(((w.exponent_sum(desc.stable) % k) + k) % k == 0,
                     "subgroup generator word escapes the kernel");

  // Independent derivation of the same presentation: rewriting the ambient
  // relators over every coset must reproduce the graph-of-groups relators
  // word for word, and conversely every subgroup relator must land on an
  // ambient relation when its generators are spelled out in the ambient
  // group.
  require_internal(same_relators(reidemeister_schreier(desc), desc.subgroup),
                   "subgroup presentations disagree");
  Homomorphism spell{desc.subgroup, desc.ambient, desc.generator_words};
  for (const auto& rel : desc.subgroup.relators)
    require_internal(is_structural_consequence(desc.ambient, spell.apply(rel)),
                     "subgroup relator is not an ambient relation");
  return desc;
}

Homomorphism embed_kernel(const SubgroupDescription& kernel,
                          const CoverGraph& cover, const ArtinTarget& target) {
  Homomorphism eta;
  eta.source = kernel.subgroup;
  eta.target = target.presentation;
  int n = cover.n;
  // Collapsing the spokes of the hub graph turns the level cycle's tree
  // path 0 -> i into the stable-letter prefix t@0 ... t@(i-1).  A level-i
  // generator maps to its class conjugated by that prefix, and the cycle's
  // own stable letter maps to the full turn around the rose.  The bare
  // class (without the conjugating prefix) would still satisfy every
  // relator, but conflates u b@0 with b@0 u whenever the stable letter
  // commutes with the class.
  std::vector<Word> path{Word{}};
  for (int i = 0; i + 1 < cover.k; ++i)
    path.push_back(path.back() * Word::generator(target.first_stable + i));
  for (int i = 0; i < cover.k; ++i)
    for (int s = 0; s < n; ++s)
      eta.images.push_back(path[i] * Word::generator(cover.psi[i][s]) *
                           path[i].inverse());
  eta.images.push_back(path[cover.k - 1] *
                       Word::generator(target.first_stable + (cover.k - 1)));
  return eta;
}

Homomorphism coxeter_doubling(const ArtinTarget& target,
                              const CoxeterTarget& wplus) {
  return Homomorphism{target.presentation, wplus.presentation,
                      wplus.theta_images};
}

GraphOfGroups hub_graph(const ArtinSystem& system,
                        const LabelPreservingBijection& phi,
                        const CoverGraph& cover, const LabelFunction& mbar) {
  GraphOfGroups gog = cycle_graph(system, phi, cover.k);
  for (auto& e : gog.edges) e.in_tree = false;

  ArtinSystem classes =
      ArtinSystem::assemble(cover.class_names, mbar.finite, system.kind());
  int hub = static_cast<int>(gog.vertices.size());
  gog.vertices.push_back({"*", artin_presentation(classes)});

  Presentation base = artin_presentation(system);
  for (int i = 0; i < cover.k; ++i) {
    GogEdge spoke;
    spoke.id = "spoke" + std::to_string(i);
    spoke.from = i;
    spoke.to = hub;
    spoke.group = base;
    for (int s = 0; s < system.size(); ++s) {
      spoke.attach_init.push_back(Word::generator(s));
      spoke.attach_term.push_back(Word::generator(cover.psi[i][s]));
    }
    spoke.in_tree = true;
    gog.edges.push_back(std::move(spoke));
  }
  return gog;
}

GraphOfGroups rose_graph(const ArtinSystem& system,
                         const LabelPreservingBijection& phi,
                         const CoverGraph& cover, const LabelFunction& mbar) {
  GraphOfGroups gog;
  ArtinSystem classes =
      ArtinSystem::assemble(cover.class_names, mbar.finite, system.kind());
  gog.vertices.push_back({"*", artin_presentation(classes)});

  std::vector<int> domain = phi.domain();
  Presentation edge_group = artin_presentation(system.restricted_to(domain));
  for (int i = 0; i < cover.k; ++i) {
    GogEdge e;
    e.id = std::to_string(i);
    e.from = 0;
    e.to = 0;
    e.group = edge_group;
    for (int s : domain) {
      e.attach_init.push_back(Word::generator(cover.psi[i][s]));
      e.attach_term.push_back(
          Word::generator(cover.psi[(i + 1) % cover.k][*phi.apply(s)]));
    }
    e.in_tree = false;
    gog.edges.push_back(std::move(e));
  }
  return gog;
}

Presentation collapse_hub(const ArtinSystem& system,
                          const LabelPreservingBijection& phi,
                          const CoverGraph& cover, const LabelFunction& mbar) {
  Presentation pi = fundamental_group(hub_graph(system, phi, cover, mbar));
  int n = system.size();
  int k = cover.k;
  int num_classes = cover.num_classes();
  require_internal(static_cast<int>(pi.generators.size()) ==
                       k * n + num_classes + k,
                   "unexpected hub fundamental group layout");

  Presentation out;
  for (int c = 0; c < num_classes; ++c)
    out.generators.push_back(cover.class_names[c] + "@*");
  for (int i = 0; i < k; ++i)
    out.generators.push_back("t@" + std::to_string(i));
  require_internal(
      std::equal(out.generators.begin(), out.generators.end(),
                 pi.generators.begin() + k * n),
      "hub generator names off the expected layout");

  auto substitute = [&](int g) {
    if (g < k * n) return cover.psi[g / n][g % n];
    return g - k * n;  // classes, then stable letters, already in order
  };
  for (std::size_t r = 0; r < pi.relators.size(); ++r) {
    Word image;
    for (const auto& syl : pi.relators[r].syllables())
      image.append(substitute(syl.gen), syl.exp);
    image = image.freely_reduced();
    if (pi.tags[r] == RelatorTag::tree_identification) {
      require_internal(image.empty(),
                       "spoke identification survives the collapse");
      continue;
    }
    out.add(std::move(image), pi.tags[r]);
  }
  return out;
}

Pipeline build_pipeline(const ArtinSystem& system,
                        const LabelPreservingBijection& phi,
                        std::optional<int> k_override) {
  Pipeline p;
  p.system = system;
  p.phi = phi;
  p.coupling = build_coupling_graph(system, phi);
  p.k = k_override ? *k_override : compute_k(p.coupling);
  p.cover = build_cover(system, p.coupling, p.k);
  p.mbar = build_label_function(system, p.cover);
  p.target = target_artin(system, phi, p.cover, p.mbar);
  if (system.kind() == Kind::coxeter) p.wplus = target_coxeter(p.target);
  p.kernel = kernel_subgroup(system, phi, p.k);
  p.eta_target = embed_kernel(p.kernel, p.cover, p.target);
  if (p.wplus) {
    p.theta = coxeter_doubling(p.target, *p.wplus);
    p.eta = compose(*p.theta, p.eta_target);
  } else {
    p.eta = p.eta_target;
  }
  return p;
}

EmbeddingCertificate certificate(const ArtinSystem& system,
                                 const LabelPreservingBijection& phi,
                                 const VerifyOptions& options) {
  EmbeddingCertificate cert;
  cert.pipeline = build_pipeline(system, phi);
  cert.report = run_standard_checks(cert.pipeline, options);
  if (!cert.report.ok()) {
    std::ostringstream msg;
    msg << "verification failed:";
    for (const auto& c : cert.report.checks)
      if (c.status == CheckStatus::fail) msg << " [" << c.name << "]";
    fail(ErrorCode::check_failed, msg.str());
  }
  return cert;
}

}  // namespace arcox
