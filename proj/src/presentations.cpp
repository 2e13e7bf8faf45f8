#include "arcox/presentations.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "arcox/error.hpp"

namespace arcox {

const char* relator_tag_name(RelatorTag tag) {
  switch (tag) {
    case RelatorTag::artin: return "artin";
    case RelatorTag::involution: return "involution";
    case RelatorTag::hnn: return "hnn";
    case RelatorTag::tree_identification: return "tree-identification";
    case RelatorTag::stable_letter: return "stable-letter";
  }
  return "?";
}

void Presentation::add(Word relator, RelatorTag tag) {
  relators.push_back(std::move(relator));
  tags.push_back(tag);
}

int Presentation::index_of(const std::string& name) const {
  auto it = std::find(generators.begin(), generators.end(), name);
  return it == generators.end() ? -1
                                : static_cast<int>(it - generators.begin());
}

bool is_structural_consequence(const Presentation& p, const Word& w) {
  const Word key = relator_normal_form(w);
  if (key.syllables().empty()) return true;
  for (const Word& r : p.relators)
    if (relator_normal_form(r) == key) return true;
  return false;
}

bool same_relators(const Presentation& a, const Presentation& b) {
  using Entry = std::pair<int, std::vector<std::pair<int, int>>>;
  auto flatten = [](const Presentation& p) {
    std::multiset<Entry> out;
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
      Entry e;
      e.first = static_cast<int>(p.tags[i]);
      for (const Syllable& s : p.relators[i].syllables())
        e.second.emplace_back(s.gen, s.exp);
      out.insert(std::move(e));
    }
    return out;
  };
  return flatten(a) == flatten(b);
}

Word braid_word(int x, int y, int m) {
  Word w;
  for (int i = 0; i < m; ++i) w.append(i % 2 == 0 ? x : y, 1);
  return w;
}

Word braid_relator(int x, int y, int m) {
  return braid_word(x, y, m) * braid_word(y, x, m).inverse();
}

Presentation artin_presentation(const ArtinSystem& system) {
  Presentation p;
  p.generators = system.names();
  for (const auto& [i, j] : system.finite_pairs())
    p.add(braid_relator(i, j, system.label(i, j)), RelatorTag::artin);
  if (system.kind() == Kind::coxeter) {
    for (int i = 0; i < system.size(); ++i) {
      Word sq;
      sq.append(i, 1);
      sq.append(i, 1);
      p.add(std::move(sq), RelatorTag::involution);
    }
  }
  return p;
}

std::string stable_letter_name(const ArtinSystem& system) {
  return system.index_of("t") ? "t@" : "t";
}

Presentation hnn_presentation(const ArtinSystem& system,
                              const LabelPreservingBijection& phi) {
  Presentation p = artin_presentation(system);
  int stable = static_cast<int>(p.generators.size());
  p.generators.push_back(stable_letter_name(system));
  for (const auto& [s, target] : phi.pairs()) {
    Word r;
    r.append(stable, -1);
    r.append(s, 1);
    r.append(stable, 1);
    r.append(target, -1);
    p.add(std::move(r), RelatorTag::hnn);
  }
  return p;
}

namespace {

// Remaps a word over a vertex presentation into the combined generator
// numbering.
Word shift_word(const Word& w, int offset) {
  Word out;
  for (const auto& syl : w.syllables()) out.append(syl.gen + offset, syl.exp);
  return out;
}

void check_gog(const GraphOfGroups& gog) {
  if (gog.vertices.empty())
    fail(ErrorCode::invalid_argument, "graph of groups has no vertices");
  std::set<std::string> vertex_ids, edge_ids;
  for (const auto& v : gog.vertices)
    if (!vertex_ids.insert(v.id).second)
      fail(ErrorCode::invalid_argument, "duplicate vertex id " + v.id);
  int n = static_cast<int>(gog.vertices.size());
  std::vector<int> root(n);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int v) {
    while (root[v] != v) v = root[v] = root[root[v]];
    return v;
  };
  int tree_edges = 0;
  for (const auto& e : gog.edges) {
    if (!edge_ids.insert(e.id).second)
      fail(ErrorCode::invalid_argument, "duplicate edge id " + e.id);
    if (e.from < 0 || e.from >= n || e.to < 0 || e.to >= n)
      fail(ErrorCode::invalid_argument, "edge " + e.id + " endpoint out of range");
    std::size_t arity = e.group.generators.size();
    if (e.attach_init.size() != arity || e.attach_term.size() != arity)
      fail(ErrorCode::invalid_argument,
           "edge " + e.id + " attaching maps do not cover the edge group");
    for (std::size_t x = 0; x < arity; ++x) {
      if (e.attach_init[x].max_generator() >=
              static_cast<int>(gog.vertices[e.from].group.generators.size()) ||
          e.attach_term[x].max_generator() >=
              static_cast<int>(gog.vertices[e.to].group.generators.size()))
        fail(ErrorCode::invalid_argument,
             "edge " + e.id + " attaching word leaves its vertex group");
    }
    if (e.in_tree) {
      ++tree_edges;
      int a = find(e.from), b = find(e.to);
      if (a == b)
        fail(ErrorCode::invalid_argument,
             "marked tree edges contain a cycle (edge " + e.id + ")");
      root[a] = b;
    }
  }
  if (tree_edges != n - 1)
    fail(ErrorCode::invalid_argument,
         "marked tree edges do not form a spanning tree");
}

}  // namespace

Presentation fundamental_group(const GraphOfGroups& gog) {
  check_gog(gog);
  Presentation p;
  std::vector<int> offset(gog.vertices.size());
  std::set<std::string> taken;
  for (std::size_t v = 0; v < gog.vertices.size(); ++v) {
    offset[v] = static_cast<int>(p.generators.size());
    for (const auto& g : gog.vertices[v].group.generators) {
      std::string name = g + "@" + gog.vertices[v].id;
      require_internal(taken.insert(name).second,
                       "vertex generator name collision: " + name);
      p.generators.push_back(name);
    }
  }
  std::vector<int> stable(gog.edges.size(), -1);
  for (std::size_t e = 0; e < gog.edges.size(); ++e) {
    if (gog.edges[e].in_tree) continue;
    std::string name = "t@" + gog.edges[e].id;
    while (!taken.insert(name).second) name += "'";
    stable[e] = static_cast<int>(p.generators.size());
    p.generators.push_back(name);
  }
  for (std::size_t v = 0; v < gog.vertices.size(); ++v) {
    const auto& group = gog.vertices[v].group;
    for (std::size_t r = 0; r < group.relators.size(); ++r)
      p.add(shift_word(group.relators[r], offset[v]), group.tags[r]);
  }
  for (std::size_t e = 0; e < gog.edges.size(); ++e) {
    const auto& edge = gog.edges[e];
    for (std::size_t x = 0; x < edge.group.generators.size(); ++x) {
      Word a = shift_word(edge.attach_init[x], offset[edge.from]);
      Word w = shift_word(edge.attach_term[x], offset[edge.to]);
      if (edge.in_tree) {
        p.add(a * w.inverse(), RelatorTag::tree_identification);
      } else {
        Word r;
        r.append(stable[e], -1);
        r = r * a;
        r.append(stable[e], 1);
        p.add(r * w.inverse(), RelatorTag::stable_letter);
      }
    }
  }
  return p;
}

ArtinTarget target_artin(const ArtinSystem& system,
                         const LabelPreservingBijection& phi,
                         const CoverGraph& cover, const LabelFunction& mbar) {
  require_internal(mbar.num_classes == cover.num_classes(),
                   "label function does not fit the cover");
  ArtinTarget t;
  t.k = cover.k;
  t.first_stable = cover.num_classes();

  std::vector<std::string> names = cover.class_names;
  for (int i = 0; i < cover.k; ++i)
    names.push_back("t@" + std::to_string(i));

  std::map<std::pair<int, int>, int> labels = mbar.finite;
  for (int i = 0; i < cover.k; ++i) {
    for (const auto& [s, target] : phi.pairs()) {
      // The level-i class of a domain generator equals the level-(i+1)
      // class of its image; the extra letter at level i commutes with it.
      require_internal(cover.psi[(i + 1) % cover.k][target] == cover.psi[i][s],
                       "cover does not identify phi-related generators");
      labels[{cover.psi[i][s], t.first_stable + i}] = 2;
    }
  }
  t.system = ArtinSystem::assemble(std::move(names), labels, system.kind());

  if (system.kind() == Kind::artin) {
    t.presentation = artin_presentation(t.system);
  } else {
    // Mixed presentation: the classes are involutions, the extra letters
    // are not, so this is neither an Artin nor a Coxeter presentation.
    t.presentation.generators = t.system.names();
    for (const auto& [i, j] : t.system.finite_pairs())
      t.presentation.add(braid_relator(i, j, t.system.label(i, j)),
                         RelatorTag::artin);
    for (int i = 0; i < t.first_stable; ++i) {
      Word sq;
      sq.append(i, 1);
      sq.append(i, 1);
      t.presentation.add(std::move(sq), RelatorTag::involution);
    }
  }
  return t;
}

CoxeterTarget target_coxeter(const ArtinTarget& target) {
  if (target.system.kind() != Kind::coxeter)
    fail(ErrorCode::invalid_argument,
         "doubling applies to coxeter-kind targets only");
  CoxeterTarget w;
  w.first_double = target.first_stable;

  std::vector<std::string> names(target.system.names().begin(),
                                 target.system.names().begin() +
                                     target.first_stable);
  for (int i = 0; i < target.k; ++i) {
    names.push_back("u@" + std::to_string(i));
    names.push_back("u'@" + std::to_string(i));
  }

  std::map<std::pair<int, int>, int> labels;
  for (const auto& [a, b] : target.system.finite_pairs()) {
    if (b < target.first_stable) {
      labels[{a, b}] = target.system.label(a, b);
    } else {
      // A class commuting with t@i commutes with both halves u@i, u'@i.
      require_internal(a < target.first_stable &&
                           target.system.label(a, b) == 2,
                       "unexpected finite label on an extra letter");
      int i = b - target.first_stable;
      labels[{a, w.first_double + 2 * i}] = 2;
      labels[{a, w.first_double + 2 * i + 1}] = 2;
    }
  }
  w.system = ArtinSystem::assemble(std::move(names), labels, Kind::coxeter);
  w.presentation = artin_presentation(w.system);

  for (int g = 0; g < target.first_stable; ++g) {
    Word img;
    img.append(g, 1);
    w.theta_images.push_back(std::move(img));
  }
  for (int i = 0; i < target.k; ++i) {
    Word img;
    img.append(w.first_double + 2 * i, 1);
    img.append(w.first_double + 2 * i + 1, 1);
    w.theta_images.push_back(std::move(img));
  }
  return w;
}

}  // namespace arcox
