#include "arcox/coupling.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "arcox/error.hpp"

namespace arcox {

int CouplingGraph::max_path_length() const {
  int m = 0;
  for (const auto& p : paths) m = std::max(m, static_cast<int>(p.size()) - 1);
  return m;
}

CouplingGraph build_coupling_graph(const ArtinSystem& system,
                                   const LabelPreservingBijection& phi) {
  CouplingGraph g;
  g.n = system.size();
  g.next.assign(g.n, std::nullopt);
  g.prev.assign(g.n, std::nullopt);
  for (const auto& [s, t] : phi.pairs()) {
    require_internal(!g.next[s] && !g.prev[t], "phi is not a partial bijection");
    g.next[s] = t;
    g.prev[t] = s;
  }

  std::vector<bool> seen(g.n, false);
  // Paths start at vertices with no incoming edge (this includes isolated
  // vertices, which become length-0 paths).
  for (int s = 0; s < g.n; ++s) {
    if (g.prev[s] || seen[s]) continue;
    std::vector<int> chain;
    int v = s;
    while (true) {
      seen[v] = true;
      chain.push_back(v);
      if (!g.next[v]) break;
      v = *g.next[v];
    }
    g.paths.push_back(std::move(chain));
  }
  // Everything left lies on a cycle.
  for (int s = 0; s < g.n; ++s) {
    if (seen[s]) continue;
    std::vector<int> cycle;
    int v = s;
    do {
      seen[v] = true;
      cycle.push_back(v);
      require_internal(g.next[v].has_value(), "loop vertex without successor");
      v = *g.next[v];
    } while (v != s);
    g.loops.push_back(std::move(cycle));
  }
  return g;
}

bool k_is_valid(const CouplingGraph& coupling, int k) {
  if (k < 1) return false;
  for (const auto& loop : coupling.loops)
    if (k % static_cast<int>(loop.size()) != 0) return false;
  return k > 2 * coupling.max_path_length();
}

int compute_k(const CouplingGraph& coupling) {
  long long l = 1;
  for (const auto& loop : coupling.loops)
    l = std::lcm(l, static_cast<long long>(loop.size()));
  int floor_target = 2 * coupling.max_path_length();  // need k > this
  long long k = l * (floor_target / l + 1);
  require_internal(k > floor_target && k % l == 0 && k - l <= floor_target,
                   "compute_k produced a non-minimal or invalid k");
  return static_cast<int>(k);
}

std::optional<int> CoverGraph::member_at_level(int cls, int level) const {
  for (int v : members[cls])
    if (level_of(v) == level) return gen_of(v);
  return std::nullopt;
}

CoverGraph build_cover(const ArtinSystem& system, const CouplingGraph& coupling,
                       int k) {
  if (!k_is_valid(coupling, k)) {
    std::ostringstream msg;
    msg << "k = " << k << " violates the covering conditions (must be a "
        << "common multiple of all loop lengths and exceed twice every "
        << "path length)";
    fail(ErrorCode::invalid_argument, msg.str());
  }
  CoverGraph cover;
  cover.k = k;
  cover.n = coupling.n;
  int total = k * coupling.n;

  // Union the edge relation (i,s) ~ (i+1, phi(s)).
  std::vector<int> parent(total);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (int i = 0; i < k; ++i) {
    for (int s = 0; s < coupling.n; ++s) {
      if (!coupling.next[s]) continue;
      int a = find(cover.flat(i, s));
      int b = find(cover.flat((i + 1) % k, *coupling.next[s]));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }

  // Components in order of least member; flat index order is exactly the
  // (level, generator) lexicographic order.
  std::vector<int> class_of(total, -1);
  for (int v = 0; v < total; ++v) {
    int root = find(v);
    if (class_of[root] == -1) {
      class_of[root] = cover.num_classes();
      cover.members.emplace_back();
    }
    cover.component.push_back(class_of[root]);
    cover.members[class_of[root]].push_back(v);
  }
  for (const auto& m : cover.members) {
    int least = m.front();
    cover.class_names.push_back(system.name(cover.gen_of(least)) + "." +
                                std::to_string(cover.level_of(least)));
  }
  cover.psi.assign(k, std::vector<int>(coupling.n));
  for (int i = 0; i < k; ++i)
    for (int s = 0; s < coupling.n; ++s)
      cover.psi[i][s] = cover.component[cover.flat(i, s)];

  // p restricted to a component is injective (so each psi_i is too, and
  // |component| <= k). Guaranteed by the admissibility of k; a violation
  // here is a construction bug.
  for (int c = 0; c < cover.num_classes(); ++c) {
    std::vector<bool> level_seen(k, false);
    for (int v : cover.members[c]) {
      int lvl = cover.level_of(v);
      require_internal(!level_seen[lvl],
                       "projection p not injective on component " +
                           cover.class_names[c]);
      level_seen[lvl] = true;
    }
  }
  for (int i = 0; i < k; ++i) {
    std::vector<bool> hit(cover.num_classes(), false);
    for (int s = 0; s < coupling.n; ++s) {
      require_internal(!hit[cover.psi[i][s]],
                       "psi_" + std::to_string(i) + " not injective");
      hit[cover.psi[i][s]] = true;
    }
  }
  return cover;
}

int LabelFunction::label(int x, int y) const {
  require_internal(x != y, "label of a self-pair requested");
  auto key = std::minmax(x, y);
  auto it = finite.find({key.first, key.second});
  return it == finite.end() ? kInfLabel : it->second;
}

std::set<int> LabelFunction::label_set() const {
  std::set<int> out;
  for (const auto& [pair, value] : finite) out.insert(value);
  std::size_t total = static_cast<std::size_t>(num_classes) * (num_classes - 1) / 2;
  if (finite.size() < total) out.insert(kInfLabel);
  return out;
}

LabelFunction build_label_function(const ArtinSystem& system,
                                   const CoverGraph& cover) {
  LabelFunction out;
  out.num_classes = cover.num_classes();
  // assigned holds pairs witnessed at some level, with the label value
  // (possibly inf); unwitnessed pairs default to inf.
  std::map<std::pair<int, int>, int> assigned;
  std::map<std::pair<int, int>, std::string> witness;
  for (int i = 0; i < cover.k; ++i) {
    for (int s = 0; s < cover.n; ++s) {
      for (int t = s + 1; t < cover.n; ++t) {
        int x = cover.psi[i][s];
        int y = cover.psi[i][t];
        require_internal(x != y, "psi_i identified two generators");
        auto key = std::minmax(x, y);
        int value = system.label(s, t);
        auto it = assigned.find({key.first, key.second});
        if (it == assigned.end()) {
          assigned[{key.first, key.second}] = value;
          std::ostringstream w;
          w << "level " << i << " pair (" << system.name(s) << ","
            << system.name(t) << ")";
          witness[{key.first, key.second}] = w.str();
        } else if (it->second != value) {
          std::ostringstream msg;
          msg << "conflicting labels for class pair ("
              << cover.class_names[key.first] << ","
              << cover.class_names[key.second] << "): "
              << label_to_string(it->second) << " via "
              << witness[{key.first, key.second}] << " vs "
              << label_to_string(value) << " via level " << i << " pair ("
              << system.name(s) << "," << system.name(t) << ")";
          fail(ErrorCode::label_conflict, msg.str());
        }
      }
    }
  }
  for (const auto& [pair, value] : assigned)
    if (value != kInfLabel) out.finite[pair] = value;
  return out;
}

}  // namespace arcox
