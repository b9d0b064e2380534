#include "lnf/constructions.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "lnf/connectivity.hpp"
#include "lnf/enumerate.hpp"
#include "lnf/formulas.hpp"
#include "lnf/graph6.hpp"
#include "lnf/properties.hpp"

namespace lnf {

const char* to_string(GadgetName name) {
  switch (name) {
    case GadgetName::A: return "A";
    case GadgetName::B1: return "B1";
    case GadgetName::C1: return "C1";
    case GadgetName::D1: return "D1";
    case GadgetName::D2: return "D2";
  }
  return "";
}

const char* to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::four_connected: return "k4";
    case FamilyKind::two_connected: return "k2";
    case FamilyKind::connected: return "k1";
  }
  return "";
}

GadgetName parse_gadget_name(const std::string& text) {
  for (GadgetName n : {GadgetName::A, GadgetName::B1, GadgetName::C1,
                       GadgetName::D1, GadgetName::D2})
    if (text == to_string(n)) return n;
  throw std::invalid_argument("unknown gadget name: " + text);
}

FamilyKind parse_family_kind(const std::string& text) {
  for (FamilyKind k : {FamilyKind::four_connected, FamilyKind::two_connected,
                       FamilyKind::connected})
    if (text == to_string(k)) return k;
  throw std::invalid_argument("unknown family context: " + text);
}

int family_connectivity(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::four_connected: return 4;
    case FamilyKind::two_connected: return 2;
    case FamilyKind::connected: return 1;
  }
  return 0;
}

int gadget_order(GadgetName name) {
  switch (name) {
    case GadgetName::A: return 4;
    case GadgetName::B1: return 5;
    case GadgetName::C1: return 6;
    case GadgetName::D1: return 7;
    case GadgetName::D2: return 7;
  }
  return 0;
}

int gadget_size(GadgetName name) {
  switch (name) {
    case GadgetName::A: return 6;
    case GadgetName::B1: return 9;
    case GadgetName::C1: return 11;
    case GadgetName::D1: return 13;
    case GadgetName::D2: return 12;
  }
  return 0;
}

namespace {

bool pair_allowed(GadgetName name, FamilyKind context) {
  if (name == GadgetName::A || name == GadgetName::B1 || name == GadgetName::C1)
    return true;
  if (name == GadgetName::D1) return context == FamilyKind::four_connected;
  return context != FamilyKind::four_connected;  // D2
}

Gadget fixed_a_gadget(FamilyKind context) {
  Gadget g;
  g.name = GadgetName::A;
  g.context = context;
  g.graph = complete_graph(4);
  g.x = 0;
  g.y = 1;
  g.z = 2;
  g.w = 3;
  return g;
}

}  // namespace

Graph assemble_family(const Gadget& gadget, int blocks) {
  if (blocks < 2) throw std::invalid_argument("family needs >= 2 blocks");
  int q = gadget.graph.order();
  Graph g(q + 4 * (blocks - 1));
  for (auto [u, v] : gadget.graph.edges()) g.add_edge(u, v);
  // port index arrays over block positions 1..blocks
  std::vector<std::array<int, 4>> ports(blocks);  // x, y, z, w
  ports[0] = {gadget.x, gadget.y, gadget.z, gadget.w};
  for (int b = 1; b < blocks; ++b) {
    int base = q + 4 * (b - 1);
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) g.add_edge(base + i, base + j);
    ports[b] = {base, base + 1, base + 2, base + 3};
  }
  bool cyclic = gadget.context != FamilyKind::connected;
  bool doubled = gadget.context == FamilyKind::four_connected;
  for (int b = 0; b < blocks - (cyclic ? 0 : 1); ++b) {
    int next = (b + 1) % blocks;
    g.add_edge(ports[b][2], ports[next][1]);  // z to next y
    if (doubled) g.add_edge(ports[b][3], ports[next][0]);  // w to next x
  }
  return g;
}

bool gadget_assembles(const Gadget& gadget, int blocks) {
  Graph g = assemble_family(gadget, blocks);
  int k = family_connectivity(gadget.context);
  return is_k_connected(g, k) && is_locally_nonforesty(g);
}

namespace {

// Every vertex of an assembled family needs degree >= 3, and >= 4 in the
// four-connected family.  A used port gains exactly one external edge;
// anything else keeps its internal degree.  Filters port choices cheaply
// before the full assembly checks run.
bool ports_plausible(const Graph& g, const std::array<int, 4>& ports,
                     FamilyKind context) {
  int need = context == FamilyKind::four_connected ? 4 : 3;
  std::array<bool, 4> used{};
  switch (context) {
    case FamilyKind::four_connected: used = {true, true, true, true}; break;
    case FamilyKind::two_connected: used = {false, true, true, false}; break;
    case FamilyKind::connected: used = {false, false, true, false}; break;
  }
  for (int v = 0; v < g.order(); ++v) {
    int external = 0;
    for (int s = 0; s < 4; ++s)
      if (ports[s] == v && used[s]) external = 1;
    if (g.degree(v) + external < need) return false;
  }
  return true;
}

// Full port assignments to try: constrained slots range over all distinct
// choices, the rest take the smallest unused vertices in slot order.
std::vector<std::array<int, 4>> port_assignments(int order, FamilyKind context) {
  std::array<bool, 4> free_slot{};
  switch (context) {
    case FamilyKind::four_connected: free_slot = {false, false, false, false}; break;
    case FamilyKind::two_connected: free_slot = {true, false, false, true}; break;
    case FamilyKind::connected: free_slot = {true, true, false, true}; break;
  }
  std::vector<std::array<int, 4>> out;
  std::array<int, 4> ports{};
  auto fill_free = [&] {
    std::array<bool, 16> taken{};
    for (int s = 0; s < 4; ++s)
      if (!free_slot[s]) taken[ports[s]] = true;
    int next = 0;
    for (int s = 0; s < 4; ++s) {
      if (!free_slot[s]) continue;
      while (taken[next]) ++next;
      ports[s] = next;
      taken[next] = true;
    }
    out.push_back(ports);
  };
  std::array<int, 4> constrained_slots{};
  int nc = 0;
  for (int s = 0; s < 4; ++s)
    if (!free_slot[s]) constrained_slots[nc++] = s;
  std::vector<int> choice(nc);
  auto rec = [&](auto&& self, int at) -> void {
    if (at == nc) {
      for (int i = 0; i < nc; ++i) ports[constrained_slots[i]] = choice[i];
      fill_free();
      return;
    }
    for (int v = 0; v < order; ++v) {
      bool dup = false;
      for (int i = 0; i < at; ++i) dup |= choice[i] == v;
      if (dup) continue;
      choice[at] = v;
      self(self, at + 1);
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

Gadget search_gadget(GadgetName name, FamilyKind context) {
  if (name == GadgetName::A)
    throw std::invalid_argument("gadget A is fixed, not searched");
  if (!pair_allowed(name, context))
    throw std::invalid_argument(std::string("gadget ") + to_string(name) +
                                " is not used in context " + to_string(context));
  int order = gadget_order(name);
  int size = gadget_size(name);

  EnumerationSpec spec;
  spec.order = order;
  spec.max_edges = size;
  // ports gain one edge in assembly, so internal degrees may run one low
  spec.min_degree_final = context == FamilyKind::four_connected ? 3 : 2;

  struct Candidate {
    std::string key;  // canonical graph6
    std::array<int, 4> ports;
    Graph graph;
  };
  std::vector<Candidate> found;

  enumerate_graphs(spec, [&](const Graph& g) {
    if (g.size() != size) return;
    std::string key = serialize_graph6(g);
    for (const auto& ports : port_assignments(order, context)) {
      if (!ports_plausible(g, ports, context)) continue;
      Gadget trial;
      trial.name = name;
      trial.context = context;
      trial.graph = g;
      trial.x = ports[0];
      trial.y = ports[1];
      trial.z = ports[2];
      trial.w = ports[3];
      if (gadget_assembles(trial, 2) && gadget_assembles(trial, 3))
        found.push_back({key, ports, g});
    }
  });

  if (found.empty())
    throw std::runtime_error(std::string("no qualifying gadget found for ") +
                             to_string(name) + " in context " +
                             to_string(context));
  auto best = std::min_element(
      found.begin(), found.end(), [](const Candidate& a, const Candidate& b) {
        return std::tie(a.key, a.ports) < std::tie(b.key, b.ports);
      });
  Gadget out;
  out.name = name;
  out.context = context;
  out.graph = best->graph;
  out.x = best->ports[0];
  out.y = best->ports[1];
  out.z = best->ports[2];
  out.w = best->ports[3];
  return out;
}

std::string stanza_text(const Gadget& gadget) {
  std::ostringstream out;
  out << to_string(gadget.name) << ' ' << to_string(gadget.context) << '\n';
  out << gadget.graph.order() << ' ' << gadget.graph.size() << '\n';
  for (auto [u, v] : gadget.graph.edges()) out << u << ' ' << v << '\n';
  out << "ports " << gadget.x << ' ' << gadget.y << ' ' << gadget.z << ' '
      << gadget.w << '\n';
  return out.str();
}

void GadgetCatalog::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open gadget catalog: " + path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream head(line);
    std::string name_text, context_text;
    if (!(head >> name_text >> context_text))
      throw std::runtime_error("catalog: bad stanza header: " + line);
    Gadget g;
    g.name = parse_gadget_name(name_text);
    g.context = parse_family_kind(context_text);
    int n, m;
    if (!(in >> n >> m)) throw std::runtime_error("catalog: bad size line");
    if (n != gadget_order(g.name) || m != gadget_size(g.name))
      throw std::runtime_error("catalog: wrong order or size for " + name_text);
    Graph graph(n);
    for (int i = 0; i < m; ++i) {
      int u, v;
      if (!(in >> u >> v)) throw std::runtime_error("catalog: truncated edges");
      graph.add_edge(u, v);
    }
    std::string ports_word;
    if (!(in >> ports_word) || ports_word != "ports" ||
        !(in >> g.x >> g.y >> g.z >> g.w))
      throw std::runtime_error("catalog: bad ports line");
    std::getline(in, line);  // consume rest of ports line
    g.graph = std::move(graph);
    put(g);
  }
}

void GadgetCatalog::put(const Gadget& g) {
  std::string name_text = to_string(g.name);
  if (g.graph.order() != gadget_order(g.name) ||
      g.graph.size() != gadget_size(g.name))
    throw std::runtime_error("catalog: wrong order or size for " + name_text);
  std::array<int, 4> ports{g.x, g.y, g.z, g.w};
  std::sort(ports.begin(), ports.end());
  if (ports[0] < 0 || ports[3] >= g.graph.order() ||
      std::adjacent_find(ports.begin(), ports.end()) != ports.end())
    throw std::runtime_error("catalog: invalid ports for " + name_text);
  if (!pair_allowed(g.name, g.context) || g.name == GadgetName::A)
    throw std::runtime_error("catalog: unusable stanza " + name_text);
  if (!gadget_assembles(g, 2) || !gadget_assembles(g, 3))
    throw std::runtime_error("catalog: stanza fails validation: " + name_text);
  store_[{static_cast<int>(g.name), static_cast<int>(g.context)}] = g;
}

void GadgetCatalog::save_file(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write gadget catalog: " + path);
  out << to_text();
}

std::string GadgetCatalog::to_text() const {
  std::string text;
  bool first = true;
  for (const auto& [key, gadget] : store_) {
    if (gadget.name == GadgetName::A) continue;  // fixed, never cached
    if (!first) text += "\n";
    text += stanza_text(gadget);
    first = false;
  }
  return text;
}

bool GadgetCatalog::contains(GadgetName name, FamilyKind context) const {
  return store_.count({static_cast<int>(name), static_cast<int>(context)}) > 0;
}

const Gadget& GadgetCatalog::get(GadgetName name, FamilyKind context) {
  auto key = std::make_pair(static_cast<int>(name), static_cast<int>(context));
  auto it = store_.find(key);
  if (it == store_.end()) {
    Gadget g = name == GadgetName::A ? fixed_a_gadget(context)
                                     : search_gadget(name, context);
    it = store_.emplace(key, std::move(g)).first;
  }
  return it->second;
}

Graph build_extremal(int k, int n, GadgetCatalog& catalog) {
  if (k != 1 && k != 2 && k != 4)
    throw std::invalid_argument("build_extremal: k must be 1, 2 or 4");
  if (n < 8) throw std::invalid_argument("build_extremal: n must be >= 8");
  FamilyKind kind = k == 4   ? FamilyKind::four_connected
                    : k == 2 ? FamilyKind::two_connected
                             : FamilyKind::connected;
  GadgetName name;
  switch (n % 4) {
    case 0: name = GadgetName::A; break;
    case 1: name = GadgetName::B1; break;
    case 2: name = GadgetName::C1; break;
    default:
      name = k == 4 ? GadgetName::D1 : GadgetName::D2;
      break;
  }
  const Gadget& gadget = catalog.get(name, kind);
  int blocks = (n - gadget.graph.order()) / 4 + 1;
  assert(gadget.graph.order() + 4 * (blocks - 1) == n);
  Graph g = assemble_family(gadget, blocks);
  long long want = min_size(k, n).value;
  if (g.order() != n || g.size() != want || !is_k_connected(g, k) ||
      !is_locally_nonforesty(g))
    throw std::logic_error("extremal family failed self-verification");
  return g;
}

Graph harary_graph(int k, int n) {
  if (k < 6) throw std::invalid_argument("harary_graph: k must be >= 6");
  if (n < k + 1) throw std::invalid_argument("harary_graph: n must be >= k+1");
  Graph g(n);
  int r = k / 2;
  for (int v = 0; v < n; ++v)
    for (int j = 1; j <= r; ++j) g.add_edge(v, (v + j) % n);
  if (k % 2 == 1) {
    if (n % 2 == 0) {
      for (int v = 0; v < n / 2; ++v) g.add_edge(v, v + n / 2);
    } else {
      // near-regular: vertex 0 picks up both half-diameter edges
      for (int v = 0; v <= (n - 1) / 2; ++v)
        g.add_edge(v, (v + (n + 1) / 2) % n);
    }
  }
  assert(2ll * g.size() == static_cast<long long>(k) * n + (k % 2 && n % 2));
  return g;
}

}  // namespace lnf
