#pragma once

#include <map>
#include <string>

#include "lnf/graph.hpp"

namespace lnf {

// The extremal families are chains of K4 blocks, with one block swapped for
// a residue gadget when 4 does not divide n.  Gadget A is the K4 itself;
// B1, C1, D1, D2 are the order 5..7 replacements, recovered by exhaustive
// search rather than hardcoded.  D1 belongs to the four-connected family
// only, D2 to the other two.
enum class GadgetName { A, B1, C1, D1, D2 };

// Which family a gadget is validated for.  Block linking differs per
// family: four_connected double-links consecutive blocks cyclically,
// two_connected single-links cyclically, connected single-links as a path.
enum class FamilyKind { four_connected, two_connected, connected };

struct Gadget {
  GadgetName name = GadgetName::A;
  FamilyKind context = FamilyKind::four_connected;
  Graph graph;
  // port vertices: x and y take incoming links, z and w outgoing; slots
  // unused by the family's link pattern are still distinct vertices
  int x = 0, y = 1, z = 2, w = 3;
};

const char* to_string(GadgetName name);
const char* to_string(FamilyKind kind);  // "k4", "k2", "k1"
GadgetName parse_gadget_name(const std::string& text);
FamilyKind parse_family_kind(const std::string& text);

int family_connectivity(FamilyKind kind);  // 4, 2, 1
int gadget_order(GadgetName name);
int gadget_size(GadgetName name);

// Joins `blocks` blocks (block 1 is the gadget, the rest are K4) with the
// family's link pattern.  Vertex numbering is fixed: the gadget occupies
// 0..|gadget|-1, K4 block i >= 2 occupies the next four indices with ports
// x, y, z, w in index order.
Graph assemble_family(const Gadget& gadget, int blocks);

// True when the assembly at the given block count is k-connected for the
// family's k and every vertex neighborhood has a cycle.
bool gadget_assembles(const Gadget& gadget, int blocks);

// Exhaustive search over all graphs of the gadget's (order, size) and all
// usable port labellings, validated at block counts 2 and 3.  Either the
// canonically least qualifying gadget is returned or the search aborts;
// nothing is ever substituted.  Rejects name A (fixed) and name/context
// pairs no family uses.
Gadget search_gadget(GadgetName name, FamilyKind context);

// Text cache of searched gadgets.  Stanza format, one per gadget:
// name and context on one line, then "n m", then m edge lines, then
// "ports x y z w"; stanzas separated by blank lines.
class GadgetCatalog {
 public:
  // Parses and revalidates every stanza; rejects the file on any failure.
  void load_file(const std::string& path);
  void save_file(const std::string& path) const;
  std::string to_text() const;

  // Search on miss; A needs no search.
  const Gadget& get(GadgetName name, FamilyKind context);
  bool contains(GadgetName name, FamilyKind context) const;

  // Validated insert; rejects a gadget that fails the same checks load
  // applies.
  void put(const Gadget& gadget);

 private:
  std::map<std::pair<int, int>, Gadget> store_;
};

std::string stanza_text(const Gadget& gadget);

// Edge-minimal k-connected graph on n vertices with a cycle in every
// neighborhood, for k in {1, 2, 4} and n >= 8.  The result is rebuilt
// deterministically (identical edge list every call) and re-verified
// against the closed-form size before being returned.
Graph build_extremal(int k, int n, GadgetCatalog& catalog);

// Circulant-based k-connected graph on n vertices with ceil(k*n/2) edges,
// for k >= 6, n >= k+1.  Odd k with odd n uses the near-regular variant
// with one vertex of degree k+1.
Graph harary_graph(int k, int n);

}  // namespace lnf
