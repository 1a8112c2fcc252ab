#include "vk/surface.hpp"

#include <map>
#include <vector>

namespace vk {

namespace {

// Slot of the outgoing half-edge for a pass, within its vertex.
int out_slot(const Pass& p) {
  if (p.strand == Strand::Over) return 0;
  return p.sign > 0 ? 1 : 3;
}

// Slot of the incoming half-edge for a pass.
int in_slot(const Pass& p) {
  if (p.strand == Strand::Over) return 2;
  return p.sign > 0 ? 3 : 1;
}

}  // namespace

RibbonSurface build_ribbon(const GaussCode& code) {
  RibbonSurface s;
  const int n = code.crossings();
  if (n == 0) {
    // crossingless circle: regular neighborhood is an annulus
    s.vertices = 0;
    s.bands = 1;
    s.boundary_curves = 2;
    s.euler_characteristic = 0;
    s.genus = 0;
    return s;
  }
  const int L = 2 * n;
  // vertex index per crossing id, in order of first appearance
  std::map<int, int> vertex_of;
  for (const Pass& p : code.passes())
    if (!vertex_of.count(p.id)) vertex_of[p.id] = static_cast<int>(vertex_of.size());

  // alpha: involution pairing dart slots across each band
  const int darts = 4 * n;
  std::vector<int> alpha(darts, -1);
  auto slot_id = [&](int vertex, int slot) { return 4 * vertex + slot; };
  const auto& w = code.passes();
  for (int i = 0; i < L; ++i) {
    const Pass& a = w[i];
    const Pass& b = w[(i + 1) % L];
    int from = slot_id(vertex_of[a.id], out_slot(a));
    int to = slot_id(vertex_of[b.id], in_slot(b));
    alpha[from] = to;
    alpha[to] = from;
  }
  // faces of the combinatorial map: orbits of sigma . alpha, with sigma the
  // counterclockwise rotation slot -> slot+1 within a vertex
  std::vector<char> seen(darts, 0);
  int faces = 0;
  for (int d = 0; d < darts; ++d) {
    if (seen[d]) continue;
    ++faces;
    int x = d;
    while (!seen[x]) {
      seen[x] = 1;
      int y = alpha[x];
      x = 4 * (y / 4) + (y % 4 + 1) % 4;
    }
  }
  s.vertices = n;
  s.bands = L;
  s.boundary_curves = faces;
  s.euler_characteristic = n - L;  // V - E
  s.genus = (2 - s.euler_characteristic - s.boundary_curves) / 2;
  return s;
}

int boundary_count(const GaussCode& code) { return build_ribbon(code).boundary_curves; }

int diagram_genus(const GaussCode& code) { return build_ribbon(code).genus; }

std::string ribbon_dot(const GaussCode& code) {
  std::string out = "graph ribbon {\n";
  const auto& w = code.passes();
  const int L = code.size();
  if (L == 0) {
    out += "  circle [shape=circle label=\"()\"];\n  circle -- circle [label=\"band\"];\n";
  } else {
    std::map<int, int> first;
    for (const Pass& p : w)
      if (!first.count(p.id)) first[p.id] = static_cast<int>(first.size());
    for (const auto& [id, _] : first) {
      int sign = 0;
      for (const Pass& p : w)
        if (p.id == id) sign = p.sign;
      out += "  c" + std::to_string(id) + " [label=\"" + std::to_string(id) +
             (sign > 0 ? "+" : "-") + "\"];\n";
    }
    for (int i = 0; i < L; ++i) {
      const Pass& a = w[i];
      const Pass& b = w[(i + 1) % L];
      out += "  c" + std::to_string(a.id) + " -- c" + std::to_string(b.id) +
             " [label=\"a" + std::to_string(i) + "\"];\n";
    }
  }
  out += "}\n";
  return out;
}

}  // namespace vk
