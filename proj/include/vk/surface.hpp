#pragma once

#include <string>

#include "vk/gauss.hpp"

namespace vk {

/// Supporting surface of a diagram, built from one 0-handle per classical
/// crossing and one untwisted band per arc.  The boundary count comes from
/// tracing band edges through the corner permutation at each handle.
///
/// Corner convention at a crossing, counterclockwise (slots 0..3):
///   slot 0 = over-out, slot 2 = over-in (over strand runs S -> N);
///   sign +: slot 1 = under-out, slot 3 = under-in   (under runs E -> W)
///   sign -: slot 1 = under-in,  slot 3 = under-out  (under runs W -> E)
struct RibbonSurface {
  int vertices = 0;           // classical crossings
  int bands = 0;              // arcs (2n), or 1 closed band for the empty code
  int boundary_curves = 0;    // b
  int euler_characteristic = 0;  // V - E of the ribbon graph
  int genus = 0;              // of the capped closed surface
};

RibbonSurface build_ribbon(const GaussCode& code);
int boundary_count(const GaussCode& code);
int diagram_genus(const GaussCode& code);

/// Ribbon graph in DOT format (vertices = crossings, edges = bands).
std::string ribbon_dot(const GaussCode& code);

}  // namespace vk
