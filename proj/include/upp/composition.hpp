#pragma once

#include <string>

#include "upp/curve.hpp"

namespace upp {

// Composition h = f o g of finite sequences. S_g describes a non-negative,
// non-decreasing finite-valued function on [0, a[; S_f must cover the range
// of g (right-closed at g(a^-) when S_g ends with a constant segment, since
// that value is then attained inside the window).
//
// The result's breakpoints are the times of S_g's points merged with the
// preimages (under the lower pseudo-inverse of g) of S_f's interior
// breakpoint values; between consecutive breakpoints the result is affine
// with slope rho_f * rho_g.
Sequence composeSequences(const Sequence& sf, const Sequence& sg);

enum class ComposeMode {
  Auto,             // most specialized applicable path
  ForceGeneral,     // always the general UPP parameter formulas
  ForceSpecialized  // error when no specialization applies
};

struct ComposeStats {
  std::string path;  // "general", "g-ua", "f-ua", "ua-ua", "g-uc", "f-uc"
  std::size_t outerCutElements = 0;
  std::size_t innerCutElements = 0;
};

// Composition h = f o g of UPP curves. g must be non-negative, non-decreasing
// and not wUI; f must be finite on the range covered by the cut of g
// (compositions through infinite outer values are only supported via the
// UC corner rules).
//
// Dispatch, most specialized first: g UC, f UC, both UA, g UA, f UA, general.
// The general parameters are
//   T_h = max(g_lpi(T_f), T_g),
//   d_h = num(d_f) * d_g * den(c_g),
//   c_h = den(d_f) * num(c_g) * c_f,
// with num/den taken in lowest terms. The specializations shrink d_h and the
// cut domains, which is where their speedup comes from.
Curve compose(const Curve& f, const Curve& g,
              ComposeMode mode = ComposeMode::Auto,
              ComposeStats* stats = nullptr);

}  // namespace upp
