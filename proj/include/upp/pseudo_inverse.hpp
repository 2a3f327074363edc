#pragma once

#include "upp/curve.hpp"

namespace upp {

// Lower pseudo-inverse of a finite non-decreasing sequence:
//   f_inv(y) = inf { x | f(x) >= y }.
//
// The input starts at abscissa 0 with a finite non-negative value and may be
// right-open or right-closed. The scan dispatches every element to one of
// eight cases depending on element kind, constancy of the segment involved,
// and continuity at the junction; each case appends zero to three elements.
// The output describes f_inv on [0, V] (input right-closed, V the final
// value) or on [0, V] / [0, V[ as produced by the final case (input
// right-open ending with a constant / non-constant segment). It is always
// left-continuous. Inputs whose first value is positive yield a zero prefix:
// f_inv(y) = 0 for all y <= f(0).
Sequence lowerPseudoInverseSequence(const Sequence& s);

// Upper pseudo-inverse of a finite non-decreasing sequence:
//   f_inv(y) = sup { x | f(x) <= y }.
//
// Mirrors the lower scan but resolves plateaus to their right end, which
// requires deferring the output point for a value level until the element
// that first exceeds it (one-element look-ahead). The output is
// right-continuous. For y below f(0) the set is empty and the result is 0 by
// convention. A trailing plateau in a right-open input resolves to the open
// window end, the supremum over the restricted domain.
Sequence upperPseudoInverseSequence(const Sequence& s);

// Lower pseudo-inverse of a non-decreasing UPP curve with f(0) >= 0.
//
// Generic path (not UC, not wUI): the result is UPP with
//   T' = f(T + d),  d' = c,  c' = d,
// computed from the by-sequence pass over the cut [0, T + 2d]. Cutting
// right-closed makes the scan itself emit the closing constant segment on
// ]f((T+2d)^-), f(T+2d)[ when f has a left-discontinuity there.
//
// UC input with plateau value V starting at a: the result is finite on
// [0, V] with value a at V, and +inf beyond V (encoded as an infinite tail
// with (d, c) = (1, 0)).
//
// wUI input with threshold Tw: the result is ultimately constant at Tw.
Curve lowerPseudoInverse(const Curve& f);

// Upper pseudo-inverse of a non-decreasing UPP curve with f(0) >= 0.
//
// Generic path: T' = f(T), d' = c, c' = d, from the cut [0, T + d].
// UC input: +inf from the plateau value V on (including at V).
// wUI input: ultimately constant at the threshold Tw, exactly from f(Tw^-).
Curve upperPseudoInverse(const Curve& f);

}  // namespace upp
