#pragma once

#include <string>

#include "upp/curve.hpp"
#include "upp/nc_ops.hpp"

namespace upp {

// Curve JSON schema:
//   {"sequence": [{"point": {"t": "p/q", "v": "p/q"}},
//                 {"segment": {"start": "...", "end": "...",
//                              "rightLimitAtStart": "...",
//                              "leftLimitAtEnd": "..."}}, ...],
//    "T": "p/q", "d": "p/q", "c": "p/q"}
// Rationals are written "p/q" ("p" when q = 1), infinities "inf"/"-inf".
// Serialization is byte-stable: fixed key order, fixed indentation, values
// in lowest terms.
std::string curveToJsonText(const Curve& f);
Curve curveFromJsonText(const std::string& text);
Curve loadCurveFile(const std::string& path);

// IWRR config schema:
//   {"weights": [int, ...], "minPacket": ["p/q", ...],
//    "maxPacket": ["p/q", ...], "flowIndex": int, "beta": {curve}}
// plus an optional "description" string that is carried through untouched.
IwrrConfig iwrrConfigFromJsonText(const std::string& text);
IwrrConfig loadIwrrConfigFile(const std::string& path);

}  // namespace upp
