#pragma once

#include <string>

#include "galdef/fl.hpp"
#include "galdef/gn.hpp"
#include "galdef/satake.hpp"
#include "galdef/screen.hpp"
#include "galdef/tame.hpp"

namespace galdef {

/// JSON fragments with the stable field names used by the CLI reports.
/// Elements encode as integers over prime fields and as coefficient arrays
/// over extensions.
std::string elem_json(const Ring& R, const Elem& e);
std::string mat_json(const Mat& m);
std::string gn_json(const GnElement& g);                       // {"g":..., "mu":..., "c":0|1}
std::string tangent_json(const std::string& problem, int n, int64_t q, int64_t ell,
                         const TangentReport& t);
std::string satake_json(const SatakeParameter& p);
std::string exclusion_json(const ExclusionReport& r);
std::string fl_tangent_json(const FLModule& m, const FLTangent& t);

} // namespace galdef
