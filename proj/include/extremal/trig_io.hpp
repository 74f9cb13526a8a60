#pragma once

#include <string>

#include "extremal/periodic.hpp"

namespace extremal {

// `n,re,im` header, rows n = −N..N.
std::string to_csv(const TrigPoly& p);
TrigPoly trig_poly_from_csv(const std::string& text);

// {"degree": N, "coeffs": [{"n":..,"re":..,"im":..}, ...]}
std::string to_json(const TrigPoly& p);
TrigPoly trig_poly_from_json(const std::string& text);

}  // namespace extremal
