#ifndef SGO_SERIALIZE_HPP
#define SGO_SERIALIZE_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "sgo/config.hpp"
#include "sgo/loopmat.hpp"
#include "sgo/superroots.hpp"

namespace sgo {

using json = nlohmann::ordered_json;

// {"lambda": [...], "theta": [...], "theta_prime": [...]}
json to_json(const SuperWeight& w);
SuperWeight weight_from_json(const json& j);

// {"n": n, "precision": P | "inf", "entries": rows of [[e, p, q], ...]}
json to_json(const LoopMatrix& a);
LoopMatrix matrix_from_json(const json& j);

// {"points": {"c": weight, "x1": weight, ...}}; M and N are taken from the
// coefficients, or from optional "M"/"N" fields when there are none
json to_json(const ColoredDivisor& d);
ColoredDivisor divisor_from_json(const json& j);

json to_json(const RootVector& n);

json read_json_file(const std::string& path);

}

#endif
