#ifndef MAJORLAB_REPORT_HPP
#define MAJORLAB_REPORT_HPP

#include <string>

#include <json.hpp>

#include "majorlab/functional.hpp"
#include "majorlab/search.hpp"
#include "majorlab/suites.hpp"

namespace majorlab {

using Json = nlohmann::ordered_json;

// Doubles leaving the library are finite by construction (margins saturate at
// the sentinel); this guards stray infinities so JSON stays well-formed.
double json_safe(double v);

Json to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);

Json to_json(const Instance& inst);
Instance instance_from_json(const Json& j);

Json to_json(const CheckOutcome& outcome);
Json to_json(const MajorizationReport& rep);
Json to_json(const ProbeReport& rep);
Json to_json(const SearchReport& rep);

}  // namespace majorlab

#endif
