#pragma once

#include <json.hpp>

#include "tilespace/cohomology.hpp"
#include "tilespace/collaring.hpp"
#include "tilespace/complex.hpp"
#include "tilespace/dataset.hpp"
#include "tilespace/enumeration.hpp"
#include "tilespace/forcing.hpp"
#include "tilespace/hull.hpp"
#include "tilespace/invlimit.hpp"
#include "tilespace/symbolic1d.hpp"

namespace tilespace {

using Json = nlohmann::ordered_json;

/** Integers that fit in 64 bits become numbers, larger ones decimal strings. */
Json to_json(const Integer& x);
Json to_json(const IntegerMatrix& m);
Json to_json(const CheckResult& c);
Json to_json(const ValidationReport& r);
Json to_json(const EnumerationResult& r);
Json to_json(const IncidenceStats& s);
Json to_json(const ForcingReport& r);
Json to_json(const AbelianGroup& g);
Json to_json(const DirectLimitResult& r);
Json to_json(const HullReport& r);
Json to_json(const Thread& t);

/** {faces, edges, vertices, boundary2, boundary1, S2, S1, S0}. */
Json complex_json(const CWComplex& c, const ChainMaps& m);

}  // namespace tilespace
