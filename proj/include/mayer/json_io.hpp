#pragma once

#include "mayer/json_emit.hpp"
#include "mayer/zeta.hpp"

namespace mayer {

Json complex_json(Complex z);

// {s:[re,im], order, basis, entries:[[re,im],…] row-major}
Json to_json(const OperatorMatrix& A);
// {s:[re,im], n, value:[re,im], method, tail_bound}
Json to_json(const TraceReport& r);
Json to_json(const DetReport& r);
// {s:[re,im], value:[re,im], route, caps:{…}, tail}
Json to_json(const ZetaValue& z);
Json to_json(const ZeroReport& z);

}  // namespace mayer
