#pragma once

#include <nlohmann/json.hpp>

#include "tileforge/tileforge.hpp"

namespace tileforge::cli {

using Json = nlohmann::ordered_json;

// Integers beyond 2^53 and non-integral fractions become strings so that
// JSON readers with double-precision numbers never round them.
Json to_json(const Integer& v);
Json to_json(const Rational& v);
Json to_json(std::int64_t v);
Json to_json(const IntMatrix& m);
Json to_json(const IntVector& v);
Json to_json(const Point& p);
Json to_json(const std::vector<Point>& points);
Json to_json(const DigitSet& d);
Json to_json(const Lattice& l);
Json to_json(const JordanDecomposition& dec);
Json to_json(const ResidueCheck& r);
Json to_json(const ConnectivityVerdict& v);
Json to_json(const ShellCertificate& c);
Json to_json(const LevelCheck& c);
Json to_json(const PipelineResult& r);

/// Indented like dump(2), except that arrays holding only scalars or scalar
/// arrays stay on one line, so matrices and point lists remain readable.
std::string format(const Json& j);

}  // namespace tileforge::cli
