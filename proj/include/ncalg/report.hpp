#pragma once

#include <json.hpp>

#include "ncalg/anick.hpp"
#include "ncalg/kostant.hpp"
#include "ncalg/minimal.hpp"
#include "ncalg/rewriting.hpp"

namespace ncalg {

using Json = nlohmann::ordered_json;

/// Words are arrays of generator tokens, e.g. ["a1", "b0"] or ["ea(3)"].
Json word_json(const Word& w);
Word word_from_json(const Json& j, const Field& field);

Json degree_json(const Degree& d);
Json scalar_json(const Scalar& x, const Field& field);

/// [{lhs, rhs}] with rules descending by lhs; rhs in the text grammar.
Json rules_json(const RewriteSystem& sys);
/// Inverse of rules_json over the given field, order and alphabet.
RewriteSystem system_from_json(const Json& rules, const Field& field, const MonomialOrder& order,
                               const std::vector<Generator>& alphabet);

/// {complete, pair_count, failures: [{tip, residual}]}.
Json certificate_json(const CompletenessCertificate& cert, const RewriteSystem& sys);

/// {degree, rows, cols, entries: [[i, j, coeff]]}.
Json matrix_json(const GradedMatrix& g);

Json relation_suite_json(const std::vector<RelationCheck>& checks);
Json dimension_json(const DimensionReport& d);
Json coefficient_checks_json(const std::vector<CoefficientCheck>& checks);
Json complex_json(const ComplexReport& r);
Json exactness_json(const ExactnessReport& r);
Json minimality_json(const MinimalityReport& r);

}  // namespace ncalg
