#pragma once

#include <cstddef>

#include "qcvx/certificates.hpp"
#include "qcvx/function_io.hpp"
#include "qcvx/oracle.hpp"
#include "qcvx/violation_analysis.hpp"

// JSON encodings used in analysis reports. Rationals appear as lowest-terms
// strings with a *_decimal companion; infinities as "inf" / "-inf".

namespace qcvx::report {

Json rational(const Rational& r);
Json decimal(const Rational& r);
Json decimal(const XReal& x);
/// {"<name>": "p/q", "<name>_decimal": d} merged into `obj`.
void put(Json& obj, const std::string& name, const Rational& r);
void put(Json& obj, const std::string& name, const XReal& x);

Json intervals(const OpenIntervalSet& s);
Json closed_set(const ClosedSet1D& s);
Json semicontinuity(const SemicontinuityReport& r);
Json verdict(const QuasiconvexityVerdict& v);
Json component_checks(const std::vector<ComponentCheck>& checks);
Json decomposition(const ViolationDecomposition& d);
Json witness_check(const WitnessCheck& w);
Json convexity_violation(const ConvexityViolation& c);
Json local_maximum(const LocalMaximum& m);
Json corollary3(const Corollary3Result& r);
Json certificate(const Theorem2Certificate& c, const Revalidation& reval);
Json oracle_verdict(const OracleVerdict& v, std::size_t max_listed);
Json diff(const DiffReport& d);

/// Reads back the pair and components written by decomposition().
ViolationDecomposition decomposition_from_json(const Json& node);

}  // namespace qcvx::report
