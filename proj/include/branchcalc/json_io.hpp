#pragma once

#include <string>

#include <json.hpp>

#include "branchcalc/branching.hpp"
#include "branchcalc/hecke_module.hpp"
#include "branchcalc/recombination.hpp"

namespace branchcalc {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Reads a JSON argument: inline text when it starts with '{' or '[', a file path otherwise.
Json load_json_argument(const std::string& arg);

// Every parser reports failures as SchemaError naming the offending JSON path.

Json to_json(const Exponent& x);  ///< [num, den] in lowest terms
Exponent exponent_from_json(const Json& j, const std::string& path = "");

Json to_json(const Rational& x);  ///< [num, den], or "num/den" beyond 64 bits
Rational rational_from_json(const Json& j, const std::string& path = "");
/// Coefficients keyed by power of q: {"2": [1,1], "0": [-3,1]}.
Json to_json(const Symbolic& p);
Symbolic symbolic_from_json(const Json& j, const std::string& path = "");

/// Optional top-level "lines": [{"id", "degree", "dual"}].
LineRegistry lines_from_json(const Json& doc);
Json to_json(const LineRegistry& lines);

Json to_json(const Segment& s);
Segment segment_from_json(const Json& j, const LineRegistry& lines, const std::string& path = "");
Json to_json(const Multisegment& m);
Multisegment multisegment_from_json(const Json& j, const LineRegistry& lines,
                                    const std::string& path = "");
Json to_json(const InducedRep& rep);
InducedRep rep_from_json(const Json& j, const LineRegistry& lines, const std::string& path = "");
Json to_json(const FormalSum& sum);
FormalSum formal_sum_from_json(const Json& j, const LineRegistry& lines,
                               const std::string& path = "");
Json to_json(const Support& s);

/// Accepts "[1,0,-2]", "1,0,-2", "(1,0,-2)" or a JSON array.
std::vector<int> parse_int_tuple(const std::string& text);
std::vector<Rational> parse_rational_tuple(const std::string& text);

// Reports.
Json to_json(const Recombination& r);
Json to_json(const TruncationLemmaResult& r);
Json to_json(const FiltrationLayer& layer);
Json to_json(const QuotientCertificate& c);
Json to_json(const Certificate& c);
Json to_json(const ExtCertificate& c);
Json to_json(const RelationReport& r);
Json to_json(const FiniteModule& M);
Json to_json(const RationalMatrix& a);
Json to_json(const SignQuotientAnalysis& a);

}  // namespace branchcalc
