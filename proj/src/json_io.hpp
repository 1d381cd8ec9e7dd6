#pragma once

#include <string>
#include <vector>

#include "algebra.hpp"
#include "expr.hpp"
#include "identities.hpp"
#include "matrix.hpp"
#include "report.hpp"

namespace cdt {

// JSON and CSV renderings of the library's value types. All JSON here is
// emitted through the same few helpers so the schemas in data/schemas stay
// authoritative.

std::string element_to_json(const Element& x, int indent = -1);
Element element_from_json(const std::string& text);  // throws kJson on malformed input

std::string embedded_to_json(const EmbeddedMat& m, int indent = -1);

// Table CSV: header "j,k,sign,m", one row per basis pair, meaning
// e_j * e_k = sign * e_m. Byte-deterministic for a fixed configuration.
std::string table_to_csv(const std::vector<std::vector<TableEntry>>& table);
std::string table_to_json(const Signature& sig, Orientation o,
                          const std::vector<std::vector<TableEntry>>& table, int indent = -1);

std::string law_report_to_json(const LawReport& r, int indent = -1);
std::string law_report_to_text(const LawReport& r);

std::string zero_divisor_report_to_json(const Signature& sig, Orientation o,
                                        const ZeroDivisorBudget& budget,
                                        const std::vector<ZeroDivisorPair>& pairs,
                                        int indent = -1);
std::string zero_divisor_report_to_text(const Signature& sig,
                                        const std::vector<ZeroDivisorPair>& pairs);

std::string inverse_report_to_json(const OneSidedInverseReport& left,
                                   const OneSidedInverseReport& right, int indent = -1);
std::string inverse_report_to_text(const OneSidedInverseReport& r);

std::string rl_report_to_json(const RlPatternReport& r, int indent = -1);

}  // namespace cdt
