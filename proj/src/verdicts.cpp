#include "verdicts.hpp"

#include <vector>

#include "errors.hpp"
#include "json.hpp"
#include "verdicts_data.hpp"

namespace cdt {

namespace {

using nlohmann::json;

const std::vector<VerdictCell>& table() {
  static const std::vector<VerdictCell> cells = [] {
    std::vector<VerdictCell> out;
    json j = json::parse(detail::kExpectedVerdictsJson);
    for (const json& c : j.at("cells")) {
      out.push_back(VerdictCell{
          .law = c.at("law").get<std::string>(),
          .level = c.at("level").get<int>(),
          .signs = c.at("signs").get<std::string>(),
          .holds = c.at("holds").get<bool>(),
      });
    }
    return out;
  }();
  return cells;
}

}  // namespace

std::optional<bool> expected_verdict(std::string_view law, const Signature& sig) {
  const std::string pattern = sig.pattern();
  std::optional<bool> wildcard;
  for (const VerdictCell& c : table()) {
    if (c.law != law || c.level != sig.level()) continue;
    if (c.signs == pattern) return c.holds;
    if (c.signs == "*") wildcard = c.holds;
  }
  return wildcard;
}

std::string_view expected_verdicts_raw() { return detail::kExpectedVerdictsJson; }

bool is_known_law(std::string_view law) {
  return law == "mnemonic" || law == "alternative" || law == "flexible" || law == "moufang" ||
         law == "norm" || law == "adjugate";
}

}  // namespace cdt
