#include "json_io.hpp"

#include <sstream>

#include "json.hpp"

namespace cdt {

namespace {

using nlohmann::json;

json signs_json(const Signature& sig) {
  json a = json::array();
  for (int s : sig.signs()) a.push_back(s);
  return a;
}

json element_json(const Element& x) {
  json j;
  j["level"] = x.level();
  j["signs"] = signs_json(x.signature());
  json coeffs = json::array();
  for (const Rational& c : x.coeffs()) coeffs.push_back(c.str());
  j["coeffs"] = coeffs;
  return j;
}

Element element_from(const json& j) {
  if (!j.is_object() || !j.contains("level") || !j.contains("signs") || !j.contains("coeffs")) {
    throw CdError(Errc::kJson, "element JSON needs level, signs and coeffs");
  }
  if (!j["level"].is_number_integer()) {
    throw CdError(Errc::kJson, "element level must be an integer");
  }
  const int level = j["level"].get<int>();
  if (level < 0) throw CdError(Errc::kJson, "element level must be nonnegative");
  if (!j["signs"].is_array() || j["signs"].size() != static_cast<std::size_t>(level)) {
    throw CdError(Errc::kJson, "element signs must be an array of length level");
  }
  std::vector<int> signs;
  for (const json& s : j["signs"]) {
    if (!s.is_number_integer() || (s.get<int>() != 1 && s.get<int>() != -1)) {
      throw CdError(Errc::kJson, "element signs entries must be +1 or -1");
    }
    signs.push_back(s.get<int>());
  }
  Signature sig{signs};
  if (!j["coeffs"].is_array() || j["coeffs"].size() != sig.dim()) {
    throw CdError(Errc::kJson, "element coeffs must be an array of length 2^level");
  }
  std::vector<Rational> coeffs;
  for (const json& c : j["coeffs"]) {
    if (!c.is_string()) throw CdError(Errc::kJson, "element coeffs entries must be strings");
    try {
      coeffs.push_back(Rational::parse(c.get<std::string>()));
    } catch (const CdError&) {
      throw CdError(Errc::kJson,
                    "element coeffs entry is not a rational literal: " + c.get<std::string>());
    }
  }
  return Element::from_coeffs(std::move(sig), std::move(coeffs));
}

json mat_entries_json(const Mat2& m) {
  json entries;
  entries["a"] = element_json(m.a);
  entries["b"] = element_json(m.b);
  entries["c"] = element_json(m.c);
  entries["d"] = element_json(m.d);
  return entries;
}

std::string dump(const json& j, int indent) { return j.dump(indent); }

const char* mode_name(const SampleSpec& s) {
  return s.kind == SampleSpec::Kind::kExhaustiveBasis ? "exhaustive" : "random";
}

}  // namespace

std::string element_to_json(const Element& x, int indent) {
  return dump(element_json(x), indent);
}

Element element_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw CdError(Errc::kJson, std::string("malformed JSON: ") + e.what());
  }
  return element_from(j);
}

std::string embedded_to_json(const EmbeddedMat& m, int indent) {
  json j;
  j["gamma"] = m.gamma;
  j["entries"] = mat_entries_json(m.mat);
  return dump(j, indent);
}

std::string table_to_csv(const std::vector<std::vector<TableEntry>>& table) {
  std::ostringstream out;
  out << "j,k,sign,m\n";
  for (std::size_t j = 0; j < table.size(); ++j) {
    for (std::size_t k = 0; k < table[j].size(); ++k) {
      out << j << ',' << k << ',' << table[j][k].sign << ',' << table[j][k].index << '\n';
    }
  }
  return out.str();
}

std::string table_to_json(const Signature& sig, Orientation o,
                          const std::vector<std::vector<TableEntry>>& table, int indent) {
  json j;
  j["level"] = sig.level();
  j["signs"] = signs_json(sig);
  j["orientation"] = std::string(orientation_name(o));
  json rows = json::array();
  for (std::size_t a = 0; a < table.size(); ++a) {
    for (std::size_t b = 0; b < table[a].size(); ++b) {
      json row;
      row["j"] = a;
      row["k"] = b;
      row["sign"] = table[a][b].sign;
      row["m"] = table[a][b].index;
      rows.push_back(row);
    }
  }
  j["entries"] = rows;
  return dump(j, indent);
}

std::string law_report_to_json(const LawReport& r, int indent) {
  json j;
  j["law"] = r.law;
  j["level"] = r.signature.level();
  j["signs"] = signs_json(r.signature);
  j["mode"] = mode_name(r.mode);
  j["seed"] = r.mode.seed;
  j["samples"] = r.mode.samples;
  j["orientation"] = std::string(orientation_name(r.orientation));
  j["holds"] = r.holds;
  json witness = json::array();
  for (const Element& w : r.witness) witness.push_back(element_json(w));
  j["witness"] = witness;
  if (!r.detail.empty()) j["detail"] = r.detail;
  if (r.reduction) j["reduction"] = *r.reduction;
  return dump(j, indent);
}

std::string law_report_to_text(const LawReport& r) {
  std::ostringstream out;
  out << "law: " << r.law << "\n";
  out << "level: " << r.signature.level() << "  signs: "
      << (r.signature.level() > 0 ? r.signature.pattern() : "(none)") << "\n";
  out << "orientation: " << orientation_name(r.orientation) << "\n";
  out << "mode: " << mode_name(r.mode) << " (seed " << r.mode.seed << ", samples "
      << r.mode.samples << ")\n";
  if (r.reduction) out << "reduction: " << *r.reduction << "\n";
  out << "holds: " << (r.holds ? "yes" : "no") << "\n";
  if (!r.holds) {
    for (std::size_t i = 0; i < r.witness.size(); ++i) {
      out << "witness[" << i << "]: " << r.witness[i].format() << "\n";
    }
    if (!r.detail.empty()) out << "detail: " << r.detail << "\n";
  }
  return out.str();
}

std::string zero_divisor_report_to_json(const Signature& sig, Orientation o,
                                        const ZeroDivisorBudget& budget,
                                        const std::vector<ZeroDivisorPair>& pairs, int indent) {
  json j;
  j["level"] = sig.level();
  j["signs"] = signs_json(sig);
  j["orientation"] = std::string(orientation_name(o));
  j["seed"] = budget.seed;
  j["budget"] = budget.random_samples;
  j["count"] = pairs.size();
  json arr = json::array();
  for (const ZeroDivisorPair& p : pairs) {
    json e;
    e["x"] = element_json(p.x);
    e["y"] = element_json(p.y);
    e["product"] = element_json(mul(p.x, p.y, o));
    arr.push_back(e);
  }
  j["pairs"] = arr;
  return dump(j, indent);
}

std::string zero_divisor_report_to_text(const Signature& sig,
                                        const std::vector<ZeroDivisorPair>& pairs) {
  std::ostringstream out;
  out << "zero-divisor pairs found at level " << sig.level() << ", signs "
      << (sig.level() > 0 ? sig.pattern() : "(none)") << ": " << pairs.size() << "\n";
  for (const ZeroDivisorPair& p : pairs) {
    out << "(" << p.x.format() << ") * (" << p.y.format() << ") = 0\n";
  }
  return out.str();
}

namespace {

json inverse_side_json(const OneSidedInverseReport& r) {
  json j;
  j["side"] = std::string(1, r.side);
  j["delta"] = element_json(r.delta);
  j["delta_in_nucleus"] = r.delta_in_nucleus;
  j["candidate"] = mat_entries_json(r.candidate);
  j["identity_holds"] = r.identity_holds;
  return j;
}

}  // namespace

std::string inverse_report_to_json(const OneSidedInverseReport& left,
                                   const OneSidedInverseReport& right, int indent) {
  json j;
  j["left"] = inverse_side_json(left);
  j["right"] = inverse_side_json(right);
  return dump(j, indent);
}

std::string inverse_report_to_text(const OneSidedInverseReport& r) {
  std::ostringstream out;
  const bool left = r.side == 'L';
  out << (left ? "left" : "right") << " inverse candidate (delta "
      << (left ? "D_L = d*a - c*b" : "D_R = a*d - c*b") << "):\n";
  out << "delta: " << r.delta.format() << "\n";
  out << "delta in " << (left ? "left" : "right")
      << " nucleus: " << (r.delta_in_nucleus ? "yes" : "no") << "\n";
  out << "candidate:\n" << r.candidate.format() << "\n";
  out << (left ? "candidate * X = I (interlaced): " : "X * candidate = I (interlaced): ")
      << (r.identity_holds ? "holds" : "fails") << "\n";
  return out.str();
}

std::string rl_report_to_json(const RlPatternReport& r, int indent) {
  json j;
  json pattern = json::array();
  json entries = json::array();
  for (int row = 0; row < 2; ++row) {
    json prow = json::array();
    json erow = json::array();
    for (int col = 0; col < 2; ++col) {
      const RlEntry& e = r.entries[row][col];
      prow.push_back(e.tag_pattern());
      json terms = json::array();
      for (const RlTerm& t : e.terms) {
        json tj;
        tj["factors"] = t.factors;
        tj["tag"] = std::string(1, t.tag);
        tj["value"] = element_json(t.value);
        terms.push_back(tj);
      }
      json ej;
      ej["terms"] = terms;
      erow.push_back(ej);
    }
    pattern.push_back(prow);
    entries.push_back(erow);
  }
  j["pattern"] = pattern;
  j["entries"] = entries;
  return dump(j, indent);
}

}  // namespace cdt
