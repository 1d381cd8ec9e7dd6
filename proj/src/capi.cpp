#include "cdtower.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "algebra.hpp"
#include "errors.hpp"
#include "expr.hpp"
#include "identities.hpp"
#include "json_io.hpp"
#include "matrix.hpp"
#include "verdicts.hpp"

struct cdt_element {
  cdt::Element v;
};

struct cdt_matrix {
  cdt::EmbeddedMat v;
};

namespace {

thread_local std::string g_last_error = "no error";

int map_errc(cdt::Errc c) {
  switch (c) {
    case cdt::Errc::kInvalidArgument: return CDT_ERR_INVALID_ARGUMENT;
    case cdt::Errc::kParse: return CDT_ERR_PARSE;
    case cdt::Errc::kIndexRange: return CDT_ERR_INDEX_RANGE;
    case cdt::Errc::kSignatureMismatch: return CDT_ERR_SIGNATURE_MISMATCH;
    case cdt::Errc::kNotInvertible: return CDT_ERR_NOT_INVERTIBLE;
    case cdt::Errc::kStructure: return CDT_ERR_STRUCTURE;
    case cdt::Errc::kLevelBound: return CDT_ERR_LEVEL_BOUND;
    case cdt::Errc::kDivisionByZero: return CDT_ERR_DIVISION_BY_ZERO;
    case cdt::Errc::kJson: return CDT_ERR_JSON;
  }
  return CDT_ERR_INTERNAL;
}

template <class F>
int guarded(F&& body) {
  try {
    return body();
  } catch (const cdt::CdError& e) {
    g_last_error = e.what();
    return map_errc(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return CDT_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return CDT_ERR_INTERNAL;
  }
}

int fail_arg(const char* what) {
  g_last_error = what;
  return CDT_ERR_INVALID_ARGUMENT;
}

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p == nullptr) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

cdt::Signature parse_signs(const char* signs) {
  if (signs == nullptr) throw cdt::CdError(cdt::Errc::kInvalidArgument, "signs is NULL");
  return cdt::Signature::parse(signs);
}

cdt::Orientation parse_orientation_int(int orientation) {
  if (orientation == 0) return cdt::Orientation::kDefault;
  if (orientation == 1) return cdt::Orientation::kEq1Verbatim;
  throw cdt::CdError(cdt::Errc::kInvalidArgument, "orientation must be 0 (default) or 1 (eq1-verbatim)");
}

std::string render_warnings(const std::vector<cdt::ReassociationWarning>& warnings) {
  std::string out;
  for (const cdt::ReassociationWarning& w : warnings) {
    if (!out.empty()) out += '\n';
    out += "warning: the value of \"" + w.chain + "\" depends on grouping: " + w.grouping_a +
           " = " + w.value_a.format() + " but " + w.grouping_b + " = " + w.value_b.format();
  }
  return out;
}

}  // namespace

extern "C" {

const char* cdt_version(void) { return "1.0.0"; }

const char* cdt_last_error_message(void) { return g_last_error.c_str(); }

void cdt_string_free(char* s) { std::free(s); }

void cdt_element_free(cdt_element* e) { delete e; }

void cdt_matrix_free(cdt_matrix* m) { delete m; }

int cdt_element_zero(const char* signs, cdt_element** out) {
  if (out == nullptr) return fail_arg("out is NULL");
  return guarded([&] {
    *out = new cdt_element{cdt::Element::zero(parse_signs(signs))};
    return CDT_OK;
  });
}

int cdt_element_basis(const char* signs, size_t k, cdt_element** out) {
  if (out == nullptr) return fail_arg("out is NULL");
  return guarded([&] {
    *out = new cdt_element{cdt::Element::basis(parse_signs(signs), k)};
    return CDT_OK;
  });
}

int cdt_element_eval(const char* expr, const char* signs, int orientation, char** warnings_text,
                     cdt_element** out) {
  if (out == nullptr) return fail_arg("out is NULL");
  if (expr == nullptr) return fail_arg("expr is NULL");
  return guarded([&] {
    cdt::Signature sig = parse_signs(signs);
    cdt::Orientation o = parse_orientation_int(orientation);
    cdt::ExprPtr ast = cdt::parse_expression(expr);
    std::string warnings = render_warnings(cdt::reassociation_warnings(*ast, sig, o));
    cdt::Element value = cdt::eval(*ast, sig, o);
    if (warnings_text != nullptr) *warnings_text = dup_string(warnings);
    *out = new cdt_element{std::move(value)};
    return CDT_OK;
  });
}

int cdt_element_from_json(const char* json_text, cdt_element** out) {
  if (out == nullptr) return fail_arg("out is NULL");
  if (json_text == nullptr) return fail_arg("json_text is NULL");
  return guarded([&] {
    *out = new cdt_element{cdt::element_from_json(json_text)};
    return CDT_OK;
  });
}

int cdt_element_level(const cdt_element* e, int* out) {
  if (e == nullptr || out == nullptr) return fail_arg("NULL argument");
  *out = e->v.level();
  return CDT_OK;
}

int cdt_element_coeff(const cdt_element* e, size_t k, char** out) {
  if (e == nullptr || out == nullptr) return fail_arg("NULL argument");
  return guarded([&] {
    *out = dup_string(e->v.coeff(k).str());
    return CDT_OK;
  });
}

int cdt_element_equal(const cdt_element* a, const cdt_element* b, int* out) {
  if (a == nullptr || b == nullptr || out == nullptr) return fail_arg("NULL argument");
  *out = (a->v == b->v) ? 1 : 0;
  return CDT_OK;
}

int cdt_element_is_zero(const cdt_element* e, int* out) {
  if (e == nullptr || out == nullptr) return fail_arg("NULL argument");
  *out = e->v.is_zero() ? 1 : 0;
  return CDT_OK;
}

int cdt_element_format(const cdt_element* e, char** out) {
  if (e == nullptr || out == nullptr) return fail_arg("NULL argument");
  return guarded([&] {
    *out = dup_string(e->v.format());
    return CDT_OK;
  });
}

int cdt_element_to_json(const cdt_element* e, int indent, char** out) {
  if (e == nullptr || out == nullptr) return fail_arg("NULL argument");
  return guarded([&] {
    *out = dup_string(cdt::element_to_json(e->v, indent));
    return CDT_OK;
  });
}

int cdt_element_add(const cdt_element* a, const cdt_element* b, cdt_element** out) {
  if (a == nullptr || b == nullptr || out == nullptr) return fail_arg("NULL argument");
  return guarded([&] {
    *out = new cdt_element{a->v + b->v};
    return CDT_OK;
  });
}

int cdt_element_sub(const cdt_element* a, const cdt_element* b, cdt_element** out) {
  if (a == nullptr || b == nullptr || out == nullptr) return fail_arg("NULL argument");
  return guarded([&] {
    *out = new cdt_element{a->v - b->v};
    return CDT_OK;
  });
}

int cdt_element_neg(const cdt_element* a, cdt_element** out) {
  if (a == nullptr || out == nullptr) return fail_arg("NULL argument");
  return guarded([&] {
    *out = new cdt_element{-a->v};
    return CDT_OK;
  });
}

int cdt_element_mul(const cdt_element* a, const cdt_element* b, int orientation,
                    cdt_element** out) {
  if (a == nullptr || b == nullptr || out == nullptr) return fail_arg("NULL argument");
  return guarded([&] {
    *out = new cdt_element{cdt::mul(a->v, b->v, parse_orientation_int(orientation))};
    return CDT_OK;
  });
}

int cdt_element_conjugate(const cdt_element* a, cdt_element** out) {
  if (a == nullptr || out == nullptr) return fail_arg("NULL argument");
  return guarded([&] {
    *out = new cdt_element{a->v.conjugate()};
    return CDT_OK;
  });
}

int cdt_element_norm(const cdt_element* a, int orientation, char** out) {
  if (a == nullptr || out == nullptr) return fail_arg("NULL argument");
  return guarded([&] {
    *out = dup_string(a->v.norm(parse_orientation_int(orientation)).str());
    return CDT_OK;
  });
}

int cdt_element_inverse(const cdt_element* a, int orientation, cdt_element** out, int* left_ok,
                        int* right_ok) {
  if (a == nullptr || out == nullptr) return fail_arg("NULL argument");
  return guarded([&] {
    cdt::InverseResult r = a->v.inverse(parse_orientation_int(orientation));
    if (left_ok != nullptr) *left_ok = r.left_identity ? 1 : 0;
    if (right_ok != nullptr) *right_ok = r.right_identity ? 1 : 0;
    *out = new cdt_element{std::move(r.value)};
    return CDT_OK;
  });
}

int cdt_table_csv(const char* signs, int orientation, char** out) {
  if (out == nullptr) return fail_arg("out is NULL");
  return guarded([&] {
    cdt::Signature sig = parse_signs(signs);
    *out = dup_string(cdt::table_to_csv(cdt::mul_table(sig, parse_orientation_int(orientation))));
    return CDT_OK;
  });
}

int cdt_table_json(const char* signs, int orientation, int indent, char** out) {
  if (out == nullptr) return fail_arg("out is NULL");
  return guarded([&] {
    cdt::Signature sig = parse_signs(signs);
    cdt::Orientation o = parse_orientation_int(orientation);
    *out = dup_string(cdt::table_to_json(sig, o, cdt::mul_table(sig, o), indent));
    return CDT_OK;
  });
}

int cdt_matrix_embed(const cdt_element* e, cdt_matrix** out) {
  if (e == nullptr || out == nullptr) return fail_arg("NULL argument");
  return guarded([&] {
    *out = new cdt_matrix{cdt::m_embed(e->v)};
    return CDT_OK;
  });
}

int cdt_matrix_extract(const cdt_matrix* m, cdt_element** out) {
  if (m == nullptr || out == nullptr) return fail_arg("NULL argument");
  return guarded([&] {
    *out = new cdt_element{cdt::m_extract(m->v)};
    return CDT_OK;
  });
}

int cdt_matrix_format(const cdt_matrix* m, char** out) {
  if (m == nullptr || out == nullptr) return fail_arg("NULL argument");
  return guarded([&] {
    *out = dup_string(m->v.mat.format());
    return CDT_OK;
  });
}

int cdt_matrix_to_json(const cdt_matrix* m, int indent, char** out) {
  if (m == nullptr || out == nullptr) return fail_arg("NULL argument");
  return guarded([&] {
    *out = dup_string(cdt::embedded_to_json(m->v, indent));
    return CDT_OK;
  });
}

int cdt_matrix_inverse_report(const cdt_matrix* m, int orientation, int indent, char** json_out,
                              char** text_out) {
  if (m == nullptr) return fail_arg("matrix is NULL");
  return guarded([&] {
    cdt::Orientation o = parse_orientation_int(orientation);
    cdt::OneSidedInverseReport left = cdt::interlaced_left_inverse(m->v.mat, o);
    cdt::OneSidedInverseReport right = cdt::interlaced_right_inverse(m->v.mat, o);
    if (json_out != nullptr) {
      *json_out = dup_string(cdt::inverse_report_to_json(left, right, indent));
    }
    if (text_out != nullptr) {
      *text_out = dup_string(cdt::inverse_report_to_text(left) + "\n" +
                             cdt::inverse_report_to_text(right));
    }
    return CDT_OK;
  });
}

int cdt_verify(const char* law, const char* signs, int orientation, uint64_t seed, int samples,
               int indent, char** json_out, char** text_out, int* holds) {
  if (law == nullptr) return fail_arg("law is NULL");
  return guarded([&] {
    if (!cdt::is_known_law(law)) {
      throw cdt::CdError(cdt::Errc::kInvalidArgument, "unknown law: " + std::string(law));
    }
    cdt::Signature sig = parse_signs(signs);
    cdt::Orientation o = parse_orientation_int(orientation);
    if (samples < 0) {
      throw cdt::CdError(cdt::Errc::kInvalidArgument, "samples must be nonnegative");
    }
    cdt::SampleSpec spec{
        .kind = sig.level() <= 4 ? cdt::SampleSpec::Kind::kExhaustiveBasis
                                 : cdt::SampleSpec::Kind::kRandom,
        .seed = seed,
        .samples = samples,
    };
    const std::string name(law);
    cdt::LawReport report;
    if (name == "mnemonic") {
      report = cdt::mnemonic_campaign(sig, spec, o);
    } else if (name == "adjugate") {
      report = cdt::adjugate_campaign(sig, spec, o);
    } else if (name == "alternative") {
      report = cdt::check_alternative(sig, spec, o);
    } else if (name == "flexible") {
      report = cdt::check_flexible(sig, spec, o);
    } else if (name == "moufang") {
      report = cdt::check_moufang(sig, spec, o);
    } else {
      report = cdt::check_norm_composition(sig, spec, o);
    }
    if (holds != nullptr) *holds = report.holds ? 1 : 0;
    if (json_out != nullptr) *json_out = dup_string(cdt::law_report_to_json(report, indent));
    if (text_out != nullptr) *text_out = dup_string(cdt::law_report_to_text(report));
    return CDT_OK;
  });
}

int cdt_expected_verdict(const char* law, const char* signs, int* known, int* holds) {
  if (law == nullptr || known == nullptr || holds == nullptr) return fail_arg("NULL argument");
  return guarded([&] {
    std::optional<bool> v = cdt::expected_verdict(law, parse_signs(signs));
    *known = v.has_value() ? 1 : 0;
    *holds = v.value_or(false) ? 1 : 0;
    return CDT_OK;
  });
}

int cdt_expected_verdicts_json(char** out) {
  if (out == nullptr) return fail_arg("out is NULL");
  return guarded([&] {
    *out = dup_string(std::string(cdt::expected_verdicts_raw()));
    return CDT_OK;
  });
}

int cdt_zero_divisors(const char* signs, int orientation, int budget, uint64_t seed, int indent,
                      char** json_out, char** text_out, size_t* count) {
  return guarded([&] {
    if (budget < 0) {
      throw cdt::CdError(cdt::Errc::kInvalidArgument, "budget must be nonnegative");
    }
    cdt::Signature sig = parse_signs(signs);
    cdt::Orientation o = parse_orientation_int(orientation);
    cdt::ZeroDivisorBudget b{.random_samples = budget, .seed = seed};
    std::vector<cdt::ZeroDivisorPair> pairs = cdt::find_zero_divisors(sig, b, o);
    if (count != nullptr) *count = pairs.size();
    if (json_out != nullptr) {
      *json_out = dup_string(cdt::zero_divisor_report_to_json(sig, o, b, pairs, indent));
    }
    if (text_out != nullptr) {
      *text_out = dup_string(cdt::zero_divisor_report_to_text(sig, pairs));
    }
    return CDT_OK;
  });
}

}  // extern "C"
