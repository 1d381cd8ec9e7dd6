// cdtower: command-line front end for the cdtower shared library. All
// algebra happens behind the C API in cdtower.h; this file only handles
// flags, formats and exit codes.
//
// Exit codes: 0 success / expected verdict, 1 unexpected verdict (verify),
// 2 usage or configuration error.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "cdtower.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUnexpected = 1;
constexpr int kExitUsage = 2;

struct Config {
  int level = -1;
  std::string signs;
  std::string format;
  std::string orientation = "default";
  std::uint64_t seed = 0;
  int samples = 1000;
  int budget = 1000;
  bool inverse = false;

  // resolved
  std::string pattern;
  int orient = 0;
};

// Wraps a C string from the library, frees it, returns a std::string.
std::string take(char* s) {
  std::string out = s == nullptr ? std::string() : std::string(s);
  cdt_string_free(s);
  return out;
}

[[noreturn]] void usage_error(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  std::exit(kExitUsage);
}

[[noreturn]] void library_error() { usage_error(cdt_last_error_message()); }

void add_common(CLI::App* cmd, Config& cfg, bool with_samples, bool with_budget) {
  cmd->add_option("--level", cfg.level, "Doubling level n (algebra dimension 2^n)");
  cmd->add_option("--signs", cfg.signs,
                  "Sign pattern, one '+'/'-' per level (e.g. \"--+\"), or a preset: "
                  "\"division\", \"split-octonion\"");
  cmd->add_option("--format", cfg.format, "Output format (default: text, or $CDTOWER_FORMAT)");
  cmd->add_option("--orientation", cfg.orientation,
                  "Doubling orientation: default | eq1-verbatim");
  cmd->add_option("--seed", cfg.seed, "Seed for random sampling");
  if (with_samples) {
    cmd->add_option("--samples", cfg.samples, "Random sample count for verification campaigns");
  }
  if (with_budget) {
    cmd->add_option("--budget", cfg.budget, "Random pair budget for the zero-divisor search");
  }
}

// Expands presets, reconciles --level with --signs, resolves orientation.
void resolve(Config& cfg) {
  if (cfg.signs == "division") {
    if (cfg.level < 0) usage_error("--signs division needs --level");
    cfg.pattern = std::string(static_cast<std::size_t>(cfg.level), '-');
  } else if (cfg.signs == "split-octonion") {
    if (cfg.level >= 0 && cfg.level != 3) {
      usage_error("--signs split-octonion fixes level 3, got --level " +
                  std::to_string(cfg.level));
    }
    cfg.level = 3;
    cfg.pattern = "--+";
  } else if (!cfg.signs.empty()) {
    for (char c : cfg.signs) {
      if (c != '+' && c != '-') {
        usage_error("--signs must be '+'/'-' characters or a preset, got \"" + cfg.signs + "\"");
      }
    }
    if (cfg.level >= 0 && cfg.level != static_cast<int>(cfg.signs.size())) {
      usage_error("--signs length " + std::to_string(cfg.signs.size()) +
                  " does not match --level " + std::to_string(cfg.level));
    }
    cfg.level = static_cast<int>(cfg.signs.size());
    cfg.pattern = cfg.signs;
  } else if (cfg.level >= 0) {
    cfg.pattern = std::string(static_cast<std::size_t>(cfg.level), '-');
  } else {
    usage_error("pass --level and/or --signs");
  }

  if (cfg.orientation == "default") {
    cfg.orient = 0;
  } else if (cfg.orientation == "eq1-verbatim") {
    cfg.orient = 1;
  } else {
    usage_error("--orientation must be \"default\" or \"eq1-verbatim\"");
  }

  if (cfg.samples < 0) usage_error("--samples must be nonnegative");
  if (cfg.budget < 0) usage_error("--budget must be nonnegative");
}

// Picks the output format: flag, then environment, then default; verifies it
// is one of the formats the command supports.
std::string resolve_format(const Config& cfg, std::initializer_list<const char*> allowed,
                           const char* fallback) {
  std::string fmt = cfg.format;
  if (fmt.empty()) {
    const char* env = std::getenv("CDTOWER_FORMAT");
    if (env != nullptr && *env != '\0') fmt = env;
  }
  if (fmt.empty()) fmt = fallback;
  for (const char* a : allowed) {
    if (fmt == a) return fmt;
  }
  std::string list;
  for (const char* a : allowed) {
    if (!list.empty()) list += ", ";
    list += a;
  }
  usage_error("--format \"" + fmt + "\" not supported here (choose from: " + list + ")");
}

int run_eval(const std::string& expr, Config& cfg) {
  resolve(cfg);
  const std::string fmt = resolve_format(cfg, {"text", "json"}, "text");
  char* warnings = nullptr;
  cdt_element* value = nullptr;
  if (cdt_element_eval(expr.c_str(), cfg.pattern.c_str(), cfg.orient, &warnings, &value) !=
      CDT_OK) {
    library_error();
  }
  const std::string warning_text = take(warnings);
  if (!warning_text.empty()) std::cerr << warning_text << "\n";
  char* rendered = nullptr;
  const int rc = fmt == "json" ? cdt_element_to_json(value, 2, &rendered)
                               : cdt_element_format(value, &rendered);
  if (rc != CDT_OK) {
    cdt_element_free(value);
    library_error();
  }
  std::cout << take(rendered) << "\n";
  cdt_element_free(value);
  return kExitOk;
}

int run_table(Config& cfg) {
  resolve(cfg);
  // The table's human-readable form is its CSV form.
  const std::string fmt = resolve_format(cfg, {"text", "csv", "json"}, "csv");
  char* rendered = nullptr;
  const int rc = fmt == "json" ? cdt_table_json(cfg.pattern.c_str(), cfg.orient, 2, &rendered)
                               : cdt_table_csv(cfg.pattern.c_str(), cfg.orient, &rendered);
  if (rc != CDT_OK) library_error();
  std::cout << take(rendered);
  if (fmt == "json") std::cout << "\n";
  return kExitOk;
}

int run_verify(const std::string& law, Config& cfg) {
  resolve(cfg);
  const std::string fmt = resolve_format(cfg, {"text", "json"}, "text");
  char* json_out = nullptr;
  char* text_out = nullptr;
  int holds = 0;
  if (cdt_verify(law.c_str(), cfg.pattern.c_str(), cfg.orient, cfg.seed, cfg.samples, 2,
                 fmt == "json" ? &json_out : nullptr, fmt == "json" ? nullptr : &text_out,
                 &holds) != CDT_OK) {
    library_error();
  }
  std::cout << take(fmt == "json" ? json_out : text_out);
  if (fmt == "json") std::cout << "\n";

  int known = 0;
  int expected = 0;
  if (cdt_expected_verdict(law.c_str(), cfg.pattern.c_str(), &known, &expected) != CDT_OK) {
    library_error();
  }
  if (known == 0) {
    usage_error("no documented expectation for law \"" + law + "\" at level " +
                std::to_string(cfg.level) + ", signs \"" + cfg.pattern + "\"");
  }
  if ((holds != 0) == (expected != 0)) {
    return kExitOk;
  }
  std::cerr << "unexpected verdict: law \"" << law << "\" " << (holds != 0 ? "holds" : "fails")
            << " but the documented expectation is " << (expected != 0 ? "holds" : "fails")
            << "\n";
  return kExitUnexpected;
}

int run_zero_divisors(Config& cfg) {
  resolve(cfg);
  const std::string fmt = resolve_format(cfg, {"text", "json"}, "text");
  char* json_out = nullptr;
  char* text_out = nullptr;
  size_t count = 0;
  if (cdt_zero_divisors(cfg.pattern.c_str(), cfg.orient, cfg.budget, cfg.seed, 2,
                        fmt == "json" ? &json_out : nullptr,
                        fmt == "json" ? nullptr : &text_out, &count) != CDT_OK) {
    library_error();
  }
  std::cout << take(fmt == "json" ? json_out : text_out);
  if (fmt == "json") std::cout << "\n";
  return kExitOk;
}

int run_matrix(const std::string& expr, Config& cfg) {
  resolve(cfg);
  const std::string fmt = resolve_format(cfg, {"text", "json"}, "text");
  char* warnings = nullptr;
  cdt_element* value = nullptr;
  if (cdt_element_eval(expr.c_str(), cfg.pattern.c_str(), cfg.orient, &warnings, &value) !=
      CDT_OK) {
    library_error();
  }
  const std::string warning_text = take(warnings);
  if (!warning_text.empty()) std::cerr << warning_text << "\n";

  cdt_matrix* mat = nullptr;
  if (cdt_matrix_embed(value, &mat) != CDT_OK) {
    cdt_element_free(value);
    library_error();
  }
  cdt_element_free(value);

  char* rendered = nullptr;
  const int rc = fmt == "json" ? cdt_matrix_to_json(mat, 2, &rendered)
                               : cdt_matrix_format(mat, &rendered);
  if (rc != CDT_OK) {
    cdt_matrix_free(mat);
    library_error();
  }
  std::cout << take(rendered) << "\n";

  if (cfg.inverse) {
    char* inv_json = nullptr;
    char* inv_text = nullptr;
    if (cdt_matrix_inverse_report(mat, cfg.orient, 2, fmt == "json" ? &inv_json : nullptr,
                                  fmt == "json" ? nullptr : &inv_text) != CDT_OK) {
      cdt_matrix_free(mat);
      library_error();
    }
    std::cout << take(fmt == "json" ? inv_json : inv_text);
    if (fmt == "json") std::cout << "\n";
  }
  cdt_matrix_free(mat);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cayley-Dickson tower algebras: evaluation, tables, identity verification, "
               "zero divisors, and the interlaced 2x2 matrix model"};
  app.require_subcommand(1);

  Config cfg;
  std::string expr;
  std::string law;

  CLI::App* eval_cmd = app.add_subcommand("eval", "Parse and evaluate an expression");
  eval_cmd->add_option("expr", expr, "Expression, e.g. \"(e0+e4)*(e0-e4)\"")->required();
  add_common(eval_cmd, cfg, false, false);

  CLI::App* table_cmd = app.add_subcommand("table", "Export the basis multiplication table");
  add_common(table_cmd, cfg, false, false);

  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "Run one law campaign and compare against the documented expectation");
  verify_cmd
      ->add_option("law", law, "mnemonic | alternative | flexible | moufang | norm | adjugate")
      ->required();
  add_common(verify_cmd, cfg, true, false);

  CLI::App* zd_cmd = app.add_subcommand("zero-divisors", "Search for zero-divisor pairs");
  add_common(zd_cmd, cfg, false, true);

  CLI::App* matrix_cmd =
      app.add_subcommand("matrix", "Embed an element as its 2x2 matrix model");
  matrix_cmd->add_option("expr", expr, "Expression for the element to embed")->required();
  matrix_cmd->add_flag("--inverse", cfg.inverse,
                       "Also report both one-sided interlaced inverse candidates");
  add_common(matrix_cmd, cfg, false, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (eval_cmd->parsed()) return run_eval(expr, cfg);
  if (table_cmd->parsed()) return run_table(cfg);
  if (verify_cmd->parsed()) return run_verify(law, cfg);
  if (zd_cmd->parsed()) return run_zero_divisors(cfg);
  if (matrix_cmd->parsed()) return run_matrix(expr, cfg);
  return kExitUsage;
}
