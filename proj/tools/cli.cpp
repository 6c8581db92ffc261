#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "fipkit/assoc.hpp"
#include "fipkit/errors.hpp"
#include "fipkit/reduce.hpp"
#include "fipkit/text_format.hpp"

namespace fipkit::cli {

namespace {

struct RunConfig {
  std::string command;
  std::string input;
  std::string output;  // empty: standard output
  std::string field;   // empty: no override
  std::vector<std::int64_t> box;
  bool generators_only = false;
  int verbosity = 0;
};

// Thrown for failures that map onto an exit status other than parse errors.
struct Abort {
  int code;
  std::string message;
};

bool is_integer(const std::string& s) {
  std::int64_t v;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  return ec == std::errc() && ptr == s.data() + s.size();
}

// `--box` takes 2n integers, some possibly negative, with n unknown until
// the input is read. Pull them out before CLI11 sees the arguments.
std::vector<std::string> extract_box(const std::vector<std::string>& args,
                                     std::optional<std::vector<std::int64_t>>& box) {
  std::vector<std::string> rest;
  for (std::size_t k = 0; k < args.size(); ++k) {
    if (args[k] != "--box") {
      rest.push_back(args[k]);
      continue;
    }
    box.emplace();
    while (k + 1 < args.size() && is_integer(args[k + 1])) {
      box->push_back(std::stoll(args[++k]));
    }
  }
  return rest;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void check_field(const RunConfig& cfg, const Field& declared) {
  if (!cfg.field.empty() && cfg.field != declared.name()) {
    throw Abort{kValidationError,
                "field override " + cfg.field + " does not match declared field " + declared.name()};
  }
}

GradedModule load_module(const RunConfig& cfg, const std::string& text) {
  GradedModule m = parse_module(text);
  check_field(cfg, m.field);
  if (auto diag = validate(m)) throw Abort{kValidationError, "invalid module: " + diag->message};
  return m;
}

MonomialMatrix load_matrix(const RunConfig& cfg, const std::string& text) {
  MonomialMatrix a = parse_matrix(text, SupportCheck::defer);
  check_field(cfg, a.field);
  try {
    require_valid(a);
  } catch (const ValidationError& e) {
    throw Abort{kValidationError, e.what()};
  }
  return a;
}

std::string degree_fields(const Degree& g) {
  std::string s;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(g[i]);
  }
  return s;
}

std::string cmd_present(const RunConfig& cfg, const std::string& text, std::ostream& err) {
  const GradedModule m = load_module(cfg, text);
  const MonomialMatrix a = canonicalize(assoc_presentation(m));
  if (cfg.verbosity > 0) err << "presentation " << a.rows() << "x" << a.cols() << "\n";
  return serialize(a);
}

std::string cmd_reduce(const RunConfig& cfg, const std::string& text, std::ostream& err) {
  const MonomialMatrix a = load_matrix(cfg, text);
  const Reduction r = cfg.generators_only ? reduce_generators(a) : reduce(a);
  err << format_report(r.report, a.field);
  return serialize(canonicalize(r.matrix));
}

std::string cmd_dual(const RunConfig& cfg, const std::string& text) {
  return serialize(canonicalize(matlis_dual(load_matrix(cfg, text))));
}

std::string cmd_check(const RunConfig& cfg, const std::string& text) {
  if (detect_kind(text) == FileKind::module) {
    const GradedModule m = parse_module(text);
    check_field(cfg, m.field);
    if (auto diag = validate(m)) throw Abort{kValidationError, "invalid module: " + diag->message};
    return "valid module\n";
  }
  const MonomialMatrix a = parse_matrix(text, SupportCheck::defer);
  check_field(cfg, a.field);
  const auto bad = support_violations(a);
  if (!bad.empty()) {
    std::string msg = "invalid matrix:";
    for (const auto& [i, j] : bad) {
      msg += "\nsupport violation at (" + std::to_string(i) + "," + std::to_string(j) + ")";
    }
    throw Abort{kValidationError, msg};
  }
  if (!is_generator_minimal(a)) return "valid, not generator-minimal\n";
  if (!is_minimal(a)) return "valid, generator-minimal, not minimal\n";
  return "valid, minimal\n";
}

std::string cmd_hilbert(const RunConfig& cfg, const std::string& text,
                        const std::optional<std::vector<std::int64_t>>& box_arg) {
  const MonomialMatrix a = load_matrix(cfg, text);
  std::optional<Box> box;
  if (box_arg) {
    if (box_arg->size() != 2 * a.n) {
      throw Abort{kValidationError, "--box needs " + std::to_string(2 * a.n) + " integers"};
    }
    box = Box{Degree(std::vector<std::int64_t>(box_arg->begin(), box_arg->begin() + a.n)),
              Degree(std::vector<std::int64_t>(box_arg->begin() + a.n, box_arg->end()))};
  } else {
    box = default_box(a);
  }
  std::ostringstream out;
  if (box) {
    box->for_each([&](const Degree& g) {
      if (const auto d = image_dim(a, g); d > 0) out << degree_fields(g) << ' ' << d << "\n";
    });
  }
  return out.str();
}

std::string cmd_betti(const RunConfig& cfg, const std::string& text) {
  const GradedModule m = load_module(cfg, text);
  std::ostringstream out;
  for (const auto& [g, c] : betti0(m)) out << "gen " << degree_fields(g) << ' ' << c << "\n";
  for (const auto& [g, c] : socle(m)) out << "cogen " << degree_fields(g) << ' ' << c << "\n";
  return out.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::optional<std::vector<std::int64_t>> box;
  std::vector<std::string> rest = extract_box(args, box);

  RunConfig cfg;
  CLI::App app{"Minimal flat-injective presentations of finitely supported Z^n-graded modules",
               "fipkit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("-o,--output", cfg.output, "Write the result here instead of stdout");
  app.add_option("--field", cfg.field, "Abort unless the input declares this field");
  app.add_flag("-v,--verbose", cfg.verbosity, "Print progress to stderr");
  app.footer("--box lo_1 .. lo_n hi_1 .. hi_n   degree box for 'hilbert'");

  auto add = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("input", cfg.input, "Input file")->required();
    sub->final_callback([&cfg, name] { cfg.command = name; });
    return sub;
  };
  add("present", "Associated free-cofree presentation of a module file");
  add("reduce", "Minimize a monomial matrix; report on stderr")
      ->add_flag("--generators-only", cfg.generators_only, "Only remove redundant generators");
  add("dual", "Matlis dual of a monomial matrix");
  add("check", "Validate a module or matrix file; report minimality of matrices");
  add("hilbert", "Hilbert function of the image of a monomial matrix");
  add("betti", "Generator and cogenerator degrees of a module");

  try {
    std::reverse(rest.begin(), rest.end());
    app.parse(std::move(rest));
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }
  if (box && cfg.command != "hilbert") {
    err << "--box only applies to 'hilbert'\n";
    return static_cast<int>(CLI::ExitCodes::ExtrasError);
  }

  try {
    const std::string text = read_file(cfg.input);
    std::string result;
    if (cfg.command == "present") {
      result = cmd_present(cfg, text, err);
    } else if (cfg.command == "reduce") {
      result = cmd_reduce(cfg, text, err);
    } else if (cfg.command == "dual") {
      result = cmd_dual(cfg, text);
    } else if (cfg.command == "check") {
      result = cmd_check(cfg, text);
    } else if (cfg.command == "hilbert") {
      result = cmd_hilbert(cfg, text, box);
    } else {
      result = cmd_betti(cfg, text);
    }
    if (cfg.output.empty()) {
      out << result;
    } else {
      std::ofstream file(cfg.output, std::ios::binary);
      if (!(file << result)) {
        err << "cannot write " << cfg.output << "\n";
        return kValidationError;
      }
    }
    return kSuccess;
  } catch (const ParseError& e) {
    err << cfg.input << ": " << e.what() << "\n";
    return kParseError;
  } catch (const Abort& a) {
    err << cfg.input << ": " << a.message << "\n";
    return a.code;
  } catch (const std::exception& e) {
    err << cfg.input << ": " << e.what() << "\n";
    return kValidationError;
  }
}

}  // namespace fipkit::cli
