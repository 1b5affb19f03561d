// ghinv: batch front end. Reads {"ring": ..., "matrix": ..., "matrix2": ...,
// "matrix3": ...} from an inline JSON document, a file, or stdin, and prints a
// JSON report. Exit 0 on success, 2 when the requested inverse does not
// exist, 1 on any error (diagnostic JSON on stderr).

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ghinv/additive.hpp"
#include "ghinv/cline.hpp"
#include "ghinv/hirano.hpp"
#include "ghinv/oracle.hpp"
#include "ghinv/serialize.hpp"
#include "ghinv/spectral.hpp"

namespace {

using nlohmann::json;
using namespace ghinv;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitAbsent = 2;

struct Options {
  std::string command;
  std::string input;
  std::string ring;
  std::string mode = "thm53";
  std::string property;
  std::size_t budget = oracle::kDefaultBudget;
};

std::string read_all(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

json load_input(const std::string& input) {
  std::string text;
  const auto first = input.find_first_not_of(" \t\r\n");
  if (input.empty() || input == "-") {
    text = read_all(std::cin);
  } else if (input[first] == '{') {
    text = input;
  } else {
    std::ifstream file(input);
    if (!file) throw Error(ErrorCode::kParse, "cannot open input file '" + input + "'");
    text = read_all(file);
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParse, std::string("malformed JSON: ") + e.what());
  }
}

// Accepts a JSON descriptor or the shorthands Q, Z, Zn:26, Zp_local:2.
RingDescriptor parse_ring_flag(const std::string& flag) {
  if (!flag.empty() && flag.front() == '{') {
    try {
      return descriptor_from_json(json::parse(flag));
    } catch (const json::parse_error& e) {
      throw Error(ErrorCode::kParse, std::string("malformed --ring: ") + e.what());
    }
  }
  const auto colon = flag.find(':');
  json j{{"kind", flag.substr(0, colon)}};
  if (colon != std::string::npos) {
    std::int64_t value = 0;
    try {
      value = std::stoll(flag.substr(colon + 1));
    } catch (const std::exception&) {
      throw Error(ErrorCode::kParse, "malformed --ring '" + flag + "'");
    }
    j[j["kind"] == "Zn" ? "n" : "p"] = value;
  }
  return descriptor_from_json(j);
}

struct Input {
  RingDescriptor ring;
  json doc;

  SquareMatrix matrix(const char* key) const {
    if (!doc.contains(key)) {
      throw Error(ErrorCode::kParse, std::string("input needs \"") + key + "\"");
    }
    return matrix_from_json(doc[key], ring);
  }
  std::optional<SquareMatrix> optional_matrix(const char* key) const {
    if (!doc.contains(key)) return std::nullopt;
    return matrix(key);
  }
};

Input read_input(const Options& opt) {
  json doc = load_input(opt.input);
  if (!doc.is_object()) throw Error(ErrorCode::kParse, "input must be a JSON object");
  if (!opt.ring.empty()) return {parse_ring_flag(opt.ring), std::move(doc)};
  if (!doc.contains("ring")) {
    throw Error(ErrorCode::kParse, "input needs \"ring\" or the --ring flag");
  }
  return {descriptor_from_json(doc["ring"]), std::move(doc)};
}

void require_same_dim(const SquareMatrix& a, const SquareMatrix& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "operands have different dimensions");
  }
}

struct Result {
  json body;
  int exit_code = kExitOk;
};

Result with_witness(const std::optional<HiranoWitness>& w) {
  if (!w) return {json{{"exists", false}}, kExitAbsent};
  return {to_json(*w), kExitOk};
}

Result run_classify(const Input& in) {
  const Classification c = classify_local_2x2(in.matrix("matrix"));
  json body = to_json(c);
  const bool exists = c.kind != HiranoCase::kNoHirano;
  body["exists"] = exists;
  return {body, exists ? kExitOk : kExitAbsent};
}

Result run_hirano(const Input& in) {
  const HiranoOutcome o = hirano_inverse(in.matrix("matrix"));
  return {to_json(o), o.exists() ? kExitOk : kExitAbsent};
}

Result run_drazin(const Input& in) {
  const SquareMatrix a = in.matrix("matrix");
  if (!a.ring().is_field()) {
    throw Error(ErrorCode::kUnsupported, "Drazin inverse needs a field base ring");
  }
  const SquareMatrix d = drazin_field(a);
  return {json{{"exists", true}, {"d", to_json(d)}, {"checks", to_json(verify_hirano_axioms(a, d))}},
          kExitOk};
}

Result run_verify(const Input& in) {
  const SquareMatrix a = in.matrix("matrix");
  const SquareMatrix b = in.matrix("matrix2");
  require_same_dim(a, b);
  const HiranoReport r = verify_hirano_axioms(a, b);
  return {json{{"checks", to_json(r)}}, kExitOk};
}

Result run_cline(const Input& in) {
  const SquareMatrix a = in.matrix("matrix");
  const SquareMatrix b = in.matrix("matrix2");
  const SquareMatrix c = in.optional_matrix("matrix3").value_or(b);
  require_same_dim(a, b);
  require_same_dim(a, c);
  return with_witness(cline_generalized(a, b, c));
}

Result run_sum(const Input& in, const std::string& mode) {
  const SquareMatrix a = in.matrix("matrix");
  const SquareMatrix b = in.matrix("matrix2");
  require_same_dim(a, b);
  if (mode == "thm53") return {to_json(additive_hirano(a, b)), kExitOk};
  if (mode == "cor54") {
    json body = to_json(absorbing_sum(a, b));
    body["hypotheses"] = to_json(check_absorbing_hypotheses(a, b));
    return {body, kExitOk};
  }
  return {to_json(orthogonal_sum(a, b)), kExitOk};
}

Result run_tripotent(const Input& in) {
  const SquareMatrix a = in.matrix("matrix");
  auto split = tripotent_decompose(a);
  if (!split) return {json{{"exists", false}}, kExitAbsent};
  return {json{{"exists", true},
               {"tripotent", to_json(split->tripotent)},
               {"nilpotent", to_json(split->nilpotent)}},
          kExitOk};
}

Result run_oracle(const Options& opt) {
  if (opt.ring.empty()) throw Error(ErrorCode::kParse, "oracle needs --ring");
  if (opt.property.empty()) throw Error(ErrorCode::kParse, "oracle needs --property");
  const auto ring = oracle::parse_finite_ring(opt.ring, opt.budget);
  const auto report = oracle::exhaustive_check(opt.property, ring);
  return {to_json(report), report.ok() ? kExitOk : kExitError};
}

Result dispatch(const Options& opt) {
  if (opt.command == "oracle") return run_oracle(opt);
  const Input in = read_input(opt);
  if (opt.command == "classify") return run_classify(in);
  if (opt.command == "hirano") return run_hirano(in);
  if (opt.command == "drazin") return run_drazin(in);
  if (opt.command == "verify") return run_verify(in);
  if (opt.command == "cline") return run_cline(in);
  if (opt.command == "sum") return run_sum(in, opt.mode);
  return run_tripotent(in);
}

void print_error(const std::string& code, const std::string& message) {
  json err{{"schema", kSchemaVersion}, {"error", {{"code", code}, {"message", message}}}};
  std::cerr << err.dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Hirano inverses over exact rings"};
  app.require_subcommand(1, 1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("input", opt.input, "JSON document, file path, or - for stdin");
    sub->add_option("--ring", opt.ring, "ring descriptor overriding the input's");
  };
  const std::vector<std::pair<std::string, std::string>> commands{
      {"classify", "2x2 classification over a local ring"},
      {"hirano", "construct the generalized Hirano inverse"},
      {"drazin", "generalized Drazin inverse over a field"},
      {"verify", "check matrix2 against the axioms for matrix"},
      {"cline", "(ba)^h from (ac)^h, with a = matrix, b = matrix2, c = matrix3"},
      {"sum", "(a+b)^h for a = matrix, b = matrix2"},
      {"tripotent", "tripotent plus nilpotent decomposition over a field"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    add_common(sub);
    if (name == "sum") {
      sub->add_option("--mode", opt.mode, "thm53 | cor54 | cor55")
          ->check(CLI::IsMember({"thm53", "cor54", "cor55"}));
    }
  }
  auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive property check on M_k(Z/n)");
  oracle_cmd->add_option("--ring", opt.ring, "Zn:30 or M2(Zn:3)")->required();
  oracle_cmd->add_option("--property", opt.property, "property id")->required();
  oracle_cmd->add_option("--budget", opt.budget, "maximum enumeration size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    print_error("usage", e.what());
    return kExitError;
  }
  opt.command = app.get_subcommands().front()->get_name();

  try {
    Result r = dispatch(opt);
    r.body["schema"] = kSchemaVersion;
    std::cout << r.body.dump(2) << '\n';
    return r.exit_code;
  } catch (const Error& e) {
    print_error(std::string(to_string(e.code())), e.what());
  } catch (const std::exception& e) {
    print_error("internal", e.what());
  }
  return kExitError;
}
