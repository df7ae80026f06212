// Command-line front end: moment/cumulant conversions, boolean convolutions
// and identity verification reports.
//
// Exit status: 0 success, 1 malformed input, 2 identity violation.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "boolcum/errors.hpp"
#include "boolcum/operator_valued.hpp"
#include "boolcum/scalar_boolean.hpp"
#include "boolcum/serialize.hpp"
#include "boolcum/verification.hpp"

namespace {

using nlohmann::json;
using namespace boolcum;

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 1;
constexpr int kExitViolation = 2;

/// A mathematical identity failed; carries the report to emit.
struct IdentityViolation : std::runtime_error {
  explicit IdentityViolation(json payload)
      : std::runtime_error("identity violation"), payload(std::move(payload)) {}
  json payload;
};

struct Options {
  std::optional<std::size_t> order;
  std::size_t dim = 2;
  std::uint64_t seed = 0;
  std::size_t cases = 20;
  bool shift = false;
  std::string report_path;
  std::string input;
  std::string input_y;
};

json load(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) {
    return io::parse_text(arg);
  }
  std::ifstream in(arg);
  if (!in) throw ParseError("cannot open input '" + arg + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return io::parse_text(buffer.str());
}

MomentSeq load_moments(const std::string& arg, const Options& o) {
  auto m = io::moments_from_json(load(arg));
  return o.order ? m.truncated(*o.order) : m;
}

CumulantSeq load_cumulants(const std::string& arg, const Options& o) {
  auto b = io::cumulants_from_json(load(arg));
  return o.order ? b.truncated(*o.order) : b;
}

OVJointState load_ov_joint(const std::string& arg, const Options& o) {
  auto s = io::ov_joint_state_from_json(load(arg));
  if (!o.order) return s;
  return OVJointState(s.x().truncated(*o.order), s.y().truncated(*o.order));
}

void emit(const json& out, const Options& o) {
  const std::string text = out.dump(2) + "\n";
  std::cout << text;
  if (!o.report_path.empty()) {
    std::ofstream file(o.report_path, std::ios::binary);
    if (!file) throw ParseError("cannot write report '" + o.report_path + "'");
    file << text;
  }
}

json run_command(const std::string& command, const Options& o) {
  if (command == "moments-to-cumulants") {
    return io::to_json(moments_to_cumulants(load_moments(o.input, o)));
  }
  if (command == "cumulants-to-moments") {
    return io::to_json(cumulants_to_moments(load_cumulants(o.input, o)));
  }
  if (command == "bconv-add") {
    return io::to_json(bconv_add(load_moments(o.input, o), load_moments(o.input_y, o)));
  }
  if (command == "bconv-mul") {
    auto z = bconv_mul(load_moments(o.input, o), load_moments(o.input_y, o));
    return io::to_json(o.shift ? shift_moments(z) : z);
  }
  if (command == "btransform") {
    const auto m = load_moments(o.input, o);
    return {{"B", io::to_json(b_transform(m))}, {"M", io::to_json(m_transform(m))}};
  }
  if (command == "ov-convert") {
    const json in = load(o.input);
    if (in.contains("moments")) {
      auto d = io::ov_distribution_from_json(in);
      if (o.order) d = d.truncated(*o.order);
      return io::to_json(ov_moments_to_cumulants(d));
    }
    auto b = io::mulseries_from_json(in);
    if (o.order) {
      if (*o.order == 0 || *o.order > b.order()) throw ParseError("cannot truncate to that order");
      b = MulSeries({b.components().begin(), b.components().begin() + static_cast<long>(*o.order)});
    }
    try {
      return io::to_json(ov_cumulants_to_moments(b));
    } catch (const std::logic_error& e) {
      throw IdentityViolation(json{{"error", e.what()}});
    }
  }
  if (command == "ov-bconv-add") {
    return io::to_json(ov_bconv_add(load_ov_joint(o.input, o)));
  }
  if (command == "ov-bconv-mul") {
    auto z = ov_bconv_mul(load_ov_joint(o.input, o));
    return io::to_json(o.shift ? ov_shift_one(z) : z);
  }
  if (command == "verify" || command == "ov-verify") {
    SuiteOptions suite;
    suite.seed = o.seed;
    suite.order = o.order.value_or(command == "verify" ? 8 : 4);
    suite.dim = o.dim;
    suite.cases = o.cases;
    if (suite.order == 0 || suite.dim == 0) throw ParseError("order and dim must be positive");
    const bool scalar = command == "verify";
    const auto results = scalar ? run_scalar_suite(suite) : run_ov_suite(suite);
    json report = suite_report(scalar ? "scalar" : "ov", suite, results);
    if (!all_passed(results)) throw IdentityViolation(std::move(report));
    return report;
  }
  throw ParseError("unknown command '" + command + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Boolean cumulants: conversions, convolutions and identity checks"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("-n,--order", o.order, "Truncation order N");
    sub->add_option("--report", o.report_path, "Also write the JSON output to this path");
  };
  auto add_input = [&](CLI::App* sub, const char* help) {
    sub->add_option("input", o.input, help)->required();
  };
  auto add_pair = [&](CLI::App* sub) {
    sub->add_option("x", o.input, "Moments of X (file or inline JSON)")->required();
    sub->add_option("y", o.input_y, "Moments of Y (file or inline JSON)")->required();
  };
  auto add_verify = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "Seed for the random cases");
    sub->add_option("--cases", o.cases, "Random states per case");
  };

  auto* c = app.add_subcommand("moments-to-cumulants", "Moments -> boolean cumulants");
  add_common(c);
  add_input(c, "{\"order\": N, \"moments\": [...]}");
  c = app.add_subcommand("cumulants-to-moments", "Boolean cumulants -> moments");
  add_common(c);
  add_input(c, "{\"order\": N, \"cumulants\": [...]}");
  c = app.add_subcommand("bconv-add", "Moments of X + Y for boolean independent X, Y");
  add_common(c);
  add_pair(c);
  c = app.add_subcommand("bconv-mul", "Moments of X + Y + XY for boolean independent X, Y");
  add_common(c);
  add_pair(c);
  c->add_flag("--shift", o.shift, "Return the moments of (1 + X)(1 + Y) instead");
  c = app.add_subcommand("btransform", "B- and M-transforms of a moment sequence");
  add_common(c);
  add_input(c, "{\"order\": N, \"moments\": [...]}");
  c = app.add_subcommand("verify", "Run the scalar identity suite");
  add_common(c);
  add_verify(c);
  c = app.add_subcommand("ov-convert",
                         "Operator-valued moments -> cumulant series, or cumulant series -> moments");
  add_common(c);
  add_input(c, "distribution or multilinear function series JSON");
  c = app.add_subcommand("ov-bconv-add", "Cumulant series of X + Y");
  add_common(c);
  add_input(c, "{\"X\": distribution, \"Y\": distribution}");
  c = app.add_subcommand("ov-bconv-mul", "Cumulant series of X + Y + XY");
  add_common(c);
  add_input(c, "{\"X\": distribution, \"Y\": distribution}");
  c->add_flag("--shift", o.shift, "Return the series of (1 + X)(1 + Y) instead");
  c = app.add_subcommand("ov-verify", "Run the operator-valued identity suite");
  add_common(c);
  add_verify(c);
  c->add_option("-d,--dim", o.dim, "Matrix dimension of the base algebra");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    emit(run_command(command, o), o);
    return kExitOk;
  } catch (const IdentityViolation& v) {
    try {
      emit(v.payload, o);
    } catch (const Error& e) {
      std::cerr << "error: " << e.what() << "\n";
    }
    return kExitViolation;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
}
