#include "resovar/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "resovar/errors.hpp"
#include "resovar/gallery.hpp"

namespace resovar {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::BadInput, "cannot open file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Method parse_method(const std::string& name) {
  if (name == "formula") return Method::Formula;
  if (name == "oracle") return Method::Oracle;
  if (name == "both") return Method::Both;
  fail(ErrorCode::BadInput, "unknown method '" + name + "'");
}

Arrangement load_arrangement(const Command& cmd) {
  return parse_arrangement(read_file(cmd.target));
}

Chart chart_for(const Command& cmd, const Arrangement& arr) {
  return make_chart(arr, cmd.infinity.value_or(default_infinity(arr)));
}

Json base_doc(const Command& cmd) {
  return Json{{"verb", cmd.verb}, {"input", cmd.target}};
}

RunResult run_lattice(const Command& cmd) {
  const Arrangement arr = load_arrangement(cmd);
  Json doc = base_doc(cmd);
  doc["result"] = to_json(intersection_lattice(arr));
  return {0, doc};
}

RunResult run_classify(const Command& cmd) {
  const Arrangement arr = load_arrangement(cmd);
  Json doc = base_doc(cmd);
  doc["result"] = to_json(classify(arr));
  return {0, doc};
}

RunResult run_tutte(const Command& cmd) {
  const Arrangement arr = load_arrangement(cmd);
  Json doc = base_doc(cmd);
  doc["result"] = to_json(tutte_polynomial(arr));
  return {0, doc};
}

RunResult run_resonance(const Command& cmd) {
  const Arrangement arr = load_arrangement(cmd);
  const Chart chart = chart_for(cmd, arr);
  Json doc = base_doc(cmd);

  if (cmd.weights_path) {
    // pointwise oracle query; works for every class
    const RatVec values = parse_rat_vector(read_file(*cmd.weights_path));
    if (values.size() != chart.n()) {
      fail(ErrorCode::DimensionMismatch,
           "weights file has " + std::to_string(values.size()) + " entries, chart has " +
               std::to_string(chart.n()) + " affine lines");
    }
    const OneForm alpha{values};
    const std::size_t dim = aomoto_h1_dim(chart, alpha);
    doc["result"] = Json{{"chart", to_json(chart)},
                         {"weights", rat_vector_to_strings(values)},
                         {"aomoto_h1_dim", dim},
                         {"resonant", dim >= cmd.k},
                         {"k", cmd.k}};
    return {0, doc};
  }

  int status = 0;
  Json result{{"chart", to_json(chart)}, {"k", cmd.k}};
  if (cmd.method != Method::Oracle) {
    const ResonanceStratum stratum = resonance_k(arr, chart, cmd.k, cmd.h0);
    result["components"] = to_json(chart, stratum.components);
    result["origin_in_stratum"] = stratum.origin;
  }
  if (cmd.method != Method::Formula) {
    const VerificationReport report = verify_oracle(arr, chart, cmd.samples, cmd.seed, cmd.h0);
    result["verification"] = to_json(report);
    doc["seed"] = cmd.seed;
    if (!report.all_ok()) status = 1;
  }
  doc["result"] = result;
  return {status, doc};
}

RunResult run_charvar(const Command& cmd) {
  const Arrangement arr = load_arrangement(cmd);
  const Chart chart = chart_for(cmd, arr);
  const std::vector<CharComponent> subtori = char_components(arr, chart, cmd.h0);
  Json doc = base_doc(cmd);
  Json result{{"chart", to_json(chart)}};
  Json list = Json::array();
  for (const CharComponent& sub : subtori) list.push_back(to_json(chart, sub));
  result["components"] = list;

  int status = 0;
  if (cmd.method != Method::Formula) {
    // exp correspondence: images of resonance samples satisfy the
    // matching subtorus relations exactly
    const std::vector<Component> components = enumerate_components(arr, chart, cmd.h0);
    std::mt19937_64 rng(cmd.seed);
    bool all_match = true;
    std::size_t checked = 0;
    for (const CharComponent& sub : subtori) {
      const Component& component = components[sub.component];
      for (std::size_t s = 0; s < cmd.samples; ++s) {
        const LocalSystem lambda = sample_subtorus_point(chart, component, rng);
        ++checked;
        all_match = all_match && sub.contains(chart, lambda);
      }
    }
    result["exp_correspondence"] = Json{{"samples", checked}, {"all_match", all_match}};
    doc["seed"] = cmd.seed;
    if (!all_match) status = 1;
  }
  doc["result"] = result;
  return {status, doc};
}

RunResult run_h1(const Command& cmd) {
  if (!cmd.local_system_path) {
    fail(ErrorCode::BadInput, "h1 needs --local-system <file>");
  }
  const Arrangement arr = load_arrangement(cmd);
  const Chart chart = chart_for(cmd, arr);
  const LocalSystem lambda = parse_local_system(read_file(*cmd.local_system_path), arr.size());
  const auto [dim, report] = local_system_h1_with_witness(arr, chart, lambda);
  Json doc = base_doc(cmd);
  doc["result"] = Json{{"chart", to_json(chart)},
                       {"h1", dim},
                       {"admissibility", to_json(arr, chart.lattice, report)}};
  return {0, doc};
}

RunResult run_verify(const Command& cmd) {
  const Arrangement arr = load_arrangement(cmd);
  const Chart chart = chart_for(cmd, arr);
  const VerificationReport report = verify_oracle(arr, chart, cmd.samples, cmd.seed, cmd.h0);
  Json doc = base_doc(cmd);
  doc["seed"] = cmd.seed;
  doc["result"] = Json{{"chart", to_json(chart)}, {"verification", to_json(report)}};
  return {report.all_ok() ? 0 : 1, doc};
}

RunResult run_gallery(const Command& cmd) {
  const Arrangement arr = gallery(cmd.target);
  Json doc = base_doc(cmd);
  Json result = to_json(arr);
  result["name"] = cmd.target;
  result["arr_text"] = arrangement_to_text(arr);
  result["classify"] = to_json(classify(arr));
  doc["result"] = result;
  return {0, doc};
}

}  // namespace

int default_infinity(const Arrangement& arr) {
  const ClassInfo info = classify(arr);
  switch (info.tag) {
    case ArrClass::C2: {
      int best = -1;
      for (const auto& [i, j] : info.pair_covers) best = std::max(best, std::max(i, j));
      return best;
    }
    case ArrClass::C1:
      return *info.h0;
    case ArrClass::Nodal:
    case ArrClass::Other:
      return static_cast<int>(arr.size()) - 1;
  }
  return static_cast<int>(arr.size()) - 1;
}

RunResult run(const Command& cmd) {
  if (cmd.verb == "lattice") return run_lattice(cmd);
  if (cmd.verb == "classify") return run_classify(cmd);
  if (cmd.verb == "tutte") return run_tutte(cmd);
  if (cmd.verb == "resonance") return run_resonance(cmd);
  if (cmd.verb == "charvar") return run_charvar(cmd);
  if (cmd.verb == "h1") return run_h1(cmd);
  if (cmd.verb == "verify") return run_verify(cmd);
  if (cmd.verb == "gallery") return run_gallery(cmd);
  fail(ErrorCode::BadInput, "unknown verb '" + cmd.verb + "'");
}

namespace {

struct ParsedArgs {
  Command cmd;
  bool help = false;
  std::string help_text;
  std::string error;  // CLI parse error, empty when fine
};

ParsedArgs parse_args(const std::vector<std::string>& args) {
  CLI::App app{"exact resonance and characteristic varieties of line arrangements"};
  app.require_subcommand(1);

  ParsedArgs parsed;
  Command& cmd = parsed.cmd;
  std::string method = "formula";

  auto add_common = [&](CLI::App* sub, bool wants_chart) {
    sub->add_option("arrangement", cmd.target, "arrangement file (.arr)")->required();
    if (wants_chart) {
      sub->add_option("--infinity", cmd.infinity, "index of the line sent to infinity");
      sub->add_option("--h0", cmd.h0, "index of the affine cover line (C2 only)");
    }
  };

  auto* lattice = app.add_subcommand("lattice", "intersection lattice");
  add_common(lattice, false);
  auto* cls = app.add_subcommand("classify", "multiple-point classification");
  add_common(cls, false);
  auto* tutte = app.add_subcommand("tutte", "Tutte polynomial of the line matroid");
  add_common(tutte, false);

  auto* resonance = app.add_subcommand("resonance", "first resonance variety");
  add_common(resonance, true);
  resonance->add_option("--weights", cmd.weights_path,
                        "one-form residues; queries the membership oracle pointwise");
  resonance->add_option("--method", method, "formula|oracle|both");
  resonance->add_option("--k", cmd.k, "resonance depth (default 1)");
  resonance->add_option("--samples", cmd.samples, "oracle samples per component");
  resonance->add_option("--seed", cmd.seed, "oracle seed");

  auto* charvar = app.add_subcommand("charvar", "characteristic variety subtori");
  add_common(charvar, true);
  charvar->add_option("--method", method, "formula|both: both checks the exp correspondence");
  charvar->add_option("--samples", cmd.samples, "exp samples per component");
  charvar->add_option("--seed", cmd.seed, "sampling seed");

  auto* h1 = app.add_subcommand("h1", "dim H^1 with local system coefficients");
  add_common(h1, true);
  h1->add_option("--local-system", cmd.local_system_path, "residue classes, one per line")
      ->required();

  auto* verify = app.add_subcommand("verify", "cross-validate enumeration against the oracle");
  add_common(verify, true);
  verify->add_option("--samples", cmd.samples, "samples per component (default 100)");
  verify->add_option("--seed", cmd.seed, "sampling seed (default 0)");

  auto* gal = app.add_subcommand("gallery", "print a built-in fixture");
  gal->add_option("name", cmd.target, "central(n), nodal(n), ex3, braid, parallelogram_min, other7")
      ->required();

  std::vector<char*> argv;
  std::vector<std::string> storage = args;
  storage.insert(storage.begin(), "resovar");
  argv.reserve(storage.size());
  for (std::string& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    parsed.help = true;
    parsed.help_text = app.help();
    return parsed;
  } catch (const CLI::ParseError& e) {
    parsed.error = e.what();
    return parsed;
  }

  cmd.verb = app.get_subcommands().front()->get_name();
  cmd.method = parse_method(method);
  return parsed;
}

}  // namespace

Outcome run_captured(const std::vector<std::string>& args) {
  Outcome outcome;
  try {
    const ParsedArgs parsed = parse_args(args);
    if (parsed.help) {
      outcome.doc = Json{{"help", parsed.help_text}};
      return outcome;
    }
    if (!parsed.error.empty()) {
      outcome.status = 2;
      outcome.error = parsed.error;
      return outcome;
    }
    RunResult result = run(parsed.cmd);
    outcome.status = result.status;
    outcome.doc = std::move(result.doc);
  } catch (const Error& e) {
    outcome.status = e.is_domain_error() ? 1 : 2;
    outcome.error = e.what();
  } catch (const std::exception& e) {
    outcome.status = 2;
    outcome.error = e.what();
  }
  return outcome;
}

int main_entry(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const Outcome outcome = run_captured(args);
  if (!outcome.error.empty()) {
    std::cerr << "error: " << outcome.error << "\n";
  }
  if (!outcome.doc.is_null()) {
    std::cout << outcome.doc.dump(2) << "\n";
  }
  return outcome.status;
}

}  // namespace resovar
