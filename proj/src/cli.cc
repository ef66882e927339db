// Copyright 2026 The Etch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "etch/cli.h"

#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "etch/circuit.h"
#include "etch/graph_state.h"
#include "etch/io.h"
#include "etch/iqp.h"
#include "etch/lattice.h"
#include "etch/metrics.h"
#include "etch/oracle.h"
#include "etch/render.h"

namespace etch {

namespace {

namespace fs = std::filesystem;

struct Options {
  std::string in;
  std::string out_dir;
  std::string manifest;
  std::string format = "svg";
  std::string input = "zero";
  std::string tolerance = "25";
  std::uint64_t seed = 1;
  int seeds = 30;
  int n_min = 5;
  int n_max = 120;
  double depth_factor = kDefaultDepthFactor;
  unsigned threads = 1;
  bool show_excised = false;
  double p = 1e-3;
  int level = 1;
};

// Exit-code carrying failure raised inside a command.
struct CommandFailure {
  int code;
  std::string message;
};

Rational parse_rational(const std::string& text) {
  std::int64_t whole = 0;
  std::int64_t frac = 0;
  std::int64_t scale = 1;
  bool seen_point = false;
  bool any = false;
  for (char ch : text) {
    if (ch == '.' && !seen_point) {
      seen_point = true;
    } else if (ch >= '0' && ch <= '9' && scale < 1'000'000'000) {
      any = true;
      if (seen_point) {
        frac = frac * 10 + (ch - '0');
        scale *= 10;
      } else {
        whole = whole * 10 + (ch - '0');
      }
    } else {
      throw CommandFailure{kExitValidation, "tolerance must be a nonnegative decimal"};
    }
  }
  if (!any) throw CommandFailure{kExitValidation, "tolerance must be a nonnegative decimal"};
  return Rational::of(whole * scale + frac, scale);
}

InputPreparation parse_preparation(const std::string& name) {
  if (name == "zero") return InputPreparation::Zero;
  if (name == "plus") return InputPreparation::Plus;
  throw CommandFailure{kExitValidation, "--input must be zero or plus"};
}

std::string read_or_fail(const std::string& path) {
  if (path.empty()) throw CommandFailure{kExitValidation, "--in is required"};
  try {
    return read_file(path);
  } catch (const IoError& e) {
    throw CommandFailure{kExitIo, e.what()};
  }
}

void write_or_fail(const fs::path& path, const std::string& text) {
  try {
    write_file_atomic(path, text);
  } catch (const IoError& e) {
    throw CommandFailure{kExitIo, e.what()};
  }
}

Circuit load_valid_circuit(const Options& opt, std::ostream& err) {
  Circuit c;
  try {
    c = parse_circuit(read_or_fail(opt.in));
  } catch (const CircuitFormatError& e) {
    throw CommandFailure{kExitValidation, e.what()};
  }
  if (c.id.empty()) c.id = fs::path(opt.in).stem().string();
  if (auto violations = validate(c); !violations.empty()) {
    for (const auto& v : violations) err << "violation: " << v.message() << "\n";
    throw CommandFailure{kExitValidation, std::to_string(violations.size()) +
                                              " violation(s) in '" + opt.in + "'"};
  }
  return c;
}

int cmd_transpile(const Options& opt, std::ostream& out, std::ostream& err) {
  Circuit c = load_valid_circuit(opt, err);
  LayoutOptions lo;
  lo.input = parse_preparation(opt.input);
  Lattice l = layout(c, PatternCatalogue::standard(), lo);
  for (const auto& w : l.warnings) err << "warning: " << w << "\n";
  MetricsRow row = metrics_row(c, l);
  GraphState g = build_graph_state(l);

  const fs::path dir = opt.out_dir.empty() ? fs::path(".") : fs::path(opt.out_dir);
  write_or_fail(dir / (c.id + ".lattice.json"), lattice_to_json(l));
  write_or_fail(dir / (c.id + ".edges.txt"), edge_list_text(g));
  write_or_fail(dir / (c.id + ".metrics.csv"), metrics_csv({row}));
  out << metrics_csv({row});
  return kExitOk;
}

int cmd_bench(const Options& opt, std::ostream& out, std::ostream& err) {
  std::vector<IqpSpec> specs;
  if (!opt.manifest.empty()) {
    std::string text;
    try {
      text = read_file(opt.manifest);
    } catch (const IoError& e) {
      throw CommandFailure{kExitIo, e.what()};
    }
    try {
      specs = manifest_from_json(text);
    } catch (const std::invalid_argument& e) {
      throw CommandFailure{kExitValidation, e.what()};
    }
  } else {
    IqpSpec base;
    base.n_min = opt.n_min;
    base.n_max = opt.n_max;
    base.depth_factor = opt.depth_factor;
    specs = default_manifest(opt.seeds, opt.seed, base);
  }
  const Rational tolerance = parse_rational(opt.tolerance);

  std::vector<BatchRow> rows = run_batch(specs, opt.threads);
  std::size_t failed = 0;
  std::size_t meeting = 0;
  for (const auto& r : rows) {
    if (r.error) {
      ++failed;
      err << "row " << r.row.circuit_id << ": " << *r.error << "\n";
    } else if (r.row.ratio && meets_target(r.row.ratio, tolerance)) {
      ++meeting;
    }
  }

  std::string summary;
  try {
    summary = summary_text(summarize(rows));
  } catch (const InsufficientData& e) {
    summary = std::string("note: ") + e.what() + "\n";
  }
  summary += "rows: " + std::to_string(rows.size()) + ", failed: " + std::to_string(failed) +
             ", meeting " + tolerance.to_string() + ":1: " + std::to_string(meeting) + "\n";

  const std::string csv = batch_csv(rows);
  if (!opt.out_dir.empty()) {
    write_or_fail(fs::path(opt.out_dir) / "bench.csv", csv);
    write_or_fail(fs::path(opt.out_dir) / "summary.txt", summary);
  } else {
    out << csv << "\n";
  }
  out << summary;
  if (!rows.empty() && failed == rows.size()) return kExitValidation;
  return kExitOk;
}

int cmd_verify(const Options& opt, std::ostream& out, std::ostream& err) {
  Circuit c = load_valid_circuit(opt, err);
  EquivalenceOptions eo;
  eo.seed = opt.seed;
  EquivalenceReport report;
  try {
    report = equivalent(c, PatternCatalogue::standard(), eo);
  } catch (const TooLarge& e) {
    throw CommandFailure{kExitValidation, e.what()};
  }
  if (!opt.out_dir.empty()) {
    write_or_fail(fs::path(opt.out_dir) / (c.id + ".verify.json"),
                  equivalence_report_json({report}));
  }
  if (!report.supported) {
    out << c.id << ": not verifiable (no gates)\n";
    return kExitValidation;
  }
  out << c.id << ": " << (report.pass ? "PASS" : "FAIL") << ", worst fidelity "
      << report.worst_fidelity << ", " << report.histories
      << (report.exhaustive ? " histories (exhaustive)" : " histories (sampled)") << "\n";
  return report.pass ? kExitOk : kExitValidation;
}

int cmd_distill(const Options& opt, std::ostream& out) {
  double e = 0.0;
  try {
    e = tfactory_error(opt.p, opt.level);
  } catch (const std::invalid_argument& ex) {
    throw CommandFailure{kExitValidation, ex.what()};
  }
  out << "p = " << opt.p << ", level " << opt.level << ": output error " << e << "\n";
  for (auto proto : {TFactoryProtocol::FifteenToOne, TFactoryProtocol::Concatenated176,
                     TFactoryProtocol::Concatenated225}) {
    TFactoryModel m = tfactory_model(proto);
    out << "footprint " << tfactory_footprint(m) << " tiles";
    if (m.block_dims) out << " (" << (*m.block_dims)[0] << " x " << (*m.block_dims)[1] << ")";
    out << "\n";
  }
  return kExitOk;
}

int cmd_whatif(const Options& opt, std::ostream& out, std::ostream& err) {
  Circuit c = load_valid_circuit(opt, err);
  const Rational tolerance = parse_rational(opt.tolerance);
  MetricsRow row = metrics_row(c, layout(c));
  MetricsRow cz = whatif_substitute_cz(row);
  auto verdict = [&](const Ratio& r) -> std::string {
    if (!r) return "undefined";
    return meets_target(r, tolerance) ? "meets target" : "misses target";
  };
  out << "as transpiled: Pauli " << row.pauli << ", ratio " << format_ratio_human(row.ratio)
      << " (" << verdict(row.ratio) << ")\n";
  out << "CZ for CNOT:   Pauli " << cz.pauli << ", ratio " << format_ratio_human(cz.ratio)
      << " (" << verdict(cz.ratio) << ")\n";
  if (row.non_pauli() > 0) {
    Rational half = whatif_halve_pauli(row);
    out << "halved Pauli:  ratio " << format_ratio_human(half) << " (" << verdict(half) << ")\n";
  } else {
    out << "halved Pauli:  ratio — (undefined)\n";
  }
  return kExitOk;
}

int cmd_render(const Options& opt, std::ostream& out) {
  RenderSpec spec;
  try {
    spec.format = parse_render_format(opt.format);
  } catch (const UnknownFormat& e) {
    throw CommandFailure{kExitValidation, e.what()};
  }
  spec.show_excised = opt.show_excised;
  Lattice l;
  try {
    l = lattice_from_json(read_or_fail(opt.in));
  } catch (const std::invalid_argument& e) {
    throw CommandFailure{kExitValidation, e.what()};
  }
  const std::string doc = render_lattice(l, spec);
  if (opt.out_dir.empty()) {
    out << doc;
  } else {
    std::string stem = fs::path(opt.in).stem().string();
    write_or_fail(fs::path(opt.out_dir) / (stem + "." + opt.format), doc);
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"transpile gate-list circuits into measurement-based lattices", "etch"};
  app.require_subcommand(1);

  auto* transpile = app.add_subcommand("transpile", "lay out a circuit and write its artifacts");
  transpile->add_option("--in", opt.in, "circuit JSON file")->required();
  transpile->add_option("--out-dir", opt.out_dir, "output directory");
  transpile->add_option("--input", opt.input, "input preparation: zero or plus");

  auto* bench = app.add_subcommand("bench", "transpile a batch of seeded IQP circuits");
  bench->add_option("--manifest", opt.manifest, "batch manifest JSON");
  bench->add_option("--seed", opt.seed, "first seed");
  bench->add_option("--seeds", opt.seeds, "number of seeds")->check(CLI::NonNegativeNumber);
  bench->add_option("--n-min", opt.n_min, "fewest wires");
  bench->add_option("--n-max", opt.n_max, "most wires");
  bench->add_option("--depth-factor", opt.depth_factor, "layers per wire");
  bench->add_option("--tolerance", opt.tolerance, "Pauli:non-Pauli tolerance");
  bench->add_option("--threads", opt.threads, "worker threads");
  bench->add_option("--out-dir", opt.out_dir, "write bench.csv and summary.txt here");

  auto* verify = app.add_subcommand("verify", "check circuit/lattice equivalence");
  verify->add_option("--in", opt.in, "circuit JSON file")->required();
  verify->add_option("--seed", opt.seed, "seed for the input state and sampled histories");
  verify->add_option("--out-dir", opt.out_dir, "write a JSON report here");

  auto* distill = app.add_subcommand("distill", "T-factory error and footprint");
  distill->add_option("--p", opt.p, "physical error rate");
  distill->add_option("--level", opt.level, "distillation levels (1 or 2)");

  auto* whatif = app.add_subcommand("whatif", "CZ substitution and Pauli halving");
  whatif->add_option("--in", opt.in, "circuit JSON file")->required();
  whatif->add_option("--tolerance", opt.tolerance, "Pauli:non-Pauli tolerance");

  auto* render = app.add_subcommand("render", "draw a lattice file as DOT or SVG");
  render->add_option("--in", opt.in, "lattice JSON file")->required();
  render->add_option("--format", opt.format, "dot or svg");
  render->add_flag("--show-excised", opt.show_excised, "draw excised cells greyed out");
  render->add_option("--out-dir", opt.out_dir, "output directory");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }

  try {
    if (*transpile) return cmd_transpile(opt, out, err);
    if (*bench) return cmd_bench(opt, out, err);
    if (*verify) return cmd_verify(opt, out, err);
    if (*distill) return cmd_distill(opt, out);
    if (*whatif) return cmd_whatif(opt, out, err);
    if (*render) return cmd_render(opt, out);
  } catch (const CommandFailure& f) {
    err << "error: " << f.message << "\n";
    return f.code;
  } catch (const LayoutError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitValidation;
}

}  // namespace etch
