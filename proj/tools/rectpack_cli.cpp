// rectpack: run online packers, adversaries and oracles from the command line.

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "rectpack/adversaries.hpp"
#include "rectpack/harness.hpp"

using namespace rectpack;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write " + path);
  out << text;
}

bool parse_switch(const std::string& v) {
  if (v == "on") return true;
  if (v == "off") return false;
  throw ConfigError("expected on or off, got '" + v + "'");
}

Length parse_param(const std::string& v, const char* what) {
  try {
    return parse_length(v);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("--") + what + ": " + e.what());
  }
}

struct StreamArgs {
  std::string input;
  std::string gen;
  std::size_t n = 20;
  std::uint64_t seed = 1;
  int k = 11;
  std::string eps = "1/1000";

  void add(CLI::App* cmd, bool with_input) {
    if (with_input) cmd->add_option("--input", input, "stream file, one '<w> <h>' per line");
    cmd->add_option("--gen", gen, "generator name instead of --input");
    cmd->add_option("--n", n, "pieces to generate");
    cmd->add_option("--seed", seed, "generator seed");
    cmd->add_option("--k", k, "level parameter of the structured streams");
    cmd->add_option("--eps", eps, "epsilon of the structured streams");
  }
  GenParams params(std::uint64_t seed_offset = 0) const {
    return GenParams{n, seed + seed_offset, k, parse_param(eps, "eps")};
  }
};

int run_pack(const StreamArgs& s, const std::string& algorithm, const std::string& objective,
             const std::string& rotations, std::size_t trials, const std::string& format,
             const std::string& out, const std::string& svg) {
  RunOptions opts;
  opts.algorithm = algorithm;
  if (objective.empty()) {
    opts.objective = packer_class(algorithm) == ObjectiveClass::area ? Objective::area
                                                                      : Objective::perimeter;
  } else {
    opts.objective = parse_objective(objective);
  }
  if (!rotations.empty()) opts.rotations = parse_switch(rotations);
  if (format != "json" && format != "csv") throw ConfigError("--report must be json or csv");
  if (s.input.empty() == s.gen.empty()) throw ConfigError("give exactly one of --input or --gen");
  if (trials == 0) throw ConfigError("--trials must be positive");
  if (trials > 1 && s.gen.empty()) throw ConfigError("--trials needs a generator");

  std::vector<RunReport> reports(trials);
  if (!s.input.empty()) {
    reports[0] = run(parse_stream(read_file(s.input)), opts);
  } else {
    // Trials are independent; each worker takes the next index.
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
      for (std::size_t t; (t = next++) < trials;) {
        try {
          reports[t] = run(generate(s.gen, s.params(t)), opts);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    };
    std::size_t threads = std::min<std::size_t>(trials, std::max(1u, std::thread::hardware_concurrency()));
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
  }

  if (format == "csv") {
    std::string text = csv_header() + "\n";
    for (std::size_t t = 0; t < trials; ++t) text += csv_row(reports[t], t) + "\n";
    write_output(out, text);
  } else if (trials == 1) {
    write_output(out, to_json(reports[0]).dump(2) + "\n");
  } else {
    nlohmann::json doc;
    doc["trials"] = nlohmann::json::array();
    for (const auto& r : reports) doc["trials"].push_back(to_json(r));
    write_output(out, doc.dump(2) + "\n");
  }
  if (!svg.empty()) write_output(svg, render_svg(reports[0]));
  return 0;
}

int run_adversary(const std::string& name, const std::string& algorithm, int m,
                  const std::string& p, int n, int k, const std::string& eps_text,
                  const std::string& format, const std::string& out, const std::string& svg) {
  auto packer = make_packer(algorithm);
  bool area_packer = packer_class(algorithm) == ObjectiveClass::area;
  Length eps = parse_param(eps_text, "eps");
  AdversaryOutcome outcome;
  auto need = [&](bool area) {
    if (area != area_packer) {
      throw ConfigError("adversary " + name + " does not apply to " + algorithm);
    }
  };
  if (name == "peri-trans") {
    need(false);
    outcome = adv_perimeter_translation(*packer, eps);
  } else if (name == "peri-rot") {
    need(false);
    outcome = adv_perimeter_rotation(*packer, eps);
  } else if (name == "square169") {
    need(false);
    outcome = adv_square_16_9(*packer);
  } else if (name == "area-general") {
    need(true);
    outcome = adv_area_general(*packer, m, parse_param(p, "p"));
  } else if (name == "longedge-trans") {
    need(true);
    outcome = adv_area_longedge_translation(*packer, n);
  } else if (name == "longedge-rot") {
    need(true);
    outcome = adv_area_longedge_rotation(*packer, n);
  } else if (name == "modified-ratio4") {
    need(false);
    outcome = play_stream(*packer, name, Objective::perimeter, stream_modified_ratio4(k, eps),
                          modified_ratio4_witness(k, eps));
  } else if (name == "fekete-tightness") {
    need(false);
    auto stream = stream_fekete_tightness(k, eps);
    auto witness = square_grid_witness(stream.size(), stream.front().width);
    outcome = play_stream(*packer, name, Objective::square_area, std::move(stream),
                          std::move(witness));
  } else {
    throw ConfigError("unknown adversary '" + name + "'");
  }
  RunReport report = report_from_outcome(outcome, algorithm, packer->allows_rotation());
  report.overlays = packer->overlays();
  verify_packing(report.pieces, report.placements, report.overlays);
  if (format == "csv") {
    write_output(out, csv_header() + "\n" + csv_row(report, 0) + "\n");
  } else if (format == "json") {
    nlohmann::json doc = to_json(report);
    doc["adversary"] = name;
    write_output(out, doc.dump(2) + "\n");
  } else {
    throw ConfigError("--report must be json or csv");
  }
  if (!svg.empty()) write_output(svg, render_svg(report));
  return 0;
}

int run_opt(const std::string& input, const std::string& objective, const std::string& rotations) {
  auto pieces = parse_stream(read_file(input));
  if (pieces.empty()) throw ConfigError("empty stream");
  Objective obj = parse_objective(objective);
  bool rot = parse_switch(rotations);
  nlohmann::json doc;
  doc["objective"] = to_string(obj);
  doc["rotations"] = rot;
  doc["n"] = pieces.size();
  OptBound lb = lower_bound(pieces, obj, rot);
  doc["lower_bound"] = lb.value;
  if (lb.exact) doc["lower_bound_exact"] = lb.exact->to_string();
  try {
    ExactOpt opt = exact_opt(pieces, obj, rot);
    doc["kind"] = "exact";
    doc["value"] = opt.value.to_double();
    doc["value_exact"] = opt.value.to_string();
    doc["container"] = {opt.width.to_string(), opt.height.to_string()};
    doc["nodes"] = opt.nodes;
    auto& w = doc["witness"] = nlohmann::json::array();
    for (const auto& pl : opt.witness) {
      w.push_back({{"piece", pl.piece_index},
                   {"x_exact", pl.x.to_string()},
                   {"y_exact", pl.y.to_string()},
                   {"rotated", pl.rotated}});
    }
  } catch (const OracleTooLarge& e) {
    doc["kind"] = "lower";
    doc["value"] = lb.value;
    doc["note"] = e.what();
  }
  std::cout << doc.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Online rectangle packing: packers, adversaries and offline oracles"};
  app.require_subcommand(1);

  std::string algorithm, objective, rotations, format = "json", out, svg;
  std::size_t trials = 1;
  StreamArgs stream;

  auto* pack = app.add_subcommand("pack", "run an online packer on a stream");
  pack->add_option("--algorithm", algorithm, "packer name")->required();
  pack->add_option("--objective", objective, "perimeter, area or square");
  pack->add_option("--rotations", rotations, "rotations for the offline optimum (on|off)");
  pack->add_option("--trials", trials, "independent generated trials (seed, seed+1, ...)");
  pack->add_option("--report", format, "json or csv");
  pack->add_option("--out", out, "report file (default stdout)");
  pack->add_option("--svg", svg, "write an SVG of the (first) packing");
  stream.add(pack, true);

  std::string adv_name, p = "1";
  int m = 6, n = 8;
  auto* adv = app.add_subcommand("adversary", "play an adaptive adversary against a packer");
  adv->add_option("--name", adv_name,
                  "peri-trans, peri-rot, area-general, longedge-trans, longedge-rot, square169, "
                  "modified-ratio4 or fekete-tightness")
      ->required();
  adv->add_option("--algorithm", algorithm, "packer name")->required();
  adv->add_option("--m", m, "area-general: m");
  adv->add_option("--p", p, "area-general: p");
  adv->add_option("--n", n, "long-edge adversaries: n");
  adv->add_option("--k", stream.k, "structured streams: k");
  adv->add_option("--eps", stream.eps, "epsilon");
  adv->add_option("--report", format, "json or csv");
  adv->add_option("--out", out, "report file (default stdout)");
  adv->add_option("--svg", svg, "write an SVG of the packing");

  std::string input;
  auto* opt = app.add_subcommand("opt", "offline optimum (exact when small) and lower bound");
  opt->add_option("--input", input, "stream file")->required();
  opt->add_option("--objective", objective, "perimeter, area or square")->required();
  std::string opt_rot = "off";
  opt->add_option("--rotations", opt_rot, "on|off");

  auto* gen = app.add_subcommand("gen", "print a generated stream");
  gen->add_option("--name", stream.gen, "generator name")->required();
  gen->add_option("--n", stream.n, "pieces to generate");
  gen->add_option("--seed", stream.seed, "generator seed");
  gen->add_option("--k", stream.k, "level parameter of the structured streams");
  gen->add_option("--eps", stream.eps, "epsilon of the structured streams");
  gen->add_option("--out", out, "stream file (default stdout)");

  bool no_overlays = false;
  auto* render = app.add_subcommand("render", "draw a JSON report as SVG");
  render->add_option("--input", input, "report file")->required();
  render->add_option("--svg", svg, "SVG file (default stdout)");
  render->add_flag("--no-overlays", no_overlays, "omit bricks, boxes and shelves");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 3;
  }

  try {
    if (*pack) return run_pack(stream, algorithm, objective, rotations, trials, format, out, svg);
    if (*adv) {
      return run_adversary(adv_name, algorithm, m, p, n, stream.k, stream.eps, format, out, svg);
    }
    if (*opt) return run_opt(input, objective, opt_rot);
    if (*gen) {
      write_output(out, format_stream(generate(stream.gen, stream.params())));
      return 0;
    }
    if (*render) {
      RunReport report;
      try {
        report = report_from_json(nlohmann::json::parse(read_file(input)));
      } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed report: ") + e.what());
      }
      SvgOptions options;
      options.overlays = !no_overlays;
      write_output(svg, render_svg(report, options));
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 3;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 4;
  } catch (const std::invalid_argument& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
