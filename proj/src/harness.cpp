#include "rectpack/harness.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

namespace rectpack {

std::vector<Piece> parse_stream(std::string_view text) {
  std::vector<Piece> pieces;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    std::size_t nl = text.find('\n');
    std::string line(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);

    std::istringstream in(line);
    std::vector<std::string> tokens;
    for (std::string t; in >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;
    auto fail = [&](const std::string& why) {
      return ParseError("line " + std::to_string(line_no) + ": " + why);
    };
    if (tokens.size() != 2) throw fail("expected '<width> <height>', got '" + line + "'");
    try {
      pieces.push_back(Piece::make(parse_length(tokens[0]), parse_length(tokens[1])));
    } catch (const std::invalid_argument& e) {
      throw fail(e.what());
    } catch (const ParseError& e) {
      throw fail(e.what());
    }
  }
  return pieces;
}

std::string format_stream(std::span<const Piece> pieces) {
  std::string out;
  for (const auto& p : pieces) out += p.width.to_string() + " " + p.height.to_string() + "\n";
  return out;
}

const std::vector<std::string>& generator_names() {
  static const std::vector<std::string> names{"uniform",   "squares",         "unit-squares",
                                              "long-edge", "modified-ratio4", "fekete-tightness"};
  return names;
}

namespace {

double unit_interval(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// 2^e for e uniform in [lo, hi], rounded to a multiple of 2^-20.
Length log_uniform(std::mt19937_64& rng, double lo, double hi) {
  double v = std::exp2(lo + (hi - lo) * unit_interval(rng));
  long q = std::max(1L, std::lround(v * 0x1.0p20));
  return Length::ratio(q, 1L << 20);
}

}  // namespace

std::vector<Piece> generate(std::string_view name, const GenParams& params) {
  std::mt19937_64 rng(params.seed);
  std::vector<Piece> out;
  if (name == "uniform" || name == "long-edge") {
    double lo = name == "uniform" ? -6.0 : 0.0;
    for (std::size_t i = 0; i < params.n; ++i) {
      Length w = log_uniform(rng, lo, 6.0);
      Length h = log_uniform(rng, lo, 6.0);
      out.push_back(Piece::make(w, h));
    }
  } else if (name == "squares") {
    for (std::size_t i = 0; i < params.n; ++i) {
      Length s = log_uniform(rng, -6.0, 6.0);
      out.push_back(Piece::make(s, s));
    }
  } else if (name == "unit-squares") {
    out.assign(params.n, Piece{Length(1), Length(1)});
  } else if (name == "modified-ratio4") {
    out = stream_modified_ratio4(params.k, params.eps);
  } else if (name == "fekete-tightness") {
    out = stream_fekete_tightness(params.k, params.eps);
  } else {
    throw ConfigError("unknown generator '" + std::string(name) + "'");
  }
  return out;
}

void verify_packing(std::span<const Piece> pieces, std::span<const Placement> placements,
                    std::span<const Overlay> overlays) {
  if (!interiors_disjoint(pieces, placements)) throw InvariantViolation("placed pieces overlap");
  std::vector<Rect> containers;
  for (const auto& o : overlays) {
    if (o.kind == "brick" || o.kind == "box") containers.push_back(o.rect);
  }
  if (containers.empty()) return;
  std::sort(containers.begin(), containers.end(),
            [](const Rect& a, const Rect& b) { return a.x_min < b.x_min; });
  for (const auto& pl : placements) {
    Rect r = placed_rect(pieces[pl.piece_index], pl);
    bool inside = false;
    for (const auto& c : containers) {
      if (r.x_min < c.x_min) break;
      if (c.contains(r)) {
        inside = true;
        break;
      }
    }
    if (!inside) {
      throw InvariantViolation("piece " + std::to_string(pl.piece_index) +
                               " lies outside every container");
    }
  }
}

RunReport run(std::span<const Piece> pieces, const RunOptions& options) {
  if (pieces.empty()) throw ConfigError("empty stream");
  ObjectiveClass cls = packer_class(options.algorithm);
  bool matches = cls == ObjectiveClass::area ? options.objective == Objective::area
                                             : options.objective != Objective::area;
  if (!matches) {
    throw ConfigError("algorithm " + options.algorithm + " does not serve the " +
                      to_string(options.objective) + " objective");
  }

  auto start = std::chrono::steady_clock::now();
  auto packer = make_packer(options.algorithm);
  RunReport report;
  report.algorithm = options.algorithm;
  report.objective = options.objective;
  report.rotations = options.rotations.value_or(packer->allows_rotation());
  report.pieces.assign(pieces.begin(), pieces.end());
  report.placements.reserve(pieces.size());
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    Placement pl = packer->place(pieces[i]);
    pl.piece_index = i;
    report.placements.push_back(std::move(pl));
  }
  report.overlays = packer->overlays();
  verify_packing(report.pieces, report.placements, report.overlays);

  report.box = bounding_box(report.pieces, report.placements);
  report.alg_cost = objective_cost(options.objective, report.box);

  std::optional<OptBound> bound;
  if (pieces.size() <= options.limits.max_pieces) {
    try {
      ExactOpt opt = exact_opt(pieces, options.objective, report.rotations, options.limits);
      bound = OptBound{OptKind::exact, options.objective, report.rotations, opt.value.to_double(),
                       opt.value};
    } catch (const OracleTooLarge&) {
    }
  }
  if (!bound) bound = lower_bound(pieces, options.objective, report.rotations);
  report.opt_kind = bound->kind;
  report.opt_value = bound->value;
  report.opt_exact = bound->exact;
  report.ratio = bound->exact ? (report.alg_cost / *bound->exact).to_double()
                              : report.alg_cost.to_double() / bound->value;
  report.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

RunReport report_from_outcome(const AdversaryOutcome& outcome, std::string algorithm,
                              bool rotations) {
  RunReport r;
  r.algorithm = std::move(algorithm);
  r.objective = outcome.objective;
  r.rotations = rotations;
  r.pieces = outcome.stream;
  r.placements = outcome.placements;
  r.box = bounding_box(r.pieces, r.placements);
  r.alg_cost = outcome.alg_cost;
  r.opt_kind = OptKind::witness;
  r.opt_value = outcome.opt_upper.to_double();
  r.opt_exact = outcome.opt_upper;
  r.ratio = outcome.ratio;
  r.branch = outcome.branch;
  return r;
}

namespace {

double round15(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return std::strtod(buf, nullptr);
}

nlohmann::json length_json(const Length& v) { return round15(v.to_double()); }

nlohmann::json rect_json(const Rect& r) {
  return {{"x_min", r.x_min.to_string()},
          {"y_min", r.y_min.to_string()},
          {"x_max", r.x_max.to_string()},
          {"y_max", r.y_max.to_string()}};
}

Rect rect_from_json(const nlohmann::json& j) {
  return Rect{parse_length(j.at("x_min").get<std::string>()),
              parse_length(j.at("y_min").get<std::string>()),
              parse_length(j.at("x_max").get<std::string>()),
              parse_length(j.at("y_max").get<std::string>())};
}

OptKind parse_opt_kind(const std::string& s) {
  if (s == "exact") return OptKind::exact;
  if (s == "witness") return OptKind::witness;
  if (s == "lower") return OptKind::lower;
  throw ParseError("unknown opt_kind '" + s + "'");
}

}  // namespace

nlohmann::json to_json(const RunReport& report, bool with_wall_time) {
  nlohmann::json j;
  j["algorithm"] = report.algorithm;
  j["objective"] = to_string(report.objective);
  j["rotations"] = report.rotations;
  j["n"] = report.pieces.size();
  j["alg_cost"] = length_json(report.alg_cost);
  j["alg_cost_exact"] = report.alg_cost.to_string();
  j["opt_kind"] = to_string(report.opt_kind);
  j["opt_value"] = round15(report.opt_value);
  if (report.opt_exact) j["opt_value_exact"] = report.opt_exact->to_string();
  j["ratio"] = round15(report.ratio);
  if (!report.branch.empty()) j["branch"] = report.branch;
  j["bounding_box"] = rect_json(report.box);

  auto& pieces = j["pieces"] = nlohmann::json::array();
  for (const auto& p : report.pieces) {
    pieces.push_back({{"width", p.width.to_string()}, {"height", p.height.to_string()}});
  }
  auto& placements = j["placements"] = nlohmann::json::array();
  for (const auto& pl : report.placements) {
    placements.push_back({{"piece", pl.piece_index},
                          {"x", length_json(pl.x)},
                          {"y", length_json(pl.y)},
                          {"x_exact", pl.x.to_string()},
                          {"y_exact", pl.y.to_string()},
                          {"rotated", pl.rotated}});
  }
  auto& overlays = j["overlays"] = nlohmann::json::array();
  for (const auto& o : report.overlays) {
    nlohmann::json oj = rect_json(o.rect);
    oj["kind"] = o.kind;
    overlays.push_back(std::move(oj));
  }
  if (with_wall_time) j["wall_time"] = report.wall_time;
  return j;
}

RunReport report_from_json(const nlohmann::json& doc) {
  try {
    RunReport r;
    r.algorithm = doc.at("algorithm").get<std::string>();
    r.objective = parse_objective(doc.at("objective").get<std::string>());
    r.rotations = doc.at("rotations").get<bool>();
    r.alg_cost = parse_length(doc.at("alg_cost_exact").get<std::string>());
    r.opt_kind = parse_opt_kind(doc.at("opt_kind").get<std::string>());
    r.opt_value = doc.at("opt_value").get<double>();
    if (doc.contains("opt_value_exact")) {
      r.opt_exact = parse_length(doc["opt_value_exact"].get<std::string>());
    }
    r.ratio = doc.at("ratio").get<double>();
    r.branch = doc.value("branch", "");
    r.box = rect_from_json(doc.at("bounding_box"));
    for (const auto& p : doc.at("pieces")) {
      r.pieces.push_back(Piece::make(parse_length(p.at("width").get<std::string>()),
                                     parse_length(p.at("height").get<std::string>())));
    }
    for (const auto& pl : doc.at("placements")) {
      r.placements.push_back(Placement{pl.at("piece").get<std::size_t>(),
                                       parse_length(pl.at("x_exact").get<std::string>()),
                                       parse_length(pl.at("y_exact").get<std::string>()),
                                       pl.at("rotated").get<bool>()});
    }
    for (const auto& o : doc.at("overlays")) {
      r.overlays.push_back(Overlay{o.at("kind").get<std::string>(), rect_from_json(o)});
    }
    r.wall_time = doc.value("wall_time", 0.0);
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
}

std::string csv_header() {
  return "trial,algorithm,objective,n,alg_cost,opt_kind,opt_value,ratio,wall_time";
}

std::string csv_row(const RunReport& report, std::size_t trial) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%zu,%s,%s,%zu,%.15g,%s,%.15g,%.15g,%.6f", trial,
                report.algorithm.c_str(), to_string(report.objective), report.pieces.size(),
                report.alg_cost.to_double(), to_string(report.opt_kind), report.opt_value,
                report.ratio, report.wall_time);
  return buf;
}

namespace {

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", v);
  std::string s = buf;
  s.erase(s.find_last_not_of('0') + 1);
  if (s.back() == '.') s.pop_back();
  if (s == "-0") s = "0";
  return s;
}

}  // namespace

std::string render_svg(const RunReport& report, const SvgOptions& options) {
  if (report.placements.empty()) throw std::invalid_argument("empty report");
  const Rect& box = report.box;
  double x0 = box.x_min.to_double(), y0 = box.y_min.to_double();
  double x1 = box.x_max.to_double(), y1 = box.y_max.to_double();
  double margin = 0.05 * std::max(x1 - x0, y1 - y0);
  double vx = x0 - margin, vy = -(y1 + margin);
  double vw = x1 - x0 + 2 * margin, vh = y1 - y0 + 2 * margin;

  // SVG's y axis points down; draw at (x, -y - h).
  auto rect = [&](const Rect& r, const char* cls) {
    double h = r.height().to_double();
    return "  <rect class=\"" + std::string(cls) + "\" x=\"" + num(r.x_min.to_double()) +
           "\" y=\"" + num(-r.y_min.to_double() - h) + "\" width=\"" +
           num(r.width().to_double()) + "\" height=\"" + num(h) + "\"/>\n";
  };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(options.size) +
         "\" height=\"" + num(options.size * vh / vw) + "\" viewBox=\"" + num(vx) + " " + num(vy) +
         " " + num(vw) + " " + num(vh) + "\">\n";
  out += "  <style>rect{vector-effect:non-scaling-stroke}"
         ".piece{fill:#c8c8c8;stroke:#333;stroke-width:0.5}"
         ".brick,.box{fill:none;stroke:#000;stroke-width:2}"
         ".shelf{fill:none;stroke:#888;stroke-width:0.5;stroke-dasharray:4 2}"
         ".bbox{fill:none;stroke:#c00;stroke-width:1.5}</style>\n";
  if (options.overlays) {
    for (const auto& o : report.overlays) {
      const char* cls = o.kind == "brick" ? "brick" : o.kind == "box" ? "box" : "shelf";
      out += rect(o.rect, cls);
    }
  }
  for (const auto& pl : report.placements) {
    out += rect(placed_rect(report.pieces.at(pl.piece_index), pl), "piece");
  }
  out += rect(box, "bbox");
  out += "</svg>\n";
  return out;
}

}  // namespace rectpack
