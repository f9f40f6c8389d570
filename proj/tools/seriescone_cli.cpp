#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "seriescone/fixtures.hpp"
#include "seriescone/gap.hpp"
#include "seriescone/json_io.hpp"
#include "seriescone/plot.hpp"

namespace {

using namespace seriescone;

std::string read_input(const std::string& path) {
  if (path == "-" || path.empty()) {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_output(const std::string& path, const std::string& data) {
  if (path == "-" || path.empty()) {
    std::cout << data;
    if (!data.empty() && data.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out << data;
}

void emit(const std::string& path, const Json& j) { write_output(path, j.dump(2)); }

int run_cone(const std::string& input, const std::string& output, bool dual_flag,
             const std::string& intersect_with, int face_dim, bool hilbert) {
  Json j = Json::parse(read_input(input));
  Cone c = cone_from_json(j);
  if (!intersect_with.empty()) {
    Cone other = cone_from_json(Json::parse(read_input(intersect_with)));
    c = intersect(c, other);
  }
  if (dual_flag) c = dual(c);
  Json out;
  if (face_dim >= 0) {
    out = Json::array();
    for (const Cone& f : faces(c, face_dim)) out.push_back(cone_to_json(f));
  } else if (hilbert) {
    out = Json::array();
    for (const IntVec& h : hilbert_basis(c)) out.push_back(vec_to_json(h));
  } else {
    out = cone_to_json(c);
  }
  emit(output, out);
  return 0;
}

int run_dickson(const std::string& input, const std::string& output) {
  Json j = Json::parse(read_input(input));
  std::vector<DicksonShift> shifts;
  for (const Json& e : j.at("shifts"))
    shifts.push_back({intvec_from_json(e.at("gamma")), cone_from_json(e.at("cone"))});
  if (shifts.empty()) throw std::invalid_argument("no shifts given");
  int n = static_cast<int>(shifts[0].gamma.size());
  emit(output, dickson_to_json(dickson_decompose(n, shifts)));
  return 0;
}

int run_tau(const std::string& input, const std::string& output) {
  SupportSpec s = spec_from_json(Json::parse(read_input(input)));
  emit(output, tau_result_to_json(tau_result(s)));
  return 0;
}

int run_normalize(const std::string& input, const std::string& output, const std::string& svg,
                  const std::string& csv) {
  SupportSpec s = spec_from_json(Json::parse(read_input(input)));
  NormalizationResult r = normalize(s);
  emit(output, normalization_to_json(r));
  if (!svg.empty() || !csv.empty()) {
    PlotData plot = plot_spec(r.residual, r.C);
    if (!svg.empty()) write_output(svg, plot.svg);
    if (!csv.empty()) write_output(csv, plot.csv);
  }
  return 0;
}

int run_asroot(const std::string& input, const std::string& output, int depth_flag) {
  Json j = Json::parse(read_input(input));
  FqPoly a = fqpoly_from_json(j.at("poly"));
  WeightOrder o = order_from_json(j.at("order"));
  std::string branch = j.value("branch", "auto");
  int depth = depth_flag > 0 ? depth_flag : j.value("depth", 5);
  AsSplit split = as_split(a, o);
  Json out;
  if (branch == "minus") {
    if (!split.plus.is_zero()) throw std::invalid_argument("positive part present on the minus branch");
    out = asroot_to_json(as_negative_root(split.minus, o, depth));
  } else if (branch == "plus") {
    if (!split.minus.is_zero()) throw std::invalid_argument("negative part present on the plus branch");
    out = asroot_to_json(as_positive_root(split.plus, o, depth));
  } else if (branch == "auto") {
    AsRoot neg = as_negative_root(split.minus.is_zero() ? FqPoly(a.ambient_dim()) : split.minus, o,
                                  depth);
    AsRoot pos = as_positive_root(split.plus, o, depth);
    AsRoot both{neg.root + pos.root, neg.residual + pos.residual,
                std::max(neg.root_set_size, pos.root_set_size)};
    out = asroot_to_json(both);
    out["split"] =
        Json{{"plus", fqpoly_to_json(split.plus)}, {"minus", fqpoly_to_json(split.minus)}};
  } else {
    throw std::invalid_argument("branch must be plus, minus, or auto");
  }
  emit(output, out);
  return 0;
}

int run_gap(const std::string& input, const std::string& output) {
  Json j = Json::parse(read_input(input));
  FqPoly series = fqpoly_from_json(j.at("series"));
  std::vector<FqPoly> coeffs;
  for (const Json& c : j.at("coefficients")) coeffs.push_back(fqpoly_from_json(c));
  RatVec w = ratvec_from_json(j.at("weight"));
  Rat level = rat_from_json(j.at("guaranteed_level"));
  emit(output, gap_report_to_json(gap_verify(series, coeffs, w, level)));
  return 0;
}

int run_check(const std::string& name, bool all, const std::string& output) {
  std::vector<const Fixture*> todo;
  if (all) {
    for (const Fixture& f : fixtures()) todo.push_back(&f);
  } else {
    const Fixture* f = find_fixture(name);
    if (!f) throw std::invalid_argument("unknown fixture: " + name);
    todo.push_back(f);
  }
  Json out = Json::array();
  bool ok = true;
  for (const Fixture* f : todo) {
    FixtureResult r = f->run();
    Json e;
    e["fixture"] = f->name;
    e["provenance"] = f->provenance;
    e["notes"] = f->notes;
    e["pass"] = r.pass;
    e["checks"] = Json::array();
    for (const FixtureCheck& c : r.checks) {
      Json cj;
      cj["name"] = c.name;
      cj["pass"] = c.pass;
      if (!c.detail.empty()) cj["detail"] = c.detail;
      e["checks"].push_back(cj);
    }
    e["report"] = r.report;
    out.push_back(e);
    ok = ok && r.pass;
    std::cerr << (r.pass ? "ok    " : "FAIL  ") << f->name << "\n";
  }
  emit(output, out);
  return ok ? 0 : 1;
}

int run_plot(const std::string& input, const std::string& svg, const std::string& csv,
             int levels) {
  Json j = Json::parse(read_input(input));
  PlotData plot;
  if (j.is_array()) {
    std::vector<RatVec> pts;
    for (const Json& p : j) pts.push_back(ratvec_from_json(p));
    plot = plot_points(pts);
  } else {
    plot = plot_spec(spec_from_json(j), {}, levels);
  }
  if (!svg.empty()) write_output(svg, plot.svg);
  if (!csv.empty()) write_output(csv, plot.csv);
  if (svg.empty() && csv.empty()) write_output("-", plot.svg);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact support cones of generalized power series"};
  app.require_subcommand(1);

  std::string input = "-", output = "-", svg, csv, intersect_with, fixture_name;
  int face_dim = -1, depth = 0, levels = 8;
  bool dual_flag = false, hilbert = false, all = false;

  CLI::App* cone = app.add_subcommand("cone", "canonicalize, dualize, intersect, faces, hilbert basis");
  cone->add_option("--input,-i", input);
  cone->add_option("--output,-o", output);
  cone->add_flag("--dual", dual_flag);
  cone->add_option("--intersect", intersect_with, "second cone file");
  cone->add_option("--faces", face_dim, "list faces of this dimension");
  cone->add_flag("--hilbert", hilbert);

  CLI::App* dickson = app.add_subcommand("dickson", "corner set of an intersection of shifted cones");
  dickson->add_option("--input,-i", input);
  dickson->add_option("--output,-o", output);

  CLI::App* tau_cmd = app.add_subcommand("tau", "support cones of a symbolic support");
  tau_cmd->add_option("--input,-i", input);
  tau_cmd->add_option("--output,-o", output);

  CLI::App* norm = app.add_subcommand("normalize", "corner decomposition of a support");
  norm->add_option("--input,-i", input);
  norm->add_option("--output,-o", output);
  norm->add_option("--svg", svg);
  norm->add_option("--csv", csv);

  CLI::App* asroot = app.add_subcommand("asroot", "truncated Artin-Schreier roots");
  asroot->add_option("--input,-i", input);
  asroot->add_option("--output,-o", output);
  asroot->add_option("--depth", depth);

  CLI::App* gap = app.add_subcommand("gap", "consecutive-level ratio bound");
  gap->add_option("--input,-i", input);
  gap->add_option("--output,-o", output);

  CLI::App* check = app.add_subcommand("check-example", "run a bundled example end to end");
  check->add_option("name", fixture_name);
  check->add_flag("--all", all);
  check->add_option("--output,-o", output);

  CLI::App* plot = app.add_subcommand("plot", "SVG/CSV scatter of a 2-D support");
  plot->add_option("--input,-i", input);
  plot->add_option("--svg", svg);
  plot->add_option("--csv", csv);
  plot->add_option("--levels", levels, "family truncation depth");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cone->parsed()) return run_cone(input, output, dual_flag, intersect_with, face_dim, hilbert);
    if (dickson->parsed()) return run_dickson(input, output);
    if (tau_cmd->parsed()) return run_tau(input, output);
    if (norm->parsed()) return run_normalize(input, output, svg, csv);
    if (asroot->parsed()) return run_asroot(input, output, depth);
    if (gap->parsed()) return run_gap(input, output);
    if (check->parsed()) {
      if (!all && fixture_name.empty()) throw std::invalid_argument("need a fixture name or --all");
      return run_check(fixture_name, all, output);
    }
    if (plot->parsed()) return run_plot(input, svg, csv, levels);
  } catch (const Json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
