// Command line front end: Fréchet queries, middle-curve solving and
// verification, the (2+eps) approximation, the SCS reduction, and SVG plots.
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "middlecurves/approx.hpp"
#include "middlecurves/errors.hpp"
#include "middlecurves/frechet.hpp"
#include "middlecurves/io.hpp"
#include "middlecurves/middle.hpp"
#include "middlecurves/reduction.hpp"
#include "middlecurves/svg.hpp"

namespace {

using namespace middlecurves;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitResource = 2;
constexpr int kExitInternal = 3;

std::string format_number(double x) {
  if (std::floor(x) == x && std::abs(x) <= 1e15) {
    return std::to_string(static_cast<std::int64_t>(x));
  }
  return nlohmann::json(x).dump();
}

CurveSet load_curves(const std::string& path) {
  const std::string text = read_text_file(path);
  if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv") {
    return read_curve_csv(text);
  }
  return read_curve_file(text);
}

enumeration_limits limits_from_env() {
  enumeration_limits limits;
  if (const char* cap = std::getenv("MC_MAX_CANDIDATES")) {
    try {
      limits.max_candidates = std::stoull(cap);
    } catch (const std::exception&) {
      throw std::invalid_argument("MC_MAX_CANDIDATES must be an integer");
    }
  }
  return limits;
}

Variant parse_variant(const std::string& name) {
  const auto v = variant_from_string(name);
  if (!v) {
    throw std::invalid_argument("variant must be unordered, ordered, or restricted");
  }
  return *v;
}

const Curve& curve_by_id(const CurveSet& ps, const std::string& id) {
  const std::size_t i = ps.index_of(id);
  if (i == ps.size()) {
    throw std::invalid_argument("no curve with id '" + id + "'");
  }
  return ps[i];
}

std::string witness_line(const Traversal& t) {
  std::string out = "witness:";
  for (const IndexPair& p : t.pairs) {
    out += " (" + std::to_string(p.i) + "," + std::to_string(p.j) + ")";
  }
  return out;
}

std::string refs_line(const ProvenancedCurve& m) {
  std::string out = "refs:";
  for (const VertexRef& r : m.refs()) {
    out += " " + r.curve_id + "[" + std::to_string(r.index) + "]";
  }
  return out;
}

int run_frechet(const std::string& file, const std::string& id_a,
                const std::string& id_b, const std::string& mode,
                std::optional<double> delta) {
  const CurveSet ps = load_curves(file);
  const Curve& a = curve_by_id(ps, id_a);
  const Curve& b = curve_by_id(ps, id_b);
  if (mode == "discrete") {
    const FrechetResult r = discrete_frechet(a, b);
    std::cout << format_number(r.value) << "\n" << witness_line(r.witness) << "\n";
    return kExitOk;
  }
  if (!delta) {
    throw std::invalid_argument("continuous mode requires --delta");
  }
  std::cout << (continuous_frechet_decision(a, b, *delta) ? "true" : "false")
            << "\n";
  return kExitOk;
}

int run_solve(const std::string& file, const std::string& variant_name,
              std::optional<double> delta, std::size_t ell, bool optimize,
              const std::string& out_path) {
  if (optimize == delta.has_value()) {
    throw std::invalid_argument("pass exactly one of --delta or --optimize");
  }
  const CurveSet ps = load_curves(file);
  const Variant variant = parse_variant(variant_name);
  const enumeration_limits limits = limits_from_env();

  const SolveOutcome outcome =
      optimize ? brute_force_optimize(ps, ell, variant, limits)
               : brute_force_solve(ps, *delta, ell, variant, limits);
  if (!outcome.feasible) {
    std::cout << "infeasible\n";
    return kExitOk;
  }
  if (optimize) {
    std::cout << "radius: " << format_number(*outcome.radius) << "\n";
  } else {
    std::cout << "feasible\n"
              << "radius: " << format_number(*outcome.radius) << "\n";
  }
  std::cout << refs_line(*outcome.witness) << "\n";
  if (!out_path.empty()) {
    const MiddleFile middle{outcome.witness->refs(),
                            optimize ? *outcome.radius : *delta, variant};
    write_text_file(out_path, write_middle_file(middle));
  }
  return kExitOk;
}

int run_approx(const std::string& file, std::size_t ell, double eps,
               const std::string& out_path, bool opt_check) {
  const CurveSet ps = load_curves(file);
  const enumeration_limits limits = limits_from_env();
  const MiddleApproxResult r = middle_approx(ps, {ell, eps}, limits);
  std::cout << "center radius: " << format_number(r.center.radius) << "\n"
            << "middle radius: " << format_number(r.realized_radius) << "\n"
            << refs_line(r.middle) << "\n";
  if (opt_check) {
    const SolveOutcome opt = brute_force_optimize(ps, ell, Variant::kUnordered,
                                                  limits);
    if (opt.feasible && *opt.radius > 0.0) {
      std::cout << "ratio: " << format_number(r.realized_radius / *opt.radius)
                << " (bound " << format_number(2.0 + eps) << ")\n";
    } else {
      std::cout << "ratio: exact (optimum 0)\n";
    }
  }
  if (!out_path.empty()) {
    const MiddleFile middle{r.middle.refs(), r.realized_radius,
                            Variant::kUnordered};
    write_text_file(out_path, write_middle_file(middle));
  }
  return kExitOk;
}

int run_reduce(const std::string& file, const std::string& action,
               const std::string& out_dir, const std::string& variant_name) {
  const ScsInstance inst = read_scs_file(read_text_file(file));
  if (action == "encode") {
    if (inst.t < 1) {
      throw std::invalid_argument("encoding needs t >= 1");
    }
    std::filesystem::create_directories(out_dir);
    for (const auto& [a, b] : enumerate_it(inst.t)) {
      const ReductionInstance instance =
          make_reduction_instance(inst.sequences, inst.t, a, b);
      const std::filesystem::path path =
          std::filesystem::path(out_dir) /
          ("instance_a" + std::to_string(a) + "_b" + std::to_string(b) + ".json");
      write_text_file(path.string(), write_curve_file(instance.all_curves()));
      std::cout << path.string() << "\n";
    }
    return kExitOk;
  }
  const Variant variant = parse_variant(variant_name);
  const EquivalenceResult r =
      reduction_equivalence(inst, variant, limits_from_env());
  std::cout << "scs: " << (r.scs_answer ? "true" : "false") << "\n"
            << "middle[" << to_string(variant)
            << "]: " << (r.middle_answer ? "true" : "false") << "\n";
  return kExitOk;
}

int run_scs(const std::string& file) {
  const ScsInstance inst = read_scs_file(read_text_file(file));
  const ScsResult r = scs_brute_force(inst);
  std::cout << "feasible: " << (r.feasible ? "true" : "false") << "\n"
            << "length: " << r.scs_length << "\n"
            << "witness: " << r.witness << "\n";
  return kExitOk;
}

int run_verify(const std::string& curve_file, const std::string& middle_file) {
  const CurveSet ps = load_curves(curve_file);
  const MiddleFile middle = read_middle_file(read_text_file(middle_file));
  const ProvenancedCurve m = ProvenancedCurve::resolve(middle.refs, ps);
  std::cout << (verify(m, ps, middle.delta, middle.variant) ? "true" : "false")
            << "\n";
  return kExitOk;
}

int run_plot(const std::string& file, const std::string& svg_path,
             const std::vector<std::string>& ids) {
  const CurveSet ps = load_curves(file);
  write_text_file(svg_path, render_svg(ps, ids));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"middle curves under the discrete Fréchet distance"};
  app.require_subcommand(1);

  std::string file, id_a, id_b, mode = "discrete", variant = "unordered";
  std::string out_path, action, svg_path, middle_path;
  std::string reduce_out = ".";
  std::vector<std::string> ids;
  std::optional<double> delta;
  std::size_t ell = 1;
  double eps = 0.5;
  bool optimize = false, opt_check = false;

  auto* frechet = app.add_subcommand("frechet", "Fréchet distance between two curves");
  frechet->add_option("file", file)->required();
  frechet->add_option("idA", id_a)->required();
  frechet->add_option("idB", id_b)->required();
  frechet->add_option("--mode", mode)->check(CLI::IsMember({"discrete", "continuous"}));
  frechet->add_option("--delta", delta);

  auto* solve = app.add_subcommand("solve", "exact middle-curve decision or optimization");
  solve->add_option("file", file)->required();
  solve->add_option("--variant", variant);
  solve->add_option("--delta", delta);
  solve->add_option("--ell", ell)->required();
  solve->add_flag("--optimize", optimize);
  solve->add_option("--out", out_path);

  auto* approx = app.add_subcommand("approx", "(2+eps)-approximate middle curve");
  approx->add_option("file", file)->required();
  approx->add_option("--ell", ell)->required();
  approx->add_option("--eps", eps)->required();
  approx->add_option("--out", out_path);
  approx->add_flag("--opt-check", opt_check);

  auto* reduce = app.add_subcommand("reduce", "SCS to middle-curve reduction");
  reduce->add_option("file", file)->required();
  reduce->add_option("action", action)->required()->check(CLI::IsMember({"encode", "check"}));
  reduce->add_option("--out", reduce_out);
  reduce->add_option("--variant", variant);

  auto* scs = app.add_subcommand("scs", "shortest common supersequence oracle");
  scs->add_option("file", file)->required();

  auto* verify_cmd = app.add_subcommand("verify", "verify a middle-curve file");
  verify_cmd->add_option("file", file)->required();
  verify_cmd->add_option("middle", middle_path)->required();

  auto* plot = app.add_subcommand("plot", "render curves to SVG");
  plot->add_option("file", file)->required();
  plot->add_option("--svg", svg_path)->required();
  plot->add_option("--ids", ids)->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*frechet) return run_frechet(file, id_a, id_b, mode, delta);
    if (*solve) return run_solve(file, variant, delta, ell, optimize, out_path);
    if (*approx) return run_approx(file, ell, eps, out_path, opt_check);
    if (*reduce) return run_reduce(file, action, reduce_out, variant);
    if (*scs) return run_scs(file);
    if (*verify_cmd) return run_verify(file, middle_path);
    if (*plot) return run_plot(file, svg_path, ids);
  } catch (const resource_limit_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const internal_inconsistency_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
