// twistcube: decide instances, list lattice points, draw the plane picture,
// run sweeps.
//
// Exit codes: check 0 untwisted / 1 twisted; verify 0 clean / 1 counterexamples;
// 2 for any usage, input or capacity error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <span>
#include <variant>

#include <CLI11.hpp>

#include "twistcube/twistcube.hpp"

namespace tc = twistcube;

namespace {

constexpr int kExitError = 2;

struct Options {
  std::string instance;
  std::string spec;
  std::string out;
  std::size_t max_n = tc::Limits{}.max_length;
  unsigned jobs = 1;
  std::string format = "json";
};

tc::InstanceFile load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw tc::ParseError("cannot open instance file '" + path + "'");
  return tc::read_instance_file(in);
}

tc::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw tc::ParseError("cannot open '" + path + "'");
  try {
    return tc::json::parse(in);
  } catch (const tc::json::exception& e) {
    throw tc::ParseError(std::string("invalid JSON in '") + path + "': " + e.what());
  }
}

// Writes to --out when given, else stdout.
void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(opt.out, std::ios::binary);
  if (!f) throw tc::Error("cannot write '" + opt.out + "'");
  f << text;
}

tc::TwistData data_of(const tc::InstanceFile& file) {
  if (const auto* inst = std::get_if<tc::Instance>(&file)) return inst->twist_data();
  return std::get<tc::TwistData>(file);
}

std::string join(std::span<const std::int64_t> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

int cmd_check(const Options& opt) {
  tc::Limits limits;
  limits.max_length = opt.max_n;
  const tc::InstanceFile file = load_instance(opt.instance);
  const tc::TwistData d = data_of(file);
  const tc::UntwistResult hy = tc::is_untwisted(d, limits, opt.jobs);

  tc::json report = tc::to_json(hy);
  std::ostringstream human;
  human << (hy.untwisted ? "untwisted" : "twisted") << '\n';
  if (hy.witness) {
    human << "sigma " << hy.witness->sigma.to_string() << "  k = " << hy.witness->k << "  m = "
          << join(hy.witness->m) << '\n';
  }

  if (const auto* inst = std::get_if<tc::Instance>(&file)) {
    const auto walk = tc::find_hesitant_lambda_walk(inst->type, inst->word, inst->weight);
    if (walk.has_value() == hy.untwisted) {
      throw tc::Error("internal disagreement between the Cartier verdict and the walk detector");
    }
    if (walk) {
      const tc::WalkWitness small = tc::minimize(inst->type, inst->word, *walk, inst->weight);
      const bool minimal = tc::is_minimal(inst->type, inst->word, small, inst->weight);
      report["walk"] = tc::to_json(small, inst->word, minimal);
      const tc::Word sub = inst->word.subword(small.positions);
      human << "hesitant lambda-walk at positions";
      for (std::size_t p : small.positions) human << ' ' << p;
      human << "  letters";
      for (int l : sub.letters()) human << ' ' << l;
      human << '\n';
    }
  }

  emit(opt, opt.format == "human" ? human.str() : report.dump() + "\n");
  return hy.untwisted ? 0 : 1;
}

int cmd_lattice(const Options& opt) {
  tc::Limits limits;
  limits.max_length = opt.max_n;
  const tc::LatticeCensus census = tc::lattice_points(data_of(load_instance(opt.instance)), limits);
  std::ostringstream s;
  if (opt.format == "human") {
    for (const auto& p : census.points) s << join(p.x) << "  rho = " << (p.rho > 0 ? "+1" : "-1") << '\n';
    s << "positive " << census.positive << "  negative " << census.negative << "  signed " << census.signed_count()
      << '\n';
  } else {
    tc::write_census(s, census);
  }
  emit(opt, s.str());
  return 0;
}

int cmd_render(const Options& opt) {
  tc::Limits limits;
  limits.max_length = opt.max_n;
  emit(opt, tc::render_svg(data_of(load_instance(opt.instance)), limits));
  return 0;
}

tc::SweepSpec load_spec(const Options& opt) {
  tc::SweepSpec spec = opt.spec.empty() ? tc::default_sweep_spec() : tc::sweep_spec_from_json(load_json(opt.spec));
  return spec;
}

int cmd_verify(const Options& opt) {
  const tc::SweepSpec spec = load_spec(opt);
  const tc::SweepReport report = tc::verify_equivalence(spec, opt.jobs);
  if (opt.format == "human") {
    std::ostringstream s;
    s << report.instances << " instances, " << report.untwisted_count << " untwisted, " << report.twisted_count
      << " twisted, " << report.counterexamples.size() << " counterexamples, " << report.wall_ms << " ms\n";
    for (const auto& c : report.counterexamples) s << tc::to_json(c.instance).dump() << "  " << c.reason << '\n';
    emit(opt, s.str());
  } else {
    emit(opt, tc::to_json(report).dump(2) + "\n");
  }
  return report.ok() ? 0 : 1;
}

int cmd_atlas(const Options& opt) {
  const std::vector<tc::AtlasRow> rows = tc::atlas(load_spec(opt));
  std::ostringstream s;
  for (const auto& r : rows) {
    if (opt.format == "human") {
      s << r.type.to_string() << "  weight " << join(r.weight.coefficients()) << "  n = " << r.length << "  "
        << r.avoiding << " of " << r.total << " avoiding\n";
    } else {
      s << tc::to_json(r).dump() << '\n';
    }
  }
  emit(opt, s.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Twisted cubes: untwistedness, lattice points and hesitant walks"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", opt.out, "write output to FILE instead of stdout");
    sub->add_option("--format", opt.format, "output format")->check(CLI::IsMember({"json", "human"}));
    sub->add_option("--max-n", opt.max_n, "cap on word length n for sign-vector sweeps and censuses")
        ->check(CLI::Range(0, 62));
  };
  auto* check = app.add_subcommand("check", "decide whether an instance is untwisted");
  check->add_option("--instance", opt.instance, "instance JSON file")->required();
  check->add_option("--jobs", opt.jobs, "worker threads")->check(CLI::Range(1u, 1024u));
  add_common(check);
  auto* lattice = app.add_subcommand("lattice", "list the lattice points of the cube with densities");
  lattice->add_option("--instance", opt.instance, "instance JSON file")->required();
  add_common(lattice);
  auto* render = app.add_subcommand("render", "draw a two-dimensional cube as SVG");
  render->add_option("--instance", opt.instance, "instance JSON file")->required();
  add_common(render);
  auto* verify = app.add_subcommand("verify", "sweep instances and cross-check both criteria");
  verify->add_option("--spec", opt.spec, "sweep spec JSON file (default sweep when omitted)");
  verify->add_option("--jobs", opt.jobs, "worker threads")->check(CLI::Range(1u, 1024u));
  add_common(verify);
  auto* atlas = app.add_subcommand("atlas", "count words avoiding hesitant walks per type, weight and length");
  atlas->add_option("--spec", opt.spec, "sweep spec JSON file (default sweep when omitted)");
  add_common(atlas);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitError;
  }

  try {
    if (*check) return cmd_check(opt);
    if (*lattice) return cmd_lattice(opt);
    if (*render) return cmd_render(opt);
    if (*verify) return cmd_verify(opt);
    if (*atlas) return cmd_atlas(opt);
  } catch (const tc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
