// Command-line front end for the umkit shared library. Talks to the library
// exclusively through the C interface in umkit.h.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "umkit.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;  // mathematically invalid input space
constexpr int kExitUsage = 2;    // unusable input or bad invocation

struct StringDeleter {
  void operator()(char* s) const { umk_string_free(s); }
};
using CString = std::unique_ptr<char, StringDeleter>;

struct SpaceDeleter {
  void operator()(umk_space* s) const { umk_space_free(s); }
};
using Space = std::unique_ptr<umk_space, SpaceDeleter>;

struct ReportDeleter {
  void operator()(umk_report* r) const { umk_report_free(r); }
};
using Report = std::unique_ptr<umk_report, ReportDeleter>;

struct GammaDeleter {
  void operator()(umk_gamma* g) const { umk_gamma_free(g); }
};
using Gamma = std::unique_ptr<umk_gamma, GammaDeleter>;

[[noreturn]] void die(const std::string& message) {
  std::cerr << "umk: " << message << "\n";
  std::exit(kExitUsage);
}

void require(umk_status status) {
  if (status != UMK_OK) die(umk_last_error());
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) die("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool looks_like_csv(const std::string& path) {
  return path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0;
}

Space load_space(const std::string& path, bool force_csv) {
  const std::string text = read_file(path);
  umk_space* raw = nullptr;
  if (force_csv || looks_like_csv(path)) {
    require(umk_space_from_csv(text.c_str(), &raw));
  } else {
    require(umk_space_from_json(text.c_str(), &raw));
  }
  return Space(raw);
}

umk_format out_format(const std::string& name) {
  return name == "json" ? UMK_FORMAT_JSON : UMK_FORMAT_TEXT;
}

// Prints the rendered report and returns the verdict exit code.
int finish_report(umk_report* raw, umk_format format) {
  Report report(raw);
  CString text;
  {
    char* out = nullptr;
    require(umk_report_render(report.get(), format, &out));
    text.reset(out);
  }
  std::cout << text.get();
  return umk_report_valid(report.get()) ? kExitOk : kExitInvalid;
}

int print_space(umk_space* raw) {
  Space space(raw);
  char* out = nullptr;
  require(umk_space_to_json(space.get(), &out));
  CString text(out);
  std::cout << text.get() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-rational ultrametric space toolkit"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  bool force_csv = false;
  app.add_flag("--csv", force_csv, "read space files as CSV regardless of extension");

  // validate FILE [--metric|--ultra|--isosceles|--fourpoint|--balls]
  std::string validate_file;
  bool v_metric = false, v_ultra = false, v_isosceles = false, v_fourpoint = false,
       v_balls = false;
  auto* validate = app.add_subcommand("validate", "check metric and ultrametric laws");
  validate->add_option("file", validate_file, "space file")->required();
  validate->add_flag("--metric", v_metric, "triangle inequality and identity law");
  validate->add_flag("--ultra", v_ultra, "strong triangle inequality (default)");
  validate->add_flag("--isosceles", v_isosceles, "isosceles triangle law");
  validate->add_flag("--fourpoint", v_fourpoint, "four-point equality law");
  validate->add_flag("--balls", v_balls, "center invariance and nested-or-disjoint laws");

  // distset FILE
  std::string distset_file;
  auto* distset = app.add_subcommand("distset", "print the distance set");
  distset->add_option("file", distset_file, "space file")->required();

  // classify DESC.json
  std::string classify_file;
  auto* classify = app.add_subcommand("classify", "order type of a distance-set description");
  classify->add_option("file", classify_file, "description file")->required();

  // tbcheck DESC.json
  std::string tbcheck_file;
  auto* tbcheck =
      app.add_subcommand("tbcheck", "totally-bounded distance-set characterization");
  tbcheck->add_option("file", tbcheck_file, "description file")->required();

  // balls FILE --center C --radius R
  std::string balls_file, balls_center, balls_radius;
  auto* balls = app.add_subcommand("balls", "members of one open ball");
  balls->add_option("file", balls_file, "space file")->required();
  balls->add_option("--center", balls_center, "center label")->required();
  balls->add_option("--radius", balls_radius, "radius as p/q")->required();

  // partition FILE --radius R [--candidates a,b,c]
  std::string part_file, part_radius, part_candidates;
  auto* partition = app.add_subcommand("partition", "disjoint ball partition");
  partition->add_option("file", part_file, "space file")->required();
  partition->add_option("--radius", part_radius, "radius as p/q")->required();
  partition->add_option("--candidates", part_candidates, "candidate labels, comma-separated");

  // tree FILE [--newick]
  std::string tree_file;
  bool tree_newick = false;
  auto* tree = app.add_subcommand("tree", "dendrogram of an ultrametric space");
  tree->add_option("file", tree_file, "space file")->required();
  tree->add_flag("--newick", tree_newick, "emit Newick instead of JSON");

  // construct {dlps|partition|modify|compose}
  auto* construct = app.add_subcommand("construct", "build spaces from the catalog");
  construct->require_subcommand(1);
  std::string dlps_set;
  auto* c_dlps = construct->add_subcommand("dlps", "max-distance space on a set containing 0");
  c_dlps->add_option("--set", dlps_set, "comma-separated rationals, e.g. 0,1/2,1")->required();
  std::string cpart_classes;
  auto* c_part = construct->add_subcommand("partition", "partition-discrete space");
  c_part->add_option("--classes", cpart_classes, "classes split by '|', members by ','")
      ->required();
  std::string cmod_file, cmod_radius, cmod_g;
  auto* c_mod = construct->add_subcommand("modify", "largest-distance-destroying modification");
  c_mod->add_option("file", cmod_file, "space file")->required();
  c_mod->add_option("--radius", cmod_radius, "partition radius r1")->required();
  c_mod->add_option("--g", cmod_g, "values in (r1, 2r1), one per partition class")->required();
  std::string ccomp_file, ccomp_f;
  auto* c_comp = construct->add_subcommand("compose", "apply a preserving function");
  c_comp->add_option("file", ccomp_file, "space file")->required();
  c_comp->add_option("--f", ccomp_f, "catalog function name, e.g. step")->required();

  // gamma {validate|ball|base} FILE
  auto* gamma = app.add_subcommand("gamma", "poset-valued distances");
  gamma->require_subcommand(1);
  std::string gval_file;
  auto* g_val = gamma->add_subcommand("validate", "check the ultrametric distance conditions");
  g_val->add_option("file", gval_file, "gamma file")->required();
  std::string gball_file, gball_center, gball_element;
  auto* g_ball = gamma->add_subcommand("ball", "members of one gamma-ball");
  g_ball->add_option("file", gball_file, "gamma file")->required();
  g_ball->add_option("--center", gball_center, "center label")->required();
  g_ball->add_option("--gamma", gball_element, "radius element name")->required();
  std::string gbase_file;
  auto* g_base = gamma->add_subcommand("base", "topology base axiom for the ball family");
  g_base->add_option("file", gbase_file, "gamma file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  const umk_format fmt = out_format(format);

  if (*validate) {
    Space space = load_space(validate_file, force_csv);
    if (!(v_metric || v_ultra || v_isosceles || v_fourpoint || v_balls)) v_ultra = true;
    int exit_code = kExitOk;
    auto run = [&](umk_status (*fn)(const umk_space*, umk_report**)) {
      umk_report* report = nullptr;
      require(fn(space.get(), &report));
      exit_code = std::max(exit_code, finish_report(report, fmt));
    };
    if (v_metric) run(umk_validate_metric);
    if (v_ultra) run(umk_validate_ultrametric);
    if (v_isosceles) run(umk_isosceles_witnesses);
    if (v_fourpoint) run(umk_four_point_check);
    if (v_balls) {
      run(umk_center_invariance_check);
      run(umk_nested_or_disjoint_check);
    }
    return exit_code;
  }

  if (*distset) {
    Space space = load_space(distset_file, force_csv);
    char* out = nullptr;
    require(umk_distance_set(space.get(), fmt, &out));
    CString text(out);
    std::cout << text.get();
    if (fmt == UMK_FORMAT_JSON) std::cout << "\n";
    return kExitOk;
  }

  if (*classify) {
    const std::string text = read_file(classify_file);
    char* out = nullptr;
    require(umk_classify_order_type(text.c_str(), fmt, &out));
    CString rendered(out);
    std::cout << rendered.get();
    if (fmt == UMK_FORMAT_JSON) std::cout << "\n";
    return kExitOk;
  }

  if (*tbcheck) {
    const std::string text = read_file(tbcheck_file);
    int result = 0;
    char* out = nullptr;
    require(umk_tb_distance_set_check(text.c_str(), fmt, &result, &out));
    CString rendered(out);
    std::cout << rendered.get();
    if (fmt == UMK_FORMAT_JSON) std::cout << "\n";
    return kExitOk;
  }

  if (*balls) {
    Space space = load_space(balls_file, force_csv);
    char* out = nullptr;
    require(umk_open_ball(space.get(), balls_center.c_str(), balls_radius.c_str(), fmt, &out));
    CString rendered(out);
    std::cout << rendered.get();
    if (fmt == UMK_FORMAT_JSON) std::cout << "\n";
    return kExitOk;
  }

  if (*partition) {
    Space space = load_space(part_file, force_csv);
    char* out = nullptr;
    require(umk_ball_partition(space.get(), part_radius.c_str(),
                               part_candidates.empty() ? nullptr : part_candidates.c_str(), fmt,
                               &out));
    CString rendered(out);
    std::cout << rendered.get();
    if (fmt == UMK_FORMAT_JSON) std::cout << "\n";
    return kExitOk;
  }

  if (*tree) {
    Space space = load_space(tree_file, force_csv);
    char* out = nullptr;
    if (tree_newick) {
      require(umk_dendrogram_newick(space.get(), &out));
    } else {
      require(umk_dendrogram_json(space.get(), &out));
    }
    CString rendered(out);
    std::cout << rendered.get() << "\n";
    return kExitOk;
  }

  if (*construct) {
    umk_space* built = nullptr;
    if (*c_dlps) {
      require(umk_construct_dlps(dlps_set.c_str(), &built));
    } else if (*c_part) {
      require(umk_construct_partition(cpart_classes.c_str(), &built));
    } else if (*c_mod) {
      Space space = load_space(cmod_file, force_csv);
      require(umk_construct_modify(space.get(), cmod_radius.c_str(), cmod_g.c_str(), &built));
    } else if (*c_comp) {
      Space space = load_space(ccomp_file, force_csv);
      require(umk_construct_compose(space.get(), ccomp_f.c_str(), &built));
    }
    return print_space(built);
  }

  if (*gamma) {
    if (*g_val) {
      const std::string text = read_file(gval_file);
      umk_gamma* raw = nullptr;
      require(umk_gamma_from_json(text.c_str(), &raw));
      Gamma gd(raw);
      umk_report* report = nullptr;
      require(umk_gamma_validate(gd.get(), &report));
      return finish_report(report, fmt);
    }
    if (*g_ball) {
      const std::string text = read_file(gball_file);
      umk_gamma* raw = nullptr;
      require(umk_gamma_from_json(text.c_str(), &raw));
      Gamma gd(raw);
      char* out = nullptr;
      require(umk_gamma_ball(gd.get(), gball_center.c_str(), gball_element.c_str(), fmt, &out));
      CString rendered(out);
      std::cout << rendered.get();
      if (fmt == UMK_FORMAT_JSON) std::cout << "\n";
      return kExitOk;
    }
    if (*g_base) {
      const std::string text = read_file(gbase_file);
      umk_gamma* raw = nullptr;
      require(umk_gamma_from_json(text.c_str(), &raw));
      Gamma gd(raw);
      int holds = 0;
      char* out = nullptr;
      require(umk_gamma_base_check(gd.get(), fmt, &holds, &out));
      CString rendered(out);
      std::cout << (holds ? "base axiom holds\n" : "base axiom fails\n");
      if (!holds) std::cout << rendered.get();
      return holds ? kExitOk : kExitInvalid;
    }
  }

  return kExitUsage;
}
