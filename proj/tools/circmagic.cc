#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "commands.h"

namespace {

using namespace circmagic::cli;

std::string read_source(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int emit(const Outcome& o) {
  std::cout << o.out;
  std::cerr << o.err;
  return o.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distance magic valency-6 circulants: admissible characters, families, labelings"};
  app.set_version_flag("--version", version());
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  Options opts;
  std::string format = "json";
  app.add_option("--budget-nodes", opts.budget.max_nodes, "Search node budget (0 = unlimited)")
      ->capture_default_str();
  app.add_option("--budget-seconds", opts.budget.max_seconds, "Search time budget (0 = unlimited)")
      ->capture_default_str();
  app.add_option("--jobs", opts.jobs, "Worker threads for scans (0 = all cores)")
      ->capture_default_str();
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
  app.add_option("--nmax", opts.nmax, "Largest order for scans")->capture_default_str();

  std::string set, spec, labeling_path, labels_inline;
  circmagic::Int n = 0, nmin = 7;
  bool families = false, tamper = false;
  SearchFlags sflags;

  auto* admissible = app.add_subcommand("admissible", "Admissible characters with type tags");
  admissible->add_option("set", set, "Connection set n:a,b,c")->required();

  auto* decide = app.add_subcommand("decide", "Decide distance magicness (exit 0 yes, 1 no, 3 unknown)");
  decide->add_option("set", set, "Connection set n:a,b,c")->required();

  auto* recognize = app.add_subcommand("recognize", "Match a set against the known families");
  recognize->add_option("set", set, "Connection set n:a,b,c")->required();

  auto* label = app.add_subcommand("label", "Produce a verified labeling for a family or a set");
  label->add_option("spec", spec, "Family like T1b[5,7,11] or set n:a,b,c")->required();

  auto* verify = app.add_subcommand("verify", "Check a labeling (JSON array or vertex,label CSV)");
  verify->add_option("set", set, "Connection set n:x,y,... of any even valency")->required();
  verify->add_option("labeling", labeling_path, "File with the labeling, - for stdin");
  verify->add_option("--labels", labels_inline, "Labeling given inline");

  auto* search = app.add_subcommand("search", "Backtracking search for a labeling");
  search->add_option("set", set, "Connection set n:x,y,...")->required();
  search->add_flag("--pairing", sflags.pairing, "Require l(v) + l(v + n/2) = n + 1");
  search->add_flag("--parity-block", sflags.parity_block, "Labels 1..n/2 on even vertices");
  search->add_flag("!--no-symmetry", sflags.symmetry_breaking, "Disable symmetry breaking");
  search->add_flag("!--no-prefilter", sflags.prefilter, "Skip the spectral prefilter");

  auto* enumerate = app.add_subcommand("enumerate", "Classes (or family instances) of order n");
  enumerate->add_option("n", n, "Order")->required();
  enumerate->add_flag("--families", families, "List family instances instead of classes");

  auto* scan = app.add_subcommand("scan", "Decide vs exhaustive search for every class up to --nmax");
  scan->add_option("--nmin", nmin, "Smallest order")->capture_default_str();

  auto* selftest = app.add_subcommand("selftest", "Run the built-in fixture suite");
  selftest->add_flag("--tamper", tamper, "Corrupt the embedded Gamma_3 table (negative control)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }
  opts.format = format == "table" ? Format::kTable : Format::kJson;

  try {
    if (*admissible) return emit(cmd_admissible(set, opts));
    if (*decide) return emit(cmd_decide(set, opts));
    if (*recognize) return emit(cmd_recognize(set, opts));
    if (*label) return emit(cmd_label(spec, opts));
    if (*verify) {
      if (labeling_path.empty() == labels_inline.empty()) {
        std::cerr << "error: give exactly one of a labeling file or --labels\n";
        return kExitUsage;
      }
      const std::string text = labels_inline.empty() ? read_source(labeling_path) : labels_inline;
      return emit(cmd_verify(set, text, opts));
    }
    if (*search) return emit(cmd_search(set, sflags, opts));
    if (*enumerate) return emit(cmd_enumerate(n, families, opts));
    if (*scan) return emit(cmd_scan(nmin, opts));
    if (*selftest) return emit(cmd_selftest(opts, tamper));
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
