#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "swb/cli.hpp"

using swb::cli::Format;
using swb::cli::RunConfig;

namespace {

std::pair<int, int> parse_range(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw CLI::ValidationError("window", "expected lo,hi");
  return {std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graded slices, GKM classes and curve series for symbolic powers of subspace arrangements"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  RunConfig cfg;
  std::string format = "json";
  std::string window, ywindow;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "json | csv | human")->check(CLI::IsMember({"json", "csv", "human"}));
    sub->add_option("-o,--output", cfg.output, "write the report here instead of stdout");
  };
  auto grouped = [&](CLI::App* sub) {
    sub->add_option("--group", cfg.group, "GL, SL, A1, A1xA1, A2, B2, G2 (or GL3, SL2, ...); flag for the rank-1 affine flag graph");
    sub->add_option("--n", cfg.n, "rank for GL/SL")->check(CLI::PositiveNumber);
    sub->add_option("--d", cfg.d, "power")->check(CLI::PositiveNumber);
  };
  auto windowed = [&](CLI::App* sub) {
    sub->add_option("--window", window, "lattice window lo,hi (cube)");
    sub->add_option("--margin", cfg.margin, "first margin tried (default 2d)")->check(CLI::NonNegativeNumber);
    sub->add_option("--max-margin", cfg.max_margin, "last margin tried (default margin + 4)")
        ->check(CLI::NonNegativeNumber);
  };

  auto* jd = app.add_subcommand("jd-series", "ranks of J^(d) slices");
  grouped(jd);
  windowed(jd);
  common(jd);
  jd->add_option("--maxdeg", cfg.maxdeg, "total (or y-) degree bound")->check(CLI::NonNegativeNumber);
  jd->add_option("--ring", cfg.ring, "poly | laurent | ktheory")->check(CLI::IsMember({"auto", "poly", "laurent", "ktheory"}));
  jd->add_option("--ywindow", ywindow, "K-theory y window lo,hi");

  auto* cat = app.add_subcommand("catalan", "bigraded J / (x,y) J table");
  cat->add_option("--n", cfg.n)->required()->check(CLI::PositiveNumber);
  common(cat);

  auto* fr = app.add_subcommand("freeness", "regular-sequence check for y_1..y_n");
  fr->add_option("--n", cfg.n)->required()->check(CLI::PositiveNumber);
  fr->add_option("--d", cfg.d)->required()->check(CLI::PositiveNumber);
  fr->add_option("--maxdeg", cfg.maxdeg)->check(CLI::NonNegativeNumber);
  common(fr);

  auto* gg = app.add_subcommand("gkm-graph", "moment graph as JSON or DOT");
  grouped(gg);
  gg->add_option("--window", window, "lattice window lo,hi");
  gg->add_option("--graph-format", cfg.graph_format)->check(CLI::IsMember({"json", "dot"}));
  common(gg);

  auto* gv = app.add_subcommand("gkm-verify", "residue conditions for a class");
  grouped(gv);
  gv->add_option("--class", cfg.klass, "b<k>, bprime<k> or a0");
  gv->add_option("--input", cfg.input, "JSON tuple file");
  gv->add_option("--window", window, "graph window lo,hi");
  common(gv);

  auto* ms = app.add_subcommand("msv", "assemble the generating series of a curve");
  ms->add_option("--curve", cfg.curve, "n,dn: 2,2 | 3,3 | 2,4");
  common(ms);

  auto* cc = app.add_subcommand("conjecture-check", "quotient module against the curve series");
  cc->add_option("--n", cfg.n)->required()->check(CLI::PositiveNumber);
  cc->add_option("--d", cfg.d)->required()->check(CLI::PositiveNumber);
  cc->add_option("--order", cfg.q_order)->check(CLI::NonNegativeNumber);
  common(cc);

  auto* ck = app.add_subcommand("compare-knot", "punctual series against torus link homology");
  ck->add_option("--link", cfg.link)->check(CLI::IsMember({"T33", "T24"}));
  common(ck);

  auto* oq = app.add_subcommand("ordinary-quotient", "ordinary homology quotient slice");
  grouped(oq);
  windowed(oq);
  oq->add_option("--ydeg", cfg.y_degree)->check(CLI::NonNegativeNumber);
  common(oq);

  auto* fl = app.add_subcommand("flag-rank1", "rank-1 affine flag module slice");
  windowed(fl);
  fl->add_option("--ydeg", cfg.y_degree)->check(CLI::NonNegativeNumber);
  common(fl);

  try {
    app.parse(argc, argv);
    if (!window.empty()) std::tie(cfg.window_lo, cfg.window_hi) = parse_range(window);
    if (!ywindow.empty()) {
      auto [lo, hi] = parse_range(ywindow);
      cfg.ywindow_lo = lo;
      cfg.ywindow_hi = hi;
    }
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return swb::cli::kUsage;
  } catch (const std::exception& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return swb::cli::kUsage;
  }

  cfg.subcommand = app.get_subcommands().front()->get_name();
  static const std::map<std::string, Format> formats{{"json", Format::Json}, {"csv", Format::Csv}, {"human", Format::Human}};
  cfg.format = formats.at(format);
  return swb::cli::run(cfg, std::cout, std::cerr);
}
