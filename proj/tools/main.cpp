#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "cactuslab/json_io.hpp"
#include "cactuslab/models.hpp"
#include "cactuslab/operad_check.hpp"
#include "cactuslab/sampling.hpp"
#include "cactuslab/svg_render.hpp"

using namespace cactuslab;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
}

std::vector<Rat> parse_point(const std::string& text, bool strict) {
  std::vector<Rat> out;
  std::string token;
  std::istringstream in(text);
  try {
    while (std::getline(in, token, ',')) out.push_back(parse_rat(token, strict));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  if (out.empty()) throw ParseError("empty point");
  return out;
}

int cmd_validate(const std::string& kind, const std::string& path, bool strict) {
  std::string text = read_file(path);
  if (kind == "discs") {
    FramedDiscConfig a = parse_disc_config(text, strict);
    std::cout << "ok: " << a.arity() << " discs, " << (a.open() ? "open" : "closed") << "\n";
  } else if (kind == "cactus") {
    Cactus c = parse_cactus(text, strict);
    std::cout << "ok: " << c.arity() << " lobes, " << c.interval_sequence().size() << " arcs\n";
  } else if (kind == "segments") {
    SegmentConfig cfg = parse_segment_config(text, strict);
    if (!validate_connected(cfg)) throw std::invalid_argument("configuration is not connected");
    std::cout << "ok: " << cfg.size() << " segments, "
              << intersection_graph(cfg).size() << " crossings\n";
  } else {
    LoopChannels g = parse_loops(text, strict);
    if (g.size() == 1) {
      CircleGroup grp;
      grp.validate_loop(g);
      std::cout << "ok: circle loop, winding " << rat_str(Rat(g[0].period_shift())) << "\n";
    } else {
      UniTriangular3 grp;
      grp.validate_loop(g);
      std::cout << "ok: matrix loop, 3 channels\n";
    }
  }
  return 0;
}

int cmd_compose(const std::string& kind, const std::vector<std::string>& paths, int at,
                const std::string& out, bool strict) {
  std::vector<std::string> texts;
  for (const auto& p : paths) texts.push_back(read_file(p));
  if (kind == "discs") {
    FramedDiscConfig outer = parse_disc_config(texts[0], strict);
    std::vector<FramedDiscConfig> inner;
    for (std::size_t k = 1; k < texts.size(); ++k) inner.push_back(parse_disc_config(texts[k], strict));
    FramedDiscConfig result = at > 0 ? compose_at(outer, at, inner.at(0)) : gamma(outer, inner);
    write_output(out, disc_config_json(result));
  } else {
    Cactus outer = parse_cactus(texts[0], strict);
    std::vector<Cactus> inner;
    for (std::size_t k = 1; k < texts.size(); ++k) inner.push_back(parse_cactus(texts[k], strict));
    Cactus result = at > 0 ? compose_cacti(outer, at, inner.at(0)) : cacti_gamma(outer, inner);
    write_output(out, cactus_json(result));
  }
  return 0;
}

template <typename Model>
std::vector<AxiomReport> model_suite(const Model& model, const std::string& tag, unsigned long seed,
                                     int trials, int samples, int max_arity) {
  std::vector<AxiomReport> all;
  Rng rng(seed);
  for (auto rep : check_operad_axioms(model, rng, trials, max_arity)) {
    rep.axiom = tag + ":" + rep.axiom;
    all.push_back(std::move(rep));
  }
  for (auto rep : check_realization_axioms(model, rng, trials, samples, max_arity)) {
    rep.axiom = tag + ":" + rep.axiom;
    all.push_back(std::move(rep));
  }
  int instances = trials / 5 + 1;
  AxiomReport pasting;
  pasting.axiom = tag + ":pasting/pushout";
  for (int k = 0; k < instances; ++k) {
    auto x = model.random_element(rng, 1 + static_cast<int>(pick(rng, static_cast<std::size_t>(max_arity))));
    int n = model.arity(x);
    std::vector<typename Model::Element> ys;
    for (int i = 0; i < n; ++i)
      ys.push_back(model.random_element(rng, 1 + static_cast<int>(pick(rng, 2))));
    AxiomReport one = check_pasting_pushout(model, x, ys, samples);
    pasting.trials += one.trials;
    if (!one.pass) report_fail(pasting, one.witness);
  }
  all.push_back(std::move(pasting));
  return all;
}

int cmd_axioms(const std::string& which, unsigned long seed, int trials, int samples,
               int max_arity) {
  std::vector<AxiomReport> all;
  if (which != "cacti")
    for (auto& rep : model_suite(DiscsModel{}, "discs", seed, trials, samples, max_arity))
      all.push_back(std::move(rep));
  if (which != "discs")
    for (auto& rep : model_suite(CactiModel{}, "cacti", seed, trials, samples, max_arity))
      all.push_back(std::move(rep));
  std::cout << reports_to_json(all) << "\n";
  return all_pass(all) ? 0 : 1;
}

int cmd_cells(int n, int max_len, const std::string& out) {
  std::ostringstream csv;
  csv << "sequence,dimension\n";
  for (const auto& cell : enumerate_cells(n, max_len)) {
    for (std::size_t k = 0; k < cell.size(); ++k) csv << (k ? " " : "") << cell[k];
    csv << "," << cell_dimension(cell) << "\n";
  }
  write_output(out, csv.str());
  return 0;
}

int cmd_braid(int n, const std::string& text, bool show_images) {
  BraidWord word;
  try {
    word = parse_braid_word(n, text);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  std::cout << "pure: " << (is_pure(word.aut) ? "yes" : "no") << "\n";
  std::cout << "twists:";
  for (long t : word.twists) std::cout << " " << t;
  std::cout << "\n";
  if (show_images)
    for (int i = 1; i <= n; ++i)
      std::cout << "x" << i << " -> " << word.aut.forward().image(i).str() << "\n";
  return 0;
}

template <typename G>
std::string run_omega(const G& grp, const Cactus& c, const std::vector<LoopChannels>& loops) {
  return loops_json(omega(grp, c, loops));
}

int cmd_omega(const std::string& group, const std::string& cactus_path,
              const std::vector<std::string>& loop_paths, const std::string& out, bool strict) {
  Cactus c = parse_cactus(read_file(cactus_path), strict);
  std::vector<LoopChannels> loops;
  for (const auto& p : loop_paths) loops.push_back(parse_loops(read_file(p), strict));
  std::string result = group == "s1" ? run_omega(CircleGroup{}, c, loops)
                                     : run_omega(UniTriangular3{}, c, loops);
  write_output(out, result);
  return 0;
}

int cmd_adapted_path(const std::string& config_path, const std::string& from_text,
                     const std::string& to_text, const std::string& out, bool strict) {
  SegmentConfig cfg = parse_segment_config(read_file(config_path), strict);
  AdaptedPath path = adapted_path(cfg, parse_point(from_text, strict), parse_point(to_text, strict));
  nlohmann::ordered_json j;
  j["speed"] = rat_str(path.speed);
  auto pieces = nlohmann::ordered_json::array();
  for (const auto& pc : path.pieces) {
    nlohmann::ordered_json entry;
    entry["segment"] = pc.segment;
    entry["from"] = rat_str(pc.from);
    entry["to"] = rat_str(pc.to);
    entry["dir"] = pc.dir;
    entry["s_from"] = rat_str(pc.s_from);
    entry["s_to"] = rat_str(pc.s_to);
    pieces.push_back(std::move(entry));
  }
  j["pieces"] = std::move(pieces);
  write_output(out, j.dump(2) + "\n");
  return 0;
}

int cmd_render(const std::string& kind, const std::string& path, const std::string& out,
               bool strict) {
  std::string text = read_file(path);
  if (kind == "discs")
    write_output(out, render_discs(parse_disc_config(text, strict)));
  else
    write_output(out, render_cactus(parse_cactus(text, strict)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact operads of framed discs and cacti"};
  app.require_subcommand(1);

  bool strict = true;
  app.add_flag("--strict,!--lenient", strict,
               "require canonical p/q rationals in inputs (default on)");

  std::string kind, path, out, group, word_text, from_text, to_text, which = "both";
  std::vector<std::string> paths;
  int n = 0, max_len = 0, at = 0, trials = 25, samples = 32, max_arity = 3;
  unsigned long seed = 2025;
  bool show_images = false;

  auto* validate = app.add_subcommand("validate", "parse and check one element file");
  validate->add_option("--kind", kind, "discs | cactus | segments | loops")
      ->required()
      ->check(CLI::IsMember({"discs", "cactus", "segments", "loops"}));
  validate->add_option("file", path, "element file")->required();

  auto* compose = app.add_subcommand("compose", "substitute inner elements into an outer one");
  compose->add_option("--kind", kind, "discs | cactus")
      ->required()
      ->check(CLI::IsMember({"discs", "cactus"}));
  compose->add_option("--at", at, "slot for a single insertion (0 = full substitution)");
  compose->add_option("-o,--out", out, "output file (default stdout)");
  compose->add_option("files", paths, "outer file then inner files")->required()->expected(-2);

  auto* axioms = app.add_subcommand("axioms", "run the randomized law suites");
  axioms->add_option("--model", which, "discs | cacti | both")
      ->check(CLI::IsMember({"discs", "cacti", "both"}));
  axioms->add_option("--trials", trials, "trials per law");
  axioms->add_option("--samples", samples, "sample density on realizations");
  axioms->add_option("--seed", seed, "random seed");
  axioms->add_option("--max-arity", max_arity, "largest arity drawn");

  auto* cells = app.add_subcommand("cells", "enumerate cactus cells as csv");
  cells->add_option("--n", n, "number of lobes")->required()->check(CLI::PositiveNumber);
  cells->add_option("--max-len", max_len, "cap on sequence length (0 = natural bound)");
  cells->add_option("-o,--out", out, "output file (default stdout)");

  auto* braid = app.add_subcommand("braid", "evaluate a braid word as an automorphism");
  braid->add_option("--n", n, "number of strands")->required()->check(CLI::PositiveNumber);
  braid->add_option("--word", word_text, "braid word, e.g. \"s1 s2^-1 a13 z2\"")->required();
  braid->add_flag("--show-images", show_images, "print the generator images");

  auto* omega_cmd = app.add_subcommand("omega", "act on loops through a cactus");
  omega_cmd->add_option("--group", group, "s1 | ut3")
      ->required()
      ->check(CLI::IsMember({"s1", "ut3"}));
  omega_cmd->add_option("-o,--out", out, "output file (default stdout)");
  omega_cmd->add_option("files", paths, "cactus file then one loop file per lobe")
      ->required()
      ->expected(-2);

  auto* adapted = app.add_subcommand("adapted-path", "unique adapted path between two points");
  adapted->add_option("--config", path, "segment configuration file")->required();
  adapted->add_option("--from", from_text, "start point, e.g. \"0,1/2\"")->required();
  adapted->add_option("--to", to_text, "end point")->required();
  adapted->add_option("-o,--out", out, "output file (default stdout)");

  auto* render = app.add_subcommand("render", "draw an element as svg");
  render->add_option("--kind", kind, "discs | cactus")
      ->required()
      ->check(CLI::IsMember({"discs", "cactus"}));
  render->add_option("file", path, "element file")->required();
  render->add_option("-o,--out", out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*validate) return cmd_validate(kind, path, strict);
    if (*compose) {
      std::vector<std::string> rest(paths.begin() + 1, paths.end());
      if (at > 0 && rest.size() != 1)
        throw std::invalid_argument("--at takes exactly one inner element");
      return cmd_compose(kind, paths, at, out, strict);
    }
    if (*axioms) return cmd_axioms(which, seed, trials, samples, max_arity);
    if (*cells) return cmd_cells(n, max_len, out);
    if (*braid) return cmd_braid(n, word_text, show_images);
    if (*omega_cmd)
      return cmd_omega(group, paths[0], {paths.begin() + 1, paths.end()}, out, strict);
    if (*adapted) return cmd_adapted_path(path, from_text, to_text, out, strict);
    if (*render) return cmd_render(kind, path, out, strict);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
