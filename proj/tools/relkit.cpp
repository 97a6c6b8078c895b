#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "relkit/eval.hpp"
#include "relkit/fileio.hpp"
#include "relkit/laws.hpp"
#include "relkit/render.hpp"
#include "relkit/term.hpp"

namespace {

enum Exit { Ok = 0, LawFailure = 1, InputError = 2 };

relkit::Document load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return relkit::parse_document(ss.str());
}

relkit::RenderOptions render_options(const std::string& style, bool dense) {
  relkit::RenderOptions o;
  o.style = style == "sets" ? relkit::RenderStyle::Sets : relkit::RenderStyle::Matrix;
  o.dense = dense;
  return o;
}

std::string show_universe(const relkit::Universe& u) {
  std::string s = u.name() + " = {";
  for (std::size_t i = 0; i < u.size(); ++i) s += (i ? ", " : "") + u.label(i);
  return s + "}\n";
}

int run_eval(const std::string& file, const std::string& expr, const std::string& style, bool dense) {
  const relkit::Environment env(load(file));
  const auto value = relkit::evaluate(relkit::parse_term(expr), env);
  if (const auto* r = std::get_if<relkit::Relation>(&value)) {
    std::cout << r->src().name() << " -> " << r->tgt().name() << "  (" << r->rows() << "x" << r->cols() << ")\n";
    std::cout << relkit::render(*r, render_options(style, dense));
  } else if (const auto* u = std::get_if<relkit::Universe>(&value)) {
    std::cout << show_universe(*u);
  } else {
    std::cout << std::get<std::string>(value) << "\n";
  }
  return Ok;
}

int run_render(const std::string& file, const std::string& name, const std::string& style, bool dense) {
  const auto doc = load(file);
  if (const auto* r = doc.relation(name)) {
    std::cout << relkit::render(*r, render_options(style, dense));
    return Ok;
  }
  if (const auto* u = doc.universe(name)) {
    std::cout << show_universe(*u);
    return Ok;
  }
  throw relkit::Error(relkit::Errc::UnboundIdentifier, "no relation or universe named '" + name + "' in " + file);
}

int run_check(const std::string& suite, const std::string& only, const relkit::laws::Options& opt, const std::string& json_path,
              bool quiet) {
  auto laws = relkit::laws::suite(suite);
  if (!only.empty()) {
    std::erase_if(laws, [&](const relkit::laws::Law& l) { return l.name != only; });
    if (laws.empty()) throw relkit::Error(relkit::Errc::UnboundIdentifier, "no law named '" + only + "' in suite " + suite);
  }
  const auto reports = relkit::laws::run_laws(laws, opt);
  std::size_t failed = 0, instances = 0;
  for (const auto& r : reports) {
    instances += r.exhaustive + r.random;
    if (!r.pass) ++failed;
    if (quiet && r.pass) continue;
    std::printf("%s %-8s %-34s exhaustive %6zu%s random %4zu\n", r.pass ? "PASS" : "FAIL", r.suite.c_str(), r.name.c_str(),
                r.exhaustive, r.exhaustive_complete ? " " : "+", r.random);
    if (!r.pass) std::printf("     %s\n%s", r.failure.c_str(), r.counterexample.c_str());
  }
  std::printf("%zu laws, %zu instances, %zu failed (seed %llu)\n", reports.size(), instances, failed,
              static_cast<unsigned long long>(opt.seed));
  if (!json_path.empty()) {
    std::ofstream out(json_path, std::ios::binary);
    out << relkit::laws::to_json(reports) << "\n";
  }
  return failed ? LawFailure : Ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"relkit: finite relation algebra"};
  app.require_subcommand(1);

  std::string file, expr, name, style = "matrix", suite, only, json_path;
  bool dense = false, quiet = false;
  relkit::laws::Options opt;
  opt.seed = relkit::laws::default_seed();

  auto* eval = app.add_subcommand("eval", "evaluate a term against a relation file");
  eval->add_option("-f,--file", file, "relation file")->required();
  eval->add_option("-e,--expr", expr, "term")->required();
  eval->add_option("--style", style)->check(CLI::IsMember({"matrix", "sets"}));
  eval->add_flag("--dense", dense, "print 0 instead of .");

  auto* render = app.add_subcommand("render", "render a named relation from a file");
  render->add_option("-f,--file", file, "relation file")->required();
  render->add_option("name", name)->required();
  render->add_option("--style", style)->check(CLI::IsMember({"matrix", "sets"}));
  render->add_flag("--dense", dense, "print 0 instead of .");

  auto* check = app.add_subcommand("check", "run a law suite");
  std::vector<std::string> suites = relkit::laws::suite_names();
  suites.push_back("all");
  check->add_option("suite", suite)->required()->check(CLI::IsMember(suites));
  check->add_option("--seed", opt.seed, "random seed (default RELKIT_SEED or 1)");
  check->add_option("--max-size", opt.max_size, "largest random universe")->check(CLI::Range(0, 5));
  check->add_option("--instances", opt.random_instances, "random instances per law");
  check->add_option("--exhaustive-limit", opt.exhaustive_limit, "exhaustive instances per law before truncating");
  check->add_option("--law", only, "run only the named law");
  check->add_option("--json", json_path, "write the law reports as JSON");
  check->add_flag("-q,--quiet", quiet, "only print failing laws");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? Ok : InputError;
  }

  try {
    if (*eval) return run_eval(file, expr, style, dense);
    if (*render) return run_render(file, name, style, dense);
    return run_check(suite, only, opt, json_path, quiet);
  } catch (const relkit::Error& e) {
    std::cerr << e.what() << "\n";
    return InputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return InputError;
  }
}
