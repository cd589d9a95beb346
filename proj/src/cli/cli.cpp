// Copyright 2026 The R3 Authors
// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "r3/cli/cli.hpp"

#include <cstdio>
#include <fstream>
#include <optional>
#include <set>

#include "CLI11.hpp"
#include "json.hpp"
#include "r3/allergen/infer.hpp"
#include "r3/common/error.hpp"
#include "r3/common/text.hpp"
#include "r3/core/corpus.hpp"
#include "r3/core/json_io.hpp"
#include "r3/core/plan.hpp"
#include "r3/core/validate.hpp"
#include "r3/eval/report.hpp"
#include "r3/ingest/ingest.hpp"
#include "r3/service/api.hpp"
#include "r3/service/server.hpp"

#ifndef R3_DEFAULT_LEXICON_DIR
#define R3_DEFAULT_LEXICON_DIR "corpus/lexicon"
#endif

namespace r3::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string dump(const json& j) { return j.dump(2, ' ', false, json::error_handler_t::replace); }

std::string fixed(double v, int digits) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

void write_file(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary);
  f << content;
  if (!f) throw Error(ErrorCode::kIo, "cannot write file", path.string());
}

allergen::AllergenLexicon load_allergens(const fs::path& lexicon_dir) {
  Lexicons lex = Lexicons::load(lexicon_dir);
  if (!lex.allergens) throw Error(ErrorCode::kIo, "allergen lexicon not found", (lexicon_dir / "allergens.json").string());
  return std::move(*lex.allergens);
}

// A recipe file inside `<corpus>/recipes/` validates against that corpus's
// lexicon and media; anything else against the default lexicon.
std::optional<fs::path> enclosing_corpus(const fs::path& recipe_file) {
  const fs::path dir = fs::absolute(recipe_file).parent_path();
  if (dir.filename() == "recipes" && fs::exists(dir.parent_path() / "lexicon")) return dir.parent_path();
  return std::nullopt;
}

struct Options {
  bool json = false;
  std::string lexicon_dir = R3_DEFAULT_LEXICON_DIR;
};

// ---- validate -------------------------------------------------------------

int cmd_validate(const std::string& path, const Options& opt, std::ostream& out, std::ostream& err) {
  if (fs::is_directory(path)) {
    try {
      const Corpus corpus = Corpus::load(path);
      if (opt.json) {
        out << dump({{"valid", true}, {"recipes", corpus.size()}, {"issues", json::array()},
                     {"warnings", corpus.warnings()}})
            << "\n";
      } else {
        out << "ok: " << corpus.size() << " recipes valid\n";
        for (const auto& w : corpus.warnings()) out << "warning: " << w << "\n";
      }
      return kExitOk;
    } catch (const CorpusError& e) {
      if (opt.json) {
        json issues = json::array();
        for (const auto& i : e.issues()) {
          issues.push_back({{"file", i.file}, {"path", i.path}, {"code", i.code}, {"message", i.message}});
        }
        out << dump({{"valid", false}, {"issues", std::move(issues)}}) << "\n";
      } else {
        for (const auto& i : e.issues()) {
          err << i.file << ": " << i.code << " at " << (i.path.empty() ? "<document>" : i.path) << ": " << i.message
              << "\n";
        }
        err << e.issues().size() << " issue(s)\n";
      }
      return kExitDomainError;
    }
  }

  const Recipe recipe = parse_recipe(text::read_file(path));
  ValidationContext ctx;
  std::optional<allergen::AllergenLexicon> lexicon;
  if (const auto root = enclosing_corpus(path)) {
    lexicon = Lexicons::load(*root / "lexicon").allergens;
    ctx.media_root = *root;
  } else if (fs::exists(fs::path(opt.lexicon_dir) / "allergens.json")) {
    lexicon = load_allergens(opt.lexicon_dir);
  }
  if (lexicon) ctx.lexicon = &*lexicon;
  const auto violations = validate_recipe(recipe, ctx);
  if (opt.json) {
    json issues = json::array();
    for (const auto& v : violations) {
      issues.push_back({{"file", path}, {"path", v.path}, {"code", to_string(v.code)}, {"message", v.message}});
    }
    out << dump({{"valid", violations.empty()}, {"recipes", 1}, {"issues", std::move(issues)}}) << "\n";
  } else if (violations.empty()) {
    out << "ok: " << recipe.id << " valid\n";
  } else {
    for (const auto& v : violations) err << path << ": " << to_string(v.code) << " at " << v.path << ": " << v.message << "\n";
  }
  return violations.empty() ? kExitOk : kExitDomainError;
}

// ---- ingest ---------------------------------------------------------------

struct IngestArgs {
  std::string raw;
  std::string out_dir;
  std::string verbs;
  double infer_threshold = allergen::kDefaultInferThreshold;
};

int cmd_ingest(const IngestArgs& a, const Options& opt, std::ostream& out) {
  const auto raw = ingest::RawRecipe::load(a.raw);
  Lexicons lex = Lexicons::load(opt.lexicon_dir);
  if (!a.verbs.empty()) lex.verbs = load_verb_lexicon(a.verbs);
  auto report = ingest::ingest(raw, lex, a.infer_threshold);

  std::set<std::string> taken;
  if (fs::is_directory(a.out_dir)) {
    for (const auto& entry : fs::directory_iterator(a.out_dir)) {
      if (entry.path().extension() == ".json") taken.insert(entry.path().stem().string());
    }
  }
  report.draft.id = ingest::unique_recipe_id(report.draft.name, taken);
  const fs::path target = fs::path(a.out_dir) / (report.draft.id + ".json");
  write_file(target, serialize_recipe(report.draft));

  if (opt.json) {
    json j = ingest::report_to_json(report);
    j["path"] = target.string();
    out << dump(j) << "\n";
  } else {
    out << "wrote " << target.string() << "\n";
    out << report.unresolved.size() << " unresolved\n";
    for (const auto& u : report.unresolved) out << "  " << u.field_path << ": " << u.reason << "\n";
  }
  return kExitOk;
}

// ---- allergen -------------------------------------------------------------

int cmd_allergen(const std::string& ingredient, double threshold, const Options& opt, std::ostream& out) {
  const Lexicons lex = Lexicons::load(opt.lexicon_dir);
  if (!lex.allergens) throw Error(ErrorCode::kIo, "allergen lexicon not found", opt.lexicon_dir);
  const std::string name = text::normalize_key(ingredient);
  const auto exact = lex.allergens->lookup(name);
  std::optional<allergen::InferResult> inferred;
  if (exact.empty() && lex.embeddings) inferred = allergen::infer(name, *lex.allergens, *lex.embeddings, threshold);

  if (opt.json) {
    json e = json::array();
    for (const auto& a : exact) e.push_back({{"allergen_id", a.allergen_id}, {"category", a.category}});
    json i = json::array();
    if (inferred) {
      for (const auto& m : inferred->matches) {
        i.push_back({{"allergen_id", m.info.allergen_id}, {"category", m.info.category}, {"score", m.score}});
      }
    }
    out << dump({{"ingredient", name},
                 {"exact", std::move(e)},
                 {"inferred", std::move(i)},
                 {"out_of_vocabulary", inferred && inferred->out_of_vocabulary}})
        << "\n";
    return kExitOk;
  }
  out << "ingredient: " << name << "\n";
  if (!exact.empty()) {
    out << "exact:\n";
    for (const auto& a : exact) out << "  " << a.allergen_id << " " << a.category << "\n";
  } else if (!lex.embeddings) {
    out << "no exact match; no embedding table for inference\n";
  } else if (inferred->out_of_vocabulary) {
    out << "no exact match; OUT_OF_VOCABULARY\n";
  } else if (inferred->matches.empty()) {
    out << "no exact match; nothing inferred at threshold " << fixed(threshold, 2) << "\n";
  } else {
    out << "inferred:\n";
    for (const auto& m : inferred->matches) {
      out << "  " << m.info.allergen_id << " " << m.info.category << " " << fixed(m.score, 4) << "\n";
    }
  }
  return kExitOk;
}

// ---- query ----------------------------------------------------------------

struct QueryArgs {
  std::string corpus;
  std::string text;
  std::string structured;
  std::string image;
  std::string image_kind = "ingredient";
  double threshold = query::kDefaultThreshold;
  std::string step_unit = "task";
};

int cmd_query(const QueryArgs& a, const Options& opt, std::ostream& out, std::ostream& err) {
  if (a.text.empty() && a.structured.empty() && a.image.empty()) {
    err << "query: one of --text, --structured or --image is required\n";
    return kExitUsage;
  }
  if (!a.text.empty() && !a.structured.empty()) {
    err << "query: --text and --structured are exclusive\n";
    return kExitUsage;
  }
  const auto unit = parse_step_unit(a.step_unit);
  if (!unit) {
    err << "query: --step-unit must be task or instruction\n";
    return kExitUsage;
  }
  const Corpus corpus = Corpus::load(a.corpus);

  std::optional<json> body;
  if (!a.text.empty()) body = json{{"utterance", a.text}, {"threshold", a.threshold}};
  if (!a.structured.empty()) {
    json doc = json::parse(a.structured, nullptr, false);
    if (doc.is_discarded()) throw Error(ErrorCode::kParse, "--structured is not valid JSON");
    body = std::move(doc);
  }
  std::optional<service::UploadedImage> image;
  if (!a.image.empty()) image = service::UploadedImage{text::read_file(a.image), fs::path(a.image).filename().string()};
  const auto kind = a.image_kind == "dish" ? query::QueryKind::kImageDish : query::QueryKind::kImageIngredient;

  const auto queries = service::build_queries(body, image, a.threshold, &corpus, kind);
  query::ExecuteOptions options;
  options.step_unit = *unit;
  const auto result = query::execute(queries, corpus, options);

  if (opt.json) {
    out << dump(service::result_to_json(result, corpus, *unit)) << "\n";
    return kExitOk;
  }
  out << "query:";
  for (const auto& q : result.query_echo) out << " " << query::query_key(q);
  out << "\n" << result.matches.size() << " match(es)\n";
  for (const auto& m : result.matches) {
    const Recipe* r = corpus.find(m.id);
    out << "  " << fixed(m.score, 4) << "  " << m.id << "  " << (r ? r->name : "") << "\n";
  }
  for (const auto& n : result.notes) out << "note: " << n << "\n";
  return kExitOk;
}

// ---- eval -----------------------------------------------------------------

struct EvalArgs {
  std::string corpus;
  std::uint64_t seed = 1;
  std::size_t queries = eval::kDefaultQueryCount;
  std::string truth;
  std::string retriever = "both";
  std::string report;
};

int cmd_eval(const EvalArgs& a, const Options& opt, std::ostream& out, std::ostream& err) {
  const Corpus corpus = Corpus::load(a.corpus);
  const fs::path truth_path = a.truth.empty() ? fs::path(a.corpus) / "truth" / "ground_truth.json" : fs::path(a.truth);
  const auto truth = eval::GroundTruth::load(truth_path);
  truth.check_against(corpus);
  const auto gen = eval::generate_queries(a.seed, a.queries, corpus);
  for (const auto& w : gen.warnings) err << "warning: " << w << "\n";
  const auto raw = eval::RawCorpus::from_corpus(corpus);

  std::vector<eval::EvalReport> reports;
  if (a.retriever == "proposed" || a.retriever == "both") {
    reports.push_back(eval::run_eval(eval::Retriever::kProposed, gen.queries, truth, corpus, raw));
  }
  if (a.retriever == "baseline" || a.retriever == "both") {
    reports.push_back(eval::run_eval(eval::Retriever::kBaseline, gen.queries, truth, corpus, raw));
  }

  json doc = {{"seed", a.seed}, {"requested", a.queries}, {"generated", gen.queries.size()},
              {"warnings", gen.warnings}};
  json rs = json::object();
  for (const auto& r : reports) rs[std::string(eval::to_string(r.retriever))] = eval::report_to_json(r);
  doc["reports"] = std::move(rs);
  if (!a.report.empty()) write_file(a.report, dump(doc) + "\n");

  if (opt.json) {
    out << dump(doc) << "\n";
  } else {
    out << eval::format_tables(reports);
  }
  return kExitOk;
}

// ---- export-plan ----------------------------------------------------------

int cmd_export_plan(const std::string& path, const std::string& id, const std::string& out_file, const Options& opt,
                    std::ostream& out, std::ostream& err) {
  Recipe recipe;
  ValidationContext ctx;
  std::optional<Corpus> corpus;
  std::optional<allergen::AllergenLexicon> lexicon;
  if (fs::is_directory(path)) {
    if (id.empty()) {
      err << "export-plan: --id is required with a corpus directory\n";
      return kExitUsage;
    }
    corpus = Corpus::load(path);
    const Recipe* r = corpus->find(id);
    if (r == nullptr) throw Error(ErrorCode::kNotFound, "no recipe with this id", id);
    recipe = *r;
    if (corpus->lexicons().allergens) ctx.lexicon = &*corpus->lexicons().allergens;
    ctx.media_root = fs::path(path);
  } else {
    recipe = parse_recipe(text::read_file(path));
    if (const auto root = enclosing_corpus(path)) {
      lexicon = Lexicons::load(*root / "lexicon").allergens;
      ctx.media_root = *root;
    }
    if (lexicon) ctx.lexicon = &*lexicon;
  }
  const PlanTrace plan = export_plan(recipe, ctx);
  std::string rendered;
  if (opt.json) {
    json steps = json::array();
    for (const auto& s : plan.steps) {
      steps.push_back({{"index", s.index},
                       {"action", s.action},
                       {"parameters", s.parameters},
                       {"preconditions", s.preconditions},
                       {"effects", s.effects}});
    }
    rendered = dump({{"recipe", recipe.id}, {"steps", std::move(steps)}}) + "\n";
  } else {
    rendered = format_plan(plan);
  }
  if (out_file.empty()) {
    out << rendered;
  } else {
    write_file(out_file, rendered);
    out << "wrote " << plan.steps.size() << " steps to " << out_file << "\n";
  }
  return kExitOk;
}

// ---- serve ----------------------------------------------------------------

struct ServeArgs {
  std::string config;
  std::string corpus;
  std::string bind;
  std::optional<double> threshold;
};

int cmd_serve(const ServeArgs& a, std::ostream& out) {
  service::ServiceConfig cfg = a.config.empty() ? service::ServiceConfig{} : service::ServiceConfig::load(a.config);
  cfg.apply_process_env();
  if (!a.corpus.empty()) cfg.corpus_path = a.corpus;
  if (!a.bind.empty()) cfg.bind_address = a.bind;
  if (a.threshold) cfg.default_threshold = *a.threshold;
  cfg.validate();
  service::Server server(cfg);
  const int port = server.bind();
  const auto addr = service::parse_bind_address(cfg.bind_address);
  out << "serving " << server.api().snapshot()->size() << " recipes on " << addr.host << ":" << port << std::endl;
  server.listen();
  return kExitOk;
}

// ---- fmt ------------------------------------------------------------------

int cmd_fmt(const std::vector<std::string>& files, bool check, std::ostream& out, std::ostream& err) {
  int status = kExitOk;
  for (const auto& f : files) {
    const std::string before = text::read_file(f);
    const std::string after = serialize_recipe(parse_recipe(before));
    if (before == after) continue;
    if (check) {
      err << f << ": not canonical\n";
      status = kExitDomainError;
    } else {
      write_file(f, after);
      out << "formatted " << f << "\n";
    }
  }
  return status;
}

}  // namespace

int run_cli(int argc, const char* const argv[], std::ostream& out, std::ostream& err) {
  CLI::App app{"R3 recipe toolkit: validate, ingest, query and evaluate plan-structured recipes", "r3"};
  app.require_subcommand(1);
  Options opt;

  auto* validate = app.add_subcommand("validate", "Validate a corpus directory or a single recipe file");
  std::string validate_path;
  validate->add_option("path", validate_path, "Corpus directory or recipe file")->required();
  validate->add_option("--lexicon", opt.lexicon_dir, "Lexicon directory for single files");
  validate->add_flag("--json", opt.json, "Machine-readable output");

  auto* ingest_cmd = app.add_subcommand("ingest", "Convert a raw recipe into a draft R3 document");
  IngestArgs ingest_args;
  ingest_cmd->add_option("raw", ingest_args.raw, "Raw recipe file")->required();
  ingest_cmd->add_option("--out", ingest_args.out_dir, "Output directory")->required();
  ingest_cmd->add_option("--verbs", ingest_args.verbs, "Cooking-verb lexicon file");
  ingest_cmd->add_option("--lexicon", opt.lexicon_dir, "Lexicon directory");
  ingest_cmd->add_option("--infer-threshold", ingest_args.infer_threshold, "Allergen inference threshold")
      ->check(CLI::Range(0.0, 1.0));
  ingest_cmd->add_flag("--json", opt.json, "Machine-readable output");

  auto* allergen_cmd = app.add_subcommand("allergen", "Exact and inferred allergen classes of an ingredient");
  std::string ingredient;
  double infer_threshold = allergen::kDefaultInferThreshold;
  allergen_cmd->add_option("ingredient", ingredient, "Ingredient name")->required();
  allergen_cmd->add_option("--lexicon", opt.lexicon_dir, "Lexicon directory");
  allergen_cmd->add_option("--threshold", infer_threshold, "Inference threshold")->check(CLI::Range(0.0, 1.0));
  allergen_cmd->add_flag("--json", opt.json, "Machine-readable output");

  auto* query_cmd = app.add_subcommand("query", "Run a constrained retrieval query");
  QueryArgs query_args;
  query_cmd->add_option("--corpus", query_args.corpus, "Corpus directory")->required()->envname("R3_CORPUS");
  query_cmd->add_option("--text", query_args.text, "Utterance in the template grammar");
  query_cmd->add_option("--structured", query_args.structured, "Query object or array as JSON");
  query_cmd->add_option("--image", query_args.image, "Query image (PNG or PNM)");
  query_cmd->add_option("--image-kind", query_args.image_kind, "Match the image against ingredient or dish images")
      ->check(CLI::IsMember({"ingredient", "dish"}));
  query_cmd->add_option("--threshold", query_args.threshold, "Similarity threshold")->check(CLI::Range(0.0, 1.0));
  query_cmd->add_option("--step-unit", query_args.step_unit, "Count steps as task or instruction");
  query_cmd->add_flag("--json", opt.json, "Machine-readable output");

  auto* eval_cmd = app.add_subcommand("eval", "Score retrievers against ground truth on generated queries");
  EvalArgs eval_args;
  eval_cmd->add_option("--corpus", eval_args.corpus, "Corpus directory")->required()->envname("R3_CORPUS");
  eval_cmd->add_option("--seed", eval_args.seed, "Query generation seed");
  eval_cmd->add_option("--queries", eval_args.queries, "Number of queries");
  eval_cmd->add_option("--truth", eval_args.truth, "Ground-truth file (default <corpus>/truth/ground_truth.json)");
  eval_cmd->add_option("--retriever", eval_args.retriever, "proposed, baseline or both")
      ->check(CLI::IsMember({"proposed", "baseline", "both"}));
  eval_cmd->add_option("--report", eval_args.report, "Write the JSON report here");
  eval_cmd->add_flag("--json", opt.json, "Machine-readable output");

  auto* plan_cmd = app.add_subcommand("export-plan", "Export a recipe as a plan trace");
  std::string plan_path, plan_id, plan_out;
  plan_cmd->add_option("path", plan_path, "Recipe file or corpus directory")->required();
  plan_cmd->add_option("--id", plan_id, "Recipe id when path is a corpus");
  plan_cmd->add_option("--out", plan_out, "Write the plan here instead of stdout");
  plan_cmd->add_flag("--json", opt.json, "Machine-readable output");

  auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP service");
  ServeArgs serve_args;
  double serve_threshold = 0.0;
  serve_cmd->add_option("--config", serve_args.config, "Service config file");
  serve_cmd->add_option("--corpus", serve_args.corpus, "Corpus directory");
  serve_cmd->add_option("--bind", serve_args.bind, "host:port");
  auto* serve_threshold_opt = serve_cmd->add_option("--threshold", serve_threshold, "Default similarity threshold");

  auto* fmt_cmd = app.add_subcommand("fmt", "Rewrite recipe files in canonical form");
  std::vector<std::string> fmt_files;
  bool fmt_check = false;
  fmt_cmd->add_option("files", fmt_files, "Recipe files")->required();
  fmt_cmd->add_flag("--check", fmt_check, "Report non-canonical files without rewriting");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(validate_path, opt, out, err);
    if (ingest_cmd->parsed()) return cmd_ingest(ingest_args, opt, out);
    if (allergen_cmd->parsed()) return cmd_allergen(ingredient, infer_threshold, opt, out);
    if (query_cmd->parsed()) return cmd_query(query_args, opt, out, err);
    if (eval_cmd->parsed()) return cmd_eval(eval_args, opt, out, err);
    if (plan_cmd->parsed()) return cmd_export_plan(plan_path, plan_id, plan_out, opt, out, err);
    if (serve_cmd->parsed()) {
      if (serve_threshold_opt->count() > 0) serve_args.threshold = serve_threshold;
      return cmd_serve(serve_args, out);
    }
    if (fmt_cmd->parsed()) return cmd_fmt(fmt_files, fmt_check, out, err);
  } catch (const CorpusError& e) {
    for (const auto& i : e.issues()) {
      err << i.file << ": " << i.code << " at " << (i.path.empty() ? "<document>" : i.path) << ": " << i.message << "\n";
    }
    err << "error: " << e.what() << "\n";
    return kExitDomainError;
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what();
    if (!e.detail().empty()) err << " (" << e.detail() << ")";
    err << "\n";
    return kExitDomainError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomainError;
  }
  err << app.help();
  return kExitUsage;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.push_back("r3");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace r3::cli
