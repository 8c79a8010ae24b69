#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "asimkit/enumerate.hpp"
#include "asimkit/error.hpp"
#include "asimkit/evaluator.hpp"
#include "asimkit/invariance.hpp"
#include "asimkit/model_io.hpp"
#include "asimkit/parser.hpp"
#include "asimkit/render.hpp"
#include "asimkit/simulation.hpp"
#include "asimkit/simulation_io.hpp"
#include "asimkit/translation.hpp"

#ifndef ASIMKIT_VERSION
#define ASIMKIT_VERSION "0.0.0"
#endif

namespace asimkit::cli {
namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kError = 2;

struct Io {
  std::ostream& out;
  std::ostream& err;
  bool json = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ModelError("cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Vocabulary parse_vocab(const std::string& text) {
  Vocabulary out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }), item.end());
    if (item.empty()) continue;
    if (!std::all_of(item.begin(), item.end(), [](unsigned char c) { return std::isdigit(c); }) || item.size() > 9) {
      throw PreconditionError("vocabulary entries must be positive integers, got '" + item + "'");
    }
    out.insert(std::stoi(item));
  }
  return out;
}

PointedModel pointed(const std::string& path, const std::string& point) {
  LoadedModel loaded = load_model_file(path);
  if (!point.empty()) return PointedModel(loaded.model, point);
  if (!loaded.point) throw ModelError(path + " has no \"point\"; pass one explicitly");
  return loaded.pointed();
}

// A family member together with a label naming where it came from.
struct Member {
  PointedModel point;
  std::string label;
};

std::vector<Member> family_from_directory(const std::string& directory) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(directory)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<Member> out;
  for (const auto& file : files) {
    LoadedModel loaded = load_model_file(file);
    const std::string label = file.stem().string();
    if (loaded.point) {
      out.push_back({loaded.pointed(), label});
      continue;
    }
    for (World w : loaded.model->worlds()) out.push_back({PointedModel(loaded.model, w), label});
  }
  return out;
}

std::vector<Member> family_from_enumeration(std::size_t worlds, const Vocabulary& sigma, bool intuitionistic) {
  std::vector<Member> out;
  ModelEnumerator enumerator({worlds, sigma, intuitionistic, 1'000'000});
  std::size_t index = 0;
  while (auto model = enumerator.next()) {
    auto shared = std::make_shared<const Model>(std::move(*model));
    const std::string label = "enum" + std::to_string(index++);
    for (World w : shared->worlds()) out.push_back({PointedModel(shared, w), label});
  }
  return out;
}

std::vector<PointedModel> points_of(const std::vector<Member>& family) {
  std::vector<PointedModel> out;
  for (const auto& m : family) out.push_back(m.point);
  return out;
}

const Member& member_for(const std::vector<Member>& family, const PointedModel& p) {
  for (const auto& m : family) {
    if (&m.point.model() == &p.model() && m.point.point() == p.point()) return m;
  }
  throw Error("counterexample outside the family");
}

ordered_json violation_json(const Violation& v, const Model& left, const Model& right) {
  const Model& source = v.dir == Direction::LeftToRight ? left : right;
  const Model& target = v.dir == Direction::LeftToRight ? right : left;
  auto names = [](const std::vector<World>& seq, const Model& m) {
    ordered_json a = ordered_json::array();
    for (World w : seq) a.push_back(m.name(w));
    return a;
  };
  ordered_json out;
  out["kind"] = to_string(v.kind);
  out["dir"] = v.dir == Direction::LeftToRight ? "LR" : "RL";
  out["from"] = names(v.from, source);
  out["to"] = names(v.to, target);
  if (v.successor) {
    out["successor"] = v.kind == ViolationKind::StepForth ? source.name(*v.successor) : target.name(*v.successor);
  }
  if (v.letter) out["letter"] = "P" + std::to_string(*v.letter);
  return out;
}

int report_check(const Io& io, const CheckResult& result, const Model& left, const Model& right) {
  if (io.json) {
    ordered_json doc;
    doc["verdict"] = result.ok() ? "ok" : "violation";
    if (!result.ok()) doc["violation"] = violation_json(*result.violation, left, right);
    io.out << doc.dump() << '\n';
  } else if (result.ok()) {
    io.out << "ok\n";
  } else {
    io.out << "violation: " << describe(*result.violation, left, right) << '\n';
  }
  return result.ok() ? kOk : kNegative;
}

int report_bool(const Io& io, bool value, ordered_json extra = ordered_json::object()) {
  if (io.json) {
    ordered_json doc;
    doc["result"] = value;
    for (auto& [key, item] : extra.items()) doc[key] = item;
    io.out << doc.dump() << '\n';
  } else {
    io.out << (value ? "true" : "false") << '\n';
  }
  return value ? kOk : kNegative;
}

ordered_json member_json(const Member& m) {
  ordered_json out;
  out["model"] = m.label;
  out["point"] = m.point.point_name();
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"asimkit: asimulations, standard translations and invariance checks"};
  app.set_version_flag("--version", std::string("asimkit ") + ASIMKIT_VERSION);
  app.require_subcommand(1);
  app.fallthrough();
  Io io{out, err};
  app.add_flag("--json", io.json, "Machine-readable output");

  int status = kOk;
  std::function<int()> action;

  // parse
  auto* parse = app.add_subcommand("parse", "Parse a formula and print it back");
  parse->require_subcommand(1);
  std::string parse_text;
  bool parse_sugar = false;
  for (const char* language : {"int", "fo", "modal"}) {
    auto* sub = parse->add_subcommand(language, std::string("Parse a formula of the ") + language + " language");
    sub->add_option("formula", parse_text, "Formula text")->required();
    if (std::string(language) == "int") sub->add_flag("--sugar", parse_sugar, "Accept ~i as i -> false");
    sub->callback([&, lang = std::string(language)] {
      action = [&, lang] {
        ordered_json doc;
        std::string rendered;
        if (lang == "int") {
          const IntFormula f = parse_int(parse_text, {parse_sugar});
          rendered = render(f);
          doc["formula"] = rendered;
          doc["impl_depth"] = impl_depth(f);
        } else if (lang == "fo") {
          const FOFormula f = parse_fo(parse_text);
          rendered = render(f);
          doc["formula"] = rendered;
          doc["degree"] = degree(f);
          doc["free"] = free_variables(f);
        } else {
          const ModalFormula f = parse_modal(parse_text);
          rendered = render(f);
          doc["formula"] = rendered;
          doc["box_depth"] = box_depth(f);
        }
        io.out << (io.json ? doc.dump() : rendered) << '\n';
        return kOk;
      };
    });
  }

  // translate
  auto* translate = app.add_subcommand("translate", "Standard translation into first-order logic");
  translate->require_subcommand(1);
  std::string translate_text;
  std::string translate_var = "x";
  bool translate_sugar = false;
  for (const char* which : {"st", "tr"}) {
    auto* sub = translate->add_subcommand(which, std::string(which) == "st" ? "Translate an intuitionistic formula"
                                                                            : "Translate a modal formula");
    sub->add_option("formula", translate_text, "Formula text")->required();
    sub->add_option("--var", translate_var, "Free variable of the translation");
    if (std::string(which) == "st") sub->add_flag("--sugar", translate_sugar, "Accept ~i as i -> false");
    sub->callback([&, w = std::string(which)] {
      action = [&, w] {
        const FOFormula f = w == "st" ? st(parse_int(translate_text, {translate_sugar}), translate_var)
                                      : tr(parse_modal(translate_text), translate_var);
        if (io.json) {
          ordered_json doc;
          doc["formula"] = render(f);
          doc["degree"] = degree(f);
          io.out << doc.dump() << '\n';
        } else {
          io.out << render(f) << '\n';
        }
        return kOk;
      };
    });
  }

  // mc
  auto* mc = app.add_subcommand("mc", "Evaluate a formula at a world of a model");
  std::string mc_model;
  std::string mc_world;
  std::string mc_fo;
  std::string mc_int;
  std::string mc_modal;
  bool mc_sugar = false;
  mc->add_option("model", mc_model, "Model document")->required()->check(CLI::ExistingFile);
  mc->add_option("--at", mc_world, "World to evaluate at (defaults to the document's point)");
  auto* mc_fo_opt = mc->add_option("--fo", mc_fo, "First-order formula with at most one free variable");
  auto* mc_int_opt = mc->add_option("--int", mc_int, "Intuitionistic formula (Kripke forcing)");
  auto* mc_modal_opt = mc->add_option("--modal", mc_modal, "Modal formula");
  mc->add_flag("--sugar", mc_sugar, "Accept ~i as i -> false in --int");
  mc_fo_opt->excludes(mc_int_opt)->excludes(mc_modal_opt);
  mc_int_opt->excludes(mc_modal_opt);
  mc->callback([&] {
    action = [&] {
      if (!*mc_fo_opt && !*mc_int_opt && !*mc_modal_opt) throw PreconditionError("one of --fo, --int, --modal is required");
      const PointedModel p = pointed(mc_model, mc_world);
      bool value = false;
      if (*mc_fo_opt) {
        const FOFormula f = parse_fo(mc_fo);
        value = free_variables(f).empty() ? fo_eval(p.model(), {}, f) : holds_at(p, f);
      } else if (*mc_int_opt) {
        value = forces(p.model(), p.point(), parse_int(mc_int, {mc_sugar}));
      } else {
        value = modal_sat(p.model(), p.point(), parse_modal(mc_modal));
      }
      report_bool(io, value);
      return kOk;
    };
  });

  // validate-int
  auto* validate = app.add_subcommand("validate-int", "Check that a model is intuitionistic");
  std::string validate_model;
  validate->add_option("model", validate_model, "Model document")->required()->check(CLI::ExistingFile);
  validate->callback([&] {
    action = [&] {
      const auto model = load_model_file(validate_model).model;
      const IntuitionisticReport report = validate_intuitionistic(*model);
      if (io.json) {
        ordered_json doc;
        doc["intuitionistic"] = report.intuitionistic();
        doc["reflexive"] = report.reflexive;
        doc["transitive"] = report.transitive;
        ordered_json persistent = ordered_json::object();
        for (auto [letter, ok] : report.persistent) persistent["P" + std::to_string(letter)] = ok;
        doc["persistent"] = persistent;
        io.out << doc.dump() << '\n';
      } else if (report.intuitionistic()) {
        io.out << "intuitionistic\n";
      } else {
        for (World w : report.non_reflexive) io.out << "not reflexive at " << model->name(w) << '\n';
        for (const auto& t : report.transitivity_failures) {
          io.out << "not transitive: " << model->name(t.first) << " -> " << model->name(t.middle) << " -> "
                 << model->name(t.last) << '\n';
        }
        for (const auto& p : report.persistence_failures) {
          io.out << "P" << p.letter << " not persistent along " << model->name(p.from) << " -> " << model->name(p.to)
                 << '\n';
        }
      }
      return report.intuitionistic() ? kOk : kNegative;
    };
  });

  // asim / bisim
  struct PairOptions {
    std::string left;
    std::string right;
    std::string left_point;
    std::string right_point;
    std::string relation;
    std::string sigma;
    std::size_t k = 0;
  };
  PairOptions pair;
  auto add_pair_options = [&](CLI::App* sub, bool needs_relation) {
    sub->add_option("--left", pair.left, "Left model document")->required()->check(CLI::ExistingFile);
    sub->add_option("--right", pair.right, "Right model document")->required()->check(CLI::ExistingFile);
    sub->add_option("--left-point", pair.left_point, "Point of the left model");
    sub->add_option("--right-point", pair.right_point, "Point of the right model");
    sub->add_option("--sigma", pair.sigma, "Letters for the atom condition, e.g. 1,2");
    if (needs_relation) {
      sub->add_option("--relation", pair.relation, "Relation document")->required()->check(CLI::ExistingFile);
    }
  };
  auto sigma_option = [&]() -> std::optional<Vocabulary> {
    if (pair.sigma.empty()) return std::nullopt;
    return parse_vocab(pair.sigma);
  };

  auto* asim = app.add_subcommand("asim", "Asimulations and k-asimulations");
  asim->require_subcommand(1);
  auto* asim_check = asim->add_subcommand("check", "Check a relation document");
  add_pair_options(asim_check, true);
  auto* asim_check_k = asim_check->add_option("--k", pair.k, "Check as a tuple-form k-asimulation");
  asim_check->callback([&] {
    action = [&] {
      const PointedModel l = pointed(pair.left, pair.left_point);
      const PointedModel r = pointed(pair.right, pair.right_point);
      const std::string doc = read_file(pair.relation);
      if (*asim_check_k || is_tuple_document(doc)) {
        if (!*asim_check_k) throw PreconditionError("tuple relations need --k");
        const TupleRelation rel = load_tuple_relation(doc, l.model(), r.model());
        return report_check(io, check_k_asimulation_tuples(l, r, rel, pair.k, sigma_option()), l.model(), r.model());
      }
      const DirectedRelation rel = load_directed_relation(doc, l.model(), r.model());
      return report_check(io, check_asimulation(l, r, rel, sigma_option()), l.model(), r.model());
    };
  });

  auto* asim_exists = asim->add_subcommand("exists", "Decide whether an (k-)asimulation exists");
  add_pair_options(asim_exists, false);
  auto* asim_exists_k = asim_exists->add_option("--k", pair.k, "Bound for k-asimulations");
  asim_exists->callback([&] {
    action = [&] {
      const PointedModel l = pointed(pair.left, pair.left_point);
      const PointedModel r = pointed(pair.right, pair.right_point);
      ordered_json extra = ordered_json::object();
      if (*asim_exists_k) {
        const auto witness = k_asimulation_witness(l, r, pair.k, sigma_option());
        if (witness) extra["relation"] = ordered_json::parse(relation_document(*witness, l.model(), r.model()));
        return report_bool(io, witness.has_value(), extra);
      }
      const DirectedRelation g = greatest_asimulation(l.model(), r.model(), sigma_option());
      const bool found = g.contains(Direction::LeftToRight, l.point(), r.point());
      if (found) extra["relation"] = ordered_json::parse(relation_document(g, l.model(), r.model()));
      return report_bool(io, found, extra);
    };
  });

  auto* asim_greatest = asim->add_subcommand("greatest", "Print the greatest asimulation between two models");
  add_pair_options(asim_greatest, false);
  asim_greatest->callback([&] {
    action = [&] {
      const auto l = load_model_file(pair.left).model;
      const auto r = load_model_file(pair.right).model;
      io.out << relation_document(greatest_asimulation(*l, *r, sigma_option()), *l, *r) << '\n';
      return kOk;
    };
  });

  auto* bisim = app.add_subcommand("bisim", "Bisimulations");
  bisim->require_subcommand(1);
  auto* bisim_check = bisim->add_subcommand("check", "Check a bisimulation document");
  add_pair_options(bisim_check, true);
  bisim_check->callback([&] {
    action = [&] {
      const PointedModel l = pointed(pair.left, pair.left_point);
      const PointedModel r = pointed(pair.right, pair.right_point);
      const WorldRelation rel = load_world_relation(read_file(pair.relation), l.model(), r.model());
      return report_check(io, check_bisimulation(l, r, rel, sigma_option()), l.model(), r.model());
    };
  });
  auto* bisim_greatest = bisim->add_subcommand("greatest", "Print the greatest bisimulation between two models");
  add_pair_options(bisim_greatest, false);
  bisim_greatest->callback([&] {
    action = [&] {
      const auto l = load_model_file(pair.left).model;
      const auto r = load_model_file(pair.right).model;
      io.out << relation_document(greatest_bisimulation(*l, *r, sigma_option()), *l, *r) << '\n';
      return kOk;
    };
  });

  // scan / synth
  struct FamilyOptions {
    std::string fo;
    std::string models;
    std::size_t enumerate = 0;
    std::string vocab;
    std::size_t depth = 0;
    bool intuitionistic = false;
  };
  FamilyOptions fam;
  auto add_family_options = [&](CLI::App* sub) {
    sub->add_option("--fo", fam.fo, "First-order formula with one free variable")->required();
    auto* models = sub->add_option("--models", fam.models, "Directory of model documents")->check(CLI::ExistingDirectory);
    auto* enumerate = sub->add_option("--enumerate", fam.enumerate, "Use every model with up to N worlds");
    models->excludes(enumerate);
    sub->add_option("--vocab", fam.vocab, "Letters for --enumerate (defaults to the formula's)");
  };
  auto load_family = [&](const FOFormula& formula) {
    if (!fam.models.empty()) return family_from_directory(fam.models);
    if (fam.enumerate == 0) throw PreconditionError("one of --models or --enumerate N is required");
    const Vocabulary sigma = fam.vocab.empty() ? vocabulary_of(formula) : parse_vocab(fam.vocab);
    return family_from_enumeration(fam.enumerate, sigma, false);
  };

  auto* scan = app.add_subcommand("scan", "Search a family for an invariance counterexample");
  add_family_options(scan);
  std::string scan_mode = "asim";
  scan->add_option("--mode", scan_mode, "asim, kasim:K, bisim or int");
  auto* scan_depth = scan->add_option("--depth", fam.depth, "On a pass, also synthesize at this depth");
  scan->callback([&] {
    action = [&] {
      const ScanMode mode = ScanMode::parse(scan_mode);
      const FOFormula formula = parse_fo(fam.fo);
      const auto family = load_family(formula);
      const Verdict verdict = invariance_scan(formula, points_of(family), mode);
      ordered_json doc;
      if (verdict.pass()) {
        doc["verdict"] = "pass";
        if (*scan_depth) {
          const auto probe = points_of(family);
          const Repertoire rep = enumerate_int_formulas(vocabulary_of(formula), fam.depth, probe);
          const auto j = synthesize(formula, fam.depth, probe, rep, mode.kind == ScanMode::Kind::IntAsim);
          doc["result"] = j ? ordered_json(render(*j)) : ordered_json(nullptr);
        }
      } else {
        const Counterexample& c = *verdict.counterexample;
        doc["verdict"] = "counterexample";
        doc["source"] = member_json(member_for(family, c.source));
        doc["target"] = member_json(member_for(family, c.target));
        const Model& l = c.source.model();
        const Model& r = c.target.model();
        doc["relation"] = std::visit(
            [&](const auto& rel) { return ordered_json::parse(relation_document(rel, l, r)); }, c.evidence);
      }
      if (io.json) {
        io.out << doc.dump() << '\n';
      } else if (verdict.pass()) {
        io.out << "pass (" << family.size() << " pointed models)\n";
        if (doc.contains("result")) {
          io.out << "result: " << (doc["result"].is_null() ? "absent" : doc["result"].get<std::string>()) << '\n';
        }
      } else {
        const auto& s = doc["source"];
        const auto& t = doc["target"];
        io.out << "counterexample: " << s["model"].get<std::string>() << "@" << s["point"].get<std::string>()
               << " -> " << t["model"].get<std::string>() << "@" << t["point"].get<std::string>() << '\n';
        io.out << "relation: " << doc["relation"].dump() << '\n';
      }
      return verdict.pass() ? kOk : kNegative;
    };
  });

  auto* synth = app.add_subcommand("synth", "Find an intuitionistic formula equivalent on a family");
  add_family_options(synth);
  synth->add_option("--depth", fam.depth, "Implication depth of the candidates")->required();
  synth->add_flag("--int", fam.intuitionistic, "Only consider intuitionistic members");
  synth->callback([&] {
    action = [&] {
      const FOFormula formula = parse_fo(fam.fo);
      const auto probe = points_of(load_family(formula));
      const Repertoire rep = enumerate_int_formulas(vocabulary_of(formula), fam.depth, probe);
      if (!rep.complete) io.err << "warning: formula generation budget exhausted; repertoire is partial\n";
      const auto j = synthesize(formula, fam.depth, probe, rep, fam.intuitionistic);
      io.err << "relative to a family of " << probe.size() << " pointed models\n";
      if (io.json) {
        ordered_json doc;
        doc["result"] = j ? ordered_json(render(*j)) : ordered_json(nullptr);
        io.out << doc.dump() << '\n';
      } else {
        io.out << (j ? render(*j) : std::string("absent")) << '\n';
      }
      return j ? kOk : kNegative;
    };
  });

  // enum-models
  auto* enum_models = app.add_subcommand("enum-models", "List models up to isomorphism");
  std::size_t enum_worlds = 1;
  std::string enum_vocab;
  bool enum_int = false;
  std::size_t enum_cap = 1'000'000;
  std::string enum_out;
  enum_models->add_option("--max-worlds", enum_worlds, "Largest domain size")->required();
  enum_models->add_option("--vocab", enum_vocab, "Letters, e.g. 1,2");
  enum_models->add_flag("--int", enum_int, "Only intuitionistic models");
  enum_models->add_option("--cap", enum_cap, "Fail beyond this many models");
  enum_models->add_option("--out", enum_out, "Write one document per model into this directory");
  enum_models->callback([&] {
    action = [&] {
      ModelEnumerator enumerator({enum_worlds, parse_vocab(enum_vocab), enum_int, enum_cap});
      if (!enum_out.empty()) std::filesystem::create_directories(enum_out);
      ordered_json all = ordered_json::array();
      std::size_t index = 0;
      while (auto model = enumerator.next()) {
        const std::string doc = model_document(*model);
        if (!enum_out.empty()) {
          std::ostringstream name;
          name << "model" << std::setw(5) << std::setfill('0') << index << ".json";
          std::ofstream(std::filesystem::path(enum_out) / name.str()) << doc << '\n';
        } else if (io.json) {
          all.push_back(ordered_json::parse(doc));
        } else {
          io.out << doc << '\n';
        }
        ++index;
      }
      if (io.json && enum_out.empty()) io.out << all.dump() << '\n';
      io.err << index << " models\n";
      return kOk;
    };
  });

  // export-dot
  auto* dot = app.add_subcommand("export-dot", "Render a model in Graphviz format");
  std::string dot_model;
  dot->add_option("model", dot_model, "Model document")->required()->check(CLI::ExistingFile);
  dot->callback([&] {
    action = [&] {
      const LoadedModel loaded = load_model_file(dot_model);
      io.out << model_dot(*loaded.model, loaded.point);
      return kOk;
    };
  });

  std::vector<std::string> reversed_args(args.rbegin(), args.rend());
  try {
    app.parse(reversed_args);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kOk;
    }
    err << "error: " << e.what() << '\n';
    err << "run with --help for usage\n";
    return kError;
  }
  if (!action) {
    err << "error: no command given\n";
    return kError;
  }
  try {
    status = action();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
  return status;
}

}  // namespace asimkit::cli
