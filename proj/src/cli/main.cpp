// Command-line surface: load structures from JSON, run validators and
// constructions, and emit machine-readable reports on stdout.
//
// Exit codes: 0 = pass, 1 = law violations, 2 = input/shape error,
// 3 = capacity or coverage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "multiarity/duoidal.hpp"
#include "multiarity/json_io.hpp"
#include "multiarity/premulticat_lemmas.hpp"

using namespace multiarity;

namespace {

json load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ShapeError("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const std::exception& ex) {
    throw ShapeError("cannot parse '" + path + "': " + ex.what());
  }
  return j;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int finish(const Report& rep) {
  emit(report_to_json(rep));
  return rep.pass() ? 0 : 1;
}

// ArrowGraph JSON: {"vertices":[...], "edges":{"A->B": <arrow object>}}.
ArrowGraph arrowgraph_from_json(const json& j) {
  ArrowGraph g;
  g.vertices = j.at("vertices").get<std::vector<std::string>>();
  for (const auto& [key, obj] : j.at("edges").items()) {
    auto arrow = key.find("->");
    if (arrow == std::string::npos)
      throw ShapeError("edge key '" + key + "' lacks '->'");
    g.edges[{key.substr(0, arrow), key.substr(arrow + 2)}] =
        arrowobj_from_json(obj);
  }
  return g;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite multi-ary algebra toolkit"};
  app.require_subcommand(1);

  long max_instances = -1;
  std::string format = "json";
  std::uint64_t seed = 0;
  app.add_option("--max-instances", max_instances,
                 "cap on checked law instances (-1 = exhaustive)");
  app.add_option("--format", format, "output format (json)");
  app.add_option("--seed", seed, "seed for sampled-instance selection");

  std::string kind, file, file2, term;
  int bound = 2;

  auto* check = app.add_subcommand("check", "validate a structure file");
  check->add_option("kind", kind,
                    "clone|multicat|premulticat|effectful|enriched|"
                    "arrowobj-duoidal")
      ->required();
  check->add_option("file", file, "input JSON")->required();

  auto* freeclone =
      app.add_subcommand("free-clone", "free clone on a category");
  freeclone->add_option("file", file, "category JSON")->required();
  freeclone->add_option("--max-context", bound, "context length bound");

  auto* freecart =
      app.add_subcommand("free-cart", "free cartesian category on a clone");
  freecart->add_option("file", file, "clone JSON")->required();
  freecart->add_option("--max-list", bound, "list length bound");

  auto* freemon = app.add_subcommand(
      "free-monoidal", "free strict monoidal category on a multicategory");
  freemon->add_option("file", file, "multicategory JSON")->required();
  freemon->add_option("--max-list", bound, "list length bound");

  auto* freecat =
      app.add_subcommand("free-cat", "free category on a graph");
  freecat->add_option("file", file, "graph JSON")->required();
  freecat->add_option("--max-path", bound, "path length bound");

  auto* freeenr = app.add_subcommand(
      "free-enriched-cat", "two-level free category on an arrow graph");
  freeenr->add_option("file", file, "arrow graph JSON")->required();
  freeenr->add_option("--max-path", bound, "path length bound");

  auto* centre_cmd =
      app.add_subcommand("centre", "centre of a premulticategory");
  centre_cmd->add_option("file", file, "premulticategory JSON")->required();

  auto* central_cmd =
      app.add_subcommand("central", "test one term for centrality");
  central_cmd->add_option("term", term, "term name")->required();
  central_cmd->add_option("file", file, "premulticategory JSON")->required();

  auto* toeff = app.add_subcommand(
      "to-effectful", "read an effectful structure off a two-level one");
  toeff->add_option("file", file, "two-level JSON")->required();

  auto* toenr = app.add_subcommand(
      "to-enriched", "present an effectful structure in two levels");
  toenr->add_option("file", file, "effectful JSON")->required();

  auto* rt = app.add_subcommand("roundtrip",
                                "exact round-trip through both presentations");
  rt->add_option("kind", kind, "effectful|enriched")->required();
  rt->add_option("file", file, "input JSON")->required();

  auto* funny = app.add_subcommand("funny",
                                   "tensor of two arrow objects");
  funny->add_option("a", file, "first arrow object JSON")->required();
  funny->add_option("b", file2, "second arrow object JSON")->required();

  auto* algebras = app.add_subcommand(
      "algebras", "hom-category of morphisms between two-level structures");
  algebras->add_option("file", file, "source JSON")->required();
  algebras->add_option("target", file2, "target JSON")->required();

  CLI11_PARSE(app, argc, argv);
  if (format != "json") {
    std::cerr << "unsupported format '" << format << "'\n";
    return 2;
  }
  // Parallelism bound; law checking runs sequentially within it.
  if (const char* t = std::getenv("MULTIARITY_THREADS")) (void)t;

  try {
    if (*check) {
      if (kind == "clone") return finish(validate_clone(clone_from_json(load(file))));
      if (kind == "multicat")
        return finish(validate_multicat(multicat_from_json(load(file))));
      if (kind == "premulticat")
        return finish(validate_premulticat(premulticat_from_json(load(file))));
      if (kind == "effectful")
        return finish(validate_effectful(effectful_from_json(load(file))));
      if (kind == "enriched")
        return finish(validate_enriched(enriched_from_json(load(file))));
      if (kind == "arrowobj-duoidal") {
        json j = load(file);
        std::vector<ArrowObj> pool;
        if (j.is_array())
          for (const auto& e : j) pool.push_back(arrowobj_from_json(e));
        else
          pool.push_back(arrowobj_from_json(j));
        DuoidalOptions opts;
        opts.max_instances = max_instances;
        opts.seed = seed;
        return finish(check_duoidal(pool, opts));
      }
      std::cerr << "unknown kind '" << kind << "'\n";
      return 2;
    }
    if (*freeclone) {
      Clone c = free_clone(fincategory_from_json(load(file)), bound);
      emit(clone_to_json(c));
      return 0;
    }
    if (*freecart) {
      FreeCartesian fc = free_cartesian(clone_from_json(load(file)), bound);
      emit(fincategory_to_json(fc.cat));
      return 0;
    }
    if (*freemon) {
      FreeMonoidal fm =
          free_strict_monoidal(multicat_from_json(load(file)), bound);
      emit(fincategory_to_json(fm.cat));
      return 0;
    }
    if (*freecat) {
      emit(fincategory_to_json(
          free_category_on_graph(fingraph_from_json(load(file)), bound)));
      return 0;
    }
    if (*freeenr) {
      FreeEnrichedCategory fe =
          free_enriched_category(arrowgraph_from_json(load(file)), bound);
      json out;
      out["level0"] = fincategory_to_json(fe.level0);
      out["level1"] = fincategory_to_json(fe.level1);
      out["ioo"] = fe.ioo;
      emit(out);
      return 0;
    }
    if (*centre_cmd) {
      Premulticat p = premulticat_from_json(load(file));
      emit(premulticat_to_json(centre(p)));
      return 0;
    }
    if (*central_cmd) {
      Premulticat p = premulticat_from_json(load(file));
      validate_premulticat_shape(p);
      CentralityResult r = is_central(p, term);
      Report rep;
      ++rep.checked;
      if (!r.central)
        rep.violation("centrality", term, r.witness);
      return finish(rep);
    }
    if (*toeff) {
      emit(effectful_to_json(
          enriched_to_effectful(enriched_from_json(load(file)))));
      return 0;
    }
    if (*toenr) {
      emit(enriched_to_json(
          effectful_to_enriched(effectful_from_json(load(file)))));
      return 0;
    }
    if (*rt) {
      if (kind == "effectful")
        return finish(roundtrip_effectful(effectful_from_json(load(file))));
      if (kind == "enriched")
        return finish(roundtrip_enriched(enriched_from_json(load(file))));
      std::cerr << "unknown kind '" << kind << "'\n";
      return 2;
    }
    if (*funny) {
      TensorResult t = funny_tensor(arrowobj_from_json(load(file)),
                                    arrowobj_from_json(load(file2)));
      emit(arrowobj_to_json(t.object));
      return 0;
    }
    if (*algebras) {
      return finish(algebra_category(enriched_from_json(load(file)),
                                     enriched_from_json(load(file2))));
    }
  } catch (const CapacityError& ex) {
    std::cerr << ex.what() << "\n";
    return 3;
  } catch (const CoverageError& ex) {
    std::cerr << ex.what() << "\n";
    return 3;
  } catch (const ShapeError& ex) {
    std::cerr << ex.what() << "\n";
    return 2;
  } catch (const InternalConsistencyError& ex) {
    std::cerr << ex.what() << "\n";
    return 2;
  }
  return 2;
}
