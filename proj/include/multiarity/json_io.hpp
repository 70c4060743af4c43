#ifndef MULTIARITY_JSON_IO_HPP
#define MULTIARITY_JSON_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "multiarity/arrowcat.hpp"
#include "multiarity/effectful.hpp"
#include "multiarity/enriched.hpp"
#include "multiarity/freecons.hpp"
#include "multiarity/report.hpp"

namespace multiarity {

using json = nlohmann::ordered_json;

// --------------------------- hom keys ---------------------------

inline std::string homkey_to_string(const HomKey& k) { return k.str(); }

inline HomKey homkey_from_string(const std::string& s) {
  auto arrow = s.find("->");
  if (arrow == std::string::npos)
    throw ShapeError("hom key '" + s + "' lacks '->'");
  HomKey k;
  k.tgt = s.substr(arrow + 2);
  std::string ctx = s.substr(0, arrow);
  std::size_t start = 0;
  while (start <= ctx.size()) {
    auto comma = ctx.find(',', start);
    if (comma == std::string::npos) {
      k.ctx.push_back(ctx.substr(start));
      break;
    }
    k.ctx.push_back(ctx.substr(start, comma - start));
    start = comma + 1;
  }
  return k;
}

// --------------------------- tables ---------------------------

inline json table_to_json(const MultiHomTable& t) {
  json homs = json::object();
  for (const auto& [k, terms] : t.homs) homs[k.str()] = terms;
  return homs;
}

inline void table_from_json(const json& j, MultiHomTable& t) {
  for (const auto& [key, terms] : j.items())
    t.homs[homkey_from_string(key)] =
        terms.get<std::vector<std::string>>();
}

// --------------------------- clone ---------------------------

inline json clone_to_json(const Clone& c) {
  json j;
  j["objects"] = c.table.objects;
  j["maxContext"] = c.table.maxContext;
  j["homs"] = table_to_json(c.table);
  json projections = json::object();
  for (const auto& [key, pr] : c.projections) {
    const auto& [ctx, idx] = key;
    std::string name;
    for (std::size_t i = 0; i < ctx.size(); ++i)
      name += (i ? "," : "") + ctx[i];
    projections[name + "#" + std::to_string(idx)] = pr;
  }
  j["projections"] = projections;
  json sub = json::array();
  for (const auto& [key, r] : c.sub)
    sub.push_back({{"t", key.first}, {"args", key.second}, {"result", r}});
  j["sub"] = sub;
  return j;
}

inline Clone clone_from_json(const json& j) {
  Clone c;
  c.table.objects = j.at("objects").get<std::vector<std::string>>();
  c.table.maxContext = j.at("maxContext").get<int>();
  table_from_json(j.at("homs"), c.table);
  for (const auto& [key, pr] : j.at("projections").items()) {
    auto hash = key.rfind('#');
    if (hash == std::string::npos)
      throw ShapeError("projection key '" + key + "' lacks '#'");
    std::vector<std::string> ctx;
    std::string head = key.substr(0, hash);
    std::size_t start = 0;
    while (start <= head.size()) {
      auto comma = head.find(',', start);
      if (comma == std::string::npos) {
        ctx.push_back(head.substr(start));
        break;
      }
      ctx.push_back(head.substr(start, comma - start));
      start = comma + 1;
    }
    c.projections[{ctx, std::stoi(key.substr(hash + 1))}] =
        pr.get<std::string>();
  }
  for (const auto& e : j.at("sub"))
    c.sub[{e.at("t").get<std::string>(),
           e.at("args").get<std::vector<std::string>>()}] =
        e.at("result").get<std::string>();
  return c;
}

// --------------------------- multicat ---------------------------

inline json multicat_to_json(const Multicat& m) {
  json j;
  j["objects"] = m.table.objects;
  j["maxContext"] = m.table.maxContext;
  j["homs"] = table_to_json(m.table);
  j["ids"] = m.ids;
  json sub = json::array();
  for (const auto& [key, r] : m.sub)
    sub.push_back({{"t", key.first}, {"args", key.second}, {"result", r}});
  j["sub"] = sub;
  return j;
}

inline Multicat multicat_from_json(const json& j) {
  Multicat m;
  m.table.objects = j.at("objects").get<std::vector<std::string>>();
  m.table.maxContext = j.at("maxContext").get<int>();
  table_from_json(j.at("homs"), m.table);
  m.ids = j.at("ids").get<std::map<std::string, std::string>>();
  for (const auto& e : j.at("sub"))
    m.sub[{e.at("t").get<std::string>(),
           e.at("args").get<std::vector<std::string>>()}] =
        e.at("result").get<std::string>();
  return m;
}

// --------------------------- premulticat ---------------------------

inline json premulticat_to_json(const Premulticat& p) {
  json j;
  j["objects"] = p.table.objects;
  j["maxContext"] = p.table.maxContext;
  j["homs"] = table_to_json(p.table);
  j["ids"] = p.ids;
  json sub1 = json::array();
  for (const auto& [key, r] : p.sub1)
    sub1.push_back({{"t", std::get<0>(key)},
                    {"pos", std::get<1>(key)},
                    {"u", std::get<2>(key)},
                    {"result", r}});
  j["sub1"] = sub1;
  return j;
}

inline Premulticat premulticat_from_json(const json& j) {
  Premulticat p;
  p.table.objects = j.at("objects").get<std::vector<std::string>>();
  p.table.maxContext = j.at("maxContext").get<int>();
  table_from_json(j.at("homs"), p.table);
  p.ids = j.at("ids").get<std::map<std::string, std::string>>();
  for (const auto& e : j.at("sub1"))
    p.sub1[{e.at("t").get<std::string>(), e.at("pos").get<int>(),
            e.at("u").get<std::string>()}] =
        e.at("result").get<std::string>();
  return p;
}

// --------------------------- effectful ---------------------------

inline json effectful_to_json(const EffectfulMulticat& e) {
  json j;
  j["pure"] = multicat_to_json(e.pure);
  j["eff"] = premulticat_to_json(e.eff);
  // Inclusion grouped by the hom of the pure term.
  TermIndex idx(e.pure.table);
  json J = json::object();
  for (const auto& [k, terms] : e.pure.table.homs) {
    json block = json::object();
    for (const auto& t : terms) block[t] = e.J.at(t);
    J[k.str()] = block;
  }
  j["J"] = J;
  return j;
}

inline EffectfulMulticat effectful_from_json(const json& j) {
  EffectfulMulticat e;
  e.pure = multicat_from_json(j.at("pure"));
  e.eff = premulticat_from_json(j.at("eff"));
  for (const auto& [key, block] : j.at("J").items()) {
    (void)key;
    for (const auto& [t, jt] : block.items()) e.J[t] = jt.get<std::string>();
  }
  return e;
}

// --------------------------- enriched ---------------------------

inline json enriched_to_json(const EnrichedMulticat& d) {
  json j;
  j["objects"] = d.objects;
  j["maxContext"] = d.homs0.maxContext;
  j["homs0"] = table_to_json(d.homs0);
  j["homs1"] = table_to_json(d.homs1);
  j["bar"] = d.bar;
  j["ids0"] = d.ids0;
  json psub = json::array();
  for (const auto& [key, r] : d.psub)
    psub.push_back({{"t", key.first}, {"args", key.second}, {"result", r}});
  j["psub"] = psub;
  json esub = json::array();
  for (const auto& [key, r] : d.esub)
    esub.push_back({{"j", std::get<0>(key)},
                    {"t", std::get<1>(key)},
                    {"args", std::get<2>(key)},
                    {"result", r}});
  j["esub"] = esub;
  return j;
}

inline EnrichedMulticat enriched_from_json(const json& j) {
  EnrichedMulticat d;
  d.objects = j.at("objects").get<std::vector<std::string>>();
  d.homs0.objects = d.homs1.objects = d.objects;
  d.homs0.maxContext = d.homs1.maxContext = j.at("maxContext").get<int>();
  table_from_json(j.at("homs0"), d.homs0);
  table_from_json(j.at("homs1"), d.homs1);
  d.bar = j.at("bar").get<std::map<std::string, std::string>>();
  d.ids0 = j.at("ids0").get<std::map<std::string, std::string>>();
  for (const auto& e : j.at("psub"))
    d.psub[{e.at("t").get<std::string>(),
            e.at("args").get<std::vector<std::string>>()}] =
        e.at("result").get<std::string>();
  for (const auto& e : j.at("esub"))
    d.esub[{e.at("j").get<int>(), e.at("t").get<std::string>(),
            e.at("args").get<std::vector<std::string>>()}] =
        e.at("result").get<std::string>();
  return d;
}

// --------------------------- arrow objects ---------------------------

inline json arrowobj_to_json(const ArrowObj& a) {
  json j;
  j["level0"] = a.level0.elements;
  j["level1"] = a.level1.elements;
  j["diamond"] = a.diamond.table;
  return j;
}

inline ArrowObj arrowobj_from_json(const json& j) {
  FinSet l0(j.at("level0").get<std::vector<std::string>>());
  FinSet l1(j.at("level1").get<std::vector<std::string>>());
  return ArrowObj(l0, l1,
                  FinMap(l0, l1,
                         j.at("diamond")
                             .get<std::map<std::string, std::string>>()));
}

// --------------------------- fin category / graph ---------------------------

inline json fincategory_to_json(const FinCategory& c) {
  json j;
  j["objects"] = c.objects;
  json homs = json::object();
  for (const auto& [k, arrows] : c.homs)
    homs[k.first + "->" + k.second] = arrows;
  j["homs"] = homs;
  j["ids"] = c.ids;
  json comp = json::array();
  for (const auto& [k, r] : c.comp)
    comp.push_back({{"g", k.first}, {"f", k.second}, {"result", r}});
  j["comp"] = comp;
  return j;
}

inline FinCategory fincategory_from_json(const json& j) {
  FinCategory c;
  c.objects = j.at("objects").get<std::vector<std::string>>();
  for (const auto& [key, arrows] : j.at("homs").items()) {
    auto arrow = key.find("->");
    if (arrow == std::string::npos)
      throw ShapeError("hom key '" + key + "' lacks '->'");
    c.homs[{key.substr(0, arrow), key.substr(arrow + 2)}] =
        arrows.get<std::vector<std::string>>();
  }
  c.ids = j.at("ids").get<std::map<std::string, std::string>>();
  for (const auto& e : j.at("comp"))
    c.comp[{e.at("g").get<std::string>(), e.at("f").get<std::string>()}] =
        e.at("result").get<std::string>();
  return c;
}

inline json fingraph_to_json(const FinGraph& g) {
  json j;
  j["vertices"] = g.vertices;
  json edges = json::object();
  for (const auto& [k, es] : g.edges)
    edges[k.first + "->" + k.second] = es;
  j["edges"] = edges;
  return j;
}

inline FinGraph fingraph_from_json(const json& j) {
  FinGraph g;
  g.vertices = j.at("vertices").get<std::vector<std::string>>();
  for (const auto& [key, es] : j.at("edges").items()) {
    auto arrow = key.find("->");
    if (arrow == std::string::npos)
      throw ShapeError("edge key '" + key + "' lacks '->'");
    g.edges[{key.substr(0, arrow), key.substr(arrow + 2)}] =
        es.get<std::vector<std::string>>();
  }
  return g;
}

// --------------------------- reports ---------------------------

inline json report_to_json(const Report& r) {
  json j;
  j["status"] = r.status();
  auto entries = [](const std::vector<ReportEntry>& es) {
    json a = json::array();
    for (const auto& e : es)
      a.push_back({{"law", e.law},
                   {"instance", e.instance},
                   {"detail", e.detail}});
    return a;
  };
  j["violations"] = entries(r.violations);
  j["gaps"] = entries(r.gaps);
  j["infos"] = entries(r.infos);
  j["checked"] = r.checked;
  j["skipped"] = r.skipped;
  return j;
}

}  // namespace multiarity

#endif
