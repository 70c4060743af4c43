#ifndef MULTIARITY_PREMULTICAT_HPP
#define MULTIARITY_PREMULTICAT_HPP

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "multiarity/multicat.hpp"
#include "multiarity/table.hpp"

namespace multiarity {

// A finite truncated premulticategory: identities and single-position
// substitution t[pos,u], splicing u's context into t's at that position.
struct Premulticat {
  MultiHomTable table;
  std::map<std::string, std::string> ids;
  // (t, 1-based position in t's context, u) -> result term.
  std::map<std::tuple<std::string, int, std::string>, std::string> sub1;

  const std::string* subst1(const std::string& t, int pos,
                            const std::string& u) const {
    auto it = sub1.find({t, pos, u});
    return it == sub1.end() ? nullptr : &it->second;
  }

  bool operator==(const Premulticat& o) const {
    return table == o.table && ids == o.ids && sub1 == o.sub1;
  }
};

inline std::string sub1_str(const std::string& t, int pos,
                            const std::string& u) {
  return t + "[" + std::to_string(pos) + ":" + u + "]";
}

inline void validate_premulticat_shape(const Premulticat& p) {
  p.table.validate_shape();
  TermIndex index(p.table);
  for (const auto& o : p.table.objects) {
    auto it = p.ids.find(o);
    if (it == p.ids.end())
      throw ShapeError("premulticat: missing identity at '" + o + "'");
    if (!p.table.has_term({{o}, o}, it->second))
      throw ShapeError("premulticat: identity at '" + o +
                       "' is not tabled in " + HomKey{{o}, o}.str());
  }
  for (const auto& [key, result] : p.sub1) {
    const auto& [t, pos, u] = key;
    HomKey tk = index.at(t);
    HomKey uk = index.at(u);
    if (pos < 1 || pos > static_cast<int>(tk.ctx.size()))
      throw ShapeError("premulticat: position out of range in " +
                       sub1_str(t, pos, u));
    if (tk.ctx[pos - 1] != uk.tgt)
      throw ShapeError("premulticat: " + sub1_str(t, pos, u) +
                       " plugs a " + uk.tgt + "-term into a " +
                       tk.ctx[pos - 1] + " slot");
    std::vector<std::string> spliced(tk.ctx.begin(),
                                     tk.ctx.begin() + (pos - 1));
    spliced.insert(spliced.end(), uk.ctx.begin(), uk.ctx.end());
    spliced.insert(spliced.end(), tk.ctx.begin() + pos, tk.ctx.end());
    if (static_cast<int>(spliced.size()) > p.table.maxContext)
      throw ShapeError("premulticat: spliced context of " +
                       sub1_str(t, pos, u) + " exceeds the truncation bound");
    if (!p.table.has_term({spliced, tk.tgt}, result))
      throw ShapeError("premulticat: result " + result + " of " +
                       sub1_str(t, pos, u) + " is not tabled in " +
                       HomKey{spliced, tk.tgt}.str());
  }
}

// The premulticategory laws, where defined:
//   id_A[1,u] = u,  t[k, id] = t,  and the nested-substitution equation
//   t[p,u][q,v] = t[p, u[q-p+1, v]] whenever q falls inside u's block.
inline Report validate_premulticat(const Premulticat& p) {
  validate_premulticat_shape(p);
  Report rep;
  TermIndex index(p.table);

  for (const auto& [k, terms] : p.table.homs)
    for (const auto& u : terms) {
      const std::string& id = p.ids.at(k.tgt);
      const std::string* r = p.subst1(id, 1, u);
      if (!r) {
        ++rep.skipped;
        rep.gap("left-unit", sub1_str(id, 1, u), "substitution untabled");
        continue;
      }
      ++rep.checked;
      if (*r != u)
        rep.violation("left-unit", sub1_str(id, 1, u), *r + " != " + u);
    }

  for (const auto& [k, terms] : p.table.homs)
    for (const auto& t : terms)
      for (int pos = 1; pos <= static_cast<int>(k.ctx.size()); ++pos) {
        const std::string& id = p.ids.at(k.ctx[pos - 1]);
        const std::string* r = p.subst1(t, pos, id);
        if (!r) {
          ++rep.skipped;
          rep.gap("right-unit", sub1_str(t, pos, id),
                  "substitution untabled");
          continue;
        }
        ++rep.checked;
        if (*r != t)
          rep.violation("right-unit", sub1_str(t, pos, id), *r + " != " + t);
      }

  // Associativity over pairs of tabled entries.
  std::map<std::string, std::vector<const std::pair<
      const std::tuple<std::string, int, std::string>, std::string>*>>
      by_outer;
  for (const auto& e : p.sub1) by_outer[std::get<0>(e.first)].push_back(&e);

  for (const auto& e1 : p.sub1) {
    const auto& [t, pos, u] = e1.first;
    const std::string& r1 = e1.second;
    int ulen = static_cast<int>(index.at(u).ctx.size());
    auto it = by_outer.find(r1);
    if (it == by_outer.end()) continue;
    for (const auto* e2 : it->second) {
      int q = std::get<1>(e2->first);
      if (q < pos || q > pos + ulen - 1) continue;  // outside u's block
      const std::string& v = std::get<2>(e2->first);
      const std::string& lhs = e2->second;
      const std::string* inner = p.subst1(u, q - pos + 1, v);
      const std::string* rhs = inner ? p.subst1(t, pos, *inner) : nullptr;
      if (!rhs) { ++rep.skipped; continue; }
      ++rep.checked;
      if (lhs != *rhs)
        rep.violation("associativity",
                      sub1_str(sub1_str(t, pos, u), q, v),
                      lhs + " != " + *rhs);
    }
  }
  return rep;
}

// Centrality of u within the table: for every tabled t, every ordered pair
// of distinct slots (one holding u, one holding any v), substituting in
// either order gives the same result, whenever both orders are tabled.
struct CentralityResult {
  bool central = true;
  std::string witness;  // a violated instance if not central
};

inline CentralityResult is_central(const Premulticat& p,
                                   const std::string& u) {
  TermIndex index(p.table);
  HomKey uk = index.at(u);
  int ulen = static_cast<int>(uk.ctx.size());
  CentralityResult res;
  for (const auto& [tk, terms] : p.table.homs) {
    int n = static_cast<int>(tk.ctx.size());
    for (int i = 1; i <= n; ++i) {
      if (tk.ctx[i - 1] != uk.tgt) continue;
      for (int j = 1; j <= n; ++j) {
        if (j == i) continue;
        for (const auto& [vk, vterms] : p.table.homs) {
          if (vk.tgt != tk.ctx[j - 1]) continue;
          int vlen = static_cast<int>(vk.ctx.size());
          for (const auto& t : terms)
            for (const auto& v : vterms) {
              // u first, then v at its shifted position.
              int jshift = j > i ? j + ulen - 1 : j;
              const std::string* tu = p.subst1(t, i, u);
              const std::string* lhs =
                  tu ? p.subst1(*tu, jshift, v) : nullptr;
              // v first, then u at its shifted position.
              int ishift = i > j ? i + vlen - 1 : i;
              const std::string* tv = p.subst1(t, j, v);
              const std::string* rhs =
                  tv ? p.subst1(*tv, ishift, u) : nullptr;
              if (!lhs || !rhs) continue;
              if (*lhs != *rhs) {
                res.central = false;
                res.witness = sub1_str(sub1_str(t, i, u), jshift, v) +
                              " = " + *lhs + " but " +
                              sub1_str(sub1_str(t, j, v), ishift, u) +
                              " = " + *rhs;
                return res;
              }
            }
        }
      }
    }
  }
  return res;
}

// Per-term centrality map ("central within table").
inline std::map<std::string, CentralityResult> centrality_report(
    const Premulticat& p) {
  std::map<std::string, CentralityResult> out;
  for (const auto& [k, terms] : p.table.homs) {
    (void)k;
    for (const auto& t : terms) out[t] = is_central(p, t);
  }
  return out;
}

// The centre: same objects, hom-sets restricted to central terms, the
// substitution table restricted accordingly. Closure (central results for
// central inputs) is verified, not assumed.
inline Premulticat centre(const Premulticat& p) {
  auto cent = centrality_report(p);
  Premulticat z;
  z.table.objects = p.table.objects;
  z.table.maxContext = p.table.maxContext;
  for (const auto& [k, terms] : p.table.homs) {
    std::vector<std::string> kept;
    for (const auto& t : terms)
      if (cent.at(t).central) kept.push_back(t);
    if (!kept.empty()) z.table.homs[k] = kept;
  }
  for (const auto& [o, id] : p.ids) {
    if (!cent.at(id).central)
      throw InternalConsistencyError(
          "centre: identity at '" + o + "' is not central: " +
          cent.at(id).witness);
    z.ids[o] = id;
  }
  for (const auto& [key, r] : p.sub1) {
    const auto& [t, pos, u] = key;
    if (!cent.at(t).central || !cent.at(u).central) continue;
    if (!cent.at(r).central)
      throw InternalConsistencyError(
          "centre: " + sub1_str(t, pos, u) + " = " + r +
          " leaves the centre: " + cent.at(r).witness);
    z.sub1[key] = r;
  }
  return z;
}

// Iterated substitution t<start, u_1..u_n>: plug the u_i into consecutive
// slots beginning at `start`, leftmost first, shifting by the inserted
// context lengths. Returns null at the first missing intermediate.
inline const std::string* try_isub(const Premulticat& p, const TermIndex& idx,
                                   const std::string& t, int start,
                                   const std::vector<std::string>& us) {
  const std::string* cur = &t;
  int pos = start;
  for (const auto& u : us) {
    cur = p.subst1(*cur, pos, u);
    if (!cur) return nullptr;
    pos += static_cast<int>(idx.at(u).ctx.size());
  }
  return cur;
}

inline std::string isub(const Premulticat& p, const std::string& t, int start,
                        const std::vector<std::string>& us) {
  TermIndex idx(p.table);
  const std::string* cur = &t;
  int pos = start;
  for (const auto& u : us) {
    const std::string* next = p.subst1(*cur, pos, u);
    if (!next)
      throw CoverageError("isub: missing entry " + sub1_str(*cur, pos, u));
    cur = next;
    pos += static_cast<int>(idx.at(u).ctx.size());
  }
  return *cur;
}

// View a multicategory as a premulticategory: t[k,u] = t<id,..,u,..,id>.
inline Premulticat multicat_to_premulticat(const Multicat& m) {
  Premulticat p;
  p.table = m.table;
  p.ids = m.ids;
  TermIndex index(m.table);
  for (const auto& [key, r] : m.sub) {
    const auto& [t, us] = key;
    // Entries where all but one argument is an identity become sub1 rows.
    int non_id = -1;
    bool ok = true;
    for (std::size_t i = 0; i < us.size(); ++i) {
      const HomKey& tk = index.at(t);
      if (us[i] == m.ids.at(tk.ctx[i])) continue;
      if (non_id >= 0) { ok = false; break; }
      non_id = static_cast<int>(i);
    }
    if (!ok || non_id < 0) continue;
    p.sub1[{t, non_id + 1, us[non_id]}] = r;
  }
  // All-identity entries give the sub1 instance at every slot.
  for (const auto& [k, terms] : m.table.homs)
    for (const auto& t : terms) {
      std::vector<std::string> idv;
      for (const auto& b : k.ctx) idv.push_back(m.ids.at(b));
      const std::string* r = m.subst(t, idv);
      if (!r) continue;
      for (int pos = 1; pos <= static_cast<int>(k.ctx.size()); ++pos)
        p.sub1[{t, pos, m.ids.at(k.ctx[pos - 1])}] = *r;
    }
  return p;
}

namespace detail {

// Mixed-radix flatten of an index tuple, last coordinate fastest —
// matches the element order produced by product()/index_tuples().
inline std::size_t flatten(const std::vector<std::size_t>& sizes,
                           const std::vector<std::size_t>& idx) {
  std::size_t out = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i) out = out * sizes[i] + idx[i];
  return out;
}

}  // namespace detail

// The premulticategory of stateful functions on a state set S:
//   Mhom(A_1..A_n; B) = all functions (A_1 x .. x A_n) x S -> B x S,
// with substitution threading the state through u first:
//   t[k,u](a,d,c,s) = t(a, u_B(d,s), c, u_S(d,s)).
// Object i is named "X<i>" with carrier carriers[i].
inline Premulticat stateful_premulticat(const FinSet& S,
                                        const std::vector<FinSet>& carriers,
                                        int maxArity,
                                        std::size_t hom_guard = 10000) {
  if (carriers.empty())
    throw ShapeError("stateful_premulticat: no carriers given");
  if (S.size() == 0)
    throw ShapeError("stateful_premulticat: empty state set");
  Premulticat p;
  p.table.maxContext = maxArity;
  std::map<std::string, FinSet> carrier_of;
  for (std::size_t i = 0; i < carriers.size(); ++i) {
    std::string name = "X" + std::to_string(i + 1);
    p.table.objects.push_back(name);
    carrier_of[name] = carriers[i];
  }

  auto term_name = [](const HomKey& k, const std::vector<std::size_t>& graph) {
    std::string s = k.str() + "#";
    for (auto g : graph) s += std::to_string(g) + ".";
    return s;
  };

  // Per-hom data: the function graphs, indexed over the domain product
  // (carriers in context order, then S; last coordinate fastest) with
  // values in B x S flattened as b*|S| + s.
  struct HomData {
    std::vector<std::size_t> dom_sizes;  // carrier sizes then |S|
    std::size_t cod_b = 0;
    std::map<std::string, std::vector<std::size_t>> graph_of;
  };
  std::map<HomKey, HomData> data;

  std::vector<std::vector<std::string>> contexts;
  std::vector<std::vector<std::string>> frontier{{}};
  for (int len = 1; len <= maxArity; ++len) {
    std::vector<std::vector<std::string>> next;
    for (const auto& pre : frontier)
      for (const auto& o : p.table.objects) {
        auto ctx = pre;
        ctx.push_back(o);
        next.push_back(ctx);
        contexts.push_back(ctx);
      }
    frontier = next;
  }

  for (const auto& ctx : contexts) {
    std::vector<std::size_t> dom_sizes;
    std::size_t dom = 1;
    for (const auto& o : ctx) {
      dom_sizes.push_back(carrier_of[o].size());
      dom *= carrier_of[o].size();
    }
    dom_sizes.push_back(S.size());
    dom *= S.size();
    for (const auto& tgt : p.table.objects) {
      std::size_t cod = carrier_of[tgt].size() * S.size();
      double count = 1;
      for (std::size_t i = 0; i < dom; ++i) count *= cod;
      HomKey k{ctx, tgt};
      if (count > static_cast<double>(hom_guard))
        throw CapacityError("stateful_premulticat: hom-set " + k.str() +
                            " would have " + std::to_string(count) +
                            " terms (guard " + std::to_string(hom_guard) +
                            ")");
      HomData hd;
      hd.dom_sizes = dom_sizes;
      hd.cod_b = carrier_of[tgt].size();
      std::vector<std::string> names;
      for (const auto& graph : index_tuples(
               std::vector<std::size_t>(dom, cod))) {
        std::string n = term_name(k, graph);
        names.push_back(n);
        hd.graph_of[n] = graph;
      }
      p.table.homs[k] = names;
      data[k] = std::move(hd);
    }
  }

  // Identities: (a,s) -> (a,s).
  for (const auto& o : p.table.objects) {
    HomKey k{{o}, o};
    const HomData& hd = data[k];
    std::vector<std::size_t> graph;
    for (const auto& idx :
         index_tuples(hd.dom_sizes))
      graph.push_back(idx[0] * S.size() + idx[1]);
    p.ids[o] = term_name(k, graph);
  }

  // Substitution: extensional evaluation with state threading.
  for (const auto& [tk, thd] : data) {
    int n = static_cast<int>(tk.ctx.size());
    for (int pos = 1; pos <= n; ++pos) {
      for (const auto& uctx : contexts) {
        HomKey uk{uctx, tk.ctx[pos - 1]};
        auto uit = data.find(uk);
        if (uit == data.end()) continue;
        const HomData& uhd = uit->second;
        std::vector<std::string> spliced(tk.ctx.begin(),
                                         tk.ctx.begin() + (pos - 1));
        spliced.insert(spliced.end(), uctx.begin(), uctx.end());
        spliced.insert(spliced.end(), tk.ctx.begin() + pos, tk.ctx.end());
        if (static_cast<int>(spliced.size()) > maxArity) continue;
        HomKey rk{spliced, tk.tgt};
        const HomData& rhd = data.at(rk);
        auto domain_tuples = index_tuples(rhd.dom_sizes);
        for (const auto& t : p.table.homs[tk]) {
          const auto& tg = thd.graph_of.at(t);
          for (const auto& u : p.table.homs[uk]) {
            const auto& ug = uhd.graph_of.at(u);
            std::vector<std::size_t> graph;
            graph.reserve(domain_tuples.size());
            for (const auto& idx : domain_tuples) {
              // idx = (gamma, delta, gamma', s), coordinatewise.
              std::size_t g = static_cast<std::size_t>(pos - 1);
              std::size_t d = uctx.size();
              std::size_t s = idx.back();
              // Evaluate u on (delta, s).
              std::vector<std::size_t> uin(idx.begin() + g,
                                           idx.begin() + g + d);
              uin.push_back(s);
              std::size_t uval = ug[detail::flatten(uhd.dom_sizes, uin)];
              std::size_t a = uval / S.size();
              std::size_t s2 = uval % S.size();
              // Evaluate t on (gamma, a, gamma', s2).
              std::vector<std::size_t> tin(idx.begin(), idx.begin() + g);
              tin.push_back(a);
              tin.insert(tin.end(), idx.begin() + g + d, idx.end() - 1);
              tin.push_back(s2);
              graph.push_back(tg[detail::flatten(thd.dom_sizes, tin)]);
            }
            p.sub1[{t, pos, u}] = term_name(rk, graph);
          }
        }
      }
    }
  }
  return p;
}

struct PremultMorphism {
  const Premulticat* src = nullptr;
  const Premulticat* dst = nullptr;
  std::map<std::string, std::string> objMap;
  std::map<std::string, std::string> termMap;

  HomKey map_key(const HomKey& k) const {
    HomKey out;
    for (const auto& o : k.ctx) out.ctx.push_back(objMap.at(o));
    out.tgt = objMap.at(k.tgt);
    return out;
  }
};

inline Report validate_premult_morphism(const PremultMorphism& f) {
  Report rep;
  const Premulticat& s = *f.src;
  const Premulticat& d = *f.dst;
  for (const auto& o : s.table.objects)
    if (!f.objMap.count(o) || !d.table.has_object(f.objMap.at(o)))
      throw ShapeError("premult morphism: object map not into target");
  for (const auto& [k, terms] : s.table.homs) {
    HomKey dk = f.map_key(k);
    for (const auto& t : terms) {
      if (!f.termMap.count(t))
        throw ShapeError("premult morphism: no image for term '" + t + "'");
      if (!d.table.has_term(dk, f.termMap.at(t)))
        throw ShapeError("premult morphism: image of '" + t +
                         "' is not tabled in " + dk.str());
    }
  }
  for (const auto& [o, id] : s.ids) {
    ++rep.checked;
    if (f.termMap.at(id) != d.ids.at(f.objMap.at(o)))
      rep.violation("morphism-identity", o,
                    f.termMap.at(id) + " != " + d.ids.at(f.objMap.at(o)));
  }
  for (const auto& [key, r] : s.sub1) {
    const auto& [t, pos, u] = key;
    const std::string* dres = d.subst1(f.termMap.at(t), pos, f.termMap.at(u));
    if (!dres) { ++rep.skipped; continue; }
    ++rep.checked;
    if (f.termMap.at(r) != *dres)
      rep.violation("morphism-substitution", sub1_str(t, pos, u),
                    f.termMap.at(r) + " != " + *dres);
  }
  return rep;
}

// Transformations between parallel premulticategory morphisms: central
// components eta_A with eta_B[1, f(t)] = g(t)<1, eta_{A_1}..eta_{A_n}>.
struct PremultTransformation {
  const PremultMorphism* src = nullptr;  // f
  const PremultMorphism* dst = nullptr;  // g
  std::map<std::string, std::string> components;
};

inline Report validate_premult_transformation(
    const PremultTransformation& tr) {
  Report rep;
  const PremultMorphism& f = *tr.src;
  const PremultMorphism& g = *tr.dst;
  if (f.src != g.src || f.dst != g.dst)
    throw ShapeError("premult transformation: morphisms are not parallel");
  const Premulticat& s = *f.src;
  const Premulticat& d = *f.dst;
  TermIndex didx(d.table);
  for (const auto& o : s.table.objects) {
    if (!tr.components.count(o))
      throw ShapeError("premult transformation: missing component at '" + o +
                       "'");
    HomKey k{{f.objMap.at(o)}, g.objMap.at(o)};
    if (!d.table.has_term(k, tr.components.at(o)))
      throw ShapeError("premult transformation: component at '" + o +
                       "' is not tabled in " + k.str());
    CentralityResult c = is_central(d, tr.components.at(o));
    ++rep.checked;
    if (!c.central)
      rep.violation("component-centrality", o, c.witness);
  }
  for (const auto& [k, terms] : s.table.homs) {
    std::vector<std::string> etas;
    for (const auto& a : k.ctx) etas.push_back(tr.components.at(a));
    const std::string& eta_b = tr.components.at(k.tgt);
    for (const auto& t : terms) {
      const std::string* lhs = d.subst1(eta_b, 1, f.termMap.at(t));
      const std::string* rhs =
          try_isub(d, didx, g.termMap.at(t), 1, etas);
      if (!lhs || !rhs) {
        ++rep.skipped;
        rep.gap("transformation", t, "a required substitution is untabled");
        continue;
      }
      ++rep.checked;
      if (*lhs != *rhs)
        rep.violation("transformation", t, *lhs + " != " + *rhs);
    }
  }
  return rep;
}

inline PremultTransformation compose_premult_transformations(
    const PremultTransformation& eps, const PremultTransformation& eta) {
  if (eta.dst != eps.src)
    throw ShapeError("compose: transformations are not composable");
  PremultTransformation out;
  out.src = eta.src;
  out.dst = eps.dst;
  const Premulticat& d = *eta.src->dst;
  for (const auto& [o, comp] : eta.components) {
    const std::string* r = d.subst1(eps.components.at(o), 1, comp);
    if (!r)
      throw CoverageError("compose: substitution " +
                          sub1_str(eps.components.at(o), 1, comp) +
                          " is untabled");
    out.components[o] = *r;
  }
  return out;
}

}  // namespace multiarity

#endif
