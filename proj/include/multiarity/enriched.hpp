#ifndef MULTIARITY_ENRICHED_HPP
#define MULTIARITY_ENRICHED_HPP

#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "multiarity/effectful.hpp"

namespace multiarity {

// A two-level multicategory: pure terms (level 0) with simultaneous
// substitution, effectful terms (level 1) with a family of substitutions
// esub_j keeping exactly one effectful argument at slot j, and a level
// map `bar` from pure to effectful terms.
struct EnrichedMulticat {
  std::vector<std::string> objects;
  MultiHomTable homs0, homs1;
  std::map<std::string, std::string> bar;   // homs0 term -> homs1 term
  std::map<std::string, std::string> ids0;  // object -> homs0 term
  std::map<std::pair<std::string, std::vector<std::string>>, std::string>
      psub;
  // (j, t, args): t and args[j-1] are level-1 terms, the rest level 0.
  std::map<std::tuple<int, std::string, std::vector<std::string>>,
           std::string>
      esub;

  const std::string* psubst(const std::string& t,
                            const std::vector<std::string>& us) const {
    auto it = psub.find({t, us});
    return it == psub.end() ? nullptr : &it->second;
  }

  const std::string* esubst(int j, const std::string& t,
                            const std::vector<std::string>& us) const {
    auto it = esub.find({j, t, us});
    return it == esub.end() ? nullptr : &it->second;
  }

  bool operator==(const EnrichedMulticat& o) const {
    return objects == o.objects && homs0 == o.homs0 && homs1 == o.homs1 &&
           bar == o.bar && ids0 == o.ids0 && psub == o.psub && esub == o.esub;
  }
};

inline std::string esub_str(int j, const std::string& t,
                            const std::vector<std::string>& us) {
  return t + "{" + std::to_string(j) + "|" + [&] {
    std::string s;
    for (std::size_t i = 0; i < us.size(); ++i)
      s += (i ? "," : "") + us[i];
    return s;
  }() + "}";
}

inline void validate_enriched_shape(const EnrichedMulticat& d) {
  if (d.homs0.objects != d.objects || d.homs1.objects != d.objects)
    throw ShapeError("enriched: level tables disagree on objects");
  if (d.homs0.maxContext != d.homs1.maxContext)
    throw ShapeError("enriched: level tables disagree on maxContext");
  d.homs0.validate_shape();
  d.homs1.validate_shape();
  TermIndex i0(d.homs0), i1(d.homs1);

  for (const auto& [k, terms] : d.homs0.homs)
    for (const auto& t : terms) {
      auto it = d.bar.find(t);
      if (it == d.bar.end())
        throw ShapeError("enriched: bar undefined on '" + t + "'");
      if (!d.homs1.has_term(k, it->second))
        throw ShapeError("enriched: bar image of '" + t +
                         "' is not tabled in " + k.str() + " at level 1");
    }
  for (const auto& o : d.objects) {
    auto it = d.ids0.find(o);
    if (it == d.ids0.end())
      throw ShapeError("enriched: missing identity at '" + o + "'");
    if (!d.homs0.has_term({{o}, o}, it->second))
      throw ShapeError("enriched: identity at '" + o + "' is not tabled");
  }

  for (const auto& [key, result] : d.psub) {
    const auto& [t, us] = key;
    HomKey tk = i0.at(t);
    if (us.size() != tk.ctx.size())
      throw ShapeError("enriched: psub arity mismatch at " +
                       instance_str(t, us, "(", ")"));
    std::vector<std::string> concat;
    for (std::size_t i = 0; i < us.size(); ++i) {
      HomKey uk = i0.at(us[i]);
      if (uk.tgt != tk.ctx[i])
        throw ShapeError("enriched: psub argument " + us[i] +
                         " mis-targeted in " + instance_str(t, us, "(", ")"));
      concat.insert(concat.end(), uk.ctx.begin(), uk.ctx.end());
    }
    if (!d.homs0.has_term({concat, tk.tgt}, result))
      throw ShapeError("enriched: psub result " + result +
                       " is not tabled for " + instance_str(t, us, "(", ")"));
  }

  for (const auto& [key, result] : d.esub) {
    const auto& [j, t, us] = key;
    HomKey tk = i1.at(t);
    if (us.size() != tk.ctx.size())
      throw ShapeError("enriched: esub arity mismatch at " +
                       esub_str(j, t, us));
    if (j < 1 || j > static_cast<int>(us.size()))
      throw ShapeError("enriched: esub slot out of range at " +
                       esub_str(j, t, us));
    std::vector<std::string> concat;
    for (std::size_t i = 0; i < us.size(); ++i) {
      const TermIndex& idx = (static_cast<int>(i) == j - 1) ? i1 : i0;
      HomKey uk = idx.at(us[i]);
      if (uk.tgt != tk.ctx[i])
        throw ShapeError("enriched: esub argument " + us[i] +
                         " mis-targeted in " + esub_str(j, t, us));
      concat.insert(concat.end(), uk.ctx.begin(), uk.ctx.end());
    }
    if (!d.homs1.has_term({concat, tk.tgt}, result))
      throw ShapeError("enriched: esub result " + result +
                       " is not tabled for " + esub_str(j, t, us));
  }
}

// The eight law families of the two-level presentation, where defined:
//  1a  bar(t(u_.)) = bar(t){j | ..., bar u_j, ...}          (each j)
//  1b  the choice of barred slot is irrelevant for pure arguments
//  2a  id(u) = u          2b  bar(id){1|u} = u
//  3a  t(id_.) = t        3b  t{j | id,..., bar id_j, ...,id} = t  (each j)
//  4a  psub associativity
//  4b  esub associativity with the effectful column threaded through
inline Report validate_enriched(const EnrichedMulticat& d) {
  validate_enriched_shape(d);
  Report rep;
  TermIndex i0(d.homs0), i1(d.homs1);

  // 1a: over every psub entry and every slot.
  for (const auto& [key, r] : d.psub) {
    const auto& [t, us] = key;
    for (int j = 1; j <= static_cast<int>(us.size()); ++j) {
      std::vector<std::string> args = us;
      args[j - 1] = d.bar.at(us[j - 1]);
      const std::string* rhs = d.esubst(j, d.bar.at(t), args);
      if (!rhs) { ++rep.skipped; continue; }
      ++rep.checked;
      if (d.bar.at(r) != *rhs)
        rep.violation("coherence-a", esub_str(j, d.bar.at(t), args),
                      d.bar.at(r) + " != " + *rhs);
    }
  }

  // 1b: effectful t, all-pure argument tuples, any two barred slots.
  {
    std::map<std::string, std::vector<std::string>> by_tgt0;
    for (const auto& [k, terms] : d.homs0.homs)
      for (const auto& x : terms) by_tgt0[k.tgt].push_back(x);
    for (const auto& [tk, terms] : d.homs1.homs) {
      std::vector<const std::vector<std::string>*> choices;
      bool ok = true;
      for (const auto& b : tk.ctx) {
        auto it = by_tgt0.find(b);
        if (it == by_tgt0.end()) { ok = false; break; }
        choices.push_back(&it->second);
      }
      if (!ok) continue;
      for (const auto& t : terms)
        for_each_tuple(choices, [&](const std::vector<std::string>& us) {
          int n = static_cast<int>(us.size());
          for (int j = 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) {
              std::vector<std::string> aj = us, ak = us;
              aj[j - 1] = d.bar.at(us[j - 1]);
              ak[k - 1] = d.bar.at(us[k - 1]);
              const std::string* lhs = d.esubst(j, t, aj);
              const std::string* rhs = d.esubst(k, t, ak);
              if (!lhs || !rhs) { ++rep.skipped; continue; }
              ++rep.checked;
              if (*lhs != *rhs)
                rep.violation("coherence-b",
                              esub_str(j, t, aj) + " vs " +
                                  esub_str(k, t, ak),
                              *lhs + " != " + *rhs);
            }
        });
    }
  }

  // 2a / 2b: left unitality at both levels.
  for (const auto& [k, terms] : d.homs0.homs)
    for (const auto& u : terms) {
      const std::string& id = d.ids0.at(k.tgt);
      const std::string* r = d.psubst(id, {u});
      if (!r) { ++rep.skipped; rep.gap("left-unit-a", u, "psub untabled"); }
      else {
        ++rep.checked;
        if (*r != u)
          rep.violation("left-unit-a", instance_str(id, {u}, "(", ")"),
                        *r + " != " + u);
      }
    }
  for (const auto& [k, terms] : d.homs1.homs)
    for (const auto& u : terms) {
      const std::string& idb = d.bar.at(d.ids0.at(k.tgt));
      const std::string* r = d.esubst(1, idb, {u});
      if (!r) { ++rep.skipped; rep.gap("left-unit-b", u, "esub untabled"); }
      else {
        ++rep.checked;
        if (*r != u)
          rep.violation("left-unit-b", esub_str(1, idb, {u}),
                        *r + " != " + u);
      }
    }

  // 3a / 3b: right unitality at both levels.
  for (const auto& [k, terms] : d.homs0.homs) {
    std::vector<std::string> idv;
    for (const auto& b : k.ctx) idv.push_back(d.ids0.at(b));
    for (const auto& t : terms) {
      const std::string* r = d.psubst(t, idv);
      if (!r) { ++rep.skipped; rep.gap("right-unit-a", t, "psub untabled"); }
      else {
        ++rep.checked;
        if (*r != t)
          rep.violation("right-unit-a", instance_str(t, idv, "(", ")"),
                        *r + " != " + t);
      }
    }
  }
  for (const auto& [k, terms] : d.homs1.homs) {
    std::vector<std::string> idv;
    for (const auto& b : k.ctx) idv.push_back(d.ids0.at(b));
    for (const auto& t : terms)
      for (int j = 1; j <= static_cast<int>(k.ctx.size()); ++j) {
        std::vector<std::string> args = idv;
        args[j - 1] = d.bar.at(idv[j - 1]);
        const std::string* r = d.esubst(j, t, args);
        if (!r) {
          ++rep.skipped;
          rep.gap("right-unit-b", esub_str(j, t, args), "esub untabled");
          continue;
        }
        ++rep.checked;
        if (*r != t)
          rep.violation("right-unit-b", esub_str(j, t, args),
                        *r + " != " + t);
      }
  }

  // 4a: pure associativity over pairs of psub entries.
  {
    std::map<std::string, std::vector<const std::pair<
        const std::pair<std::string, std::vector<std::string>>,
        std::string>*>> by_outer;
    for (const auto& e : d.psub) by_outer[e.first.first].push_back(&e);
    for (const auto& e1 : d.psub) {
      const auto& [t, us] = e1.first;
      auto it = by_outer.find(e1.second);
      if (it == by_outer.end()) continue;
      for (const auto* e2 : it->second) {
        const auto& vs = e2->first.second;
        bool defined = true;
        std::vector<std::string> inner;
        std::size_t off = 0;
        for (const auto& u : us) {
          std::size_t len = i0.at(u).ctx.size();
          std::vector<std::string> block(vs.begin() + off,
                                         vs.begin() + off + len);
          off += len;
          const std::string* uv = d.psubst(u, block);
          if (!uv) { defined = false; break; }
          inner.push_back(*uv);
        }
        const std::string* rhs = defined ? d.psubst(t, inner) : nullptr;
        if (!rhs) { ++rep.skipped; continue; }
        ++rep.checked;
        if (e2->second != *rhs)
          rep.violation("associativity-a",
                        instance_str(instance_str(t, us, "(", ")"), vs, "(",
                                     ")"),
                        e2->second + " != " + *rhs);
      }
    }
  }

  // 4b: effectful associativity. For esub entries (l,t,us)->r1 and
  // (P,r1,vs)->lhs where P lands inside column l, the inner composites
  // (pure psub off-column, esub at slot m = P - offset in column l)
  // reassemble to the same result.
  {
    std::map<std::string, std::vector<const std::pair<
        const std::tuple<int, std::string, std::vector<std::string>>,
        std::string>*>> by_outer;
    for (const auto& e : d.esub)
      by_outer[std::get<1>(e.first)].push_back(&e);
    for (const auto& e1 : d.esub) {
      const auto& [l, t, us] = e1.first;
      auto it = by_outer.find(e1.second);
      if (it == by_outer.end()) continue;
      // Context lengths of the u_i (level depends on the slot).
      std::vector<std::size_t> lens;
      for (std::size_t i = 0; i < us.size(); ++i)
        lens.push_back((static_cast<int>(i) == l - 1 ? i1 : i0)
                           .at(us[i])
                           .ctx.size());
      std::size_t before = 0;
      for (int i = 0; i < l - 1; ++i) before += lens[i];
      for (const auto* e2 : it->second) {
        int P = std::get<0>(e2->first);
        if (P <= static_cast<int>(before) ||
            P > static_cast<int>(before + lens[l - 1]))
          continue;  // effectful column mismatch: not an instance of 4b
        int mslot = P - static_cast<int>(before);
        const auto& vs = std::get<2>(e2->first);
        bool defined = true;
        std::vector<std::string> inner;
        std::size_t off = 0;
        for (std::size_t i = 0; i < us.size(); ++i) {
          std::vector<std::string> block(vs.begin() + off,
                                         vs.begin() + off + lens[i]);
          off += lens[i];
          const std::string* w =
              static_cast<int>(i) == l - 1
                  ? d.esubst(mslot, us[i], block)
                  : d.psubst(us[i], block);
          if (!w) { defined = false; break; }
          inner.push_back(*w);
        }
        const std::string* rhs = defined ? d.esubst(l, t, inner) : nullptr;
        if (!rhs) { ++rep.skipped; continue; }
        ++rep.checked;
        if (e2->second != *rhs)
          rep.violation("associativity-b",
                        esub_str(l, t, us) + " then " +
                            esub_str(P, e1.second, vs),
                        e2->second + " != " + *rhs);
      }
    }
  }
  return rep;
}

// F: read an effectful multicategory off the two-level presentation.
// Pure part = level 0 with psub; effectful substitution plugs one slot by
// padding the others with identities; the inclusion is bar.
inline EffectfulMulticat enriched_to_effectful(const EnrichedMulticat& d) {
  validate_enriched_shape(d);
  EffectfulMulticat e;
  e.pure.table = d.homs0;
  e.pure.ids = d.ids0;
  e.pure.sub = d.psub;
  e.eff.table = d.homs1;
  for (const auto& o : d.objects) e.eff.ids[o] = d.bar.at(d.ids0.at(o));
  TermIndex i1(d.homs1);
  for (const auto& [key, r] : d.esub) {
    const auto& [j, t, us] = key;
    HomKey tk = i1.at(t);
    bool padded = true;
    for (std::size_t i = 0; i < us.size(); ++i) {
      if (static_cast<int>(i) == j - 1) continue;
      if (us[i] != d.ids0.at(tk.ctx[i])) { padded = false; break; }
    }
    if (padded) e.eff.sub1[{t, j, us[j - 1]}] = r;
  }
  e.J = d.bar;
  return e;
}

// G: present an effectful multicategory in two levels. psub copies the
// pure substitution; esub_j plugs the effectful argument at slot j and
// the inclusions of the pure ones elsewhere, by iterated substitution.
inline EnrichedMulticat effectful_to_enriched(const EffectfulMulticat& e) {
  EnrichedMulticat d;
  d.objects = e.pure.table.objects;
  d.homs0 = e.pure.table;
  d.homs1 = e.eff.table;
  d.bar = e.J;
  d.ids0 = e.pure.ids;
  d.psub = e.pure.sub;

  TermIndex i0(d.homs0), i1(d.homs1);
  std::map<std::string, std::vector<std::string>> by_tgt0, by_tgt1;
  for (const auto& [k, terms] : d.homs0.homs)
    for (const auto& x : terms) by_tgt0[k.tgt].push_back(x);
  for (const auto& [k, terms] : d.homs1.homs)
    for (const auto& x : terms) by_tgt1[k.tgt].push_back(x);

  for (const auto& [tk, terms] : d.homs1.homs) {
    int n = static_cast<int>(tk.ctx.size());
    for (int j = 1; j <= n; ++j) {
      // Candidate argument lists: level 1 at slot j, level 0 elsewhere.
      std::vector<const std::vector<std::string>*> choices;
      bool ok = true;
      for (int i = 1; i <= n; ++i) {
        auto& pool = (i == j) ? by_tgt1 : by_tgt0;
        auto it = pool.find(tk.ctx[i - 1]);
        if (it == pool.end()) { ok = false; break; }
        choices.push_back(&it->second);
      }
      if (!ok) continue;
      for (const auto& t : terms)
        for_each_tuple(choices, [&](const std::vector<std::string>& us) {
          std::size_t concat = 0;
          for (int i = 1; i <= n; ++i)
            concat += ((i == j) ? i1 : i0).at(us[i - 1]).ctx.size();
          if (static_cast<int>(concat) > d.homs1.maxContext) return;
          std::vector<std::string> mapped;
          for (int i = 1; i <= n; ++i)
            mapped.push_back(i == j ? us[i - 1] : d.bar.at(us[i - 1]));
          const std::string* r = try_isub(e.eff, i1, t, 1, mapped);
          if (r) d.esub[{j, t, us}] = *r;
        });
    }
  }
  return d;
}

// Exact round-trip comparison; mismatches become report entries.
inline Report roundtrip_enriched(const EnrichedMulticat& d) {
  EnrichedMulticat back = effectful_to_enriched(enriched_to_effectful(d));
  Report rep;
  ++rep.checked;
  if (!(back == d)) {
    auto diff = [&](const std::string& what, bool same) {
      if (!same) rep.violation("roundtrip", what, "tables differ");
    };
    diff("objects", back.objects == d.objects);
    diff("homs0", back.homs0 == d.homs0);
    diff("homs1", back.homs1 == d.homs1);
    diff("bar", back.bar == d.bar);
    diff("ids0", back.ids0 == d.ids0);
    diff("psub", back.psub == d.psub);
    diff("esub", back.esub == d.esub);
  }
  return rep;
}

inline Report roundtrip_effectful(const EffectfulMulticat& e) {
  EffectfulMulticat back = enriched_to_effectful(effectful_to_enriched(e));
  Report rep;
  ++rep.checked;
  if (!(back == e)) {
    auto diff = [&](const std::string& what, bool same) {
      if (!same) rep.violation("roundtrip", what, "tables differ");
    };
    diff("pure", back.pure == e.pure);
    diff("eff", back.eff == e.eff);
    diff("J", back.J == e.J);
  }
  return rep;
}

struct EnrichedMorphism {
  const EnrichedMulticat* src = nullptr;
  const EnrichedMulticat* dst = nullptr;
  std::map<std::string, std::string> objMap;
  std::map<std::string, std::string> f0, f1;

  HomKey map_key(const HomKey& k) const {
    HomKey out;
    for (const auto& o : k.ctx) out.ctx.push_back(objMap.at(o));
    out.tgt = objMap.at(k.tgt);
    return out;
  }
};

inline Report validate_enriched_morphism(const EnrichedMorphism& m) {
  const EnrichedMulticat& s = *m.src;
  const EnrichedMulticat& d = *m.dst;
  for (const auto& o : s.objects)
    if (!m.objMap.count(o) || !d.homs0.has_object(m.objMap.at(o)))
      throw ShapeError("enriched morphism: object map not into target");
  for (const auto& [k, terms] : s.homs0.homs) {
    HomKey dk = m.map_key(k);
    for (const auto& t : terms)
      if (!m.f0.count(t) || !d.homs0.has_term(dk, m.f0.at(t)))
        throw ShapeError("enriched morphism: level-0 image of '" + t +
                         "' missing or mistyped");
  }
  for (const auto& [k, terms] : s.homs1.homs) {
    HomKey dk = m.map_key(k);
    for (const auto& t : terms)
      if (!m.f1.count(t) || !d.homs1.has_term(dk, m.f1.at(t)))
        throw ShapeError("enriched morphism: level-1 image of '" + t +
                         "' missing or mistyped");
  }

  Report rep;
  // coh-eq: the level map commutes with bar.
  for (const auto& [t, bt] : s.bar) {
    ++rep.checked;
    if (m.f1.at(bt) != d.bar.at(m.f0.at(t)))
      rep.violation("coh-eq", t,
                    m.f1.at(bt) + " != " + d.bar.at(m.f0.at(t)));
  }
  // id-eq.
  for (const auto& [o, id] : s.ids0) {
    ++rep.checked;
    if (m.f0.at(id) != d.ids0.at(m.objMap.at(o)))
      rep.violation("id-eq", o,
                    m.f0.at(id) + " != " + d.ids0.at(m.objMap.at(o)));
  }
  // psub-eq.
  for (const auto& [key, r] : s.psub) {
    const auto& [t, us] = key;
    std::vector<std::string> fus;
    for (const auto& u : us) fus.push_back(m.f0.at(u));
    const std::string* dr = d.psubst(m.f0.at(t), fus);
    if (!dr) { ++rep.skipped; continue; }
    ++rep.checked;
    if (m.f0.at(r) != *dr)
      rep.violation("psub-eq", instance_str(t, us, "(", ")"),
                    m.f0.at(r) + " != " + *dr);
  }
  // esub-eq.
  for (const auto& [key, r] : s.esub) {
    const auto& [j, t, us] = key;
    std::vector<std::string> fus;
    for (std::size_t i = 0; i < us.size(); ++i)
      fus.push_back(static_cast<int>(i) == j - 1 ? m.f1.at(us[i])
                                                 : m.f0.at(us[i]));
    const std::string* dr = d.esubst(j, m.f1.at(t), fus);
    if (!dr) { ++rep.skipped; continue; }
    ++rep.checked;
    if (m.f1.at(r) != *dr)
      rep.violation("esub-eq", esub_str(j, t, us),
                    m.f1.at(r) + " != " + *dr);
  }
  return rep;
}

struct EnrichedTransformation {
  const EnrichedMorphism* src = nullptr;  // f
  const EnrichedMorphism* dst = nullptr;  // g
  std::map<std::string, std::string> components;  // A -> homs0(fA; gA)
};

// Elementwise naturality: at level 0 post-composition with the component
// matches pre-composition; at level 1 the same with the barred component
// at the relevant slot.
inline Report validate_enriched_transformation(
    const EnrichedTransformation& tr) {
  const EnrichedMorphism& f = *tr.src;
  const EnrichedMorphism& g = *tr.dst;
  if (f.src != g.src || f.dst != g.dst)
    throw ShapeError("enriched transformation: morphisms are not parallel");
  const EnrichedMulticat& s = *f.src;
  const EnrichedMulticat& d = *f.dst;
  for (const auto& o : s.objects) {
    if (!tr.components.count(o))
      throw ShapeError("enriched transformation: missing component at '" + o +
                       "'");
    HomKey k{{f.objMap.at(o)}, g.objMap.at(o)};
    if (!d.homs0.has_term(k, tr.components.at(o)))
      throw ShapeError("enriched transformation: component at '" + o +
                       "' is not tabled in " + k.str());
  }

  Report rep;
  // Level 0.
  for (const auto& [k, terms] : s.homs0.homs) {
    std::vector<std::string> etas;
    for (const auto& a : k.ctx) etas.push_back(tr.components.at(a));
    const std::string& eta_b = tr.components.at(k.tgt);
    for (const auto& t : terms) {
      const std::string* lhs = d.psubst(g.f0.at(t), etas);
      const std::string* rhs = d.psubst(eta_b, {f.f0.at(t)});
      if (!lhs || !rhs) {
        ++rep.skipped;
        rep.gap("naturality-0", t, "a required psub entry is untabled");
        continue;
      }
      ++rep.checked;
      if (*lhs != *rhs)
        rep.violation("naturality-0", t, *lhs + " != " + *rhs);
    }
  }
  // Level 1, per effectful slot.
  for (const auto& [k, terms] : s.homs1.homs) {
    const std::string& eta_b = tr.components.at(k.tgt);
    for (const auto& t : terms)
      for (int j = 1; j <= static_cast<int>(k.ctx.size()); ++j) {
        std::vector<std::string> args;
        for (std::size_t i = 0; i < k.ctx.size(); ++i) {
          const std::string& c = tr.components.at(k.ctx[i]);
          args.push_back(static_cast<int>(i) == j - 1 ? d.bar.at(c) : c);
        }
        const std::string* lhs = d.esubst(j, g.f1.at(t), args);
        const std::string* rhs =
            d.esubst(1, d.bar.at(eta_b), {f.f1.at(t)});
        if (!lhs || !rhs) {
          ++rep.skipped;
          rep.gap("naturality-1", t + " at slot " + std::to_string(j),
                  "a required esub entry is untabled");
          continue;
        }
        ++rep.checked;
        if (*lhs != *rhs)
          rep.violation("naturality-1",
                        t + " at slot " + std::to_string(j),
                        *lhs + " != " + *rhs);
      }
  }
  return rep;
}

inline EnrichedTransformation compose_enriched_transformations(
    const EnrichedTransformation& eps, const EnrichedTransformation& eta) {
  if (eta.dst != eps.src)
    throw ShapeError("compose: transformations are not composable");
  EnrichedTransformation out;
  out.src = eta.src;
  out.dst = eps.dst;
  const EnrichedMulticat& d = *eta.src->dst;
  for (const auto& [o, comp] : eta.components) {
    const std::string* r = d.psubst(eps.components.at(o), {comp});
    if (!r)
      throw CoverageError("compose: psub entry " +
                          instance_str(eps.components.at(o), {comp}, "(",
                                       ")") +
                          " is untabled");
    out.components[o] = *r;
  }
  return out;
}

// Enumerate the morphisms c -> target by exhaustive backtracking with a
// search guard, keeping only those that validate cleanly.
inline std::vector<EnrichedMorphism> enumerate_enriched_morphisms(
    const EnrichedMulticat& c, const EnrichedMulticat& target,
    std::size_t guard = 2000000) {
  std::vector<EnrichedMorphism> out;
  std::vector<std::pair<std::string, HomKey>> t0, t1;
  for (const auto& [k, ts] : c.homs0.homs)
    for (const auto& t : ts) t0.emplace_back(t, k);
  for (const auto& [k, ts] : c.homs1.homs)
    for (const auto& t : ts) t1.emplace_back(t, k);

  std::size_t visited = 0;
  auto step = [&]() {
    if (++visited > guard)
      throw CapacityError("algebra enumeration: search guard exceeded");
  };

  EnrichedMorphism m;
  m.src = &c;
  m.dst = &target;

  // Incremental constraint propagation: reject a partial assignment as
  // soon as a fully-assigned substitution entry maps to a tabled entry
  // of the target with the wrong value.
  auto psub_ok = [&](const std::string& just) {
    for (const auto& [key, r] : c.psub) {
      const auto& [t, us] = key;
      bool involves = (t == just || r == just);
      for (const auto& u : us) involves = involves || u == just;
      if (!involves || !m.f0.count(t) || !m.f0.count(r)) continue;
      std::vector<std::string> fus;
      bool all = true;
      for (const auto& u : us) {
        if (!m.f0.count(u)) { all = false; break; }
        fus.push_back(m.f0.at(u));
      }
      if (!all) continue;
      const std::string* dr = target.psubst(m.f0.at(t), fus);
      if (dr && *dr != m.f0.at(r)) return false;
    }
    return true;
  };
  auto esub_ok = [&](const std::string& just) {
    for (const auto& [key, r] : c.esub) {
      const auto& [j, t, us] = key;
      bool involves = (t == just || r == just || us[j - 1] == just);
      if (!involves || !m.f1.count(t) || !m.f1.count(r) ||
          !m.f1.count(us[j - 1]))
        continue;
      std::vector<std::string> fus;
      bool all = true;
      for (std::size_t i = 0; i < us.size(); ++i) {
        const auto& leg = (static_cast<int>(i) == j - 1) ? m.f1 : m.f0;
        if (!leg.count(us[i])) { all = false; break; }
        fus.push_back(leg.at(us[i]));
      }
      if (!all) continue;
      const std::string* dr = target.esubst(j, m.f1.at(t), fus);
      if (dr && *dr != m.f1.at(r)) return false;
    }
    return true;
  };

  std::function<void(std::size_t)> objs, lvl0, lvl1;
  lvl1 = [&](std::size_t i) {
    if (i == t1.size()) {
      Report rep = validate_enriched_morphism(m);
      if (rep.violations.empty()) out.push_back(m);
      return;
    }
    const auto& [t, k] = t1[i];
    const auto* cands = target.homs1.find_hom(m.map_key(k));
    if (!cands) return;
    for (const auto& cand : *cands) {
      step();
      m.f1[t] = cand;
      // Prune with bar coherence as soon as both sides are known.
      bool ok = true;
      for (const auto& [x, bx] : c.bar)
        if (bx == t && m.f0.count(x) &&
            target.bar.at(m.f0.at(x)) != cand) { ok = false; break; }
      if (ok && esub_ok(t)) lvl1(i + 1);
      m.f1.erase(t);
    }
  };
  lvl0 = [&](std::size_t i) {
    if (i == t0.size()) { lvl1(0); return; }
    const auto& [t, k] = t0[i];
    const auto* cands = target.homs0.find_hom(m.map_key(k));
    if (!cands) return;
    for (const auto& cand : *cands) {
      step();
      // Prune with the identity condition.
      bool is_id = false;
      for (const auto& [o, id] : c.ids0)
        if (id == t && target.ids0.at(m.objMap.at(o)) != cand) is_id = true;
      if (is_id) continue;
      m.f0[t] = cand;
      if (psub_ok(t)) lvl0(i + 1);
      m.f0.erase(t);
    }
  };
  objs = [&](std::size_t i) {
    if (i == c.objects.size()) { lvl0(0); return; }
    for (const auto& o : target.objects) {
      step();
      m.objMap[c.objects[i]] = o;
      objs(i + 1);
      m.objMap.erase(c.objects[i]);
    }
  };
  objs(0);
  return out;
}

// The hom-category of morphisms c -> target: enumerate objects (the
// algebras) and arrows (valid transformations) and verify the category
// laws on everything found.
inline Report algebra_category(const EnrichedMulticat& c,
                               const EnrichedMulticat& target,
                               std::size_t guard = 2000000) {
  Report rep;
  auto algs = enumerate_enriched_morphisms(c, target, guard);
  rep.info("algebra-count", std::to_string(algs.size()), "");

  // All valid transformations per ordered pair of algebras.
  struct Arrow {
    std::size_t src, dst;
    EnrichedTransformation tr;
  };
  std::vector<Arrow> arrows;
  for (std::size_t a = 0; a < algs.size(); ++a)
    for (std::size_t b = 0; b < algs.size(); ++b) {
      // Candidate components per object, enumerated jointly.
      std::vector<std::string> objs = c.objects;
      EnrichedTransformation tr;
      tr.src = &algs[a];
      tr.dst = &algs[b];
      std::function<void(std::size_t)> go = [&](std::size_t i) {
        if (i == objs.size()) {
          Report r = validate_enriched_transformation(tr);
          if (r.violations.empty() && r.gaps.empty())
            arrows.push_back({a, b, tr});
          return;
        }
        HomKey k{{algs[a].objMap.at(objs[i])}, algs[b].objMap.at(objs[i])};
        const auto* cands = target.homs0.find_hom(k);
        if (!cands) return;
        for (const auto& cand : *cands) {
          tr.components[objs[i]] = cand;
          go(i + 1);
          tr.components.erase(objs[i]);
        }
      };
      go(0);
    }
  rep.info("arrow-count", std::to_string(arrows.size()), "");

  // Identity transformation on each algebra, and unit laws.
  std::vector<EnrichedTransformation> idt(algs.size());
  for (std::size_t a = 0; a < algs.size(); ++a) {
    idt[a].src = &algs[a];
    idt[a].dst = &algs[a];
    for (const auto& o : c.objects)
      idt[a].components[o] = target.ids0.at(algs[a].objMap.at(o));
    Report r = validate_enriched_transformation(idt[a]);
    ++rep.checked;
    if (!r.violations.empty())
      rep.violation("identity-arrow", "algebra " + std::to_string(a),
                    r.violations[0].detail);
  }
  for (const auto& ar : arrows) {
    auto left = compose_enriched_transformations(ar.tr, idt[ar.src]);
    auto right = compose_enriched_transformations(idt[ar.dst], ar.tr);
    ++rep.checked;
    if (left.components != ar.tr.components ||
        right.components != ar.tr.components)
      rep.violation("unit-law", std::to_string(ar.src) + "->" +
                                    std::to_string(ar.dst),
                    "identity composite differs");
  }
  // Closure and associativity of composition.
  for (const auto& a1 : arrows)
    for (const auto& a2 : arrows) {
      if (a1.dst != a2.src) continue;
      auto comp = compose_enriched_transformations(a2.tr, a1.tr);
      Report r = validate_enriched_transformation(comp);
      ++rep.checked;
      if (!r.violations.empty())
        rep.violation("composition-closure",
                      std::to_string(a1.src) + "->" + std::to_string(a2.dst),
                      r.violations[0].detail);
      for (const auto& a3 : arrows) {
        if (a2.dst != a3.src) continue;
        auto l = compose_enriched_transformations(
            a3.tr, compose_enriched_transformations(a2.tr, a1.tr));
        auto rr = compose_enriched_transformations(
            compose_enriched_transformations(a3.tr, a2.tr), a1.tr);
        ++rep.checked;
        if (l.components != rr.components)
          rep.violation("associativity",
                        std::to_string(a1.src) + "->" +
                            std::to_string(a3.dst),
                        "bracketings differ");
      }
    }
  return rep;
}

}  // namespace multiarity

#endif
