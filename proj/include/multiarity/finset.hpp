#ifndef MULTIARITY_FINSET_HPP
#define MULTIARITY_FINSET_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "multiarity/errors.hpp"

namespace multiarity {

// A finite set of interned string tokens. Iteration order is the stored
// order and is deterministic; elements are pairwise distinct.
struct FinSet {
  std::vector<std::string> elements;

  FinSet() = default;
  explicit FinSet(std::vector<std::string> elems) : elements(std::move(elems)) {
    for (std::size_t i = 0; i < elements.size(); ++i)
      for (std::size_t j = i + 1; j < elements.size(); ++j)
        if (elements[i] == elements[j])
          throw ShapeError("FinSet: duplicate element '" + elements[i] + "'");
  }

  std::size_t size() const { return elements.size(); }

  bool contains(const std::string& e) const {
    return std::find(elements.begin(), elements.end(), e) != elements.end();
  }

  // Position of an element in the stored order; shape error if absent.
  std::size_t index_of(const std::string& e) const {
    auto it = std::find(elements.begin(), elements.end(), e);
    if (it == elements.end())
      throw ShapeError("FinSet: element '" + e + "' not present");
    return static_cast<std::size_t>(it - elements.begin());
  }

  bool operator==(const FinSet& o) const { return elements == o.elements; }
  bool operator!=(const FinSet& o) const { return !(*this == o); }
};

// A total function between finite sets, stored as an explicit table.
struct FinMap {
  FinSet dom;
  FinSet cod;
  std::map<std::string, std::string> table;

  FinMap() = default;
  FinMap(FinSet d, FinSet c, std::map<std::string, std::string> t)
      : dom(std::move(d)), cod(std::move(c)), table(std::move(t)) {
    for (const auto& e : dom.elements) {
      auto it = table.find(e);
      if (it == table.end())
        throw ShapeError("FinMap: not total, missing '" + e + "'");
      if (!cod.contains(it->second))
        throw ShapeError("FinMap: image '" + it->second +
                         "' outside codomain");
    }
    if (table.size() != dom.elements.size())
      throw ShapeError("FinMap: table mentions elements outside the domain");
  }

  const std::string& operator()(const std::string& e) const {
    auto it = table.find(e);
    if (it == table.end())
      throw ShapeError("FinMap: applied outside domain ('" + e + "')");
    return it->second;
  }

  bool operator==(const FinMap& o) const {
    return dom == o.dom && cod == o.cod && table == o.table;
  }
  bool operator!=(const FinMap& o) const { return !(*this == o); }
};

// A cocone: an apex with legs into it (all legs share the apex as codomain).
struct Cocone {
  FinSet apex;
  std::vector<FinMap> legs;

  Cocone() = default;
  Cocone(FinSet a, std::vector<FinMap> ls)
      : apex(std::move(a)), legs(std::move(ls)) {
    for (const auto& l : legs)
      if (l.cod != apex) throw ShapeError("Cocone: leg codomain is not the apex");
  }
};

inline FinMap identity_map(const FinSet& s) {
  std::map<std::string, std::string> t;
  for (const auto& e : s.elements) t[e] = e;
  return FinMap(s, s, std::move(t));
}

// g after f.
inline FinMap compose(const FinMap& g, const FinMap& f) {
  if (f.cod != g.dom) throw ShapeError("compose: codomain/domain mismatch");
  std::map<std::string, std::string> t;
  for (const auto& e : f.dom.elements) t[e] = g(f(e));
  return FinMap(f.dom, g.cod, std::move(t));
}

inline bool is_injective(const FinMap& f) {
  std::vector<std::string> seen;
  for (const auto& e : f.dom.elements) {
    const auto& v = f(e);
    if (std::find(seen.begin(), seen.end(), v) != seen.end()) return false;
    seen.push_back(v);
  }
  return true;
}

inline bool is_surjective(const FinMap& f) {
  for (const auto& c : f.cod.elements) {
    bool hit = false;
    for (const auto& e : f.dom.elements)
      if (f(e) == c) { hit = true; break; }
    if (!hit) return false;
  }
  return true;
}

inline bool is_bijective(const FinMap& f) {
  return is_injective(f) && is_surjective(f);
}

inline FinMap inverse(const FinMap& f) {
  if (!is_bijective(f)) throw ShapeError("inverse: map is not a bijection");
  std::map<std::string, std::string> t;
  for (const auto& e : f.dom.elements) t[f(e)] = e;
  return FinMap(f.cod, f.dom, std::move(t));
}

// Tuple token for product elements: ("a","b") -> "(a,b)"; empty -> "()".
inline std::string tuple_name(const std::vector<std::string>& parts) {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ",";
    out += parts[i];
  }
  out += ")";
  return out;
}

// Tagged-union token for coproduct elements: summand i, token e -> "i:e".
inline std::string tag_name(std::size_t i, const std::string& e) {
  return std::to_string(i) + ":" + e;
}

// Coproduct (disjoint union) with tagged copies; injections in input order.
inline std::pair<FinSet, std::vector<FinMap>> coproduct(
    const std::vector<FinSet>& sets) {
  std::vector<std::string> elems;
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (const auto& e : sets[i].elements) elems.push_back(tag_name(i, e));
  FinSet apex(elems);
  std::vector<FinMap> injections;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    std::map<std::string, std::string> t;
    for (const auto& e : sets[i].elements) t[e] = tag_name(i, e);
    injections.emplace_back(sets[i], apex, std::move(t));
  }
  return {apex, injections};
}

// All index tuples over the given sizes, in lexicographic order with the
// last coordinate varying fastest.
inline std::vector<std::vector<std::size_t>> index_tuples(
    const std::vector<std::size_t>& sizes) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur(sizes.size(), 0);
  while (true) {
    out.push_back(cur);
    std::size_t k = sizes.size();
    while (k > 0) {
      --k;
      if (++cur[k] < sizes[k]) break;
      cur[k] = 0;
      if (k == 0) return out;
    }
    if (sizes.empty()) return out;
  }
}

// Cartesian product with n-ary tuple tokens; projections in input order.
inline std::pair<FinSet, std::vector<FinMap>> product(
    const std::vector<FinSet>& sets) {
  std::vector<std::size_t> sizes;
  for (const auto& s : sets) sizes.push_back(s.size());
  for (auto sz : sizes)
    if (sz == 0) {
      FinSet empty;
      std::vector<FinMap> projections;
      for (const auto& s : sets)
        projections.emplace_back(empty, s, std::map<std::string, std::string>{});
      return {empty, projections};
    }
  std::vector<std::string> elems;
  std::vector<std::map<std::string, std::string>> proj_tables(sets.size());
  for (const auto& idx : index_tuples(sizes)) {
    std::vector<std::string> parts;
    for (std::size_t i = 0; i < sets.size(); ++i)
      parts.push_back(sets[i].elements[idx[i]]);
    std::string name = tuple_name(parts);
    elems.push_back(name);
    for (std::size_t i = 0; i < sets.size(); ++i)
      proj_tables[i][name] = parts[i];
  }
  FinSet apex(elems);
  std::vector<FinMap> projections;
  for (std::size_t i = 0; i < sets.size(); ++i)
    projections.emplace_back(apex, sets[i], std::move(proj_tables[i]));
  return {apex, projections};
}

// The unique map into a product induced by component maps.
inline FinMap tupling(const FinSet& dom, const FinSet& prod_apex,
                      const std::vector<FinMap>& components) {
  std::map<std::string, std::string> t;
  for (const auto& e : dom.elements) {
    std::vector<std::string> parts;
    for (const auto& c : components) {
      if (c.dom != dom) throw ShapeError("tupling: component domain mismatch");
      parts.push_back(c(e));
    }
    t[e] = tuple_name(parts);
  }
  return FinMap(dom, prod_apex, std::move(t));
}

// Product of maps f_i : A_i -> B_i, as a map between the canonical products.
inline FinMap product_map(const std::vector<FinMap>& fs) {
  std::vector<FinSet> doms, cods;
  for (const auto& f : fs) {
    doms.push_back(f.dom);
    cods.push_back(f.cod);
  }
  FinSet dom_apex = product(doms).first;
  FinSet cod_apex = product(cods).first;
  std::vector<std::size_t> sizes;
  for (const auto& d : doms) sizes.push_back(d.size());
  std::map<std::string, std::string> t;
  if (dom_apex.size() > 0) {
    for (const auto& idx : index_tuples(sizes)) {
      std::vector<std::string> dparts, cparts;
      for (std::size_t i = 0; i < fs.size(); ++i) {
        dparts.push_back(doms[i].elements[idx[i]]);
        cparts.push_back(fs[i](dparts.back()));
      }
      t[tuple_name(dparts)] = tuple_name(cparts);
    }
  }
  return FinMap(dom_apex, cod_apex, std::move(t));
}

namespace detail {

// Union-find with path compression over indices 0..n-1.
struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void merge(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    // Keep the least index as the class representative.
    if (a == b) return;
    if (a < b) parent[b] = a; else parent[a] = b;
  }
};

// Quotient a set by the equivalence generated by the given pairs. Each
// class is named by its least element in the stored order.
inline std::pair<FinSet, FinMap> quotient(
    const FinSet& base,
    const std::vector<std::pair<std::string, std::string>>& pairs) {
  UnionFind uf(base.size());
  for (const auto& [a, b] : pairs) uf.merge(base.index_of(a), base.index_of(b));
  std::vector<std::string> classes;
  std::map<std::string, std::string> table;
  for (std::size_t i = 0; i < base.size(); ++i) {
    std::size_t r = uf.find(i);
    const std::string& rep = base.elements[r];
    if (r == i) classes.push_back(rep);
    table[base.elements[i]] = rep;
  }
  FinSet q(classes);
  return {q, FinMap(base, q, std::move(table))};
}

}  // namespace detail

// Coequalizer of a parallel pair: the quotient of cod by f(x) ~ g(x).
inline std::pair<FinSet, FinMap> coequalizer(const FinMap& f, const FinMap& g) {
  if (f.dom != g.dom || f.cod != g.cod)
    throw ShapeError("coequalizer: maps are not a parallel pair");
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& x : f.dom.elements) pairs.emplace_back(f(x), g(x));
  return detail::quotient(f.cod, pairs);
}

// Wide pushout of legs a_i : A0 -> B_i (n >= 1): the quotient of the tagged
// disjoint union of the B_i by a_i(x) ~ a_j(x) for all x and all i, j.
// Returned legs are the composites injection-then-quotient.
inline Cocone wide_pushout(const std::vector<FinMap>& legs) {
  if (legs.empty())
    throw ShapeError("wide_pushout: at least one leg is required");
  const FinSet& a0 = legs[0].dom;
  for (const auto& l : legs)
    if (l.dom != a0) throw ShapeError("wide_pushout: legs do not share a domain");
  std::vector<FinSet> cods;
  for (const auto& l : legs) cods.push_back(l.cod);
  auto [disjoint, injections] = coproduct(cods);
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& x : a0.elements)
    for (std::size_t i = 1; i < legs.size(); ++i)
      pairs.emplace_back(injections[0](legs[0](x)), injections[i](legs[i](x)));
  auto [apex, q] = detail::quotient(disjoint, pairs);
  std::vector<FinMap> cocone_legs;
  for (std::size_t i = 0; i < legs.size(); ++i)
    cocone_legs.push_back(compose(q, injections[i]));
  return Cocone(apex, cocone_legs);
}

// The unique map out of a universal cocone (as produced by wide_pushout)
// into another cocone over the same diagram. The target legs must agree on
// every identification forced by the pushout; otherwise NotACoconeError.
inline FinMap mediating_map(const Cocone& pushout, const Cocone& target) {
  if (pushout.legs.size() != target.legs.size())
    throw ShapeError("mediating_map: cocones have different numbers of legs");
  std::map<std::string, std::string> t;
  for (std::size_t i = 0; i < pushout.legs.size(); ++i) {
    if (pushout.legs[i].dom != target.legs[i].dom)
      throw ShapeError("mediating_map: leg " + std::to_string(i) +
                       " domain mismatch");
    for (const auto& e : pushout.legs[i].dom.elements) {
      const std::string& cls = pushout.legs[i](e);
      const std::string& val = target.legs[i](e);
      auto it = t.find(cls);
      if (it == t.end())
        t[cls] = val;
      else if (it->second != val)
        throw NotACoconeError(
            "mediating_map: target legs disagree on identified elements ('" +
            cls + "': '" + it->second + "' vs '" + val + "')");
    }
  }
  for (const auto& c : pushout.apex.elements)
    if (!t.count(c))
      throw ShapeError("mediating_map: pushout legs are not jointly surjective");
  return FinMap(pushout.apex, target.apex, std::move(t));
}

}  // namespace multiarity

#endif
