#ifndef MULTIARITY_TABLE_HPP
#define MULTIARITY_TABLE_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "multiarity/errors.hpp"
#include "multiarity/finset.hpp"
#include "multiarity/report.hpp"

namespace multiarity {

// A hom-set index: a nonempty context of objects and a target object.
struct HomKey {
  std::vector<std::string> ctx;
  std::string tgt;

  bool operator<(const HomKey& o) const {
    if (ctx != o.ctx) return ctx < o.ctx;
    return tgt < o.tgt;
  }
  bool operator==(const HomKey& o) const {
    return ctx == o.ctx && tgt == o.tgt;
  }
  bool operator!=(const HomKey& o) const { return !(*this == o); }

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < ctx.size(); ++i) {
      if (i) s += ",";
      s += ctx[i];
    }
    s += "->" + tgt;
    return s;
  }
};

// A finite table of hom-sets indexed by (context, target) with contexts of
// length 1..maxContext. Term names are unique across the whole table so
// that operation tables can refer to terms by name alone.
struct MultiHomTable {
  std::vector<std::string> objects;
  int maxContext = 1;
  std::map<HomKey, std::vector<std::string>> homs;

  bool has_object(const std::string& o) const {
    return std::find(objects.begin(), objects.end(), o) != objects.end();
  }

  const std::vector<std::string>* find_hom(const HomKey& k) const {
    auto it = homs.find(k);
    return it == homs.end() ? nullptr : &it->second;
  }

  bool has_term(const HomKey& k, const std::string& t) const {
    const auto* h = find_hom(k);
    return h && std::find(h->begin(), h->end(), t) != h->end();
  }

  // Home hom-set of a term name; shape error if unknown.
  HomKey home(const std::string& term) const {
    for (const auto& [k, terms] : homs)
      if (std::find(terms.begin(), terms.end(), term) != terms.end()) return k;
    throw ShapeError("MultiHomTable: unknown term '" + term + "'");
  }

  // Shape validation: object references, context lengths, name uniqueness.
  void validate_shape() const {
    for (std::size_t i = 0; i < objects.size(); ++i)
      for (std::size_t j = i + 1; j < objects.size(); ++j)
        if (objects[i] == objects[j])
          throw ShapeError("MultiHomTable: duplicate object '" + objects[i] +
                           "'");
    if (maxContext < 1)
      throw ShapeError("MultiHomTable: maxContext must be positive");
    std::map<std::string, HomKey> seen;
    for (const auto& [k, terms] : homs) {
      if (k.ctx.empty() || static_cast<int>(k.ctx.size()) > maxContext)
        throw ShapeError("MultiHomTable: context length out of range in " +
                         k.str());
      for (const auto& o : k.ctx)
        if (!has_object(o))
          throw ShapeError("MultiHomTable: unknown object '" + o + "' in " +
                           k.str());
      if (!has_object(k.tgt))
        throw ShapeError("MultiHomTable: unknown target '" + k.tgt + "'");
      for (const auto& t : terms) {
        auto [it, fresh] = seen.emplace(t, k);
        if (!fresh)
          throw ShapeError("MultiHomTable: term name '" + t +
                           "' appears in both " + it->second.str() + " and " +
                           k.str());
      }
    }
  }

  bool operator==(const MultiHomTable& o) const {
    return objects == o.objects && maxContext == o.maxContext &&
           homs == o.homs;
  }
  bool operator!=(const MultiHomTable& o) const { return !(*this == o); }
};

// Cached term -> home lookup for hot law-checking loops.
struct TermIndex {
  std::map<std::string, HomKey> home;

  explicit TermIndex(const MultiHomTable& t) {
    for (const auto& [k, terms] : t.homs)
      for (const auto& term : terms) home.emplace(term, k);
  }

  const HomKey& at(const std::string& term) const {
    auto it = home.find(term);
    if (it == home.end())
      throw ShapeError("TermIndex: unknown term '" + term + "'");
    return it->second;
  }
};

// Render a substitution instance like "t[u1,u2]" for witnesses.
inline std::string instance_str(const std::string& t,
                                const std::vector<std::string>& us,
                                const char* open = "[",
                                const char* close = "]") {
  std::string s = t;
  s += open;
  for (std::size_t i = 0; i < us.size(); ++i) {
    if (i) s += ",";
    s += us[i];
  }
  s += close;
  return s;
}

// All tuples of terms (u_1..u_n) where u_i ranges over choices[i].
inline void for_each_tuple(
    const std::vector<const std::vector<std::string>*>& choices,
    const std::function<void(const std::vector<std::string>&)>& fn) {
  std::vector<std::size_t> sizes;
  for (const auto* c : choices) {
    if (!c || c->empty()) return;
    sizes.push_back(c->size());
  }
  for (const auto& idx : index_tuples(sizes)) {
    std::vector<std::string> tuple;
    tuple.reserve(choices.size());
    for (std::size_t i = 0; i < choices.size(); ++i)
      tuple.push_back((*choices[i])[idx[i]]);
    fn(tuple);
  }
}

}  // namespace multiarity

#endif
