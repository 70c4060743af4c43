#ifndef MULTIARITY_PREMULTICAT_LEMMAS_HPP
#define MULTIARITY_PREMULTICAT_LEMMAS_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "multiarity/premulticat.hpp"

// Property suites for the equations derivable from the premulticategory
// axioms (plus centrality side conditions). On a law-clean structure these
// must all pass; a failure signals an implementation bug, not bad input.

namespace multiarity {

namespace detail {

inline std::map<std::string, std::vector<std::string>> terms_by_target(
    const MultiHomTable& t) {
  std::map<std::string, std::vector<std::string>> out;
  for (const auto& [k, terms] : t.homs)
    for (const auto& x : terms) out[k.tgt].push_back(x);
  return out;
}

// Enumerate tuples choosing one term per listed object (terms of any
// context targeting that object); stops when fn returns false.
inline bool choose_terms(
    const std::map<std::string, std::vector<std::string>>& by_tgt,
    const std::vector<std::string>& objs, std::size_t i,
    std::vector<std::string>& acc,
    const std::function<bool(const std::vector<std::string>&)>& fn) {
  if (i == objs.size()) return fn(acc);
  auto it = by_tgt.find(objs[i]);
  if (it == by_tgt.end()) return true;
  for (const auto& t : it->second) {
    acc.push_back(t);
    bool go = choose_terms(by_tgt, objs, i + 1, acc, fn);
    acc.pop_back();
    if (!go) return false;
  }
  return true;
}

inline int ctx_sum(const TermIndex& idx, const std::vector<std::string>& us) {
  int s = 0;
  for (const auto& u : us) s += static_cast<int>(idx.at(u).ctx.size());
  return s;
}

}  // namespace detail

// Splitting: plugging a block of arguments in one pass equals plugging a
// prefix first and the rest afterwards (at its shifted position), for
// every split point.
inline Report check_splitting(const Premulticat& p, int max_instances = -1) {
  Report rep;
  TermIndex idx(p.table);
  auto by_tgt = detail::terms_by_target(p.table);
  auto capped = [&]() {
    return max_instances > 0 && rep.checked + rep.skipped >= static_cast<long>(max_instances);
  };
  for (const auto& [tk, terms] : p.table.homs) {
    int n0 = static_cast<int>(tk.ctx.size());
    for (const auto& t : terms)
      for (int start = 1; start <= n0; ++start)
        for (int m = 1; m <= n0 - start + 1; ++m) {
          std::vector<std::string> objs(tk.ctx.begin() + (start - 1),
                                        tk.ctx.begin() + (start - 1) + m);
          std::vector<std::string> acc;
          detail::choose_terms(
              by_tgt, objs, 0, acc,
              [&](const std::vector<std::string>& us) {
                const std::string* lhs = try_isub(p, idx, t, start, us);
                if (!lhs) { ++rep.skipped; return !capped(); }
                for (int j = 0; j <= m; ++j) {
                  std::vector<std::string> pre(us.begin(), us.begin() + j);
                  std::vector<std::string> post(us.begin() + j, us.end());
                  const std::string* r1 = try_isub(p, idx, t, start, pre);
                  const std::string* r2 =
                      r1 ? try_isub(p, idx, *r1,
                                    start + detail::ctx_sum(idx, pre), post)
                         : nullptr;
                  if (!r2) { ++rep.skipped; continue; }
                  ++rep.checked;
                  if (*lhs != *r2)
                    rep.violation("splitting",
                                  instance_str(t, us, "<", ">") + " at j=" +
                                      std::to_string(j),
                                  *lhs + " != " + *r2);
                }
                return !capped();
              });
          if (capped()) return rep;
        }
  }
  return rep;
}

// Nested substitution distributes over blocks: substituting into the part
// of a context contributed by u equals substituting into u first.
inline Report check_isub_assoc(const Premulticat& p, int max_instances = -1) {
  Report rep;
  TermIndex idx(p.table);
  auto by_tgt = detail::terms_by_target(p.table);
  auto capped = [&]() {
    return max_instances > 0 && rep.checked + rep.skipped >= static_cast<long>(max_instances);
  };
  for (const auto& e : p.sub1) {
    const auto& [t, pos, u] = e.first;
    const std::string& r = e.second;
    const auto& uctx = idx.at(u).ctx;
    int d = static_cast<int>(uctx.size());
    for (int s = 1; s <= d; ++s)
      for (int k = 1; k <= d - s + 1; ++k) {
        std::vector<std::string> objs(uctx.begin() + (s - 1),
                                      uctx.begin() + (s - 1) + k);
        std::vector<std::string> acc;
        detail::choose_terms(
            by_tgt, objs, 0, acc,
            [&](const std::vector<std::string>& vs) {
              const std::string* lhs =
                  try_isub(p, idx, r, pos + s - 1, vs);
              const std::string* inner = try_isub(p, idx, u, s, vs);
              const std::string* rhs =
                  inner ? p.subst1(t, pos, *inner) : nullptr;
              if (!lhs || !rhs) { ++rep.skipped; return !capped(); }
              ++rep.checked;
              if (*lhs != *rhs)
                rep.violation("isub-assoc",
                              sub1_str(t, pos, u) + " then " +
                                  instance_str("", vs, "<", ">"),
                              *lhs + " != " + *rhs);
              return !capped();
            });
        if (capped()) return rep;
      }
  }
  return rep;
}

// Premulticategory morphisms commute with iterated substitution.
inline Report check_isub_pres(const PremultMorphism& f,
                              int max_instances = -1) {
  Report rep;
  const Premulticat& s = *f.src;
  const Premulticat& d = *f.dst;
  TermIndex sidx(s.table), didx(d.table);
  auto by_tgt = detail::terms_by_target(s.table);
  auto capped = [&]() {
    return max_instances > 0 && rep.checked + rep.skipped >= static_cast<long>(max_instances);
  };
  for (const auto& [tk, terms] : s.table.homs) {
    int n0 = static_cast<int>(tk.ctx.size());
    for (const auto& t : terms)
      for (int start = 1; start <= n0; ++start)
        for (int m = 1; m <= n0 - start + 1; ++m) {
          std::vector<std::string> objs(tk.ctx.begin() + (start - 1),
                                        tk.ctx.begin() + (start - 1) + m);
          std::vector<std::string> acc;
          detail::choose_terms(
              by_tgt, objs, 0, acc,
              [&](const std::vector<std::string>& us) {
                const std::string* val = try_isub(s, sidx, t, start, us);
                if (!val) { ++rep.skipped; return !capped(); }
                std::vector<std::string> fus;
                for (const auto& u : us) fus.push_back(f.termMap.at(u));
                const std::string* rhs =
                    try_isub(d, didx, f.termMap.at(t), start, fus);
                if (!rhs) { ++rep.skipped; return !capped(); }
                ++rep.checked;
                if (f.termMap.at(*val) != *rhs)
                  rep.violation("isub-pres", instance_str(t, us, "<", ">"),
                                f.termMap.at(*val) + " != " + *rhs);
                return !capped();
              });
          if (capped()) return rep;
        }
  }
  return rep;
}

// Exchange of two disjoint argument blocks when one side is central.
// mode: which block must consist of central terms for the instance to be
// in scope; "first-singleton" additionally restricts the first block to a
// single argument.
enum class ExchangeMode { FirstSingleton, FirstBlock, SecondBlock };

inline Report check_block_exchange(const Premulticat& p, ExchangeMode mode,
                                   int max_instances = -1) {
  Report rep;
  TermIndex idx(p.table);
  auto by_tgt = detail::terms_by_target(p.table);
  auto cent = centrality_report(p);
  auto central = [&](const std::vector<std::string>& us) {
    for (const auto& u : us)
      if (!cent.at(u).central) return false;
    return true;
  };
  auto capped = [&]() {
    return max_instances > 0 && rep.checked + rep.skipped >= static_cast<long>(max_instances);
  };
  for (const auto& [tk, terms] : p.table.homs) {
    int n0 = static_cast<int>(tk.ctx.size());
    for (const auto& t : terms)
      for (int a = 1; a <= n0; ++a)
        for (int j = 1; j <= n0 - a; ++j) {
          if (mode == ExchangeMode::FirstSingleton && j != 1) continue;
          for (int b = a + j; b <= n0; ++b)
            for (int m = 1; m <= n0 - b + 1; ++m) {
              std::vector<std::string> objs1(tk.ctx.begin() + (a - 1),
                                             tk.ctx.begin() + (a - 1) + j);
              std::vector<std::string> objs2(tk.ctx.begin() + (b - 1),
                                             tk.ctx.begin() + (b - 1) + m);
              std::vector<std::string> acc1;
              detail::choose_terms(
                  by_tgt, objs1, 0, acc1,
                  [&](const std::vector<std::string>& us1) {
                    if (mode != ExchangeMode::SecondBlock && !central(us1))
                      return true;
                    std::vector<std::string> acc2;
                    detail::choose_terms(
                        by_tgt, objs2, 0, acc2,
                        [&](const std::vector<std::string>& us2) {
                          if (mode == ExchangeMode::SecondBlock &&
                              !central(us2))
                            return true;
                          // First block first; second block shifts.
                          int shift = detail::ctx_sum(idx, us1) - j;
                          const std::string* r1 =
                              try_isub(p, idx, t, a, us1);
                          const std::string* lhs =
                              r1 ? try_isub(p, idx, *r1, b + shift, us2)
                                 : nullptr;
                          // Second block first; first is unshifted.
                          const std::string* r2 =
                              try_isub(p, idx, t, b, us2);
                          const std::string* rhs =
                              r2 ? try_isub(p, idx, *r2, a, us1) : nullptr;
                          if (!lhs || !rhs) {
                            ++rep.skipped;
                            return !capped();
                          }
                          ++rep.checked;
                          if (*lhs != *rhs)
                            rep.violation(
                                "block-exchange",
                                instance_str(t, us1, "<", ">") + " / " +
                                    instance_str("", us2, "<", ">"),
                                *lhs + " != " + *rhs);
                          return !capped();
                        });
                    return !capped();
                  });
              if (capped()) return rep;
            }
        }
  }
  return rep;
}

inline Report check_un_cent(const Premulticat& p, int max_instances = -1) {
  return check_block_exchange(p, ExchangeMode::FirstSingleton, max_instances);
}
inline Report check_cent_left(const Premulticat& p, int max_instances = -1) {
  return check_block_exchange(p, ExchangeMode::FirstBlock, max_instances);
}
inline Report check_cent_right(const Premulticat& p, int max_instances = -1) {
  return check_block_exchange(p, ExchangeMode::SecondBlock, max_instances);
}

// Simultaneous-substitution associativity
//   t<a, u_1<v_1.>,...,u_n<v_n.>> = t<a, u_.><a, v_..>
// under centrality side conditions: every column central (the
// multicategory case), or — when `freyd` — all but at most one column.
inline Report check_simultaneous_assoc(const Premulticat& p, bool freyd,
                                       int max_instances = -1) {
  Report rep;
  TermIndex idx(p.table);
  auto by_tgt = detail::terms_by_target(p.table);
  auto cent = centrality_report(p);
  auto capped = [&]() {
    return max_instances > 0 && rep.checked + rep.skipped >= static_cast<long>(max_instances);
  };

  for (const auto& [tk, terms] : p.table.homs) {
    int n0 = static_cast<int>(tk.ctx.size());
    for (const auto& t : terms)
      for (int a = 1; a <= n0; ++a)
        for (int n = 1; n <= n0 - a + 1; ++n) {
          std::vector<std::string> objs(tk.ctx.begin() + (a - 1),
                                        tk.ctx.begin() + (a - 1) + n);
          std::vector<std::string> acc;
          detail::choose_terms(
              by_tgt, objs, 0, acc,
              [&](const std::vector<std::string>& us) {
                // Choose a full cover v_i. for each u_i's context, one
                // column at a time (recursively).
                std::vector<std::vector<std::string>> vss(us.size());
                std::function<bool(std::size_t)> cols =
                    [&](std::size_t i) -> bool {
                  if (i == us.size()) {
                    int bad = 0;
                    for (std::size_t c = 0; c < us.size(); ++c) {
                      bool col_central = cent.at(us[c]).central;
                      for (const auto& v : vss[c])
                        if (!cent.at(v).central) col_central = false;
                      if (!col_central) ++bad;
                    }
                    if (bad > (freyd ? 1 : 0)) return true;
                    // Left side: substitute inside each u_i first.
                    std::vector<std::string> ws;
                    bool ok = true;
                    for (std::size_t c = 0; c < us.size(); ++c) {
                      const std::string* w =
                          try_isub(p, idx, us[c], 1, vss[c]);
                      if (!w) { ok = false; break; }
                      ws.push_back(*w);
                    }
                    const std::string* lhs =
                        ok ? try_isub(p, idx, t, a, ws) : nullptr;
                    // Right side: plug the u's, then all the v's.
                    const std::string* r = try_isub(p, idx, t, a, us);
                    std::vector<std::string> flat;
                    for (const auto& col : vss)
                      flat.insert(flat.end(), col.begin(), col.end());
                    const std::string* rhs =
                        r ? try_isub(p, idx, *r, a, flat) : nullptr;
                    if (!lhs || !rhs) { ++rep.skipped; return !capped(); }
                    ++rep.checked;
                    if (*lhs != *rhs)
                      rep.violation(
                          freyd ? "one-sided-assoc" : "central-assoc",
                          instance_str(t, us, "<", ">") + " with " +
                              std::to_string(flat.size()) + " inner terms",
                          *lhs + " != " + *rhs);
                    return !capped();
                  }
                  std::vector<std::string> acc2;
                  return detail::choose_terms(
                      by_tgt, idx.at(us[i]).ctx, 0, acc2,
                      [&](const std::vector<std::string>& vs) {
                        vss[i] = vs;
                        return cols(i + 1);
                      });
                };
                cols(0);
                return !capped();
              });
          if (capped()) return rep;
        }
  }
  return rep;
}

inline Report check_multicat_assoc(const Premulticat& p,
                                   int max_instances = -1) {
  return check_simultaneous_assoc(p, false, max_instances);
}
inline Report check_freyd_assoc(const Premulticat& p,
                                int max_instances = -1) {
  return check_simultaneous_assoc(p, true, max_instances);
}

}  // namespace multiarity

#endif
