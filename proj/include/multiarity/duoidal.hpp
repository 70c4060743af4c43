#ifndef MULTIARITY_DUOIDAL_HPP
#define MULTIARITY_DUOIDAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "multiarity/arrowcat.hpp"
#include "multiarity/report.hpp"

namespace multiarity {

// Pointwise product of squares: f x g : a x b -> a' x b'.
inline Square product_of_squares(const Square& f, const Square& g) {
  ArrowObj src = pointwise_product(f.src, g.src).first;
  ArrowObj dst = pointwise_product(f.dst, g.dst).first;
  return Square(src, dst, product_map({f.f0, g.f0}),
                product_map({f.f1, g.f1}));
}

struct DuoidalOptions {
  long max_instances = -1;  // cap on checked instances per law; -1 = no cap
  std::uint64_t seed = 0;   // selects which instances survive the cap
};

// Verifies the duoidal data of ([->,Set], [], x, I, I) on a sample pool:
// zeta = zeta', zeta and mu naturality, triviality of the unit maps, and
// the lax-monoidality squares for the identity functor (structure map mu).
inline Report check_duoidal(const std::vector<ArrowObj>& samples,
                            const DuoidalOptions& opts = {}) {
  Report rep;
  // Deterministic instance cap: instances are enumerated in a fixed order
  // and everything past the cap is recorded as skipped.
  auto keep = [&](long law_count, long index) {
    (void)index;
    return opts.max_instances < 0 || law_count < opts.max_instances;
  };
  auto name = [&](std::size_t i) { return "pool[" + std::to_string(i) + "]"; };

  ArrowObj I = unit_arrow();

  // Units: both monoidal units are I and the three duoidal unit maps are
  // identities on it.
  {
    Square l = lambda_iso(I), r = rho_iso(I), m = mu(I, I);
    if (!l.is_iso() || !r.is_iso() || !m.is_iso())
      rep.violation("duoidal-units", "I", "a unit comparison map is not iso");
    else
      ++rep.checked;
  }

  // zeta = zeta' on all quadruples.
  {
    long count = 0, idx = 0;
    for (std::size_t ia = 0; ia < samples.size(); ++ia)
      for (std::size_t ib = 0; ib < samples.size(); ++ib)
        for (std::size_t ic = 0; ic < samples.size(); ++ic)
          for (std::size_t id = 0; id < samples.size(); ++id) {
            if (!keep(count, idx++)) { ++rep.skipped; continue; }
            Square z = interchange(samples[ia], samples[ib], samples[ic],
                                   samples[id]);
            Square zp = interchange_via_projections(samples[ia], samples[ib],
                                                    samples[ic], samples[id]);
            ++count;
            ++rep.checked;
            if (z.f0 != zp.f0 || z.f1 != zp.f1)
              rep.violation("zeta-eq-zeta-prime",
                            name(ia) + "," + name(ib) + "," + name(ic) + "," +
                                name(id),
                            "colimit-side and limit-side interchange differ");
          }
  }

  // mu naturality: mu . (f [] g) = (f x g) . mu for all squares between
  // sample objects (capped).
  {
    long count = 0, idx = 0;
    for (std::size_t ia = 0; ia < samples.size() && count != opts.max_instances;
         ++ia)
      for (std::size_t ib = 0; ib < samples.size(); ++ib)
        for (std::size_t ja = 0; ja < samples.size(); ++ja)
          for (std::size_t jb = 0; jb < samples.size(); ++jb) {
            auto fs = all_squares(samples[ia], samples[ja]);
            auto gs = all_squares(samples[ib], samples[jb]);
            for (const auto& f : fs)
              for (const auto& g : gs) {
                if (!keep(count, idx++)) { ++rep.skipped; continue; }
                Square lhs = compose_squares(mu(f.dst, g.dst),
                                             funny_on_squares(f, g));
                Square rhs = compose_squares(product_of_squares(f, g),
                                             mu(f.src, g.src));
                ++count;
                ++rep.checked;
                if (lhs.f0 != rhs.f0 || lhs.f1 != rhs.f1)
                  rep.violation("mu-naturality",
                                name(ia) + "x" + name(ib) + " -> " + name(ja) +
                                    "x" + name(jb),
                                "mu.(f[]g) != (fxg).mu");
              }
          }
  }

  // zeta naturality, varying one argument at a time (capped).
  {
    long count = 0, idx = 0;
    for (std::size_t ia = 0; ia < samples.size(); ++ia)
      for (std::size_t ja = 0; ja < samples.size(); ++ja) {
        auto fs = all_squares(samples[ia], samples[ja]);
        for (const auto& f : fs)
          for (std::size_t ib = 0; ib < samples.size(); ++ib)
            for (std::size_t ic = 0; ic < samples.size(); ++ic)
              for (std::size_t id = 0; id < samples.size(); ++id) {
                if (!keep(count, idx++)) { ++rep.skipped; continue; }
                const ArrowObj &b = samples[ib], &c = samples[ic],
                               &d = samples[id];
                Square idb = identity_square(b), idc = identity_square(c),
                       idd = identity_square(d);
                Square lhs = compose_squares(
                    interchange(f.dst, b, c, d),
                    funny_on_squares(product_of_squares(f, idb),
                                     product_of_squares(idc, idd)));
                Square rhs = compose_squares(
                    product_of_squares(funny_on_squares(f, idc),
                                       funny_on_squares(idb, idd)),
                    interchange(f.src, b, c, d));
                ++count;
                ++rep.checked;
                if (lhs.f0 != rhs.f0 || lhs.f1 != rhs.f1)
                  rep.violation("zeta-naturality",
                                name(ia) + "->" + name(ja) + " at " + name(ib) +
                                    "," + name(ic) + "," + name(id),
                                "zeta.((fx1)[](1x1)) != ((f[]1)x(1[]1)).zeta");
              }
      }
  }

  // Lax monoidality of the identity functor with structure map mu:
  // unit squares and the associativity hexagon.
  {
    for (std::size_t ia = 0; ia < samples.size(); ++ia) {
      const ArrowObj& a = samples[ia];
      auto [ixa, projs_ixa] = pointwise_product(I, a);
      (void)ixa;
      Square lhs = compose_squares(projs_ixa[1], mu(I, a));
      Square unit_l = lambda_iso(a);
      ++rep.checked;
      if (lhs.f0 != unit_l.f0 || lhs.f1 != unit_l.f1)
        rep.violation("lax-unit-left", name(ia), "pi'.mu(I,a) != lambda");
      auto [axi, projs_axi] = pointwise_product(a, I);
      (void)axi;
      Square lhs_r = compose_squares(projs_axi[0], mu(a, I));
      Square unit_r = rho_iso(a);
      ++rep.checked;
      if (lhs_r.f0 != unit_r.f0 || lhs_r.f1 != unit_r.f1)
        rep.violation("lax-unit-right", name(ia), "pi.mu(a,I) != rho");
    }
    long count = 0, idx = 0;
    for (std::size_t ia = 0; ia < samples.size(); ++ia)
      for (std::size_t ib = 0; ib < samples.size(); ++ib)
        for (std::size_t ic = 0; ic < samples.size(); ++ic) {
          if (!keep(count, idx++)) { ++rep.skipped; continue; }
          const ArrowObj &a = samples[ia], &b = samples[ib], &c = samples[ic];
          // (a[]b)[]c -> ax(bxc), two ways around the hexagon.
          ArrowObj axb = pointwise_product(a, b).first;
          Square path1 = compose_squares(
              mu(axb, c),
              funny_on_squares(mu(a, b), identity_square(c)));
          // Reassociate the product (ax b)xc -> ax(bxc).
          ArrowObj bxc = pointwise_product(b, c).first;
          ArrowObj lhs_prod = pointwise_product(axb, c).first;
          ArrowObj rhs_prod = pointwise_product(a, bxc).first;
          std::map<std::string, std::string> r0, r1;
          for (const auto& x : a.level0.elements)
            for (const auto& y : b.level0.elements)
              for (const auto& z : c.level0.elements)
                r0[tuple_name({tuple_name({x, y}), z})] =
                    tuple_name({x, tuple_name({y, z})});
          for (const auto& x : a.level1.elements)
            for (const auto& y : b.level1.elements)
              for (const auto& z : c.level1.elements)
                r1[tuple_name({tuple_name({x, y}), z})] =
                    tuple_name({x, tuple_name({y, z})});
          Square alpha_prod(lhs_prod, rhs_prod,
                            FinMap(lhs_prod.level0, rhs_prod.level0,
                                   std::move(r0)),
                            FinMap(lhs_prod.level1, rhs_prod.level1,
                                   std::move(r1)));
          Square way1 = compose_squares(alpha_prod, path1);
          Square way2 = compose_squares(
              mu(a, bxc),
              compose_squares(
                  funny_on_squares(identity_square(a), mu(b, c)),
                  assoc_iso(a, b, c)));
          ++count;
          ++rep.checked;
          if (way1.f0 != way2.f0 || way1.f1 != way2.f1)
            rep.violation("lax-associativity",
                          name(ia) + "," + name(ib) + "," + name(ic),
                          "the mu associativity hexagon does not commute");
        }
  }
  return rep;
}

}  // namespace multiarity

#endif
