#include "holochern/selftest.hpp"

#include <random>
#include <string>

#include "holochern/cech.hpp"
#include "holochern/fiber_integration.hpp"
#include "holochern/simplicial.hpp"

namespace holochern {

namespace {

int inversion_parity(const std::vector<int>& mu, const std::vector<int>& nu) {
  std::vector<int> perm = mu;
  perm.insert(perm.end(), nu.begin(), nu.end());
  int inv = 0;
  for (std::size_t a = 0; a < perm.size(); ++a) {
    for (std::size_t b = a + 1; b < perm.size(); ++b) inv += perm[a] > perm[b];
  }
  return inv % 2 == 0 ? 1 : -1;
}

}  // namespace

CheckReport check_ez_aw(int max_dim) {
  CheckReport r;
  r.name = "EZ/AW";
  for (int n = 0; n <= max_dim; ++n) {
    for (int m = 0; m <= max_dim; ++m) {
      for (const auto& x : all_generators(n)) {
        for (const auto& y : all_generators(m)) {
          ++r.checked;
          Chain<TensorGenerator> t;
          t.add({x, y}, 1);
          Chain<ProductGenerator> ez = ez_map(t);
          const std::string at = x.to_string() + " (x) " + y.to_string();
          if (boundary(ez) != ez_map(boundary(t))) r.fail("EZ is not a chain map at " + at);
          if (aw_map(ez) != t) r.fail("AW EZ != id at " + at);
          for (const auto& [p, k] : ez) {
            Chain<ProductGenerator> single;
            single.add(p, 1);
            if (boundary(aw_map(single)) != aw_map(boundary(single))) r.fail("AW is not a chain map at " + p.to_string());
          }
        }
      }
    }
  }
  return r;
}

CheckReport check_shuffle_signs(int max_total) {
  CheckReport r;
  r.name = "shuffle signs";
  for (int p = 0; p <= max_total; ++p) {
    for (int q = 0; p + q <= max_total; ++q) {
      auto all = shuffles(p, q);
      if (static_cast<long>(all.size()) != binomial(p + q, p)) {
        r.fail("wrong shuffle count for (" + std::to_string(p) + "," + std::to_string(q) + ")");
      }
      for (const auto& s : all) {
        ++r.checked;
        if (s.sign != inversion_parity(s.mu, s.nu)) {
          r.fail("sign mismatch for a (" + std::to_string(p) + "," + std::to_string(q) + ")-shuffle");
        }
      }
    }
  }
  return r;
}

CheckReport check_bijections(int max_q, int max_k) {
  CheckReport r;
  r.name = "bijection";
  for (int q = 0; q <= max_q; ++q) {
    for (int k = 0; k <= max_k; ++k) {
      CheckReport one = verify_bijection(q, k);
      if (static_cast<long>(step_positions(k, q).size()) != binomial(q + k, k)) {
        one.fail("|J_k| != C(q+k,k) at q=" + std::to_string(q) + " k=" + std::to_string(k));
      }
      r.merge(one);
    }
  }
  return r;
}

CheckReport check_integration(int max_k, int max_q, std::uint64_t seed) {
  CheckReport r;
  r.name = "integration identities";
  std::mt19937 rng(static_cast<std::mt19937::result_type>(seed));
  std::vector<ChartPtr> cs;
  for (int i = 0; i < 5; ++i) cs.push_back(make_chart("P" + std::to_string(i), {}));
  Cover base = Cover::complete(cs);
  FormalComplex cx = FormalComplex::random(rng, 3, 4, true);
  for (int k = 0; k <= max_k; ++k) {
    Cover lifted = base.lifted(k);
    for (int deg = k; deg <= k + max_q; ++deg) {
      r.merge(verify_integration_identities(cx, lifted, random_formal_cochain(cx, deg, rng()), k, max_q));
    }
  }
  return r;
}

std::vector<CheckReport> run_selftest(std::uint64_t seed) {
  return {check_bijections(5, 3), check_integration(3, 4, seed), check_ez_aw(3), check_shuffle_signs(6)};
}

}  // namespace holochern
