#pragma once

// The named suites and selection by name.

#include "qcoherent/suites.hpp"
#include "qcoherent/suites/algebra.hpp"
#include "qcoherent/suites/contraction.hpp"
#include "qcoherent/suites/geometry.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

namespace qcs::suites {

namespace detail {

using Builder = std::function<std::vector<Case>(const SuiteConfig&)>;

/// Module builders emit several suites at once; keep only `name`.
inline Builder only(std::string name, std::vector<Case> (*module)(const SuiteConfig&)) {
  return [name, module](const SuiteConfig& cfg) {
    std::vector<Case> all = module(cfg), out;
    std::copy_if(all.begin(), all.end(), std::back_inserter(out), [&name](const Case& c) { return c.suite == name; });
    return out;
  };
}

inline std::vector<Case> haar_positivity_default(const SuiteConfig& cfg) { return haar_positivity_cases(cfg); }

}  // namespace detail

inline const std::vector<SuiteInfo>& registry() {
  using detail::only;
  static const std::vector<SuiteInfo> r = {
      {"q-numbers", "qcalc", "symmetric q-numbers, factorials and Gaussian binomials", only("q-numbers", qcalc_cases)},
      {"q-shifted", "qcalc", "q-shifted factorials, finite against infinite products", only("q-shifted", qcalc_cases)},
      {"hypergeometric", "qcalc", "q-binomial theorem and 1phi1 evaluations", only("hypergeometric", qcalc_cases)},
      {"jackson", "qcalc", "Jackson q-derivative and q-integral", only("jackson", qcalc_cases)},
      {"sum-identities", "qcalc", "finite q-sum identities for 0 <= n <= m <= 12", sum_identity_cases},
      {"norm-series", "qcalc", "coherent-state norm as a 1phi1 product at numeric q", norm_series_cases},
      {"slq2-relations", "ncalg", "Gauss generators and the SL_q(2) relations", slq2_cases},
      {"star-identities", "ncalg", "star structure on x, y, E and zeta", star_identity_cases},
      {"haar", "haar", "Haar functional: closed form, q-integral, invariance", haar_cases},
      {"haar-positivity", "haar", "Haar functional on f* f at numeric q", detail::haar_positivity_default},
      {"hopf-structure", "duality", "U_q[su(2)] relations, coproduct, counit, antipode", hopf_cases},
      {"duality", "duality", "pairing with the function algebra", pairing_cases},
      {"properties", "ncalg", "associativity, star involution, normalization, Haar positivity", property_cases},
      {"rep-relations", "csrep", "spin-j representation matrices", only("rep-relations", csrep_cases)},
      {"t-matrix", "csrep", "universal T-matrix in spin j", only("t-matrix", csrep_cases)},
      {"cs-norm", "csrep", "coherent-state unit norm", only("cs-norm", csrep_cases)},
      {"resolution", "csrep", "resolution of unity, entrywise", only("resolution", csrep_cases)},
      {"overlap", "csrep", "overlap of two coherent states", only("overlap", csrep_cases)},
      {"operator-actions", "csrep", "generators, annihilator and Gamma on the coherent state", only("operator-actions", csrep_cases)},
      {"bargmann", "csrep", "polynomial realization: basis, actions, hermiticity", only("bargmann", csrep_cases)},
      {"sphere-relations", "geom", "quantum sphere relations, star map, expectations", only("sphere-relations", geom_cases)},
      {"inf-char", "geom", "infinitesimal characterization of the sphere", only("inf-char", geom_cases)},
      {"omega-calculus", "geom", "three-dimensional calculus commutation rules", only("omega-calculus", geom_cases)},
      {"complex-calculus", "geom", "complex calculus on the sphere", only("complex-calculus", geom_cases)},
      {"q-limit", "geom", "q -> 1 regressions against classical formulas", qlimit_cases},
      {"h1-hopf", "contraction", "U_q[h1] and H_q(1) Hopf *-structures and duality", h1_hopf_cases},
      {"h1-tmatrix", "contraction", "T-matrix of H_q(1) and T* T = 1", h1_tmatrix_cases},
      {"h1-coherent", "contraction", "Fock coherent state: norm and resolution", h1_coherent_cases},
      {"contraction-rate", "contraction", "spin-j contraction residual under j doubling", contraction_rate_cases},
  };
  return r;
}

inline const SuiteInfo* find_suite(const std::string& name) {
  for (const auto& s : registry())
    if (s.name == name) return &s;
  return nullptr;
}

/// Cases for the selected suites; "all" expands to the registry.
inline std::vector<Case> collect(const SuiteConfig& cfg) {
  cfg.validate();
  std::vector<std::string> names;
  for (const auto& n : cfg.suites) {
    if (n == "all") {
      for (const auto& s : registry()) names.push_back(s.name);
    } else if (!find_suite(n)) {
      throw UsageError("unknown suite: " + n);
    } else {
      names.push_back(n);
    }
  }
  std::set<std::string> seen;
  std::vector<Case> out;
  for (const auto& n : names) {
    if (!seen.insert(n).second) continue;
    auto cs = find_suite(n)->build(cfg);
    out.insert(out.end(), std::make_move_iterator(cs.begin()), std::make_move_iterator(cs.end()));
  }
  return out;
}

}  // namespace qcs::suites
