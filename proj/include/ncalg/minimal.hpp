#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ncalg/anick.hpp"
#include "ncalg/kostant.hpp"

namespace ncalg {

/// True iff no coordinate of x has a scalar (degree zero) part, i.e. no
/// term has m = e.
bool radical_membership(const ModuleElement& x);

/// (b_k a_k)^p and a_{k+1} b_k^p.
Word braid_chain(unsigned k, std::uint32_t p);
Word removed_chain(unsigned k, std::uint32_t p);

/// True iff every letter index of w is below m.
bool within(const Word& w, unsigned m);

struct ReducedChains {
  std::vector<Word> t1_prime;
  std::vector<Word> t2_prime;
};

/// T'1 = T1 without (b_k a_k)^p for j <= k <= m-1 and T'2 = T2 without
/// a_{k+1} b_k^p for j <= k < m-1, both over G_{jm}.
ReducedChains reduced_chain_sets(const Window& win);

/// The modified complex P'_2 -> P'_1 -> P_0 -> P_{-1} computed over the
/// window extended by one index, so that a_{k+1} b_k^p exists for every
/// k in the requested window.
class MinimalComplex {
 public:
  explicit MinimalComplex(const Window& requested);
  MinimalComplex(const MinimalComplex&) = delete;
  MinimalComplex& operator=(const MinimalComplex&) = delete;

  const Window& window() const { return requested_; }
  const Window& extended() const { return extended_; }
  AnickResolution& resolution() { return *res_; }

  /// Chain sets over the extended window.
  const std::vector<Word>& t1_prime() const { return t1_prime_; }
  const std::vector<Word>& t2_prime() const { return t2_prime_; }
  /// Restricted to letters of the requested window.
  ReducedChains requested_chains() const;

  /// Coefficient of .(b_k a_k)^p in d_2(.a_{k+1} b_k^p); a nonzero scalar.
  Scalar braid_coefficient(unsigned k);

  /// Rewrites every .(b_k a_k)^p term through
  /// .(b_k a_k)^p = .(b_k a_k)^p - c_k^{-1} d_2(.a_{k+1} b_k^p)
  /// until only T'1 chains remain.
  ModuleElement phi1(const ModuleElement& x);
  const ModuleElement& d2_prime(const Word& w);

 private:
  Window requested_;
  Window extended_;
  std::unique_ptr<AnickResolution> res_;
  std::vector<Word> t1_prime_;
  std::vector<Word> t2_prime_;
  std::map<Word, unsigned> removable_;
  std::map<unsigned, Scalar> braid_coeff_;
  std::map<Word, ModuleElement> d2_prime_;
};

struct CoefficientCheck {
  std::string name;
  unsigned k = 0;
  std::string expected;
  std::string actual;
  bool pass = false;
};

/// The coefficient identities used to build d'_2, for every k with k+1 in
/// the window (the window is extended by one index when needed):
///   nf_lemma_one   coefficient of (b_k a_k)^{p-1} in NF(b_k^{p-1} a_k^{p-1}), expected 1
///   nf_lemma_two   coefficient of (b_k a_k)^{p-1} b_k in NF(b_{k+1} a_k^{p-1}), expected 1
///   d2_ab_braid    coefficient of .(b_k a_k)^p in d_2(.a_{k+1} b_k^p), expected -1
///   d2_ba_braid    coefficient of .(b_k a_k)^p in d_2(.b_{k+1} a_k^p), expected -1
///   d2_ab_zero     coefficient of .a_{k+1} b_{k+1} in d_2(.a_{k+1} b_k^p), expected 0
///   d2_ba_zero     coefficient of .a_{k+1} b_{k+1} in d_2(.b_{k+1} a_k^p), expected 0
///   substitution   d_2(.a_{k+1} b_k^p) + .(b_k a_k)^p lies in Rad(P_1)
///   lemma_zero     coefficient of e.u in d_2(.w) for deg u = deg w, w < u; expected 0
std::vector<CoefficientCheck> coefficient_lemma_checks(const Window& win);

struct MinimalityReport {
  bool small_d0 = true;
  bool small_d1 = true;
  bool small_d2 = true;
  bool complex_d1_d2 = true;
  bool exact_p1_prime = true;
  std::size_t degrees_checked = 0;
  std::vector<std::string> failures;
  /// Ext^i generator counts per degree, i = 0..3, over the requested window.
  std::map<int, std::map<Degree, std::size_t>> ext_dims;

  bool pass() const { return small_d0 && small_d1 && small_d2 && complex_d1_d2 && exact_p1_prime; }
};

MinimalityReport minimality_report(MinimalComplex& mc, std::uint64_t deg_bound);

}  // namespace ncalg
