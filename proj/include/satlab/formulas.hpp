#ifndef SATLAB_FORMULAS_HPP
#define SATLAB_FORMULAS_HPP

#include <algorithm>
#include <cstdint>
#include <string>

#include "count.hpp"
#include "errors.hpp"

namespace satlab {

namespace detail {

inline std::string i128_to_string(__int128 v) {
  if (v < 0)
    return "-" + Count::from_raw(static_cast<unsigned __int128>(-v)).to_string();
  return Count::from_raw(static_cast<unsigned __int128>(v)).to_string();
}

inline std::uint64_t nonneg(std::int64_t v, const char *what) {
  if (v < 0)
    throw DomainError(std::string(what) + " must be nonnegative");
  return static_cast<std::uint64_t>(v);
}

} // namespace detail

/// Minimum edge count of a K_s-saturated graph on n vertices:
/// (s-2)(n-s+2) + C(s-2, 2).
inline Count sat_edges_formula(std::int64_t n, std::int64_t s) {
  if (s < 2 || n < s)
    throw DomainError("sat_edges_formula needs n >= s >= 2 (n = " + std::to_string(n) +
                      ", s = " + std::to_string(s) + ")");
  const auto q = static_cast<std::uint64_t>(s - 2);
  return Count(q) * static_cast<std::uint64_t>(n - s + 2) + binomial(q, 2);
}

/// Minimum number of K_r in a K_s-saturated graph (large n):
/// (n-s+2) C(s-2, r-1) + C(s-2, r).
inline Count sat_cliques_formula(std::int64_t n, std::int64_t r, std::int64_t s) {
  if (r < 2 || s <= r || n < s)
    throw DomainError("sat_cliques_formula needs s > r >= 2 and n >= s (n = " +
                      std::to_string(n) + ", r = " + std::to_string(r) +
                      ", s = " + std::to_string(s) + ")");
  const auto q = static_cast<std::uint64_t>(s - 2);
  const auto rr = static_cast<std::uint64_t>(r);
  return Count(static_cast<std::uint64_t>(n - s + 2)) * binomial(q, rr - 1) + binomial(q, rr);
}

/// Exact number of k-edge matchings in S_{n,s-2}.
///
/// With q = s-2 clique vertices and n-q independent ones, a matching has j
/// edges inside the clique and k-j edges between the parts. There are
/// C(q, 2j) (2j-1)!! ways to place the clique edges, (q-2j)_{k-j} ordered
/// choices of clique endpoints for the cross edges, and C(n-q, k-j) sets of
/// independent endpoints.
inline Count matchings_in_split_exact(std::int64_t n, std::int64_t s, std::int64_t k) {
  if (s < 3 || n < s || k < 0)
    throw DomainError("matchings_in_split_exact needs n >= s >= 3 and k >= 0");
  const auto q = static_cast<std::uint64_t>(s - 2);
  const auto outside = static_cast<std::uint64_t>(n) - q;
  const auto kk = static_cast<std::uint64_t>(k);
  Count total = 0;
  Count double_factorial = 1; // (2j-1)!!
  for (std::uint64_t j = 0; j <= std::min<std::uint64_t>(kk, q / 2); ++j) {
    if (j > 0)
      double_factorial *= 2 * j - 1;
    total += binomial(q, 2 * j) * double_factorial * falling_factorial(q - 2 * j, kk - j) *
             binomial(outside, kk - j);
  }
  return total;
}

/// Dominant term of N(M_k, S_{n,s-2}): the matchings whose k edges all cross,
/// C(n-s+2, k) (s-2)_k.
inline Count matchings_in_split_leading(std::int64_t n, std::int64_t s, std::int64_t k) {
  if (k < 2 || k > s - 2 || n < s)
    throw DomainError("matchings_in_split_leading needs 2 <= k <= s-2 and n >= s");
  return binomial(static_cast<std::uint64_t>(n - s + 2), static_cast<std::uint64_t>(k)) *
         falling_factorial(static_cast<std::uint64_t>(s - 2), static_cast<std::uint64_t>(k));
}

/// Vertex counts of a degree profile where every degree is s-2 (a vertices)
/// or n-1 (b vertices) and the edge count is m.
struct DegreeProfile {
  std::int64_t low = 0;  // a
  std::int64_t high = 0; // b
};

/// Solves 2m = a(s-2) + b(n-1), n = a + b. Throws DomainError, quoting the
/// solved values, unless both are nonnegative integers.
inline DegreeProfile solve_degree_profile(std::int64_t n, std::int64_t s, std::int64_t m) {
  if (s < 3 || n < s || m < 0)
    throw DomainError("degree profile needs n >= s >= 3 and m >= 0");
  const std::int64_t den = n - s + 1;
  const std::int64_t a_num = n * n - n - 2 * m;
  const std::int64_t b_num = 2 * m + 2 * n - n * s;
  if (a_num < 0 || b_num < 0 || a_num % den != 0 || b_num % den != 0)
    throw DomainError("no degree profile for n = " + std::to_string(n) +
                      ", s = " + std::to_string(s) + ", m = " + std::to_string(m) +
                      ": a = " + std::to_string(a_num) + "/" + std::to_string(den) +
                      ", b = " + std::to_string(b_num) + "/" + std::to_string(den));
  return {a_num / den, b_num / den};
}

/// m^2 + (7-2n-2s) m + n(n-1)(s-2), i.e. twice the M_2 count of the profile
/// polynomial, evaluated for any integers.
inline __int128 m2_profile_twice(std::int64_t n, std::int64_t s, std::int64_t m) {
  const __int128 M = m, N = n, S = s;
  return M * M + (7 - 2 * N - 2 * S) * M + N * (N - 1) * (S - 2);
}

/// N(M_2, G) for a graph whose degrees are all s-2 or n-1 and which has m
/// edges: (m^2 + (7-2n-2s) m + n(n-1)(s-2)) / 2.
inline Count m2_profile_formula(std::int64_t n, std::int64_t s, std::int64_t m) {
  solve_degree_profile(n, s, m);
  const __int128 twice = m2_profile_twice(n, s, m);
  if (twice < 0 || twice % 2 != 0)
    throw DomainError("profile polynomial gives non-integral count " +
                      detail::i128_to_string(twice) + "/2");
  return Count::from_raw(static_cast<unsigned __int128>(twice / 2));
}

/// Lower bound C(tau, l) (n/tau)^l on the number of independent l-sets in an
/// n-vertex graph with C(n,2)/tau edges, kept as an exact fraction.
inline Rational indep_lower_bound(std::int64_t n, std::int64_t tau, std::int64_t l) {
  if (tau < 1 || l < 1 || n < 0)
    throw DomainError("indep_lower_bound needs tau >= 1, l >= 1, n >= 0");
  if (l > tau + 1)
    throw DomainError("indep_lower_bound needs l <= tau + 1 (l = " + std::to_string(l) +
                      ", tau = " + std::to_string(tau) + ")");
  const auto ul = static_cast<std::uint64_t>(l);
  return {binomial(static_cast<std::uint64_t>(tau), ul) *
              power(detail::nonneg(n, "n"), ul),
          power(static_cast<std::uint64_t>(tau), ul)};
}

/// Edge count C(n,2)/tau required by the independent-set bound; throws when
/// it is not an integer.
inline std::int64_t indep_bound_edge_count(std::int64_t n, std::int64_t tau) {
  if (tau < 1 || n < 0)
    throw DomainError("needs tau >= 1 and n >= 0");
  const std::int64_t pairs = n * (n - 1) / 2;
  if (pairs % tau != 0)
    throw DomainError("C(" + std::to_string(n) + ", 2) = " + std::to_string(pairs) +
                      " is not divisible by tau = " + std::to_string(tau));
  return pairs / tau;
}

} // namespace satlab

#endif
