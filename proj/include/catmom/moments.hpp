#pragma once

// Generalized Motzkin numbers mu_n(h, k).
//
// Canonical convention: mu_0 = 1, mu_1 = h, and mu_n(1, 1) are the Motzkin
// numbers. The generating function is
//   mu(t) = (1 - h t - sqrt((1 - h t)^2 - 4 k t^2)) / (2 k t^2),
// which is also the weighted count of Motzkin paths of length n with east
// steps weighted h, north-east steps 1 and south-east steps k.
//
// Several independent routes are provided; they agree exactly, and the path
// enumeration serves as ground truth for small n.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "catmom/exact.hpp"

namespace catmom {

struct MomentRequest {
  ExactScalar h;
  ExactScalar k;  // must be nonzero
  std::size_t n_max = 0;
};

/// Sign convention for the reversion-derived closed forms. `standard` is the
/// canonical mu(h, k); `negated_h` evaluates the same expression with h
/// replaced by -h, which is how the Lagrange-inversion trinomial sum reads
/// when derived from the reversion of u / (1 - h u + k u^2).
enum class MomentSign { standard, negated_h };

/// mu_0..mu_{n_max} by expanding the algebraic generating function.
std::vector<ExactScalar> mu_gf_series(const MomentRequest& req);

/// Smallest continued-fraction depth accepted for n_max coefficients.
std::size_t mu_cfrac_min_depth(std::size_t n_max);

/// mu_0..mu_{n_max} from the J-fraction 1/(1 - h t - k t^2/(1 - h t - ...))
/// cut after `depth` partial numerators k t^2. Throws std::invalid_argument
/// naming the required depth if depth < mu_cfrac_min_depth(n_max).
std::vector<ExactScalar> mu_cfrac(const MomentRequest& req, std::size_t depth);

/// Closed form from the binomial expansion of the square root:
///   mu_n = -1/(2k) sum_j C(1/2, n+2-j) C(n+2-j, j) (-2h)^(n+2-2j) (h^2-4k)^j
/// with j up to (n+1)/2 for odd n and (n+2)/2 for even n; mu_0 = 1.
ExactScalar mu_closed(std::size_t n, const ExactScalar& h, const ExactScalar& k);

/// mu_0..mu_{n_max} from the holonomic recurrence
///   (n + 2) mu_n = h (2n + 1) mu_{n-1} - (h^2 - 4k)(n - 1) mu_{n-2}.
std::vector<ExactScalar> mu_recur(const MomentRequest& req);

/// Trinomial sum from Lagrange inversion:
///   sum_{p=1}^{floor((n+2)/2)} n! / (p! (n-2p+2)! (p-1)!) h^(n-2p+2) k^(p-1).
ExactScalar mu_lagrange(std::size_t n, const ExactScalar& h, const ExactScalar& k,
                        MomentSign sign = MomentSign::standard);

/// The same sum regrouped by parity of n into multinomial coefficients A_j.
ExactScalar mu_lagrange_multinomial(std::size_t n, const ExactScalar& h, const ExactScalar& k);

/// Default bound for exhaustive path enumeration.
inline constexpr std::size_t kPathBound = 18;

enum class Step : char { east = 'H', north_east = 'U', south_east = 'D' };

struct MotzkinPath {
  std::vector<Step> steps;

  std::size_t east_count() const;
  std::size_t south_east_count() const;
  /// Never below the axis and ends at height 0.
  bool is_valid() const;
  /// "UDH"-style encoding.
  std::string to_string() const;
  /// Weight monomial such as "h^2*k"; "1" for the empty path.
  std::string weight_monomial() const;
  ExactScalar weight(const ExactScalar& h, const ExactScalar& k) const;
};

/// Number of Motzkin paths of length n with exactly c south-east steps, for
/// c = 0..n/2, by exhaustive enumeration.
std::vector<std::uint64_t> motzkin_census(std::size_t n, std::size_t bound = kPathBound);

/// All Motzkin paths of length n, grouped by weight monomial (more east
/// steps first), then ordered lexicographically with U < D < H.
std::vector<MotzkinPath> enumerate_paths(std::size_t n, std::size_t bound = kPathBound);

/// Sum of path weights h^#east k^#south_east over all Motzkin paths of
/// length n. Throws std::out_of_range past `bound`.
ExactScalar mu_paths(std::size_t n, const ExactScalar& h, const ExactScalar& k,
                     std::size_t bound = kPathBound);

/// C_m = C(2m + 1, m) / (2m + 1).
ExactScalar catalan(std::size_t m);

/// mu_n as a polynomial in (h, k), recovered by exact interpolation of
/// mu_recur over an integer grid. coeffs[a][c] multiplies h^a k^c.
struct MomentPolynomial {
  std::size_t n = 0;
  std::vector<std::vector<ExactScalar>> coeffs;

  ExactScalar coeff(std::size_t a, std::size_t c) const;
  std::string to_string() const;
};

MomentPolynomial mu_symbolic(std::size_t n);

}  // namespace catmom
