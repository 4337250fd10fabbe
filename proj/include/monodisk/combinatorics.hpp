#pragma once

// Exact counting of C-family members: necklace numbers, the member count,
// member listing by canonical edge word, and the quasi-polynomial closed
// forms in k for fixed n.

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "monodisk/families.hpp"

namespace monodisk {

using BigCount = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

std::uint64_t totient(std::uint64_t d);

/// Binary necklaces with a beads of one colour and b of the other, up to
/// rotation. N(a, 0) = N(0, b) = 1. Throws BothZero.
BigCount necklace(std::uint64_t a, std::uint64_t b);

/// Same count by listing every arrangement. Throws BothZero, TooLarge (a + b > 24).
BigCount necklace_bruteforce(int a, int b);

/// Twice the necklace sum over i = 0..2n of N(i, (2n - i) k), without the
/// k = 1 special case. Throws InvalidN, InvalidK.
BigCount necklace_sum(int n, std::uint64_t k);

/// Number of C-family members for given n, k (2 when k = 1).
BigCount count_C(int n, std::uint64_t k);
BigCount count_Ctilde(int n, int k);

enum class GrooveClass { Interior, Critical };
/// Throws InvalidN, CriticalOnlyForN3.
BigCount count_D(int n, GrooveClass groove);

struct Member {
  EdgeWord word;
  Chirality chirality = Chirality::A;
};

/// Lexicographically least rotations ('L' < 'S') of all words with the given
/// letter counts, in increasing order.
std::vector<std::string> canonical_words(int longs, int shorts);

/// Every member of C(n, k) as a canonical word plus a chirality flag, grouped
/// by number of long letters. Throws InvalidN, InvalidK, TooMany (> 1e6).
std::vector<Member> enumerate_members(int n, int k);

/// Polynomial in k plus terms that switch on when d | k. Coefficients are
/// stored lowest power first.
struct PeriodicTerm {
  std::uint64_t divisor = 1;
  std::vector<Rational> coefficients;
};

struct QuasiPolynomial {
  std::vector<Rational> base;
  std::vector<PeriodicTerm> periodic;
};

Rational evaluate(const QuasiPolynomial& qp, std::uint64_t k);
/// Throws NonInteger when the value at k is not an integer.
BigCount evaluate_count(const QuasiPolynomial& qp, std::uint64_t k);

/// Human-readable form, e.g. "1/60 k^4 + ... + [1]_{2|k}".
std::string to_string(const QuasiPolynomial& qp);

/// The published closed forms for n = 3 and n = 5, coefficients as printed.
/// Throws UnsupportedN.
QuasiPolynomial quasipoly_published(int n);

struct TermDifference {
  std::uint64_t divisor = 1;  // 1 for the base polynomial
  int power = 0;
  Rational printed;
  Rational fitted;
};

struct QuasipolyFit {
  int n = 0;
  QuasiPolynomial fitted;
  std::uint64_t period = 1;  // lcm(1..2n)
  int points_per_class = 0;
  int held_out_checked = 0;
  bool has_printed = false;
  bool printed_matches = false;
  std::vector<TermDifference> differences;
  /// k in 2..printed_check_limit where the printed form disagrees with the count.
  std::vector<std::uint64_t> printed_mismatches;
  std::uint64_t printed_check_limit = 0;
};

/// Fits the closed form from exact counts, one polynomial per gcd(k, lcm(1..2n))
/// class, and compares it with the published one where available.
/// Throws InvalidN, TooLarge (n > 7), FitInconsistent.
QuasipolyFit derive_quasipoly(int n);

}  // namespace monodisk
