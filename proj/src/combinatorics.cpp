#include "monodisk/combinatorics.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

#include "monodisk/error.hpp"

namespace monodisk {

namespace {

constexpr std::size_t kMemberLimit = 1'000'000;
constexpr int kBruteForceLimit = 24;
constexpr int kHeldOut = 20;

void require_n(int n) {
  if (n < 3 || n % 2 == 0) throw Error(ErrorCode::InvalidN, "n must be an odd integer >= 3");
}

BigCount binomial(std::uint64_t top, std::uint64_t r) {
  BigCount out = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    out *= top - r + i;
    out /= i;
  }
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t x) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d * d <= x; ++d) {
    if (x % d) continue;
    out.push_back(d);
    if (d * d != x) out.push_back(x / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int moebius(std::uint64_t x) {
  int sign = 1;
  for (std::uint64_t p = 2; p * p <= x; ++p) {
    if (x % p) continue;
    x /= p;
    if (x % p == 0) return 0;
    sign = -sign;
  }
  return x > 1 ? -sign : sign;
}

std::string rational_text(const Rational& r) {
  const BigCount num = boost::multiprecision::numerator(r);
  const BigCount den = boost::multiprecision::denominator(r);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

Rational poly_at(const std::vector<Rational>& c, const Rational& x) {
  Rational out = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) out = out * x + *it;
  return out;
}

void trim(std::vector<Rational>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

// Interpolating polynomial through (xs, ys), monomial coefficients.
std::vector<Rational> interpolate(const std::vector<Rational>& xs, std::vector<Rational> ys) {
  const std::size_t m = xs.size();
  for (std::size_t level = 1; level < m; ++level)
    for (std::size_t i = m - 1; i >= level; --i) ys[i] = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - level]);
  std::vector<Rational> poly{ys[m - 1]};
  for (std::size_t j = m - 1; j-- > 0;) {
    std::vector<Rational> next(poly.size() + 1, Rational(0));
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= poly[i] * xs[j];
    }
    next[0] += ys[j];
    poly = std::move(next);
  }
  return poly;
}

std::string poly_text(const std::vector<Rational>& c) {
  std::string out;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    Rational mag = c[i] < 0 ? Rational(-c[i]) : c[i];
    if (out.empty()) out += c[i] < 0 ? "-" : "";
    else out += c[i] < 0 ? " - " : " + ";
    const bool unit = mag == 1 && i > 0;
    if (!unit) out += rational_text(mag);
    if (i > 0) out += unit ? "k" : " k";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

Rational coefficient(const std::vector<Rational>& c, std::size_t i) {
  return i < c.size() ? c[i] : Rational(0);
}

const std::vector<Rational>* term_for(const QuasiPolynomial& qp, std::uint64_t d) {
  if (d == 1) return &qp.base;
  for (const auto& t : qp.periodic)
    if (t.divisor == d) return &t.coefficients;
  return nullptr;
}

}  // namespace

std::uint64_t totient(std::uint64_t d) {
  if (d == 0) throw Error(ErrorCode::InvalidN, "totient needs d >= 1");
  std::uint64_t out = d;
  for (std::uint64_t p = 2; p * p <= d; ++p) {
    if (d % p) continue;
    while (d % p == 0) d /= p;
    out -= out / p;
  }
  if (d > 1) out -= out / d;
  return out;
}

BigCount necklace(std::uint64_t a, std::uint64_t b) {
  if (a == 0 && b == 0) throw Error(ErrorCode::BothZero, "necklace needs at least one bead");
  if (a == 0 || b == 0) return 1;
  BigCount sum = 0;
  for (std::uint64_t d : divisors(std::gcd(a, b)))
    sum += BigCount(totient(d)) * binomial(b / d + a / d - 1, a / d - 1);
  return sum / a;
}

BigCount necklace_bruteforce(int a, int b) {
  if (a < 0 || b < 0) throw Error(ErrorCode::InvalidN, "bead counts must be non-negative");
  if (a == 0 && b == 0) throw Error(ErrorCode::BothZero, "necklace needs at least one bead");
  const int len = a + b;
  if (len > kBruteForceLimit)
    throw Error(ErrorCode::TooLarge, "brute force is limited to " + std::to_string(kBruteForceLimit) + " beads");
  if (a == 0 || b == 0) return 1;
  const std::uint32_t full = (1u << len) - 1;
  std::unordered_set<std::uint32_t> seen;
  // Walk every len-bit mask with exactly a set bits in increasing order.
  for (std::uint32_t mask = (1u << a) - 1; mask <= full;) {
    std::uint32_t least = mask;
    std::uint32_t r = mask;
    for (int s = 1; s < len; ++s) {
      r = ((r >> 1) | (r << (len - 1))) & full;
      least = std::min(least, r);
    }
    seen.insert(least);
    const std::uint32_t low = mask & (~mask + 1);
    const std::uint32_t ripple = mask + low;
    if (ripple > full || ripple == 0) break;
    mask = ripple | (((mask ^ ripple) >> 2) / low);
  }
  return seen.size();
}

BigCount necklace_sum(int n, std::uint64_t k) {
  require_n(n);
  if (k < 1) throw Error(ErrorCode::InvalidK, "k must be >= 1");
  BigCount sum = 0;
  for (std::uint64_t i = 0; i <= 2u * n; ++i) sum += necklace(i, (2u * n - i) * k);
  return 2 * sum;
}

BigCount count_C(int n, std::uint64_t k) {
  require_n(n);
  if (k < 1) throw Error(ErrorCode::InvalidK, "k must be >= 1");
  return k == 1 ? BigCount(2) : necklace_sum(n, k);
}

BigCount count_Ctilde(int n, int k) {
  require_n(n);
  if (k < 1) throw Error(ErrorCode::InvalidK, "k must be >= 1");
  return 4;
}

BigCount count_D(int n, GrooveClass groove) {
  require_n(n);
  if (groove == GrooveClass::Critical && n != 3)
    throw Error(ErrorCode::CriticalOnlyForN3, "the critical member exists only for n = 3");
  return 2;
}

std::vector<std::string> canonical_words(int longs, int shorts) {
  const int len = longs + shorts;
  std::vector<std::string> out;
  if (len == 0) return out;
  // Prenecklace recursion restricted to the given content; a complete
  // prenecklace is a necklace when its period divides the length.
  std::string word(len + 1, 'L');
  int remaining[2] = {longs, shorts};
  auto grow = [&](auto& self, int t, int p) -> void {
    if (t > len) {
      if (len % p == 0) out.push_back(word.substr(1));
      return;
    }
    for (char c : {'L', 'S'}) {
      if (c < word[t - p] || remaining[c == 'S'] == 0) continue;
      word[t] = c;
      --remaining[c == 'S'];
      self(self, t + 1, c == word[t - p] ? p : t);
      ++remaining[c == 'S'];
    }
  };
  // Position 0 is a sentinel below every letter.
  word[0] = 'A';
  grow(grow, 1, 1);
  return out;
}

std::vector<Member> enumerate_members(int n, int k) {
  require_n(n);
  if (k < 1) throw Error(ErrorCode::InvalidK, "k must be >= 1");
  std::vector<Member> out;
  if (k == 1) {
    // Every flip reproduces the same tiling.
    const EdgeWord w{std::string(2 * n, 'S'), n, 1};
    return {{w, Chirality::A}, {w, Chirality::B}};
  }
  if (necklace_sum(n, k) > kMemberLimit)
    throw Error(ErrorCode::TooMany, "C(" + std::to_string(n) + ", " + std::to_string(k) + ") has more than " +
                                        std::to_string(kMemberLimit) + " members");
  for (int i = 0; i <= 2 * n; ++i) {
    for (auto& w : canonical_words(i, (2 * n - i) * k)) {
      const EdgeWord word{std::move(w), n, k};
      out.push_back({word, Chirality::A});
      out.push_back({word, Chirality::B});
    }
  }
  return out;
}

Rational evaluate(const QuasiPolynomial& qp, std::uint64_t k) {
  const Rational x(k);
  Rational out = poly_at(qp.base, x);
  for (const auto& t : qp.periodic)
    if (k % t.divisor == 0) out += poly_at(t.coefficients, x);
  return out;
}

BigCount evaluate_count(const QuasiPolynomial& qp, std::uint64_t k) {
  const Rational v = evaluate(qp, k);
  if (boost::multiprecision::denominator(v) != 1)
    throw Error(ErrorCode::NonInteger, "value at k = " + std::to_string(k) + " is " + rational_text(v));
  return boost::multiprecision::numerator(v);
}

std::string to_string(const QuasiPolynomial& qp) {
  std::string out = poly_text(qp.base);
  for (const auto& t : qp.periodic)
    out += " + [" + poly_text(t.coefficients) + "]_{" + std::to_string(t.divisor) + "|k}";
  return out;
}

QuasiPolynomial quasipoly_published(int n) {
  auto q = [](long num, long den) { return Rational(num, den); };
  if (n == 3) {
    return {{q(57, 5), q(61, 6), q(67, 12), q(5, 6), q(1, 60)}, {{2, {q(1, 1)}}, {5, {q(8, 5)}}}};
  }
  if (n == 5) {
    return {{q(1682, 126), q(10921, 315), q(3124847, 45360), q(245269, 8640), q(0, 1), q(973, 180),
             q(11527, 30240), q(11, 1680), q(1, 181440)},
            {{2, {q(3, 2), q(1, 4)}},
             {3, {q(18, 9), q(10, 9), q(2, 81)}},
             {4, {q(1, 1)}},
             {7, {q(12, 7)}},
             {9, {q(4, 3)}}}};
  }
  throw Error(ErrorCode::UnsupportedN, "a published closed form exists only for n = 3 and n = 5");
}

QuasipolyFit derive_quasipoly(int n) {
  require_n(n);
  if (n > 7) throw Error(ErrorCode::TooLarge, "fitting is limited to n <= 7");
  QuasipolyFit fit;
  fit.n = n;
  std::uint64_t period = 1;
  for (std::uint64_t i = 2; i <= 2u * n; ++i) period = std::lcm(period, i);
  fit.period = period;
  const int degree = 2 * (n - 1);
  fit.points_per_class = 2 * n + 1;

  // The count depends on k through gcd(k, period) only; within one class it
  // is a polynomial of degree at most 2(n - 1).
  const auto classes = divisors(period);
  std::map<std::uint64_t, std::vector<Rational>> by_class;
  for (std::uint64_t g : classes) {
    std::vector<Rational> xs, ys;
    for (std::uint64_t m = 1; static_cast<int>(xs.size()) < fit.points_per_class; ++m) {
      if (std::gcd(m, period / g) != 1 || g * m < 2) continue;
      xs.emplace_back(g * m);
      ys.emplace_back(necklace_sum(n, g * m));
    }
    const std::vector<Rational> fx(xs.begin(), xs.begin() + degree + 1);
    const std::vector<Rational> fy(ys.begin(), ys.begin() + degree + 1);
    auto poly = interpolate(fx, fy);
    for (std::size_t i = degree + 1; i < xs.size(); ++i)
      if (poly_at(poly, xs[i]) != ys[i])
        throw Error(ErrorCode::FitInconsistent,
                    "class gcd(k, " + std::to_string(period) + ") = " + std::to_string(g) +
                        " is not polynomial of degree " + std::to_string(degree));
    by_class[g] = std::move(poly);
  }

  // Inclusion-exclusion over the divisor lattice gives the term that
  // switches on exactly when d | k.
  for (std::uint64_t g : classes) {
    std::vector<Rational> term;
    for (std::uint64_t d : divisors(g)) {
      const int mu = moebius(g / d);
      if (mu == 0) continue;
      const auto& p = by_class[d];
      if (term.size() < p.size()) term.resize(p.size(), Rational(0));
      for (std::size_t i = 0; i < p.size(); ++i) term[i] += mu * p[i];
    }
    trim(term);
    if (g == 1) fit.fitted.base = std::move(term);
    else if (!term.empty()) fit.fitted.periodic.push_back({g, std::move(term)});
  }

  for (int i = 0; i < kHeldOut; ++i) {
    const std::uint64_t k = 1000 + 37 * static_cast<std::uint64_t>(i);
    if (evaluate(fit.fitted, k) != Rational(necklace_sum(n, k)))
      throw Error(ErrorCode::FitInconsistent, "fitted form misses the count at k = " + std::to_string(k));
    ++fit.held_out_checked;
  }

  if (n == 3 || n == 5) {
    fit.has_printed = true;
    const auto printed = quasipoly_published(n);
    std::set<std::uint64_t> divisors_seen{1};
    for (const auto& t : printed.periodic) divisors_seen.insert(t.divisor);
    for (const auto& t : fit.fitted.periodic) divisors_seen.insert(t.divisor);
    static const std::vector<Rational> none;
    for (std::uint64_t d : divisors_seen) {
      const auto* a = term_for(printed, d);
      const auto* b = term_for(fit.fitted, d);
      const auto& pa = a ? *a : none;
      const auto& pb = b ? *b : none;
      for (std::size_t i = 0; i < std::max(pa.size(), pb.size()); ++i)
        if (coefficient(pa, i) != coefficient(pb, i))
          fit.differences.push_back({d, static_cast<int>(i), coefficient(pa, i), coefficient(pb, i)});
    }
    fit.printed_check_limit = 100;
    for (std::uint64_t k = 2; k <= fit.printed_check_limit; ++k)
      if (evaluate(printed, k) != Rational(count_C(n, k))) fit.printed_mismatches.push_back(k);
    fit.printed_matches = fit.differences.empty() && fit.printed_mismatches.empty();
  }
  return fit;
}

}  // namespace monodisk
