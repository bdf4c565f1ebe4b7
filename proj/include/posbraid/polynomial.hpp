#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "posbraid/errors.hpp"
#include "posbraid/rational.hpp"

namespace posbraid {

/// Integer polynomial, coefficients lowest degree first, no trailing zeros.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coefficients) : c_(std::move(coefficients)) { trim(); }
  IntPolynomial(std::initializer_list<long> coefficients) {
    for (long v : coefficients) c_.emplace_back(v);
    trim();
  }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Integer>& coefficients() const { return c_; }
  const Integer& operator[](std::size_t i) const { return c_[i]; }

  Integer operator()(const Integer& x) const {
    Integer acc = 0;
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
    return acc;
  }

  /// Divides out the largest power of t, then makes the leading coefficient positive.
  IntPolynomial normalized() const {
    std::size_t low = 0;
    while (low < c_.size() && c_[low] == 0) ++low;
    std::vector<Integer> c(c_.begin() + static_cast<std::ptrdiff_t>(low), c_.end());
    if (!c.empty() && c.back() < 0) {
      for (auto& v : c) v = -v;
    }
    return IntPolynomial(std::move(c));
  }

  /// Coefficients equal their reverse up to one overall sign.
  bool is_reciprocal_up_to_sign() const {
    if (c_.empty()) return true;
    bool same = true, negated = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      same = same && c_[k] == c_[c_.size() - 1 - k];
      negated = negated && c_[k] == -c_[c_.size() - 1 - k];
    }
    return same || negated;
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (k) s += ", ";
      s += c_[k].get_str();
    }
    return s + "]";
  }

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Integer> c_;
};

namespace detail {

using QPoly = std::vector<Rational>;  // lowest first, trimmed

inline void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline QPoly to_q(const IntPolynomial& p) {
  QPoly q;
  for (const auto& c : p.coefficients()) q.emplace_back(c);
  return q;
}

inline QPoly derivative(const QPoly& p) {
  QPoly d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * static_cast<unsigned long>(k));
  trim(d);
  return d;
}

/// Quotient and remainder; `b` nonzero.
inline std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
  trim(a);
  QPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const Rational f = a.back() / b.back();
    q[shift] = f;
    for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= f * b[k];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return {q, a};
}

inline QPoly monic(QPoly p) {
  if (p.empty()) return p;
  const Rational lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

inline QPoly gcd(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

inline int degree(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

}  // namespace detail

/// Square-free factors f_1, f_2, ... (monic over Q) with p = c * prod f_k^k.
/// Each returned pair is (factor, multiplicity); factors of degree 0 are dropped.
inline std::vector<std::pair<std::vector<Rational>, int>> squarefree_decomposition(const IntPolynomial& p) {
  using detail::QPoly;
  std::vector<std::pair<QPoly, int>> out;
  const QPoly f = detail::to_q(p);
  if (detail::degree(f) < 1) return out;
  QPoly c = detail::gcd(f, detail::derivative(f));
  QPoly w = detail::divmod(f, c).first;
  int mult = 1;
  while (detail::degree(c) > 0) {
    QPoly y = detail::gcd(w, c);
    QPoly z = detail::divmod(w, y).first;
    if (detail::degree(z) > 0) out.emplace_back(detail::monic(z), mult);
    ++mult;
    w = y;
    c = detail::divmod(c, y).first;
  }
  if (detail::degree(w) > 0) out.emplace_back(detail::monic(w), mult);
  return out;
}

struct UnitCircleCount {
  int on_circle = 0;  ///< with multiplicity
  int total = 0;      ///< degree
  std::vector<std::complex<double>> roots;  ///< with multiplicity
};

inline constexpr double kUnitCircleTolerance = 1e-9;

namespace detail {

using HighFloat = boost::multiprecision::cpp_bin_float_50;
using HighComplex = boost::multiprecision::cpp_complex_50;

/// Simple roots of a square-free monic rational polynomial: Aberth iteration
/// in long double, then Newton polishing in 50-digit arithmetic.
inline std::vector<HighComplex> simple_roots(const QPoly& f) {
  const int n = degree(f);
  using LC = std::complex<long double>;
  std::vector<long double> a(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) a[k] = static_cast<long double>(f[k].get_d());

  long double bound = 0;  // Cauchy bound
  for (int k = 0; k < n; ++k) bound = std::max(bound, std::fabs(a[static_cast<std::size_t>(k)]));
  bound += 1;

  auto eval = [&](LC z, LC& dp) {
    LC pv = a.back();
    dp = 0;
    for (std::size_t k = a.size() - 1; k-- > 0;) {
      dp = dp * z + pv;
      pv = pv * z + a[k];
    }
    return pv;
  };

  std::vector<LC> z(static_cast<std::size_t>(n));
  const long double pi = 3.141592653589793238462643383279502884L;
  for (int k = 0; k < n; ++k) {
    const long double ang = 2 * pi * (k + 0.25L) / n + 0.4L;
    z[static_cast<std::size_t>(k)] = std::polar(std::min(bound, 1.2L) * (1 + 0.01L * k / n), ang);
  }
  for (int iter = 0; iter < 2000; ++iter) {
    long double moved = 0;
    for (int k = 0; k < n; ++k) {
      LC dp;
      const auto kk = static_cast<std::size_t>(k);
      LC pv = eval(z[kk], dp);
      if (pv == LC(0)) continue;
      LC ratio = pv / dp;
      LC sum = 0;
      for (int j = 0; j < n; ++j) {
        if (j != k) sum += LC(1) / (z[kk] - z[static_cast<std::size_t>(j)]);
      }
      LC step = ratio / (LC(1) - ratio * sum);
      z[kk] -= step;
      moved = std::max(moved, std::abs(step) / std::max(1.0L, std::abs(z[kk])));
    }
    if (moved < 1e-17L) break;
  }

  std::vector<HighFloat> ha(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) {
    ha[k] = HighFloat(f[k].get_num().get_str()) / HighFloat(f[k].get_den().get_str());
  }
  std::vector<HighComplex> roots;
  for (const auto& z0 : z) {
    HighComplex w(HighFloat(z0.real()), HighFloat(z0.imag()));
    for (int iter = 0; iter < 8; ++iter) {
      HighComplex pv = ha.back(), dp = 0;
      for (std::size_t k = ha.size() - 1; k-- > 0;) {
        dp = dp * w + pv;
        pv = pv * w + ha[k];
      }
      if (abs(dp) == 0) break;
      w -= pv / dp;
    }
    roots.push_back(w);
  }
  return roots;
}

}  // namespace detail

/// Counts zeros (with multiplicity) at distance < tol from the unit circle.
///
/// Works factor by factor on the square-free decomposition. Each root
/// approximation z carries the inclusion radius deg * |f(z)| / |f'(z)|
/// (evaluated with an a-priori rounding bound); a root counts only when that
/// disk lies entirely inside or entirely outside the tolerance band, and
/// NumericalError is thrown otherwise or when two disks of one factor overlap.
inline UnitCircleCount unit_circle_zeros(const IntPolynomial& p, double tol = kUnitCircleTolerance) {
  using detail::HighComplex;
  using detail::HighFloat;
  if (p.is_zero()) throw InputError("unit_circle_zeros: zero polynomial");
  UnitCircleCount out;
  out.total = p.degree();
  for (const auto& [factor, mult] : squarefree_decomposition(p)) {
    const int n = detail::degree(factor);
    const auto roots = detail::simple_roots(factor);
    std::vector<HighFloat> ha(factor.size());
    for (std::size_t k = 0; k < factor.size(); ++k) {
      ha[k] = HighFloat(factor[k].get_num().get_str()) / HighFloat(factor[k].get_den().get_str());
    }
    std::vector<HighFloat> radius;
    for (const auto& w : roots) {
      HighComplex pv = ha.back(), dp = 0;
      HighFloat absw = abs(w), mag = abs(ha.back());
      for (std::size_t k = ha.size() - 1; k-- > 0;) {
        dp = dp * w + pv;
        pv = pv * w + ha[k];
        mag = mag * absw + abs(ha[k]);
      }
      const HighFloat rounding = mag * HighFloat(4 * (n + 1)) * HighFloat("1e-48");
      if (abs(dp) == 0) throw NumericalError("unit_circle_zeros: derivative vanished at an approximate root");
      const HighFloat r = HighFloat(n) * (abs(pv) + rounding) / abs(dp);
      const HighFloat dist = abs(absw - 1);
      radius.push_back(r);
      if (r > HighFloat(tol) / 4) {
        throw NumericalError("unit_circle_zeros: root refinement did not converge (inclusion radius " +
                             r.str(6) + ")");
      }
      bool inside = dist + r < HighFloat(tol);
      bool outside = dist - r > HighFloat(tol);
      if (!inside && !outside) throw NumericalError("unit_circle_zeros: root too close to the tolerance band edge");
      if (inside) out.on_circle += mult;
      for (int m = 0; m < mult; ++m) {
        out.roots.emplace_back(static_cast<double>(w.real()), static_cast<double>(w.imag()));
      }
    }
    for (std::size_t i = 0; i < roots.size(); ++i) {
      for (std::size_t j = i + 1; j < roots.size(); ++j) {
        if (abs(roots[i] - roots[j]) <= radius[i] + radius[j]) {
          throw NumericalError("unit_circle_zeros: root approximations not separated");
        }
      }
    }
  }
  return out;
}

}  // namespace posbraid
