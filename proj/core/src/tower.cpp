// Copyright 2026 The ztower Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ztower/tower.hpp"

#include "ztower/errors.hpp"
#include "ztower/factor.hpp"
#include "ztower/mod_poly.hpp"

namespace ztower {

Integer LayerField::degree() const { return ipow(Integer(p), m); }

Integer LayerField::conductor() const {
  return p == 2 ? ipow(Integer(2), m + 2) : ipow(Integer(p), m + 1);
}

std::string LayerField::str() const { return "Q_{" + std::to_string(m) + "," + std::to_string(p) + "}"; }

bool splits_in_layer(std::uint64_t q, const LayerField& L) {
  if (q == static_cast<std::uint64_t>(L.p)) throw InputError("q = p ramifies in the layer");
  if (L.m == 0) return true;
  const std::uint64_t cond = L.conductor().get_ui();
  const std::uint64_t r = q % cond;
  if (L.p == 2) return r == 1 || r == cond - 1;
  return pow_mod(r, static_cast<std::uint64_t>(L.p - 1), cond) == 1;
}

IntPoly layer_polynomial(const LayerField& L) {
  IntPoly sub;
  IntPoly P;
  if (L.p == 2) {
    P = IntPoly::x();
    sub = IntPoly{-2, 0, 1};
  } else if (L.p == 3) {
    P = IntPoly{1, 1};
    sub = IntPoly{0, -3, 0, 1};
  } else {
    throw InputError("layer_polynomial is implemented for p = 2 and p = 3");
  }
  // 2cos(t) satisfies T(2cos(t/p)) = 2cos(t) with T = x^2 - 2 or x^3 - 3x.
  for (int i = 0; i < L.m; ++i) P = compose(P, sub);
  return P;
}

std::pair<Integer, Integer> reduce_cubic(const Integer& A_in, const Integer& B_in) {
  Integer A = A_in, B = B_in;
  Integer g = gcd(A, B);
  if (A == 0) g = B;
  if (B == 0) g = A;
  if (g == 0) return {A, B};
  // Any R with R^2 | A and R^3 | B divides gcd(A, B) (or B when A = 0).
  Factored fac = factor_integer(g);
  std::vector<Integer> candidates;
  for (auto& [p, e] : fac.primes) candidates.push_back(p);
  if (!fac.complete()) candidates.push_back(fac.cofactor);
  for (const Integer& p : candidates) {
    Integer p2 = p * p, p3 = p2 * p;
    while (mpz_divisible_p(A.get_mpz_t(), p2.get_mpz_t()) && mpz_divisible_p(B.get_mpz_t(), p3.get_mpz_t())) {
      A /= p2;
      B /= p3;
    }
  }
  return {A, B};
}

std::optional<Integer> cubic_conductor(const Integer& A_in, const Integer& B_in) {
  const IntPoly f(std::vector<Integer>{B_in, A_in, 0, 1});
  if (!rational_roots(f).empty()) throw ReducibleInput("x^3 + A x + B has a rational root");
  auto [A, B] = reduce_cubic(A_in, B_in);
  Integer disc = -4 * A * A * A - 27 * B * B;
  auto C = exact_sqrt(disc);
  if (!C) return std::nullopt;

  auto v3 = [](const Integer& n) -> unsigned { return n == 0 ? 99u : valuation(n, 3); };
  const unsigned a = v3(A), b = v3(B), c = v3(*C);
  int alpha;
  if (a == 0 || (a == 1 && b == 0 && c >= 3)) {
    alpha = 0;
  } else if ((a == 2 && b == 2) || (a == 1 && b == 0 && c == 2)) {
    alpha = 2;
  } else {
    throw InternalError("cubic_conductor: 3-adic case not covered for A=" + A.get_str() + " B=" + B.get_str());
  }
  Integer conductor = alpha ? 9 : 1;
  Integer g = gcd(A, B);
  Factored fac = factor_integer(g);
  if (!fac.complete()) throw InternalError("cubic_conductor: could not factor gcd(A, B)");
  for (auto& [p, e] : fac.primes) {
    if (mpz_fdiv_ui(p.get_mpz_t(), 3) == 1) conductor *= p;
  }
  return conductor;
}

bool is_layer_cubic(const IntPoly& f) {
  if (f.degree() != 3) throw DegreeMismatch("is_layer_cubic needs a cubic");
  // Monic in theta' = a3 theta, then X = 3x + a2.
  const Integer& a3 = f[3];
  const Integer b = f[2], c = f[1] * a3, d = f[0] * a3 * a3;
  const Integer A = 9 * c - 3 * b * b;
  const Integer B = 2 * b * b * b - 9 * b * c + 27 * d;
  auto cond = cubic_conductor(A, B);
  return cond && *cond == 9;
}

std::string to_string(Membership m) {
  switch (m) {
    case Membership::Yes: return "YES";
    case Membership::No: return "NO";
    case Membership::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

LayerTest defines_layer(const IntPoly& f, const LayerField& L, int sample_size) {
  if (Integer(f.degree()) != L.degree()) {
    throw DegreeMismatch("degree " + std::to_string(f.degree()) + " polynomial vs " + L.str());
  }
  LayerTest out;
  out.method = "frobenius-sampling";
  if (L.m == 0) {
    out.verdict = Membership::Yes;
    return out;
  }
  constexpr std::uint64_t kCap = 100000;
  const Integer bad = discriminant(f) * f.leading();
  int split_seen = 0;
  for (std::uint32_t q : small_primes()) {
    if (q >= kCap) break;
    if (q == 2 || q == static_cast<std::uint32_t>(L.p)) continue;
    if (mpz_divisible_ui_p(bad.get_mpz_t(), q)) continue;
    const bool in_layer = splits_in_layer(q, L);
    modp::Poly fq = modp::monic(modp::reduce(f, q), q);
    modp::Poly frob = modp::powmod(modp::Poly{0, 1}, Integer(static_cast<unsigned long>(q)), fq, q);
    const bool f_splits = frob == modp::Poly{0, 1};
    ++out.primes_sampled;
    if (in_layer != f_splits) {
      out.verdict = Membership::No;
      out.witness = q;
      return out;
    }
    if (in_layer) ++split_seen;
    // Keep going past the sample size until a split prime has been seen.
    if (out.primes_sampled >= sample_size && split_seen > 0) {
      out.verdict = Membership::Yes;
      return out;
    }
  }
  out.verdict = Membership::Inconclusive;
  return out;
}

LayerTest layer_membership(const IntPoly& f, const LayerField& L, int sample_size) {
  if (Integer(f.degree()) != L.degree()) {
    throw DegreeMismatch("degree " + std::to_string(f.degree()) + " polynomial vs " + L.str());
  }
  LayerTest out;
  if (L.m == 0) {
    out.verdict = Membership::Yes;
    out.method = "rational";
    return out;
  }
  if (L.p == 2 && L.m == 1) {
    // Q(sqrt 2) is the only quadratic field in the tower.
    Integer disc = f[1] * f[1] - 4 * f[2] * f[0];
    out.method = "quadratic-discriminant";
    out.verdict = (disc > 0 && disc % 2 == 0 && exact_sqrt(disc / 2)) ? Membership::Yes : Membership::No;
    return out;
  }
  if (L.p == 3 && L.m == 1) {
    out.method = "cubic-conductor";
    out.verdict = is_layer_cubic(f) ? Membership::Yes : Membership::No;
    return out;
  }
  return defines_layer(f, L, sample_size);
}

}  // namespace ztower
