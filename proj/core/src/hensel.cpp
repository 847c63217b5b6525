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

#include "hensel.hpp"

#include <algorithm>
#include <memory>

#include "ztower/errors.hpp"

namespace ztower::detail {
namespace {

using ZPoly = std::vector<Integer>;

void zreduce(ZPoly& a, const Integer& m) {
  for (auto& v : a) mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zadd(const ZPoly& a, const ZPoly& b, const Integer& m) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] += b[i];
  }
  zreduce(r, m);
  return r;
}

ZPoly zsub(const ZPoly& a, const ZPoly& b, const Integer& m) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] -= b[i];
  }
  zreduce(r, m);
  return r;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b, const Integer& m) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  zreduce(r, m);
  return r;
}

// Division by a monic polynomial modulo m.
std::pair<ZPoly, ZPoly> zdivrem(const ZPoly& a, const ZPoly& b, const Integer& m) {
  if (a.size() < b.size()) return {ZPoly{}, a};
  ZPoly r = a;
  const std::size_t db = b.size() - 1;
  ZPoly q(a.size() - db);
  for (std::size_t k = q.size(); k-- > 0;) {
    mpz_fdiv_r(r[k + db].get_mpz_t(), r[k + db].get_mpz_t(), m.get_mpz_t());
    Integer t = r[k + db];
    q[k] = t;
    if (t == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) mpz_submul(r[k + j].get_mpz_t(), t.get_mpz_t(), b[j].get_mpz_t());
  }
  r.resize(db);
  zreduce(r, m);
  zreduce(q, m);
  return {q, r};
}

ZPoly from_modp(const modp::Poly& f) {
  ZPoly r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = static_cast<unsigned long>(f[i]);
  return r;
}

struct Node {
  ZPoly g, h, s, t;  // g*h = target, s*g + t*h = 1
  std::unique_ptr<Node> left, right;
  int leaf = -1;
};

std::unique_ptr<Node> build(const std::vector<modp::Poly>& fs, std::size_t lo, std::size_t hi, std::uint64_t p,
                            modp::Poly& product) {
  auto node = std::make_unique<Node>();
  if (hi - lo == 1) {
    node->leaf = static_cast<int>(lo);
    product = fs[lo];
    return node;
  }
  std::size_t mid = lo + (hi - lo) / 2;
  modp::Poly pg, ph;
  node->left = build(fs, lo, mid, p, pg);
  node->right = build(fs, mid, hi, p, ph);
  modp::ExtGcd eg = modp::ext_gcd(pg, ph, p);
  if (modp::degree(eg.g) != 0) throw InternalError("hensel: factors not coprime mod p");
  node->g = from_modp(pg);
  node->h = from_modp(ph);
  node->s = from_modp(eg.s);
  node->t = from_modp(eg.t);
  product = modp::mul(pg, ph, p);
  return node;
}

void lift(Node& node, const ZPoly& target, const Integer& m, std::vector<ZPoly>& leaves) {
  if (node.leaf >= 0) {
    leaves[node.leaf] = target;
    return;
  }
  ZPoly e = zsub(target, zmul(node.g, node.h, m), m);
  auto [q, r] = zdivrem(zmul(node.s, e, m), node.h, m);
  ZPoly g = zadd(node.g, zadd(zmul(node.t, e, m), zmul(q, node.g, m), m), m);
  ZPoly h = zadd(node.h, r, m);
  ZPoly b = zsub(zadd(zmul(node.s, g, m), zmul(node.t, h, m), m), ZPoly{1}, m);
  auto [c, d] = zdivrem(zmul(node.s, b, m), h, m);
  node.s = zsub(node.s, d, m);
  node.t = zsub(node.t, zadd(zmul(node.t, b, m), zmul(c, g, m), m), m);
  node.g = std::move(g);
  node.h = std::move(h);
  lift(*node.left, node.g, m, leaves);
  lift(*node.right, node.h, m, leaves);
}

}  // namespace

std::vector<IntPoly> hensel_lift(const IntPoly& f, const std::vector<modp::Poly>& factors, std::uint64_t p,
                                 unsigned k) {
  if (factors.empty()) return {};
  const Integer pz = static_cast<unsigned long>(p);
  const Integer M = ipow(pz, k);
  Integer inv;
  if (!mpz_invert(inv.get_mpz_t(), f.leading().get_mpz_t(), M.get_mpz_t())) {
    throw InternalError("hensel: leading coefficient not invertible");
  }
  ZPoly monic_f(f.coeffs());
  for (auto& v : monic_f) v *= inv;
  zreduce(monic_f, M);

  std::vector<ZPoly> leaves(factors.size());
  if (factors.size() == 1) {
    leaves[0] = monic_f;
  } else {
    modp::Poly product;
    auto root = build(factors, 0, factors.size(), p, product);
    std::vector<unsigned> exps{k};
    while (exps.back() > 1) exps.push_back((exps.back() + 1) / 2);
    std::reverse(exps.begin(), exps.end());
    if (exps.size() == 1) {
      // k == 1: the factors themselves.
      for (std::size_t i = 0; i < factors.size(); ++i) leaves[i] = from_modp(factors[i]);
    }
    for (std::size_t i = 1; i < exps.size(); ++i) {
      Integer m = ipow(pz, exps[i]);
      ZPoly target = monic_f;
      zreduce(target, m);
      lift(*root, target, m, leaves);
    }
  }
  std::vector<IntPoly> out;
  out.reserve(leaves.size());
  for (auto& l : leaves) out.emplace_back(std::move(l));
  return out;
}

}  // namespace ztower::detail
