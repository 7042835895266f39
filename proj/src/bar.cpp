#include "darr/bar.hpp"

#include <algorithm>
#include <sstream>

#include "darr/catalog.hpp"
#include "darr/error.hpp"
#include "darr/matrix.hpp"

namespace darr {

namespace {

constexpr Wedge kLetterMask[4] = {kWx, kWy, kWD, kWE};

int first_letter(PbwKey m) {
  if (pbw_i(m)) return 0;
  if (pbw_j(m)) return 1;
  if (pbw_k(m)) return 2;
  if (pbw_l(m)) return 3;
  return -1;
}

int last_letter(PbwKey m) {
  if (pbw_l(m)) return 3;
  if (pbw_k(m)) return 2;
  if (pbw_j(m)) return 1;
  if (pbw_i(m)) return 0;
  return -1;
}

// u then v spells a standard word
bool concat_standard(PbwKey u, PbwKey v) {
  int lu = last_letter(u), fv = first_letter(v);
  if (lu < 0 || fv < 0) return true;
  return lu <= fv;
}

bool in_S_key(PbwKey m) { return pbw_k(m) == 0 && pbw_l(m) == 0; }

template <typename F>
void for_each_split(PbwKey m, F &&fn) {
  const unsigned e[4] = {pbw_i(m), pbw_j(m), pbw_k(m), pbw_l(m)};
  for (int g = 0; g < 4; ++g) {
    for (unsigned pos = 0; pos < e[g]; ++pos) {
      unsigned pre[4] = {0, 0, 0, 0}, suf[4] = {0, 0, 0, 0};
      for (int t = 0; t < 4; ++t) {
        if (t < g) pre[t] = e[t];
        if (t > g) suf[t] = e[t];
      }
      pre[g] = pos;
      suf[g] = e[g] - 1 - pos;
      fn(pbw(pre[0], pre[1], pre[2], pre[3]), g, pbw(suf[0], suf[1], suf[2], suf[3]));
    }
  }
}

std::string slots_str(const std::vector<PbwKey> &slots) {
  std::string out;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (i) out += " | ";
    out += pbw_str(slots[i]);
  }
  return out;
}

}  // namespace

void BarChain::add_term(const std::vector<PbwKey> &slots, const Rational &c) {
  if (c == 0) return;
  if (int(slots.size()) != degree_ + 2)
    fail(Err::DegreeMismatch, "bar term arity mismatch");
  auto it = terms_.find(slots);
  if (it == terms_.end()) {
    terms_.emplace(slots, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BarChain BarChain::operator+(const BarChain &o) const {
  BarChain out = *this;
  for (const auto &[s, c] : o.terms_) out.add_term(s, c);
  return out;
}

BarChain BarChain::operator-(const BarChain &o) const {
  BarChain out = *this;
  for (const auto &[s, c] : o.terms_) out.add_term(s, -c);
  return out;
}

std::string BarChain::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &[s, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << rat_str(c) << "*(" << slots_str(s) << ")";
  }
  return os.str();
}

BarChain bar_d(const BarChain &c) {
  const ArrPtr &arr = c.arrangement();
  BarChain out(arr, c.degree() - 1);
  for (const auto &[slots, cv] : c.terms()) {
    for (std::size_t i = 0; i + 1 < slots.size(); ++i) {
      Rational sign = (i % 2 == 0) ? rat(1) : rat(-1);
      OreElement merged = mul_mono(arr, slots[i], slots[i + 1]);
      for (const auto &[mk, mc] : merged.terms()) {
        std::vector<PbwKey> ns;
        ns.reserve(slots.size() - 1);
        for (std::size_t t = 0; t < slots.size(); ++t) {
          if (t == i) {
            ns.push_back(mk);
          } else if (t != i + 1) {
            ns.push_back(slots[t]);
          }
        }
        out.add_term(ns, cv * mc * sign);
      }
    }
  }
  return out;
}

Comparison::Comparison(ArrPtr arr) : arr_(std::move(arr)), res_(arr_) {
  // expand nabla(F) and (1 x 1 x nabla)(nabla(F)) as monomial tuples
  for (const auto &[k, c] : res_.nablaF().terms())
    nabla3_.emplace_back(k.left, k.w, k.right, c);
  for (const auto &[k, c] : res_.nablaF().terms()) {
    const Rational cc = c;
    for_each_split(k.right, [&](PbwKey p1, int g, PbwKey p3) {
      nabla5_.emplace_back(k.left, k.w, p1, kLetterMask[g], p3, cc);
    });
  }
}

BarChain Comparison::phi_gen(int p, Wedge w) const {
  if (p < 0 || p > 3 || wedge_len(w) != p)
    fail(Err::UnsupportedDegree, "phi supports degrees 0..3");
  BarChain out(arr_, p);

  // antisymmetrization part
  auto letters = wedge_letters(w);
  std::vector<int> idx(letters.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = int(i);
  std::sort(idx.begin(), idx.end());
  do {
    int inv = 0;
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = i + 1; j < idx.size(); ++j)
        if (idx[i] > idx[j]) ++inv;
    std::vector<PbwKey> slots;
    slots.push_back(kPbwOne);
    for (std::size_t i = 0; i < idx.size(); ++i) {
      Wedge letter = letters[std::size_t(idx[i])];
      int g = letter == kWx ? 0 : letter == kWy ? 1 : letter == kWD ? 2 : 3;
      unsigned e[4] = {0, 0, 0, 0};
      e[g] = 1;
      slots.push_back(pbw(e[0], e[1], e[2], e[3]));
    }
    slots.push_back(kPbwOne);
    out.add_term(slots, (inv % 2 == 0) ? rat(1) : rat(-1));
  } while (std::next_permutation(idx.begin(), idx.end()));

  // corrections
  auto letter_slot = [&](Wedge letter) -> PbwKey {
    switch (letter) {
      case kWx: return pbw(1, 0, 0, 0);
      case kWy: return pbw(0, 1, 0, 0);
      case kWD: return pbw(0, 0, 1, 0);
      default: return pbw(0, 0, 0, 1);
    }
  };
  if (w == Wedge(kWy | kWD)) {
    for (const auto &[q1, l, q3, qc] : nabla3_)
      out.add_term({q1, letter_slot(l), q3, kPbwOne}, qc);
    for (const auto &t : arr_->F_terms())
      out.add_term({pbw(t.i, t.j, 0, 0), kPbwOne, kPbwOne, kPbwOne}, -t.c);
  } else if (w == Wedge(kWx | kWy | kWD) || w == Wedge(kWy | kWD | kWE)) {
    PbwKey g = (w == Wedge(kWx | kWy | kWD)) ? pbw(1, 0, 0, 0) : pbw(0, 0, 0, 1);
    for (const auto &[q1, l, q3, qc] : nabla3_) {
      out.add_term({q1, letter_slot(l), q3, g, kPbwOne}, qc);
      out.add_term({q1, letter_slot(l), g, q3, kPbwOne}, -qc);
      out.add_term({q1, g, letter_slot(l), q3, kPbwOne}, qc);
    }
    for (const auto &t : arr_->F_terms()) {
      out.add_term({pbw(t.i, t.j, 0, 0), g, kPbwOne, kPbwOne, kPbwOne}, -t.c);
      out.add_term({pbw(t.i, t.j, 0, 0), kPbwOne, kPbwOne, g, kPbwOne}, -t.c);
    }
  }
  return out;
}

BarChain Comparison::phi(int p, const BimoduleChain &c) const {
  BarChain out(arr_, p);
  for (const auto &[k, cv] : c.terms()) {
    BarChain base = phi_gen(p, k.w);
    for (const auto &[slots, bc] : base.terms()) {
      OreElement left = mul_mono(arr_, k.left, slots.front());
      OreElement right = mul_mono(arr_, slots.back(), k.right);
      for (const auto &[lm, lc] : left.terms())
        for (const auto &[rm, rc] : right.terms()) {
          std::vector<PbwKey> ns = slots;
          ns.front() = lm;
          ns.back() = rm;
          out.add_term(ns, cv * bc * lc * rc);
        }
    }
  }
  return out;
}

BimoduleChain Comparison::psi1(PbwKey w) const {
  BimoduleChain out(arr_);
  for_each_split(w, [&](PbwKey pre, int g, PbwKey suf) {
    out.add_term(pre, kLetterMask[g], suf, rat(1));
  });
  return out;
}

Comparison::Psi2Value Comparison::psi2(PbwKey u, PbwKey v) const {
  Psi2Value out;
  out.chain = BimoduleChain(arr_);
  if (u == kPbwOne || v == kPbwOne) return out;  // normalized
  if (concat_standard(u, v)) return out;

  const unsigned r = unsigned(arr_->r());
  const PbwKey yD = pbw(0, 1, 1, 0), yr1E = pbw(0, r + 1, 0, 1);
  const PbwKey xkey = pbw(1, 0, 0, 0), ykey = pbw(0, 1, 0, 0), Ekey = pbw(0, 0, 0, 1);

  if (u == yD && v == ykey) {
    out.chain.add_term(ykey, Wedge(kWy | kWD), kPbwOne, rat(-1));
    for (const auto &[q1, l, q3, qc] : nabla3_) {
      auto [s, nw] = wedge_concat(l, kWy);
      if (s != 0) out.chain.add_term(q1, nw, q3, qc * rat(-s));
    }
    return out;
  }
  if (u == yr1E && v == ykey) {
    out.chain.add_term(pbw(0, r + 1, 0, 0), Wedge(kWy | kWE), kPbwOne, rat(-1));
    return out;
  }
  if (u == Ekey) {
    for_each_split(v, [&](PbwKey p1, int g, PbwKey p3) {
      auto [s, nw] = wedge_concat(kLetterMask[g], kWE);
      if (s != 0) out.chain.add_term(p1, nw, p3, rat(-s));
    });
    return out;
  }
  if (v == xkey) {
    for_each_split(u, [&](PbwKey p1, int g, PbwKey p3) {
      auto [s, nw] = wedge_concat(kWx, kLetterMask[g]);
      if (s != 0) out.chain.add_term(p1, nw, p3, rat(-s));
    });
    return out;
  }
  int fu = first_letter(u), fv = first_letter(v);
  if (u == pbw(fu == 0, fu == 1, fu == 2, fu == 3) &&
      v == pbw(fv == 0, fv == 1, fv == 2, fv == 3)) {
    // both single letters, concatenation not standard
    auto [s, nw] = wedge_concat(kLetterMask[fv], kLetterMask[fu]);
    if (s != 0) out.chain.add_term(kPbwOne, nw, kPbwOne, rat(-s));
    return out;
  }
  if (in_S_key(u) && in_S_key(v)) {
    // unspecified by the case table; supported on the x^y wedge only
    out.opaque_xy = true;
    return out;
  }
  fail(Err::UncoveredShape,
       "psi_2 undefined on 1 | " + pbw_str(u) + " | " + pbw_str(v) + " | 1");
}

OreElement Comparison::eval_tilde(const Cochain &alpha,
                                  const std::vector<PbwKey> &interior) const {
  OreElement out(arr_);
  if (alpha.is_zero()) return out;
  int p = alpha.degree();
  if (int(interior.size()) != p)
    fail(Err::DegreeMismatch, "cochain degree does not match tensor arity");
  for (PbwKey s : interior)
    if (s == kPbwOne) return out;  // normalized

  if (p == 1) {
    for_each_split(interior[0], [&](PbwKey pre, int g, PbwKey suf) {
      OreElement coef = alpha.coefficient(kLetterMask[g]);
      if (coef.is_zero()) return;
      out = out + mul(OreElement::monomial(arr_, pre),
                      mul(coef, OreElement::monomial(arr_, suf)));
    });
    return out;
  }
  if (p == 2) {
    Psi2Value val = psi2(interior[0], interior[1]);
    if (val.opaque_xy) {
      if (!alpha.coefficient(Wedge(kWx | kWy)).is_zero())
        fail(Err::UncoveredShape,
             "cochain with x'^y' support evaluated on an unspecified psi_2 value at 1 | " +
                 pbw_str(interior[0]) + " | " + pbw_str(interior[1]) + " | 1");
      return out;
    }
    return evaluate_cochain(alpha, val.chain);
  }
  fail(Err::UnsupportedDegree, "psi is only available in degrees <= 2");
}

Cochain Comparison::diamond(const Cochain &alpha, const Cochain &beta) const {
  int p = alpha.is_zero() ? 0 : alpha.degree();
  int q = beta.is_zero() ? 0 : beta.degree();
  Cochain out(arr_);
  if (p == 0) return out;  // nothing to insert into
  if (q == 0) return out;  // normalized cochains kill inserted scalars
  if (p > 2 || q > 2 || p + q - 1 > 3)
    fail(Err::UnsupportedDegree, "diamond needs degrees <= 2");
  const int n = p + q - 1;

  for (Wedge w : wedge_basis(n)) {
    OreElement val(arr_);
    BarChain ph = phi_gen(n, w);
    for (const auto &[slots, c] : ph.terms()) {
      for (int i = 1; i + q - 1 <= n; ++i) {
        int sign = ((q - 1) * (i - 1)) % 2 == 0 ? 1 : -1;
        std::vector<PbwKey> window(slots.begin() + i, slots.begin() + i + q);
        OreElement inner = eval_tilde(beta, window);
        if (inner.is_zero()) continue;
        for (const auto &[bm, bc] : inner.terms()) {
          std::vector<PbwKey> rest;
          rest.reserve(std::size_t(p));
          for (int t = 1; t < i; ++t) rest.push_back(slots[std::size_t(t)]);
          rest.push_back(bm);
          for (int t = i + q; t <= n; ++t) rest.push_back(slots[std::size_t(t)]);
          OreElement v2 = eval_tilde(alpha, rest);
          if (v2.is_zero()) continue;
          OreElement term = mul(OreElement::monomial(arr_, slots.front()),
                                mul(v2, OreElement::monomial(arr_, slots.back())));
          val = val + term * (c * bc * rat(sign));
        }
      }
    }
    if (!val.is_zero()) out.add(w, val);
  }
  return out;
}

Cochain Comparison::bracket(const Cochain &alpha, const Cochain &beta) const {
  int p = alpha.is_zero() ? 0 : alpha.degree();
  int q = beta.is_zero() ? 0 : beta.degree();
  if (p == 0 || q == 0) return Cochain(arr_);
  Cochain ab = diamond(alpha, beta);
  Cochain ba = diamond(beta, alpha);
  int s = ((p - 1) * (q - 1)) % 2 == 0 ? 1 : -1;
  return ab - ba * rat(s);
}

Cochain Comparison::bracket_with_E_cup(const Cochain &alpha, const Cochain &beta2) const {
  Cochain oneE = Cochain::term(arr_, OreElement::scalar(arr_, rat(1)), kWE);
  int p = alpha.degree();
  int q2 = beta2.degree();
  int s = ((p - 1) * q2) % 2 == 0 ? 1 : -1;
  return cup(bracket(alpha, beta2), oneE) + cup(beta2, bracket(alpha, oneE)) * rat(s);
}

bool Comparison::Delta5::operator<(const Delta5 &o) const {
  if (w1 != o.w1) return w1 < o.w1;
  if (w2 != o.w2) return w2 < o.w2;
  if (a != o.a) return a < o.a;
  if (m != o.m) return m < o.m;
  return b < o.b;
}

const Comparison::DeltaChain &Comparison::delta_gen(Wedge w) const {
  auto it = delta_cache_.find(w);
  if (it == delta_cache_.end()) it = delta_cache_.emplace(w, delta_gen_uncached(w)).first;
  return it->second;
}

namespace {

void delta_add(Comparison::DeltaChain &out, const Comparison::Delta5 &k, const Rational &c) {
  if (c == 0) return;
  auto it = out.find(k);
  if (it == out.end()) {
    out.emplace(k, c);
  } else {
    it->second += c;
    if (it->second == 0) out.erase(it);
  }
}

// Correction signs above the y^D level, fixed by solving the chain-map
// squares symbolically; the test suite asserts the square at every
// generator. Under the wedge and unshuffle conventions used here the x^y^D
// generator needs a correction of the same shape as y^D^E.
constexpr int kDeltaYdESign[2] = {-1, +1};
constexpr int kDeltaXydSign[2] = {-1, +1};
constexpr int kDeltaTopSign[4] = {+1, -1, +1, +1};

}  // namespace

Comparison::DeltaChain Comparison::delta_gen_uncached(Wedge w) const {
  DeltaChain out;
  auto letters = wedge_letters(w);
  const int n = int(letters.size());

  // unshuffle sum over ordered subset splits
  for (unsigned sub = 0; sub < (1u << n); ++sub) {
    Wedge w1 = kWEmpty, w2 = kWEmpty;
    int inv = 0;
    for (int i = 0; i < n; ++i) {
      if (sub & (1u << i)) {
        w1 = Wedge(w1 | letters[std::size_t(i)]);
      } else {
        w2 = Wedge(w2 | letters[std::size_t(i)]);
        for (int j = i + 1; j < n; ++j)
          if (sub & (1u << j)) ++inv;
      }
    }
    delta_add(out, {kPbwOne, w1, kPbwOne, w2, kPbwOne},
              (inv % 2 == 0) ? rat(1) : rat(-1));
  }

  // corrections carrying F through one or two Leibniz passes
  if (w == Wedge(kWx | kWy | kWD)) {
    for (const auto &[f1, l2, f3, l4, f5, fc] : nabla5_) {
      auto [s2, w2x] = wedge_concat(l2, kWx);
      if (s2 != 0) delta_add(out, {f1, w2x, f3, l4, f5}, fc * rat(kDeltaXydSign[0] * s2));
      auto [s4, w4x] = wedge_concat(l4, kWx);
      if (s4 != 0) delta_add(out, {f1, l2, f3, w4x, f5}, fc * rat(kDeltaXydSign[1] * s4));
    }
  } else if (w == Wedge(kWy | kWD)) {
    for (const auto &[f1, l2, f3, l4, f5, fc] : nabla5_)
      delta_add(out, {f1, l2, f3, l4, f5}, fc);
  } else if (w == Wedge(kWy | kWD | kWE)) {
    for (const auto &[f1, l2, f3, l4, f5, fc] : nabla5_) {
      auto [s2, w2E] = wedge_concat(l2, kWE);
      if (s2 != 0) delta_add(out, {f1, w2E, f3, l4, f5}, fc * rat(kDeltaYdESign[0] * s2));
      auto [s4, w4E] = wedge_concat(l4, kWE);
      if (s4 != 0) delta_add(out, {f1, l2, f3, w4E, f5}, fc * rat(kDeltaYdESign[1] * s4));
    }
  } else if (w == Wedge(kWx | kWy | kWD | kWE)) {
    for (const auto &[f1, l2, f3, l4, f5, fc] : nabla5_) {
      {
        auto [s, nw] = wedge_concat(l2, Wedge(kWx | kWE));
        if (s != 0) delta_add(out, {f1, nw, f3, l4, f5}, fc * rat(kDeltaTopSign[0] * s));
      }
      {
        auto [sa, wa] = wedge_concat(l2, kWx);
        auto [sb, wb] = wedge_concat(l4, kWE);
        if (sa != 0 && sb != 0)
          delta_add(out, {f1, wa, f3, wb, f5}, fc * rat(kDeltaTopSign[1] * sa * sb));
      }
      {
        auto [sa, wa] = wedge_concat(l2, kWE);
        auto [sb, wb] = wedge_concat(l4, kWx);
        if (sa != 0 && sb != 0)
          delta_add(out, {f1, wa, f3, wb, f5}, fc * rat(kDeltaTopSign[2] * sa * sb));
      }
      {
        auto [s, nw] = wedge_concat(l4, Wedge(kWx | kWE));
        if (s != 0) delta_add(out, {f1, l2, f3, nw, f5}, fc * rat(kDeltaTopSign[3] * s));
      }
    }
  }
  return out;
}

Comparison::DeltaChain Comparison::delta_of_chain(const BimoduleChain &c) const {
  DeltaChain out;
  for (const auto &[k, cv] : c.terms()) {
    for (const auto &[d5, dc] : delta_gen(k.w)) {
      OreElement left = mul_mono(arr_, k.left, d5.a);
      OreElement right = mul_mono(arr_, d5.b, k.right);
      for (const auto &[lm, lc] : left.terms())
        for (const auto &[rm, rc] : right.terms())
          delta_add(out, {lm, d5.w1, d5.m, d5.w2, rm}, cv * dc * lc * rc);
    }
  }
  return out;
}

bool Comparison::delta_square_commutes(Wedge w, std::string *residual) const {
  const int n = wedge_len(w);
  if (n < 1) return true;
  DeltaChain lhs;
  for (const auto &[t, c] : delta_gen(w)) {
    int p1 = wedge_len(t.w1), p2 = wedge_len(t.w2);
    if (p1 >= 1) {
      BimoduleChain img = res_.d(p1, BimoduleChain::term(arr_, t.a, t.w1, t.m));
      for (const auto &[k, ic] : img.terms())
        delta_add(lhs, {k.left, k.w, k.right, t.w2, t.b}, c * ic);
    }
    if (p2 >= 1) {
      Rational sign = (p1 % 2 == 0) ? rat(1) : rat(-1);
      BimoduleChain img = res_.d(p2, BimoduleChain::term(arr_, t.m, t.w2, t.b));
      for (const auto &[k, ic] : img.terms())
        delta_add(lhs, {t.a, t.w1, k.left, k.w, k.right}, c * ic * sign);
    }
  }
  DeltaChain rhs = delta_of_chain(res_.d_gen(n, w));
  for (const auto &[t, c] : rhs) delta_add(lhs, t, -c);
  if (lhs.empty()) return true;
  if (residual) {
    std::ostringstream os;
    for (const auto &[t, c] : lhs)
      os << " " << rat_str(c) << "*(" << pbw_str(t.a) << "|" << wedge_str(t.w1, false)
         << "|" << pbw_str(t.m) << "|" << wedge_str(t.w2, false) << "|" << pbw_str(t.b)
         << ")";
    *residual = os.str();
  }
  return false;
}

Cochain Comparison::cup(const Cochain &alpha, const Cochain &beta) const {
  int p = alpha.is_zero() ? 0 : alpha.degree();
  int q = beta.is_zero() ? 0 : beta.degree();
  if (p + q > 4) fail(Err::UnsupportedDegree, "cup needs total degree <= 4");
  Cochain out(arr_);
  if (alpha.is_zero() || beta.is_zero()) return out;
  for (Wedge w : wedge_basis(p + q)) {
    OreElement val(arr_);
    for (const auto &[t, c] : delta_gen(w)) {
      if (wedge_len(t.w1) != p || wedge_len(t.w2) != q) continue;
      OreElement ca = alpha.coefficient(t.w1);
      if (ca.is_zero()) continue;
      OreElement cb = beta.coefficient(t.w2);
      if (cb.is_zero()) continue;
      OreElement term = mul(OreElement::monomial(arr_, t.a), ca);
      term = mul(term, OreElement::monomial(arr_, t.m));
      term = mul(term, cb);
      term = mul(term, OreElement::monomial(arr_, t.b));
      val = val + term * c;
    }
    if (!val.is_zero()) out.add(w, val);
  }
  return out;
}

OrlikSolomonReport orlik_solomon_check(const ArrPtr &arr) {
  OrlikSolomonReport rep;
  Comparison cmp(arr);
  const int n = int(arr->forms().size());

  std::vector<Cochain> cls;
  for (int i = 0; i < n; ++i) cls.push_back(partial_derivation(arr, i).rep);

  std::vector<std::vector<Cochain>> cups;
  cups.resize(std::size_t(n));
  for (int i = 0; i < n; ++i) {
    cups[std::size_t(i)].resize(std::size_t(n), Cochain(arr));
    for (int j = 0; j < n; ++j)
      cups[std::size_t(i)][std::size_t(j)] = cmp.cup(cls[std::size_t(i)], cls[std::size_t(j)]);
  }
  rep.triple_relations = true;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        Cochain sum = cups[std::size_t(i)][std::size_t(j)] +
                      cups[std::size_t(j)][std::size_t(k)] +
                      cups[std::size_t(k)][std::size_t(i)];
        if (!sum.is_zero()) rep.triple_relations = false;
      }

  // abstract graded-commutative algebra on n degree-1 generators modulo the
  // triple relations, dimensions by exact rank
  auto pair_idx = [&](int i, int j) { return i * n + j; };  // i < j
  int npairs = n * (n - 1) / 2;
  std::vector<int> compact(std::size_t(n * n), -1);
  {
    int t = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) compact[std::size_t(pair_idx(i, j))] = t++;
  }
  auto e2 = [&](int i, int j, Rational &sign) {
    if (i < j) {
      sign = rat(1);
      return compact[std::size_t(pair_idx(i, j))];
    }
    sign = rat(-1);
    return compact[std::size_t(pair_idx(j, i))];
  };

  int ntriples = n * (n - 1) * (n - 2) / 6;
  SparseMat rel2(ntriples * 1, npairs);
  {
    int row = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = j + 1; k < n; ++k, ++row) {
          Rational s;
          int c1 = e2(i, j, s);
          rel2.add(row, c1, s);
          int c2 = e2(j, k, s);
          rel2.add(row, c2, s);
          int c3 = e2(k, i, s);
          rel2.add(row, c3, s);
        }
  }
  rep.dim0 = 1;
  rep.dim1 = n;
  rep.dim2 = npairs - rel2.rank();

  // degree 3: relations wedged with every generator
  std::map<std::array<int, 3>, int> t_index;
  {
    int t = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = j + 1; k < n; ++k) t_index[{i, j, k}] = t++;
  }
  auto e3 = [&](int a, int b, int c, Rational &sign) -> int {
    int v[3] = {a, b, c};
    sign = rat(1);
    for (int s = 0; s < 2; ++s)
      for (int t = 0; t + 1 < 3 - s; ++t)
        if (v[t] > v[t + 1]) {
          std::swap(v[t], v[t + 1]);
          sign = -sign;
        }
    if (v[0] == v[1] || v[1] == v[2]) return -1;
    return t_index.at({v[0], v[1], v[2]});
  };
  SparseMat rel3(ntriples * n, ntriples);
  {
    int row = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = j + 1; k < n; ++k)
          for (int l = 0; l < n; ++l, ++row) {
            Rational s;
            int c;
            c = e3(i, j, l, s);
            if (c >= 0) rel3.add(row, c, s);
            c = e3(j, k, l, s);
            if (c >= 0) rel3.add(row, c, s);
            c = e3(k, i, l, s);
            if (c >= 0) rel3.add(row, c, s);
          }
  }
  rep.dim3 = ntriples - rel3.rank();

  // consecutive products span degree 2
  SparseMat span2(ntriples + n - 1, npairs);
  {
    int row = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = j + 1; k < n; ++k, ++row) {
          Rational s;
          int c1 = e2(i, j, s);
          span2.add(row, c1, s);
          int c2 = e2(j, k, s);
          span2.add(row, c2, s);
          int c3 = e2(k, i, s);
          span2.add(row, c3, s);
        }
    for (int i = 0; i + 1 < n; ++i, ++row) {
      Rational s;
      span2.add(row, e2(i, i + 1, s), s);
    }
  }
  rep.spanning_pairs = span2.rank() == npairs;

  long r = arr->r();
  rep.dims_match = rep.dim0 == 1 && rep.dim1 == r + 2 && rep.dim2 == r + 1 && rep.dim3 == 0;
  rep.pass = rep.triple_relations && rep.dims_match && rep.spanning_pairs;
  return rep;
}

}  // namespace darr
