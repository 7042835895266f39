#include "darr/morphism.hpp"

#include <algorithm>

#include "darr/error.hpp"

namespace darr {

namespace {

OreElement substitute_poly(const ArrPtr &arr, const CommPoly &p, const OreElement &ix,
                           const OreElement &iy) {
  OreElement out(arr);
  for (const auto &[k, c] : p.terms()) {
    OreElement t = ore_pow(ix, CommPoly::key_x(k));
    t = mul(t, ore_pow(iy, CommPoly::key_y(k)));
    out = out + t * c;
  }
  return out;
}

void check_relations(const ArrPtr &arr, const std::array<OreElement, 4> &img) {
  const auto &X = img[0];
  const auto &Y = img[1];
  const auto &Dm = img[2];
  const auto &Em = img[3];
  auto expect = [&](const OreElement &lhs, const OreElement &rhs, const char *rel) {
    if (lhs != rhs)
      fail(Err::ConditionFails, std::string("images violate the relation ") + rel);
  };
  expect(commutator(Y, X), OreElement::zero(arr), "[y,x] = 0");
  expect(commutator(Dm, X), OreElement::zero(arr), "[D,x] = 0");
  expect(commutator(Dm, Y), substitute_poly(arr, arr->F(), X, Y), "[D,y] = F");
  expect(commutator(Em, X), X, "[E,x] = x");
  expect(commutator(Em, Y), Y, "[E,y] = y");
  expect(commutator(Em, Dm), Dm * rat(arr->r()), "[E,D] = rD");
}

}  // namespace

AlgebraMorphism::AlgebraMorphism(ArrPtr arr, OreElement img_x, OreElement img_y,
                                 OreElement img_D, OreElement img_E)
    : arr_(std::move(arr)),
      img_{std::move(img_x), std::move(img_y), std::move(img_D), std::move(img_E)} {
  check_relations(arr_, img_);
}

AlgebraMorphism AlgebraMorphism::identity(ArrPtr arr) {
  auto a = arr;
  return AlgebraMorphism(a, OreElement::gen_x(a), OreElement::gen_y(a),
                         OreElement::gen_D(a), OreElement::gen_E(a));
}

OreElement AlgebraMorphism::evaluate(const OreElement &u) const {
  OreElement out(arr_);
  for (const auto &[m, c] : u.terms()) {
    OreElement t = OreElement::scalar(arr_, c);
    t = mul(t, ore_pow(img_[0], pbw_i(m)));
    t = mul(t, ore_pow(img_[1], pbw_j(m)));
    t = mul(t, ore_pow(img_[2], pbw_k(m)));
    t = mul(t, ore_pow(img_[3], pbw_l(m)));
    out = out + t;
  }
  return out;
}

AlgebraMorphism AlgebraMorphism::compose(const AlgebraMorphism &other) const {
  return AlgebraMorphism(arr_, evaluate(other.img_[0]), evaluate(other.img_[1]),
                         evaluate(other.img_[2]), evaluate(other.img_[3]));
}

bool AlgebraMorphism::agrees_with(const AlgebraMorphism &o) const {
  for (int i = 0; i < 4; ++i)
    if (img_[i] != o.img_[i]) return false;
  return true;
}

Derivation::Derivation(ArrPtr arr, OreElement img_x, OreElement img_y, OreElement img_D,
                       OreElement img_E)
    : arr_(std::move(arr)),
      img_{std::move(img_x), std::move(img_y), std::move(img_D), std::move(img_E)} {}

OreElement Derivation::evaluate(const OreElement &u) const {
  OreElement out(arr_);
  for (const auto &[m, c] : u.terms()) {
    const unsigned e[4] = {pbw_i(m), pbw_j(m), pbw_k(m), pbw_l(m)};
    // Leibniz over the PBW word: prefix * der(letter) * suffix
    for (int g = 0; g < 4; ++g) {
      if (e[g] == 0 || img_[g].is_zero()) continue;
      for (unsigned pos = 0; pos < e[g]; ++pos) {
        unsigned pre[4] = {0, 0, 0, 0}, suf[4] = {0, 0, 0, 0};
        for (int t = 0; t < 4; ++t) {
          if (t < g)
            pre[t] = e[t];
          else if (t > g)
            suf[t] = e[t];
        }
        pre[g] = pos;
        suf[g] = e[g] - 1 - pos;
        OreElement term = mul(OreElement::monomial(arr_, pre[0], pre[1], pre[2], pre[3], c),
                              img_[g]);
        term = mul(term, OreElement::monomial(arr_, suf[0], suf[1], suf[2], suf[3]));
        out = out + term;
      }
    }
  }
  return out;
}

Derivation Derivation::operator+(const Derivation &o) const {
  return Derivation(arr_, img_[0] + o.img_[0], img_[1] + o.img_[1], img_[2] + o.img_[2],
                    img_[3] + o.img_[3]);
}

Derivation Derivation::operator*(const Rational &c) const {
  return Derivation(arr_, img_[0] * c, img_[1] * c, img_[2] * c, img_[3] * c);
}

AlgebraMorphism Derivation::exponential(int max_iter) const {
  std::array<OreElement, 4> out;
  const std::array<OreElement, 4> gens = {OreElement::gen_x(arr_), OreElement::gen_y(arr_),
                                          OreElement::gen_D(arr_), OreElement::gen_E(arr_)};
  for (int g = 0; g < 4; ++g) {
    OreElement acc = gens[g];
    OreElement cur = gens[g];
    Rational fact(1);
    int m = 1;
    for (; m <= max_iter; ++m) {
      cur = evaluate(cur);
      if (cur.is_zero()) break;
      fact *= Rational(m);
      acc = acc + cur * (Rational(1) / fact);
    }
    if (m > max_iter)
      fail(Err::IndexOutOfRange, "derivation exponential did not terminate");
    out[g] = acc;
  }
  return AlgebraMorphism(arr_, out[0], out[1], out[2], out[3]);
}

AlgebraMorphism graded_auto(const ArrPtr &arr, const std::array<Rational, 4> &M,
                            const Rational &e, const Rational &v, const CommPoly &phi0) {
  const Rational &a = M[0], &b = M[1], &c = M[2], &d = M[3];
  Rational det = a * d - b * c;
  if (det == 0) fail(Err::ConditionFails, "matrix not invertible");
  if (e == 0) fail(Err::ConditionFails, "e must be nonzero");
  if (!phi0.is_zero() &&
      !(phi0.is_homogeneous() && phi0.degree() == arr->r()))
    fail(Err::ConditionFails, "phi0 must lie in S_r");

  CommPoly ix = CommPoly::monomial(1, 0, a) + CommPoly::monomial(0, 1, b);
  CommPoly iy = CommPoly::monomial(1, 0, c) + CommPoly::monomial(0, 1, d);

  // Q(ax+by, cx+dy) = (ad - bc) e Q
  CommPoly qs;
  for (const auto &[k, qc] : arr->Q().terms())
    qs = qs + ix.pow(CommPoly::key_x(k)) * iy.pow(CommPoly::key_y(k)) * qc;
  if (qs != arr->Q() * (det * e))
    fail(Err::ConditionFails, "Q(ax+by, cx+dy) != (ad-bc) e Q");

  OreElement img_x = OreElement::from_poly(arr, ix);
  OreElement img_y = OreElement::from_poly(arr, iy);
  OreElement img_E = OreElement::gen_E(arr) + OreElement::scalar(arr, v);
  OreElement img_D = OreElement::from_poly(arr, phi0) +
                     OreElement::gen_D(arr) * e;
  if (b != 0) {
    CommPoly quot = divide_exact(arr->F() * (e * b), LinearForm(a, b));
    img_D = img_D - mul(OreElement::from_poly(arr, quot), OreElement::gen_E(arr));
  }
  return AlgebraMorphism(arr, img_x, img_y, img_D, img_E);
}

AlgebraMorphism exp_ad(const ArrPtr &arr, const CommPoly &f) {
  OreElement img_D =
      OreElement::gen_D(arr) - OreElement::from_poly(arr, arr->F() * partial_y(f));
  // [E, f] multiplies each monomial by its degree
  CommPoly ef;
  for (const auto &[k, c] : f.terms())
    ef.add_term(CommPoly::key_x(k), CommPoly::key_y(k),
                c * rat(long(CommPoly::key_x(k)) + long(CommPoly::key_y(k))));
  OreElement img_E = OreElement::gen_E(arr) - OreElement::from_poly(arr, ef);
  return AlgebraMorphism(arr, OreElement::gen_x(arr), OreElement::gen_y(arr), img_D, img_E);
}

AlgebraMorphism exp_ad_series(const ArrPtr &arr, const CommPoly &f, int max_iter) {
  OreElement fo = OreElement::from_poly(arr, f);
  Derivation ad_f(arr, commutator(fo, OreElement::gen_x(arr)),
                  commutator(fo, OreElement::gen_y(arr)),
                  commutator(fo, OreElement::gen_D(arr)),
                  commutator(fo, OreElement::gen_E(arr)));
  return ad_f.exponential(max_iter);
}

bool semidirect_check(const ArrPtr &arr, const AlgebraMorphism &theta0,
                      const std::array<Rational, 4> &M, const CommPoly &f) {
  const Rational &a = M[0], &b = M[1], &c = M[2], &d = M[3];
  Rational det = a * d - b * c;
  // theta0^{-1} on S is the substitution by M^{-1}
  CommPoly inv_x = CommPoly::monomial(1, 0, d / det) + CommPoly::monomial(0, 1, -b / det);
  CommPoly inv_y = CommPoly::monomial(1, 0, -c / det) + CommPoly::monomial(0, 1, a / det);
  CommPoly fpull;
  for (const auto &[k, fc] : f.terms())
    fpull = fpull + inv_x.pow(CommPoly::key_x(k)) * inv_y.pow(CommPoly::key_y(k)) * fc;

  AlgebraMorphism lhs = exp_ad(arr, f).compose(theta0);
  AlgebraMorphism rhs = theta0.compose(exp_ad(arr, fpull));
  return lhs.agrees_with(rhs);
}

AlgebraMorphism modular_sigma(const ArrPtr &arr) {
  return AlgebraMorphism(arr, OreElement::gen_x(arr), OreElement::gen_y(arr),
                         OreElement::gen_D(arr) + OreElement::from_poly(arr, arr->Fy()),
                         OreElement::gen_E(arr) + OreElement::scalar(arr, rat(arr->r() + 2)));
}

Derivation partial_derivation_operator(const ArrPtr &arr, int i) {
  if (i < 0 || i >= int(arr->forms().size()))
    fail(Err::IndexOutOfRange, "line index out of range");
  const LinearForm &alpha = arr->forms()[std::size_t(i)];
  OreElement img_D(arr);
  if (alpha.b != 0) {
    CommPoly quot = divide_exact(arr->F() * alpha.b, alpha);
    img_D = OreElement::from_poly(arr, quot);
  }
  return Derivation(arr, OreElement::zero(arr), OreElement::zero(arr), img_D,
                    OreElement::scalar(arr, rat(1)));
}

ModularReport verify_modular(const ArrPtr &arr, int depth) {
  ModularReport rep;
  AlgebraMorphism sigma = modular_sigma(arr);
  rep.relations_ok = true;  // construction checked the relations

  OreElement Q = OreElement::from_poly(arr, arr->Q());
  bool right_ok = true;  // a Q = Q sigma(a)
  bool left_ok = true;   // Q a = sigma(a) Q
  for (unsigned i = 0; i <= unsigned(depth); ++i)
    for (unsigned j = 0; i + j <= unsigned(depth); ++j)
      for (unsigned k = 0; i + j + k <= unsigned(depth); ++k)
        for (unsigned l = 0; i + j + k + l <= unsigned(depth); ++l) {
          OreElement m = OreElement::monomial(arr, i, j, k, l);
          OreElement sm = sigma.evaluate(m);
          if (mul(m, Q) != mul(Q, sm)) right_ok = false;
          if (mul(Q, m) != mul(sm, Q)) left_ok = false;
          if (!right_ok && !left_ok) goto done;
        }
done:
  rep.orientation = right_ok ? +1 : (left_ok ? -1 : 0);
  rep.all_monomials_ok = right_ok || left_ok;
  if (!rep.all_monomials_ok) rep.detail = "neither orientation of the normality identity holds";

  // sigma should be the exponential of +- the sum of the line derivations;
  // the sign is tied to the orientation found above
  Derivation sum = partial_derivation_operator(arr, 0);
  for (int i = 1; i < int(arr->forms().size()); ++i)
    sum = sum + partial_derivation_operator(arr, i);
  for (int s : {+1, -1}) {
    AlgebraMorphism e = (sum * rat(s)).exponential();
    if (e.agrees_with(sigma)) {
      rep.exp_partials_match = true;
      rep.exp_sign = s;
      break;
    }
  }
  return rep;
}

AlgebraMorphism normal_auto(const ArrPtr &arr, const NormalElementWitness &w) {
  if (w.exponents.size() != arr->forms().size())
    fail(Err::IndexOutOfRange, "witness exponent count mismatch");
  if (w.lambda == 0) fail(Err::ConditionFails, "normal element must be nonzero");
  Derivation acc(arr, OreElement::zero(arr), OreElement::zero(arr), OreElement::zero(arr),
                 OreElement::zero(arr));
  for (std::size_t i = 0; i < w.exponents.size(); ++i)
    if (w.exponents[i] != 0)
      acc = acc + partial_derivation_operator(arr, int(i)) * rat(long(w.exponents[i]));
  return acc.exponential();
}

namespace {

std::vector<Rational> dehomogenize(const CommPoly &p) {
  std::vector<Rational> u;
  for (const auto &[k, c] : p.terms()) {
    std::size_t i = CommPoly::key_x(k);
    if (u.size() <= i) u.resize(i + 1, Rational(0));
    u[i] += c;
  }
  while (!u.empty() && u.back() == 0) u.pop_back();
  return u;
}

// rational roots of an exactly represented univariate polynomial; the search
// enumerates divisor pairs of the integerized trailing/leading coefficients
// and is capped, which is ample for desk-scale inputs
std::optional<Rational> find_rational_root(std::vector<Rational> p) {
  while (!p.empty() && p.front() == 0) p.erase(p.begin());  // factor t out: t=0 root
  if (p.size() <= 1) return std::nullopt;
  Integer lcm(1);
  for (const auto &c : p) {
    Integer den = c.get_den();
    Integer g;
    mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    lcm = lcm / g * den;
  }
  std::vector<Integer> ip;
  for (const auto &c : p) {
    Rational scaled = c * Rational(lcm);
    ip.push_back(scaled.get_num());  // denominator is 1 after scaling
  }
  Integer a0 = ip.front(), lead = ip.back();
  if (a0 == 0) return Rational(0);
  auto divisors = [](Integer n) {
    std::vector<Integer> out;
    n = abs(n);
    for (Integer d(1); d * d <= n && d < 100000; ++d)
      if (n % d == 0) {
        out.push_back(d);
        out.push_back(n / d);
      }
    return out;
  };
  auto eval = [&](const Rational &t) {
    Rational acc(0);
    for (auto it = ip.rbegin(); it != ip.rend(); ++it) acc = acc * t + Rational(*it);
    return acc;
  };
  for (const Integer &num : divisors(a0))
    for (const Integer &den : divisors(lead)) {
      Rational cand(num, den);
      cand.canonicalize();
      if (eval(cand) == 0) return cand;
      if (eval(-cand) == 0) return -cand;
    }
  return std::nullopt;
}

}  // namespace

NormalCheckResult is_normal(const ArrPtr &arr, const OreElement &u) {
  NormalCheckResult res;
  if (!u.in_S()) {
    res.reason = NotNormalReason::NotInS;
    res.detail = "element has D or E support";
    return res;
  }
  CommPoly p = u.poly_part();
  if (p.is_zero()) {
    res.reason = NotNormalReason::NotInS;
    res.detail = "zero element";
    return res;
  }
  if (!p.is_homogeneous()) {
    res.reason = NotNormalReason::NonSplitFactor;
    res.detail = "not homogeneous, so not a product of linear forms";
    return res;
  }

  std::vector<unsigned> exps(arr->forms().size(), 0);
  for (std::size_t i = 0; i < arr->forms().size(); ++i) {
    for (;;) {
      if (!p.degree() || *p.degree() == 0) break;
      try {
        CommPoly q = divide_exact(p, arr->forms()[i]);
        p = q;
        ++exps[i];
      } catch (const Error &) {
        break;
      }
    }
  }

  if (p.degree() && *p.degree() == 0) {
    res.witness = NormalElementWitness{p.coeff(0, 0), exps};
    return res;
  }

  // leftover of positive degree: decide between a foreign rational line and
  // an irreducible factor
  auto dh = dehomogenize(p);
  if (int(dh.size()) < *p.degree() + 1) {
    // missing top x-power means y divides the leftover
    res.reason = NotNormalReason::ForeignLine;
    res.detail = "factor y is not a line of the arrangement";
    return res;
  }
  if (auto root = find_rational_root(dh)) {
    res.reason = NotNormalReason::ForeignLine;
    Rational t = *root;
    res.detail = "factor " + rat_str(t.get_den()) + "*x - " + rat_str(t.get_num()) +
                 "*y is not a line of the arrangement";
    return res;
  }
  res.reason = NotNormalReason::NonSplitFactor;
  res.detail = "leftover factor " + p.str() + " has no rational linear factor";
  return res;
}

}  // namespace darr
