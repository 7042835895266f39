#include "darr/catalog.hpp"

#include "darr/error.hpp"
#include "darr/matrix.hpp"

namespace darr {

PartialDerivationClass partial_derivation(const ArrPtr &arr, int i) {
  if (i < 0 || i >= int(arr->forms().size()))
    fail(Err::IndexOutOfRange, "line index out of range");
  Derivation der = partial_derivation_operator(arr, i);
  Cochain rep(arr);
  rep.add(kWD, der.evaluate(OreElement::gen_D(arr)));
  rep.add(kWE, OreElement::scalar(arr, rat(1)));
  return {i, rep, der};
}

CocycleCatalog::CocycleCatalog(ArrPtr arr) : arr_(std::move(arr)) {
  const unsigned r = unsigned(arr_->r());

  // omega2 = (yD - y^(r+1)E) (x) x'^D' + y Fbar E (x) y'^D'
  OreElement lead(arr_);
  lead.add_term(pbw(0, 1, 1, 0), rat(1));
  lead.add_term(pbw(0, r + 1, 0, 1), rat(-1));
  OreElement yfbar_e =
      mul(OreElement::from_poly(arr_, arr_->Fbar() * CommPoly::monomial(0, 1)),
          OreElement::gen_E(arr_));
  omega2_ = Cochain(arr_);
  omega2_.add(Wedge(kWx | kWD), lead);
  omega2_.add(Wedge(kWy | kWD), yfbar_e);

  omega3_ = Cochain(arr_);
  omega3_.add(Wedge(kWx | kWD | kWE), lead);
  omega3_.add(Wedge(kWy | kWD | kWE), yfbar_e);

  for (int i = 0; i < int(arr_->forms().size()); ++i)
    partials_.push_back(partial_derivation(arr_, i));

  // monomials of S_(r+1) completing the span of xFx, xFy, yFy
  SparseMat probe(int(r) + 2, 3 + int(r) + 2);
  auto put = [&](int col, const CommPoly &p) {
    for (const auto &[k, c] : p.terms()) probe.add(int(CommPoly::key_y(k)), col, c);
  };
  put(0, arr_->Fx() * CommPoly::monomial(1, 0));
  put(1, arr_->Fy() * CommPoly::monomial(1, 0));
  put(2, arr_->Fy() * CommPoly::monomial(0, 1));
  long base_rank = 3;
  int added = 0;
  for (unsigned j = 0; j <= r + 1 && added < int(r) - 1; ++j) {
    probe.add(int(j), 3 + added, rat(1));  // candidate x^(r+1-j) y^j
    SparseMat trial = probe;
    // keep the candidate only if it raises the rank
    long rk = trial.rank();
    if (rk == base_rank + added + 1) {
      kappa_.push_back(CommPoly::monomial(r + 1 - j, j));
      ++added;
    } else {
      probe.add(int(j), 3 + added, rat(-1));  // back out
    }
  }
  if (added != int(r) - 1)
    fail(Err::ConditionFails, "could not complete the S_(r+1) quotient basis");

  // every catalog entry must be a cocycle
  auto must = [&](const Cochain &c, const char *what) {
    if (!is_cocycle(c)) fail(Err::NotCocycle, std::string(what) + " is not a cocycle");
  };
  must(omega2_, "omega2");
  must(omega3_, "omega3");
  for (const auto &p : partials_) must(p.rep, "line class");
  for (const auto &c : h2_kappa_family()) must(c, "kappa family entry");
  for (const auto &c : h2_sd_family()) must(c, "S_1 D family entry");
  for (const auto &c : h2_de_family()) must(c, "D'^E' family entry");
  for (const auto &c : h3_kappa_family()) must(c, "degree-3 kappa entry");
  for (const auto &c : h3_sd_family()) must(c, "degree-3 S_1 D entry");
}

std::vector<Cochain> CocycleCatalog::h1_family() const {
  std::vector<Cochain> out;
  const unsigned r = unsigned(arr_->r());
  for (unsigned a = 0; a <= r; ++a)
    out.push_back(Cochain::term(arr_, OreElement::monomial(arr_, a, r - a, 0, 0), kWD));
  out.push_back(Cochain::term(arr_, OreElement::scalar(arr_, rat(1)), kWE));
  return out;
}

std::vector<Cochain> CocycleCatalog::h2_kappa_family() const {
  std::vector<Cochain> out;
  for (const auto &k : kappa_)
    out.push_back(Cochain::term(arr_, OreElement::from_poly(arr_, k), Wedge(kWy | kWD)));
  return out;
}

std::vector<Cochain> CocycleCatalog::h2_sd_family() const {
  std::vector<Cochain> out;
  out.push_back(
      Cochain::term(arr_, OreElement::monomial(arr_, 1, 0, 1, 0), Wedge(kWy | kWD)));
  out.push_back(
      Cochain::term(arr_, OreElement::monomial(arr_, 0, 1, 1, 0), Wedge(kWy | kWD)));
  return out;
}

std::vector<Cochain> CocycleCatalog::h2_de_family() const {
  std::vector<Cochain> out;
  const unsigned r = unsigned(arr_->r());
  for (unsigned a = 0; a <= r; ++a)
    out.push_back(
        Cochain::term(arr_, OreElement::monomial(arr_, a, r - a, 0, 0), Wedge(kWD | kWE)));
  return out;
}

std::vector<Cochain> CocycleCatalog::h3_kappa_family() const {
  std::vector<Cochain> out;
  for (const auto &k : kappa_)
    out.push_back(
        Cochain::term(arr_, OreElement::from_poly(arr_, k), Wedge(kWy | kWD | kWE)));
  return out;
}

std::vector<Cochain> CocycleCatalog::h3_sd_family() const {
  std::vector<Cochain> out;
  out.push_back(
      Cochain::term(arr_, OreElement::monomial(arr_, 1, 0, 1, 0), Wedge(kWy | kWD | kWE)));
  out.push_back(
      Cochain::term(arr_, OreElement::monomial(arr_, 0, 1, 1, 0), Wedge(kWy | kWD | kWE)));
  return out;
}

Hh1Report hh1_basis_check(const ArrPtr &arr, int window) {
  Hh1Report rep;
  XComplex xc(arr, window);
  std::vector<PartialDerivationClass> cls;
  for (int i = 0; i < int(arr->forms().size()); ++i) cls.push_back(partial_derivation(arr, i));

  rep.all_cocycles = true;
  for (const auto &c : cls)
    if (!is_cocycle(c.rep)) rep.all_cocycles = false;

  rep.differences_not_coboundaries = true;
  for (std::size_t i = 0; i < cls.size(); ++i)
    for (std::size_t j = i + 1; j < cls.size(); ++j) {
      Cochain diff = cls[i].rep - cls[j].rep;
      if (xc.coboundary_witness(diff)) rep.differences_not_coboundaries = false;
    }

  // span dimension modulo coboundaries: rank(im d0 + classes) - rank(im d0)
  int rows = xc.dim(1);
  SparseMat with(rows, xc.dim(0) + int(cls.size()));
  SparseMat without(rows, xc.dim(0));
  for (int col = 0; col < xc.dim(0); ++col) {
    Cochain img = hh_d(0, xc.basis_cochain(0, col));
    auto v = xc.coords(img, 1);
    for (int rr = 0; rr < rows; ++rr)
      if (v[std::size_t(rr)] != 0) {
        with.add(rr, col, v[std::size_t(rr)]);
        without.add(rr, col, v[std::size_t(rr)]);
      }
  }
  for (std::size_t ci = 0; ci < cls.size(); ++ci) {
    auto v = xc.coords(cls[ci].rep, 1);
    for (int rr = 0; rr < rows; ++rr)
      if (v[std::size_t(rr)] != 0) with.add(rr, xc.dim(0) + int(ci), v[std::size_t(rr)]);
  }
  rep.span_dim = with.rank() - without.rank();

  // sum rule: the D'-part of the sum is F_y and the E'-part is r + 2
  Cochain sum(arr);
  for (const auto &c : cls) sum = sum + c.rep;
  rep.sum_rule = sum.coefficient(kWD) == OreElement::from_poly(arr, arr->Fy()) &&
                 sum.coefficient(kWE) ==
                     OreElement::scalar(arr, rat(long(arr->forms().size())));

  rep.pass = rep.all_cocycles && rep.differences_not_coboundaries &&
             rep.span_dim == long(arr->forms().size()) && rep.sum_rule;
  return rep;
}

}  // namespace darr
