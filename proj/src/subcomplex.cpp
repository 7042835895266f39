#include "darr/subcomplex.hpp"

#include "darr/error.hpp"

namespace darr {

namespace {

// masks present in each degree of the subcomplex, fixed enumeration order
const std::vector<Wedge> &degree_masks(int p) {
  static const std::vector<Wedge> m0 = {kWEmpty};
  static const std::vector<Wedge> m1 = {kWx, kWy, kWD, kWE};
  static const std::vector<Wedge> m2 = {Wedge(kWx | kWy), Wedge(kWx | kWE), Wedge(kWy | kWE),
                                        Wedge(kWx | kWD), Wedge(kWy | kWD),
                                        Wedge(kWD | kWE)};
  static const std::vector<Wedge> m3 = {Wedge(kWx | kWy | kWE), Wedge(kWx | kWD | kWE),
                                        Wedge(kWy | kWD | kWE), Wedge(kWx | kWy | kWD)};
  static const std::vector<Wedge> m4 = {Wedge(kWx | kWy | kWD | kWE)};
  switch (p) {
    case 0: return m0;
    case 1: return m1;
    case 2: return m2;
    case 3: return m3;
    default: return m4;
  }
}

}  // namespace

XComplex::XComplex(ArrPtr arr, int window) : arr_(std::move(arr)), n_(window) {
  if (arr_->r() < 3)
    fail(Err::UnsupportedDegree,
         "cohomology dims need r >= 3; smaller arrangements have a different "
         "degree-zero subcomplex and are not supported here");
  if (n_ < 1) fail(Err::IndexOutOfRange, "window must be >= 1");
  enumerate();
}

void XComplex::enumerate() {
  const int r = arr_->r();
  // A_d = S_d k[E] + S_(d-r) D k[E] for the degrees that occur (d <= r+2)
  auto a_d = [&](int d) {
    std::vector<PbwKey> out;
    for (int n = 0; n <= n_; ++n)
      for (int a = 0; a <= d; ++a) out.push_back(pbw(unsigned(a), unsigned(d - a), 0, unsigned(n)));
    if (d >= r)
      for (int n = 0; n <= n_; ++n)
        for (int a = 0; a + r <= d; ++a)
          out.push_back(pbw(unsigned(a), unsigned(d - r - a), 1, unsigned(n)));
    return out;
  };

  for (int p = 0; p <= 4; ++p) {
    for (Wedge w : degree_masks(p)) {
      int d = wedge_degree(w, r);
      for (PbwKey m : a_d(d)) {
        index_[p].emplace(CochainKey{w, m}, int(basis_[p].size()));
        basis_[p].push_back(CochainKey{w, m});
      }
    }
  }
}

Cochain XComplex::basis_cochain(int p, int idx) const {
  Cochain c(arr_);
  c.add_term(basis_[p][idx].w, basis_[p][idx].m, rat(1));
  return c;
}

const SparseMat &XComplex::differential(int p) const {
  if (p < 0 || p > 3) fail(Err::DegreeMismatch, "differential index in 0..3");
  if (!diff_[p]) {
    SparseMat m(dim(p + 1), dim(p));
    for (int col = 0; col < dim(p); ++col) {
      Cochain img = hh_d(p, basis_cochain(p, col));
      for (const auto &[k, c] : img.terms()) {
        // the differential must stay inside the window and the component
        // shapes; anything else is a bug in the subcomplex description
        auto it = index_[p + 1].find(k);
        if (it == index_[p + 1].end())
          fail(Err::IndexOutOfRange, "subcomplex image leaves the enumerated basis");
        m.add(it->second, col, c);
      }
    }
    diff_[p] = std::move(m);
  }
  return *diff_[p];
}

std::array<long, 5> XComplex::cohomology_dims(bool parallel) const {
  // Kernels are computed inside the window. Images are intersected with the
  // window but may have preimages of higher E-degree (tau_1 lowers the
  // E-exponent by one, so hitting the top layer needs one extra power); a
  // slack of two windows is ample for the tau-shaped differentials here.
  XComplex big(arr_, n_ + 2);

  std::array<long, 5> h{};
  for (int p = 0; p <= 4; ++p) {
    long kernel = dim(p) - (p < 4 ? differential(p).rank(parallel) : 0);
    long image_cap = 0;
    if (p > 0) {
      const SparseMat &B = big.differential(p - 1);
      long r_im = B.rank(parallel);
      // [B | W]: image columns plus the coordinate subspace of the window
      SparseMat combo(big.dim(p), big.dim(p - 1) + dim(p));
      for (int col = 0; col < big.dim(p - 1); ++col) {
        Cochain img = hh_d(p - 1, big.basis_cochain(p - 1, col));
        for (const auto &[k, c] : img.terms()) combo.add(big.index_[p].at(k), col, c);
      }
      for (int wcol = 0; wcol < dim(p); ++wcol)
        combo.add(big.index_[p].at(basis_[p][std::size_t(wcol)]), big.dim(p - 1) + wcol,
                  rat(1));
      long r_sum = combo.rank(parallel);
      image_cap = r_im + dim(p) - r_sum;  // dim(image  intersect  window)
    }
    h[p] = kernel - image_cap;
  }
  return h;
}

std::vector<Rational> XComplex::coords(const Cochain &c, int p) const {
  std::vector<Rational> v(dim(p), Rational(0));
  for (const auto &[k, coef] : c.terms()) {
    auto it = index_[p].find(k);
    if (it == index_[p].end())
      fail(Err::IndexOutOfRange,
           "cochain not in the degree-zero subcomplex window: term " + pbw_str(k.m));
    v[it->second] = coef;
  }
  return v;
}

Cochain XComplex::from_coords(int p, const std::vector<Rational> &v) const {
  Cochain c(arr_);
  for (int i = 0; i < dim(p); ++i)
    if (v[std::size_t(i)] != 0) c.add_term(basis_[p][i].w, basis_[p][i].m, v[std::size_t(i)]);
  return c;
}

std::optional<Cochain> XComplex::coboundary_witness(const Cochain &c, bool parallel) const {
  if (c.is_zero()) return Cochain(arr_);
  int p = c.degree();
  if (p < 1 || p > 4) fail(Err::DegreeMismatch, "coboundary check needs degree 1..4");
  auto rhs = coords(c, p);
  auto sol = differential(p - 1).solve(rhs, parallel);
  if (!sol) return std::nullopt;
  return from_coords(p - 1, *sol);
}

DimsReport cohomology_dims_report(const ArrPtr &arr, int window, bool parallel) {
  DimsReport rep;
  rep.r = arr->r();
  rep.window = window;
  XComplex xc(arr, window);
  rep.dims = xc.cohomology_dims(parallel);
  XComplex xc2(arr, window + 2);
  rep.dims_next = xc2.cohomology_dims(parallel);
  rep.stable = rep.dims == rep.dims_next;
  long r = arr->r();
  rep.expected = {1, r + 2, 2 * r + 3, r + 2, 0};
  rep.matches_expected = rep.dims == rep.expected;
  return rep;
}

std::optional<Cochain> is_coboundary(const Cochain &c, int window, bool parallel) {
  XComplex xc(c.arrangement(), window);
  return xc.coboundary_witness(c, parallel);
}

}  // namespace darr
