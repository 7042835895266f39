#include "darr/arrangement.hpp"

#include <json.hpp>

#include "darr/error.hpp"
#include "darr/matrix.hpp"

namespace darr {

ArrPtr Arrangement::build(std::vector<LinearForm> forms) {
  if (forms.size() < 5)
    fail(Err::TooFewLines, "need at least 5 lines (r >= 3), got " +
                               std::to_string(forms.size()));
  for (std::size_t i = 0; i < forms.size(); ++i)
    for (std::size_t j = i + 1; j < forms.size(); ++j)
      if (proportional(forms[i], forms[j]))
        fail(Err::DuplicateLine,
             "forms " + forms[i].str() + " and " + forms[j].str() + " are proportional");

  std::size_t xi = forms.size();
  for (std::size_t i = 0; i < forms.size(); ++i)
    if (forms[i].b == 0) xi = i;
  if (xi == forms.size())
    fail(Err::MissingXLine,
         "no form proportional to x; precompose a linear change of coordinates");
  LinearForm xform = forms[xi];
  forms.erase(forms.begin() + long(xi));
  forms.insert(forms.begin(), xform);

  auto arr = std::shared_ptr<Arrangement>(new Arrangement());
  arr->forms_ = std::move(forms);
  arr->r_ = int(arr->forms_.size()) - 2;

  CommPoly fraw = CommPoly::constant(Rational(1));
  for (std::size_t i = 1; i < arr->forms_.size(); ++i) fraw = fraw * to_poly(arr->forms_[i]);
  Rational top = fraw.coeff(0, unsigned(arr->r_) + 1);
  // every non-x form has b != 0, so the y^(r+1) coefficient is nonzero
  arr->f_ = fraw * (Rational(1) / top);
  arr->q_ = arr->f_ * CommPoly::monomial(1, 0);
  arr->fbar_ =
      divide_exact(arr->f_ - CommPoly::monomial(0, unsigned(arr->r_) + 1), LinearForm(1, 0));
  arr->fx_ = partial_x(arr->f_);
  arr->fy_ = partial_y(arr->f_);
  for (const auto &[k, c] : arr->f_.terms())
    arr->fterms_.push_back({CommPoly::key_x(k), CommPoly::key_y(k), c});
  return arr;
}

ArrPtr Arrangement::example(int r) {
  std::vector<LinearForm> forms;
  forms.emplace_back(Rational(1), Rational(0));
  forms.emplace_back(Rational(0), Rational(1));
  for (int k = 1; k <= r; ++k) forms.emplace_back(Rational(1), rat(-k));
  return build(std::move(forms));
}

bool Arrangement::operator==(const Arrangement &o) const {
  if (forms_.size() != o.forms_.size()) return false;
  for (std::size_t i = 0; i < forms_.size(); ++i)
    if (forms_[i].a != o.forms_[i].a || forms_[i].b != o.forms_[i].b) return false;
  return true;
}

ArrPtr Arrangement::from_json(const std::string &text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception &e) {
    fail(Err::MalformedInput, std::string("arrangement json: ") + e.what());
  }
  if (!j.is_object() || !j.contains("forms") || !j["forms"].is_array())
    fail(Err::MalformedInput, "arrangement json: expected {\"forms\": [...]}");
  std::vector<LinearForm> forms;
  for (const auto &f : j["forms"]) {
    if (!f.is_array() || f.size() != 4 || !f[0].is_number_integer() ||
        !f[1].is_number_integer() || !f[2].is_number_integer() || !f[3].is_number_integer())
      fail(Err::MalformedInput,
           "arrangement json: each form is [a_num, a_den, b_num, b_den] with integers");
    long an = f[0].get<long>(), ad = f[1].get<long>();
    long bn = f[2].get<long>(), bd = f[3].get<long>();
    if (ad == 0 || bd == 0) fail(Err::MalformedInput, "arrangement json: zero denominator");
    forms.emplace_back(rat(an, ad), rat(bn, bd));
  }
  return build(std::move(forms));
}

std::string Arrangement::to_json() const {
  nlohmann::json j;
  j["forms"] = nlohmann::json::array();
  for (const auto &f : forms_) {
    j["forms"].push_back({f.a.get_num().get_si(), f.a.get_den().get_si(),
                          f.b.get_num().get_si(), f.b.get_den().get_si()});
  }
  return j.dump();
}

bool quotient_basis_check(const Arrangement &arr) {
  int r = arr.r();
  SparseMat m(r + 1, r + 1);  // rows: quotients, cols: monomial basis of S_r
  for (int i = 1; i <= r + 1; ++i) {
    CommPoly q = divide_exact(arr.F(), arr.forms()[i]);
    for (const auto &[k, c] : q.terms())
      m.add(i - 1, int(CommPoly::key_x(k)), c);
  }
  return m.rank() == r + 1;
}

}  // namespace darr
