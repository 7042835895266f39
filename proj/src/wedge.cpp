#include "darr/wedge.hpp"

namespace darr {

std::vector<Wedge> wedge_letters(Wedge w) {
  std::vector<Wedge> out;
  for (Wedge bit : {kWx, kWy, kWD, kWE})
    if (w & bit) out.push_back(bit);
  return out;
}

std::vector<Wedge> wedge_basis(int len) {
  std::vector<Wedge> out;
  for (unsigned m = 0; m < 16; ++m)
    if (wedge_len(Wedge(m)) == len) out.push_back(Wedge(m));
  return out;
}

std::pair<int, Wedge> wedge_insert(Wedge letter, Wedge w) {
  if (w & letter) return {0, kWEmpty};
  // count letters of w strictly below the inserted one
  int below = wedge_len(Wedge(w & (letter - 1)));
  int sign = (below % 2 == 0) ? 1 : -1;
  return {sign, Wedge(w | letter)};
}

std::pair<int, Wedge> wedge_concat(Wedge u, Wedge w) {
  if (u & w) return {0, kWEmpty};
  int sign = 1;
  auto letters = wedge_letters(u);
  Wedge acc = w;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    auto [s, nw] = wedge_insert(*it, acc);
    sign *= s;
    acc = nw;
  }
  return {sign, acc};
}

int wedge_degree(Wedge w, int r) {
  int d = 0;
  if (w & kWx) d += 1;
  if (w & kWy) d += 1;
  if (w & kWD) d += r;
  return d;
}

std::string wedge_str(Wedge w, bool dual) {
  if (w == kWEmpty) return "1";
  std::string out;
  for (Wedge bit : wedge_letters(w)) {
    if (!out.empty()) out += "^";
    switch (bit) {
      case kWx: out += dual ? "x'" : "x"; break;
      case kWy: out += dual ? "y'" : "y"; break;
      case kWD: out += dual ? "D'" : "D"; break;
      default: out += dual ? "E'" : "E"; break;
    }
  }
  return out;
}

}  // namespace darr
