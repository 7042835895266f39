#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace darr {

// Wedge monomials over the ordered letters x < y < D < E, stored as bit masks
// (x = 1, y = 2, D = 4, E = 8). Sign bookkeeping for out-of-order products is
// explicit in wedge_insert / wedge_concat.
using Wedge = std::uint8_t;

constexpr Wedge kWx = 1, kWy = 2, kWD = 4, kWE = 8;
constexpr Wedge kWEmpty = 0;

inline int wedge_len(Wedge w) { return __builtin_popcount(unsigned(w)); }
inline bool wedge_has(Wedge w, Wedge letter) { return (w & letter) != 0; }
inline Wedge wedge_complement(Wedge w) { return Wedge(~unsigned(w) & 0xfu); }

// letters of w in canonical order
std::vector<Wedge> wedge_letters(Wedge w);
// all masks of a given length, in increasing mask order
std::vector<Wedge> wedge_basis(int len);

// letter ^ w -> (sign, mask); sign 0 when the letter repeats
std::pair<int, Wedge> wedge_insert(Wedge letter, Wedge w);
// u ^ w with u entirely before w in the product order
std::pair<int, Wedge> wedge_concat(Wedge u, Wedge w);

// internal degree of the wedge label with x, y in degree 1, D in degree r,
// E in degree 0 (dual letters carry the negatives)
int wedge_degree(Wedge w, int r);

std::string wedge_str(Wedge w, bool dual);

}  // namespace darr
