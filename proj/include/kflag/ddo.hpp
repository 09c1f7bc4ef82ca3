#pragma once

#include "kflag/laurent.hpp"
#include "kflag/perm.hpp"

namespace kflag {

/// Divided difference d_i f = (f - s_i f) / (x_i - x_{i+1}), 1 <= i < n.
LaurentPoly delta(int i, const LaurentPoly& f);

/// Isobaric divided difference pi_i f = d_i(x_i f).
LaurentPoly pi(int i, const LaurentPoly& f);

/// pi_{i1} pi_{i2} ... pi_{il} f along `word`; the rightmost letter acts first.
LaurentPoly pi_along(std::span<const int> word, const LaurentPoly& f);

/// pi_w f along the canonical reduced word of w.
LaurentPoly pi_word(const Permutation& w, const LaurentPoly& f);

} // namespace kflag
